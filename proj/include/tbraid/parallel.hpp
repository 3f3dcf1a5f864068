#pragma once

// Conditional OpenMP support.  Every parallel kernel has a serial twin that
// is the reference for tests; both must produce identical results.

namespace tbraid {

enum class Execution { serial, parallel };

// omp_get_max_threads(), or 1 without OpenMP.
int num_threads();

// omp_get_thread_num(), or 0 without OpenMP.
int thread_num();

bool openmp_enabled();

}  // namespace tbraid
