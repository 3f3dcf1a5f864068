#include "tbraid/kernels.hpp"

#include <array>
#include <mutex>
#include <optional>

#include "tbraid/twisted.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tbraid {

int num_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_num() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace kernels {

std::vector<SimpleElement> const& simples_of(StrandCount n) {
  static std::array<std::once_flag, kMaxStrands + 1> flags;
  static std::array<std::vector<SimpleElement>, kMaxStrands + 1> cache;
  std::call_once(flags[n.value()],
                 [&] { cache[n.value()] = all_simples(n); });
  return cache[n.value()];
}

std::vector<CanonicalBraid> simple_conjugates_serial(
    CanonicalBraid const& y, std::vector<SimpleElement> const& simples) {
  std::vector<CanonicalBraid> out;
  out.reserve(simples.size());
  for (auto const& s : simples) {
    CanonicalBraid z = y;
    z.divide_left(s);
    z.multiply_right(s);
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<CanonicalBraid> simple_conjugates_parallel(
    CanonicalBraid const& y, std::vector<SimpleElement> const& simples) {
  std::vector<CanonicalBraid> out(simples.size(), CanonicalBraid(y.strands()));
  auto const count = static_cast<long>(simples.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    CanonicalBraid z = y;
    z.divide_left(simples[i]);
    z.multiply_right(simples[i]);
    out[i] = std::move(z);
  }
  return out;
}

namespace {

// All hits for one value of a, in increasing b order.
void neighbors_for_a(CanonicalBraid const& z, int max_length,
                     std::vector<SimpleElement> const& simples,
                     std::size_t ia, bool prune_b, NeighborMap& out) {
  SimpleElement const& a = simples[ia];
  CanonicalBraid y = z;
  y.multiply_left(reverse_simple(a));
  y.multiply_right(a);
  SimpleElement head = y.simple_prefix();
  for (std::size_t ib = 0; ib < simples.size(); ++ib) {
    SimpleElement const& b = simples[ib];
    SimpleElement rb = reverse_simple(b);
    if (prune_b && !divides_prefix(rb, head)) {
      continue;
    }
    CanonicalBraid w = y;
    w.divide_left(rb);
    if (!w.is_positive()) {
      continue;
    }
    w.divide_right(b);
    if (!w.is_positive() || w.canonical_length() > max_length ||
        !is_palindromic_free(w)) {
      continue;
    }
    out.try_emplace(std::move(w), TwistedHit{ia, ib});
  }
}

void merge_hits(NeighborMap& into, NeighborMap const& from) {
  for (auto const& [w, hit] : from) {
    auto [it, inserted] = into.try_emplace(w, hit);
    if (!inserted && (hit.a_index < it->second.a_index ||
                      (hit.a_index == it->second.a_index &&
                       hit.b_index < it->second.b_index))) {
      it->second = hit;
    }
  }
}

}  // namespace

NeighborMap twisted_neighbors_serial(CanonicalBraid const& z, int max_length,
                                     std::vector<SimpleElement> const& simples,
                                     bool prune_b) {
  NeighborMap out;
  for (std::size_t ia = 0; ia < simples.size(); ++ia) {
    neighbors_for_a(z, max_length, simples, ia, prune_b, out);
  }
  return out;
}

NeighborMap twisted_neighbors_parallel(
    CanonicalBraid const& z, int max_length,
    std::vector<SimpleElement> const& simples, bool prune_b) {
  std::vector<NeighborMap> per_a(simples.size());
  auto const count = static_cast<long>(simples.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long ia = 0; ia < count; ++ia) {
    neighbors_for_a(z, max_length, simples, static_cast<std::size_t>(ia),
                    prune_b, per_a[ia]);
  }
  NeighborMap out;
  for (auto const& part : per_a) {
    merge_hits(out, part);
  }
  return out;
}

}  // namespace kernels
}  // namespace tbraid
