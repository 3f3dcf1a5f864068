#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tbraid/normal_form.hpp"
#include "tbraid/parallel.hpp"
#include "tbraid/simple.hpp"

// Data-parallel inner loops of the closure algorithms.  The loop runs over
// the n! simple elements; each iteration is independent and the results are
// merged in simple-enumeration order, so the serial and parallel variants
// return identical containers.

namespace tbraid::kernels {

// s^{-1} y s for every simple s, in the order of `simples`.
std::vector<CanonicalBraid> simple_conjugates_serial(
    CanonicalBraid const& y, std::vector<SimpleElement> const& simples);
std::vector<CanonicalBraid> simple_conjugates_parallel(
    CanonicalBraid const& y, std::vector<SimpleElement> const& simples);

// A neighbour found by a simple twisted conjugation rev(a) z a = rev(b) w b,
// keyed by w; (a_index, b_index) locate a and b in the simple list.  For a
// given w, the lexicographically smallest index pair is kept.
struct TwistedHit {
  std::size_t a_index;
  std::size_t b_index;
};
using NeighborMap = std::map<CanonicalBraid, TwistedHit>;

// Positive palindromic-free w with canonical length <= max_length that are
// simply twisted conjugate to z.  With prune_b, b ranges only over the
// simples with rev(b) <= (rev(a) z a) ^ Delta; otherwise over all of them.
NeighborMap twisted_neighbors_serial(CanonicalBraid const& z, int max_length,
                                     std::vector<SimpleElement> const& simples,
                                     bool prune_b = true);
NeighborMap twisted_neighbors_parallel(
    CanonicalBraid const& z, int max_length,
    std::vector<SimpleElement> const& simples, bool prune_b = true);

// Cached simple enumeration for a strand count.
std::vector<SimpleElement> const& simples_of(StrandCount n);

}  // namespace tbraid::kernels
