#pragma once

#include <compare>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tbraid/simple.hpp"
#include "tbraid/word.hpp"

namespace tbraid {

// Left normal form Delta^p x_1 ... x_r: every x_i proper and every pair
// x_i x_{i+1} left weighted.  Two braids are equal iff their canonical
// forms compare equal.
class CanonicalBraid {
 public:
  explicit CanonicalBraid(StrandCount n) : n_(n.value()) {}

  static CanonicalBraid from_word(BraidWord const& w);
  static CanonicalBraid from_simple(SimpleElement const& s);
  static CanonicalBraid delta_power(StrandCount n, int p);
  // Normalizes Delta^p s_1 ... s_k for arbitrary simples s_i.
  static CanonicalBraid from_factors(StrandCount n, int p,
                                     std::span<SimpleElement const> factors);

  [[nodiscard]] StrandCount strands() const { return StrandCount(n_); }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int inf() const noexcept { return inf_; }
  [[nodiscard]] int sup() const noexcept {
    return inf_ + static_cast<int>(factors_.size());
  }
  [[nodiscard]] int canonical_length() const noexcept {
    return static_cast<int>(factors_.size());
  }
  [[nodiscard]] std::span<SimpleElement const> factors() const noexcept {
    return factors_;
  }
  [[nodiscard]] bool is_positive() const noexcept { return inf_ >= 0; }
  [[nodiscard]] bool is_identity() const noexcept {
    return inf_ == 0 && factors_.empty();
  }
  // x ^ Delta for positive x.
  [[nodiscard]] SimpleElement simple_prefix() const;
  // The maximal simple suffix of a positive x.
  [[nodiscard]] SimpleElement simple_suffix() const;
  // Delta, ..., Delta (inf times) followed by the proper factors.
  [[nodiscard]] std::vector<SimpleElement> positive_factors() const;

  // In-place products with simple elements and their inverses.
  void multiply_right(SimpleElement const& s);
  void multiply_left(SimpleElement const& s);
  void divide_right(SimpleElement const& s);  // x s^{-1}
  void divide_left(SimpleElement const& s);   // s^{-1} x
  void multiply_delta_power_right(int q);

  [[nodiscard]] CanonicalBraid inverse() const;
  [[nodiscard]] BraidWord to_word() const;

  friend CanonicalBraid operator*(CanonicalBraid const& a,
                                  CanonicalBraid const& b);

  auto operator<=>(CanonicalBraid const&) const = default;

 private:
  void absorb_ends();

  int n_;
  int inf_ = 0;
  std::vector<SimpleElement> factors_;
};

// Right normal form x'_1 ... x'_r Delta^p.
struct RightNormalForm {
  int sup_power = 0;
  std::vector<SimpleElement> factors;

  bool operator==(RightNormalForm const&) const = default;
};

// x = u^{-1} v with u, v positive and u ^ v = 1.
struct MixedForm {
  CanonicalBraid neg;
  CanonicalBraid pos;
};

struct InfSupLen {
  int inf;
  int sup;
  int len;
  bool operator==(InfSupLen const&) const = default;
};

// Left weighting of a pair of simples: returns (a t, t^{-1} b) with
// t = d(a) ^ b.
std::pair<SimpleElement, SimpleElement> left_weight(SimpleElement const& a,
                                                    SimpleElement const& b);
bool is_left_weighted(SimpleElement const& a, SimpleElement const& b);
bool is_right_weighted(SimpleElement const& a, SimpleElement const& b);

CanonicalBraid left_normal_form(BraidWord const& w);
RightNormalForm right_normal_form(BraidWord const& w);
RightNormalForm right_normal_form(CanonicalBraid const& x);
MixedForm mixed_normal_form(BraidWord const& w);
MixedForm mixed_normal_form(CanonicalBraid const& x);
InfSupLen inf_sup_len(BraidWord const& w);

bool is_positive(BraidWord const& w);
bool equal(BraidWord const& a, BraidWord const& b);

// The three (anti-)automorphisms on canonical forms.
CanonicalBraid reverse(CanonicalBraid const& x);
CanonicalBraid eps(CanonicalBraid const& x);
CanonicalBraid tau(CanonicalBraid const& x);

// a <= b in the prefix order (a^{-1} b positive), for arbitrary braids.
bool prefix_le(CanonicalBraid const& a, CanonicalBraid const& b);
// a is a suffix of b (b a^{-1} positive).
bool suffix_le(CanonicalBraid const& a, CanonicalBraid const& b);

// Lattice operations on positive braids; NotPositive otherwise.
CanonicalBraid braid_gcd(CanonicalBraid const& a, CanonicalBraid const& b,
                         Side side = Side::prefix);
CanonicalBraid braid_lcm(CanonicalBraid const& a, CanonicalBraid const& b,
                         Side side = Side::prefix);
CanonicalBraid braid_gcd(BraidWord const& a, BraidWord const& b,
                         Side side = Side::prefix);
CanonicalBraid braid_lcm(BraidWord const& a, BraidWord const& b,
                         Side side = Side::prefix);

// Concatenation of the canonical words of the factors of a positive braid,
// Delta factors first.
BraidWord positive_word(CanonicalBraid const& x);

}  // namespace tbraid
