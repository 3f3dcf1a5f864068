#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "tbraid/word.hpp"

namespace tbraid {

enum class SimpleKind { identity, proper, delta };
enum class Side { prefix, suffix };
enum class ComplementSide { right, left };

// A permutation braid, i.e. an element s with 1 <= s <= Delta in the prefix
// order.  It is determined by its permutation, which is all that is stored.
class SimpleElement {
 public:
  using Array = std::array<std::uint8_t, kMaxStrands>;

  static SimpleElement identity(StrandCount n);
  static SimpleElement delta(StrandCount n);
  // sigma_i, 1 <= i < n.
  static SimpleElement atom(StrandCount n, int i);
  static SimpleElement from_permutation(Permutation const& p);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] StrandCount strands() const { return StrandCount(n_); }
  [[nodiscard]] Permutation permutation() const;
  [[nodiscard]] SimpleKind kind() const noexcept;
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] bool is_delta() const noexcept;
  // Number of crossings, i.e. the word length of any positive word for s.
  [[nodiscard]] int length() const noexcept;

  // Atoms sigma_i with sigma_i <= s (starting set) and s >=_R sigma_i
  // (finishing set).
  [[nodiscard]] bool starts_with(int i) const noexcept;
  [[nodiscard]] bool ends_with(int i) const noexcept;

  // Permutation product without any simplicity check; callers use it only
  // when the lengths are known to add up.
  [[nodiscard]] SimpleElement times(SimpleElement const& other) const noexcept;
  // The permutation s^{-1} t (simple whenever s <= t).
  [[nodiscard]] SimpleElement left_quotient(SimpleElement const& t) const noexcept;
  [[nodiscard]] SimpleElement inverse_permutation() const noexcept;

  // Position-indexed data, 0-based: at(p) is the strand ending at p.
  [[nodiscard]] int at(int p) const noexcept { return perm_[p]; }

  auto operator<=>(SimpleElement const&) const = default;

 private:
  SimpleElement(int n, Array const& perm) : n_(n), perm_(perm) {}
  static Array identity_array(int n) noexcept;

  int n_;
  Array perm_;
};

SimpleElement delta(StrandCount n);
SimpleElement simple_from_word(BraidWord const& w);
BraidWord word_of_simple(SimpleElement const& s);

bool divides_prefix(SimpleElement const& s, SimpleElement const& t);
bool divides_suffix(SimpleElement const& s, SimpleElement const& t);

SimpleElement simple_meet(SimpleElement const& s, SimpleElement const& t,
                          Side side = Side::prefix);
SimpleElement simple_join(SimpleElement const& s, SimpleElement const& t,
                          Side side = Side::prefix);

// right: the t with s t = Delta.  left: Delta s^{-1}.
SimpleElement complement(SimpleElement const& s,
                         ComplementSide side = ComplementSide::right);
SimpleElement tau_simple(SimpleElement const& s);
// tau^k, using tau^2 = id.
SimpleElement tau_power(SimpleElement const& s, int k);
// The simple braid of the reversed word; its permutation is the inverse.
SimpleElement reverse_simple(SimpleElement const& s);

// All n! simples, lexicographic on permutation images.
std::vector<SimpleElement> all_simples(StrandCount n);

}  // namespace tbraid
