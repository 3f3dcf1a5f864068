#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbraid/errors.hpp"

namespace tbraid {

// Upper bound on the number of strands; simple elements are stored in
// fixed-size arrays of this length.
inline constexpr int kMaxStrands = 16;

class StrandCount {
 public:
  explicit StrandCount(int n);

  [[nodiscard]] int value() const noexcept { return n_; }
  // Number of Artin generators, n - 1.
  [[nodiscard]] int generators() const noexcept { return n_ - 1; }

  auto operator<=>(StrandCount const&) const = default;

 private:
  int n_;
};

// A permutation of {1, ..., n}, stored by its images.
//
// Braid words act by swapping entries: starting from [1, 2, ..., n], the
// letter sigma_i exchanges the entries at positions i and i + 1.  So
// images()[p - 1] is the strand that ends at position p.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(images_.size());
  }
  [[nodiscard]] std::vector<int> const& images() const noexcept {
    return images_;
  }
  // Image of p, 1-based.
  [[nodiscard]] int operator()(int p) const { return images_[p - 1]; }

  // (this * other)(p) = this(other(p)); matches the word action, i.e.
  // perm(ab) = perm(a) * perm(b).
  [[nodiscard]] Permutation operator*(Permutation const& other) const;
  [[nodiscard]] Permutation inverse() const;
  // Cycle lengths sorted in decreasing order.
  [[nodiscard]] std::vector<int> cycle_type() const;

  auto operator<=>(Permutation const&) const = default;

 private:
  std::vector<int> images_;
};

// A word in sigma_1^{+-1}, ..., sigma_{n-1}^{+-1}.  Letter k > 0 stands
// for sigma_k, k < 0 for sigma_{-k}^{-1}.  Words are never simplified
// implicitly.
class BraidWord {
 public:
  explicit BraidWord(StrandCount n) : n_(n) {}
  BraidWord(StrandCount n, std::vector<int> letters);
  BraidWord(int n, std::vector<int> letters)
      : BraidWord(StrandCount(n), std::move(letters)) {}

  [[nodiscard]] StrandCount strands() const noexcept { return n_; }
  [[nodiscard]] int n() const noexcept { return n_.value(); }
  [[nodiscard]] std::vector<int> const& letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] bool is_positive_word() const noexcept;

  BraidWord& operator*=(BraidWord const& rhs);
  friend BraidWord operator*(BraidWord lhs, BraidWord const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(BraidWord const&) const = default;

 private:
  StrandCount n_;
  std::vector<int> letters_;
};

// Nonzero integers separated by whitespace or commas.  Throws ParseError.
std::vector<int> parse_letters(std::string_view text);

// Parses the whitespace separated word grammar; the empty string is the
// identity.  Throws ParseError or InvalidLetter.
BraidWord parse_word(StrandCount n, std::string_view text);
BraidWord parse_word(int n, std::string_view text);
std::string to_string(BraidWord const& w);

BraidWord concat(BraidWord const& a, BraidWord const& b);
BraidWord invert_word(BraidWord const& x);
BraidWord reverse_word(BraidWord const& x);
BraidWord eps_word(BraidWord const& x);

// Cancels adjacent x x^{-1} pairs.  Does not change the braid.
BraidWord free_reduce(BraidWord const& x);

BraidWord power(BraidWord const& x, int k);

int exponent_sum(BraidWord const& x);
Permutation underlying_permutation(BraidWord const& x);

}  // namespace tbraid
