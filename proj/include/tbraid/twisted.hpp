#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>

#include "tbraid/normal_form.hpp"
#include "tbraid/parallel.hpp"
#include "tbraid/word.hpp"

namespace tbraid {

// Certifies an epsilon-twisted conjugacy: rev(word) * u * word == v.
struct TwistedWitness {
  BraidWord word;
};

// Positive palindromic-free epsilon-twisted conjugates of minimal canonical
// length.  The witnesses twist the defining input onto each element.
struct MpfSet {
  int length = 0;
  std::map<CanonicalBraid, TwistedWitness> elements;

  [[nodiscard]] bool contains(CanonicalBraid const& x) const {
    return elements.contains(x);
  }
  bool operator==(MpfSet const& other) const;
};

// The word rev(w) u w.
BraidWord twisted_conjugate(BraidWord const& u, BraidWord const& w);

// No i with sigma_i^{-1} x sigma_i^{-1} positive.  NotPositive for
// non-positive input.
bool is_palindromic_free(CanonicalBraid const& x);
bool is_palindromic_free(BraidWord const& x);

// A positive palindromic-free y with rev(w) x w == y.  Twists by Delta^p
// first, then strips sigma_i ... sigma_i at the lowest index available.
std::pair<CanonicalBraid, TwistedWitness> reduce_to_palindromic_free(
    BraidWord const& x);

// All positive palindromic-free w with l(w) <= max_length related to z by
// rev(a) z a = rev(b) w b with a, b simple; the witness is a b^{-1}
// (rev(a b^{-1}) z a b^{-1} == w).
std::map<CanonicalBraid, TwistedWitness> simple_twisted_neighbors(
    CanonicalBraid const& z, int max_length,
    Execution exec = Execution::serial);

// The same set computed by the full double loop over all simple pairs.
std::map<CanonicalBraid, TwistedWitness> simple_twisted_neighbors_exhaustive(
    CanonicalBraid const& z, int max_length);

// Incremental construction of MPF(x).  Each step processes one element of
// the current set; if a neighbour of smaller canonical length shows up, the
// whole construction restarts from it.
class MpfBuilder {
 public:
  explicit MpfBuilder(BraidWord const& x, Execution exec = Execution::serial);

  [[nodiscard]] bool done() const noexcept { return queue_.empty(); }
  void step();
  void run();

  [[nodiscard]] int length() const noexcept { return length_; }
  [[nodiscard]] std::map<CanonicalBraid, TwistedWitness> const& elements()
      const noexcept {
    return elements_;
  }
  [[nodiscard]] int restarts() const noexcept { return restarts_; }
  [[nodiscard]] MpfSet result() const;

 private:
  void reset_to(CanonicalBraid y, BraidWord witness);

  StrandCount n_;
  Execution exec_;
  int length_ = 0;
  int restarts_ = 0;
  std::map<CanonicalBraid, TwistedWitness> elements_;
  std::deque<CanonicalBraid> queue_;
};

MpfSet compute_mpf(BraidWord const& x, Execution exec = Execution::serial);

// Decides u ~_eps v.  Both MPF constructions advance in lockstep and stop at
// the first common element.
std::optional<TwistedWitness> eps_twisted_decide(
    BraidWord const& u, BraidWord const& v, Execution exec = Execution::serial);

}  // namespace tbraid
