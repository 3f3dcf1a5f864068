#include "tbraid/twisted.hpp"

#include <algorithm>
#include <stdexcept>

#include "tbraid/kernels.hpp"

namespace tbraid {

bool MpfSet::operator==(MpfSet const& other) const {
  if (length != other.length || elements.size() != other.elements.size()) {
    return false;
  }
  return std::equal(elements.begin(), elements.end(), other.elements.begin(),
                    [](auto const& a, auto const& b) { return a.first == b.first; });
}

BraidWord twisted_conjugate(BraidWord const& u, BraidWord const& w) {
  return reverse_word(w) * u * w;
}

namespace {

// sigma_i^{-1} x sigma_i^{-1} when positive.
std::optional<CanonicalBraid> strip_pair(CanonicalBraid const& x, int i) {
  if (!x.simple_prefix().starts_with(i)) {
    return std::nullopt;
  }
  SimpleElement atom = SimpleElement::atom(x.strands(), i);
  CanonicalBraid y = x;
  y.divide_left(atom);
  y.divide_right(atom);
  if (!y.is_positive()) {
    return std::nullopt;
  }
  return y;
}

BraidWord compose_witness(BraidWord const& first, BraidWord const& second) {
  return free_reduce(first * second);
}

}  // namespace

bool is_palindromic_free(CanonicalBraid const& x) {
  if (!x.is_positive()) {
    throw NotPositive("is_palindromic_free: braid is not positive");
  }
  for (int i = 1; i < x.n(); ++i) {
    if (strip_pair(x, i)) {
      return false;
    }
  }
  return true;
}

bool is_palindromic_free(BraidWord const& x) {
  return is_palindromic_free(CanonicalBraid::from_word(x));
}

std::pair<CanonicalBraid, TwistedWitness> reduce_to_palindromic_free(
    BraidWord const& x) {
  CanonicalBraid y = CanonicalBraid::from_word(x);
  BraidWord witness(x.strands());
  if (y.inf() < 0) {
    // rev(Delta) = Delta, and inf(Delta^p y Delta^p) = inf(y) + 2p.
    int p = (-y.inf() + 1) / 2;
    CanonicalBraid dp = CanonicalBraid::delta_power(x.strands(), p);
    y = dp * y * dp;
    witness = power(word_of_simple(delta(x.strands())), p);
  }
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i = 1; i < x.n(); ++i) {
      if (auto next = strip_pair(y, i)) {
        y = std::move(*next);
        witness *= BraidWord(x.strands(), {-i});
        stripped = true;
        break;
      }
    }
  }
  return {std::move(y), TwistedWitness{free_reduce(witness)}};
}

namespace {

std::map<CanonicalBraid, TwistedWitness> to_witnesses(
    kernels::NeighborMap const& hits,
    std::vector<SimpleElement> const& simples) {
  std::map<CanonicalBraid, TwistedWitness> out;
  for (auto const& [w, hit] : hits) {
    BraidWord word = word_of_simple(simples[hit.a_index]) *
                     invert_word(word_of_simple(simples[hit.b_index]));
    out.emplace(w, TwistedWitness{free_reduce(word)});
  }
  return out;
}

}  // namespace

std::map<CanonicalBraid, TwistedWitness> simple_twisted_neighbors(
    CanonicalBraid const& z, int max_length, Execution exec) {
  if (!z.is_positive()) {
    throw NotPositive("simple_twisted_neighbors: z must be positive");
  }
  auto const& simples = kernels::simples_of(z.strands());
  auto hits = exec == Execution::parallel
                  ? kernels::twisted_neighbors_parallel(z, max_length, simples)
                  : kernels::twisted_neighbors_serial(z, max_length, simples);
  return to_witnesses(hits, simples);
}

std::map<CanonicalBraid, TwistedWitness> simple_twisted_neighbors_exhaustive(
    CanonicalBraid const& z, int max_length) {
  auto const& simples = kernels::simples_of(z.strands());
  return to_witnesses(
      kernels::twisted_neighbors_serial(z, max_length, simples, false),
      simples);
}

MpfBuilder::MpfBuilder(BraidWord const& x, Execution exec)
    : n_(x.strands()), exec_(exec) {
  auto [y, w] = reduce_to_palindromic_free(x);
  reset_to(std::move(y), std::move(w.word));
  restarts_ = 0;
}

void MpfBuilder::reset_to(CanonicalBraid y, BraidWord witness) {
  length_ = y.canonical_length();
  elements_.clear();
  queue_.clear();
  elements_.emplace(y, TwistedWitness{std::move(witness)});
  // A positive palindromic-free braid of length 0 is the identity, which is
  // the whole set.
  if (length_ > 0) {
    queue_.push_back(std::move(y));
  }
  ++restarts_;
}

void MpfBuilder::step() {
  if (queue_.empty()) {
    return;
  }
  CanonicalBraid z = std::move(queue_.front());
  queue_.pop_front();
  BraidWord const wz = elements_.at(z).word;
  auto neighbors = simple_twisted_neighbors(z, length_, exec_);

  auto shorter = std::min_element(
      neighbors.begin(), neighbors.end(), [](auto const& a, auto const& b) {
        return a.first.canonical_length() < b.first.canonical_length();
      });
  if (shorter != neighbors.end() &&
      shorter->first.canonical_length() < length_) {
    reset_to(shorter->first, compose_witness(wz, shorter->second.word));
    return;
  }
  for (auto& [w, local] : neighbors) {
    if (elements_.contains(w)) {
      continue;
    }
    elements_.emplace(w, TwistedWitness{compose_witness(wz, local.word)});
    queue_.push_back(w);
  }
}

void MpfBuilder::run() {
  while (!done()) {
    step();
  }
}

MpfSet MpfBuilder::result() const {
  MpfSet out;
  out.length = length_;
  out.elements = elements_;
  return out;
}

MpfSet compute_mpf(BraidWord const& x, Execution exec) {
  MpfBuilder b(x, exec);
  b.run();
  return b.result();
}

namespace {

std::optional<CanonicalBraid> common_element(MpfBuilder const& a,
                                             MpfBuilder const& b) {
  auto const& small = a.elements().size() <= b.elements().size()
                          ? a.elements()
                          : b.elements();
  auto const& large = &small == &a.elements() ? b.elements() : a.elements();
  for (auto const& [z, w] : small) {
    if (large.contains(z)) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TwistedWitness> eps_twisted_decide(BraidWord const& u,
                                                 BraidWord const& v,
                                                 Execution exec) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("eps_twisted_decide: strand mismatch");
  }
  // rev(w) u w changes the exponent sum by 2 e(w) and the permutation by
  // conjugation.
  if ((exponent_sum(u) - exponent_sum(v)) % 2 != 0 ||
      underlying_permutation(u).cycle_type() !=
          underlying_permutation(v).cycle_type()) {
    return std::nullopt;
  }
  MpfBuilder bu(u, exec);
  MpfBuilder bv(v, exec);
  std::optional<CanonicalBraid> z = common_element(bu, bv);
  while (!z && !(bu.done() && bv.done())) {
    bu.step();
    z = common_element(bu, bv);
    if (z) {
      break;
    }
    bv.step();
    z = common_element(bu, bv);
  }
  if (!z) {
    return std::nullopt;
  }
  // rev(Wu) u Wu = z = rev(Wv) v Wv
  BraidWord w = free_reduce(bu.elements().at(*z).word *
                            invert_word(bv.elements().at(*z).word));
  if (CanonicalBraid::from_word(twisted_conjugate(u, w)) !=
      CanonicalBraid::from_word(v)) {
    throw std::logic_error("eps_twisted_decide: witness failed to verify");
  }
  return TwistedWitness{std::move(w)};
}

}  // namespace tbraid
