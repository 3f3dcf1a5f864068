#include "tbraid/normal_form.hpp"

#include <algorithm>

namespace tbraid {

std::pair<SimpleElement, SimpleElement> left_weight(SimpleElement const& a,
                                                    SimpleElement const& b) {
  SimpleElement t = simple_meet(complement(a), b);
  if (t.is_identity()) {
    return {a, b};
  }
  return {a.times(t), t.left_quotient(b)};
}

bool is_left_weighted(SimpleElement const& a, SimpleElement const& b) {
  return simple_meet(complement(a), b).is_identity();
}

bool is_right_weighted(SimpleElement const& a, SimpleElement const& b) {
  return simple_meet(a, complement(b, ComplementSide::left), Side::suffix)
      .is_identity();
}

CanonicalBraid CanonicalBraid::from_simple(SimpleElement const& s) {
  CanonicalBraid x(s.strands());
  x.multiply_right(s);
  return x;
}

CanonicalBraid CanonicalBraid::delta_power(StrandCount n, int p) {
  CanonicalBraid x(n);
  x.inf_ = p;
  return x;
}

CanonicalBraid CanonicalBraid::from_word(BraidWord const& w) {
  CanonicalBraid x(w.strands());
  for (int l : w.letters()) {
    SimpleElement atom = SimpleElement::atom(w.strands(), l > 0 ? l : -l);
    if (l > 0) {
      x.multiply_right(atom);
    } else {
      x.divide_right(atom);
    }
  }
  return x;
}

CanonicalBraid CanonicalBraid::from_factors(
    StrandCount n, int p, std::span<SimpleElement const> factors) {
  CanonicalBraid x = delta_power(n, p);
  for (auto const& s : factors) {
    if (s.n() != n.value()) {
      throw StrandMismatch("from_factors: factor on wrong strand count");
    }
    x.multiply_right(s);
  }
  return x;
}

SimpleElement CanonicalBraid::simple_prefix() const {
  if (inf_ < 0) {
    throw NotPositive("simple_prefix of a non-positive braid");
  }
  if (inf_ > 0) {
    return SimpleElement::delta(strands());
  }
  if (factors_.empty()) {
    return SimpleElement::identity(strands());
  }
  return factors_.front();
}

SimpleElement CanonicalBraid::simple_suffix() const {
  return reverse_simple(reverse(*this).simple_prefix());
}

std::vector<SimpleElement> CanonicalBraid::positive_factors() const {
  if (inf_ < 0) {
    throw NotPositive("positive_factors of a non-positive braid");
  }
  std::vector<SimpleElement> out(static_cast<std::size_t>(inf_),
                                 SimpleElement::delta(strands()));
  out.insert(out.end(), factors_.begin(), factors_.end());
  return out;
}

void CanonicalBraid::absorb_ends() {
  auto first = std::find_if(factors_.begin(), factors_.end(),
                            [](SimpleElement const& s) { return !s.is_delta(); });
  inf_ += static_cast<int>(first - factors_.begin());
  factors_.erase(factors_.begin(), first);
  while (!factors_.empty() && factors_.back().is_identity()) {
    factors_.pop_back();
  }
}

void CanonicalBraid::multiply_right(SimpleElement const& s) {
  if (s.n() != n_) {
    throw StrandMismatch("multiply_right: strand mismatch");
  }
  if (s.is_identity()) {
    return;
  }
  if (s.is_delta()) {
    multiply_delta_power_right(1);
    return;
  }
  factors_.push_back(s);
  for (std::size_t i = factors_.size() - 1; i > 0; --i) {
    auto [a, b] = left_weight(factors_[i - 1], factors_[i]);
    if (a == factors_[i - 1]) {
      break;
    }
    factors_[i - 1] = a;
    factors_[i] = b;
  }
  absorb_ends();
}

void CanonicalBraid::multiply_left(SimpleElement const& s) {
  if (s.n() != n_) {
    throw StrandMismatch("multiply_left: strand mismatch");
  }
  if (s.is_identity()) {
    return;
  }
  if (s.is_delta()) {
    ++inf_;
    return;
  }
  // s Delta^p X = Delta^p tau^p(s) X
  factors_.insert(factors_.begin(), tau_power(s, inf_));
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
    auto [a, b] = left_weight(factors_[i], factors_[i + 1]);
    if (a == factors_[i]) {
      break;
    }
    factors_[i] = a;
    factors_[i + 1] = b;
  }
  absorb_ends();
}

void CanonicalBraid::divide_right(SimpleElement const& s) {
  // X s^{-1} = X Delta^{-1} d^{-1}(s) = Delta^{-1} tau(X) d^{-1}(s)
  multiply_delta_power_right(-1);
  multiply_right(complement(s, ComplementSide::left));
}

void CanonicalBraid::divide_left(SimpleElement const& s) {
  // s^{-1} = d(s) Delta^{-1}
  --inf_;
  multiply_left(complement(s));
}

void CanonicalBraid::multiply_delta_power_right(int q) {
  inf_ += q;
  if (q % 2 != 0) {
    for (auto& f : factors_) {
      f = tau_simple(f);
    }
  }
}

CanonicalBraid CanonicalBraid::inverse() const {
  CanonicalBraid out(strands());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    out.divide_right(*it);
  }
  out.multiply_delta_power_right(-inf_);
  return out;
}

BraidWord CanonicalBraid::to_word() const {
  BraidWord out(strands());
  BraidWord d = word_of_simple(SimpleElement::delta(strands()));
  out *= power(d, inf_);
  for (auto const& f : factors_) {
    out *= word_of_simple(f);
  }
  return out;
}

CanonicalBraid operator*(CanonicalBraid const& a, CanonicalBraid const& b) {
  if (a.n_ != b.n_) {
    throw StrandMismatch("product of braids on different strand counts");
  }
  CanonicalBraid out = a;
  out.multiply_delta_power_right(b.inf_);
  for (auto const& f : b.factors_) {
    out.multiply_right(f);
  }
  return out;
}

CanonicalBraid left_normal_form(BraidWord const& w) {
  return CanonicalBraid::from_word(w);
}

RightNormalForm right_normal_form(CanonicalBraid const& x) {
  // rev(Delta^p y_1 ... y_r) = rev(y_r) ... rev(y_1) Delta^p
  CanonicalBraid r = reverse(x);
  RightNormalForm out;
  out.sup_power = r.inf();
  for (auto it = r.factors().rbegin(); it != r.factors().rend(); ++it) {
    out.factors.push_back(reverse_simple(*it));
  }
  return out;
}

RightNormalForm right_normal_form(BraidWord const& w) {
  return right_normal_form(CanonicalBraid::from_word(w));
}

MixedForm mixed_normal_form(CanonicalBraid const& x) {
  if (x.inf() >= 0) {
    return {CanonicalBraid(x.strands()), x};
  }
  // x = (Delta^k)^{-1} X; cancel the common prefix of Delta^k and X.
  CanonicalBraid u = CanonicalBraid::delta_power(x.strands(), -x.inf());
  CanonicalBraid v = CanonicalBraid::from_factors(x.strands(), 0, x.factors());
  CanonicalBraid d = braid_gcd(u, v);
  CanonicalBraid dinv = d.inverse();
  return {dinv * u, dinv * v};
}

MixedForm mixed_normal_form(BraidWord const& w) {
  return mixed_normal_form(CanonicalBraid::from_word(w));
}

InfSupLen inf_sup_len(BraidWord const& w) {
  CanonicalBraid x = CanonicalBraid::from_word(w);
  return {x.inf(), x.sup(), x.canonical_length()};
}

bool is_positive(BraidWord const& w) {
  return CanonicalBraid::from_word(w).is_positive();
}

bool equal(BraidWord const& a, BraidWord const& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch("equal: words on different strand counts");
  }
  return CanonicalBraid::from_word(a) == CanonicalBraid::from_word(b);
}

CanonicalBraid reverse(CanonicalBraid const& x) {
  CanonicalBraid out(x.strands());
  auto f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    out.multiply_right(reverse_simple(*it));
  }
  out.multiply_delta_power_right(x.inf());
  return out;
}

CanonicalBraid eps(CanonicalBraid const& x) { return reverse(x).inverse(); }

CanonicalBraid tau(CanonicalBraid const& x) {
  return CanonicalBraid::delta_power(x.strands(), -1) * x *
         CanonicalBraid::delta_power(x.strands(), 1);
}

bool prefix_le(CanonicalBraid const& a, CanonicalBraid const& b) {
  return (a.inverse() * b).is_positive();
}

bool suffix_le(CanonicalBraid const& a, CanonicalBraid const& b) {
  return (b * a.inverse()).is_positive();
}

namespace {

void require_positive(CanonicalBraid const& a, CanonicalBraid const& b,
                      char const* what) {
  if (a.n() != b.n()) {
    throw StrandMismatch(std::string(what) + ": strand mismatch");
  }
  if (!a.is_positive() || !b.is_positive()) {
    throw NotPositive(std::string(what) + " is defined here for positive braids");
  }
}

}  // namespace

CanonicalBraid braid_gcd(CanonicalBraid const& a, CanonicalBraid const& b,
                         Side side) {
  require_positive(a, b, "braid_gcd");
  if (side == Side::suffix) {
    return reverse(braid_gcd(reverse(a), reverse(b), Side::prefix));
  }
  CanonicalBraid d(a.strands());
  CanonicalBraid x = a;
  CanonicalBraid y = b;
  for (;;) {
    SimpleElement s = simple_meet(x.simple_prefix(), y.simple_prefix());
    if (s.is_identity()) {
      return d;
    }
    d.multiply_right(s);
    x.divide_left(s);
    y.divide_left(s);
  }
}

CanonicalBraid braid_lcm(CanonicalBraid const& a, CanonicalBraid const& b,
                         Side side) {
  require_positive(a, b, "braid_lcm");
  if (side == Side::suffix) {
    return reverse(braid_lcm(reverse(a), reverse(b), Side::prefix));
  }
  // With k >= sup(a), sup(b): x -> x^{-1} Delta^k reverses the prefix order
  // into the suffix order on the divisors of Delta^k.
  int k = std::max(a.sup(), b.sup());
  CanonicalBraid dk = CanonicalBraid::delta_power(a.strands(), k);
  CanonicalBraid ca = a.inverse() * dk;
  CanonicalBraid cb = b.inverse() * dk;
  return dk * braid_gcd(ca, cb, Side::suffix).inverse();
}

CanonicalBraid braid_gcd(BraidWord const& a, BraidWord const& b, Side side) {
  return braid_gcd(CanonicalBraid::from_word(a), CanonicalBraid::from_word(b),
                   side);
}

CanonicalBraid braid_lcm(BraidWord const& a, BraidWord const& b, Side side) {
  return braid_lcm(CanonicalBraid::from_word(a), CanonicalBraid::from_word(b),
                   side);
}

BraidWord positive_word(CanonicalBraid const& x) {
  BraidWord out(x.strands());
  for (auto const& f : x.positive_factors()) {
    out *= word_of_simple(f);
  }
  return out;
}

}  // namespace tbraid
