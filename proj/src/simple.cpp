#include "tbraid/simple.hpp"

#include <algorithm>

namespace tbraid {

SimpleElement::Array SimpleElement::identity_array(int n) noexcept {
  Array a{};
  for (int i = 0; i < n; ++i) {
    a[i] = static_cast<std::uint8_t>(i);
  }
  return a;
}

SimpleElement SimpleElement::identity(StrandCount n) {
  return SimpleElement(n.value(), identity_array(n.value()));
}

SimpleElement SimpleElement::delta(StrandCount n) {
  Array a{};
  for (int i = 0; i < n.value(); ++i) {
    a[i] = static_cast<std::uint8_t>(n.value() - 1 - i);
  }
  return SimpleElement(n.value(), a);
}

SimpleElement SimpleElement::atom(StrandCount n, int i) {
  if (i < 1 || i >= n.value()) {
    throw InvalidLetter("atom index out of range");
  }
  Array a = identity_array(n.value());
  std::swap(a[i - 1], a[i]);
  return SimpleElement(n.value(), a);
}

SimpleElement SimpleElement::from_permutation(Permutation const& p) {
  StrandCount n(p.size());
  Array a{};
  for (int i = 0; i < n.value(); ++i) {
    a[i] = static_cast<std::uint8_t>(p.images()[i] - 1);
  }
  return SimpleElement(n.value(), a);
}

Permutation SimpleElement::permutation() const {
  std::vector<int> im(n_);
  for (int i = 0; i < n_; ++i) {
    im[i] = perm_[i] + 1;
  }
  return Permutation(std::move(im));
}

bool SimpleElement::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != i) {
      return false;
    }
  }
  return true;
}

bool SimpleElement::is_delta() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != n_ - 1 - i) {
      return false;
    }
  }
  return true;
}

SimpleKind SimpleElement::kind() const noexcept {
  if (is_identity()) {
    return SimpleKind::identity;
  }
  return is_delta() ? SimpleKind::delta : SimpleKind::proper;
}

int SimpleElement::length() const noexcept {
  int inv = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      inv += perm_[i] > perm_[j];
    }
  }
  return inv;
}

bool SimpleElement::starts_with(int i) const noexcept {
  // Strands i and i + 1 (1-based) have crossed.
  int pa = -1;
  int pb = -1;
  for (int p = 0; p < n_; ++p) {
    if (perm_[p] == i - 1) {
      pa = p;
    } else if (perm_[p] == i) {
      pb = p;
    }
  }
  return pa > pb;
}

bool SimpleElement::ends_with(int i) const noexcept {
  return perm_[i - 1] > perm_[i];
}

SimpleElement SimpleElement::times(SimpleElement const& other) const noexcept {
  Array a{};
  for (int p = 0; p < n_; ++p) {
    a[p] = perm_[other.perm_[p]];
  }
  return SimpleElement(n_, a);
}

SimpleElement SimpleElement::inverse_permutation() const noexcept {
  Array a{};
  for (int p = 0; p < n_; ++p) {
    a[perm_[p]] = static_cast<std::uint8_t>(p);
  }
  return SimpleElement(n_, a);
}

SimpleElement SimpleElement::left_quotient(SimpleElement const& t) const noexcept {
  return inverse_permutation().times(t);
}

SimpleElement delta(StrandCount n) { return SimpleElement::delta(n); }

SimpleElement simple_from_word(BraidWord const& w) {
  if (!w.is_positive_word()) {
    throw NotPositive("simple_from_word: word '" + to_string(w) +
                      "' contains inverse letters");
  }
  Permutation current = Permutation::identity(w.n());
  std::vector<int> im = current.images();
  for (int l : w.letters()) {
    // Each letter must add a crossing between two strands that have not
    // crossed yet.
    if (im[l - 1] > im[l]) {
      throw NotSimple("simple_from_word: '" + to_string(w) +
                      "' is not a permutation braid");
    }
    std::swap(im[l - 1], im[l]);
  }
  return SimpleElement::from_permutation(Permutation(std::move(im)));
}

BraidWord word_of_simple(SimpleElement const& s) {
  // Peel the lowest starting atom each time: gives the lexicographically
  // smallest positive word.
  std::vector<int> letters;
  SimpleElement rest = s;
  StrandCount n(s.n());
  while (!rest.is_identity()) {
    for (int i = 1; i < s.n(); ++i) {
      if (rest.starts_with(i)) {
        letters.push_back(i);
        rest = SimpleElement::atom(n, i).left_quotient(rest);
        break;
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

namespace {

void check_same(SimpleElement const& s, SimpleElement const& t) {
  if (s.n() != t.n()) {
    throw StrandMismatch("simple elements on different strand counts");
  }
}

}  // namespace

bool divides_prefix(SimpleElement const& s, SimpleElement const& t) {
  check_same(s, t);
  return s.length() + s.left_quotient(t).length() == t.length();
}

bool divides_suffix(SimpleElement const& s, SimpleElement const& t) {
  check_same(s, t);
  return divides_prefix(reverse_simple(s), reverse_simple(t));
}

SimpleElement simple_meet(SimpleElement const& s, SimpleElement const& t,
                          Side side) {
  check_same(s, t);
  if (side == Side::suffix) {
    return reverse_simple(
        simple_meet(reverse_simple(s), reverse_simple(t), Side::prefix));
  }
  StrandCount n(s.n());
  SimpleElement a = s;
  SimpleElement b = t;
  SimpleElement m = SimpleElement::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i < s.n(); ++i) {
      if (a.starts_with(i) && b.starts_with(i)) {
        SimpleElement atom = SimpleElement::atom(n, i);
        m = m.times(atom);
        a = atom.left_quotient(a);
        b = atom.left_quotient(b);
        grew = true;
        break;
      }
    }
  }
  return m;
}

SimpleElement simple_join(SimpleElement const& s, SimpleElement const& t,
                          Side side) {
  check_same(s, t);
  if (side == Side::suffix) {
    return reverse_simple(
        simple_join(reverse_simple(s), reverse_simple(t), Side::prefix));
  }
  // The right complement reverses the prefix order into the suffix order.
  return complement(simple_meet(complement(s), complement(t), Side::suffix),
                    ComplementSide::left);
}

SimpleElement complement(SimpleElement const& s, ComplementSide side) {
  SimpleElement d = SimpleElement::delta(s.strands());
  if (side == ComplementSide::right) {
    return s.left_quotient(d);
  }
  return d.times(s.inverse_permutation());
}

SimpleElement tau_simple(SimpleElement const& s) {
  SimpleElement d = SimpleElement::delta(s.strands());
  // Delta is an involution as a permutation.
  return d.times(s).times(d);
}

SimpleElement tau_power(SimpleElement const& s, int k) {
  return (k % 2 == 0) ? s : tau_simple(s);
}

SimpleElement reverse_simple(SimpleElement const& s) {
  return s.inverse_permutation();
}

std::vector<SimpleElement> all_simples(StrandCount n) {
  std::vector<int> im(n.value());
  for (int i = 0; i < n.value(); ++i) {
    im[i] = i + 1;
  }
  std::vector<SimpleElement> out;
  do {
    out.push_back(SimpleElement::from_permutation(Permutation(im)));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace tbraid
