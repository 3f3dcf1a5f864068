#include "tbraid/automorphism.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tbraid/conjugacy.hpp"
#include "tbraid/normal_form.hpp"
#include "tbraid/twisted.hpp"

namespace tbraid {

namespace {

BraidWord letter(StrandCount n, int k) { return BraidWord(n, {k}); }

BraidWord delta_squared(StrandCount n) {
  return power(word_of_simple(delta(n)), 2);
}

}  // namespace

AutByImages::AutByImages(StrandCount n, std::vector<BraidWord> images)
    : n_(n), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n.generators()) {
    throw NotAutomorphism("expected " + std::to_string(n.generators()) +
                          " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (auto const& w : images_) {
    if (w.strands() != n) {
      throw StrandMismatch("generator image on the wrong number of strands");
    }
  }
  int const g = n.generators();
  for (int i = 1; i <= g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      BraidWord const& a = image(i);
      BraidWord const& b = image(j);
      bool ok = j == i + 1 ? equal(a * b * a, b * a * b) : equal(a * b, b * a);
      if (!ok) {
        throw NotAutomorphism("images of sigma_" + std::to_string(i) +
                              " and sigma_" + std::to_string(j) +
                              " violate the braid relation");
      }
    }
  }
}

BraidWord AutByImages::apply(BraidWord const& x) const {
  BraidWord out(n_);
  for (int k : x.letters()) {
    BraidWord const& img = image(std::abs(k));
    out *= k > 0 ? img : invert_word(img);
  }
  return out;
}

NormalizedAut identity_aut(StrandCount n) { return {BraidWord(n), 0}; }
NormalizedAut eps_aut(StrandCount n) { return {BraidWord(n), 1}; }
NormalizedAut inner_aut(BraidWord w) { return {std::move(w), 0}; }

BraidWord apply_aut(NormalizedAut const& f, BraidWord const& x) {
  if (x.strands() != f.strands()) {
    throw StrandMismatch("apply_aut: strand mismatch");
  }
  return invert_word(f.w) * (f.e ? eps_word(x) : x) * f.w;
}

NormalizedAut compose(NormalizedAut const& f, NormalizedAut const& g) {
  if (f.strands() != g.strands()) {
    throw StrandMismatch("compose: strand mismatch");
  }
  BraidWord wg = f.e ? eps_word(g.w) : g.w;
  return {free_reduce(wg * f.w), (f.e + g.e) % 2};
}

NormalizedAut invert_aut(NormalizedAut const& f) {
  BraidWord inv = invert_word(f.w);
  return {f.e ? eps_word(inv) : inv, f.e};
}

bool same_automorphism(NormalizedAut const& f, NormalizedAut const& g) {
  if (f.strands() != g.strands() || f.e != g.e) {
    return false;
  }
  CanonicalBraid q = CanonicalBraid::from_word(g.w * invert_word(f.w));
  return q.canonical_length() == 0 && q.inf() % 2 == 0;
}

AutByImages to_images(NormalizedAut const& f) {
  std::vector<BraidWord> images;
  for (int i = 1; i <= f.strands().generators(); ++i) {
    images.push_back(free_reduce(apply_aut(f, letter(f.strands(), i))));
  }
  return AutByImages(f.strands(), std::move(images));
}

namespace {

// Depth-first enumeration of freely reduced words of one fixed length, in
// the letter order 1, ..., g, -1, ..., -g.
class ConjugatorSearch {
 public:
  ConjugatorSearch(AutByImages const& phi, int e) : n_(phi.strands()) {
    for (int i = 1; i <= n_.generators(); ++i) {
      lhs_.push_back(CanonicalBraid::from_word(letter(n_, e ? -i : i)));
      rhs_.push_back(CanonicalBraid::from_word(phi.image(i)));
    }
    for (int i = 1; i <= n_.generators(); ++i) {
      order_.push_back(i);
    }
    for (int i = 1; i <= n_.generators(); ++i) {
      order_.push_back(-i);
    }
  }

  std::optional<BraidWord> find(int length) {
    word_.clear();
    return dfs(CanonicalBraid(n_), length);
  }

 private:
  // sigma_i^{+-1} w == w phi(sigma_i) for all i.
  bool accepts(CanonicalBraid const& w) const {
    for (std::size_t i = 0; i < lhs_.size(); ++i) {
      if (lhs_[i] * w != w * rhs_[i]) {
        return false;
      }
    }
    return true;
  }

  std::optional<BraidWord> dfs(CanonicalBraid const& w, int remaining) {
    if (remaining == 0) {
      if (accepts(w)) {
        return BraidWord(n_, word_);
      }
      return std::nullopt;
    }
    for (int k : order_) {
      if (!word_.empty() && word_.back() == -k) {
        continue;
      }
      CanonicalBraid next = w;
      SimpleElement atom = SimpleElement::atom(n_, std::abs(k));
      if (k > 0) {
        next.multiply_right(atom);
      } else {
        next.divide_right(atom);
      }
      word_.push_back(k);
      auto found = dfs(next, remaining - 1);
      word_.pop_back();
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  StrandCount n_;
  std::vector<CanonicalBraid> lhs_;
  std::vector<CanonicalBraid> rhs_;
  std::vector<int> order_;
  std::vector<int> word_;
};

}  // namespace

NormalizedAut classify(AutByImages const& phi, int max_length) {
  StrandCount const n = phi.strands();
  BraidWord const d2 = delta_squared(n);
  CanonicalBraid image = CanonicalBraid::from_word(phi.apply(d2));
  int e;
  if (image == CanonicalBraid::delta_power(n, 2)) {
    e = 0;
  } else if (image == CanonicalBraid::delta_power(n, -2)) {
    e = 1;
  } else {
    throw NotAutomorphism("classify: the image of Delta^2 is not Delta^{+-2}");
  }
  ConjugatorSearch search(phi, e);
  for (int len = 0; len <= max_length; ++len) {
    if (auto w = search.find(len)) {
      return {std::move(*w), e};
    }
  }
  throw NotAutomorphism("classify: no conjugator of length <= " +
                        std::to_string(max_length));
}

std::optional<BraidWord> twisted_decide(NormalizedAut const& phi,
                                        BraidWord const& u, BraidWord const& v,
                                        Execution exec) {
  if (u.strands() != phi.strands() || v.strands() != phi.strands()) {
    throw StrandMismatch("twisted_decide: strand mismatch");
  }
  // phi(x)^{-1} u x = v  <=>  eps^e(x)^{-1} (w u) x = w v, and
  // eps(x)^{-1} = rev(x).
  BraidWord wu = phi.w * u;
  BraidWord wv = phi.w * v;
  std::optional<BraidWord> x;
  if (phi.e == 0) {
    x = conjugacy_decide(wu, wv, exec);
  } else if (auto t = eps_twisted_decide(wu, wv, exec)) {
    x = std::move(t->word);
  }
  if (!x) {
    return std::nullopt;
  }
  if (!equal(invert_word(apply_aut(phi, *x)) * u * *x, v)) {
    throw std::logic_error("twisted_decide: witness failed to verify");
  }
  return x;
}

std::optional<BraidWord> twisted_decide(AutByImages const& phi,
                                        BraidWord const& u, BraidWord const& v,
                                        Execution exec, int max_length) {
  return twisted_decide(classify(phi, max_length), u, v, exec);
}

}  // namespace tbraid
