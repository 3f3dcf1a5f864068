#include "oracle_testkit.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace oracle {

using tbraid::SimpleElement;

namespace {

std::vector<int> letter_order(StrandCount n) {
  std::vector<int> out;
  for (int i = 1; i <= n.generators(); ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

CanonicalBraid nf(BraidWord const& w) { return CanonicalBraid::from_word(w); }

}  // namespace

std::vector<BraidWord> reduced_words(StrandCount n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  auto letters = letter_order(n);
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int k : letters) {
        auto const& prev = out[i].letters();
        if (!prev.empty() && prev.back() == -k) {
          continue;
        }
        out.push_back(out[i] * BraidWord(n, {k}));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<BraidWord> positive_words(StrandCount n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int k = 1; k <= n.generators(); ++k) {
        out.push_back(out[i] * BraidWord(n, {k}));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<BraidWord> dedup_by_braid(std::vector<BraidWord> const& words) {
  std::set<CanonicalBraid> seen;
  std::vector<BraidWord> out;
  for (auto const& w : words) {
    if (seen.insert(nf(w)).second) {
      out.push_back(w);
    }
  }
  return out;
}

std::map<CanonicalBraid, BraidWord> twisted_orbit_oracle(
    BraidWord const& u, OracleBudget const& budget) {
  std::map<CanonicalBraid, BraidWord> out;
  for (auto const& w : reduced_words(u.strands(), budget.max_conjugator_len)) {
    out.try_emplace(nf(reverse_word(w) * u * w), w);
  }
  return out;
}

std::optional<BraidWord> bfs_twisted_oracle(BraidWord const& u,
                                            BraidWord const& v,
                                            OracleBudget const& budget) {
  CanonicalBraid target = nf(v);
  for (auto const& w : reduced_words(u.strands(), budget.max_conjugator_len)) {
    if (nf(reverse_word(w) * u * w) == target) {
      return w;
    }
  }
  return std::nullopt;
}

std::map<CanonicalBraid, BraidWord> conjugacy_orbit_oracle(
    BraidWord const& u, OracleBudget const& budget) {
  std::map<CanonicalBraid, BraidWord> out;
  for (auto const& w : reduced_words(u.strands(), budget.max_conjugator_len)) {
    out.try_emplace(nf(invert_word(w) * u * w), w);
  }
  return out;
}

std::optional<BraidWord> bfs_conjugacy_oracle(BraidWord const& u,
                                              BraidWord const& v,
                                              OracleBudget const& budget) {
  CanonicalBraid target = nf(v);
  for (auto const& w : reduced_words(u.strands(), budget.max_conjugator_len)) {
    if (nf(invert_word(w) * u * w) == target) {
      return w;
    }
  }
  return std::nullopt;
}

bool prefix_divides_oracle(BraidWord const& a, BraidWord const& b) {
  return nf(invert_word(a) * b).inf() >= 0;
}

std::vector<SimpleElement> enumerate_simples_oracle(StrandCount n) {
  BraidWord delta(n);
  for (int i = 1; i < n.value(); ++i) {
    for (int j = i; j >= 1; --j) {
      delta *= BraidWord(n, {j});
    }
  }
  std::map<CanonicalBraid, BraidWord> found{{nf(BraidWord(n)), BraidWord(n)}};
  std::vector<BraidWord> level{BraidWord(n)};
  while (!level.empty()) {
    std::vector<BraidWord> next;
    for (auto const& w : level) {
      for (int k = 1; k <= n.generators(); ++k) {
        BraidWord x = w * BraidWord(n, {k});
        if (!prefix_divides_oracle(x, delta)) {
          continue;
        }
        if (found.try_emplace(nf(x), x).second) {
          next.push_back(x);
        }
      }
    }
    level = std::move(next);
  }
  std::vector<SimpleElement> out;
  for (auto const& [x, w] : found) {
    out.push_back(tbraid::simple_from_word(w));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.permutation().images() < b.permutation().images();
  });
  return out;
}

SimpleElement meet_oracle(SimpleElement const& s, SimpleElement const& t,
                          std::vector<SimpleElement> const& all) {
  BraidWord ws = word_of_simple(s);
  BraidWord wt = word_of_simple(t);
  std::vector<SimpleElement> common;
  for (auto const& c : all) {
    BraidWord wc = word_of_simple(c);
    if (prefix_divides_oracle(wc, ws) && prefix_divides_oracle(wc, wt)) {
      common.push_back(c);
    }
  }
  // The greatest one is divided by every other common divisor.
  for (auto const& c : common) {
    BraidWord wc = word_of_simple(c);
    if (std::all_of(common.begin(), common.end(), [&](auto const& d) {
          return prefix_divides_oracle(word_of_simple(d), wc);
        })) {
      return c;
    }
  }
  throw std::logic_error("meet_oracle: no greatest common divisor");
}

SimpleElement join_oracle(SimpleElement const& s, SimpleElement const& t,
                          std::vector<SimpleElement> const& all) {
  BraidWord ws = word_of_simple(s);
  BraidWord wt = word_of_simple(t);
  std::vector<SimpleElement> common;
  for (auto const& c : all) {
    BraidWord wc = word_of_simple(c);
    if (prefix_divides_oracle(ws, wc) && prefix_divides_oracle(wt, wc)) {
      common.push_back(c);
    }
  }
  for (auto const& c : common) {
    BraidWord wc = word_of_simple(c);
    if (std::all_of(common.begin(), common.end(), [&](auto const& d) {
          return prefix_divides_oracle(wc, word_of_simple(d));
        })) {
      return c;
    }
  }
  throw std::logic_error("join_oracle: no least common multiple");
}

BraidWord random_word(std::mt19937_64& rng, StrandCount n, int len) {
  std::uniform_int_distribution<int> gen(1, n.generators());
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    int k = gen(rng);
    letters.push_back(sign(rng) ? k : -k);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord random_positive_word(std::mt19937_64& rng, StrandCount n, int len) {
  std::uniform_int_distribution<int> gen(1, n.generators());
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    letters.push_back(gen(rng));
  }
  return BraidWord(n, std::move(letters));
}

namespace {

std::vector<int> relator(std::mt19937_64& rng, int g) {
  std::uniform_int_distribution<int> gen(1, g);
  int i = gen(rng);
  int j = gen(rng);
  std::vector<int> r;
  if (i == j || g < 2) {
    r = {i, -i};
  } else if (std::abs(i - j) >= 2) {
    r = {i, j, -i, -j};
  } else {
    r = {i, j, i, -j, -i, -j};
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::reverse(r.begin(), r.end());
    for (int& k : r) {
      k = -k;
    }
  }
  return r;
}

// One relation rewrite at a random applicable position, if any.
bool rewrite(std::mt19937_64& rng, std::vector<int>& w) {
  std::vector<std::pair<std::size_t, int>> spots;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    int a = w[p];
    int b = w[p + 1];
    if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
      spots.push_back({p, 0});
    }
    if (a == -b) {
      spots.push_back({p, 1});
    }
    if (p + 2 < w.size() && w[p + 2] == a && std::abs(std::abs(a) - std::abs(b)) == 1 &&
        (a > 0) == (b > 0)) {
      spots.push_back({p, 2});
    }
  }
  if (spots.empty()) {
    return false;
  }
  auto [p, kind] =
      spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
  if (kind == 0) {
    std::swap(w[p], w[p + 1]);
  } else if (kind == 1) {
    w.erase(w.begin() + p, w.begin() + p + 2);
  } else {
    int a = w[p];
    int b = w[p + 1];
    w[p] = b;
    w[p + 1] = a;
    w[p + 2] = b;
  }
  return true;
}

BraidWord mutate(std::mt19937_64& rng, BraidWord const& x, int steps) {
  std::vector<int> w = x.letters();
  int const g = x.strands().generators();
  for (int s = 0; s < steps; ++s) {
    if (std::bernoulli_distribution(0.35)(rng)) {
      auto r = relator(rng, g);
      std::size_t pos =
          std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      w.insert(w.begin() + pos, r.begin(), r.end());
    } else {
      rewrite(rng, w);
    }
  }
  return BraidWord(x.strands(), std::move(w));
}

}  // namespace

std::pair<BraidWord, BraidWord> random_equal_pair(std::uint64_t seed, int n,
                                                  int len) {
  std::mt19937_64 rng(seed);
  StrandCount sn(n);
  BraidWord ancestor = random_word(rng, sn, len);
  if (len == 0) {
    return {ancestor, ancestor};
  }
  BraidWord a = mutate(rng, ancestor, 2 * len);
  BraidWord b = mutate(rng, ancestor, 2 * len);
  return {a, b};
}

namespace {

ZElement z_multiply(ZAction const& a, ZElement const& x, ZElement const& y) {
  return {x.b * a.act(x.h, y.b), x.h + y.h};
}

ZElement z_invert(ZAction const& a, ZElement const& x) {
  return {a.act(-x.h, invert_word(x.b)), -x.h};
}

ZElement z_conjugate(ZAction const& a, ZElement const& g, ZElement const& c) {
  return z_multiply(a, z_multiply(a, z_invert(a, c), g), c);
}

}  // namespace

std::map<std::pair<CanonicalBraid, int>, ZElement> semidirect_orbit_oracle(
    ZAction const& a, ZElement const& g, int max_x, int max_k) {
  std::map<std::pair<CanonicalBraid, int>, ZElement> out;
  auto xs = reduced_words(g.b.strands(), max_x);
  for (int k = 0; k <= max_k; k = k > 0 ? -k : -k + 1) {
    for (auto const& x : xs) {
      ZElement c{x, k};
      ZElement y = z_conjugate(a, g, c);
      out.try_emplace({nf(y.b), y.h}, c);
    }
    if (k == -max_k) {
      break;
    }
  }
  return out;
}

std::optional<ZElement> semidirect_bfs_oracle(ZAction const& a,
                                              ZElement const& g1,
                                              ZElement const& g2, int max_x,
                                              int max_k) {
  auto orbit = semidirect_orbit_oracle(a, g1, max_x, max_k);
  auto it = orbit.find({nf(g2.b), g2.h});
  if (it == orbit.end()) {
    return std::nullopt;
  }
  return it->second;
}

}  // namespace oracle
