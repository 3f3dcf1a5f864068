#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tbraid/normal_form.hpp"
#include "tbraid/simple.hpp"
#include "tbraid/word.hpp"

// Brute-force references for the tests.  Everything here is built from word
// concatenation and equality of braids (via normal forms); none of it calls
// the lattice, summit or MPF code under test.
namespace oracle {

using tbraid::BraidWord;
using tbraid::CanonicalBraid;
using tbraid::StrandCount;

struct OracleBudget {
  int max_word_len = 6;
  int max_conjugator_len = 6;
  int strand_cap = 4;
};

// All freely reduced words of length <= max_len, shortest first, letters in
// the order 1, -1, 2, -2, ...
std::vector<BraidWord> reduced_words(StrandCount n, int max_len);
// All positive words of length <= max_len, shortest first.
std::vector<BraidWord> positive_words(StrandCount n, int max_len);
// One word per distinct braid, first occurrence kept.
std::vector<BraidWord> dedup_by_braid(std::vector<BraidWord> const& words);

// First w (in reduced_words order) with rev(w) u w == v.
std::optional<BraidWord> bfs_twisted_oracle(BraidWord const& u,
                                            BraidWord const& v,
                                            OracleBudget const& budget = {});
// Every braid reachable as rev(w) u w, with the first such w.
std::map<CanonicalBraid, BraidWord> twisted_orbit_oracle(
    BraidWord const& u, OracleBudget const& budget = {});

std::optional<BraidWord> bfs_conjugacy_oracle(BraidWord const& u,
                                              BraidWord const& v,
                                              OracleBudget const& budget = {});
std::map<CanonicalBraid, BraidWord> conjugacy_orbit_oracle(
    BraidWord const& u, OracleBudget const& budget = {});

// Simples found by growing positive words one atom at a time while they
// stay below Delta, sorted by permutation.
std::vector<tbraid::SimpleElement> enumerate_simples_oracle(StrandCount n);

// a <= b in the prefix order, checked as positivity of a^{-1} b.
bool prefix_divides_oracle(BraidWord const& a, BraidWord const& b);
tbraid::SimpleElement meet_oracle(tbraid::SimpleElement const& s,
                                  tbraid::SimpleElement const& t,
                                  std::vector<tbraid::SimpleElement> const& all);
tbraid::SimpleElement join_oracle(tbraid::SimpleElement const& s,
                                  tbraid::SimpleElement const& t,
                                  std::vector<tbraid::SimpleElement> const& all);

// Two words equal in B_n obtained from a random ancestor of length len by
// independent random relator insertions, relation rewrites and free
// cancellations.
std::pair<BraidWord, BraidWord> random_equal_pair(std::uint64_t seed, int n,
                                                  int len);

BraidWord random_word(std::mt19937_64& rng, StrandCount n, int len);
BraidWord random_positive_word(std::mt19937_64& rng, StrandCount n, int len);

// Semidirect product B_n x| Z with psi_{t^k} given by `act(k, b)`, using the
// product (b1, h1)(b2, h2) = (b1 psi_{h1}(b2), h1 + h2).
struct ZAction {
  std::function<BraidWord(int, BraidWord const&)> act;
};

struct ZElement {
  BraidWord b;
  int h;
};

// First conjugator (x, k) with ||x|| <= max_x and |k| <= max_k and
// (x,k)^{-1} g1 (x,k) == g2.
std::optional<ZElement> semidirect_bfs_oracle(ZAction const& a,
                                              ZElement const& g1,
                                              ZElement const& g2, int max_x,
                                              int max_k);
// The reachable conjugates of g, keyed by (normal form, h).
std::map<std::pair<CanonicalBraid, int>, ZElement> semidirect_orbit_oracle(
    ZAction const& a, ZElement const& g, int max_x, int max_k);

}  // namespace oracle
