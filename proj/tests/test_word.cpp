#include <doctest.h>

#include <random>

#include "oracle_testkit.hpp"
#include "tbraid/normal_form.hpp"
#include "tbraid/word.hpp"

using namespace tbraid;

namespace {
BraidWord w3(char const* s) { return parse_word(3, s); }
}

TEST_CASE("strand count bounds") {
  CHECK_THROWS_AS(StrandCount(1), InvalidStrands);
  CHECK_THROWS_AS(StrandCount(kMaxStrands + 1), InvalidStrands);
  CHECK(StrandCount(2).generators() == 1);
}

TEST_CASE("parse and print") {
  CHECK(to_string(parse_word(3, "1 -2  ,2")) == "1 -2 2");
  CHECK(parse_word(3, "").empty());
  CHECK(to_string(parse_word(3, "+1")) == "1");
  CHECK_THROWS_AS(parse_word(3, "0"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "1a"), ParseError);
  CHECK_THROWS_AS(parse_word(3, "3"), InvalidLetter);
  CHECK_THROWS_AS(parse_word(3, "-3"), InvalidLetter);
}

TEST_CASE("concat") {
  CHECK(to_string(concat(w3("1"), w3("2"))) == "1 2");
  CHECK(to_string(concat(w3(""), w3("1 -2"))) == "1 -2");
  CHECK(to_string(concat(w3("1 2 1"), w3("-1"))) == "1 2 1 -1");
  CHECK_THROWS_AS(concat(w3("1"), parse_word(4, "1")), StrandMismatch);
}

TEST_CASE("invert, reverse, eps") {
  CHECK(to_string(invert_word(w3("1 2"))) == "-2 -1");
  CHECK(invert_word(w3("")).empty());
  CHECK(to_string(invert_word(w3("1 -2 1"))) == "-1 2 -1");
  CHECK(to_string(reverse_word(w3("1 2 1"))) == "1 2 1");
  CHECK(to_string(reverse_word(w3("1 2"))) == "2 1");
  CHECK(to_string(reverse_word(w3("1 -2"))) == "-2 1");
  CHECK(to_string(eps_word(w3("1 2"))) == "-1 -2");
  CHECK(eps_word(w3("")).empty());
  CHECK(to_string(eps_word(w3("1 2 1"))) == "-1 -2 -1");
  CHECK(CanonicalBraid::from_word(eps_word(w3("1 2 1"))) ==
        CanonicalBraid::delta_power(StrandCount(3), -1));
}

TEST_CASE("exponent sum and permutation") {
  CHECK(exponent_sum(w3("1 2 1")) == 3);
  CHECK(exponent_sum(w3("1 -1")) == 0);
  CHECK(exponent_sum(w3("2 1 1")) == 3);
  CHECK(underlying_permutation(w3("1")).images() == std::vector<int>{2, 1, 3});
  CHECK(underlying_permutation(w3("1 2 1")).images() ==
        std::vector<int>{3, 2, 1});
  CHECK(underlying_permutation(w3("1 2")).images() == std::vector<int>{2, 3, 1});
  CHECK(underlying_permutation(w3("")) == Permutation::identity(3));
  CHECK(underlying_permutation(parse_word(5, "1 3 2")).cycle_type() ==
        std::vector<int>{4, 1});
}

TEST_CASE("free reduction and powers") {
  CHECK(to_string(free_reduce(w3("1 2 -2 -1 2"))) == "2");
  CHECK(to_string(power(w3("1 2"), 2)) == "1 2 1 2");
  CHECK(to_string(power(w3("1 2"), -1)) == "-2 -1");
  CHECK(power(w3("1"), 0).empty());
}

TEST_CASE("word level properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    StrandCount n(3 + trial % 3);
    BraidWord x = oracle::random_word(rng, n, 1 + trial % 12);
    BraidWord y = oracle::random_word(rng, n, trial % 7);
    CHECK(invert_word(invert_word(x)) == x);
    CHECK(reverse_word(reverse_word(x)) == x);
    CHECK(equal(eps_word(x), invert_word(reverse_word(x))));
    CHECK(equal(eps_word(x), reverse_word(invert_word(x))));
    CHECK(underlying_permutation(x * y) ==
          underlying_permutation(x) * underlying_permutation(y));
    CHECK(exponent_sum(free_reduce(x)) == exponent_sum(x));
    auto [a, b] = oracle::random_equal_pair(trial, n.value(), 8);
    CHECK(exponent_sum(a) == exponent_sum(b));
    CHECK(underlying_permutation(a) == underlying_permutation(b));
  }
}
