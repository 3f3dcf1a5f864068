#include <doctest.h>

#include <random>

#include "oracle_testkit.hpp"
#include "tbraid/automorphism.hpp"
#include "tbraid/conjugacy.hpp"
#include "tbraid/normal_form.hpp"

using namespace tbraid;

namespace {

StrandCount const n3(3);

BraidWord w(int n, char const* s) { return parse_word(n, s); }
BraidWord delta_word(StrandCount n) { return word_of_simple(delta(n)); }

AutByImages images_of(int n, std::vector<char const*> imgs) {
  std::vector<BraidWord> v;
  for (auto s : imgs) {
    v.push_back(parse_word(n, s));
  }
  return AutByImages(StrandCount(n), v);
}

}  // namespace

TEST_CASE("relation check on construction") {
  CHECK_THROWS_AS(images_of(3, {"1 1", "2"}), NotAutomorphism);
  CHECK_THROWS_AS(images_of(3, {"1"}), NotAutomorphism);
  CHECK_THROWS_AS(images_of(4, {"1", "2", "2"}), NotAutomorphism);
  // Relations hold but the map is not injective; classify rejects it.
  CHECK_THROWS_AS(classify(images_of(4, {"1", "2", "1"})), NotAutomorphism);
  CHECK_NOTHROW(images_of(4, {"3", "2", "1"}));
}

TEST_CASE("classification examples") {
  NormalizedAut id = classify(images_of(3, {"1", "2"}));
  CHECK(id.w.empty());
  CHECK(id.e == 0);
  NormalizedAut e = classify(images_of(4, {"-1", "-2", "-3"}));
  CHECK(e.w.empty());
  CHECK(e.e == 1);
  for (int n = 3; n <= 4; ++n) {
    StrandCount sn(n);
    std::vector<BraidWord> imgs;
    for (int i = 1; i < n; ++i) {
      imgs.push_back(BraidWord(sn, {-(n - i)}));
    }
    NormalizedAut te = classify(AutByImages(sn, imgs));
    CHECK(te.e == 1);
    CHECK(same_automorphism(te, {delta_word(sn), 1}));
    if (n == 3) {
      CHECK(to_string(te.w) == "1 2 1");
    }
  }
  // A conjugator of length 1 is out of reach with a zero search bound.
  CHECK_THROWS_AS(classify(to_images(inner_aut(w(3, "1"))), 0),
                  NotAutomorphism);
}

TEST_CASE("composition algebra") {
  NormalizedAut te{delta_word(n3), 1};
  NormalizedAut sq = compose(te, te);
  CHECK(sq.e == 0);
  CHECK(same_automorphism(sq, identity_aut(n3)));
  NormalizedAut f{w(3, "1 -2"), 1};
  CHECK(same_automorphism(compose(f, identity_aut(n3)), f));
  CHECK(same_automorphism(compose(identity_aut(n3), f), f));
  NormalizedAut ee = compose(eps_aut(n3), eps_aut(n3));
  CHECK(ee.w.empty());
  CHECK(ee.e == 0);

  NormalizedAut ie = invert_aut(eps_aut(n3));
  CHECK(ie.w.empty());
  CHECK(ie.e == 1);
  NormalizedAut is = invert_aut(inner_aut(w(3, "1")));
  CHECK(to_string(is.w) == "-1");
  CHECK(is.e == 0);
  CHECK(same_automorphism(invert_aut(te), te));

  // Delta^2 is central, so the conjugators differ by it.
  NormalizedAut shifted{delta_word(n3) * power(delta_word(n3), 2), 1};
  CHECK(same_automorphism(te, shifted));
  CHECK_FALSE(same_automorphism(te, {power(delta_word(n3), 2), 1}));
}

TEST_CASE("apply") {
  CHECK(to_string(apply_aut(eps_aut(n3), w(3, "1 2"))) == "-1 -2");
  CHECK(equal(apply_aut(inner_aut(w(3, "1")), w(3, "1")), w(3, "1")));
  CHECK(equal(apply_aut(inner_aut(delta_word(n3)), w(3, "1")), w(3, "2")));
  CHECK_THROWS_AS(apply_aut(eps_aut(n3), w(4, "1")), StrandMismatch);
}

TEST_CASE("random automorphisms round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    StrandCount n(3 + trial % 2);
    NormalizedAut f{oracle::random_word(rng, n, trial % 4), trial % 2};
    NormalizedAut g{oracle::random_word(rng, n, (trial / 2) % 4), (trial / 3) % 2};
    AutByImages phi = to_images(f);
    NormalizedAut c = classify(phi);
    CHECK(c.e == f.e);
    CHECK(same_automorphism(c, f));
    BraidWord d2 = power(delta_word(n), 2);
    CHECK(CanonicalBraid::from_word(apply_aut(f, d2)) ==
          CanonicalBraid::delta_power(n, f.e ? -2 : 2));
    BraidWord x = oracle::random_word(rng, n, 6);
    CHECK(equal(apply_aut(compose(f, g), x), apply_aut(f, apply_aut(g, x))));
    CHECK(equal(apply_aut(compose(f, invert_aut(f)), x), x));
    CHECK(equal(phi.apply(x), apply_aut(f, x)));
  }
}

TEST_CASE("twisted decisions") {
  AutByImages id = images_of(3, {"1", "2"});
  auto x = twisted_decide(id, w(3, "1"), w(3, "2"));
  REQUIRE(x);
  CHECK(to_string(*x) == "2 1");
  AutByImages ep = images_of(3, {"-1", "-2"});
  auto y = twisted_decide(ep, w(3, "1"), w(3, "2"));
  REQUIRE(y);
  CHECK(to_string(*y) == "2 -1");
  CHECK_FALSE(twisted_decide(ep, w(3, "1"), w(3, "1 2")));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    StrandCount n(3 + trial % 2);
    NormalizedAut f{oracle::random_word(rng, n, trial % 3), trial % 2};
    BraidWord u = oracle::random_word(rng, n, 1 + trial % 5);
    BraidWord c = oracle::random_word(rng, n, trial % 4);
    // v = phi(c)^{-1} u c is phi-twisted conjugate by construction.
    BraidWord v = invert_word(apply_aut(f, c)) * u * c;
    auto t = twisted_decide(f, u, v);
    REQUIRE(t);
    CHECK(equal(invert_word(apply_aut(f, *t)) * u * *t, v));
    BraidWord v2 = oracle::random_word(rng, n, 1 + trial % 5);
    CHECK(twisted_decide(identity_aut(n), u, v2).has_value() ==
          conjugacy_decide(u, v2).has_value());
  }
}
