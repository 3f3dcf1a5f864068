#pragma once

#include <map>
#include <optional>

#include "tbraid/normal_form.hpp"
#include "tbraid/parallel.hpp"
#include "tbraid/word.hpp"

namespace tbraid {

// A conjugate of some input braid together with the conjugator:
// witness^{-1} * input * witness == braid.
struct SummitElement {
  CanonicalBraid braid;
  BraidWord witness;
};

// Conjugates attaining the maximal infimum and minimal supremum of a
// conjugacy class.  Witnesses conjugate the defining input to each element.
struct SuperSummitSet {
  int inf_max = 0;
  int sup_min = 0;
  std::map<CanonicalBraid, BraidWord> elements;

  [[nodiscard]] bool contains(CanonicalBraid const& x) const {
    return elements.contains(x);
  }
};

// Conjugation by tau^{-p}(x_1); ZeroLength when x is a power of Delta.
SummitElement cycling(CanonicalBraid const& x);
// Conjugation by x_r^{-1}; ZeroLength when x is a power of Delta.
SummitElement decycling(CanonicalBraid const& x);

// Iterated cycling then decycling until inf is maximal and sup minimal in
// the conjugacy class.
SummitElement summit_representative(CanonicalBraid const& x);

SuperSummitSet super_summit_set(BraidWord const& x,
                                Execution exec = Execution::serial);
SuperSummitSet super_summit_set(CanonicalBraid const& x,
                                Execution exec = Execution::serial);

// A freely reduced c with c^{-1} u c == v, or nullopt when the braids are
// not conjugate.
std::optional<BraidWord> conjugacy_decide(BraidWord const& u,
                                          BraidWord const& v,
                                          Execution exec = Execution::serial);

// c^{-1} u c as a word.
BraidWord conjugate(BraidWord const& u, BraidWord const& c);

}  // namespace tbraid
