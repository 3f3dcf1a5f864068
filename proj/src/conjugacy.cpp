#include "tbraid/conjugacy.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "tbraid/kernels.hpp"

namespace tbraid {

BraidWord conjugate(BraidWord const& u, BraidWord const& c) {
  return invert_word(c) * u * c;
}

SummitElement cycling(CanonicalBraid const& x) {
  if (x.canonical_length() == 0) {
    throw ZeroLength("cycling: the braid is a power of Delta");
  }
  SimpleElement c = tau_power(x.factors().front(), x.inf());
  CanonicalBraid y = x;
  y.divide_left(c);
  y.multiply_right(c);
  return {std::move(y), word_of_simple(c)};
}

SummitElement decycling(CanonicalBraid const& x) {
  if (x.canonical_length() == 0) {
    throw ZeroLength("decycling: the braid is a power of Delta");
  }
  SimpleElement last = x.factors().back();
  CanonicalBraid y = x;
  y.multiply_left(last);
  y.divide_right(last);
  return {std::move(y), invert_word(word_of_simple(last))};
}

namespace {

// Applies `move` until `improved` fires or the orbit repeats; the orbit of a
// deterministic map that never improves is eventually periodic, and once it
// repeats no later step can improve.
template <typename Move, typename Improved>
void iterate_until_stable(CanonicalBraid& cur, BraidWord& witness, Move move,
                          Improved improved) {
  std::set<CanonicalBraid> seen{cur};
  while (cur.canonical_length() > 0) {
    SummitElement next = move(cur);
    witness *= next.witness;
    if (improved(next.braid, cur)) {
      seen.clear();
    }
    cur = std::move(next.braid);
    if (!seen.insert(cur).second) {
      break;
    }
  }
}

}  // namespace

SummitElement summit_representative(CanonicalBraid const& x) {
  CanonicalBraid cur = x;
  BraidWord witness(x.strands());
  iterate_until_stable(
      cur, witness, [](CanonicalBraid const& y) { return cycling(y); },
      [](CanonicalBraid const& a, CanonicalBraid const& b) {
        return a.inf() > b.inf();
      });
  iterate_until_stable(
      cur, witness, [](CanonicalBraid const& y) { return decycling(y); },
      [](CanonicalBraid const& a, CanonicalBraid const& b) {
        return a.sup() < b.sup();
      });
  return {std::move(cur), free_reduce(witness)};
}

SuperSummitSet super_summit_set(CanonicalBraid const& x, Execution exec) {
  SummitElement rep = summit_representative(x);
  SuperSummitSet out;
  out.inf_max = rep.braid.inf();
  out.sup_min = rep.braid.sup();
  auto const& simples = kernels::simples_of(x.strands());
  std::deque<CanonicalBraid> queue{rep.braid};
  out.elements.emplace(rep.braid, rep.witness);
  while (!queue.empty()) {
    CanonicalBraid y = std::move(queue.front());
    queue.pop_front();
    BraidWord const wy = out.elements.at(y);
    auto images = exec == Execution::parallel
                      ? kernels::simple_conjugates_parallel(y, simples)
                      : kernels::simple_conjugates_serial(y, simples);
    for (std::size_t i = 0; i < images.size(); ++i) {
      CanonicalBraid const& z = images[i];
      if (z.inf() > out.inf_max || z.sup() < out.sup_min) {
        throw std::logic_error(
            "super_summit_set: summit representative was not extremal");
      }
      if (z.inf() != out.inf_max || z.sup() != out.sup_min) {
        continue;
      }
      if (out.elements.contains(z)) {
        continue;
      }
      out.elements.emplace(z, free_reduce(wy * word_of_simple(simples[i])));
      queue.push_back(z);
    }
  }
  return out;
}

SuperSummitSet super_summit_set(BraidWord const& x, Execution exec) {
  return super_summit_set(CanonicalBraid::from_word(x), exec);
}

std::optional<BraidWord> conjugacy_decide(BraidWord const& u,
                                          BraidWord const& v,
                                          Execution exec) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("conjugacy_decide: strand mismatch");
  }
  if (exponent_sum(u) != exponent_sum(v) ||
      underlying_permutation(u).cycle_type() !=
          underlying_permutation(v).cycle_type()) {
    return std::nullopt;
  }
  CanonicalBraid cu = CanonicalBraid::from_word(u);
  CanonicalBraid cv = CanonicalBraid::from_word(v);
  if (cu == cv) {
    return BraidWord(u.strands());
  }
  SummitElement rv = summit_representative(cv);
  SuperSummitSet sss = super_summit_set(cu, exec);
  auto it = sss.elements.find(rv.braid);
  if (it == sss.elements.end()) {
    return std::nullopt;
  }
  BraidWord c = free_reduce(it->second * invert_word(rv.witness));
  if (CanonicalBraid::from_word(conjugate(u, c)) != cv) {
    throw std::logic_error("conjugacy_decide: witness failed to verify");
  }
  return c;
}

}  // namespace tbraid
