#include "tbraid/extension.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "tbraid/conjugacy.hpp"
#include "tbraid/normal_form.hpp"

namespace tbraid {

FreeWord::FreeWord(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  for (int k : letters_) {
    if (k == 0 || std::abs(k) > rank_) {
      throw InvalidLetter("free letter " + std::to_string(k) +
                          " out of range for rank " + std::to_string(rank_));
    }
  }
}

FreeWord FreeWord::reduced() const {
  FreeWord out(rank_);
  for (int k : letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -k) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(k);
    }
  }
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);
  }
  return out;
}

FreeWord operator*(FreeWord const& a, FreeWord const& b) {
  if (a.rank_ != b.rank_) {
    throw StrandMismatch("free words of different rank");
  }
  FreeWord out = a;
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out.reduced();
}

FreeWord parse_free_word(int rank, std::string_view text) {
  return FreeWord(rank, parse_letters(text));
}

std::string to_string(FreeWord const& h) {
  std::string out;
  for (int k : h.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(k);
  }
  return out;
}

FreeWord free_power(FreeWord const& h, int k) {
  FreeWord base = k < 0 ? h.inverse() : h;
  FreeWord out(h.rank());
  for (int i = 0; i < std::abs(k); ++i) {
    out = out * base;
  }
  return out;
}

namespace {

// h = a c a^{-1} with c cyclically reduced.
struct CyclicForm {
  FreeWord a;
  std::vector<int> core;
};

CyclicForm cyclic_form(FreeWord const& h) {
  std::vector<int> r = h.reduced().letters();
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return {FreeWord(h.rank(), std::vector<int>(r.begin(), r.begin() + i)),
          std::vector<int>(r.begin() + i, r.begin() + j)};
}

}  // namespace

std::optional<FreeWord> free_conjugacy(FreeWord const& h, FreeWord const& h2) {
  if (h.rank() != h2.rank()) {
    throw StrandMismatch("free_conjugacy: rank mismatch");
  }
  CyclicForm ch = cyclic_form(h);
  CyclicForm ch2 = cyclic_form(h2);
  std::size_t const len = ch.core.size();
  if (len != ch2.core.size()) {
    return std::nullopt;
  }
  // For c = p q and q p = c2: p^{-1} c p = c2.
  for (std::size_t s = 0; s == 0 || s < len; ++s) {
    std::vector<int> rotated(ch.core.begin() + s, ch.core.end());
    rotated.insert(rotated.end(), ch.core.begin(), ch.core.begin() + s);
    if (rotated != ch2.core) {
      continue;
    }
    FreeWord p(h.rank(),
               std::vector<int>(ch.core.begin(), ch.core.begin() + s));
    FreeWord k = ch.a * p * ch2.a.inverse();
    if (!(k.inverse() * h * k).same_element(h2)) {
      throw std::logic_error("free_conjugacy: witness failed to verify");
    }
    return k;
  }
  return std::nullopt;
}

CentralizerData centralizer_data(FreeWord const& h) {
  CyclicForm ch = cyclic_form(h);
  std::size_t const len = ch.core.size();
  if (len == 0) {
    throw TrivialElement("centralizer_data: h is trivial");
  }
  std::size_t period = len;
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) {
      periodic = ch.core[i] == ch.core[i - d];
    }
    if (periodic) {
      period = d;
      break;
    }
  }
  FreeWord s(h.rank(),
             std::vector<int>(ch.core.begin(), ch.core.begin() + period));
  CentralizerData out{ch.a * s * ch.a.inverse(),
                      static_cast<int>(len / period),
                      {}};
  for (int j = 0; j < out.power; ++j) {
    out.coset_reps.push_back(free_power(out.root, j));
  }
  return out;
}

NormalizedAut psi_of(ActionSpec const& spec, FreeWord const& h) {
  NormalizedAut out = identity_aut(spec.strands);
  FreeWord const r = h.reduced();
  for (int k : r.letters()) {
    NormalizedAut const& g = spec.gen_images.at(std::abs(k) - 1);
    out = compose(out, k > 0 ? g : invert_aut(g));
  }
  return out;
}

SemidirectElement sd_multiply(SemidirectElement const& a,
                              SemidirectElement const& b,
                              ActionSpec const& spec) {
  return {free_reduce(a.b * apply_aut(psi_of(spec, a.h), b.b)), a.h * b.h};
}

SemidirectElement sd_invert(SemidirectElement const& a,
                            ActionSpec const& spec) {
  FreeWord hi = a.h.inverse().reduced();
  return {free_reduce(apply_aut(psi_of(spec, hi), invert_word(a.b))), hi};
}

SemidirectElement sd_identity(ActionSpec const& spec) {
  return {BraidWord(spec.strands), FreeWord(spec.rank)};
}

bool sd_equal(SemidirectElement const& a, SemidirectElement const& b) {
  return equal(a.b, b.b) && a.h.same_element(b.h);
}

SemidirectElement sd_conjugate(SemidirectElement const& g,
                               SemidirectElement const& c,
                               ActionSpec const& spec) {
  return sd_multiply(sd_multiply(sd_invert(c, spec), g, spec), c, spec);
}

std::optional<OrbitWitness> orbit_decide(ActionSpec const& spec,
                                         BraidWord const& u,
                                         BraidWord const& v, Execution exec) {
  // Up to conjugacy the orbit of u is {u}, plus eps(u) as soon as some
  // generator lies in the eps coset.
  if (auto c = conjugacy_decide(u, v, exec)) {
    return OrbitWitness{FreeWord(spec.rank), identity_aut(spec.strands),
                        std::move(*c)};
  }
  for (int i = 0; i < spec.rank; ++i) {
    NormalizedAut const& alpha = spec.gen_images[i];
    if (alpha.e != 1) {
      continue;
    }
    if (auto c = conjugacy_decide(apply_aut(alpha, u), v, exec)) {
      return OrbitWitness{FreeWord(spec.rank, {i + 1}), alpha, std::move(*c)};
    }
    break;
  }
  return std::nullopt;
}

std::optional<SemidirectElement> ext_conjugacy(ActionSpec const& spec,
                                               SemidirectElement const& g1,
                                               SemidirectElement const& g2,
                                               Execution exec) {
  // (x,k)^{-1} (u,h) (x,k) = (psi_{k^{-1}}(x^{-1} u psi_h(x)), k^{-1} h k)
  auto k0 = free_conjugacy(g1.h, g2.h);
  if (!k0) {
    return std::nullopt;
  }
  auto check = [&](SemidirectElement c) {
    if (!sd_equal(sd_conjugate(g1, c, spec), g2)) {
      throw std::logic_error("ext_conjugacy: witness failed to verify");
    }
    return c;
  };
  if (g1.h.reduced().empty()) {
    // Need x^{-1} u x = psi_k(v); orbit_decide gives c^{-1} psi_k(v) c = u.
    auto ow = orbit_decide(spec, g2.b, g1.b, exec);
    if (!ow) {
      return std::nullopt;
    }
    return check({free_reduce(invert_word(ow->conjugator)), ow->k});
  }
  // k = r^j h^m k0.  With phi = psi_{h^{-1}} and x = phi(y) the condition
  // becomes phi(y)^{-1} u y = psi_h^m(psi_{r^j k0}(v)), and the class of u
  // under phi-twisted conjugacy is closed under phi, so m = 0 suffices.
  CentralizerData cd = centralizer_data(g1.h);
  FreeWord hinv = g1.h.inverse().reduced();
  NormalizedAut phi = psi_of(spec, hinv);
  for (FreeWord const& rep : cd.coset_reps) {
    FreeWord k = rep * *k0;
    BraidWord target = free_reduce(apply_aut(psi_of(spec, k), g2.b));
    if (auto y = twisted_decide(phi, g1.b, target, exec)) {
      return check({free_reduce(apply_aut(phi, *y)), k});
    }
  }
  return std::nullopt;
}

}  // namespace tbraid
