#pragma once

#include <optional>
#include <vector>

#include "tbraid/parallel.hpp"
#include "tbraid/word.hpp"

namespace tbraid {

// An endomorphism of B_n given by the images of sigma_1, ..., sigma_{n-1}.
// The braid relations are checked on construction (NotAutomorphism).
class AutByImages {
 public:
  AutByImages(StrandCount n, std::vector<BraidWord> images);

  [[nodiscard]] StrandCount strands() const noexcept { return n_; }
  [[nodiscard]] std::vector<BraidWord> const& images() const noexcept {
    return images_;
  }
  [[nodiscard]] BraidWord const& image(int i) const { return images_.at(i - 1); }
  // Substitutes the images letter by letter.
  [[nodiscard]] BraidWord apply(BraidWord const& x) const;

 private:
  StrandCount n_;
  std::vector<BraidWord> images_;
};

// phi(x) = w^{-1} eps^e(x) w.  Every automorphism of B_n has this shape.
struct NormalizedAut {
  BraidWord w;
  int e = 0;

  [[nodiscard]] StrandCount strands() const noexcept { return w.strands(); }
};

NormalizedAut identity_aut(StrandCount n);
NormalizedAut eps_aut(StrandCount n);
NormalizedAut inner_aut(BraidWord w);

BraidWord apply_aut(NormalizedAut const& f, BraidWord const& x);
// f o g.
NormalizedAut compose(NormalizedAut const& f, NormalizedAut const& g);
NormalizedAut invert_aut(NormalizedAut const& f);
// Equal e, and w' w^{-1} central.
bool same_automorphism(NormalizedAut const& f, NormalizedAut const& g);
// The images of the generators.
AutByImages to_images(NormalizedAut const& f);

inline constexpr int kDefaultClassifyLength = 8;

// (w, e) with phi = gamma_w o eps^e.  e comes from phi(Delta^2); w from an
// iterative-deepening search over freely reduced words of length at most
// max_length.  NotAutomorphism when phi(Delta^2) is not Delta^{+-2} or no w
// is found within the bound.
NormalizedAut classify(AutByImages const& phi,
                       int max_length = kDefaultClassifyLength);

// An x with phi(x)^{-1} u x == v, or nullopt.
std::optional<BraidWord> twisted_decide(NormalizedAut const& phi,
                                        BraidWord const& u, BraidWord const& v,
                                        Execution exec = Execution::serial);
std::optional<BraidWord> twisted_decide(AutByImages const& phi,
                                        BraidWord const& u, BraidWord const& v,
                                        Execution exec = Execution::serial,
                                        int max_length = kDefaultClassifyLength);

}  // namespace tbraid
