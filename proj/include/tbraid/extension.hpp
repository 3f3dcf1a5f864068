#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbraid/automorphism.hpp"
#include "tbraid/parallel.hpp"
#include "tbraid/word.hpp"

namespace tbraid {

// A word in t_1^{+-1}, ..., t_m^{+-1}, letters encoded like braid letters.
class FreeWord {
 public:
  explicit FreeWord(int rank) : rank_(rank) {}
  FreeWord(int rank, std::vector<int> letters);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] std::vector<int> const& letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }

  [[nodiscard]] FreeWord reduced() const;
  [[nodiscard]] FreeWord inverse() const;
  friend FreeWord operator*(FreeWord const& a, FreeWord const& b);
  // Equality in F_m.
  [[nodiscard]] bool same_element(FreeWord const& other) const {
    return reduced().letters_ == other.reduced().letters_;
  }
  bool operator==(FreeWord const&) const = default;

 private:
  int rank_;
  std::vector<int> letters_;
};

FreeWord parse_free_word(int rank, std::string_view text);
std::string to_string(FreeWord const& h);
FreeWord free_power(FreeWord const& h, int k);

// psi(t_i) for i = 1..m.  Multiplication in B_n x| F_m is
// (b1, h1)(b2, h2) = (b1 psi_{h1}(b2), h1 h2), so t b t^{-1} = psi_t(b).
struct ActionSpec {
  StrandCount strands;
  int rank;
  std::vector<NormalizedAut> gen_images;
};

struct SemidirectElement {
  BraidWord b;
  FreeWord h;
};

// C(h) = <root> and h = root^power (h nontrivial).
struct CentralizerData {
  FreeWord root;
  int power;
  std::vector<FreeWord> coset_reps;
};

// k with k^{-1} h k == h2 in F_m.
std::optional<FreeWord> free_conjugacy(FreeWord const& h, FreeWord const& h2);
// TrivialElement for h = 1.
CentralizerData centralizer_data(FreeWord const& h);

NormalizedAut psi_of(ActionSpec const& spec, FreeWord const& h);

SemidirectElement sd_multiply(SemidirectElement const& a,
                              SemidirectElement const& b,
                              ActionSpec const& spec);
SemidirectElement sd_invert(SemidirectElement const& a, ActionSpec const& spec);
SemidirectElement sd_identity(ActionSpec const& spec);
bool sd_equal(SemidirectElement const& a, SemidirectElement const& b);
// c^{-1} g c.
SemidirectElement sd_conjugate(SemidirectElement const& g,
                               SemidirectElement const& c,
                               ActionSpec const& spec);

struct OrbitWitness {
  FreeWord k;
  NormalizedAut alpha;  // psi_k
  BraidWord conjugator;  // c^{-1} alpha(u) c == v
};

// Is v conjugate to alpha(u) for some alpha in the image of psi?
std::optional<OrbitWitness> orbit_decide(ActionSpec const& spec,
                                         BraidWord const& u,
                                         BraidWord const& v,
                                         Execution exec = Execution::serial);

// A c with c^{-1} g1 c == g2.
std::optional<SemidirectElement> ext_conjugacy(
    ActionSpec const& spec, SemidirectElement const& g1,
    SemidirectElement const& g2, Execution exec = Execution::serial);

}  // namespace tbraid
