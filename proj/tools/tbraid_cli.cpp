#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbraid/automorphism.hpp"
#include "tbraid/conjugacy.hpp"
#include "tbraid/extension.hpp"
#include "tbraid/io.hpp"
#include "tbraid/normal_form.hpp"
#include "tbraid/twisted.hpp"

using namespace tbraid;
using nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool parallel = false;
  int strands = 0;
  int max_length = kDefaultClassifyLength;
  std::string file;
  std::string u;
  std::string v;
  std::string h1;
  std::string h2;
};

Execution exec_of(Options const& o) {
  return o.parallel ? Execution::parallel : Execution::serial;
}

std::string factor_list(CanonicalBraid const& x) {
  std::string out;
  for (auto const& s : x.factors()) {
    out += " \"" + to_string(word_of_simple(s)) + "\"";
  }
  return out;
}

int emit_decision(Options const& o, std::optional<std::string> witness) {
  if (o.json) {
    json j = {{"result", witness ? "YES" : "NO"}};
    if (witness) {
      j["witness"] = *witness;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (witness ? *witness : "NO") << '\n';
  }
  return witness ? kYes : kNo;
}

int run_nf(Options const& o) {
  CanonicalBraid x = CanonicalBraid::from_word(parse_word(o.strands, o.u));
  if (o.json) {
    json j = to_json(x);
    j["sup"] = x.sup();
    j["len"] = x.canonical_length();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "inf " << x.inf() << '\n'
              << "factors" << factor_list(x) << '\n'
              << "sup " << x.sup() << '\n'
              << "len " << x.canonical_length() << '\n';
  }
  return kYes;
}

int run_conj(Options const& o) {
  BraidWord u = parse_word(o.strands, o.u);
  BraidWord v = parse_word(o.strands, o.v);
  auto c = conjugacy_decide(u, v, exec_of(o));
  if (c && !equal(conjugate(u, *c), v)) {
    throw std::logic_error("conjugator failed to verify");
  }
  return emit_decision(o, c ? std::optional(to_string(*c)) : std::nullopt);
}

int run_tconj(Options const& o) {
  BraidWord u = parse_word(o.strands, o.u);
  BraidWord v = parse_word(o.strands, o.v);
  auto w = eps_twisted_decide(u, v, exec_of(o));
  if (w && !equal(twisted_conjugate(u, w->word), v)) {
    throw std::logic_error("twisted witness failed to verify");
  }
  return emit_decision(o, w ? std::optional(to_string(w->word)) : std::nullopt);
}

int run_mpf(Options const& o) {
  BraidWord x = parse_word(o.strands, o.u);
  MpfSet s = compute_mpf(x, exec_of(o));
  for (auto const& [z, w] : s.elements) {
    if (!equal(twisted_conjugate(x, w.word), z.to_word())) {
      throw std::logic_error("mpf witness failed to verify");
    }
  }
  if (o.json) {
    std::cout << to_json(s).dump() << '\n';
  } else {
    for (auto const& w : sorted_words(s)) {
      std::cout << to_string(w) << '\n';
    }
    std::cout << "length " << s.length << '\n';
  }
  return kYes;
}

int run_classify(Options const& o) {
  AutByImages phi = read_automorphism_file(o.file);
  NormalizedAut f = classify(phi, o.max_length);
  for (int i = 1; i <= phi.strands().generators(); ++i) {
    BraidWord s(phi.strands(), {i});
    if (!equal(apply_aut(f, s), phi.image(i))) {
      throw std::logic_error("classification failed to verify");
    }
  }
  if (o.json) {
    std::cout << to_json(f).dump() << '\n';
  } else {
    std::cout << "w " << to_string(f.w) << '\n' << "e " << f.e << '\n';
  }
  return kYes;
}

int run_twisted(Options const& o) {
  AutByImages phi = read_automorphism_file(o.file);
  NormalizedAut f = classify(phi, o.max_length);
  BraidWord u = parse_word(phi.strands(), o.u);
  BraidWord v = parse_word(phi.strands(), o.v);
  auto x = twisted_decide(f, u, v, exec_of(o));
  if (x && !equal(invert_word(phi.apply(*x)) * u * *x, v)) {
    throw std::logic_error("twisted witness failed to verify");
  }
  return emit_decision(o, x ? std::optional(to_string(*x)) : std::nullopt);
}

int run_orbit(Options const& o) {
  ActionSpec spec = read_action_spec_file(o.file, o.max_length);
  BraidWord u = parse_word(spec.strands, o.u);
  BraidWord v = parse_word(spec.strands, o.v);
  auto ow = orbit_decide(spec, u, v, exec_of(o));
  if (ow && !equal(conjugate(apply_aut(ow->alpha, u), ow->conjugator), v)) {
    throw std::logic_error("orbit witness failed to verify");
  }
  if (!ow) {
    return emit_decision(o, std::nullopt);
  }
  if (o.json) {
    std::cout << json{{"result", "YES"},
                      {"k", to_string(ow->k)},
                      {"alpha", to_json(ow->alpha)},
                      {"conjugator", to_string(ow->conjugator)}}
                     .dump()
              << '\n';
  } else {
    std::cout << "k " << to_string(ow->k) << '\n'
              << "conjugator " << to_string(ow->conjugator) << '\n';
  }
  return kYes;
}

int run_ext_conj(Options const& o) {
  ActionSpec spec = read_action_spec_file(o.file, o.max_length);
  SemidirectElement g1{parse_word(spec.strands, o.u),
                       parse_free_word(spec.rank, o.h1)};
  SemidirectElement g2{parse_word(spec.strands, o.v),
                       parse_free_word(spec.rank, o.h2)};
  auto c = ext_conjugacy(spec, g1, g2, exec_of(o));
  if (c && !sd_equal(sd_conjugate(g1, *c, spec), g2)) {
    throw std::logic_error("extension conjugator failed to verify");
  }
  if (!c) {
    return emit_decision(o, std::nullopt);
  }
  if (o.json) {
    std::cout << json{{"result", "YES"},
                      {"x", to_string(c->b)},
                      {"k", to_string(c->h)}}
                     .dump()
              << '\n';
  } else {
    std::cout << "x " << to_string(c->b) << '\n'
              << "k " << to_string(c->h) << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group normal forms and (twisted) conjugacy"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Structured output");
  app.add_flag("--parallel", o.parallel, "Use the OpenMP kernels");

  auto strands = [&](CLI::App* sub) {
    sub->add_option("--strands,-n", o.strands, "Number of strands")
        ->required()
        ->check(CLI::Range(2, kMaxStrands));
  };
  auto max_len = [&](CLI::App* sub) {
    sub->add_option("--max-length", o.max_length,
                    "Longest conjugator tried by classification")
        ->check(CLI::NonNegativeNumber);
  };

  auto* nf = app.add_subcommand("nf", "Left normal form");
  strands(nf);
  nf->add_option("w", o.u, "Braid word")->required();

  auto* conj = app.add_subcommand("conj", "Conjugacy: c with c^-1 u c = v");
  strands(conj);
  conj->add_option("u", o.u)->required();
  conj->add_option("v", o.v)->required();

  auto* tconj =
      app.add_subcommand("tconj", "Eps-twisted conjugacy: rev(w) u w = v");
  strands(tconj);
  tconj->add_option("u", o.u)->required();
  tconj->add_option("v", o.v)->required();

  auto* mpf = app.add_subcommand("mpf", "Minimal palindromic-free set");
  strands(mpf);
  mpf->add_option("x", o.u)->required();

  auto* cls = app.add_subcommand("classify", "Write an automorphism as (w, e)");
  cls->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  max_len(cls);

  auto* tw = app.add_subcommand("twisted", "phi-twisted conjugacy");
  tw->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  tw->add_option("u", o.u)->required();
  tw->add_option("v", o.v)->required();
  max_len(tw);

  auto* orb = app.add_subcommand("orbit", "Orbit decision for an action");
  orb->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  orb->add_option("u", o.u)->required();
  orb->add_option("v", o.v)->required();
  max_len(orb);

  auto* ext = app.add_subcommand("ext-conj", "Conjugacy in B_n x| F_m");
  ext->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  ext->add_option("b1", o.u)->required();
  ext->add_option("h1", o.h1)->required();
  ext->add_option("b2", o.v)->required();
  ext->add_option("h2", o.h2)->required();
  max_len(ext);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*nf) return run_nf(o);
    if (*conj) return run_conj(o);
    if (*tconj) return run_tconj(o);
    if (*mpf) return run_mpf(o);
    if (*cls) return run_classify(o);
    if (*tw) return run_twisted(o);
    if (*orb) return run_orbit(o);
    if (*ext) return run_ext_conj(o);
  } catch (BraidError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
