#include "tbraid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tbraid {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    out.push_back(line.substr(first));
  }
  return out;
}

std::string slurp(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AutByImages images_from_lines(StrandCount n, std::vector<std::string> const& lines,
                              std::size_t first) {
  std::vector<BraidWord> images;
  for (int i = 0; i < n.generators(); ++i) {
    images.push_back(parse_word(n, lines.at(first + i)));
  }
  return AutByImages(n, std::move(images));
}

}  // namespace

AutByImages parse_automorphism(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError("automorphism file has no images");
  }
  StrandCount n(static_cast<int>(lines.size()) + 1);
  return images_from_lines(n, lines, 0);
}

AutByImages read_automorphism_file(std::filesystem::path const& path) {
  return parse_automorphism(slurp(path));
}

ActionSpec parse_action_spec(std::string_view text, int max_length) {
  auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError("extension spec is empty");
  }
  std::istringstream header(lines[0]);
  int n = 0;
  int m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || m < 1) {
    throw ParseError("extension spec header must be \"n m\" with m >= 1");
  }
  StrandCount strands(n);
  std::size_t const need = 1 + static_cast<std::size_t>(m) * strands.generators();
  if (lines.size() != need) {
    throw ParseError("extension spec: expected " + std::to_string(need - 1) +
                     " image lines, got " + std::to_string(lines.size() - 1));
  }
  ActionSpec spec{strands, m, {}};
  for (int i = 0; i < m; ++i) {
    spec.gen_images.push_back(classify(
        images_from_lines(strands, lines, 1 + i * strands.generators()),
        max_length));
  }
  return spec;
}

ActionSpec read_action_spec_file(std::filesystem::path const& path,
                                 int max_length) {
  return parse_action_spec(slurp(path), max_length);
}

nlohmann::json to_json(CanonicalBraid const& x) {
  nlohmann::json factors = nlohmann::json::array();
  for (auto const& s : x.factors()) {
    factors.push_back(s.permutation().images());
  }
  return {{"inf", x.inf()}, {"factors", std::move(factors)}};
}

CanonicalBraid normal_form_from_json(nlohmann::json const& j, StrandCount n) {
  try {
    std::vector<SimpleElement> factors;
    for (auto const& f : j.at("factors")) {
      if (static_cast<int>(f.size()) != n.value()) {
        throw ParseError("normal form json: factor of the wrong size");
      }
      factors.push_back(
          SimpleElement::from_permutation(Permutation(f.get<std::vector<int>>())));
    }
    return CanonicalBraid::from_factors(n, j.at("inf").get<int>(), factors);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("normal form json: ") + e.what());
  }
}

std::vector<BraidWord> sorted_words(MpfSet const& s) {
  std::vector<BraidWord> out;
  for (auto const& [x, w] : s.elements) {
    out.push_back(positive_word(x));
  }
  std::sort(out.begin(), out.end(), [](BraidWord const& a, BraidWord const& b) {
    return a.letters() < b.letters();
  });
  return out;
}

nlohmann::json to_json(NormalizedAut const& f) {
  return {{"w", to_string(f.w)}, {"e", f.e}};
}

nlohmann::json to_json(MpfSet const& s) {
  nlohmann::json elements = nlohmann::json::array();
  for (auto const& w : sorted_words(s)) {
    elements.push_back(to_string(w));
  }
  return {{"length", s.length}, {"elements", std::move(elements)}};
}

}  // namespace tbraid
