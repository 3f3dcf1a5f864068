#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tbraid/automorphism.hpp"
#include "tbraid/extension.hpp"
#include "tbraid/normal_form.hpp"
#include "tbraid/twisted.hpp"

namespace tbraid {

// One image per line, sigma_1 first; blank lines and lines starting with
// '#' are skipped.  The strand count is the number of images plus one.
AutByImages parse_automorphism(std::string_view text);
AutByImages read_automorphism_file(std::filesystem::path const& path);

// "n m" on the first line, then m blocks of n - 1 image lines.  Each block
// is classified on load.
ActionSpec parse_action_spec(std::string_view text,
                             int max_length = kDefaultClassifyLength);
ActionSpec read_action_spec_file(std::filesystem::path const& path,
                                 int max_length = kDefaultClassifyLength);

// {"inf": p, "factors": [[images of x_1], ...]}
nlohmann::json to_json(CanonicalBraid const& x);
CanonicalBraid normal_form_from_json(nlohmann::json const& j, StrandCount n);

// Positive words of the elements, sorted lexicographically by letters.
std::vector<BraidWord> sorted_words(MpfSet const& s);

nlohmann::json to_json(NormalizedAut const& f);
nlohmann::json to_json(MpfSet const& s);

}  // namespace tbraid
