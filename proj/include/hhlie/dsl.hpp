#pragma once

// Reading and writing presentations: the line-oriented text format
//
//   field Q            # or fp:5
//   vertex 1 2 3
//   arrow a 1 2
//   relation 2/3 * (a*c) - (b*d)
//
// and the equivalent JSON object
//   {field, vertices, arrows: [{label, src, dst}], relations: [[{coef, path}]]}.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hhlie/algebra.hpp"

namespace hhlie {

/// Throws ParseError with the line and column of the offending token.
Presentation parse_dsl(std::string_view text);
std::string render_dsl(const Presentation& p);

Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);

/// Dispatches on the first non-blank character: '{' means JSON.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

}  // namespace hhlie
