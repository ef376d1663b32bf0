#pragma once

// The full analysis of one presentation, and its text and JSON renderings.

#include <optional>
#include <string>

#include <json.hpp>

#include "hhlie/algebra.hpp"
#include "hhlie/derlie.hpp"
#include "hhlie/errors.hpp"
#include "hhlie/kronecker.hpp"
#include "hhlie/quiver.hpp"

namespace hhlie {

struct AnalysisOptions {
  bool oracle = false;
  bool decompose = false;  // demand the decomposition; refused in characteristic 2
  bool assert_nonwild = false;
  std::optional<Field> field;            // overrides the presentation's field
  std::optional<std::size_t> max_length; // cap on reduction-system leading words
};

struct LieSummary {
  std::size_t der_dim = 0;
  std::size_t inn_dim = 0;
  LieAlgebra algebra;
  SeriesResult derived;
  SeriesResult lower_central;
};

struct OracleCheck {
  std::size_t bar_hh1_dim = 0;
  bool agrees = false;
  bool composite_vanishes = false;
};

struct AnalysisReport {
  Presentation presentation;
  AlgebraTable algebra;
  LieSummary hh1;
  LieSummary hh1_rad;
  LoopCriterion loops;
  GraphClass separated;
  RepType radsq_type = RepType::wild;
  std::optional<ChainReport> chains;  // absent in characteristic 2
  std::optional<OracleCheck> oracle;
};

/// Applies the option overrides to a parsed presentation.
Presentation with_options(Presentation p, const AnalysisOptions& opt);

LieSummary summarize(const AlgebraTable& a, bool rad_only);
AnalysisReport analyze(const Presentation& p, const AnalysisOptions& opt);

nlohmann::json lie_json(const LieSummary& s);
/// q is the separated quiver the classification was computed on.
nlohmann::json septype_json(const Quiver& q, const GraphClass& g, RepType r);
nlohmann::json chains_json(const ChainReport& c);
nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

/// Exit status for an error kind: 2 for bad input, 3 for refused operations.
int exit_code(ErrorKind kind);

}  // namespace hhlie
