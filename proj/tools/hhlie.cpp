// hhlie: first Hochschild cohomology of bound quiver algebras as a Lie algebra.
//
//   hhlie analyze FILE|DIR [--json] [--oracle] [--decompose] [--assert-nonwild]
//   hhlie hh1 FILE        hhlie chains FILE     hhlie septype FILE     hhlie oracle FILE

#include <algorithm>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "hhlie/dsl.hpp"
#include "hhlie/errors.hpp"
#include "hhlie/oracle.hpp"
#include "hhlie/report.hpp"

namespace fs = std::filesystem;
using namespace hhlie;
using nlohmann::json;

namespace {

struct Args {
  std::string input;
  bool json = false;
  std::string field;
  std::size_t max_length = 0;
  AnalysisOptions opt;
};

AnalysisOptions options(const Args& a) {
  AnalysisOptions o = a.opt;
  if (!a.field.empty()) o.field = Field::parse(a.field);
  if (a.max_length) o.max_length = a.max_length;
  return o;
}

void emit(const Args& a, const json& j, const std::string& text) {
  if (a.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int report_error(const Args& a, const std::string& file, const Error& e) {
  if (a.json) {
    json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!file.empty()) j["file"] = file;
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << (file.empty() ? "" : file + ": ") << to_string(e.kind()) << ": " << e.what() << "\n";
  return exit_code(e.kind());
}

std::vector<fs::path> inputs_in(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".dsl" || ext == ".json")) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int run_analyze(const Args& a) {
  const AnalysisOptions opt = options(a);
  if (!fs::is_directory(a.input)) {
    AnalysisReport r = analyze(load_presentation(a.input), opt);
    emit(a, to_json(r), to_text(r));
    return 0;
  }
  int status = 0;
  json all = json::object();
  for (const auto& path : inputs_in(a.input)) {
    const std::string name = path.filename().string();
    try {
      AnalysisReport r = analyze(load_presentation(path), opt);
      if (a.json) all[name] = to_json(r);
      else std::cout << "== " << name << "\n" << to_text(r) << "\n";
    } catch (const Error& e) {
      std::cerr << name << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
      if (a.json) all[name] = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
      status = std::max(status, exit_code(e.kind()));
    }
  }
  if (a.json) std::cout << all.dump(2) << "\n";
  return status;
}

int run_hh1(const Args& a) {
  const AlgebraTable t = build_algebra(with_options(load_presentation(a.input), options(a)));
  const LieSummary full = summarize(t, false);
  const LieSummary rad = summarize(t, true);
  const LoopCriterion loops = loop_criterion(t);
  json j = {{"dim", t.dim()}, {"hh1", lie_json(full)}, {"hh1_rad", lie_json(rad)},
            {"loop_criterion_holds", loops.holds}};
  std::string text = "HH^1 dim " + std::to_string(full.algebra.dim()) +
                     (full.derived.terminates ? " solvable" : " not solvable") + "\nHH^1_rad dim " +
                     std::to_string(rad.algebra.dim()) +
                     (rad.derived.terminates ? " solvable" : " not solvable") + "\n";
  emit(a, j, text);
  return 0;
}

int run_chains(const Args& a) {
  const AlgebraTable t = build_algebra(with_options(load_presentation(a.input), options(a)));
  const LieAlgebra h = hh1(t, true);
  const ChainReport c = decomposition_report(t, h, a.opt.assert_nonwild);
  std::string text;
  for (const auto& cr : c.classes)
    text += cr.chain_class.representative.to_string() + " " +
            std::string(to_string(cr.chain_class.representative.shape)) +
            (cr.surjective ? " surjective\n" : " not surjective\n");
  text += "m = " + std::to_string(c.m) + "\n";
  emit(a, {{"chains", chains_json(c)}, {"m", c.m}}, text);
  return 0;
}

int run_septype(const Args& a) {
  const Presentation p = with_options(load_presentation(a.input), options(a));
  const GraphClass g = classify_components(separated_quiver(p.quiver));
  const RepType r = reptype_radsq(p.quiver);
  std::string text = std::string(to_string(r)) + "\n";
  emit(a, septype_json(separated_quiver(p.quiver), g, r), text);
  return 0;
}

int run_oracle(const Args& a) {
  const AlgebraTable t = build_algebra(with_options(load_presentation(a.input), options(a)));
  const std::size_t bar = bar_hh1_dim(t);
  const std::size_t direct = hh1(t, false).dim();
  emit(a, {{"bar_hh1_dim", bar}, {"hh1_dim", direct}, {"agrees", bar == direct}},
       "bar complex " + std::to_string(bar) + ", derivations " + std::to_string(direct) +
           (bar == direct ? " (agree)\n" : " (DISAGREE)\n"));
  return bar == direct ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First Hochschild cohomology of bound quiver algebras as a Lie algebra"};
  app.require_subcommand(1);
  Args args;
  auto common = [&](CLI::App* sub) {
    sub->add_option("input", args.input, "presentation file (text or JSON)")->required();
    sub->add_flag("--json", args.json, "machine-readable output");
    sub->add_option("--field", args.field, "override the field: Q or fp:p");
    sub->add_option("--max-length", args.max_length, "cap on leading-word length of the reduction system");
    sub->add_flag("--assert-nonwild", args.opt.assert_nonwild, "assume the algebra is not wild");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for a file or every file in a directory");
  common(analyze_cmd);
  analyze_cmd->add_flag("--oracle", args.opt.oracle, "cross-check HH^1 with the cochain complex");
  analyze_cmd->add_flag("--decompose", args.opt.decompose, "require the Kronecker decomposition");
  auto* hh1_cmd = app.add_subcommand("hh1", "dimensions and solvability of HH^1 and HH^1_rad");
  common(hh1_cmd);
  auto* chains_cmd = app.add_subcommand("chains", "maximal Kronecker chains and m");
  common(chains_cmd);
  auto* septype_cmd = app.add_subcommand("septype", "separated quiver classification");
  common(septype_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "HH^1 from the Hochschild cochain complex");
  common(oracle_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(args);
    if (*hh1_cmd) return run_hh1(args);
    if (*chains_cmd) return run_chains(args);
    if (*septype_cmd) return run_septype(args);
    if (*oracle_cmd) return run_oracle(args);
  } catch (const Error& e) {
    return report_error(args, args.input, e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
