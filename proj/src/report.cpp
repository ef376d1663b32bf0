#include "hhlie/report.hpp"

#include <sstream>

#include "hhlie/errors.hpp"
#include "hhlie/oracle.hpp"

namespace hhlie {

using nlohmann::json;

Presentation with_options(Presentation p, const AnalysisOptions& opt) {
  if (opt.field) p.field = *opt.field;
  if (opt.max_length) p.max_length_cap = *opt.max_length;
  return p;
}

LieSummary summarize(const AlgebraTable& a, bool rad_only) {
  DerSpace der = derivation_space(a);
  if (rad_only) der = radical_filter(der, a);
  DerSpace inn = inner_space(a);
  LieAlgebra l = outer_quotient(a, der, inn);
  SeriesResult derived = derived_series(l);
  SeriesResult lower = lower_central_series(l);
  return LieSummary{der.dim(), inn.dim(), std::move(l), std::move(derived), std::move(lower)};
}

AnalysisReport analyze(const Presentation& input, const AnalysisOptions& opt) {
  Presentation p = with_options(input, opt);
  const bool char2 = p.field.characteristic() == 2;
  if (char2 && opt.decompose)
    throw Error(ErrorKind::unsupported_characteristic,
                "the Kronecker decomposition needs characteristic != 2");
  AlgebraTable a = build_algebra(p);
  LieSummary full = summarize(a, false);
  LieSummary rad = summarize(a, true);
  AnalysisReport r{p,
                   a,
                   std::move(full),
                   std::move(rad),
                   loop_criterion(a),
                   classify_components(separated_quiver(a.quiver())),
                   reptype_radsq(a.quiver()),
                   std::nullopt,
                   std::nullopt};
  if (!char2) r.chains = decomposition_report(r.algebra, r.hh1_rad.algebra, opt.assert_nonwild);
  if (opt.oracle) {
    OracleCheck o;
    const MultTable t = r.algebra.to_table();
    o.bar_hh1_dim = bar_hh1_dim(t);
    o.agrees = o.bar_hh1_dim == r.hh1.algebra.dim();
    o.composite_vanishes = composite_vanishes(cochain_problem(t));
    r.oracle = o;
  }
  return r;
}

namespace {

json scalars(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.get_str());
  return out;
}

std::string series_text(const SeriesResult& s) {
  std::string out;
  for (std::size_t i = 0; i < s.dims.size(); ++i) out += (i ? " > " : "") + std::to_string(s.dims[i]);
  return out;
}

}  // namespace

json lie_json(const LieSummary& s) {
  const LieAlgebra& l = s.algebra;
  json brackets = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!is_zero(l.bracket(i, j)))
        brackets.push_back({{"i", i}, {"j", j}, {"value", scalars(l.bracket(i, j))}});
  return {{"dim", l.dim()},
          {"der_dim", s.der_dim},
          {"inn_dim", s.inn_dim},
          {"solvable", s.derived.terminates},
          {"nilpotent", s.lower_central.terminates},
          {"derived_series", s.derived.dims},
          {"lower_central_series", s.lower_central.dims},
          {"brackets", brackets}};
}

json septype_json(const Quiver& q, const GraphClass& g, RepType r) {
  json comps = json::array();
  for (const auto& c : g.components) {
    json vs = json::array();
    for (auto v : c.vertices) vs.push_back(q.vertices()[v]);
    comps.push_back({{"vertices", vs},
                     {"verdict", std::string(to_string(c.verdict))},
                     {"name", c.name.empty() ? json(nullptr) : json(c.name)}});
  }
  return {{"radical_square_type", std::string(to_string(r))},
          {"separated_components", comps},
          {"all_dynkin_or_euclidean", g.all_dynkin_or_euclidean()}};
}

json chains_json(const ChainReport& c) {
  json classes = json::array();
  for (const auto& cr : c.classes) {
    json members = json::array();
    for (const auto& m : cr.chain_class.members) members.push_back(m.to_string());
    json pairs = json::array();
    for (const auto& pd : cr.deltas)
      pairs.push_back({{"pair", {pd.pair.label_a, pd.pair.label_b}},
                       {"image_dim", pd.delta.image_dim},
                       {"kernel_dim", pd.delta.kernel_basis.size()}});
    json entry = {{"chain", cr.chain_class.representative.to_string()},
                  {"shape", std::string(to_string(cr.chain_class.representative.shape))},
                  {"members", members},
                  {"surjective", cr.surjective},
                  {"kernels_coincide", cr.kernels_coincide},
                  {"delta", pairs},
                  {"literal_standard",
                   {{"s1", cr.literal.s1},
                    {"s2", cr.literal.s2},
                    {"s3", cr.literal.s3},
                    {"witnesses", cr.literal.witnesses}}}};
    if (cr.delta_undefined) entry["note"] = cr.note;
    classes.push_back(std::move(entry));
  }
  return classes;
}

json to_json(const AnalysisReport& r) {
  const AlgebraTable& a = r.algebra;
  json j;
  j["algebra"] = {{"field", a.field().to_string()},
                  {"vertices", a.quiver().num_vertices()},
                  {"arrows", a.quiver().num_arrows()},
                  {"dim", a.dim()},
                  {"rad_dims", a.rad_dims()},
                  {"groebner_size", a.groebner().size()}};
  j["hh1"] = lie_json(r.hh1);
  j["hh1_rad"] = lie_json(r.hh1_rad);
  json loops = json::array();
  for (const auto& l : r.loops.loops)
    loops.push_back({{"arrow", a.quiver().arrow(l.arrow).label}, {"n", l.n}});
  j["loop_criterion"] = {{"loops", loops}, {"product", r.loops.product.get_str()}, {"holds", r.loops.holds}};
  j["septype"] = septype_json(separated_quiver(a.quiver()), r.separated, r.radsq_type);
  json flags;
  if (r.chains) {
    const ChainReport& c = *r.chains;
    j["chains"] = chains_json(c);
    j["m"] = c.m;
    j["decomposition"] = {{"solvable_part_dim", c.solvable_part_dim},
                          {"joint_kernel_dim", c.joint_kernel.size()},
                          {"joint_kernel_derived_series", c.joint_kernel_series.dims},
                          {"joint_kernel_solvable", c.joint_kernel_solvable},
                          {"solvable_iff_m_zero", c.solvable_iff_m_zero}};
    flags = {{"char_ne_2", c.flags.char_ne_2},
             {"qs_nonwild_compatible", c.flags.qs_nonwild_compatible},
             {"user_asserted_nonwild", c.flags.user_asserted_nonwild},
             {"conditional", c.flags.conditional}};
    if (!c.wild_classes.empty()) flags["wild_parallel_classes"] = c.wild_classes;
  } else {
    j["chains"] = nullptr;
    j["m"] = nullptr;
    flags = {{"char_ne_2", false},
             {"qs_nonwild_compatible", r.separated.all_dynkin_or_euclidean()},
             {"conditional", true}};
  }
  j["flags"] = flags;
  if (r.oracle)
    j["oracle"] = {{"bar_hh1_dim", r.oracle->bar_hh1_dim},
                   {"agrees", r.oracle->agrees},
                   {"composite_vanishes", r.oracle->composite_vanishes}};
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const AlgebraTable& a = r.algebra;
  std::ostringstream out;
  out << "algebra    dim " << a.dim() << " over " << a.field().to_string() << ", radical layers";
  for (auto d : a.rad_dims()) out << ' ' << d;
  out << "\n";
  auto lie = [&](const char* name, const LieSummary& s) {
    out << name << s.algebra.dim() << "  (Der " << s.der_dim << ", Inn " << s.inn_dim << ")  "
        << (s.derived.terminates ? "solvable" : "not solvable")
        << (s.lower_central.terminates ? ", nilpotent" : "") << "; derived series "
        << series_text(s.derived) << "\n";
  };
  lie("HH^1      dim ", r.hh1);
  lie("HH^1_rad  dim ", r.hh1_rad);
  out << "loops     ";
  if (r.loops.loops.empty()) out << " none";
  for (const auto& l : r.loops.loops) out << ' ' << a.quiver().arrow(l.arrow).label << ":n=" << l.n;
  out << (r.loops.holds ? "  (criterion holds)" : "  (criterion fails)") << "\n";
  out << "A/rad^2    " << to_string(r.radsq_type) << "; separated quiver";
  for (const auto& c : r.separated.components)
    out << ' ' << (c.name.empty() ? std::string(to_string(c.verdict)) : c.name);
  out << "\n";
  if (r.chains) {
    const ChainReport& c = *r.chains;
    if (c.classes.empty()) out << "chains     none\n";
    for (const auto& cr : c.classes) {
      out << "chain      " << cr.chain_class.representative.to_string() << ' '
          << to_string(cr.chain_class.representative.shape)
          << (cr.surjective ? "  surjective" : "  not surjective")
          << (cr.literal.all() ? ", standard relations" : "");
      if (!cr.literal.all()) {
        out << ", literal check fails:";
        for (const auto& w : cr.literal.witnesses) out << ' ' << w;
      }
      if (cr.delta_undefined) out << "  [" << cr.note << "]";
      out << "\n";
    }
    out << "m          " << c.m << "; solvable part dim " << c.solvable_part_dim;
    if (c.flags.conditional) out << " (conditional)";
    out << "\n";
  } else {
    out << "m          not computed in characteristic 2\n";
  }
  if (r.oracle)
    out << "oracle     bar complex HH^1 dim " << r.oracle->bar_hh1_dim
        << (r.oracle->agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  return out.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unsupported_characteristic:
    case ErrorKind::too_large:
    case ErrorKind::delta_undefined:
      return 3;
    default:
      return 2;
  }
}

}  // namespace hhlie
