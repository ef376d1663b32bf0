// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>

#include "hhlie/errors.hpp"
#include "hhlie/kronecker.hpp"
#include "hhlie/oracle.hpp"
#include "hhlie/report.hpp"
#include "support.hpp"

using namespace hhlie;
using hhlie::fixtures::arrow;
using hhlie::fixtures::corpus;
using hhlie::fixtures::corpus_algebra;
using hhlie::fixtures::corpus_names;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

ChainReport chains_of(const AlgebraTable& a) { return decomposition_report(a, hh1(a, true)); }

bool solvable(const LieAlgebra& l) { return derived_series(l).terminates; }

Sl2Element delta_of_class(const AlgebraTable& a, const LieAlgebra& h, std::size_t k,
                          std::size_t i, std::size_t j) {
  DerivationCalculus calc(a);
  return delta_of(calc, h.representatives()[k], i, j);
}

Check kronecker() {
  Check c;
  auto a = corpus_algebra("kronecker");
  auto h = hh1(a, false);
  auto r = chains_of(a);
  c.require(h.dim() == 3, "hh1_dim != 3");
  c.require(!solvable(h), "solvable");
  c.require(r.m == 1, "m != 1");
  const Field& f = a.field();
  const Sl2Element H{1, 0, 0}, E{0, 1, 0}, F{0, 0, 1};
  c.require(sl2_bracket(f, H, E) == Sl2Element{0, 2, 0}, "[H,E] != 2E");
  c.require(sl2_bracket(f, H, F) == Sl2Element{0, 0, -2}, "[H,F] != -2F");
  c.require(sl2_bracket(f, E, F) == H, "[E,F] != H");
  auto hr = hh1(a, true);
  const std::size_t ia = arrow(a, "a"), ib = arrow(a, "b");
  auto d = delta_map(a, ia, ib, hr);
  c.require(d.image_dim == 3 && d.kernel_basis.empty(), "Delta not bijective");
  for (std::size_t u = 0; u < hr.dim(); ++u)
    for (std::size_t v = 0; v < hr.dim(); ++v) {
      const Vec& w = hr.bracket(u, v);
      Sl2Element lhs;
      for (std::size_t k = 0; k < hr.dim(); ++k) {
        Sl2Element dk = d.images[k];
        lhs.x += w[k] * dk.x;
        lhs.y += w[k] * dk.y;
        lhs.z += w[k] * dk.z;
      }
      c.require(lhs == sl2_bracket(f, d.images[u], d.images[v]), "Delta not a homomorphism");
    }
  return c;
}

Check double_kronecker() {
  Check c;
  auto a = corpus_algebra("double_kronecker");
  auto r = chains_of(a);
  c.require(hh1(a, false).dim() == 3, "hh1_dim != 3");
  c.require(r.m == 1, "m != 1");
  c.require(r.solvable_part_dim == 0 && r.joint_kernel.empty(), "dim r != 0");
  c.require(r.classes.size() == 1, "expected one chain class");
  if (r.classes.size() == 1) {
    const auto& cl = r.classes[0];
    c.require(cl.deltas.size() == 2, "expected two pairs");
    for (const auto& pd : cl.deltas) c.require(pd.delta.surjective, "pair not surjective");
    c.require(cl.kernels_coincide, "Delta kernels differ");
  }
  return c;
}

Check nonstandard_chain() {
  Check c;
  auto a = corpus_algebra("triple_kronecker");
  auto r = chains_of(a);
  c.require(hh1(a, false).dim() == 3, "hh1_dim != 3");
  c.require(solvable(hh1(a, false)), "not solvable");
  c.require(r.m == 0, "m != 0");
  c.require(r.classes.size() == 1, "expected one chain class");
  if (r.classes.size() == 1) {
    const auto& l = r.classes[0].literal;
    c.require(!l.s2, "S2 holds");
    auto has = [&](const std::string& w) {
      return std::find(l.witnesses.begin(), l.witnesses.end(), w) != l.witnesses.end();
    };
    c.require(has("a*d") && has("b*c"), "witnesses lack a*d, b*c");
  }
  return c;
}

Check loops_on_a_line() {
  Check c;
  auto a = corpus_algebra("loops_on_a_line");
  c.require(hh1(a, false).dim() == 4, "hh1_dim != 4");
  c.require(solvable(hh1(a, false)), "not solvable");
  c.require(kronecker_pairs(a).empty(), "has Kronecker pairs");
  return c;
}

Check kronecker_triangle() {
  Check c;
  auto a = corpus_algebra("kronecker_triangle");
  auto r = chains_of(a);
  c.require(hh1(a, false).dim() == 4, "hh1_dim != 4");
  c.require(!solvable(hh1(a, false)), "solvable");
  c.require(r.m == 1, "m != 1");
  c.require(r.solvable_part_dim == 1, "solvable part dim != 1");
  c.require(r.classes.size() == 1, "expected one class");
  if (r.classes.size() == 1) {
    const auto& rep = r.classes[0].chain_class.representative;
    c.require(rep.shape == ChainShape::cyclic && rep.pairs.size() == 3, "not a cyclic chain of length 3");
    c.require(r.classes[0].chain_class.members.size() == 3, "rotations not grouped");
  }
  return c;
}

Check kronecker_triangle_radsq() {
  Check c;
  auto a = corpus_algebra("kronecker_triangle_radsq");
  c.require(hh1(a, false).dim() == 10, "hh1_dim != 10");
  c.require(chains_of(a).m == 3, "m != 3");
  return c;
}

Check kronecker_tail() {
  Check c;
  Presentation p = corpus("kronecker_tail");
  auto a = build_algebra(p);
  c.require(hh1(a, false).dim() == 2, "hh1_dim != 2");
  c.require(solvable(hh1(a, false)), "not solvable");
  c.require(chains_of(a).m == 0, "m != 0");
  c.require(classify_components(separated_quiver(p.quiver)).contains("~A1"), "no ~A1 in separated quiver");
  return c;
}

Check truncated_polynomials() {
  Check c;
  for (std::size_t n : {3, 4, 5}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    auto a = corpus_algebra("truncated_poly_" + std::to_string(n));
    DerivationCalculus calc(a);
    c.require(derivation_space(a).dim() == n - 1, tag + "Der dim");
    auto power = [&](std::size_t i) {
      return a.normal_form(std::vector<PathTerm>{{Scalar(1), std::vector<std::string>(i, "x")}});
    };
    auto d = [&](std::size_t i) { return calc.from_images({power(i)}); };
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) {
        Vec expect(a.dim(), Scalar(0));
        if (i + j - 1 < n) {
          expect = power(i + j - 1);
          for (auto& x : expect) x *= long(j) - long(i);
        }
        c.require(calc.bracket(d(i), d(j)) == calc.from_images({expect}), tag + "bracket table");
      }
    auto h = hh1(a, false);
    c.require(solvable(h), tag + "not solvable");
    if (n == 5) c.require(!lower_central_series(h).terminates, tag + "nilpotent");
  }
  return c;
}

Check witt() {
  Check c;
  auto a = corpus_algebra("truncated_poly_3_f3");
  auto der = derivation_space(a);
  c.require(der.dim() == 3, "Der dim != 3");
  c.require(!solvable(hh1(a, false)), "Der solvable");
  c.require(radical_filter(der, a).dim() < der.dim(), "Der_rad not smaller");
  c.require(solvable(hh1(a, true)), "HH1_rad not solvable");
  auto l = loop_criterion(a);
  c.require(!l.holds && l.loops.size() == 1 && l.loops[0].n == 3, "loop criterion");
  return c;
}

Check trivial_extension() {
  Check c;
  auto a = corpus_algebra("trivial_extension_kronecker");
  auto r = chains_of(a);
  c.require(r.m == 1, "m != 1");
  c.require(!solvable(hh1(a, true)), "HH1_rad solvable");
  c.require(r.classes.size() == 1, "expected one class");
  if (r.classes.size() == 1) {
    const auto& cl = r.classes[0];
    c.require(cl.chain_class.representative.shape == ChainShape::cyclic &&
                  cl.chain_class.representative.pairs.size() == 2,
              "not a cyclic chain of length 2");
    c.require(cl.literal.all(), "standard relations fail");
  }
  return c;
}

Check kronecker_lines() {
  Check c;
  for (std::size_t n : {3, 4, 5}) {
    const std::string name = "radsq_kronecker_line_" + std::to_string(n);
    Presentation p = corpus(name);
    auto a = build_algebra(p);
    c.require(reptype_radsq(p.quiver) == RepType::tame, name + " not tame");
    c.require(!solvable(hh1(a, false)), name + " solvable");
    c.require(chains_of(a).m == 1, name + " m != 1");
  }
  return c;
}

Check oracle_equivalence() {
  Check c;
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    c.require(bar_hh1_dim(a) == hh1(a, false).dim(), name);
  }
  return c;
}

Check property_suite() {
  Check c;
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    DerivationCalculus calc(a);
    auto der = derivation_space(a);
    for (const auto& d : der.basis) c.require(calc.leibniz_holds(d), name + ": Leibniz");
    for (bool rad : {false, true}) c.require(hh1(a, rad).satisfies_jacobi(), name + ": Jacobi");
    auto l = loop_criterion(a);
    if (l.holds) c.require(hh1(a, false).dim() == hh1(a, true).dim(), name + ": loop criterion");
    if (a.field().characteristic() == 2) continue;
    const Quiver& q = a.quiver();
    auto rad = radical_filter(der, a);
    auto inn = inner_space(a);
    for (std::size_t i = 0; i < q.num_arrows(); ++i)
      for (std::size_t j = i + 1; j < q.num_arrows(); ++j) {
        if (!delta_defined(q, i, j)) continue;
        for (const auto& u : inn.basis) c.require(delta_of(calc, u, i, j) == Sl2Element{}, name + ": Delta(inner)");
        for (const auto& u : rad.basis)
          for (const auto& v : rad.basis)
            c.require(delta_of(calc, calc.bracket(u, v), i, j) ==
                          sl2_bracket(a.field(), delta_of(calc, u, i, j), delta_of(calc, v, i, j)),
                      name + ": Delta bracket");
      }
    for (const auto& cr : chains_of(a).classes)
      if (cr.literal.all() && !cr.delta_undefined) c.require(cr.surjective, name + ": literal => surjective");
  }
  return c;
}

Check hereditary_formula() {
  Check c;
  std::mt19937 rng(2024);
  for (int k = 0; k < 50; ++k) {
    Presentation p;
    p.quiver = fixtures::random_acyclic_quiver(rng, 6, 8);
    auto a = build_algebra(p);
    c.require(hereditary_hh1_dim(p.quiver) == bar_hh1_dim(a),
              "sample " + std::to_string(k) + " (dim " + std::to_string(a.dim()) + ")");
  }
  return c;
}

Check robustness() {
  Check c;
  std::mt19937 rng(7);
  const auto names = corpus_names();
  for (int k = 0; k < 20; ++k) {
    const std::string& name = names[k % names.size()];
    Presentation p = corpus(name);
    std::vector<std::size_t> perm(p.quiver.num_arrows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<long> s(-7, 7);
    std::vector<Scalar> scale;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      long v = 0;
      while (p.field.from_int(v) == 0) v = s(rng);
      scale.push_back(Scalar(v));
    }
    Presentation q = fixtures::rescale(fixtures::permute_arrows(p, perm), scale);
    AnalysisReport x = analyze(p, {}), y = analyze(q, {});
    const std::string tag = name + " #" + std::to_string(k) + ": ";
    c.require(x.algebra.dim() == y.algebra.dim() && x.algebra.rad_dims() == y.algebra.rad_dims(), tag + "algebra");
    c.require(x.hh1.der_dim == y.hh1.der_dim && x.hh1.inn_dim == y.hh1.inn_dim, tag + "Der/Inn");
    c.require(x.hh1.algebra.dim() == y.hh1.algebra.dim(), tag + "hh1");
    c.require(x.hh1_rad.algebra.dim() == y.hh1_rad.algebra.dim(), tag + "hh1_rad");
    c.require(x.hh1.derived.dims == y.hh1.derived.dims, tag + "derived series");
    c.require(x.chains.has_value() == y.chains.has_value(), tag + "chains");
    if (x.chains && y.chains) {
      c.require(x.chains->m == y.chains->m, tag + "m");
      c.require(x.chains->classes.size() == y.chains->classes.size(), tag + "classes");
    }
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"kronecker algebra is sl2", kronecker},
      {"two linked Kronecker pairs", double_kronecker},
      {"non-standard chain is solvable", nonstandard_chain},
      {"loops on a line", loops_on_a_line},
      {"cyclic chain of three pairs", kronecker_triangle},
      {"radical-square cycle of three pairs", kronecker_triangle_radsq},
      {"Kronecker pair with a killed tail", kronecker_tail},
      {"truncated polynomial brackets", truncated_polynomials},
      {"Witt algebra in characteristic 3", witt},
      {"trivial extension of the Kronecker algebra", trivial_extension},
      {"Kronecker lines with radical square zero", kronecker_lines},
      {"cochain oracle agrees on the corpus", oracle_equivalence},
      {"property suite on the corpus", property_suite},
      {"hereditary formula on random acyclic quivers", hereditary_formula},
      {"invariance under permutation and rescaling", robustness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!c.ok) std::cout << ": " << c.why;
    std::cout << "\n";
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
