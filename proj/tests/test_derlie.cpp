#include <gtest/gtest.h>

#include "hhlie/derlie.hpp"
#include "hhlie/errors.hpp"
#include "support.hpp"

using namespace hhlie;
using hhlie::fixtures::arrow;
using hhlie::fixtures::corpus_algebra;
using hhlie::fixtures::corpus_names;

namespace {

Vec power(const AlgebraTable& a, std::size_t i) {
  return a.normal_form(std::vector<PathTerm>{{Scalar(1), std::vector<std::string>(i, "x")}});
}

LieAlgebra sl2(const Field& f) {
  const Sl2Element basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<Vec> c;
  for (const auto& u : basis)
    for (const auto& v : basis) {
      Sl2Element w = sl2_bracket(f, u, v);
      c.push_back({w.x, w.y, w.z});
    }
  return LieAlgebra(f, 3, c);
}

bool in_span(const AlgebraTable& a, const DerSpace& s, const Derivation& d) {
  Subspace sp(a.field(), d.coeffs.size());
  for (const auto& b : s.basis) sp.add(b.coeffs);
  return sp.contains(d.coeffs);
}

}  // namespace

TEST(Derivations, KroneckerDerAndInn) {
  auto a = corpus_algebra("kronecker");
  EXPECT_EQ(derivation_space(a).dim(), 4u);
  EXPECT_EQ(inner_space(a).dim(), 1u);
  EXPECT_EQ(hh1(a, false).dim(), 3u);
  EXPECT_EQ(hh1(a, true).dim(), 3u);
}

// On k[x]/(x^n), D_i : x -> x^i spans Der for 1 <= i < n and
// [D_i, D_j] = (j - i) D_{i+j-1}.
TEST(Derivations, TruncatedPolynomialBracket) {
  for (std::size_t n : {3, 4, 5}) {
    SCOPED_TRACE(n);
    auto a = corpus_algebra("truncated_poly_" + std::to_string(n));
    DerivationCalculus calc(a);
    EXPECT_EQ(derivation_space(a).dim(), n - 1);
    EXPECT_EQ(inner_space(a).dim(), 0u);
    auto d = [&](std::size_t i) { return calc.from_images({power(a, i)}); };
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) {
        Vec expect(a.dim(), Scalar(0));
        if (i + j - 1 < n) {
          expect = power(a, i + j - 1);
          for (auto& c : expect) c *= long(j) - long(i);
        }
        EXPECT_EQ(calc.image(calc.bracket(d(i), d(j)), 0), calc.image(calc.from_images({expect}), 0));
      }
  }
}

TEST(Derivations, WittAlgebraInCharacteristicThree) {
  auto a = corpus_algebra("truncated_poly_3_f3");
  auto der = derivation_space(a);
  auto rad = radical_filter(der, a);
  EXPECT_EQ(der.dim(), 3u);
  EXPECT_EQ(rad.dim(), 2u);
  auto l = loop_criterion(a);
  EXPECT_FALSE(l.holds);
  ASSERT_EQ(l.loops.size(), 1u);
  EXPECT_EQ(l.loops[0].n, 3u);
  EXPECT_FALSE(derived_series(hh1(a, false)).terminates);
  EXPECT_TRUE(derived_series(hh1(a, true)).terminates);
}

TEST(Derivations, LoopCriterionValues) {
  EXPECT_TRUE(loop_criterion(corpus_algebra("kronecker")).loops.empty());
  auto l = loop_criterion(corpus_algebra("truncated_poly_4"));
  ASSERT_EQ(l.loops.size(), 1u);
  EXPECT_EQ(l.loops[0].n, 4u);
  EXPECT_TRUE(l.holds);
}

TEST(Derivations, LeibnizAndInnerContainment) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    DerivationCalculus calc(a);
    auto der = derivation_space(a);
    for (const auto& d : der.basis) EXPECT_TRUE(calc.leibniz_holds(d));
    auto inn = inner_space(a);
    for (const auto& d : inn.basis) {
      EXPECT_TRUE(calc.leibniz_holds(d));
      EXPECT_TRUE(in_span(a, der, d));
    }
    auto rad = radical_filter(der, a);
    for (const auto& d : rad.basis) EXPECT_TRUE(in_span(a, der, d));
    for (const auto& d : der.basis)
      for (const auto& e : der.basis) EXPECT_TRUE(in_span(a, der, calc.bracket(d, e)));
  }
}

TEST(Derivations, NonDerivationRejected) {
  auto a = corpus_algebra("truncated_poly_3");
  DerivationCalculus calc(a);
  // x -> 1 violates d(x^3) = 3x^2 d(x) = 0 over Q
  Vec one(a.dim(), Scalar(0));
  one[0] = 1;
  EXPECT_FALSE(calc.leibniz_holds(calc.from_images({one})));
}

TEST(LieStructure, AntisymmetryAndJacobiOnCorpus) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    for (bool rad : {false, true}) {
      auto h = hh1(a, rad);
      EXPECT_TRUE(h.is_antisymmetric());
      EXPECT_TRUE(h.satisfies_jacobi());
      EXPECT_EQ(h.representatives().size(), h.dim());
    }
  }
}

TEST(LieStructure, LoopCriterionGivesEqualDimensions) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    if (loop_criterion(a).holds) EXPECT_EQ(hh1(a, false).dim(), hh1(a, true).dim());
    EXPECT_LE(hh1(a, true).dim(), hh1(a, false).dim());
  }
}

TEST(LieStructure, SolvabilityPassesUpFromRadicalSquareQuotient) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    Presentation p = fixtures::corpus(name);
    auto a = build_algebra(p);
    auto b = build_algebra(radical_square_quotient(p));
    if (derived_series(hh1(b, true)).terminates) EXPECT_TRUE(derived_series(hh1(a, true)).terminates);
  }
}

TEST(Series, Sl2IsPerfect) {
  Field q;
  auto s = sl2(q);
  EXPECT_TRUE(s.is_antisymmetric());
  EXPECT_TRUE(s.satisfies_jacobi());
  EXPECT_EQ(derived_series(s).dims, (std::vector<std::size_t>{3, 3}));
  EXPECT_FALSE(derived_series(s).terminates);
  EXPECT_EQ(lower_central_series(s).dims, (std::vector<std::size_t>{3, 3}));
}

TEST(Series, AbelianAndHeisenberg) {
  Field q;
  const std::size_t d = 3;
  LieAlgebra ab(q, d, std::vector<Vec>(d * d, Vec(d, Scalar(0))));
  EXPECT_EQ(derived_series(ab).dims, (std::vector<std::size_t>{3, 0}));
  EXPECT_TRUE(derived_series(ab).terminates);
  // [x, y] = z
  std::vector<Vec> c(9, Vec(3, Scalar(0)));
  c[0 * 3 + 1] = {0, 0, 1};
  c[1 * 3 + 0] = {0, 0, -1};
  LieAlgebra heis(q, 3, c);
  EXPECT_EQ(derived_series(heis).dims, (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(lower_central_series(heis).dims, (std::vector<std::size_t>{3, 1, 0}));
}

TEST(Series, KroneckerIsSl2) {
  auto h = hh1(corpus_algebra("kronecker"), false);
  EXPECT_EQ(derived_series(h).dims, (std::vector<std::size_t>{3, 3}));
}

TEST(Delta, InnerDerivationsVanish) {
  for (const auto& name : {"kronecker", "double_kronecker", "kronecker_triangle", "kronecker_tail"}) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    DerivationCalculus calc(a);
    const Quiver& q = a.quiver();
    for (std::size_t i = 0; i < q.num_arrows(); ++i)
      for (std::size_t j = i + 1; j < q.num_arrows(); ++j) {
        if (!delta_defined(q, i, j)) continue;
        for (const auto& d : inner_space(a).basis) EXPECT_EQ(delta_of(calc, d, i, j), Sl2Element{});
      }
  }
}

TEST(Delta, IsALieHomomorphismOnRadicalDerivations) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    if (a.field().characteristic() == 2) continue;
    DerivationCalculus calc(a);
    const Quiver& q = a.quiver();
    auto rad = radical_filter(derivation_space(a), a);
    for (std::size_t i = 0; i < q.num_arrows(); ++i)
      for (std::size_t j = i + 1; j < q.num_arrows(); ++j) {
        if (!delta_defined(q, i, j)) continue;
        for (const auto& d : rad.basis)
          for (const auto& e : rad.basis)
            EXPECT_EQ(delta_of(calc, calc.bracket(d, e), i, j),
                      sl2_bracket(a.field(), delta_of(calc, d, i, j), delta_of(calc, e, i, j)));
      }
  }
}

TEST(Delta, KroneckerMapIsSurjective) {
  auto a = corpus_algebra("kronecker");
  auto h = hh1(a, true);
  auto r = delta_map(a, arrow(a, "a"), arrow(a, "b"), h);
  EXPECT_TRUE(r.surjective);
  EXPECT_EQ(r.image_dim, 3u);
  EXPECT_TRUE(r.kernel_basis.empty());
}

TEST(Delta, UndefinedAndCharacteristicTwo) {
  // c also enters the target of the pair
  auto a = build_algebra(parse_dsl("vertex 1 2 3\narrow a 1 2\narrow b 1 2\narrow c 3 2\n"));
  EXPECT_FALSE(delta_defined(a.quiver(), 0, 1));
  try {
    delta_map(a, 0, 1, hh1(a, true));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::delta_undefined);
  }
  Presentation p = fixtures::corpus("kronecker");
  p.field = Field::prime(2);
  auto b = build_algebra(p);
  try {
    delta_map(b, 0, 1, hh1(b, true));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_characteristic);
  }
}
