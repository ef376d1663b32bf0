#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "hhlie/errors.hpp"
#include "hhlie/oracle.hpp"
#include "support.hpp"

using namespace hhlie;
using hhlie::fixtures::arrow;
using hhlie::fixtures::corpus_algebra;
using hhlie::fixtures::corpus_names;

namespace {

/// k[x]/(x^n) written out by hand on the basis 1, x, ..., x^{n-1}.
MultTable truncated_table(std::size_t n) {
  MultTable t;
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back("x^" + std::to_string(i));
  t.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) t.mult[i * n + j] = {{i + j, Scalar(1)}};
  return t;
}

/// k x ... x k, n copies.
MultTable product_of_fields(std::size_t n) {
  MultTable t;
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back("e" + std::to_string(i));
  t.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) t.mult[i * n + i] = {{i, Scalar(1)}};
  return t;
}

std::optional<ErrorKind> kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST(Oracle, BarComplexAgreesWithDerivationsOnCorpus) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    EXPECT_EQ(bar_hh1_dim(a), hh1(a, false).dim());
  }
}

TEST(Oracle, CompositeVanishes) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(composite_vanishes(cochain_problem(corpus_algebra(name).to_table())));
  }
  EXPECT_TRUE(composite_vanishes(cochain_problem(truncated_table(5))));
}

TEST(Oracle, HandWrittenTables) {
  EXPECT_EQ(bar_hh1_dim(truncated_table(1)), 0u);
  EXPECT_TRUE(derivations_from_table(truncated_table(1)).empty());
  EXPECT_EQ(bar_hh1_dim(truncated_table(4)), 3u);
  EXPECT_EQ(derivations_from_table(truncated_table(4)).size(), 3u);
  EXPECT_EQ(bar_hh1_dim(product_of_fields(3)), 0u);
}

TEST(Oracle, TreesHaveNoOuterDerivations) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    // random tree: vertex k attaches to an earlier vertex, direction random
    std::uniform_int_distribution<std::size_t> nv(2, 6);
    const std::size_t n = nv(rng);
    std::string dsl = "vertex";
    for (std::size_t i = 1; i <= n; ++i) dsl += " " + std::to_string(i);
    dsl += "\n";
    for (std::size_t k = 2; k <= n; ++k) {
      const std::size_t parent = std::uniform_int_distribution<std::size_t>(1, k - 1)(rng);
      const bool down = rng() % 2;
      dsl += "arrow a" + std::to_string(k) + " " + std::to_string(down ? parent : k) + " " +
             std::to_string(down ? k : parent) + "\n";
    }
    SCOPED_TRACE(dsl);
    auto a = build_algebra(parse_dsl(dsl));
    EXPECT_EQ(bar_hh1_dim(a), 0u);
    EXPECT_EQ(hh1(a, false).dim(), 0u);
  }
}

TEST(Oracle, HereditaryFormulaOnSmallQuivers) {
  auto tri = build_algebra(parse_dsl("vertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\n"));
  EXPECT_EQ(bar_hh1_dim(tri), hereditary_hh1_dim(tri.quiver()));
  EXPECT_EQ(bar_hh1_dim(tri), 2u);
}

TEST(Oracle, TableDerivationsMatchQuiverDerivations) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto a = corpus_algebra(name);
    auto t = a.to_table();
    DerivationCalculus calc(a);
    auto der = derivation_space(a);
    EXPECT_EQ(derivations_from_table(t).size(), der.dim());
    for (const auto& d : der.basis) EXPECT_TRUE(is_table_derivation(t, as_table_map(calc, d)));
  }
}

TEST(Oracle, RestrictionToCornerIsADerivation) {
  auto a = corpus_algebra("double_kronecker");
  DerivationCalculus calc(a);
  const std::vector<std::size_t> corner{0, 1};
  auto sub = idempotent_subalgebra(a, corner);
  for (const auto& d : derivation_space(a).basis) {
    Vec f = restrict_map(a, as_table_map(calc, d), corner);
    EXPECT_TRUE(is_table_derivation(sub, f));
    // a, b are basis elements 2, 3 of e A e
    EXPECT_EQ(table_delta(sub, f, 2, 3), delta_of(calc, d, arrow(a, "a"), arrow(a, "b")));
  }
}

TEST(Oracle, TableDeltaMatchesDeltaOf) {
  auto a = corpus_algebra("kronecker_triangle");
  auto t = a.to_table();
  DerivationCalculus calc(a);
  for (const auto& p : {std::pair{"a", "b"}, std::pair{"c", "d"}, std::pair{"e", "f"}}) {
    const std::size_t i = arrow(a, p.first), j = arrow(a, p.second);
    for (const auto& d : radical_filter(derivation_space(a), a).basis)
      EXPECT_EQ(table_delta(t, as_table_map(calc, d), a.arrow_index(i), a.arrow_index(j)),
                delta_of(calc, d, i, j));
  }
}

TEST(Oracle, Refusals) {
  EXPECT_EQ(kind_of([] { cochain_problem(product_of_fields(kOracleMaxDim + 1)); }), ErrorKind::too_large);
  EXPECT_NO_THROW(cochain_problem(product_of_fields(8)));
  MultTable bad;
  bad.labels = {"u", "v"};
  bad.mult.assign(4, {});
  bad.mult[0] = {{1, Scalar(1)}};  // u*u = v
  bad.mult[2] = {{0, Scalar(1)}};  // v*u = u, so (uu)u = u but u(uu) = 0
  EXPECT_FALSE(bad.is_associative());
  EXPECT_EQ(kind_of([&] { derivations_from_table(bad); }), ErrorKind::not_associative);
}
