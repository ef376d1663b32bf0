#pragma once

// Brute-force cross-checks that only look at the multiplication table:
// HH^1 from the Hochschild cochain complex, and derivations of a bare table.

#include <cstddef>
#include <vector>

#include "hhlie/algebra.hpp"
#include "hhlie/derlie.hpp"
#include "hhlie/field.hpp"

namespace hhlie {

inline constexpr std::size_t kOracleMaxDim = 64;

/// d0: A -> Hom(A,A), x |-> [x, -] up to sign; d1: Hom(A,A) -> Hom(A (x) A, A),
/// (d1 f)(x, y) = x f(y) - f(xy) + f(x) y. A map f is stored as f[m*d + l],
/// the coefficient of b_l in f(b_m). Rows are sparse.
struct CochainProblem {
  Field field;
  std::size_t d = 0;
  std::vector<SparseVec> d0;  // d*d rows, d columns
  std::vector<SparseVec> d1;  // d*d*d rows, d*d columns
};

/// Throws TooLarge above kOracleMaxDim.
CochainProblem cochain_problem(const MultTable& t);
bool composite_vanishes(const CochainProblem& c);

std::size_t bar_hh1_dim(const MultTable& t);
std::size_t bar_hh1_dim(const AlgebraTable& a);

/// All Leibniz maps of the table, as flattened d x d matrices; when the table
/// carries idempotents they are required to map to zero. Throws NotAssociative.
std::vector<Vec> derivations_from_table(const MultTable& t);

bool is_table_derivation(const MultTable& t, const Vec& f);

/// The derivation as a flattened map on the basis of A.
Vec as_table_map(const DerivationCalculus& calc, const Derivation& d);

/// Restriction of a map on A to eAe, in the basis used by idempotent_subalgebra.
Vec restrict_map(const AlgebraTable& a, const Vec& f, const std::vector<std::size_t>& vertices);

/// (x, y, z) of a table-level map for the basis elements ia, ib of two parallel arrows.
Sl2Element table_delta(const MultTable& t, const Vec& f, std::size_t ia, std::size_t ib);

}  // namespace hhlie
