#pragma once

// The finite-dimensional algebra A = kQ/I: a noncommutative reduction system
// for I under length-then-lex order, the basis of normal monomials, and the
// multiplication table derived from it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhlie/field.hpp"
#include "hhlie/quiver.hpp"

namespace hhlie {

/// Arrow indices, composed left to right.
using Word = std::vector<std::uint32_t>;

/// Length first, then lexicographic in arrow declaration order.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A linear combination of nontrivial paths; the leading term is the last entry.
using Polynomial = std::map<Word, Scalar, DegLexLess>;

struct PathTerm {
  Scalar coefficient;
  std::vector<std::string> path;  // arrow labels, left to right

  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

struct Relation {
  std::vector<PathTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  Field field;
  std::size_t max_length_cap = 64;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Presentation of A / rad(A)^2: the same quiver with every length-two path as a relation.
Presentation radical_square_quotient(const Presentation& p);

class ReductionSystem {
 public:
  /// Completes the generators (overlap ambiguities resolved until none remain).
  /// Throws NotFiniteDimensional once a leading word exceeds the cap.
  static ReductionSystem complete(const Field& f, std::vector<Polynomial> gens, std::size_t cap);

  Polynomial reduce(Polynomial p) const;
  bool is_normal(const Word& w) const;
  const std::vector<Polynomial>& generators() const { return gens_; }

 private:
  explicit ReductionSystem(const Field& f) : field_(f) {}
  std::optional<std::size_t> find_divisor(const Word& w, std::size_t& offset) const;

  Field field_;
  std::vector<Polynomial> gens_;  // monic
};

/// A basis monomial: the trivial path at `source` when `arrows` is empty.
struct BasisPath {
  std::size_t source = 0;
  std::size_t target = 0;
  Word arrows;
  std::size_t length() const { return arrows.size(); }
};

/// A finite-dimensional associative algebra given only by structure constants.
struct MultTable {
  Field field;
  std::vector<std::string> labels;
  std::vector<SparseVec> mult;    // mult[i * dim + j] = b_i * b_j
  std::vector<Vec> idempotents;   // complete orthogonal set, may be empty
  bool table_only = true;

  std::size_t dim() const { return labels.size(); }
  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim() + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  bool is_associative() const;
};

class AlgebraTable {
 public:
  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  const BasisPath& basis(std::size_t i) const { return basis_[i]; }
  std::size_t idempotent_index(std::size_t vertex) const { return vertex; }
  std::size_t arrow_index(std::size_t arrow) const { return quiver_.num_vertices() + arrow; }
  std::optional<std::size_t> index_of(const Word& w) const;

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const { return field_.unit(dim(), i); }

  /// Image of a linear combination of nontrivial paths (given as words).
  Vec normal_form(const Polynomial& p) const;
  /// Same, with arrow labels; throws InvalidArrow for unknown labels or non-composable paths.
  Vec normal_form(const std::vector<PathTerm>& terms) const;
  Vec normal_form_word(const Word& w) const;

  const std::vector<std::size_t>& rad_dims() const { return rad_dims_; }
  const std::vector<Polynomial>& groebner() const { return system_.generators(); }
  const ReductionSystem& reduction_system() const { return system_; }

  std::string label(std::size_t i) const;
  std::string word_label(const Word& w) const;
  MultTable to_table() const;

  friend AlgebraTable build_algebra(const Presentation& p);

 private:
  AlgebraTable(Quiver q, Field f, ReductionSystem s)
      : quiver_(std::move(q)), field_(f), system_(std::move(s)) {}

  Quiver quiver_;
  Field field_;
  ReductionSystem system_;
  std::vector<BasisPath> basis_;
  std::map<Word, std::size_t> index_;
  std::vector<SparseVec> mult_;
  std::vector<std::size_t> rad_dims_;
};

/// Throws NotAdmissible, NotFiniteDimensional, InvalidArrow.
AlgebraTable build_algebra(const Presentation& p);

/// Words of the given labels; throws InvalidArrow on unknown labels or non-composable paths.
Word resolve_path(const Quiver& q, const std::vector<std::string>& labels);

/// Basis of rad(A)^n as coordinate vectors; rad^0 = A.
std::vector<Vec> radical_power_basis(const AlgebraTable& a, std::size_t n);

/// e A e for e the sum of the idempotents of `vertices`, on the basis monomials
/// with both endpoints in the set.
MultTable idempotent_subalgebra(const AlgebraTable& a, const std::vector<std::size_t>& vertices);

/// A / J with J generated by the paths visiting two distinct vertices.
MultTable local_quotient(const AlgebraTable& a);

/// Table of the quotient by a two-sided ideal given by a spanning set.
MultTable quotient_table(const MultTable& t, const std::vector<Vec>& ideal);

}  // namespace hhlie
