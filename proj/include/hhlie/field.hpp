#pragma once

// Exact scalars over Q or F_p and the dense/sparse elimination kernels used
// throughout the library. Scalars are GMP rationals; for prime fields the
// value is always an integer representative in [0, p).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hhlie {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

enum class FieldKind { rationals, prime_field };

class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);
  /// Accepts "Q" or "fp:<p>".
  static Field parse(std::string_view text);

  FieldKind kind() const { return p_ == 0 ? FieldKind::rationals : FieldKind::prime_field; }
  unsigned long characteristic() const { return p_; }
  std::string to_string() const;

  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// y += a * x
  void axpy(Vec& y, const Scalar& a, const Vec& x) const;
  void scale(Vec& v, const Scalar& a) const;
  Vec zeros(std::size_t n) const { return Vec(n, Scalar(0)); }
  Vec unit(std::size_t n, std::size_t i) const;

  /// Renders "3/2"; prime-field residues render as integers.
  static std::string render(const Scalar& s) { return s.get_str(); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  void reduce(Scalar& s) const;

  unsigned long p_ = 0;
};

bool is_prime(unsigned long n);
bool is_zero(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t n);

class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec apply(const Vec& v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);
/// Basis of the right null space, one vector per free column.
std::vector<Vec> kernel_basis(const Mat& m);

/// Incrementally built subspace kept in reduced echelon form. Remembers how
/// each reduced row is combined from the independent vectors that were added,
/// so membership tests also yield coordinates.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  Subspace(Field f, std::size_t ambient, const std::vector<Vec>& gens);

  /// Returns true when v was independent of the current span (and was added).
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  /// Coordinates of v with respect to basis(), or nullopt if v lies outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Component of v after eliminating along the pivots (zero iff contained).
  Vec residual(const Vec& v) const;

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  /// The independent vectors, in insertion order.
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<Vec> rows_;    // reduced rows
  std::vector<Vec> combos_;  // rows_[k] = sum_j combos_[k][j] * basis_[j]
  std::vector<std::size_t> pivots_;
};

struct SubspaceReport {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_sum = 0;
  std::size_t dim_intersection = 0;
  std::vector<Vec> quotient_reps;
};

/// Throws QuotientUndefined when want_quotient is set and span_b is not in span_a.
SubspaceReport subspace_ops(const Field& f, const std::vector<Vec>& span_a,
                            const std::vector<Vec>& span_b, bool want_quotient = true);

/// Row echelon structure for large sparse systems (the cochain oracle).
class SparseEchelon {
 public:
  SparseEchelon(Field f, std::size_t cols) : field_(f), cols_(cols), pivot_row_(cols, npos) {}

  /// Entries need not be sorted; duplicates are summed. Returns true if rank grew.
  bool add_row(SparseVec row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<Vec> kernel_basis() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  Field field_;
  std::size_t cols_;
  std::vector<SparseVec> rows_;  // each sorted, leading entry normalized to 1
  std::vector<std::size_t> pivot_row_;
};

}  // namespace hhlie
