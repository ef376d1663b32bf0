#pragma once

// Derivations of A = kQ/I normalised to vanish on the vertex idempotents,
// inner derivations, HH^1 and HH^1_rad as Lie algebras, solvability, and the
// Delta maps into sl_2 attached to Kronecker pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hhlie/algebra.hpp"
#include "hhlie/field.hpp"

namespace hhlie {

/// A derivation vanishing on the idempotents, stored as the concatenated
/// coordinates of the arrow images delta(a) in e_{s(a)} A e_{t(a)}.
struct Derivation {
  Vec coeffs;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Coordinates of the arrow-image space and derivation calculus on one algebra.
class DerivationCalculus {
 public:
  explicit DerivationCalculus(const AlgebraTable& a);

  const AlgebraTable& algebra() const { return *a_; }
  std::size_t num_unknowns() const { return total_; }
  /// Basis indices of e_{s(a)} A e_{t(a)}, in order.
  const std::vector<std::size_t>& targets(std::size_t arrow) const { return targets_[arrow]; }
  std::size_t offset(std::size_t arrow) const { return offsets_[arrow]; }

  Vec image(const Derivation& d, std::size_t arrow) const;
  /// Builds the coefficient vector from arrow images; throws InvalidInput if an
  /// image leaves e_{s(a)} A e_{t(a)}.
  Derivation from_images(const std::vector<Vec>& images) const;
  /// delta on every basis element, extended by the Leibniz rule.
  std::vector<Vec> on_basis(const Derivation& d) const;
  Vec apply(const Derivation& d, const Vec& x) const;
  Derivation bracket(const Derivation& d, const Derivation& e) const;
  /// True when delta(uv) = delta(u) v + u delta(v) for all basis pairs.
  bool leibniz_holds(const Derivation& d) const;
  /// The inner derivation [u, -] for u in the sum of the e_i A e_i.
  Derivation inner(const Vec& u) const;

 private:
  const AlgebraTable* a_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

enum class DerFlavor { all, radical_preserving, inner };

struct DerSpace {
  DerFlavor flavor = DerFlavor::all;
  std::vector<Derivation> basis;
  std::size_t dim() const { return basis.size(); }
};

DerSpace derivation_space(const AlgebraTable& a);
DerSpace inner_space(const AlgebraTable& a);
DerSpace radical_filter(const DerSpace& d, const AlgebraTable& a);

struct LoopDatum {
  std::size_t arrow;
  std::size_t n;
};

struct LoopCriterion {
  std::vector<LoopDatum> loops;
  mpz_class product = 1;
  bool holds = true;
};

/// n_a = least n with a^n in rad^{n+1}; holds unless p divides the product.
LoopCriterion loop_criterion(const AlgebraTable& a);

/// Structure constants c[i][j] = [x_i, x_j] on a finite-dimensional Lie algebra.
class LieAlgebra {
 public:
  LieAlgebra(Field f, std::size_t dim, std::vector<Vec> brackets,
             std::vector<Derivation> representatives = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& bracket(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }
  Vec bracket(const Vec& u, const Vec& v) const;
  /// Derivation representatives of the basis classes when built from HH^1.
  const std::vector<Derivation>& representatives() const { return reps_; }

  bool is_antisymmetric() const;
  bool satisfies_jacobi() const;
  /// Restriction to a bracket-closed subspace, in the coordinates of `basis`.
  LieAlgebra subalgebra(const std::vector<Vec>& basis) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vec> c_;
  std::vector<Derivation> reps_;
};

/// Der(A)/Inn(A) or Der_rad(A)/Inn(A), with representatives on an echelon section.
LieAlgebra hh1(const AlgebraTable& a, bool rad_only);
/// Quotient of a derivation space by the inner derivations it contains.
LieAlgebra outer_quotient(const AlgebraTable& a, const DerSpace& der, const DerSpace& inn);

struct SeriesResult {
  std::vector<std::size_t> dims;
  bool terminates = false;        // reaches 0 (solvable / nilpotent)
  std::size_t stabilized_at = 0;  // index after which dims no longer change
};

SeriesResult derived_series(const LieAlgebra& l);
SeriesResult lower_central_series(const LieAlgebra& l);

/// Coordinates x, y, z in the basis H, E, F of sl_2 with
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H.
struct Sl2Element {
  Scalar x = 0, y = 0, z = 0;
  friend bool operator==(const Sl2Element&, const Sl2Element&) = default;
};
Sl2Element sl2_bracket(const Field& f, const Sl2Element& u, const Sl2Element& v);

/// True when a, b are parallel and the only arrows leaving s(a) and entering t(a).
bool delta_defined(const Quiver& q, std::size_t a, std::size_t b);

/// (x, y, z) of one derivation: x = (c_aa - c_bb)/2, y = c_ba, z = c_ab where
/// c_uv is the coefficient of the arrow v in delta(u).
Sl2Element delta_of(const DerivationCalculus& calc, const Derivation& d, std::size_t a,
                    std::size_t b);

struct DeltaResult {
  std::vector<Sl2Element> images;  // one per basis class of h
  std::size_t image_dim = 0;
  bool surjective = false;
  std::vector<Vec> kernel_basis;   // coordinates in h
};

/// Throws UnsupportedCharacteristic in characteristic 2, DeltaUndefined if the
/// pair does not form a Kronecker component of the separated quiver.
DeltaResult delta_map(const AlgebraTable& a, std::size_t arrow_a, std::size_t arrow_b,
                      const LieAlgebra& h);

}  // namespace hhlie
