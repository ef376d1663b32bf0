#include <functional>

#include "hhlie/derlie.hpp"
#include "hhlie/errors.hpp"

namespace hhlie {

LieAlgebra::LieAlgebra(Field f, std::size_t dim, std::vector<Vec> brackets,
                       std::vector<Derivation> representatives)
    : field_(f), dim_(dim), c_(std::move(brackets)), reps_(std::move(representatives)) {
  if (c_.size() != dim_ * dim_)
    throw Error(ErrorKind::invalid_input, "structure constant tensor has the wrong size");
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  Vec out(dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      field_.axpy(out, field_.mul(u[i], v[j]), bracket(i, j));
    }
  }
  return out;
}

bool LieAlgebra::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!is_zero(bracket(i, i))) return false;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vec s = bracket(i, j);
      field_.axpy(s, Scalar(1), bracket(j, i));
      if (!is_zero(s)) return false;
    }
  }
  return true;
}

bool LieAlgebra::satisfies_jacobi() const {
  auto e = [&](std::size_t i) { return field_.unit(dim_, i); };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec s = bracket(e(i), bracket(j, k));
        field_.axpy(s, Scalar(1), bracket(e(j), bracket(k, i)));
        field_.axpy(s, Scalar(1), bracket(e(k), bracket(i, j)));
        if (!is_zero(s)) return false;
      }
  return true;
}

LieAlgebra LieAlgebra::subalgebra(const std::vector<Vec>& basis) const {
  Subspace span(field_, dim_);
  for (const auto& b : basis)
    if (!span.add(b)) throw Error(ErrorKind::invalid_input, "subalgebra basis is dependent");
  const std::size_t n = basis.size();
  std::vector<Vec> c;
  c.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = span.coordinates(bracket(basis[i], basis[j]));
      if (!coords) throw Error(ErrorKind::invalid_input, "subspace is not closed under the bracket");
      c.push_back(std::move(*coords));
    }
  return LieAlgebra(field_, n, std::move(c));
}

LieAlgebra outer_quotient(const AlgebraTable& a, const DerSpace& der, const DerSpace& inn) {
  const Field& f = a.field();
  DerivationCalculus calc(a);
  const std::size_t n = calc.num_unknowns();
  std::vector<Vec> der_vecs, inn_vecs;
  for (const auto& d : der.basis) der_vecs.push_back(d.coeffs);
  for (const auto& d : inn.basis) inn_vecs.push_back(d.coeffs);
  Subspace section(f, n, inn_vecs);
  const std::size_t offset = section.dim();
  std::vector<Derivation> reps;
  for (const auto& v : der_vecs)
    if (section.add(v)) reps.push_back(Derivation{v});
  if (section.dim() != offset + reps.size() || !std::all_of(inn_vecs.begin(), inn_vecs.end(), [&](const Vec& v) {
        return Subspace(f, n, der_vecs).contains(v);
      }))
    throw Error(ErrorKind::quotient_undefined, "inner derivations are not contained in the space");
  const std::size_t h = reps.size();
  std::vector<Vec> c;
  c.reserve(h * h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      if (i == j) {
        c.emplace_back(h, Scalar(0));
        continue;
      }
      auto coords = section.coordinates(calc.bracket(reps[i], reps[j]).coeffs);
      if (!coords) throw Error(ErrorKind::invalid_input, "derivation space is not bracket-closed");
      c.emplace_back(coords->begin() + static_cast<std::ptrdiff_t>(offset), coords->end());
    }
  return LieAlgebra(f, h, std::move(c), std::move(reps));
}

LieAlgebra hh1(const AlgebraTable& a, bool rad_only) {
  DerSpace der = derivation_space(a);
  if (rad_only) der = radical_filter(der, a);
  return outer_quotient(a, der, inner_space(a));
}

namespace {

SeriesResult run_series(const LieAlgebra& l, bool derived) {
  const Field& f = l.field();
  const std::size_t n = l.dim();
  std::vector<Vec> whole;
  for (std::size_t i = 0; i < n; ++i) whole.push_back(f.unit(n, i));
  std::vector<Vec> current = whole;
  SeriesResult out;
  out.dims.push_back(n);
  while (true) {
    if (current.empty()) {
      out.terminates = true;
      out.stabilized_at = out.dims.size() - 1;
      break;
    }
    Subspace next(f, n);
    const auto& left = derived ? current : whole;
    for (const auto& u : left)
      for (const auto& v : current) next.add(l.bracket(u, v));
    if (next.dim() == current.size()) {
      out.dims.push_back(next.dim());
      out.stabilized_at = out.dims.size() - 2;
      break;
    }
    out.dims.push_back(next.dim());
    current = next.basis();
  }
  return out;
}

}  // namespace

SeriesResult derived_series(const LieAlgebra& l) { return run_series(l, true); }
SeriesResult lower_central_series(const LieAlgebra& l) { return run_series(l, false); }

Sl2Element sl2_bracket(const Field& f, const Sl2Element& u, const Sl2Element& v) {
  Sl2Element r;
  const Scalar two = f.from_int(2);
  r.x = f.sub(f.mul(u.y, v.z), f.mul(u.z, v.y));
  r.y = f.mul(two, f.sub(f.mul(u.x, v.y), f.mul(u.y, v.x)));
  r.z = f.neg(f.mul(two, f.sub(f.mul(u.x, v.z), f.mul(u.z, v.x))));
  return r;
}

}  // namespace hhlie
