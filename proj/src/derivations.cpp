#include <algorithm>

#include "hhlie/derlie.hpp"
#include "hhlie/errors.hpp"

namespace hhlie {

DerivationCalculus::DerivationCalculus(const AlgebraTable& a) : a_(&a) {
  const Quiver& q = a.quiver();
  for (std::size_t arr = 0; arr < q.num_arrows(); ++arr) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.basis(i).source == q.arrow(arr).source && a.basis(i).target == q.arrow(arr).target)
        t.push_back(i);
    offsets_.push_back(total_);
    total_ += t.size();
    targets_.push_back(std::move(t));
  }
}

Vec DerivationCalculus::image(const Derivation& d, std::size_t arrow) const {
  Vec out(a_->dim(), Scalar(0));
  const auto& t = targets_[arrow];
  for (std::size_t k = 0; k < t.size(); ++k) out[t[k]] = d.coeffs[offsets_[arrow] + k];
  return out;
}

Derivation DerivationCalculus::from_images(const std::vector<Vec>& images) const {
  Derivation d{Vec(total_, Scalar(0))};
  for (std::size_t arr = 0; arr < targets_.size(); ++arr) {
    const auto& t = targets_[arr];
    Vec rest = images[arr];
    for (std::size_t k = 0; k < t.size(); ++k) {
      d.coeffs[offsets_[arr] + k] = rest[t[k]];
      rest[t[k]] = 0;
    }
    if (!is_zero(rest))
      throw Error(ErrorKind::invalid_input, "arrow image outside e_s A e_t");
  }
  return d;
}

std::vector<Vec> DerivationCalculus::on_basis(const Derivation& d) const {
  const AlgebraTable& a = *a_;
  const Field& f = a.field();
  std::vector<Vec> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BasisPath& b = a.basis(i);
    Vec acc(a.dim(), Scalar(0));
    for (std::size_t pos = 0; pos < b.arrows.size(); ++pos) {
      Word prefix(b.arrows.begin(), b.arrows.begin() + static_cast<std::ptrdiff_t>(pos));
      Word suffix(b.arrows.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b.arrows.end());
      const std::size_t arr = b.arrows[pos];
      const std::size_t left = prefix.empty() ? a.idempotent_index(a.quiver().arrow(arr).source)
                                              : *a.index_of(prefix);
      const std::size_t right = suffix.empty() ? a.idempotent_index(a.quiver().arrow(arr).target)
                                               : *a.index_of(suffix);
      Vec term = a.multiply(a.multiply(a.basis_vector(left), image(d, arr)), a.basis_vector(right));
      for (std::size_t k = 0; k < acc.size(); ++k)
        if (term[k] != 0) acc[k] = f.add(acc[k], term[k]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

Vec apply_with(const Field& f, const std::vector<Vec>& on_basis, const Vec& x) {
  Vec out(x.size(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) f.axpy(out, x[i], on_basis[i]);
  return out;
}

}  // namespace

Vec DerivationCalculus::apply(const Derivation& d, const Vec& x) const {
  return apply_with(a_->field(), on_basis(d), x);
}

Derivation DerivationCalculus::bracket(const Derivation& d, const Derivation& e) const {
  const Field& f = a_->field();
  const auto bd = on_basis(d);
  const auto be = on_basis(e);
  std::vector<Vec> images;
  for (std::size_t arr = 0; arr < targets_.size(); ++arr) {
    Vec de = apply_with(f, bd, image(e, arr));
    Vec ed = apply_with(f, be, image(d, arr));
    f.axpy(de, f.neg(Scalar(1)), ed);
    images.push_back(std::move(de));
  }
  return from_images(images);
}

bool DerivationCalculus::leibniz_holds(const Derivation& d) const {
  const AlgebraTable& a = *a_;
  const Field& f = a.field();
  const auto bd = on_basis(d);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = apply_with(f, bd, to_dense(a.product(i, j), a.dim()));
      Vec rhs = a.multiply(bd[i], a.basis_vector(j));
      f.axpy(rhs, Scalar(1), a.multiply(a.basis_vector(i), bd[j]));
      if (lhs != rhs) return false;
    }
  return true;
}

Derivation DerivationCalculus::inner(const Vec& u) const {
  const AlgebraTable& a = *a_;
  const Field& f = a.field();
  std::vector<Vec> images;
  for (std::size_t arr = 0; arr < targets_.size(); ++arr) {
    Vec x = a.basis_vector(a.arrow_index(arr));
    Vec img = a.multiply(u, x);
    f.axpy(img, f.neg(Scalar(1)), a.multiply(x, u));
    images.push_back(std::move(img));
  }
  return from_images(images);
}

DerSpace derivation_space(const AlgebraTable& a) {
  const Field& f = a.field();
  DerivationCalculus calc(a);
  const std::size_t d = a.dim();
  const auto& gens = a.groebner();
  Mat m(f, d * gens.size(), calc.num_unknowns());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& [word, coef] : gens[g]) {
      for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const std::size_t arr = word[pos];
        Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        Word suffix(word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word.end());
        const auto& targets = calc.targets(arr);
        for (std::size_t k = 0; k < targets.size(); ++k) {
          Word w = prefix;
          const auto& mid = a.basis(targets[k]).arrows;
          w.insert(w.end(), mid.begin(), mid.end());
          w.insert(w.end(), suffix.begin(), suffix.end());
          Vec nf = a.normal_form_word(w);
          const std::size_t col = calc.offset(arr) + k;
          for (std::size_t r = 0; r < d; ++r)
            if (nf[r] != 0) m(g * d + r, col) = f.add(m(g * d + r, col), f.mul(coef, nf[r]));
        }
      }
    }
  }
  DerSpace out;
  out.flavor = DerFlavor::all;
  for (auto& v : kernel_basis(m)) out.basis.push_back(Derivation{std::move(v)});
  return out;
}

DerSpace inner_space(const AlgebraTable& a) {
  DerivationCalculus calc(a);
  Subspace span(a.field(), calc.num_unknowns());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis(i).source != a.basis(i).target) continue;
    span.add(calc.inner(a.basis_vector(i)).coeffs);
  }
  DerSpace out;
  out.flavor = DerFlavor::inner;
  for (const auto& v : span.basis()) out.basis.push_back(Derivation{v});
  return out;
}

DerSpace radical_filter(const DerSpace& d, const AlgebraTable& a) {
  const Field& f = a.field();
  DerivationCalculus calc(a);
  const Quiver& q = a.quiver();
  // one condition per loop: no component on the idempotent of its vertex
  std::vector<std::size_t> cols;
  for (std::size_t arr = 0; arr < q.num_arrows(); ++arr) {
    if (!q.is_loop(arr)) continue;
    const auto& t = calc.targets(arr);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (a.basis(t[k]).arrows.empty()) cols.push_back(calc.offset(arr) + k);
  }
  DerSpace out;
  out.flavor = DerFlavor::radical_preserving;
  if (cols.empty()) {
    out.basis = d.basis;
    return out;
  }
  Mat m(f, cols.size(), d.dim());
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (std::size_t j = 0; j < d.dim(); ++j) m(r, j) = d.basis[j].coeffs[cols[r]];
  for (const auto& combo : kernel_basis(m)) {
    Vec v(calc.num_unknowns(), Scalar(0));
    for (std::size_t j = 0; j < d.dim(); ++j) f.axpy(v, combo[j], d.basis[j].coeffs);
    out.basis.push_back(Derivation{std::move(v)});
  }
  return out;
}

LoopCriterion loop_criterion(const AlgebraTable& a) {
  LoopCriterion out;
  const Quiver& q = a.quiver();
  const std::size_t p = a.field().characteristic();
  std::size_t max_n = a.rad_dims().size() + 1;
  for (std::size_t arr = 0; arr < q.num_arrows(); ++arr) {
    if (!q.is_loop(arr)) continue;
    const Vec x = a.basis_vector(a.arrow_index(arr));
    Vec power = x;
    std::size_t n = 1;
    for (; n <= max_n; ++n) {
      Subspace rad(a.field(), a.dim(), radical_power_basis(a, n + 1));
      if (rad.contains(power)) break;
      power = a.multiply(power, x);
    }
    out.loops.push_back(LoopDatum{arr, n});
    out.product *= static_cast<unsigned long>(n);
  }
  out.holds = p == 0 || out.product % p != 0;
  return out;
}

bool delta_defined(const Quiver& q, std::size_t a, std::size_t b) {
  if (a == b || a >= q.num_arrows() || b >= q.num_arrows()) return false;
  const Arrow& x = q.arrow(a);
  const Arrow& y = q.arrow(b);
  if (x.source != y.source || x.target != y.target) return false;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    if (i == a || i == b) continue;
    if (q.arrow(i).source == x.source || q.arrow(i).target == x.target) return false;
  }
  return true;
}

Sl2Element delta_of(const DerivationCalculus& calc, const Derivation& d, std::size_t a,
                    std::size_t b) {
  const AlgebraTable& alg = calc.algebra();
  const Field& f = alg.field();
  const Vec da = calc.image(d, a);
  const Vec db = calc.image(d, b);
  const std::size_t ia = alg.arrow_index(a), ib = alg.arrow_index(b);
  Sl2Element s;
  s.x = f.div(f.sub(da[ia], db[ib]), f.from_int(2));
  s.y = db[ia];
  s.z = da[ib];
  return s;
}

DeltaResult delta_map(const AlgebraTable& a, std::size_t arrow_a, std::size_t arrow_b,
                      const LieAlgebra& h) {
  const Field& f = a.field();
  if (f.characteristic() == 2)
    throw Error(ErrorKind::unsupported_characteristic, "Delta maps need characteristic != 2");
  const Quiver& q = a.quiver();
  if (!delta_defined(q, arrow_a, arrow_b))
    throw Error(ErrorKind::delta_undefined,
                "(" + q.arrow(arrow_a).label + "," + q.arrow(arrow_b).label +
                    ") is not a Kronecker component of the separated quiver");
  if (h.representatives().size() != h.dim())
    throw Error(ErrorKind::invalid_input, "Lie algebra carries no derivation representatives");
  DerivationCalculus calc(a);
  DeltaResult out;
  Mat m(f, 3, h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Sl2Element s = delta_of(calc, h.representatives()[j], arrow_a, arrow_b);
    m(0, j) = s.x;
    m(1, j) = s.y;
    m(2, j) = s.z;
    out.images.push_back(std::move(s));
  }
  out.image_dim = rank(m);
  out.surjective = out.image_dim == 3;
  out.kernel_basis = kernel_basis(m);
  return out;
}

}  // namespace hhlie
