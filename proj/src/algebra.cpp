#include "hhlie/algebra.hpp"

#include <algorithm>
#include <set>

#include "hhlie/errors.hpp"

namespace hhlie {

Word resolve_path(const Quiver& q, const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorKind::invalid_arrow, "empty path");
  Word w;
  for (const auto& l : labels) {
    auto idx = q.arrow_index(l);
    if (!idx) throw Error(ErrorKind::invalid_arrow, "unknown arrow '" + l + "'");
    if (!w.empty() && q.arrow(w.back()).target != q.arrow(*idx).source)
      throw Error(ErrorKind::invalid_arrow,
                  "arrows '" + q.arrow(w.back()).label + "' and '" + l + "' are not composable");
    w.push_back(static_cast<std::uint32_t>(*idx));
  }
  return w;
}

Presentation radical_square_quotient(const Presentation& p) {
  Presentation out;
  out.quiver = p.quiver;
  out.field = p.field;
  out.max_length_cap = p.max_length_cap;
  const auto& arrows = p.quiver.arrows();
  for (const auto& a : arrows)
    for (const auto& b : arrows)
      if (a.target == b.source) out.relations.push_back(Relation{{PathTerm{1, {a.label, b.label}}}});
  return out;
}

Vec MultTable::multiply(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  Vec out(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Scalar c = field.mul(x[i], y[j]);
      for (const auto& [k, v] : product(i, j)) out[k] = field.add(out[k], field.mul(c, v));
    }
  }
  return out;
}

bool MultTable::is_associative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij = to_dense(product(i, j), d);
      for (std::size_t k = 0; k < d; ++k) {
        Vec left = multiply(ij, field.unit(d, k));
        Vec right = multiply(field.unit(d, i), to_dense(product(j, k), d));
        if (left != right) return false;
      }
    }
  return true;
}

std::optional<std::size_t> AlgebraTable::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec AlgebraTable::multiply(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  Vec out(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const auto& prod = product(i, j);
      if (prod.empty()) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, v] : prod) out[k] = field_.add(out[k], field_.mul(c, v));
    }
  }
  return out;
}

Vec AlgebraTable::normal_form(const Polynomial& p) const {
  Polynomial r = system_.reduce(p);
  Vec out(dim(), Scalar(0));
  for (const auto& [w, c] : r) out[index_.at(w)] = c;
  return out;
}

Vec AlgebraTable::normal_form(const std::vector<PathTerm>& terms) const {
  Polynomial p;
  for (const auto& t : terms) {
    Word w = resolve_path(quiver_, t.path);
    auto [it, ins] = p.try_emplace(std::move(w), Scalar(0));
    it->second = field_.add(it->second, field_.from_rational(t.coefficient));
    if (it->second == 0) p.erase(it);
  }
  return normal_form(p);
}

Vec AlgebraTable::normal_form_word(const Word& w) const {
  Polynomial p;
  p.emplace(w, Scalar(1));
  return normal_form(p);
}

std::string AlgebraTable::word_label(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += quiver_.arrow(w[i]).label;
  }
  return s;
}

std::string AlgebraTable::label(std::size_t i) const {
  const auto& b = basis_[i];
  if (b.arrows.empty()) return "e" + quiver_.vertices()[b.source];
  return word_label(b.arrows);
}

MultTable AlgebraTable::to_table() const {
  MultTable t;
  t.field = field_;
  for (std::size_t i = 0; i < dim(); ++i) t.labels.push_back(label(i));
  t.mult = mult_;
  for (std::size_t v = 0; v < quiver_.num_vertices(); ++v) t.idempotents.push_back(basis_vector(v));
  t.table_only = false;
  return t;
}

namespace {

Polynomial to_polynomial(const Presentation& p, const Relation& rel) {
  if (rel.terms.empty()) throw Error(ErrorKind::not_admissible, "empty relation");
  const Quiver& q = p.quiver;
  Polynomial poly;
  std::optional<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& t : rel.terms) {
    Word w = resolve_path(q, t.path);
    if (w.size() < 2)
      throw Error(ErrorKind::not_admissible,
                  "relation contains the path '" + t.path.front() + "' of length < 2");
    std::pair<std::size_t, std::size_t> e{q.arrow(w.front()).source, q.arrow(w.back()).target};
    if (ends && *ends != e) throw Error(ErrorKind::not_admissible, "relation terms are not parallel");
    ends = e;
    auto [it, ins] = poly.try_emplace(std::move(w), Scalar(0));
    it->second = p.field.add(it->second, p.field.from_rational(t.coefficient));
    if (it->second == 0) poly.erase(it);
  }
  return poly;
}

}  // namespace

AlgebraTable build_algebra(const Presentation& p) {
  const Quiver& q = p.quiver;
  const Field& f = p.field;
  std::vector<Polynomial> gens;
  for (const auto& rel : p.relations) {
    Polynomial poly = to_polynomial(p, rel);
    if (!poly.empty()) gens.push_back(std::move(poly));
  }
  AlgebraTable a(q, f, ReductionSystem::complete(f, std::move(gens), p.max_length_cap));
  const ReductionSystem& rs = a.system_;

  for (std::size_t v = 0; v < q.num_vertices(); ++v) a.basis_.push_back(BasisPath{v, v, {}});
  std::vector<Word> layer;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) layer.push_back({static_cast<std::uint32_t>(i)});
  std::size_t length = 1;
  while (!layer.empty()) {
    if (length > p.max_length_cap)
      throw Error(ErrorKind::not_finite_dimensional,
                  "normal monomials exist beyond length " + std::to_string(p.max_length_cap));
    std::sort(layer.begin(), layer.end());
    std::vector<Word> next;
    for (const auto& w : layer) {
      a.index_.emplace(w, a.basis_.size());
      a.basis_.push_back(BasisPath{q.arrow(w.front()).source, q.arrow(w.back()).target, w});
      for (std::size_t i = 0; i < q.num_arrows(); ++i) {
        if (q.arrow(i).source != q.arrow(w.back()).target) continue;
        Word ext = w;
        ext.push_back(static_cast<std::uint32_t>(i));
        if (rs.is_normal(ext)) next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
    ++length;
  }

  const std::size_t d = a.basis_.size();
  a.mult_.assign(d * d, SparseVec{});
  for (std::size_t i = 0; i < d; ++i) {
    const auto& bi = a.basis_[i];
    for (std::size_t j = 0; j < d; ++j) {
      const auto& bj = a.basis_[j];
      if (bi.target != bj.source) continue;
      SparseVec& out = a.mult_[i * d + j];
      if (bi.arrows.empty()) {
        out.emplace_back(j, Scalar(1));
      } else if (bj.arrows.empty()) {
        out.emplace_back(i, Scalar(1));
      } else {
        Word w = bi.arrows;
        w.insert(w.end(), bj.arrows.begin(), bj.arrows.end());
        Vec nf = a.normal_form_word(w);
        for (std::size_t k = 0; k < d; ++k)
          if (nf[k] != 0) out.emplace_back(k, nf[k]);
      }
    }
  }

  // Radical filtration; rad^{k+1} = rad^k * (arrow span).
  a.rad_dims_.push_back(d);
  std::vector<Vec> current;
  for (std::size_t i = q.num_vertices(); i < d; ++i) current.push_back(a.basis_vector(i));
  while (true) {
    a.rad_dims_.push_back(current.size());
    if (current.empty()) break;
    Subspace next(f, d);
    for (const auto& x : current)
      for (std::size_t arr = 0; arr < q.num_arrows(); ++arr)
        next.add(a.multiply(x, a.basis_vector(a.arrow_index(arr))));
    if (next.dim() == current.size())
      throw Error(ErrorKind::not_admissible, "the arrow ideal is not nilpotent modulo the relations");
    current = next.basis();
  }
  return a;
}

std::vector<Vec> radical_power_basis(const AlgebraTable& a, std::size_t n) {
  const std::size_t d = a.dim();
  std::vector<Vec> current;
  if (n == 0) {
    for (std::size_t i = 0; i < d; ++i) current.push_back(a.basis_vector(i));
    return current;
  }
  for (std::size_t i = a.quiver().num_vertices(); i < d; ++i) current.push_back(a.basis_vector(i));
  for (std::size_t k = 1; k < n && !current.empty(); ++k) {
    Subspace next(a.field(), d);
    for (const auto& x : current)
      for (std::size_t arr = 0; arr < a.quiver().num_arrows(); ++arr)
        next.add(a.multiply(x, a.basis_vector(a.arrow_index(arr))));
    current = next.basis();
  }
  return current;
}

MultTable idempotent_subalgebra(const AlgebraTable& a, const std::vector<std::size_t>& vertices) {
  std::set<std::size_t> vs(vertices.begin(), vertices.end());
  std::vector<std::size_t> keep;
  std::vector<std::size_t> local(a.dim(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (vs.count(a.basis(i).source) && vs.count(a.basis(i).target)) {
      local[i] = keep.size();
      keep.push_back(i);
    }
  }
  MultTable t;
  t.field = a.field();
  for (auto i : keep) t.labels.push_back(a.label(i));
  const std::size_t n = keep.size();
  t.mult.assign(n * n, SparseVec{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : a.product(keep[i], keep[j])) t.mult[i * n + j].emplace_back(local[k], v);
  for (auto v : vs) t.idempotents.push_back(t.field.unit(n, local[a.idempotent_index(v)]));
  return t;
}

MultTable quotient_table(const MultTable& t, const std::vector<Vec>& ideal) {
  const std::size_t d = t.dim();
  Subspace acc(t.field, d, ideal);
  const std::size_t offset = acc.dim();
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < d; ++i)
    if (acc.add(t.field.unit(d, i))) reps.push_back(i);
  auto project = [&](const Vec& v) {
    Vec c = *acc.coordinates(v);
    return Vec(c.begin() + static_cast<std::ptrdiff_t>(offset), c.end());
  };
  MultTable q;
  q.field = t.field;
  for (auto i : reps) q.labels.push_back(t.labels[i]);
  const std::size_t n = reps.size();
  q.mult.assign(n * n, SparseVec{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = project(to_dense(t.product(reps[i], reps[j]), d));
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) q.mult[i * n + j].emplace_back(k, c[k]);
    }
  for (const auto& e : t.idempotents) q.idempotents.push_back(project(e));
  return q;
}

MultTable local_quotient(const AlgebraTable& a) {
  const std::size_t d = a.dim();
  Subspace ideal(a.field(), d);
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& b = a.basis(i);
    bool mixed = b.source != b.target;
    for (auto arr : b.arrows) mixed = mixed || a.quiver().arrow(arr).target != b.source;
    if (mixed && ideal.add(a.basis_vector(i))) queue.push_back(a.basis_vector(i));
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < d; ++i) {
      Vec l = a.multiply(a.basis_vector(i), v);
      Vec r = a.multiply(v, a.basis_vector(i));
      if (ideal.add(l)) queue.push_back(std::move(l));
      if (ideal.add(r)) queue.push_back(std::move(r));
    }
  }
  return quotient_table(a.to_table(), ideal.basis());
}

}  // namespace hhlie
