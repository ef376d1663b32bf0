#include "hhlie/oracle.hpp"

#include <map>
#include <set>

#include "hhlie/errors.hpp"

namespace hhlie {

namespace {

// Leibniz rows of one pair (i, j): one row per output coordinate k.
void leibniz_rows(const MultTable& t, std::size_t i, std::size_t j,
                  std::vector<std::map<std::size_t, Scalar>>& rows) {
  const Field& f = t.field;
  const std::size_t d = t.dim();
  for (auto& r : rows) r.clear();
  auto add = [&](std::size_t k, std::size_t col, const Scalar& c) {
    auto [it, fresh] = rows[k].try_emplace(col, Scalar(0));
    it->second = f.add(it->second, c);
  };
  // b_i f(b_j)
  for (std::size_t l = 0; l < d; ++l)
    for (const auto& [k, c] : t.product(i, l)) add(k, j * d + l, c);
  // - f(b_i b_j)
  for (const auto& [m, c] : t.product(i, j))
    for (std::size_t k = 0; k < d; ++k) add(k, m * d + k, f.neg(c));
  // f(b_i) b_j
  for (std::size_t l = 0; l < d; ++l)
    for (const auto& [k, c] : t.product(l, j)) add(k, i * d + l, c);
}

SparseVec to_sparse(const std::map<std::size_t, Scalar>& m) {
  SparseVec v;
  for (const auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

// The map [b_x, -] flattened: entry y*d + l is the b_l coefficient of b_x b_y - b_y b_x.
SparseVec inner_column(const MultTable& t, std::size_t x) {
  const Field& f = t.field;
  const std::size_t d = t.dim();
  SparseVec col;
  for (std::size_t y = 0; y < d; ++y) {
    std::map<std::size_t, Scalar> v;
    for (const auto& [l, s] : t.product(x, y)) v[l] = f.add(v[l], s);
    for (const auto& [l, s] : t.product(y, x)) v[l] = f.sub(v[l], s);
    for (const auto& [l, s] : v)
      if (s != 0) col.emplace_back(y * d + l, s);
  }
  return col;
}

void guard(std::size_t d) {
  if (d > kOracleMaxDim)
    throw Error(ErrorKind::too_large, "dimension " + std::to_string(d) +
                                          " exceeds the cochain oracle limit " +
                                          std::to_string(kOracleMaxDim));
}

}  // namespace

CochainProblem cochain_problem(const MultTable& t) {
  const std::size_t d = t.dim();
  guard(d);
  CochainProblem c{t.field, d, {}, {}};
  // (d0 x)(y) = x y - y x; column x, row (m = y, l)
  c.d0.assign(d * d, SparseVec{});
  for (std::size_t x = 0; x < d; ++x)
    for (const auto& [r, s] : inner_column(t, x)) c.d0[r].emplace_back(x, s);
  std::vector<std::map<std::size_t, Scalar>> rows(d);
  c.d1.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      leibniz_rows(t, i, j, rows);
      for (std::size_t k = 0; k < d; ++k) c.d1.push_back(to_sparse(rows[k]));
    }
  return c;
}

bool composite_vanishes(const CochainProblem& c) {
  const Field& f = c.field;
  const std::size_t d = c.d;
  for (std::size_t x = 0; x < d; ++x) {
    Vec image(d * d, Scalar(0));
    for (std::size_t r = 0; r < d * d; ++r)
      for (const auto& [col, s] : c.d0[r])
        if (col == x) image[r] = s;
    for (const auto& row : c.d1) {
      Scalar acc(0);
      for (const auto& [col, s] : row)
        if (image[col] != 0) acc = f.add(acc, f.mul(s, image[col]));
      if (acc != 0) return false;
    }
  }
  return true;
}

std::size_t bar_hh1_dim(const MultTable& t) {
  const std::size_t d = t.dim();
  guard(d);
  const Field& f = t.field;
  // rank d0 = rank of its transpose: one row per x
  SparseEchelon image0(f, d * d);
  for (std::size_t x = 0; x < d; ++x) image0.add_row(inner_column(t, x));
  SparseEchelon e1(f, d * d);
  std::vector<std::map<std::size_t, Scalar>> rows(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      leibniz_rows(t, i, j, rows);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVec r = to_sparse(rows[k]);
        if (!r.empty()) e1.add_row(std::move(r));
      }
    }
  return d * d - e1.rank() - image0.rank();
}

std::size_t bar_hh1_dim(const AlgebraTable& a) {
  guard(a.dim());
  return bar_hh1_dim(a.to_table());
}

std::vector<Vec> derivations_from_table(const MultTable& t) {
  if (!t.is_associative())
    throw Error(ErrorKind::not_associative, "multiplication table is not associative");
  const std::size_t d = t.dim();
  const Field& f = t.field;
  SparseEchelon e(f, d * d);
  std::vector<std::map<std::size_t, Scalar>> rows(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      leibniz_rows(t, i, j, rows);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVec r = to_sparse(rows[k]);
        if (!r.empty()) e.add_row(std::move(r));
      }
    }
  for (const auto& idem : t.idempotents)
    for (std::size_t l = 0; l < d; ++l) {
      SparseVec r;
      for (std::size_t m = 0; m < d; ++m)
        if (idem[m] != 0) r.emplace_back(m * d + l, idem[m]);
      if (!r.empty()) e.add_row(std::move(r));
    }
  return e.kernel_basis();
}

bool is_table_derivation(const MultTable& t, const Vec& fmap) {
  const std::size_t d = t.dim();
  const Field& f = t.field;
  std::vector<std::map<std::size_t, Scalar>> rows(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      leibniz_rows(t, i, j, rows);
      for (const auto& r : rows) {
        Scalar acc(0);
        for (const auto& [col, s] : r)
          if (fmap[col] != 0) acc = f.add(acc, f.mul(s, fmap[col]));
        if (acc != 0) return false;
      }
    }
  return true;
}

Vec as_table_map(const DerivationCalculus& calc, const Derivation& d) {
  const auto on = calc.on_basis(d);
  const std::size_t n = on.size();
  Vec out(n * n, Scalar(0));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l) out[m * n + l] = on[m][l];
  return out;
}

Vec restrict_map(const AlgebraTable& a, const Vec& fmap, const std::vector<std::size_t>& vertices) {
  std::set<std::size_t> vs(vertices.begin(), vertices.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (vs.count(a.basis(i).source) && vs.count(a.basis(i).target)) keep.push_back(i);
  const std::size_t d = a.dim(), n = keep.size();
  Vec out(n * n, Scalar(0));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l) out[m * n + l] = fmap[keep[m] * d + keep[l]];
  return out;
}

Sl2Element table_delta(const MultTable& t, const Vec& fmap, std::size_t ia, std::size_t ib) {
  const Field& f = t.field;
  const std::size_t d = t.dim();
  Sl2Element s;
  s.x = f.div(f.sub(fmap[ia * d + ia], fmap[ib * d + ib]), f.from_int(2));
  s.y = fmap[ib * d + ia];
  s.z = fmap[ia * d + ib];
  return s;
}

}  // namespace hhlie
