#include "hhlie/field.hpp"

#include <algorithm>
#include <charconv>

#include "hhlie/errors.hpp"

namespace hhlie {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::not_admissible: return "NotAdmissible";
    case ErrorKind::not_finite_dimensional: return "NotFiniteDimensional";
    case ErrorKind::invalid_arrow: return "InvalidArrow";
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::quotient_undefined: return "QuotientUndefined";
    case ErrorKind::not_acyclic: return "NotAcyclic";
    case ErrorKind::delta_undefined: return "DeltaUndefined";
    case ErrorKind::unsupported_characteristic: return "UnsupportedCharacteristic";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::not_associative: return "NotAssociative";
  }
  return "Error";
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p))
    throw Error(ErrorKind::invalid_input, "characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  if (text.substr(0, 3) == "fp:") {
    unsigned long p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(ErrorKind::invalid_input, "unknown field '" + std::string(text) + "'");
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "fp:" + std::to_string(p_); }

void Field::reduce(Scalar& s) const {
  if (p_ == 0) return;
  mpz_class p(p_);
  mpz_class num = s.get_num() % p;
  mpz_class den = s.get_den() % p;
  if (den == 0)
    throw Error(ErrorKind::invalid_input, "denominator divisible by the characteristic");
  if (num < 0) num += p;
  if (den != 1) {
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * dinv) % p;
  }
  s = Scalar(num);
}

Scalar Field::from_int(long v) const {
  Scalar s(v);
  reduce(s);
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s(q);
  reduce(s);
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0 && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0 && r < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (p_ != 0) {
    mpz_class n = r.get_num() % mpz_class(p_);
    r = Scalar(n);
  }
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ != 0) return a == 0 ? Scalar(0) : Scalar(p_ - a);
  return -a;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorKind::invalid_input, "division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

void Field::axpy(Vec& y, const Scalar& a, const Vec& x) const {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = add(y[i], mul(a, x[i]));
}

void Field::scale(Vec& v, const Scalar& a) const {
  for (auto& s : v) s = mul(s, a);
}

Vec Field::unit(std::size_t n, std::size_t i) const {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Vec to_dense(const SparseVec& s, std::size_t n) {
  Vec v(n, Scalar(0));
  for (const auto& [i, c] : s) v[i] += c;
  return v;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::apply(const Vec& v) const {
  Vec out(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0)
        out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
  return out;
}

Echelon rref(Mat m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead_row, k));
    Scalar piv_inv = f.inv(m(lead_row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) = f.mul(m(lead_row, k), piv_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(lead_row, k) != 0) m(i, k) = f.sub(m(i, k), f.mul(factor, m(lead_row, k)));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(Field f, std::size_t ambient, const std::vector<Vec>& gens)
    : field_(f), ambient_(ambient) {
  for (const auto& g : gens) add(g);
}

Vec Subspace::residual(const Vec& v) const {
  Vec w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (w[pivots_[k]] == 0) continue;
    Scalar c = field_.neg(w[pivots_[k]]);
    field_.axpy(w, c, rows_[k]);
  }
  return w;
}

bool Subspace::add(const Vec& v) {
  const std::size_t n = basis_.size();
  Vec w = v;
  Vec combo(n + 1, Scalar(0));
  combo[n] = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (w[pivots_[k]] == 0) continue;
    Scalar c = field_.neg(w[pivots_[k]]);
    field_.axpy(w, c, rows_[k]);
    Vec ck = combos_[k];
    ck.resize(n + 1, Scalar(0));
    field_.axpy(combo, c, ck);
  }
  auto it = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return s != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  Scalar inv = field_.inv(w[piv]);
  field_.scale(w, inv);
  field_.scale(combo, inv);
  for (auto& c : combos_) c.resize(n + 1, Scalar(0));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k][piv] == 0) continue;
    Scalar c = field_.neg(rows_[k][piv]);
    field_.axpy(rows_[k], c, w);
    field_.axpy(combos_[k], c, combo);
  }
  rows_.push_back(std::move(w));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  basis_.push_back(v);
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(residual(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  const std::size_t n = basis_.size();
  Vec coords(n, Scalar(0));
  Vec w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = w[pivots_[k]];
    if (c == 0) continue;
    field_.axpy(w, field_.neg(c), rows_[k]);
    field_.axpy(coords, c, combos_[k]);
  }
  if (!is_zero(w)) return std::nullopt;
  return coords;
}

SubspaceReport subspace_ops(const Field& f, const std::vector<Vec>& span_a,
                            const std::vector<Vec>& span_b, bool want_quotient) {
  std::size_t n = 0;
  if (!span_a.empty()) n = span_a.front().size();
  else if (!span_b.empty()) n = span_b.front().size();
  Subspace a(f, n, span_a);
  Subspace b(f, n, span_b);
  Subspace sum(f, n, span_a);
  for (const auto& v : span_b) sum.add(v);

  SubspaceReport rep;
  rep.dim_a = a.dim();
  rep.dim_b = b.dim();
  rep.dim_sum = sum.dim();
  rep.dim_intersection = rep.dim_a + rep.dim_b - rep.dim_sum;
  if (want_quotient) {
    if (rep.dim_sum != rep.dim_a)
      throw Error(ErrorKind::quotient_undefined, "span_b is not contained in span_a");
    Subspace acc(f, n, span_b);
    for (const auto& v : a.basis())
      if (acc.add(v)) rep.quotient_reps.push_back(v);
  }
  return rep;
}

namespace {

SparseVec normalize_sparse(const Field& f, SparseVec row) {
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) out.back().second = f.add(out.back().second, v);
    else out.emplace_back(c, v);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

// a - factor * b, both sorted
SparseVec sparse_axpy(const Field& f, const SparseVec& a, const Scalar& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.neg(f.mul(factor, b[j].second)));
      ++j;
    } else {
      Scalar v = f.sub(a[i].second, f.mul(factor, b[j].second));
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(SparseVec row) {
  row = normalize_sparse(field_, std::move(row));
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t pr = pivot_row_[lead];
    if (pr == npos) {
      Scalar inv = field_.inv(row.front().second);
      for (auto& e : row) e.second = field_.mul(e.second, inv);
      pivot_row_[lead] = rows_.size();
      rows_.push_back(std::move(row));
      return true;
    }
    Scalar factor = row.front().second;
    row = sparse_axpy(field_, row, factor, rows_[pr]);
  }
  return false;
}

std::vector<Vec> SparseEchelon::kernel_basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rows_[x].front().first > rows_[y].front().first;
  });
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (pivot_row_[free] != npos) continue;
    Vec x(cols_, Scalar(0));
    x[free] = 1;
    for (std::size_t r : order) {
      const auto& row = rows_[r];
      Scalar acc(0);
      for (std::size_t k = 1; k < row.size(); ++k)
        if (x[row[k].first] != 0) acc = field_.add(acc, field_.mul(row[k].second, x[row[k].first]));
      x[row.front().first] = field_.neg(acc);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hhlie
