#include "hhlie/kronecker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hhlie/errors.hpp"

namespace hhlie {

std::string_view to_string(ChainShape s) {
  switch (s) {
    case ChainShape::double_loop: return "DoubleLoop";
    case ChainShape::cyclic: return "Cyclic";
    case ChainShape::linear: return "Linear";
  }
  return "?";
}

std::string KroneckerChain::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    s += "(" + pairs[i].label_a + "," + pairs[i].label_b + ")";
  }
  return s + ")";
}

PairScan scan_pairs(const Quiver& q) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < q.num_arrows(); ++i)
    classes[{q.arrow(i).source, q.arrow(i).target}].push_back(i);
  PairScan out;
  for (const auto& [ends, arrows] : classes) {
    if (arrows.size() == 2) {
      KroneckerPair p;
      p.a = arrows[0];
      p.b = arrows[1];
      p.label_a = q.arrow(p.a).label;
      p.label_b = q.arrow(p.b).label;
      p.delta_defined = delta_defined(q, p.a, p.b);
      out.pairs.push_back(std::move(p));
    } else if (arrows.size() > 2) {
      out.wild_classes.push_back(arrows);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const KroneckerPair& x, const KroneckerPair& y) { return x.a < y.a; });
  return out;
}

std::vector<KroneckerPair> kronecker_pairs(const AlgebraTable& a) {
  return scan_pairs(a.quiver()).pairs;
}

bool chain_link(const AlgebraTable& a, const KroneckerPair& p, const KroneckerPair& q) {
  const Quiver& quiver = a.quiver();
  if (quiver.arrow(p.a).target != quiver.arrow(q.a).source) return false;
  for (auto x : {p.a, p.b})
    for (auto y : {q.a, q.b}) {
      Word w{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
      if (!is_zero(a.normal_form_word(w))) return true;
    }
  return false;
}

bool is_chain(const AlgebraTable& a, const std::vector<KroneckerPair>& pairs) {
  if (pairs.empty()) return false;
  const Quiver& q = a.quiver();
  std::set<std::size_t> seen;
  for (const auto& p : pairs) {
    if (p.a == p.b) return false;
    if (q.arrow(p.a).source != q.arrow(p.b).source || q.arrow(p.a).target != q.arrow(p.b).target)
      return false;
    if (!seen.insert(p.a).second || !seen.insert(p.b).second) return false;
  }
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (!chain_link(a, pairs[i], pairs[i + 1])) return false;
  return true;
}

namespace {

ChainShape shape_of(const Quiver& q, const std::vector<KroneckerPair>& pairs) {
  const bool closes = q.arrow(pairs.front().a).source == q.arrow(pairs.back().a).target;
  if (pairs.size() == 1) return closes ? ChainShape::double_loop : ChainShape::linear;
  return closes ? ChainShape::cyclic : ChainShape::linear;
}

std::vector<std::size_t> key_of(const KroneckerChain& c) {
  std::vector<std::size_t> k;
  for (const auto& p : c.pairs) k.push_back(p.a);
  return k;
}

}  // namespace

std::vector<KroneckerChain> maximal_chains(const AlgebraTable& a) {
  const auto pairs = kronecker_pairs(a);
  const std::size_t n = pairs.size();
  std::vector<std::vector<bool>> link(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) link[i][j] = chain_link(a, pairs[i], pairs[j]);

  std::vector<KroneckerChain> out;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto extendable = [&](bool at_end) {
    const std::size_t anchor = at_end ? path.back() : path.front();
    for (std::size_t j = 0; j < n; ++j)
      if (!used[j] && (at_end ? link[anchor][j] : link[j][anchor])) return true;
    return false;
  };
  auto dfs = [&](auto&& self) -> void {
    if (!extendable(true)) {
      if (!extendable(false)) {
        KroneckerChain c;
        for (auto i : path) c.pairs.push_back(pairs[i]);
        c.shape = shape_of(a.quiver(), c.pairs);
        c.maximal = true;
        out.push_back(std::move(c));
      }
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !link[path.back()][j]) continue;
      used[j] = true;
      path.push_back(j);
      self(self);
      path.pop_back();
      used[j] = false;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    used[i] = true;
    path = {i};
    dfs(dfs);
    used[i] = false;
  }
  std::sort(out.begin(), out.end(), [](const KroneckerChain& x, const KroneckerChain& y) {
    return key_of(x) < key_of(y);
  });
  return out;
}

std::vector<ChainClass> equivalence_classes(const std::vector<KroneckerChain>& chains) {
  std::map<std::vector<std::size_t>, ChainClass> groups;
  for (const auto& c : chains) {
    std::vector<std::size_t> key = key_of(c);
    if (c.shape == ChainShape::cyclic) {
      std::vector<std::size_t> rot = key;
      for (std::size_t r = 1; r < rot.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        key = std::min(key, rot);
      }
    }
    groups[key].members.push_back(c);
  }
  std::vector<ChainClass> out;
  for (auto& [key, cls] : groups) {
    cls.representative = *std::min_element(
        cls.members.begin(), cls.members.end(),
        [](const KroneckerChain& x, const KroneckerChain& y) { return key_of(x) < key_of(y); });
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> SurjectivityResult::image_dims() const {
  std::vector<std::size_t> d;
  for (const auto& pd : deltas) d.push_back(pd.delta.image_dim);
  return d;
}

SurjectivityResult is_surjective_chain(const AlgebraTable& a, const LieAlgebra& h,
                                       const KroneckerChain& c) {
  if (a.field().characteristic() == 2)
    throw Error(ErrorKind::unsupported_characteristic, "Delta maps need characteristic != 2");
  SurjectivityResult out;
  for (const auto& p : c.pairs) {
    if (!p.delta_defined)
      throw Error(ErrorKind::delta_undefined, "Delta(" + p.label_a + "," + p.label_b +
                                                  ") is undefined: the pair is not a Kronecker "
                                                  "component of the separated quiver");
    out.deltas.push_back(PairDelta{p, delta_map(a, p.a, p.b, h)});
  }
  std::optional<Subspace> first_kernel;
  for (const auto& pd : out.deltas) {
    if (!pd.delta.surjective) continue;
    out.surjective = true;
    if (!first_kernel) {
      first_kernel.emplace(a.field(), h.dim(), pd.delta.kernel_basis);
      continue;
    }
    Subspace other(a.field(), h.dim(), pd.delta.kernel_basis);
    bool same = other.dim() == first_kernel->dim();
    for (const auto& v : pd.delta.kernel_basis) same = same && first_kernel->contains(v);
    out.kernels_coincide = out.kernels_coincide && same;
  }
  return out;
}

LiteralCheck standard_relations_literal(const AlgebraTable& a, const KroneckerChain& c) {
  LiteralCheck out;
  const Quiver& q = a.quiver();
  const Field& f = a.field();
  auto word = [](std::size_t x, std::size_t y) {
    return Word{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
  };
  std::set<std::size_t> inside;
  for (const auto& p : c.pairs) {
    inside.insert(p.a);
    inside.insert(p.b);
  }
  for (auto x : inside)
    for (std::size_t y = 0; y < q.num_arrows(); ++y) {
      if (inside.count(y)) continue;
      for (const Word& w : {word(x, y), word(y, x)}) {
        if (q.arrow(w[0]).target != q.arrow(w[1]).source) continue;
        if (!is_zero(a.normal_form_word(w))) {
          out.s1 = false;
          out.witnesses.push_back(a.word_label(w));
        }
      }
    }
  auto triple = [&](const KroneckerPair& p, const KroneckerPair& r, bool& flag) {
    for (const Word& w : {word(p.a, r.a), word(p.b, r.b)})
      if (!is_zero(a.normal_form_word(w))) {
        flag = false;
        out.witnesses.push_back(a.word_label(w));
      }
    Vec mixed = a.normal_form_word(word(p.a, r.b));
    f.axpy(mixed, Scalar(1), a.normal_form_word(word(p.b, r.a)));
    if (!is_zero(mixed)) {
      flag = false;
      out.witnesses.push_back(a.word_label(word(p.a, r.b)));
      out.witnesses.push_back(a.word_label(word(p.b, r.a)));
    }
  };
  for (std::size_t i = 0; i + 1 < c.pairs.size(); ++i) triple(c.pairs[i], c.pairs[i + 1], out.s2);
  if (q.arrow(c.pairs.front().a).source == q.arrow(c.pairs.back().a).target)
    triple(c.pairs.back(), c.pairs.front(), out.s3);
  return out;
}

ChainReport decomposition_report(const AlgebraTable& a, const LieAlgebra& h,
                                 bool user_asserted_nonwild) {
  const Field& f = a.field();
  if (f.characteristic() == 2)
    throw Error(ErrorKind::unsupported_characteristic,
                "the Kronecker decomposition needs characteristic != 2");
  ChainReport out;
  const Quiver& q = a.quiver();
  const PairScan scan = scan_pairs(q);
  for (const auto& cls : scan.wild_classes) {
    std::vector<std::string> labels;
    for (auto i : cls) labels.push_back(q.arrow(i).label);
    out.wild_classes.push_back(std::move(labels));
  }
  out.flags.char_ne_2 = true;
  out.flags.user_asserted_nonwild = user_asserted_nonwild;
  out.flags.qs_nonwild_compatible =
      scan.wild_classes.empty() && classify_components(separated_quiver(q)).all_dynkin_or_euclidean();

  bool any_undefined = false;
  std::vector<const DeltaResult*> chosen;
  for (auto& cls : equivalence_classes(maximal_chains(a))) {
    ClassReport r;
    r.literal = standard_relations_literal(a, cls.representative);
    try {
      SurjectivityResult s = is_surjective_chain(a, h, cls.representative);
      r.surjective = s.surjective;
      r.kernels_coincide = s.kernels_coincide;
      r.deltas = std::move(s.deltas);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::delta_undefined) throw;
      r.delta_undefined = true;
      r.note = e.what();
      any_undefined = true;
    }
    r.chain_class = std::move(cls);
    out.classes.push_back(std::move(r));
  }
  for (const auto& r : out.classes) {
    if (!r.surjective) continue;
    ++out.m;
    for (const auto& pd : r.deltas)
      if (pd.delta.surjective) {
        chosen.push_back(&pd.delta);
        break;
      }
  }

  out.hh1_rad_dim = h.dim();
  out.derived = derived_series(h);
  out.solvable = out.derived.terminates;
  out.solvable_iff_m_zero = out.solvable == (out.m == 0);
  out.solvable_part_dim = static_cast<long>(h.dim()) - 3 * static_cast<long>(out.m);

  Mat joint(f, 3 * chosen.size(), h.dim());
  for (std::size_t k = 0; k < chosen.size(); ++k)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      joint(3 * k, j) = chosen[k]->images[j].x;
      joint(3 * k + 1, j) = chosen[k]->images[j].y;
      joint(3 * k + 2, j) = chosen[k]->images[j].z;
    }
  if (chosen.empty()) {
    for (std::size_t j = 0; j < h.dim(); ++j) out.joint_kernel.push_back(f.unit(h.dim(), j));
  } else {
    out.joint_kernel = kernel_basis(joint);
  }
  out.joint_kernel_series = derived_series(h.subalgebra(out.joint_kernel));
  out.joint_kernel_solvable = out.joint_kernel_series.terminates;

  out.flags.conditional = !out.flags.qs_nonwild_compatible || any_undefined;
  return out;
}

}  // namespace hhlie
