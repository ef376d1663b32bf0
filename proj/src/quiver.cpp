#include "hhlie/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hhlie/errors.hpp"
#include "hhlie/field.hpp"

namespace hhlie {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  for (auto& v : vertices) add_vertex(std::move(v));
  for (auto& a : arrows) add_arrow(std::move(a.label), a.source, a.target);
}

std::size_t Quiver::add_vertex(std::string label) {
  if (vertex_index(label))
    throw Error(ErrorKind::invalid_input, "duplicate vertex '" + label + "'");
  vertices_.push_back(std::move(label));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string label, std::size_t source, std::size_t target) {
  if (arrow_index(label)) throw Error(ErrorKind::invalid_input, "duplicate arrow '" + label + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw Error(ErrorKind::invalid_input, "arrow '" + label + "' refers to an undeclared vertex");
  arrows_.push_back(Arrow{std::move(label), source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

bool Quiver::is_acyclic() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return seen == n;
}

Quiver separated_quiver(const Quiver& q) {
  Quiver s;
  for (const auto& v : q.vertices()) s.add_vertex(v);
  for (const auto& v : q.vertices()) s.add_vertex(v + "'");
  for (const auto& a : q.arrows()) s.add_arrow(a.label + "s", a.source, q.num_vertices() + a.target);
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::dynkin: return "Dynkin";
    case Verdict::euclidean: return "Euclidean";
    case Verdict::neither: return "Neither";
  }
  return "Neither";
}

std::string_view to_string(RepType r) {
  switch (r) {
    case RepType::finite: return "Finite";
    case RepType::tame: return "Tame";
    case RepType::wild: return "Wild";
  }
  return "Wild";
}

bool GraphClass::all_dynkin() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& c) { return c.verdict == Verdict::dynkin; });
}

bool GraphClass::all_dynkin_or_euclidean() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& c) { return c.verdict != Verdict::neither; });
}

bool GraphClass::contains(std::string_view name) const {
  return std::any_of(components.begin(), components.end(),
                     [&](const auto& c) { return c.name == name; });
}

Multigraph underlying_graph(const Quiver& q, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> local(q.num_vertices(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  Multigraph g;
  g.adjacency.assign(vertices.size(), std::vector<unsigned>(vertices.size(), 0));
  for (const auto& a : q.arrows()) {
    std::size_t s = local[a.source], t = local[a.target];
    if (s == static_cast<std::size_t>(-1) || t == static_cast<std::size_t>(-1)) continue;
    if (s == t) {
      ++g.adjacency[s][s];
    } else {
      ++g.adjacency[s][t];
      ++g.adjacency[t][s];
    }
  }
  return g;
}

Verdict tits_verdict(const Multigraph& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (g.adjacency[i][i] != 0) return Verdict::neither;
  std::vector<std::vector<mpq_class>> c(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i][j] = (i == j ? 2 : 0) - static_cast<long>(g.adjacency[i][j]);
  std::size_t nullity = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k][k] < 0) return Verdict::neither;
    if (c[k][k] == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (c[k][j] != 0) return Verdict::neither;
      ++nullity;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (c[i][k] == 0) continue;
      mpq_class f = c[i][k] / c[k][k];
      for (std::size_t j = k; j < n; ++j) c[i][j] -= f * c[k][j];
    }
  }
  if (nullity == 0) return Verdict::dynkin;
  if (nullity == 1) return Verdict::euclidean;
  return Verdict::neither;
}

namespace {

// Lengths of the arms hanging off a branch vertex of a tree, sorted ascending.
std::vector<std::size_t> arm_lengths(const std::vector<std::vector<std::size_t>>& nbrs,
                                     std::size_t centre) {
  std::vector<std::size_t> arms;
  for (std::size_t start : nbrs[centre]) {
    std::size_t prev = centre, cur = start, len = 1;
    while (nbrs[cur].size() == 2) {
      std::size_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (nbrs[cur].size() > 2) return {};  // ran into another branch vertex
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

std::optional<CatalogueMatch> catalogue_match(const Multigraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (g.adjacency[i][i] != 0) return std::nullopt;
  if (n == 1) return CatalogueMatch{Verdict::dynkin, "A1"};
  if (n == 2) {
    if (g.adjacency[0][1] == 1) return CatalogueMatch{Verdict::dynkin, "A2"};
    if (g.adjacency[0][1] == 2) return CatalogueMatch{Verdict::euclidean, "~A1"};
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> nbrs(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacency[i][j] > 1) return std::nullopt;
      if (g.adjacency[i][j] == 1) nbrs[i].push_back(j);
      if (j > i) edges += g.adjacency[i][j];
    }
  std::vector<std::size_t> branch;
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    max_deg = std::max(max_deg, nbrs[i].size());
    if (nbrs[i].size() >= 3) branch.push_back(i);
  }
  const std::string sn = std::to_string(n);
  const std::string sn1 = std::to_string(n - 1);
  if (edges == n) {
    if (max_deg == 2) return CatalogueMatch{Verdict::euclidean, "~A" + sn1};
    return std::nullopt;
  }
  if (edges != n - 1) return std::nullopt;
  if (max_deg <= 2) return CatalogueMatch{Verdict::dynkin, "A" + sn};
  if (branch.size() == 1) {
    auto arms = arm_lengths(nbrs, branch[0]);
    if (arms.size() == 4 && n == 5) return CatalogueMatch{Verdict::euclidean, "~D4"};
    if (arms.size() != 3) return std::nullopt;
    const auto p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return CatalogueMatch{Verdict::dynkin, "D" + sn};
    if (p == 1 && q == 2 && r >= 2 && r <= 4) return CatalogueMatch{Verdict::dynkin, "E" + sn};
    if (p == 2 && q == 2 && r == 2) return CatalogueMatch{Verdict::euclidean, "~E6"};
    if (p == 1 && q == 3 && r == 3) return CatalogueMatch{Verdict::euclidean, "~E7"};
    if (p == 1 && q == 2 && r == 5) return CatalogueMatch{Verdict::euclidean, "~E8"};
    return std::nullopt;
  }
  if (branch.size() == 2 && max_deg == 3) {
    // ~D_{n-1}: two degree-3 vertices, each carrying two leaves
    for (std::size_t b : branch) {
      std::size_t leaves = 0;
      for (std::size_t x : nbrs[b])
        if (nbrs[x].size() == 1) ++leaves;
      if (leaves != 2) return std::nullopt;
    }
    return CatalogueMatch{Verdict::euclidean, "~D" + sn1};
  }
  return std::nullopt;
}

GraphClass classify_components(const Quiver& q) {
  GraphClass out;
  for (auto& comp : q.components()) {
    Multigraph g = underlying_graph(q, comp);
    ComponentClass cc;
    cc.vertices = std::move(comp);
    cc.verdict = tits_verdict(g);
    if (cc.verdict != Verdict::neither) {
      if (auto m = catalogue_match(g); m && m->verdict == cc.verdict) cc.name = m->name;
    }
    out.components.push_back(std::move(cc));
  }
  return out;
}

RepType reptype_radsq(const Quiver& q) {
  GraphClass gc = classify_components(separated_quiver(q));
  if (gc.all_dynkin()) return RepType::finite;
  if (gc.all_dynkin_or_euclidean()) return RepType::tame;
  return RepType::wild;
}

std::size_t hereditary_hh1_dim(const Quiver& q) {
  if (!q.is_acyclic()) throw Error(ErrorKind::not_acyclic, "quiver has a directed cycle");
  const std::size_t n = q.num_vertices();
  // paths[u][v]: number of directed paths u -> v, filled in reverse topological order
  std::vector<std::size_t> order;
  {
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& a : q.arrows()) ++indeg[a.target];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (const auto& a : q.arrows())
        if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  std::vector<std::vector<std::size_t>> paths(n, std::vector<std::size_t>(n, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t u = *it;
    paths[u][u] = 1;
    for (const auto& a : q.arrows())
      if (a.source == u)
        for (std::size_t v = 0; v < n; ++v) paths[u][v] += paths[a.target][v];
  }
  long total = 0;
  for (const auto& comp : q.components()) {
    long c = 1 - static_cast<long>(comp.size());
    for (const auto& a : q.arrows())
      if (std::find(comp.begin(), comp.end(), a.source) != comp.end())
        c += static_cast<long>(paths[a.source][a.target]);
    total += c;
  }
  return static_cast<std::size_t>(total);
}

}  // namespace hhlie
