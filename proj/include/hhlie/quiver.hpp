#pragma once

// Quivers, their separated quivers, and Dynkin/Euclidean recognition of the
// underlying multigraph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hhlie {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Paths compose left to right: in "ab", t(a) = s(b).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t add_vertex(std::string label);
  std::size_t add_arrow(std::string label, std::size_t source, std::size_t target);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }

  std::optional<std::size_t> vertex_index(std::string_view label) const;
  std::optional<std::size_t> arrow_index(std::string_view label) const;
  bool is_loop(std::size_t arrow) const { return arrows_[arrow].source == arrows_[arrow].target; }

  /// Vertex sets of the connected components of the underlying graph.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_acyclic() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Vertices v and v' for every v; an arrow a: i -> j becomes a^s: i -> j'.
/// Vertex v keeps index v, v' gets index |Q0| + v.
Quiver separated_quiver(const Quiver& q);

enum class Verdict { dynkin, euclidean, neither };
std::string_view to_string(Verdict v);

struct ComponentClass {
  std::vector<std::size_t> vertices;
  Verdict verdict = Verdict::neither;
  std::string name;  // "A3", "~A1", "D5", ... empty when neither
};

struct GraphClass {
  std::vector<ComponentClass> components;

  bool all_dynkin() const;
  bool all_dynkin_or_euclidean() const;
  bool contains(std::string_view name) const;
};

/// Multigraph on n vertices; adjacency[i][j] counts edges, adjacency[i][i] counts loops.
struct Multigraph {
  std::vector<std::vector<unsigned>> adjacency;
  std::size_t size() const { return adjacency.size(); }
};

Multigraph underlying_graph(const Quiver& q, const std::vector<std::size_t>& vertices);

/// Definiteness of the symmetric form 2 Id - Adj on a connected multigraph.
Verdict tits_verdict(const Multigraph& g);

struct CatalogueMatch {
  Verdict verdict;
  std::string name;
};
/// Names a connected multigraph from the ADE / extended ADE lists by shape.
std::optional<CatalogueMatch> catalogue_match(const Multigraph& g);

GraphClass classify_components(const Quiver& q);

enum class RepType { finite, tame, wild };
std::string_view to_string(RepType r);

/// Exact only for quivers of radical-square-zero algebras.
RepType reptype_radsq(const Quiver& q);

/// dim HH^1(kQ) for acyclic Q: per component 1 - |Q0| + sum over arrows of the
/// number of paths s(a) -> t(a). Throws NotAcyclic.
std::size_t hereditary_hh1_dim(const Quiver& q);

}  // namespace hhlie
