#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hhlie/algebra.hpp"
#include "hhlie/dsl.hpp"

namespace hhlie::fixtures {

inline std::filesystem::path corpus_dir() { return HHLIE_CORPUS_DIR; }

inline Presentation corpus(const std::string& name) {
  return load_presentation(corpus_dir() / (name + ".dsl"));
}

inline AlgebraTable corpus_algebra(const std::string& name) { return build_algebra(corpus(name)); }

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".dsl") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t arrow(const AlgebraTable& a, const std::string& label) {
  return *a.quiver().arrow_index(label);
}

/// Same algebra with the arrows declared in the order given by perm.
inline Presentation permute_arrows(const Presentation& p, const std::vector<std::size_t>& perm) {
  std::vector<Arrow> arrows;
  for (auto i : perm) arrows.push_back(p.quiver.arrow(i));
  Presentation out = p;
  out.quiver = Quiver(p.quiver.vertices(), arrows);
  return out;
}

/// Same ideal with relation r multiplied by scale[r].
inline Presentation rescale(const Presentation& p, const std::vector<Scalar>& scale) {
  Presentation out = p;
  for (std::size_t r = 0; r < out.relations.size(); ++r)
    for (auto& t : out.relations[r].terms) t.coefficient *= scale[r];
  return out;
}

/// Acyclic quiver: arrows only go from lower to higher vertex index, then
/// vertices are shuffled so the order is not visible in the labels.
inline Quiver random_acyclic_quiver(std::mt19937& rng, std::size_t max_vertices,
                                    std::size_t max_arrows) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> na(1, max_arrows);
  const std::size_t m = na(rng);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Quiver q;
  for (std::size_t i = 0; i < n; ++i) q.add_vertex(std::to_string(i + 1));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t s = pick(rng), t = pick(rng);
    while (s == t) t = pick(rng);
    if (s > t) std::swap(s, t);
    q.add_arrow("a" + std::to_string(k), order[s], order[t]);
  }
  return q;
}

}  // namespace hhlie::fixtures
