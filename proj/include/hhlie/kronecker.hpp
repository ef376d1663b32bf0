#pragma once

// Kronecker pairs and maximal Kronecker chains of A = kQ/I, their rotation
// classes, surjectivity of the attached Delta maps, the literal check of the
// standard relations, and the count m of surjective classes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hhlie/algebra.hpp"
#include "hhlie/derlie.hpp"

namespace hhlie {

/// Two parallel arrows forming a whole parallel class, a before b in declaration order.
struct KroneckerPair {
  std::size_t a = 0, b = 0;
  std::string label_a, label_b;
  bool delta_defined = false;

  friend bool operator==(const KroneckerPair&, const KroneckerPair&) = default;
};

enum class ChainShape { double_loop, cyclic, linear };
std::string_view to_string(ChainShape s);

struct KroneckerChain {
  std::vector<KroneckerPair> pairs;
  ChainShape shape = ChainShape::linear;
  bool maximal = false;

  std::string to_string() const;  // ((a,b),(c,d))
  friend bool operator==(const KroneckerChain&, const KroneckerChain&) = default;
};

struct PairScan {
  std::vector<KroneckerPair> pairs;
  /// Parallel classes with three or more arrows, as arrow indices.
  std::vector<std::vector<std::size_t>> wild_classes;
};

PairScan scan_pairs(const Quiver& q);
std::vector<KroneckerPair> kronecker_pairs(const AlgebraTable& a);

/// Chain conditions between consecutive pairs: t(a_i) = s(a_{i+1}) and one of
/// a_i a_{i+1}, a_i b_{i+1}, b_i a_{i+1}, b_i b_{i+1} is nonzero in A.
bool chain_link(const AlgebraTable& a, const KroneckerPair& p, const KroneckerPair& q);
/// Re-verifies every defining condition of a chain (without maximality).
bool is_chain(const AlgebraTable& a, const std::vector<KroneckerPair>& pairs);

/// All maximal chains, every rotation of a cyclic chain included.
std::vector<KroneckerChain> maximal_chains(const AlgebraTable& a);

struct ChainClass {
  KroneckerChain representative;        // lexicographically smallest member
  std::vector<KroneckerChain> members;  // the rotations present among the maximal chains
};

/// Chains related by rotation form one class; other chains are singletons.
std::vector<ChainClass> equivalence_classes(const std::vector<KroneckerChain>& chains);

struct PairDelta {
  KroneckerPair pair;
  DeltaResult delta;
};

struct SurjectivityResult {
  bool surjective = false;
  bool kernels_coincide = true;
  std::vector<PairDelta> deltas;
  std::vector<std::size_t> image_dims() const;
};

/// Throws UnsupportedCharacteristic, and DeltaUndefined naming the first pair
/// that is not a Kronecker component of the separated quiver.
SurjectivityResult is_surjective_chain(const AlgebraTable& a, const LieAlgebra& h,
                                       const KroneckerChain& c);

struct LiteralCheck {
  bool s1 = true, s2 = true, s3 = true;
  std::vector<std::string> witnesses;  // nonvanishing products, e.g. "a*d", "b*c"
  bool all() const { return s1 && s2 && s3; }
};

LiteralCheck standard_relations_literal(const AlgebraTable& a, const KroneckerChain& c);

struct HypothesisFlags {
  bool char_ne_2 = true;
  bool qs_nonwild_compatible = true;
  bool user_asserted_nonwild = false;
  bool conditional = false;
};

struct ClassReport {
  ChainClass chain_class;
  bool surjective = false;
  bool kernels_coincide = true;
  bool delta_undefined = false;
  std::string note;
  std::vector<PairDelta> deltas;
  LiteralCheck literal;
};

struct ChainReport {
  std::vector<ClassReport> classes;
  std::size_t m = 0;
  std::size_t hh1_rad_dim = 0;
  SeriesResult derived;
  bool solvable = false;
  bool solvable_iff_m_zero = true;
  long solvable_part_dim = 0;          // dim HH^1_rad - 3m
  std::vector<Vec> joint_kernel;       // kernel of the joint Delta map, coordinates in h
  SeriesResult joint_kernel_series;
  bool joint_kernel_solvable = true;
  HypothesisFlags flags;
  std::vector<std::vector<std::string>> wild_classes;
};

/// h must be HH^1_rad(a) with derivation representatives. Throws
/// UnsupportedCharacteristic in characteristic 2.
ChainReport decomposition_report(const AlgebraTable& a, const LieAlgebra& h,
                                 bool user_asserted_nonwild = false);

}  // namespace hhlie
