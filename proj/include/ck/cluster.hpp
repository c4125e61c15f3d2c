#pragma once

// Cluster seeds and their mutations.
//
// Mutation in direction k (1-based) applies, with B = (b_ij):
//
//   b'_ij = -b_ij                                   if i = k or j = k
//           b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2  otherwise
//   c'_j  = 1 / c_k                                 if j = k
//           c_j c_k^max(b_kj, 0) / (c_k (+) 1)^b_kj otherwise
//   x'_k  = (c_k prod x_i^max(b_ik, 0) + prod x_i^max(-b_ik, 0)) / ((c_k (+) 1) x_k)
//
// Coefficients live in one of three semifields:
//   universal  symbolic c_1..c_n, (+) is ordinary addition
//   tropical   monomials y^e in y_1..y_n, (+) is the componentwise minimum of
//              exponents; the initial coefficients are y_1..y_n
//   trivial    the one-element semifield: every c is 1 and 1 (+) 1 = 1, so
//              mutation is coefficient-free
//
// Cluster variables are rational functions of the initial variables x_1..x_n
// (and of the coefficient generators where those enter the numerators).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ck/laurent.hpp"
#include "json.hpp"

namespace ck {

using IntMatrix = std::vector<std::vector<int>>;

enum class Semifield { Universal, Tropical, Trivial };

const char* semifield_name(Semifield s);
Semifield semifield_from_name(const std::string& name);

bool is_skew_symmetric(const IntMatrix& m);
// Direction k is 1-based; throws IndexOutOfRange.
IntMatrix mutate_matrix(const IntMatrix& m, int k);
// Equal up to a simultaneous row/column permutation and a global sign.
bool matrix_equivalent(const IntMatrix& a, const IntMatrix& b);

class Seed {
 public:
  // Initial seed on the matrix; `frozen` lists 1-based frozen directions.
  // Throws InvalidArgument for a non-square or non-skew-symmetric matrix.
  Seed(IntMatrix matrix, Semifield semifield, std::vector<int> frozen = {});

  // "S02" (rank 2, b12 = 2) or "S11" (rank 3 torus-with-cusp triangulation).
  static Seed preset(const std::string& name, Semifield semifield = Semifield::Universal);
  // {"n": 3, "entries": [[...]], "frozen": [1-based indices]}; "n" optional.
  static Seed from_json(const nlohmann::json& j, Semifield semifield = Semifield::Universal);

  int rank() const { return static_cast<int>(matrix_.size()); }
  Semifield semifield() const { return semifield_; }
  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<RationalFn>& cluster() const { return cluster_; }
  // Universal: the coefficient functions. Tropical/trivial: y^e rendered as
  // Laurent monomials (1 for trivial).
  std::vector<RationalFn> coefficients() const;
  const std::vector<std::vector<int>>& tropical_exponents() const { return tropical_; }
  const std::vector<bool>& frozen() const { return frozen_; }
  bool is_frozen(int k) const { return frozen_.at(k - 1); }
  // x1..xn followed by the coefficient generators (c1.. or y1..).
  const std::vector<std::string>& variables() const { return variables_; }

  // Mutation in direction k (1-based). Throws IndexOutOfRange, FrozenDirection.
  Seed mutate(int k) const;

  // Structural equality: matrix, cluster, coefficients, frozen flags.
  friend bool operator==(const Seed& a, const Seed& b);

  // Canonical text of the seed with positions permuted by perm (position p
  // of the result shows original position perm[p]). Coefficients are
  // included only in universal mode.
  std::string key(const std::vector<int>& perm) const;
  // Minimal key over all permutations of positions: the class of the seed
  // under simultaneous relabelling.
  std::string canonical_key() const;

  nlohmann::json to_json() const;
  std::string describe() const;

 private:
  IntMatrix matrix_;
  Semifield semifield_;
  std::vector<RationalFn> cluster_;
  std::vector<RationalFn> coeffs_;             // universal
  std::vector<std::vector<int>> tropical_;     // tropical
  std::vector<bool> frozen_;
  std::vector<std::string> variables_;
};

Seed mutate_seed(const Seed& s, int k);
// mutate(mutate(s, k), k) == s. Throws FrozenDirection / IndexOutOfRange.
bool involutivity_check(const Seed& s, int k);

struct LaurentEntry {
  std::vector<int> sequence;  // mutation directions leading to the variable
  std::string variable;
  std::string denominator;    // monomial denominator, or the offending one
  bool laurent = false;
  bool integer_coefficients = false;
};

struct LaurentReport {
  int depth = 0;
  std::size_t sequences = 0;
  std::vector<LaurentEntry> entries;  // one per distinct cluster variable
  std::size_t violations = 0;
  nlohmann::json to_json() const;
};

// Mutation sequences of length <= depth without immediate back-mutation; every
// distinct cluster variable is checked to be Laurent in the x's (coefficient
// variables may appear in the denominator) with integer coefficients.
LaurentReport check_laurent_phenomenon(const Seed& s, int depth);

struct BratteliDiagram {
  std::vector<std::vector<std::string>> levels;
  // edges[k][(i, j)] = multiplicity of edges from levels[k][i] to levels[k+1][j]
  std::vector<std::map<std::pair<int, int>, int>> edges;

  std::vector<std::size_t> level_sizes() const;
  std::string to_dot(const std::string& name = "bratteli") const;
  nlohmann::json to_json() const;
};

struct MutationGraph {
  std::vector<std::vector<Seed>> levels;  // one representative per class
  std::vector<std::map<std::pair<int, int>, int>> edges;
  // edge labels: directions used, per (i, j)
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> directions;
};

// Level k holds the classes (under canonical_key) of seeds reached by exactly
// k mutations; edges count the mutations joining classes of consecutive levels.
MutationGraph mutation_graph(const Seed& s, int depth);
BratteliDiagram bratteli_from_mutations(const MutationGraph& g);

// Leveled isomorphism preserving edge multiplicities.
bool bratteli_isomorphic(const BratteliDiagram& a, const BratteliDiagram& b);
// Pascal-triangle (GICAR) diagram with `levels` levels.
BratteliDiagram pascal_diagram(int levels);
// Reference three-level diagram for the rank-3 torus seed: branching 1 -> 3
// -> 7 where the outer level-1 vertices share one child each with the middle.
BratteliDiagram three_fold_reference();

}  // namespace ck
