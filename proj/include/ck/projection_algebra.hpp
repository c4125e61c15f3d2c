#pragma once

// The projection algebra on generators e_1..e_{n-1} with
//
//   e_i^2 = mu e_i,   e_i e_{i+-1} e_i = kappa e_i,   e_i e_j = e_j e_i (|i-j| >= 2)
//
// and its basis of reduced words (Jones normal form). Products are computed
// on planar diagrams: every word of length L whose diagram has `loops`
// closed loops and reduces to a basis word of length L_r equals
//
//   mu^loops * kappa^((L - L_r - loops)/2) * (basis word),
//
// which is what repeated application of the three relations produces.
//
// A braid generator s_i is represented by u_i = a e_i + b.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ck/braid.hpp"
#include "ck/laurent.hpp"
#include "json.hpp"

namespace ck {

constexpr int kMaxStrands = 9;

struct BasisTables;

// Product of descending runs e_top e_{top-1} ... e_bottom.
class ReducedWord {
 public:
  struct Run {
    int top;
    int bottom;
    friend bool operator==(const Run&, const Run&) = default;
  };

  ReducedWord() = default;  // identity
  // Throws InvalidArgument unless tops and bottoms strictly increase.
  explicit ReducedWord(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::vector<int> letters() const;
  int length() const;
  bool is_identity() const { return runs_.empty(); }
  int max_index() const { return runs_.empty() ? 0 : runs_.back().top; }

  // "e2e1·e3"; the identity prints as "1".
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  // Canonical order: length, then letters lexicographically.
  friend bool operator<(const ReducedWord& a, const ReducedWord& b);

 private:
  std::vector<Run> runs_;
};

std::uint64_t catalan(int n);

// Every reduced word on e_1..e_{n-1}, identity included, in canonical order.
// Throws StrandLimitExceeded for n > kMaxStrands, InvalidArgument for n < 1.
const std::vector<ReducedWord>& reduced_words(int n);

// Planar diagram on 2n points: 0..n-1 on top, n..2n-1 on the bottom.
using Diagram = std::vector<std::uint8_t>;

Diagram identity_diagram(int n);
Diagram generator_diagram(int n, int i);
// Stacks a on top of b; `loops` receives the closed loops created.
Diagram compose(const Diagram& a, const Diagram& b, int& loops);
// Loops of the closure joining top p to bottom p.
int closure_loops(const Diagram& d);
Diagram word_diagram(int n, const std::vector<int>& letters, int& loops);

struct RelationPreset {
  std::string name;
  LaurentPoly square;    // mu
  LaurentPoly sandwich;  // kappa
  // u_i = a e_i + b represents s_i and u_i^-1 = inv_a e_i + inv_b represents
  // its inverse. Absent when the preset carries no braid representation or
  // the inverse is not a Laurent polynomial.
  std::optional<LaurentPoly> a, b, inv_a, inv_b;

  // mu = 1, kappa = -2, u_i = e_i + 1.
  static RelationPreset paper();
  // mu = 1, kappa = -(a+b)b/a^2 with symbolic a, b; u_i = a e_i + b.
  static RelationPreset parametric();
  // mu = d symbolic, kappa = 1; no braid representation.
  static RelationPreset temperley_lieb();
  // mu = -A^2 - A^-2, kappa = 1, u_i = A^-1 e_i + A.
  static RelationPreset kauffman();
  // Any relations; the inverse is derived when it exists.
  static RelationPreset custom(std::string name, LaurentPoly square, LaurentPoly sandwich,
                               std::optional<LaurentPoly> a = std::nullopt,
                               std::optional<LaurentPoly> b = std::nullopt);
  // paper | parametric | temperley_lieb (tl) | kauffman
  static RelationPreset by_name(const std::string& name);

  bool represents_braids() const { return a && b; }
};

// Linear combination of basis words; keys index reduced_words(n).
class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1);

  int n() const { return n_; }
  const std::map<std::size_t, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(std::size_t index) const;
  LaurentPoly coefficient(const ReducedWord& w) const;
  // True when every coefficient is a rational constant.
  bool has_rational_coefficients() const;

  void add(std::size_t index, const LaurentPoly& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  // "1 - 1/2*e1", "(a + b)*e2e1"; zero prints as "0".
  std::string to_string() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;

 private:
  int n_;
  std::map<std::size_t, LaurentPoly> terms_;
};

class Algebra {
 public:
  Algebra(int n, RelationPreset preset);

  int n() const { return n_; }
  const RelationPreset& preset() const { return preset_; }
  const std::vector<ReducedWord>& basis() const;
  std::size_t index_of(const ReducedWord& w) const;

  AlgebraElement zero() const { return AlgebraElement(n_); }
  AlgebraElement one() const;
  AlgebraElement word(const ReducedWord& w, const LaurentPoly& c = LaurentPoly::constant(1)) const;
  AlgebraElement generator(int i) const;

  // Normal form of e_{l1} e_{l2} ... (letters in 1..n-1).
  AlgebraElement normal_form(const std::vector<int>& letters) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  // x * e_i
  AlgebraElement times_generator(const AlgebraElement& x, int i) const;

  // a e_i + b and its inverse; throw PresetMismatch / NotInvertible.
  AlgebraElement u(int i) const;
  AlgebraElement u_inverse(int i) const;
  AlgebraElement rho(const BraidWord& b) const;

  // Requires kappa = 1 (PresetMismatch otherwise): tr(w) = mu^(loops(closure w) - n).
  RationalFn markov_trace(const AlgebraElement& x) const;
  // sum c_w mu^(loops(closure w) - 1); a polynomial multiple of the trace.
  LaurentPoly closure_sum(const AlgebraElement& x) const;

 private:
  // mu^loops kappa^((length_in - L_r - loops)/2) for a word reducing to `index`.
  LaurentPoly reduction_scalar(std::size_t index, int length_in, int loops) const;

  int n_;
  RelationPreset preset_;
  std::shared_ptr<const BasisTables> tables_;
};

// Both braid relations for every generator pair of B_n under the preset.
bool braid_relation_check(int n, const RelationPreset& preset);

// Integer class of rho(b): coefficient vector over the basis scaled by the
// least common denominator, with the scale. Requires rational coefficients.
struct RhoClass {
  std::vector<mpz_class> coefficients;
  mpz_class scale;
};
RhoClass rho_class(const AlgebraElement& x);

}  // namespace ck
