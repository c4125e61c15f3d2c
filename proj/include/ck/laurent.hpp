#pragma once

// Exact multivariate Laurent polynomials and rational functions over Q.
//
// A LaurentPoly carries its own ordered variable list. Binary operations on
// polynomials with different lists align them by name union (left operand's
// variables first). Terms are kept in graded-lexicographic order, ascending,
// which is also the canonical print order:
//
//   -t^-4 + t^-3 + t^-1
//   x2^2*x1^-1 + x1^-1
//
// RationalFn stores num/den in lowest terms. Monomial factors of the
// denominator are folded into the numerator as negative exponents, so a
// rational function is Laurent exactly when its stored denominator is 1.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ck {

using Rational = mpq_class;
using Exponents = std::vector<int>;

struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Rational, GradedLexLess>;

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);
  LaurentPoly(std::vector<std::string> variables, TermMap terms);

  static LaurentPoly constant(const Rational& c,
                              std::vector<std::string> variables = {});
  static LaurentPoly variable(const std::string& name, int power = 1);
  static LaurentPoly monomial(std::vector<std::string> variables,
                              Exponents exponents, const Rational& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // A monomial with coefficient +-1: a unit of Z[x^{+-1}].
  bool is_unit_monomial() const;

  int variable_index(std::string_view name) const;  // -1 when absent
  bool uses_variable(std::string_view name) const;
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  int min_degree(std::string_view name) const;
  int max_degree(std::string_view name) const;
  // Highest term in the graded order.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Exponents& e) const;
  bool has_integer_coefficients() const;

  // Same polynomial expressed over `variables`; throws InvalidArgument if a
  // variable in use would be dropped.
  LaurentPoly over(const std::vector<std::string>& variables) const;
  // Drops variables that no term uses.
  LaurentPoly compacted() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Negative powers are allowed only for monomials.
  LaurentPoly pow(int k) const;
  // Multiplies every term by x^shift (shift indexed by this->variables()).
  LaurentPoly shifted(const Exponents& shift) const;
  // Substitutes x -> x^-1 for the named variable.
  LaurentPoly invert_variable(std::string_view name) const;
  // Substitutes name -> replacement (replacement must be a unit monomial when
  // the variable occurs with negative exponent).
  LaurentPoly substitute(std::string_view name, const LaurentPoly& replacement) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;

  std::string to_string() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyArithOp { Add, Sub, Mul };
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyArithOp op);

// Polynomial helpers used by rational-function reduction. Inputs are Laurent
// polynomials; divisibility is taken in the Laurent ring (monomials are units).
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);
// Greatest common divisor in Q[x^{+-1}], normalised to a primitive integer
// polynomial with no monomial factor and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(LaurentPoly p);  // NOLINT: implicit from polynomial
  RationalFn(const LaurentPoly& numerator, const LaurentPoly& denominator);

  static RationalFn constant(const Rational& c) { return RationalFn(LaurentPoly::constant(c)); }
  static RationalFn variable(const std::string& name) {
    return RationalFn(LaurentPoly::variable(name));
  }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<LaurentPoly> as_laurent() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  RationalFn inverse() const;
  RationalFn pow(int k) const;
  // Same function with both parts expressed over `variables`.
  RationalFn over(const std::vector<std::string>& variables) const;

  // Exact value at a rational point; throws ZeroDenominator at a pole.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  // Numerator and denominator with the folded monomial pulled back into the
  // denominator, both with nonnegative exponents.
  std::pair<LaurentPoly, LaurentPoly> display_parts() const;
  std::string to_string() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;

 private:
  struct Reduced {};
  RationalFn(Reduced, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  friend RationalFn ratfn_reduce(const LaurentPoly&, const LaurentPoly&);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(1);
};

// Lowest-terms form of num/den. Throws ZeroDenominator.
RationalFn ratfn_reduce(const LaurentPoly& numerator, const LaurentPoly& denominator);
RationalFn ratfn_reduce(const RationalFn& f);

// Laurent phenomenon test: the reduced denominator is a monomial.
std::optional<LaurentPoly> is_laurent(const RationalFn& f);

// Exact substitution of rational functions for variables. Every variable that
// occurs in p must be bound. Throws BindingToZero when a variable that occurs
// with a negative exponent is bound to zero.
RationalFn poly_substitute(const LaurentPoly& p,
                           const std::map<std::string, RationalFn>& bindings);
RationalFn ratfn_substitute(const RationalFn& f,
                            const std::map<std::string, RationalFn>& bindings);

}  // namespace ck
