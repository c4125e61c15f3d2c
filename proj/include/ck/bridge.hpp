#pragma once

// The cluster/knot correspondence on two and three strands.
//
// jones_bridge evaluates the class of rho(b) for b in B_2: the class a0[1] +
// a1[e1] becomes the formal expression a0 + a1 x in the cluster variable x
// and coefficient c, which is then evaluated (default x -> t, c -> -t^2) and
// multiplied by (-t^1/2 / (t + 1))^N. All values are in s with s^2 = t.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ck/braid.hpp"
#include "ck/laurent.hpp"
#include "json.hpp"

namespace ck {

struct BridgeEvaluation {
  RationalFn x;  // image of the cluster variable
  RationalFn c;  // image of the coefficient
  static BridgeEvaluation standard();  // x -> s^2, c -> -s^4
};

// Formal class expression a0 + a1 x (variables x, c) with its scale.
struct BridgeClass {
  LaurentPoly expression;
  std::vector<mpz_class> coefficients;
  mpz_class scale;
};
BridgeClass bridge_class(const BraidWord& b);

// Throws StrandMismatch unless b has two strands.
RationalFn jones_bridge(const BraidWord& b, int N,
                        const BridgeEvaluation& eval = BridgeEvaluation::standard());

// Residuals of the two steps turning the Jones skein relation into the
// exchange relation. `plus_coeff` and `minus_coeff` are the coefficients of
// W(L+) and W(L-) in the rewritten skein relation, as functions of s; the
// defaults are s^4/(s^4 - 1) and -1/(s^4 - 1).
struct SkeinExchangeCheck {
  RationalFn skein_residual;     // rewritten relation minus the skein relation
  RationalFn exchange_residual;  // substituted relation minus the exchange relation
  bool holds() const { return skein_residual.is_zero() && exchange_residual.is_zero(); }
};
SkeinExchangeCheck skein_exchange_identity(const RationalFn& plus_coeff, const RationalFn& minus_coeff);
SkeinExchangeCheck skein_exchange_identity();
bool skein_exchange_identity_check();
// The same residuals evaluated at rational s and random values of the formal
// symbols; returns the largest absolute residual over `samples` points.
Rational skein_exchange_numeric_residual(const RationalFn& plus_coeff, const RationalFn& minus_coeff,
                                         int samples, unsigned seed);

struct HomflyExchangeCheck {
  RationalFn x3, x4, x5, c3, w;
  RationalFn residual;           // c1 x3 + x5/c1 + c2 W
  bool x3_matches_mutation = false;
  bool c3_matches_mutation = false;
  RationalFn substituted_residual;  // after c1 = x1 = l, c2 = x2 = m
  bool skein_shape = false;         // linear form is l P+ + l^-1 P- + m P0
  Rational spot_residual;           // at (l, m, x1, x2) = (2, 3, 2, 3)
  bool holds() const {
    return residual.is_zero() && x3_matches_mutation && c3_matches_mutation &&
           substituted_residual.is_zero() && skein_shape && spot_residual == 0;
  }
};
HomflyExchangeCheck homfly_exchange_identity();
bool homfly_exchange_check();

struct BridgeCandidate {
  int N;
  RationalFn rhs;
  bool agree;
  std::size_t difference_terms;  // terms in the numerator of lhs - rhs
};

struct BridgeReport {
  BraidWord braid;
  LaurentPoly lhs;  // Jones polynomial from the skein engine (in s)
  BridgeClass cls;
  std::vector<BridgeCandidate> candidates;
  std::optional<int> first_agreeing_N;
  nlohmann::json to_json() const;
};

BridgeReport bridge_report(const BraidWord& b, const std::vector<int>& candidates);
std::vector<int> bridge_range(int lo, int hi);

}  // namespace ck
