#include "ck/bridge.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "ck/cluster.hpp"
#include "ck/errors.hpp"
#include "ck/projection_algebra.hpp"
#include "ck/skein.hpp"

namespace ck {

namespace {

RationalFn var(const std::string& name, int power = 1) { return LaurentPoly::variable(name, power); }
RationalFn constant(long c) { return LaurentPoly::constant(c); }

}  // namespace

BridgeEvaluation BridgeEvaluation::standard() { return {var("s", 2), -var("s", 4)}; }

BridgeClass bridge_class(const BraidWord& b) {
  if (b.strands() != 2)
    throw Error(ErrorCode::StrandMismatch, "the bridge is defined on two-strand braids, got " +
                                               std::to_string(b.strands()));
  Algebra alg(2, RelationPreset::paper());
  RhoClass rc = rho_class(alg.rho(b));
  BridgeClass out;
  out.coefficients = rc.coefficients;
  out.scale = rc.scale;
  // basis order {1, e1}; [e1] is carried by the cluster variable x
  out.expression = LaurentPoly::constant(Rational(rc.coefficients[0]), {"x", "c"}) +
                   LaurentPoly::monomial({"x", "c"}, {1, 0}, Rational(rc.coefficients[1]));
  return out;
}

RationalFn jones_bridge(const BraidWord& b, int N, const BridgeEvaluation& eval) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be nonnegative");
  BridgeClass cls = bridge_class(b);
  RationalFn value = poly_substitute(cls.expression, {{"x", eval.x}, {"c", eval.c}});
  RationalFn factor = RationalFn(-LaurentPoly::variable("s"), LaurentPoly::variable("s", 2) + LaurentPoly::constant(1));
  return value * factor.pow(N);
}

// ---------------------------------------------------------------------------

SkeinExchangeCheck skein_exchange_identity(const RationalFn& plus_coeff, const RationalFn& minus_coeff) {
  RationalFn s = var("s"), t = var("s", 2);
  RationalFn vp = var("Vp"), vm = var("Vm");
  // Smoothing value from the skein relation t^-1 V- - t V+ = (s - s^-1) V0.
  RationalFn v0_skein = (t.inverse() * vm - t * vp) / (s - s.inverse());
  // Rewritten form with W = -(t + 1)/s V.
  RationalFn scale = -(t + constant(1)) / s;
  RationalFn wp = scale * vp, wm = scale * vm;
  RationalFn v0_rewritten = plus_coeff * wp + minus_coeff * wm;

  // Substituting W+ = P/x, W- = Q/x, t^2 = -c must give (c P + Q)/((c + 1) x).
  RationalFn P = var("P"), Q = var("Q"), x = var("x"), c = var("c");
  // The coefficients are functions of t^2 = s^4; express them in c.
  auto in_c = [&](const RationalFn& f) -> RationalFn {
    // f(s) must depend on s only through s^4.
    auto only_s4 = [](const LaurentPoly& p) {
      int is = p.variable_index("s");
      for (const auto& [e, coef] : p.terms())
        if (is >= 0 && e[is] % 4 != 0) return false;
      return true;
    };
    auto lower = [](const LaurentPoly& p) {
      int is = p.variable_index("s");
      TermMap terms;
      for (const auto& [e, coef] : p.terms()) terms.emplace(Exponents{is < 0 ? 0 : e[is] / 4}, coef);
      return LaurentPoly({"T"}, std::move(terms));
    };
    if (!only_s4(f.numerator()) || !only_s4(f.denominator()))
      throw Error(ErrorCode::InvalidArgument, "coefficient is not a function of t^2");
    RationalFn g(lower(f.numerator()), lower(f.denominator()));
    return ratfn_substitute(g, {{"T", -var("c")}});
  };
  RationalFn substituted = in_c(plus_coeff) * (P / x) + in_c(minus_coeff) * (Q / x);
  RationalFn exchange = (c * P + Q) / ((c + constant(1)) * x);
  return {v0_rewritten - v0_skein, substituted - exchange};
}

namespace {

RationalFn default_plus() {
  RationalFn t2 = var("s", 4);
  return t2 / (t2 - constant(1));
}

RationalFn default_minus() {
  RationalFn t2 = var("s", 4);
  return -(constant(1) / (t2 - constant(1)));
}

}  // namespace

SkeinExchangeCheck skein_exchange_identity() { return skein_exchange_identity(default_plus(), default_minus()); }

bool skein_exchange_identity_check() { return skein_exchange_identity().holds(); }

Rational skein_exchange_numeric_residual(const RationalFn& plus_coeff, const RationalFn& minus_coeff,
                                         int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  auto draw = [&](bool avoid_units) {
    while (true) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      if (q == 0) continue;
      if (avoid_units && (q == 1 || q == -1)) continue;
      return q;
    }
  };
  Rational worst = 0;
  for (int i = 0; i < samples; ++i) {
    Rational s = draw(true);
    Rational t = s * s;
    Rational vp = draw(false), vm = draw(false);
    std::map<std::string, Rational> at{{"s", s}};
    // V0 from the skein relation and from the rewritten relation.
    Rational v0_skein = (vm / t - t * vp) / (s - 1 / s);
    Rational scale = -(t + 1) / s;
    Rational v0_rewritten = plus_coeff.evaluate(at) * scale * vp + minus_coeff.evaluate(at) * scale * vm;
    Rational r1 = abs(v0_rewritten - v0_skein);
    // Exchange side: P, Q, x random, c = -t^2.
    Rational P = draw(false), Q = draw(false), x = draw(false), c = -t * t;
    Rational lhs = plus_coeff.evaluate(at) * P / x + minus_coeff.evaluate(at) * Q / x;
    Rational rhs = (c * P + Q) / ((c + 1) * x);
    Rational r2 = abs(lhs - rhs);
    if (r1 > worst) worst = r1;
    if (r2 > worst) worst = r2;
  }
  return worst;
}

// ---------------------------------------------------------------------------

HomflyExchangeCheck homfly_exchange_identity() {
  HomflyExchangeCheck h;
  RationalFn x1 = var("x1"), x2 = var("x2"), c1 = var("c1"), c2 = var("c2");
  RationalFn one = constant(1);
  // The system as written, with c3 = 1/c1.
  h.c3 = one / c1;
  h.x3 = (c1 + x2.pow(2)) / ((c1 + one) * x1);
  h.x4 = (c2 * h.x3.pow(2) + one) / ((c2 + one) * x2);
  h.x5 = (h.c3 + h.x4.pow(2)) / ((h.c3 + one) * h.x3);
  RationalFn inner = (c1 + x2.pow(2) - x1 * h.x3) / (c2.pow(2) * x1) +
                     (c1.inverse() - h.x3 * h.x5) / (c2.pow(2) * h.x3) +
                     h.x3.inverse() * ((c2 * h.x3.pow(2) + one) / (c2 * (c2 + one) * x2)).pow(2);
  h.w = -(c2 * inner);
  h.residual = c1 * h.x3 + h.x5 / c1 + c2 * h.w;

  // Compare against mutation of the rank-2 seed in direction 1.
  Seed seed({{0, 2}, {-2, 0}}, Semifield::Universal);
  Seed m1 = seed.mutate(1);
  h.x3_matches_mutation = m1.cluster()[0] == h.x3;
  h.c3_matches_mutation = m1.coefficients()[0] == h.c3;

  // c1 = x1 = l, c2 = x2 = m
  std::map<std::string, RationalFn> lm{{"x1", var("l")}, {"c1", var("l")}, {"x2", var("m")}, {"c2", var("m")}};
  RationalFn px3 = ratfn_substitute(h.x3, lm), px5 = ratfn_substitute(h.x5, lm), pw = ratfn_substitute(h.w, lm);
  RationalFn l = var("l"), m = var("m");
  h.substituted_residual = l * px3 + l.inverse() * px5 + m * pw;

  // The linear form in (P+, P-, P0) must carry the HOMFLY coefficients.
  const SkeinRelation& rel = SkeinRelation::homfly();
  RationalFn Pp = var("Pp"), Pm = var("Pm"), P0 = var("P0");
  RationalFn form = l * Pp + l.inverse() * Pm + m * P0;
  RationalFn homfly = RationalFn(rel.alpha) * Pp + RationalFn(rel.beta) * Pm + RationalFn(rel.gamma) * P0;
  h.skein_shape = (form - homfly).is_zero();

  std::map<std::string, Rational> spot{{"l", 2}, {"m", 3}};
  Rational v3 = px3.evaluate(spot), v5 = px5.evaluate(spot), vw = pw.evaluate(spot);
  h.spot_residual = Rational(2) * v3 + v5 / 2 + Rational(3) * vw;
  return h;
}

bool homfly_exchange_check() { return homfly_exchange_identity().holds(); }

// ---------------------------------------------------------------------------

std::vector<int> bridge_range(int lo, int hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty candidate range");
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

BridgeReport bridge_report(const BraidWord& b, const std::vector<int>& candidates) {
  BridgeReport r;
  r.braid = b;
  r.cls = bridge_class(b);
  r.lhs = jones_skein(b);
  RationalFn lhs(r.lhs);
  for (int N : candidates) {
    RationalFn rhs = jones_bridge(b, N);
    RationalFn diff = lhs - rhs;
    bool agree = diff.is_zero();
    r.candidates.push_back({N, rhs, agree, diff.numerator().size()});
    if (agree && !r.first_agreeing_N) r.first_agreeing_N = N;
  }
  return r;
}

nlohmann::json BridgeReport::to_json() const {
  nlohmann::json cands = nlohmann::json::array();
  std::size_t best = SIZE_MAX;
  for (const auto& c : candidates) best = std::min(best, c.difference_terms);
  std::vector<int> closest;
  for (const auto& c : candidates) {
    cands.push_back({{"N", c.N}, {"rhs", c.rhs.to_string()}, {"rhs_in_t", c.rhs.as_laurent() ? jones_to_string(*c.rhs.as_laurent()) : c.rhs.to_string()},
                     {"agree", c.agree}, {"difference_terms", c.difference_terms}});
    if (c.difference_terms == best) closest.push_back(c.N);
  }
  std::vector<std::string> coeffs;
  for (const auto& a : cls.coefficients) coeffs.push_back(a.get_str());
  nlohmann::json j = {
      {"braid", braid.to_json()},
      {"lhs", jones_to_json(lhs)},
      {"class", {{"basis", {"1", "e1"}}, {"coefficients", coeffs}, {"scale", cls.scale.get_str()},
                 {"expression", cls.expression.to_string()}}},
      {"N_candidates", cands},
      {"first_agreeing_N", first_agreeing_N ? nlohmann::json(*first_agreeing_N) : nlohmann::json(nullptr)},
      {"closest_N", closest},
      {"convention",
       "values in s with s^2 = t; s_i is L+ in t^-1 V(L-) - t V(L+) = (t^1/2 - t^-1/2) V(L0); "
       "class a0[1] + a1[e1] evaluated at [1] -> 1, [e1] -> x -> t, c -> -t^2; "
       "rhs = (-t^1/2/(t+1))^N times the evaluated class"},
  };
  return j;
}

}  // namespace ck
