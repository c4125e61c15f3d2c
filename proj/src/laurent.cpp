#include "ck/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
  if (q.get_den() == 0)
    throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// Brings both operands onto a common variable list; returns false when the
// lists already agree and nothing was copied.
bool align(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& a2, LaurentPoly& b2) {
  if (a.variables() == b.variables()) return false;
  auto vars = union_variables(a.variables(), b.variables());
  a2 = a.over(vars);
  b2 = b.over(vars);
  return true;
}

void add_term(TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string monomial_text(const std::vector<std::string>& vars, const Exponents& e,
                          bool latex) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += latex ? " " : "*";
    out += vars[i];
    if (e[i] != 1) {
      if (latex)
        out += "^{" + std::to_string(e[i]) + "}";
      else
        out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

std::string coefficient_text(const Rational& c, bool latex) {
  if (!latex || c.get_den() == 1) return rational_to_string(c);
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string render(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    std::string mono = monomial_text(p.variables(), e, latex);
    std::string term;
    if (mono.empty()) {
      term = coefficient_text(mag, latex);
    } else if (mag == 1) {
      term = mono;
    } else {
      term = coefficient_text(mag, latex) + (latex ? " " : "*") + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

LaurentPoly::LaurentPoly(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size())
      throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match variables");
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::constant(const Rational& c, std::vector<std::string> variables) {
  LaurentPoly p(std::move(variables));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int power) {
  return monomial({name}, {power}, 1);
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exponents,
                                  const Rational& c) {
  if (exponents.size() != variables.size())
    throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match variables");
  LaurentPoly p(std::move(variables));
  if (c != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rational> LaurentPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

int LaurentPoly::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool LaurentPoly::uses_variable(std::string_view name) const {
  int i = variable_index(name);
  if (i < 0) return false;
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
    }
  }
  return m;
}

int LaurentPoly::min_degree(std::string_view name) const {
  int i = variable_index(name);
  if (i < 0 || terms_.empty()) return 0;
  return min_exponents()[i];
}

int LaurentPoly::max_degree(std::string_view name) const {
  int i = variable_index(name);
  if (i < 0 || terms_.empty()) return 0;
  return max_exponents()[i];
}

const Exponents& LaurentPoly::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

LaurentPoly LaurentPoly::over(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<int> target(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) target[i] = static_cast<int>(it - variables.begin());
  }
  LaurentPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0)
        throw Error(ErrorCode::InvalidArgument, "variable '" + vars_[i] + "' would be dropped");
      f[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::compacted() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool any = std::any_of(terms_.begin(), terms_.end(),
                           [i](const auto& t) { return t.first[i] != 0; });
    if (any) used.push_back(vars_[i]);
  }
  return over(used);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.vars_ != vars_) {
    LaurentPoly a, b;
    align(*this, other, a, b);
    a += b;
    return *this = std::move(a);
  }
  for (const auto& [e, c] : other.terms_) add_term(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_) {
    LaurentPoly a2, b2;
    align(a, b, a2, b2);
    return a2 * b2;
  }
  LaurentPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out.terms_, e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  LaurentPoly a2, b2;
  align(a, b, a2, b2);
  return a2.terms_ == b2.terms_;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1)
      throw Error(ErrorCode::NotInvertible, "negative power of a non-monomial: " + to_string());
    const auto& [e, c] = *terms_.begin();
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] * k;
    Rational ck = 1;
    for (int i = 0; i < -k; ++i) ck /= c;
    return monomial(vars_, std::move(f), ck);
  }
  LaurentPoly result = constant(1, vars_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::invert_variable(std::string_view name) const {
  int idx = variable_index(name);
  if (idx < 0) return *this;
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx] = -f[idx];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(std::string_view name, const LaurentPoly& replacement) const {
  int idx = variable_index(name);
  if (idx < 0) return *this;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
  auto vars = union_variables(rest, replacement.variables());
  LaurentPoly rep = replacement.over(vars);
  std::map<int, LaurentPoly> powers;
  LaurentPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0, j = 0; i < vars_.size(); ++i) {
      if (static_cast<int>(i) == idx) continue;
      f[j++] = e[i];
    }
    auto it = powers.find(e[idx]);
    if (it == powers.end()) it = powers.emplace(e[idx], rep.pow(e[idx])).first;
    out += monomial(vars, std::move(f), c) * it->second;
  }
  return out;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i])
        throw Error(ErrorCode::UnboundVariable, "no value for variable '" + vars_[i] + "'");
      const Rational& v = *values[i];
      if (e[i] < 0 && v == 0)
        throw Error(ErrorCode::ZeroDenominator, "negative power of zero for '" + vars_[i] + "'");
      Rational base = e[i] > 0 ? v : Rational(1 / v);
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string() const { return render(*this, false); }
std::string LaurentPoly::to_latex() const { return render(*this, true); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    terms.push_back({{"coeff", rational_to_string(c)}, {"exps", e}});
  return {{"variables", vars_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  try {
    LaurentPoly p(j.at("variables").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exps").get<Exponents>();
      if (e.size() != p.vars_.size())
        throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match variables");
      add_term(p.terms_, e, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polynomial JSON: ") + ex.what());
  }
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyArithOp op) {
  switch (op) {
    case PolyArithOp::Add: return a + b;
    case PolyArithOp::Sub: return a - b;
    case PolyArithOp::Mul: return a * b;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Division and gcd. Internally everything is a polynomial (nonnegative
// exponents) on a shared variable list; monomials are units of the Laurent
// ring, so they are stripped before any gcd work.

namespace {

Exponents negated(Exponents e) {
  for (auto& x : e) x = -x;
  return e;
}

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(negated(p.min_exponents()));
}

// Polynomial division with the graded order; nullopt when b does not divide a.
std::optional<LaurentPoly> divide_poly(LaurentPoly r, const LaurentPoly& b) {
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  LaurentPoly q(r.variables());
  TermMap qterms;
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    Exponents m(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      m[i] = lr[i] - lb[i];
      if (m[i] < 0) return std::nullopt;
    }
    Rational c = r.leading_coefficient() / cb;
    LaurentPoly step = LaurentPoly::monomial(r.variables(), m, c);
    qterms.emplace(m, c);
    r -= step * b;
  }
  return LaurentPoly(q.variables(), std::move(qterms));
}

int degree_in(const LaurentPoly& p, int v) {
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

LaurentPoly coefficient_in(const LaurentPoly& p, int v, int degree) {
  TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != degree) continue;
    Exponents f = e;
    f[v] = 0;
    out.emplace(std::move(f), c);
  }
  return LaurentPoly(p.variables(), std::move(out));
}

// Primitive integer polynomial with positive leading coefficient.
LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

LaurentPoly unit_poly(const std::vector<std::string>& vars) { return LaurentPoly::constant(1, vars); }

LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0);

LaurentPoly content_in(const LaurentPoly& p, int v) {
  int d = degree_in(p, v);
  LaurentPoly g;
  bool first = true;
  for (int k = d; k >= 0; --k) {
    LaurentPoly c = coefficient_in(p, v, k);
    if (c.is_zero()) continue;
    if (first) {
      g = normalized(strip_monomial(c));
      first = false;
    } else {
      g = gcd_rec(g, c);
    }
    if (g.is_constant()) return unit_poly(p.variables());
  }
  return g;
}

LaurentPoly primitive_in(const LaurentPoly& p, int v) {
  LaurentPoly c = content_in(p, v);
  if (c.is_constant()) return strip_monomial(p);
  auto q = divide_poly(p, c);
  return strip_monomial(*q);
}

using Univariate = std::vector<Rational>;  // coefficient of v^k at index k

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Image of p in Q[v] with every other variable set to point[i]; empty when the
// leading coefficient in v vanishes.
Univariate univariate_image(const LaurentPoly& p, int v, const std::vector<Rational>& point) {
  Univariate u(degree_in(p, v) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == v) continue;
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    u[e[v]] += term;
  }
  if (u.back() == 0) return {};
  return u;
}

std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational q = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

// If g = gcd(a, b) has degree k in v, then so does its image in Q[v] with the
// other variables evaluated where neither leading coefficient in v vanishes,
// and that image divides the gcd of the images. Returns the degree of the
// image gcd (an upper bound for k), or -1 when no usable point was found.
int gcd_degree_bound(const LaurentPoly& a, const LaurentPoly& b, int v) {
  const std::size_t nv = a.variables().size();
  static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> point(nv);
    for (std::size_t i = 0; i < nv; ++i) point[i] = primes[(i + 5 * attempt) % 14] * (attempt + 1);
    Univariate ua = univariate_image(a, v, point);
    Univariate ub = univariate_image(b, v, point);
    if (ua.empty() || ub.empty()) continue;
    return static_cast<int>(univariate_gcd_degree(ua, ub));
  }
  return -1;
}

// lc(b)^(deg a - deg b + 1) a mod b, in v.
LaurentPoly full_pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, int v) {
  int db = degree_in(b, v);
  int budget = degree_in(a, v) - db + 1;
  LaurentPoly lb = coefficient_in(b, v, db);
  LaurentPoly r = a;
  int steps = 0;
  while (!r.is_zero()) {
    int dr = degree_in(r, v);
    if (dr < db) break;
    LaurentPoly lr = coefficient_in(r, v, dr);
    Exponents shift(r.variables().size(), 0);
    shift[v] = dr - db;
    r = lb * r - lr * b.shifted(shift);
    ++steps;
  }
  if (budget > steps) r *= lb.pow(budget - steps);
  return r;
}

// Subresultant remainder sequence; a, b primitive in v with deg a >= deg b.
LaurentPoly subresultant_gcd(LaurentPoly a, LaurentPoly b, int v) {
  const auto vars = a.variables();
  LaurentPoly g = unit_poly(vars), h = unit_poly(vars);
  while (true) {
    int delta = degree_in(a, v) - degree_in(b, v);
    LaurentPoly r = full_pseudo_remainder(a, b, v);
    if (r.is_zero()) return primitive_in(b, v);
    if (degree_in(r, v) == 0) return unit_poly(vars);
    a = std::move(b);
    b = *divide_poly(r, g * h.pow(delta));
    g = coefficient_in(a, v, degree_in(a, v));
    if (delta == 1) h = g;
    else if (delta > 1) h = *divide_poly(g.pow(delta), h.pow(delta - 1));
  }
}

// a, b nonzero polynomials over the same variables.
LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0) {
  LaurentPoly a = strip_monomial(a0), b = strip_monomial(b0);
  const auto& vars = a.variables();
  if (a.is_constant() || b.is_constant()) return unit_poly(vars);
  if (a == b) return normalized(a);

  Exponents ma = a.max_exponents(), mb = b.max_exponents();
  const int nv = static_cast<int>(vars.size());
  // A variable used by one operand only cannot occur in the gcd.
  for (int i = 0; i < nv; ++i) {
    if ((ma[i] > 0) == (mb[i] > 0)) continue;
    return gcd_rec(ma[i] > 0 ? content_in(a, i) : a, mb[i] > 0 ? content_in(b, i) : b);
  }
  int v = -1;
  bool coprime = true;
  for (int i = 0; i < nv; ++i) {
    if (ma[i] == 0) continue;
    int bound = gcd_degree_bound(a, b, i);
    if (bound == 0) continue;
    coprime = false;
    if (v < 0 || std::max(ma[i], mb[i]) < std::max(ma[v], mb[v])) v = i;
  }
  if (coprime) return unit_poly(vars);
  for (int i = 0; i < nv; ++i) {
    if (ma[i] == 0 || i == v) continue;
    if (gcd_degree_bound(a, b, i) == 0) return gcd_rec(content_in(a, i), content_in(b, i));
  }

  // Cheap exits: one operand divides the other.
  if (ma[v] >= mb[v]) {
    if (divide_poly(a, b)) return normalized(b);
  } else if (divide_poly(b, a)) {
    return normalized(a);
  }

  LaurentPoly c = gcd_rec(content_in(a, v), content_in(b, v));
  LaurentPoly pa = primitive_in(a, v), pb = primitive_in(b, v);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  LaurentPoly g = subresultant_gcd(pa, pb, v);
  return normalized(strip_monomial(c * g));
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (b0.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  LaurentPoly a = a0, b = b0;
  align(a0, b0, a, b);
  if (a.is_zero()) return a;
  Exponents ma = a.min_exponents(), mb = b.min_exponents();
  auto q = divide_poly(a.shifted(negated(ma)), b.shifted(negated(mb)));
  if (!q) return std::nullopt;
  Exponents shift(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) shift[i] = ma[i] - mb[i];
  return q->shifted(shift);
}

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  LaurentPoly a = a0, b = b0;
  align(a0, b0, a, b);
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return normalized(strip_monomial(b));
  if (b.is_zero()) return normalized(strip_monomial(a));
  return gcd_rec(a, b);
}

// ---------------------------------------------------------------------------

RationalFn::RationalFn(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::constant(1, num_.variables())) {}

RationalFn::RationalFn(const LaurentPoly& numerator, const LaurentPoly& denominator)
    : RationalFn(ratfn_reduce(numerator, denominator)) {}

RationalFn ratfn_reduce(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  LaurentPoly n = numerator, d = denominator;
  align(numerator, denominator, n, d);
  const auto vars = n.variables();
  if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (n.is_zero()) return RationalFn(RationalFn::Reduced{}, n, LaurentPoly::constant(1, vars));

  Exponents md = negated(d.min_exponents());
  d = d.shifted(md);
  n = n.shifted(md);
  if (auto c = d.constant_value())
    return RationalFn(RationalFn::Reduced{}, n * Rational(1 / *c), LaurentPoly::constant(1, vars));
  if (auto q = exact_divide(n, d))
    return RationalFn(RationalFn::Reduced{}, *q, LaurentPoly::constant(1, vars));

  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_constant()) {
    n = *exact_divide(n, g);
    d = *exact_divide(d, g);
    Exponents shift = negated(d.min_exponents());
    d = d.shifted(shift);
    n = n.shifted(shift);
  }
  LaurentPoly dn = normalized(d);
  Rational scale = dn.leading_coefficient() / d.leading_coefficient();
  return RationalFn(RationalFn::Reduced{}, n * scale, dn);
}

RationalFn ratfn_reduce(const RationalFn& f) { return ratfn_reduce(f.numerator(), f.denominator()); }

std::optional<LaurentPoly> RationalFn::as_laurent() const {
  if (den_.is_constant()) return num_;
  return std::nullopt;
}

std::optional<LaurentPoly> is_laurent(const RationalFn& f) { return ratfn_reduce(f).as_laurent(); }

RationalFn RationalFn::operator-() const { return RationalFn(Reduced{}, -num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    LaurentPoly s = a.num_ + b.num_;
    return RationalFn(RationalFn::Reduced{}, s, LaurentPoly::constant(1, s.variables()));
  }
  if (a.den_ == b.den_) return ratfn_reduce(a.num_ + b.num_, a.den_);
  // Both operands are reduced, so only g = gcd(den a, den b) can cancel.
  LaurentPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) return ratfn_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  LaurentPoly da = *exact_divide(a.den_, g), db = *exact_divide(b.den_, g);
  LaurentPoly n = a.num_ * db + b.num_ * da;
  RationalFn part = ratfn_reduce(n, g);
  return ratfn_reduce(part.num_, part.den_ * da * db);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) {
    LaurentPoly z = a.num_ * b.num_;
    return RationalFn(RationalFn::Reduced{}, z, LaurentPoly::constant(1, z.variables()));
  }
  if (a.den_.is_constant() && b.den_.is_constant()) {
    LaurentPoly p = a.num_ * b.num_;
    return RationalFn(RationalFn::Reduced{}, p, LaurentPoly::constant(1, p.variables()));
  }
  // Cross cancellation keeps the gcd work on the smaller factors.
  auto cancel = [](const LaurentPoly& n, const LaurentPoly& d) {
    RationalFn r = ratfn_reduce(n, d);
    return std::make_pair(r.num_, r.den_);
  };
  auto [n1, d2] = cancel(a.num_, b.den_);
  auto [n2, d1] = cancel(b.num_, a.den_);
  return ratfn_reduce(n1 * n2, d1 * d2);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero function");
  return a * b.inverse();
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of the zero function");
  return ratfn_reduce(den_, num_);
}

RationalFn RationalFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (den_.is_constant()) return RationalFn(Reduced{}, num_.pow(k), den_);
  // Powers of coprime parts stay coprime.
  LaurentPoly n = num_.pow(k), d = den_.pow(k);
  return RationalFn(Reduced{}, n, d);
}

RationalFn RationalFn::over(const std::vector<std::string>& variables) const {
  return RationalFn(Reduced{}, num_.over(variables), den_.over(variables));
}

Rational RationalFn::evaluate(const std::map<std::string, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "evaluation at a pole");
  return num_.evaluate(point) / d;
}

std::pair<LaurentPoly, LaurentPoly> RationalFn::display_parts() const {
  Exponents m = num_.is_zero() ? Exponents(num_.variables().size(), 0) : num_.min_exponents();
  for (auto& x : m) x = x < 0 ? -x : 0;
  LaurentPoly d = den_.over(num_.variables());
  return {num_.shifted(m), d.shifted(m)};
}

std::string RationalFn::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto [n, d] = display_parts();
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

std::string RationalFn::to_latex() const {
  if (den_.is_constant()) return num_.to_latex();
  auto [n, d] = display_parts();
  return "\\frac{" + n.to_latex() + "}{" + d.to_latex() + "}";
}

nlohmann::json RationalFn::to_json() const {
  return {{"numerator", num_.to_json()}, {"denominator", den_.to_json()}, {"text", to_string()}};
}

RationalFn poly_substitute(const LaurentPoly& p, const std::map<std::string, RationalFn>& bindings) {
  const auto& vars = p.variables();
  const std::size_t nv = vars.size();
  Exponents lo = p.min_exponents(), hi = p.max_exponents();
  if (p.is_zero()) return RationalFn();

  std::vector<const RationalFn*> bound(nv, nullptr);
  for (std::size_t i = 0; i < nv; ++i) {
    if (lo[i] == 0 && hi[i] == 0) continue;
    auto it = bindings.find(vars[i]);
    if (it == bindings.end())
      throw Error(ErrorCode::UnboundVariable, "no binding for variable '" + vars[i] + "'");
    bound[i] = &it->second;
    if (lo[i] < 0 && it->second.is_zero())
      throw Error(ErrorCode::BindingToZero,
                  "variable '" + vars[i] + "' occurs with a negative exponent but is bound to 0");
  }

  // Common denominator: each variable v contributes num_v^{-lo} den_v^{hi};
  // every term then becomes a polynomial expression in the binding parts.
  std::vector<std::map<int, LaurentPoly>> num_pow(nv), den_pow(nv);
  auto power = [](std::map<int, LaurentPoly>& cache, const LaurentPoly& base, int k) -> const LaurentPoly& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, base.pow(k)).first;
    return it->second;
  };
  LaurentPoly total;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(c);
    for (std::size_t i = 0; i < nv; ++i) {
      if (!bound[i]) continue;
      int l = std::min(lo[i], 0), h = std::max(hi[i], 0);
      const RationalFn& b = *bound[i];
      term *= power(num_pow[i], b.numerator(), e[i] - l);
      term *= power(den_pow[i], b.denominator(), h - e[i]);
    }
    total += term;
  }
  LaurentPoly den = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!bound[i]) continue;
    int l = std::min(lo[i], 0), h = std::max(hi[i], 0);
    den *= power(num_pow[i], bound[i]->numerator(), -l);
    den *= power(den_pow[i], bound[i]->denominator(), h);
  }
  return ratfn_reduce(total, den);
}

RationalFn ratfn_substitute(const RationalFn& f, const std::map<std::string, RationalFn>& bindings) {
  return poly_substitute(f.numerator(), bindings) / poly_substitute(f.denominator(), bindings);
}

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Index: return "IndexError";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::StrandLimitExceeded: return "StrandLimitExceeded";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::FrozenDirection: return "FrozenDirection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PresetMismatch: return "PresetMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BindingToZero: return "BindingToZero";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::NonHalfIntegerPower: return "NonHalfIntegerPower";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

}  // namespace ck
