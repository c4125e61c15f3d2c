#include "ck/projection_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ck/errors.hpp"

namespace ck {

ReducedWord::ReducedWord(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t r = 0; r < runs_.size(); ++r) {
    const Run& run = runs_[r];
    if (run.bottom < 1 || run.bottom > run.top)
      throw Error(ErrorCode::InvalidArgument, "a run needs 1 <= bottom <= top");
    if (r > 0 && (run.top <= runs_[r - 1].top || run.bottom <= runs_[r - 1].bottom))
      throw Error(ErrorCode::InvalidArgument, "run tops and bottoms must strictly increase");
  }
}

std::vector<int> ReducedWord::letters() const {
  std::vector<int> out;
  for (const Run& run : runs_)
    for (int i = run.top; i >= run.bottom; --i) out.push_back(i);
  return out;
}

int ReducedWord::length() const {
  int len = 0;
  for (const Run& run : runs_) len += run.top - run.bottom + 1;
  return len;
}

std::string ReducedWord::to_string() const {
  if (runs_.empty()) return "1";
  std::string out;
  for (std::size_t r = 0; r < runs_.size(); ++r) {
    if (r > 0) out += "·";
    for (int i = runs_[r].top; i >= runs_[r].bottom; --i) out += "e" + std::to_string(i);
  }
  return out;
}

nlohmann::json ReducedWord::to_json() const {
  nlohmann::json runs = nlohmann::json::array();
  for (const Run& run : runs_) runs.push_back({run.top, run.bottom});
  return {{"runs", runs}};
}

bool operator<(const ReducedWord& a, const ReducedWord& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  auto xa = a.letters(), xb = b.letters();
  return xa < xb;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// ---------------------------------------------------------------------------
// Diagrams

Diagram identity_diagram(int n) {
  Diagram d(2 * n);
  for (int p = 0; p < n; ++p) {
    d[p] = static_cast<std::uint8_t>(n + p);
    d[n + p] = static_cast<std::uint8_t>(p);
  }
  return d;
}

Diagram generator_diagram(int n, int i) {
  Diagram d = identity_diagram(n);
  int p = i - 1;
  d[p] = static_cast<std::uint8_t>(p + 1);
  d[p + 1] = static_cast<std::uint8_t>(p);
  d[n + p] = static_cast<std::uint8_t>(n + p + 1);
  d[n + p + 1] = static_cast<std::uint8_t>(n + p);
  return d;
}

Diagram compose(const Diagram& a, const Diagram& b, int& loops) {
  // Nodes 0..2n-1 belong to a, 2n..4n-1 to b; a's bottom row is glued to
  // b's top row. Outer nodes are a's top row and b's bottom row.
  const int n = static_cast<int>(a.size()) / 2;
  auto partner = [&](int v) { return v < 2 * n ? a[v] : 2 * n + b[v - 2 * n]; };
  auto glue = [&](int v) { return v < 2 * n ? v + n : v - n; };
  auto outer = [&](int v) { return v < n || v >= 3 * n; };
  auto result_index = [&](int v) { return v < n ? v : v - 2 * n; };

  Diagram out(2 * n);
  std::vector<bool> seen(4 * n, false);
  for (int s = 0; s < 4 * n; ++s) {
    if (!outer(s) || seen[s]) continue;
    seen[s] = true;
    int cur = partner(s);
    while (!outer(cur)) {
      seen[cur] = true;
      int g = glue(cur);
      seen[g] = true;
      cur = partner(g);
    }
    seen[cur] = true;
    out[result_index(s)] = static_cast<std::uint8_t>(result_index(cur));
    out[result_index(cur)] = static_cast<std::uint8_t>(result_index(s));
  }
  loops = 0;
  for (int v = n; v < 3 * n; ++v) {
    if (seen[v]) continue;
    ++loops;
    int cur = v;
    do {
      seen[cur] = true;
      int g = glue(cur);
      seen[g] = true;
      cur = partner(g);
    } while (cur != v);
  }
  return out;
}

int closure_loops(const Diagram& d) {
  const int n = static_cast<int>(d.size()) / 2;
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int v = 0; v < 2 * n; ++v) {
    if (seen[v]) continue;
    ++loops;
    int cur = v;
    do {
      seen[cur] = true;
      int p = d[cur];
      seen[p] = true;
      cur = p < n ? p + n : p - n;  // closure strand
    } while (!seen[cur]);
  }
  return loops;
}

Diagram word_diagram(int n, const std::vector<int>& letters, int& loops) {
  Diagram d = identity_diagram(n);
  loops = 0;
  for (int i : letters) {
    if (i < 1 || i >= n)
      throw Error(ErrorCode::Index, "generator e" + std::to_string(i) + " outside 1.." +
                                        std::to_string(n - 1));
    int l = 0;
    d = compose(d, generator_diagram(n, i), l);
    loops += l;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Basis tables, built once per n.

struct BasisTables {
  int n = 1;
  std::vector<ReducedWord> words;
  std::vector<int> lengths;
  std::vector<Diagram> diagrams;
  std::map<Diagram, std::size_t> index;
  std::vector<int> closure;
  // right[w * (n-1) + i-1] = (index of w e_i reduced, loops created)
  std::vector<std::pair<std::size_t, int>> right;
};

namespace {

void enumerate_runs(int n, int min_top, int min_bottom, std::vector<ReducedWord::Run>& cur,
                    std::vector<ReducedWord>& out) {
  out.emplace_back(cur);
  for (int top = min_top; top <= n - 1; ++top) {
    for (int bottom = min_bottom; bottom <= top; ++bottom) {
      cur.push_back({top, bottom});
      enumerate_runs(n, top + 1, bottom + 1, cur, out);
      cur.pop_back();
    }
  }
}

std::shared_ptr<const BasisTables> build_tables(int n) {
  auto t = std::make_shared<BasisTables>();
  t->n = n;
  std::vector<ReducedWord::Run> cur;
  enumerate_runs(n, 1, 1, cur, t->words);
  std::sort(t->words.begin(), t->words.end());
  for (std::size_t k = 0; k < t->words.size(); ++k) {
    int loops = 0;
    Diagram d = word_diagram(n, t->words[k].letters(), loops);
    if (loops != 0) throw std::logic_error("reduced word produced a closed loop");
    if (!t->index.emplace(d, k).second)
      throw std::logic_error("two reduced words share a diagram");
    t->lengths.push_back(t->words[k].length());
    t->closure.push_back(closure_loops(d));
    t->diagrams.push_back(std::move(d));
  }
  if (t->words.size() != catalan(n)) throw std::logic_error("basis size differs from Catalan number");
  if (n > 1) {
    t->right.resize(t->words.size() * (n - 1));
    for (std::size_t k = 0; k < t->words.size(); ++k) {
      for (int i = 1; i < n; ++i) {
        int loops = 0;
        Diagram d = compose(t->diagrams[k], generator_diagram(n, i), loops);
        t->right[k * (n - 1) + (i - 1)] = {t->index.at(d), loops};
      }
    }
  }
  return t;
}

std::shared_ptr<const BasisTables> tables_for(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "strand count must be at least 1");
  if (n > kMaxStrands)
    throw Error(ErrorCode::StrandLimitExceeded, std::to_string(n) + " strands exceed the maximum of " +
                                                    std::to_string(kMaxStrands));
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const BasisTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
  return it->second;
}

LaurentPoly one_poly() { return LaurentPoly::constant(1); }

}  // namespace

const std::vector<ReducedWord>& reduced_words(int n) { return tables_for(n)->words; }

// ---------------------------------------------------------------------------
// Presets

RelationPreset RelationPreset::paper() {
  return custom("paper", one_poly(), LaurentPoly::constant(-2), one_poly(), one_poly());
}

RelationPreset RelationPreset::parametric() {
  LaurentPoly a = LaurentPoly::variable("a"), b = LaurentPoly::variable("b");
  LaurentPoly kappa = -((a + b) * b * a.pow(-2));
  return custom("parametric", one_poly(), kappa, a, b);
}

RelationPreset RelationPreset::temperley_lieb() {
  return custom("temperley_lieb", LaurentPoly::variable("d"), one_poly());
}

RelationPreset RelationPreset::kauffman() {
  LaurentPoly A = LaurentPoly::variable("A");
  LaurentPoly d = -(A.pow(2) + A.pow(-2));
  return custom("kauffman", d, one_poly(), A.pow(-1), A);
}

RelationPreset RelationPreset::custom(std::string name, LaurentPoly square, LaurentPoly sandwich,
                                      std::optional<LaurentPoly> a, std::optional<LaurentPoly> b) {
  RelationPreset p;
  p.name = std::move(name);
  p.square = std::move(square);
  p.sandwich = std::move(sandwich);
  p.a = std::move(a);
  p.b = std::move(b);
  // (a e + b)(x e + y) = 1 forces y = 1/b and x = -a / (b (a mu + b)).
  if (p.a && p.b && p.b->is_monomial()) {
    LaurentPoly pivot = *p.a * p.square + *p.b;
    if (pivot.is_monomial()) {
      p.inv_b = p.b->pow(-1);
      p.inv_a = -(*p.a * *p.inv_b * pivot.pow(-1));
    }
  }
  return p;
}

RelationPreset RelationPreset::by_name(const std::string& name) {
  if (name == "paper") return paper();
  if (name == "parametric") return parametric();
  if (name == "temperley_lieb" || name == "tl") return temperley_lieb();
  if (name == "kauffman") return kauffman();
  throw Error(ErrorCode::InvalidArgument, "unknown relation preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Elements

AlgebraElement::AlgebraElement(int n) : n_(n) {}

LaurentPoly AlgebraElement::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

LaurentPoly AlgebraElement::coefficient(const ReducedWord& w) const {
  const auto& words = reduced_words(n_);
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || !(*it == w)) return LaurentPoly();
  return coefficient(static_cast<std::size_t>(it - words.begin()));
}

bool AlgebraElement::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_constant(); });
}

void AlgebraElement::add(std::size_t index, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_) throw Error(ErrorCode::StrandMismatch, "adding elements of different algebras");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x) {
  AlgebraElement out(x.n_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : x.terms_) out.add(k, c * v);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

namespace {

std::string word_latex(const ReducedWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t r = 0; r < w.runs().size(); ++r) {
    if (r > 0) out += " \\cdot ";
    for (int i = w.runs()[r].top; i >= w.runs()[r].bottom; --i) out += "e_{" + std::to_string(i) + "}";
  }
  return out;
}

std::string render_element(const AlgebraElement& x, bool latex) {
  if (x.is_zero()) return "0";
  const auto& words = reduced_words(x.n());
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    const ReducedWord& w = words[k];
    std::string wtext = latex ? word_latex(w) : w.to_string();
    std::string term;
    bool negative = false;
    if (auto v = c.constant_value()) {
      negative = *v < 0;
      Rational mag = abs(*v);
      std::string mtext = latex ? LaurentPoly::constant(mag).to_latex() : rational_to_string(mag);
      if (w.is_identity())
        term = mtext;
      else if (mag == 1)
        term = wtext;
      else
        term = mtext + (latex ? " " : "*") + wtext;
    } else {
      std::string ctext = latex ? c.to_latex() : c.to_string();
      term = "(" + ctext + ")";
      if (!w.is_identity()) term += (latex ? " " : "*") + wtext;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace

std::string AlgebraElement::to_string() const { return render_element(*this, false); }
std::string AlgebraElement::to_latex() const { return render_element(*this, true); }

nlohmann::json AlgebraElement::to_json() const {
  const auto& words = reduced_words(n_);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::json w = words[k].to_json();
    terms.push_back({{"index", k}, {"word", words[k].to_string()}, {"runs", w["runs"]},
                     {"coeff", c.to_json()}, {"coeff_text", c.to_string()}});
  }
  return {{"n", n_}, {"terms", terms}, {"text", to_string()}};
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int n, RelationPreset preset)
    : n_(n), preset_(std::move(preset)), tables_(tables_for(n)) {}

const std::vector<ReducedWord>& Algebra::basis() const { return tables_->words; }

std::size_t Algebra::index_of(const ReducedWord& w) const {
  int loops = 0;
  if (w.max_index() >= n_) throw Error(ErrorCode::Index, "word uses a generator outside the algebra");
  return tables_->index.at(word_diagram(n_, w.letters(), loops));
}

AlgebraElement Algebra::one() const {
  AlgebraElement x(n_);
  x.add(0, one_poly());
  return x;
}

AlgebraElement Algebra::word(const ReducedWord& w, const LaurentPoly& c) const {
  AlgebraElement x(n_);
  x.add(index_of(w), c);
  return x;
}

AlgebraElement Algebra::generator(int i) const { return normal_form({i}); }

LaurentPoly Algebra::reduction_scalar(std::size_t index, int length_in, int loops) const {
  int twice = length_in - tables_->lengths[index] - loops;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("inconsistent reduction length");
  LaurentPoly s = loops == 0 ? one_poly() : preset_.square.pow(loops);
  if (twice > 0) s *= preset_.sandwich.pow(twice / 2);
  return s;
}

AlgebraElement Algebra::normal_form(const std::vector<int>& letters) const {
  int loops = 0;
  Diagram d = word_diagram(n_, letters, loops);
  std::size_t k = tables_->index.at(d);
  AlgebraElement x(n_);
  x.add(k, reduction_scalar(k, static_cast<int>(letters.size()), loops));
  return x;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.n() != n_ || y.n() != n_) throw Error(ErrorCode::StrandMismatch, "element from a different algebra");
  AlgebraElement out(n_);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      int loops = 0;
      Diagram d = compose(tables_->diagrams[kx], tables_->diagrams[ky], loops);
      std::size_t k = tables_->index.at(d);
      LaurentPoly s = reduction_scalar(k, tables_->lengths[kx] + tables_->lengths[ky], loops);
      out.add(k, cx * cy * s);
    }
  }
  return out;
}

AlgebraElement Algebra::times_generator(const AlgebraElement& x, int i) const {
  if (i < 1 || i >= n_)
    throw Error(ErrorCode::Index, "generator e" + std::to_string(i) + " outside the algebra");
  AlgebraElement out(n_);
  for (const auto& [k, c] : x.terms()) {
    auto [r, loops] = tables_->right[k * (n_ - 1) + (i - 1)];
    out.add(r, c * reduction_scalar(r, tables_->lengths[k] + 1, loops));
  }
  return out;
}

AlgebraElement Algebra::u(int i) const {
  if (!preset_.represents_braids())
    throw Error(ErrorCode::PresetMismatch, "preset '" + preset_.name + "' carries no braid representation");
  return *preset_.a * generator(i) + *preset_.b * one();
}

AlgebraElement Algebra::u_inverse(int i) const {
  if (!preset_.represents_braids())
    throw Error(ErrorCode::PresetMismatch, "preset '" + preset_.name + "' carries no braid representation");
  if (!preset_.inv_a || !preset_.inv_b)
    throw Error(ErrorCode::NotInvertible,
                "the image of a generator is not invertible over Laurent polynomials in preset '" +
                    preset_.name + "'");
  return *preset_.inv_a * generator(i) + *preset_.inv_b * one();
}

AlgebraElement Algebra::rho(const BraidWord& b) const {
  if (b.strands() > n_)
    throw Error(ErrorCode::StrandMismatch, "braid has more strands than the algebra");
  if (!preset_.represents_braids())
    throw Error(ErrorCode::PresetMismatch, "preset '" + preset_.name + "' carries no braid representation");
  AlgebraElement x = one();
  for (int l : b.letters()) {
    int i = std::abs(l);
    const LaurentPoly* a = &*preset_.a;
    const LaurentPoly* c = &*preset_.b;
    if (l < 0) {
      if (!preset_.inv_a || !preset_.inv_b) u_inverse(i);  // throws
      a = &*preset_.inv_a;
      c = &*preset_.inv_b;
    }
    x = *a * times_generator(x, i) + *c * x;
  }
  return x;
}

LaurentPoly Algebra::closure_sum(const AlgebraElement& x) const {
  LaurentPoly total;
  for (const auto& [k, c] : x.terms()) total += c * preset_.square.pow(tables_->closure[k] - 1);
  return total;
}

RationalFn Algebra::markov_trace(const AlgebraElement& x) const {
  auto kappa = preset_.sandwich.constant_value();
  if (!kappa || *kappa != 1)
    throw Error(ErrorCode::PresetMismatch,
                "the diagrammatic trace needs e_i e_{i+-1} e_i = e_i (preset '" + preset_.name + "')");
  if (preset_.square.is_zero()) throw Error(ErrorCode::ZeroDenominator, "loop value is zero");
  return ratfn_reduce(closure_sum(x), preset_.square.pow(n_ - 1));
}

bool braid_relation_check(int n, const RelationPreset& preset) {
  Algebra alg(n, preset);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      AlgebraElement ui = alg.u(i), uj = alg.u(j);
      if (j == i + 1) {
        auto lhs = alg.multiply(alg.multiply(ui, uj), ui);
        auto rhs = alg.multiply(alg.multiply(uj, ui), uj);
        if (!(lhs == rhs)) return false;
      } else if (!(alg.multiply(ui, uj) == alg.multiply(uj, ui))) {
        return false;
      }
    }
  }
  return true;
}

RhoClass rho_class(const AlgebraElement& x) {
  if (!x.has_rational_coefficients())
    throw Error(ErrorCode::PresetMismatch, "an integer class needs rational coefficients");
  RhoClass out;
  out.scale = 1;
  for (const auto& [k, c] : x.terms()) {
    Rational v = *c.constant_value();
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), v.get_den_mpz_t());
  }
  out.coefficients.assign(reduced_words(x.n()).size(), 0);
  for (const auto& [k, c] : x.terms()) {
    Rational v = *c.constant_value() * out.scale;
    out.coefficients[k] = v.get_num();
  }
  return out;
}

}  // namespace ck
