#include "ck/skein.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "ck/errors.hpp"
#include "ck/projection_algebra.hpp"

namespace ck {

namespace {

LaurentPoly var(const char* name, int power = 1) { return LaurentPoly::variable(name, power); }

void check_limit(const BraidWord& b, int limit) {
  if (static_cast<int>(b.length()) > limit)
    throw Error(ErrorCode::LimitExceeded, "braid has " + std::to_string(b.length()) +
                                              " crossings, limit is " + std::to_string(limit));
}

// Walks the closure component by component (each starting from its smallest
// top position, components in order of that position) and returns the first
// crossing whose first visit is along the under-strand, or -1.
int first_bad_crossing(int strands, const std::vector<int>& w) {
  std::vector<char> visited(w.size(), 0);
  std::vector<char> started(strands, 0);
  for (int p = 0; p < strands; ++p) {
    if (started[p]) continue;
    int q = p;
    do {
      started[q] = 1;
      for (std::size_t l = 0; l < w.size(); ++l) {
        int a = std::abs(w[l]) - 1;
        bool over;
        if (q == a) {
          over = w[l] > 0;  // moving right
          q = a + 1;
        } else if (q == a + 1) {
          over = w[l] < 0;  // moving left
          q = a;
        } else {
          continue;
        }
        if (!visited[l]) {
          visited[l] = 1;
          if (!over) return static_cast<int>(l);
        }
      }
    } while (q != p);
  }
  return -1;
}

using MemoKey = std::pair<int, std::vector<int>>;

struct Memo {
  std::mutex mutex;
  std::map<std::string, std::map<MemoKey, LaurentPoly>> tables;
};

Memo& memo() {
  static Memo m;
  return m;
}

class SkeinEngine {
 public:
  explicit SkeinEngine(const SkeinRelation& rel)
      : rel_(rel), alpha_inv_(rel.alpha.pow(-1)), beta_inv_(rel.beta.pow(-1)) {}

  LaurentPoly eval(int strands, const std::vector<int>& w) {
    MemoKey key{strands, w};
    {
      std::lock_guard<std::mutex> lock(memo().mutex);
      auto& table = memo().tables[rel_.name];
      auto it = table.find(key);
      if (it != table.end()) return it->second;
    }
    LaurentPoly value = compute(strands, w);
    std::lock_guard<std::mutex> lock(memo().mutex);
    memo().tables[rel_.name].emplace(std::move(key), value);
    return value;
  }

 private:
  LaurentPoly compute(int strands, const std::vector<int>& w) {
    int j = first_bad_crossing(strands, w);
    if (j < 0) return rel_.unlink.pow(closure_components(BraidWord(strands, w)) - 1);
    std::vector<int> switched = w;
    switched[j] = -switched[j];
    std::vector<int> smoothed = w;
    smoothed.erase(smoothed.begin() + j);
    LaurentPoly v_switched = eval(strands, free_reduce(switched));
    LaurentPoly v_smoothed = eval(strands, free_reduce(smoothed));
    if (w[j] > 0) return -((rel_.beta * v_switched + rel_.gamma * v_smoothed) * alpha_inv_);
    return -((rel_.alpha * v_switched + rel_.gamma * v_smoothed) * beta_inv_);
  }

  const SkeinRelation& rel_;
  LaurentPoly alpha_inv_, beta_inv_;
};

struct UnionFind {
  std::vector<int> parent;
  int components;
  explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
};

}  // namespace

const SkeinRelation& SkeinRelation::jones() {
  static const SkeinRelation rel{
      "jones",
      -var("s", 2),
      var("s", -2),
      -(var("s") - var("s", -1)),
      -(var("s") + var("s", -1)),
  };
  return rel;
}

const SkeinRelation& SkeinRelation::homfly() {
  static const SkeinRelation rel = [] {
    LaurentPoly l = var("l"), m = LaurentPoly::monomial({"l", "m"}, {0, 1});
    return SkeinRelation{"homfly", l.over({"l", "m"}), l.pow(-1).over({"l", "m"}), m,
                         -(l + l.pow(-1)) * m.pow(-1)};
  }();
  return rel;
}

LaurentPoly skein_evaluate(const SkeinRelation& rel, const BraidWord& b, int limit) {
  check_limit(b, limit);
  SkeinEngine engine(rel);
  return engine.eval(b.strands(), free_reduce(b.letters()));
}

LaurentPoly jones_skein(const BraidWord& b, int limit) {
  return skein_evaluate(SkeinRelation::jones(), b, limit);
}

LaurentPoly homfly_skein(const BraidWord& b, int limit) {
  return skein_evaluate(SkeinRelation::homfly(), b, limit);
}

bool is_descending(const BraidWord& b) { return first_bad_crossing(b.strands(), b.letters()) < 0; }

void clear_skein_memo() {
  std::lock_guard<std::mutex> lock(memo().mutex);
  memo().tables.clear();
}

LaurentPoly kauffman_bracket(const BraidWord& b, int limit) {
  check_limit(b, limit);
  const int k = b.strands();
  const auto& w = b.letters();
  const int L = static_cast<int>(w.size());
  LaurentPoly A = var("A");
  LaurentPoly d = -(A.pow(2) + A.pow(-2));
  if (L == 0) return d.pow(k - 1);

  // Node (level, position); level L is level 0 through the closure.
  auto node = [&](int level, int p) { return (level % L) * k + p; };
  UnionFind base(L * k);
  for (int l = 0; l < L; ++l) {
    int a = std::abs(w[l]) - 1;
    for (int p = 0; p < k; ++p)
      if (p != a && p != a + 1) base.unite(node(l, p), node(l + 1, p));
  }

  // counts[(A exponent, loops)]
  std::map<std::pair<int, int>, long> counts;
  for (unsigned long state = 0; state < (1UL << L); ++state) {
    UnionFind uf = base;
    int exponent = 0;
    for (int l = 0; l < L; ++l) {
      int a = std::abs(w[l]) - 1;
      bool a_smoothing = !((state >> l) & 1UL);
      exponent += a_smoothing ? 1 : -1;
      // A-smoothing of s_i keeps strands vertical; of s_i^-1 it caps them.
      bool vertical = a_smoothing == (w[l] > 0);
      if (vertical) {
        uf.unite(node(l, a), node(l + 1, a));
        uf.unite(node(l, a + 1), node(l + 1, a + 1));
      } else {
        uf.unite(node(l, a), node(l, a + 1));
        uf.unite(node(l + 1, a), node(l + 1, a + 1));
      }
    }
    ++counts[{exponent, uf.components}];
  }
  std::map<int, LaurentPoly> d_pows;
  LaurentPoly total;
  for (const auto& [key, count] : counts) {
    auto [exponent, loops] = key;
    auto it = d_pows.find(loops);
    if (it == d_pows.end()) it = d_pows.emplace(loops, d.pow(loops - 1)).first;
    total += LaurentPoly::monomial({"A"}, {exponent}, count) * it->second;
  }
  return total;
}

LaurentPoly normalize_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly factor = LaurentPoly::monomial({"A"}, {-3 * writhe}, writhe % 2 == 0 ? 1 : -1);
  LaurentPoly normalized = bracket * factor;
  int ia = normalized.variable_index("A");
  TermMap terms;
  for (const auto& [e, c] : normalized.terms()) {
    int ea = ia < 0 ? 0 : e[ia];
    if (ea % 2 != 0)
      throw Error(ErrorCode::NonHalfIntegerPower,
                  "A^" + std::to_string(ea) + " does not give a half-integer power of t");
    terms.emplace(Exponents{ea / 2}, c);
  }
  return LaurentPoly({"s"}, std::move(terms));
}

LaurentPoly jones_via_bracket(const BraidWord& b, int limit) {
  return normalize_bracket(kauffman_bracket(b, limit), writhe(b));
}

LaurentPoly jones_via_trace(const BraidWord& b, int limit) {
  check_limit(b, limit);
  Algebra alg(b.strands(), RelationPreset::kauffman());
  LaurentPoly bracket = alg.closure_sum(alg.rho(b));
  return normalize_bracket(bracket.over({"A"}), writhe(b));
}

LaurentPoly jones_mirror(const LaurentPoly& v) { return v.invert_variable("s"); }

namespace {

std::string half_exponent(int k, bool latex) {
  std::string e = k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2";
  return latex ? "^{" + e + "}" : "^" + e;
}

std::string render_jones(const LaurentPoly& v, bool latex) {
  if (v.is_zero()) return "0";
  int is = v.variable_index("s");
  std::string out;
  bool first = true;
  for (const auto& [e, c] : v.terms()) {
    int k = is < 0 ? 0 : e[is];
    Rational mag = abs(c);
    std::string mono = k == 0 ? "" : (k == 2 ? "t" : "t" + half_exponent(k, latex));
    std::string ctext = latex ? LaurentPoly::constant(mag).to_latex() : rational_to_string(mag);
    std::string term;
    if (mono.empty())
      term = ctext;
    else if (mag == 1)
      term = mono;
    else
      term = ctext + (latex ? " " : "*") + mono;
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

std::string jones_to_string(const LaurentPoly& v) { return render_jones(v, false); }
std::string jones_to_latex(const LaurentPoly& v) { return render_jones(v, true); }

nlohmann::json jones_to_json(const LaurentPoly& v) {
  int is = v.variable_index("s");
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : v.terms()) {
    int k = is < 0 ? 0 : e[is];
    std::string exp = k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2";
    terms.push_back({{"coeff", rational_to_string(c)}, {"t_exp", exp}});
  }
  return {{"variable", "t"}, {"terms", terms}, {"text", jones_to_string(v)}, {"in_s", v.to_json()}};
}

}  // namespace ck
