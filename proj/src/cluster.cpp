#include "ck/cluster.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ck/errors.hpp"

namespace ck {

const char* semifield_name(Semifield s) {
  switch (s) {
    case Semifield::Universal: return "universal";
    case Semifield::Tropical: return "tropical";
    case Semifield::Trivial: return "trivial";
  }
  return "universal";
}

Semifield semifield_from_name(const std::string& name) {
  if (name == "universal") return Semifield::Universal;
  if (name == "tropical") return Semifield::Tropical;
  if (name == "trivial") return Semifield::Trivial;
  throw Error(ErrorCode::InvalidArgument, "unknown semifield '" + name + "'");
}

bool is_skew_symmetric(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != -m[j][i]) return false;
  }
  return true;
}

IntMatrix mutate_matrix(const IntMatrix& b, int direction) {
  const int n = static_cast<int>(b.size());
  if (direction < 1 || direction > n)
    throw Error(ErrorCode::IndexOutOfRange, "mutation direction " + std::to_string(direction) + " out of range");
  const int k = direction - 1;
  IntMatrix out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  }
  return out;
}

bool matrix_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int sign : {1, -1}) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i)
        for (std::size_t j = 0; j < n && same; ++j)
          same = a[perm[i]][perm[j]] == sign * b[i][j];
      if (same) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------

Seed::Seed(IntMatrix matrix, Semifield semifield, std::vector<int> frozen)
    : matrix_(std::move(matrix)), semifield_(semifield) {
  const int n = rank();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "a seed needs rank at least 1");
  if (!is_skew_symmetric(matrix_))
    throw Error(ErrorCode::InvalidArgument, "exchange matrix must be square and skew-symmetric");
  frozen_.assign(n, false);
  for (int f : frozen) {
    if (f < 1 || f > n)
      throw Error(ErrorCode::IndexOutOfRange, "frozen index " + std::to_string(f) + " outside 1.." +
                                                  std::to_string(n));
    frozen_[f - 1] = true;
  }
  for (int i = 1; i <= n; ++i) variables_.push_back("x" + std::to_string(i));
  if (semifield_ == Semifield::Universal)
    for (int i = 1; i <= n; ++i) variables_.push_back("c" + std::to_string(i));
  if (semifield_ == Semifield::Tropical)
    for (int i = 1; i <= n; ++i) variables_.push_back("y" + std::to_string(i));

  auto generator = [&](int index) {
    Exponents e(variables_.size(), 0);
    e[index] = 1;
    return RationalFn(LaurentPoly::monomial(variables_, e));
  };
  for (int i = 0; i < n; ++i) cluster_.push_back(generator(i));
  if (semifield_ == Semifield::Universal)
    for (int i = 0; i < n; ++i) coeffs_.push_back(generator(n + i));
  if (semifield_ == Semifield::Tropical) {
    tropical_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) tropical_[i][i] = 1;
  }
  if (semifield_ == Semifield::Trivial) tropical_.assign(n, {});
}

Seed Seed::preset(const std::string& name, Semifield semifield) {
  if (name == "S02") return Seed({{0, 2}, {-2, 0}}, semifield);
  if (name == "S11") return Seed({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, semifield);
  throw Error(ErrorCode::InvalidArgument, "unknown seed preset '" + name + "' (expected S02 or S11)");
}

Seed Seed::from_json(const nlohmann::json& j, Semifield semifield) {
  try {
    IntMatrix m = j.at("entries").get<IntMatrix>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != m.size())
      throw Error(ErrorCode::InvalidArgument, "\"n\" does not match the matrix size");
    std::vector<int> frozen;
    if (j.contains("frozen")) frozen = j.at("frozen").get<std::vector<int>>();
    return Seed(std::move(m), semifield, std::move(frozen));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed seed JSON: ") + ex.what());
  }
}

namespace {

// numer / (coeff * x) for the exchange relation. By the Laurent phenomenon the
// numerator of x usually divides that of numer, which avoids a large gcd.
RationalFn exchange_quotient(const RationalFn& numer, const RationalFn& coeff, const RationalFn& x) {
  RationalFn f = numer / coeff;
  if (auto q = exact_divide(f.numerator(), x.numerator()))
    return ratfn_reduce(*q * x.denominator(), f.denominator());
  return f / x;
}

LaurentPoly y_monomial(const std::vector<std::string>& vars, int offset, const std::vector<int>& e) {
  Exponents x(vars.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) x[offset + i] = e[i];
  return LaurentPoly::monomial(vars, x);
}

}  // namespace

std::vector<RationalFn> Seed::coefficients() const {
  if (semifield_ == Semifield::Universal) return coeffs_;
  std::vector<RationalFn> out;
  for (const auto& e : tropical_) out.emplace_back(y_monomial(variables_, rank(), e));
  return out;
}

Seed Seed::mutate(int k) const {
  const int n = rank();
  if (k < 1 || k > n)
    throw Error(ErrorCode::IndexOutOfRange, "direction " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (frozen_[k - 1]) throw Error(ErrorCode::FrozenDirection, "direction " + std::to_string(k) + " is frozen");
  const int kk = k - 1;
  const auto& b = matrix_;

  RationalFn plus = LaurentPoly::constant(1, variables_);
  RationalFn minus = plus;
  for (int i = 0; i < n; ++i) {
    if (b[i][kk] > 0) plus *= cluster_[i].pow(b[i][kk]);
    if (b[i][kk] < 0) minus *= cluster_[i].pow(-b[i][kk]);
  }

  Seed out = *this;
  out.matrix_ = mutate_matrix(b, kk + 1);
  if (semifield_ == Semifield::Universal) {
    const RationalFn& ck = coeffs_[kk];
    RationalFn ck_plus_one = ck + RationalFn(LaurentPoly::constant(1, variables_));
    out.cluster_[kk] = exchange_quotient(ck * plus + minus, ck_plus_one, cluster_[kk]);
    for (int j = 0; j < n; ++j) {
      if (j == kk) {
        out.coeffs_[j] = ck.inverse();
      } else if (b[kk][j] != 0) {
        RationalFn c = coeffs_[j];
        if (b[kk][j] > 0) c *= ck.pow(b[kk][j]);
        out.coeffs_[j] = c / ck_plus_one.pow(b[kk][j]);
      }
    }
  } else {
    const std::vector<int>& e = tropical_[kk];
    std::vector<int> low(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) low[i] = std::min(e[i], 0);
    RationalFn ck = y_monomial(variables_, n, e);
    RationalFn ck_plus_one = y_monomial(variables_, n, low);
    out.cluster_[kk] = exchange_quotient(ck * plus + minus, ck_plus_one, cluster_[kk]);
    for (int j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (j == kk)
          out.tropical_[j][i] = -e[i];
        else
          out.tropical_[j][i] = tropical_[j][i] + std::max(b[kk][j], 0) * e[i] - b[kk][j] * low[i];
      }
    }
  }
  out.cluster_[kk] = out.cluster_[kk].over(variables_);
  return out;
}

bool operator==(const Seed& a, const Seed& b) {
  return a.semifield_ == b.semifield_ && a.matrix_ == b.matrix_ && a.cluster_ == b.cluster_ &&
         a.coeffs_ == b.coeffs_ && a.tropical_ == b.tropical_ && a.frozen_ == b.frozen_;
}

namespace {

struct PositionText {
  std::vector<std::string> cluster, coeffs;
};

PositionText position_text(const Seed& s) {
  PositionText t;
  for (const auto& x : s.cluster()) t.cluster.push_back(x.to_string());
  if (s.semifield() == Semifield::Universal)
    for (const auto& c : s.coefficients()) t.coeffs.push_back(c.to_string());
  return t;
}

std::string key_with(const Seed& s, const PositionText& t, const std::vector<int>& perm) {
  const int n = s.rank();
  std::string key;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) key += std::to_string(s.matrix()[perm[i]][perm[j]]) + ",";
    key += ";";
  }
  for (int p = 0; p < n; ++p) {
    key += "|" + t.cluster[perm[p]];
    if (!t.coeffs.empty()) key += "#" + t.coeffs[perm[p]];
    key += s.frozen()[perm[p]] ? "!f" : "";
  }
  return key;
}

}  // namespace

std::string Seed::key(const std::vector<int>& perm) const { return key_with(*this, position_text(*this), perm); }

std::string Seed::canonical_key() const {
  PositionText t = position_text(*this);
  std::vector<int> perm(rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = key_with(*this, t, perm);
  if (rank() > 8) return best;  // relabelling search is factorial; identity only
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string k = key_with(*this, t, perm);
    if (k < best) best = std::move(k);
  }
  return best;
}

nlohmann::json Seed::to_json() const {
  nlohmann::json cluster = nlohmann::json::array(), coeffs = nlohmann::json::array();
  for (const auto& x : cluster_) cluster.push_back(x.to_string());
  for (const auto& c : coefficients()) coeffs.push_back(c.to_string());
  std::vector<int> frozen;
  for (int i = 0; i < rank(); ++i)
    if (frozen_[i]) frozen.push_back(i + 1);
  return {{"n", rank()}, {"entries", matrix_}, {"frozen", frozen}, {"semifield", semifield_name(semifield_)},
          {"cluster", cluster}, {"coefficients", coeffs}};
}

std::string Seed::describe() const {
  std::string out = "matrix:\n";
  for (const auto& row : matrix_) {
    out += " ";
    for (int v : row) out += " " + std::to_string(v);
    out += "\n";
  }
  out += "cluster:\n";
  for (int i = 0; i < rank(); ++i)
    out += "  [" + std::to_string(i + 1) + "] " + cluster_[i].to_string() + (frozen_[i] ? "  (frozen)" : "") + "\n";
  out += std::string("coefficients (") + semifield_name(semifield_) + "):\n";
  auto coeffs = coefficients();
  for (int i = 0; i < rank(); ++i) out += "  [" + std::to_string(i + 1) + "] " + coeffs[i].to_string() + "\n";
  return out;
}

Seed mutate_seed(const Seed& s, int k) { return s.mutate(k); }

bool involutivity_check(const Seed& s, int k) { return s.mutate(k).mutate(k) == s; }

// ---------------------------------------------------------------------------

nlohmann::json LaurentReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries)
    list.push_back({{"sequence", e.sequence}, {"variable", e.variable}, {"denominator", e.denominator},
                    {"laurent", e.laurent}, {"integer_coefficients", e.integer_coefficients}});
  return {{"depth", depth}, {"sequences", sequences}, {"variables", list}, {"violations", violations}};
}

LaurentReport check_laurent_phenomenon(const Seed& s, int depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be nonnegative");
  LaurentReport report;
  report.depth = depth;
  const int n = s.rank();
  std::set<std::string> seen;

  auto record = [&](const RationalFn& f, const std::vector<int>& seq) {
    std::string text = f.to_string();
    if (!seen.insert(text).second) return;
    LaurentEntry e;
    e.sequence = seq;
    e.variable = text;
    bool x_free = true;
    for (int i = 1; i <= n; ++i) x_free = x_free && !f.denominator().uses_variable("x" + std::to_string(i));
    e.laurent = x_free;
    e.integer_coefficients = f.numerator().has_integer_coefficients() && f.denominator().has_integer_coefficients();
    e.denominator = f.display_parts().second.to_string();
    if (!e.laurent || !e.integer_coefficients) ++report.violations;
    report.entries.push_back(std::move(e));
  };

  for (const auto& x : s.cluster()) record(x, {});
  std::vector<int> seq;
  std::function<void(const Seed&, int)> walk = [&](const Seed& cur, int last) {
    if (static_cast<int>(seq.size()) == depth) return;
    for (int k = 1; k <= n; ++k) {
      if (k == last || cur.is_frozen(k)) continue;
      Seed next = cur.mutate(k);
      seq.push_back(k);
      ++report.sequences;
      record(next.cluster()[k - 1], seq);
      walk(next, k);
      seq.pop_back();
    }
  };
  walk(s, 0);
  return report;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> BratteliDiagram::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

std::string BratteliDiagram::to_dot(const std::string& name) const {
  std::string out = "digraph " + name + " {\n  rankdir=TB;\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out += "  subgraph level_" + std::to_string(k) + " {\n    rank=same;\n";
    for (const auto& v : levels[k]) out += "    \"" + v + "\";\n";
    out += "  }\n";
  }
  for (std::size_t k = 0; k < edges.size(); ++k)
    for (const auto& [ij, m] : edges[k])
      out += "  \"" + levels[k][ij.first] + "\" -> \"" + levels[k + 1][ij.second] + "\" [label=\"" +
             std::to_string(m) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json BratteliDiagram::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (std::size_t k = 0; k < edges.size(); ++k)
    for (const auto& [ij, m] : edges[k])
      e.push_back({{"level", k}, {"from", ij.first}, {"to", ij.second}, {"multiplicity", m}});
  return {{"levels", levels}, {"level_sizes", level_sizes()}, {"edges", e}};
}

MutationGraph mutation_graph(const Seed& s, int depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be nonnegative");
  MutationGraph g;
  g.levels.push_back({s});
  for (int k = 0; k < depth; ++k) {
    std::map<std::string, int> index;
    std::vector<Seed> next;
    std::map<std::pair<int, int>, int> edges;
    std::map<std::pair<int, int>, std::vector<int>> dirs;
    const auto& level = g.levels[k];
    for (int i = 0; i < static_cast<int>(level.size()); ++i) {
      for (int d = 1; d <= level[i].rank(); ++d) {
        if (level[i].is_frozen(d)) continue;
        Seed child = level[i].mutate(d);
        if (!is_skew_symmetric(child.matrix())) throw std::logic_error("mutation broke skew-symmetry");
        auto [it, inserted] = index.emplace(child.canonical_key(), static_cast<int>(next.size()));
        if (inserted) next.push_back(std::move(child));
        ++edges[{i, it->second}];
        dirs[{i, it->second}].push_back(d);
      }
    }
    g.levels.push_back(std::move(next));
    g.edges.push_back(std::move(edges));
    g.directions.push_back(std::move(dirs));
  }
  return g;
}

BratteliDiagram bratteli_from_mutations(const MutationGraph& g) {
  BratteliDiagram d;
  for (std::size_t k = 0; k < g.levels.size(); ++k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.levels[k].size(); ++i)
      names.push_back("v" + std::to_string(k) + "_" + std::to_string(i));
    d.levels.push_back(std::move(names));
  }
  d.edges = g.edges;
  return d;
}

namespace {

int multiplicity(const std::map<std::pair<int, int>, int>& e, int i, int j) {
  auto it = e.find({i, j});
  return it == e.end() ? 0 : it->second;
}

}  // namespace

bool bratteli_isomorphic(const BratteliDiagram& a, const BratteliDiagram& b) {
  if (a.level_sizes() != b.level_sizes()) return false;
  const std::size_t L = a.levels.size();
  if (a.edges.size() + 1 < L || b.edges.size() + 1 < L) return false;
  // Flatten vertices level by level; map[k][i] = image of a-vertex i at level k.
  std::vector<std::vector<int>> map(L), used(L);
  for (std::size_t k = 0; k < L; ++k) {
    map[k].assign(a.levels[k].size(), -1);
    used[k].assign(a.levels[k].size(), 0);
  }
  std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t k, std::size_t i) -> bool {
    if (k == L) return true;
    if (i == a.levels[k].size()) return assign(k + 1, 0);
    for (std::size_t j = 0; j < b.levels[k].size(); ++j) {
      if (used[k][j]) continue;
      bool ok = true;
      if (k > 0) {
        for (std::size_t u = 0; u < a.levels[k - 1].size() && ok; ++u)
          ok = multiplicity(a.edges[k - 1], static_cast<int>(u), static_cast<int>(i)) ==
               multiplicity(b.edges[k - 1], map[k - 1][u], static_cast<int>(j));
      }
      if (!ok) continue;
      map[k][i] = static_cast<int>(j);
      used[k][j] = 1;
      if (assign(k, i + 1)) return true;
      used[k][j] = 0;
      map[k][i] = -1;
    }
    return false;
  };
  return assign(0, 0);
}

BratteliDiagram pascal_diagram(int levels) {
  BratteliDiagram d;
  for (int k = 0; k < levels; ++k) {
    std::vector<std::string> names;
    for (int j = 0; j <= k; ++j) names.push_back("p" + std::to_string(k) + "_" + std::to_string(j));
    d.levels.push_back(std::move(names));
    if (k + 1 < levels) {
      std::map<std::pair<int, int>, int> e;
      for (int j = 0; j <= k; ++j) {
        e[{j, j}] = 1;
        e[{j, j + 1}] = 1;
      }
      d.edges.push_back(std::move(e));
    }
  }
  return d;
}

BratteliDiagram three_fold_reference() {
  BratteliDiagram d;
  d.levels = {{"r"}, {"a", "b", "c"}, {"a0", "a1", "ab", "b1", "bc", "c1", "c2"}};
  d.edges.push_back({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}});
  d.edges.push_back({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1},
                     {{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1},
                     {{2, 4}, 1}, {{2, 5}, 1}, {{2, 6}, 1}});
  return d;
}

}  // namespace ck
