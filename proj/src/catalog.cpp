#include "symspace/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace symspace {

namespace detail {
extern const std::string_view kRealFormsJson;
}

const RealFormTable& RealFormTable::builtin() {
  static const RealFormTable table = from_json(detail::kRealFormsJson);
  return table;
}

RealFormTable RealFormTable::from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("real-form table must be a JSON array");
  RealFormTable table;
  std::map<std::tuple<std::string, bool, int>, std::string> seen;
  for (const auto& e : doc) {
    RealFormEntry entry{e.at("type").get<std::string>(), e.at("inner").get<bool>(), e.at("dim_K").get<int>(),
                        e.at("label").get<std::string>()};
    if (!seen.emplace(std::make_tuple(entry.type, entry.inner, entry.dim_K), entry.label).second)
      throw std::logic_error("ambiguous real-form key " + entry.type + (entry.inner ? " inner " : " outer ") +
                             std::to_string(entry.dim_K));
    table.entries_.push_back(std::move(entry));
  }
  return table;
}

std::string RealFormTable::lookup(const std::string& type, bool inner, int dim_K) const {
  for (const auto& e : entries_)
    if (e.type == type && e.inner == inner && e.dim_K == dim_K) return e.label;
  return "unlabeled";
}

std::optional<std::string> RealFormTable::lookup(const SymmetricSpaceReport& report) const {
  if (report.root_system.find('+') != std::string::npos) return std::nullopt;
  return lookup(report.root_system, report.inner, report.dim_K);
}

std::string RealFormTable::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries_)
    doc.push_back({{"type", e.type}, {"inner", e.inner}, {"dim_K", e.dim_K}, {"label", e.label}});
  return doc.dump(2);
}

namespace {

struct FamilyInfo {
  std::string name;
  int arity;
  const char* alias_of;
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {"GL_linear", 2, nullptr},      {"GL_symplectic", 1, nullptr}, {"GL_orthogonal", 1, nullptr},
      {"U_pair", 2, "GL_linear"},     {"U_symplectic", 1, "GL_symplectic"},
      {"SO_pair", 2, nullptr},        {"Sp_pair", 2, nullptr},       {"Sp_GL", 1, nullptr},
      {"SO_GL", 1, nullptr},
  };
  return table;
}

std::string fold(std::string s) {
  for (auto& ch : s) ch = ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

DiagramAutomorphism identity_of(int rank) {
  DiagramAutomorphism a;
  a.node_permutation.resize(static_cast<std::size_t>(rank));
  std::iota(a.node_permutation.begin(), a.node_permutation.end(), 0);
  return a;
}

DiagramAutomorphism swap_of(int rank, int i, int j) {
  DiagramAutomorphism a = identity_of(rank);
  std::swap(a.node_permutation[static_cast<std::size_t>(i)], a.node_permutation[static_cast<std::size_t>(j)]);
  a.order = 2;
  return a;
}

DiagramAutomorphism flip_of(int rank) {
  DiagramAutomorphism a = identity_of(rank);
  std::reverse(a.node_permutation.begin(), a.node_permutation.end());
  a.order = rank > 1 ? 2 : 1;
  return a;
}

RootSystem simple(char letter, int rank) {
  const SimpleFactor f{letter, rank};
  return RootSystem::build(std::span<const SimpleFactor>(&f, 1));
}

// Diagonal torus element t = ((-1)^a, 1^(k-a)) in the e_i coordinates.
std::vector<int> torus_signs(int k, int a) {
  std::vector<int> t(static_cast<std::size_t>(k), 1);
  for (int i = 0; i < a; ++i) t[static_cast<std::size_t>(i)] = -1;
  return t;
}

// Values on the roots e_i - e_{i+1}, i < k.
GradingVector chain_values(const std::vector<int>& t) {
  GradingVector s;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) s.push_back(t[i] * t[i + 1]);
  return s;
}

FamilyInstance make(const FamilySpec& spec, RootSystem rs, DiagramAutomorphism theta0, GradingVector s) {
  return FamilyInstance{spec, "", std::move(rs), std::move(theta0), std::move(s), 0, false};
}

// D_k with grading given on all k nodes (inner), remapped to A1+A1 / A3 in low rank.
FamilyInstance d_type_inner(const FamilySpec& spec, int k, GradingVector s) {
  if (k == 2) {
    const SimpleFactor f[] = {{'A', 1}, {'A', 1}};
    return make(spec, RootSystem::build(f), identity_of(2), s);
  }
  if (k == 3) return make(spec, simple('A', 3), identity_of(3), {s[1], s[0], s[2]});
  return make(spec, simple('D', k), identity_of(k), s);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : family_table())
      if (!f.alias_of) out.push_back(f.name);
    return out;
  }();
  return names;
}

FamilySpec parse_family(const std::string& name, const std::vector<int>& params) {
  const FamilyInfo* info = nullptr;
  for (const auto& f : family_table())
    if (fold(f.name) == fold(name)) info = &f;
  if (!info) throw std::invalid_argument("unknown family '" + name + "'");
  if (static_cast<int>(params.size()) != info->arity)
    throw std::invalid_argument(info->name + " takes " + std::to_string(info->arity) + " parameter(s)");
  const int a = params[0];
  const int b = info->arity > 1 ? params[1] : 0;
  const std::string& base = info->alias_of ? std::string(info->alias_of) : info->name;
  bool ok = true;
  if (base == "GL_linear") ok = a >= 0 && b >= 0 && a + b >= 2 && a + b <= 9;
  if (base == "GL_symplectic") ok = a >= 1 && a <= 4;
  if (base == "GL_orthogonal") ok = a >= 2 && a <= 9;
  if (base == "SO_pair") ok = a >= 0 && b >= 0 && a + b >= 3 && a + b <= 17;
  if (base == "Sp_pair") ok = a >= 1 && b >= 1 && a + b <= 8;
  if (base == "Sp_GL") ok = a >= 1 && a <= 8;
  if (base == "SO_GL") ok = a >= 2 && a <= 8;
  if (!ok) throw std::invalid_argument("parameters out of range for " + info->name);
  return FamilySpec{info->name, params};
}

FamilyInstance family_to_class(const FamilySpec& raw) {
  const FamilySpec spec = parse_family(raw.name, raw.params);
  std::string base = spec.name;
  for (const auto& f : family_table())
    if (f.name == spec.name && f.alias_of) base = f.alias_of;
  const int a = spec.params[0];
  const int b = spec.params.size() > 1 ? spec.params[1] : 0;

  FamilyInstance out = [&]() -> FamilyInstance {
    if (base == "GL_linear") {
      const int n = a + b;
      // diag(1^m, (-1)^n): the sign change sits at node m
      std::vector<int> t(static_cast<std::size_t>(n), 1);
      for (int i = a; i < n; ++i) t[static_cast<std::size_t>(i)] = -1;
      auto inst = make(spec, simple('A', n - 1), identity_of(n - 1), chain_values(t));
      inst.center_dim = 1;
      inst.center_fixed = true;
      return inst;
    }
    if (base == "GL_symplectic") {
      FamilyInstance inst = a == 1 ? make(spec, simple('A', 1), identity_of(1), {1})
                                   : make(spec, simple('A', 2 * a - 1), flip_of(2 * a - 1), {1});
      inst.center_dim = 1;
      return inst;
    }
    if (base == "GL_orthogonal") {
      FamilyInstance inst = a == 2   ? make(spec, simple('A', 1), identity_of(1), {-1})
                            : a % 2 ? make(spec, simple('A', a - 1), flip_of(a - 1), {})
                                    : make(spec, simple('A', a - 1), flip_of(a - 1), {-1});
      inst.center_dim = 1;
      return inst;
    }
    if (base == "Sp_GL") {
      if (a == 1) return make(spec, simple('A', 1), identity_of(1), {-1});
      GradingVector s(static_cast<std::size_t>(a), 1);
      s.back() = -1;
      return make(spec, simple('C', a), identity_of(a), s);
    }
    if (base == "SO_GL") {
      GradingVector s(static_cast<std::size_t>(a), 1);
      s.back() = -1;
      return d_type_inner(spec, a, s);
    }
    if (base == "Sp_pair") {
      const int k = a + b;
      auto s = chain_values(torus_signs(k, b));
      s.push_back(1);  // long root 2e_k
      return make(spec, simple('C', k), identity_of(k), s);
    }
    // SO_pair: the involution diag(1^m, (-1)^n) of SO(m+n)
    const int total = a + b;
    const int k = total / 2;
    if (total % 2 == 1) {
      const int even = a % 2 == 0 ? a : b;
      const auto t = torus_signs(k, even / 2);
      auto s = chain_values(t);
      s.push_back(t.back());  // short root e_k
      if (k == 1) return make(spec, simple('A', 1), identity_of(1), s);
      return make(spec, simple('B', k), identity_of(k), s);
    }
    if (a % 2 == 0) {
      const auto t = torus_signs(k, std::min(a, b) / 2);
      auto s = chain_values(t);
      s.push_back(t[static_cast<std::size_t>(k - 2)] * t[static_cast<std::size_t>(k - 1)]);  // e_{k-1} + e_k
      return d_type_inner(spec, k, s);
    }
    // both odd: outer class, theta0 swaps the two end nodes
    const auto t = torus_signs(k, (std::min(a, b) - 1) / 2);
    auto s = chain_values(t);
    s.pop_back();  // nodes 1..k-2 only
    if (k == 2) {
      const SimpleFactor f[] = {{'A', 1}, {'A', 1}};
      return make(spec, RootSystem::build(f), swap_of(2, 0, 1), {});
    }
    if (k == 3) return make(spec, simple('A', 3), flip_of(3), s);
    return make(spec, simple('D', k), swap_of(k, k - 2, k - 1), s);
  }();
  if (base != spec.name) out.alias_of = base;
  return out;
}

FamilyResult evaluate_family(const FamilySpec& spec, const RealFormTable* table) {
  FamilyInstance inst = family_to_class(spec);
  const auto model = Model::make(inst.roots);
  std::shared_ptr<const InnerClass> inner;
  for (const auto& ic : inner_classes(model))
    if (ic->theta0 == inst.theta0) inner = ic;
  if (!inner) throw std::logic_error("family translation produced an unknown diagram automorphism");
  std::optional<InvolutionClass> found;
  for (auto& cls : enumerate_classes(inner))
    if (cls.contains(inst.grading)) found = std::move(cls);
  if (!found) throw std::logic_error("family translation produced an invalid grading");

  SymmetricSpaceReport rep = report(*found, table);
  FamilyResult result{inst, *found, rep, rep.dim_K + (inst.center_fixed ? inst.center_dim : 0), std::nullopt, {}};
  if (rep.split_rank) result.group_split_rank = *rep.split_rank + (inst.center_fixed ? 0 : inst.center_dim);
  const std::string type = inst.roots.name();
  if (!inst.alias_of.empty()) result.notes.push_back("alias of " + inst.alias_of + "; same engine class");
  if (inst.spec.name == "SO_GL" && spec.params[0] >= 4)
    result.notes.push_back("the grading on node " + std::to_string(spec.params[0] - 1) +
                           " instead of node " + std::to_string(spec.params[0]) + " gives the diagram-conjugate class");
  if ((inst.spec.name == "SO_pair" || inst.spec.name == "SO_GL") && (type == "A3" || type == "A1+A1" || type == "A1"))
    result.notes.push_back("low-rank orthogonal group realised as " + type);
  return result;
}

}  // namespace symspace
