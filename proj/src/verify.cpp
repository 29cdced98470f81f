#include "symspace/verify.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"
#include "symspace/classify.hpp"
#include "symspace/involution.hpp"

namespace symspace {

namespace {

constexpr std::size_t kMaxRecords = 50;

void record(VerificationOutcome& out, std::size_t& total, std::string what) {
  if (out.violations.size() < kMaxRecords) out.violations.push_back(std::move(what));
  ++total;
}

void close_records(VerificationOutcome& out, std::size_t total) {
  if (total > out.violations.size())
    out.violations.push_back("... " + std::to_string(total - out.violations.size()) + " more");
}

std::string coords(const RootVector& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

using SparseVector = std::map<int, int>;  // basis index -> coefficient; H_j first, then X_k

}  // namespace

std::vector<Chamber> chambers_in_scope(const RootSystem& rs, const ChamberPolicy& policy, std::string* scope) {
  if (policy.exhaustive && rs.weyl_group_order() <= policy.exhaustive_limit) {
    auto all = enumerate_weyl_group(rs, policy.exhaustive_limit);
    if (scope) *scope = "all " + std::to_string(all.size()) + " chambers";
    return all;
  }
  std::mt19937_64 rng(policy.seed);
  std::vector<Chamber> out{Chamber::identity(rs)};
  for (int k = 1; k < policy.samples; ++k) out.push_back(random_chamber(rs, rng));
  if (scope) *scope = std::to_string(out.size()) + " sampled chambers (seed " + std::to_string(policy.seed) + ")";
  return out;
}

VerificationOutcome verify_lemma_main(const RootSystem& rs, const ChamberPolicy& policy, bool inject_fault) {
  VerificationOutcome out{"descent", rs.name(), std::nullopt, {}};
  const auto model = Model::make(rs);
  const auto classes = enumerate_involution_classes(model);
  struct Rep {
    std::string label;
    RootClassification rc;
  };
  std::vector<Rep> reps;
  for (const auto& cls : classes)
    for (const auto& s : cls.orbit)
      reps.push_back({cls.id() + " rep " + grading_bits(s), classify_roots(*cls.inner, s)});

  std::string chamber_scope;
  const auto chambers = chambers_in_scope(rs, policy, &chamber_scope);
  if (!(policy.exhaustive && rs.weyl_group_order() <= policy.exhaustive_limit)) out.seed = policy.seed;

  struct Partial {
    std::vector<std::string> found;
    std::size_t checked = 0;
  };
  auto partial = detail::parallel_map<Partial>(chambers.size(), [&](std::size_t c) {
    Partial p;
    const Chamber& w = chambers[c];
    for (const auto& rep : reps) {
      if (!property_g(rep.rc, w)) continue;
      for (int beta : imaginary_simple_roots(rep.rc, w)) {
        int eps = rep.rc.epsilon(beta);
        if (inject_fault && c == 0 && p.checked == 0) eps = -eps;
        ++p.checked;
        if (eps != -1)
          p.found.push_back(rs.name() + " " + rep.label + " chamber " + word_text(w.word()) + ": imaginary simple root " +
                            coords(rs.root(beta)) + " is compact");
      }
    }
    return p;
  });
  std::size_t total = 0;
  std::size_t checked = 0;
  for (auto& p : partial) {
    checked += p.checked;
    for (auto& v : p.found) record(out, total, std::move(v));
  }
  close_records(out, total);
  out.scope = rs.name() + ": " + std::to_string(classes.size()) + " classes, " + std::to_string(reps.size()) +
              " representatives, " + chamber_scope + ", " + std::to_string(checked) + " root checks";
  return out;
}

std::optional<int> expected_inner_count(const RootSystem& rs) {
  if (rs.components().size() != 1 || rs.central_torus_dim() != 0) return std::nullopt;
  static const std::map<std::string, int> known = {{"G2", 1}, {"F4", 2}, {"E6", 2}, {"E7", 3}, {"E8", 2}};
  const auto it = known.find(rs.name());
  if (it == known.end()) return std::nullopt;
  return it->second;
}

VerificationOutcome verify_counts(const RootSystem& rs, bool inject_fault) {
  VerificationOutcome out{"counts", rs.name(), std::nullopt, {}};
  const auto model = Model::make(rs);
  const auto inner = inner_classes(model).front();
  std::vector<Chamber> gens = inner->generators;
  if (inject_fault && !gens.empty()) gens.pop_back();
  const auto graded = nontrivial(enumerate_classes(inner, &gens));
  const auto torus = torus2_orbits(rs, false);
  const int by_grading = static_cast<int>(graded.size());
  const int by_torus = static_cast<int>(torus.size());
  std::size_t total = 0;
  if (by_grading != by_torus)
    record(out, total,
           rs.name() + ": grading orbits give " + std::to_string(by_grading) + " classes, T[2]/W orbits give " +
               std::to_string(by_torus));
  const auto expected = expected_inner_count(rs);
  if (expected && by_grading != *expected)
    record(out, total,
           rs.name() + ": " + std::to_string(by_grading) + " nontrivial inner classes, expected " +
               std::to_string(*expected));
  out.scope = rs.name() + ": " + std::to_string(by_grading) + " nontrivial inner class" +
              (by_grading == 1 ? "" : "es") +
              (expected ? " (expected " + std::to_string(*expected) + ")" : "");
  return out;
}

VerificationOutcome verify_principal_quasisplit(const RootSystem& rs, bool inject_fault) {
  VerificationOutcome out{"principal", rs.name(), std::nullopt, {}};
  const auto model = Model::make(rs);
  const auto inner = inner_classes(model).front();
  const GradingVector s(inner->fixed_nodes.size(), inject_fault ? 1 : -1);
  const auto classes = enumerate_classes(inner);
  const InvolutionClass* cls = nullptr;
  for (const auto& c : classes)
    if (c.contains(s)) cls = &c;
  std::size_t total = 0;
  const bool in_orbit = cls && is_quasisplit_class(*cls);
  const RootClassification rc = classify_roots(*inner, s);
  const bool g_at_identity = property_g(rc, Chamber::identity(rs));
  const auto open = open_chamber(rc);
  const bool open_found = open && dim_u_theta(open->first, open->second) == 0;
  if (!in_orbit) record(out, total, rs.name() + ": all-(-1) grading not in a quasi-split class");
  if (!g_at_identity) record(out, total, rs.name() + ": property [G] fails at the identity chamber");
  if (!open_found) record(out, total, rs.name() + ": no chamber with dim U^theta = 0");
  out.scope = rs.name() + ": class " + (cls ? cls->id() : "?") + ", dim_K " + std::to_string(dim_k(rc));
  if (open)
    out.scope += ", open chamber after " + std::to_string(open->first.cayley_roots().size()) + " Cayley transforms";
  return out;
}

VerificationOutcome verify_connected_support(const RootSystem& rs, bool inject_fault) {
  VerificationOutcome out{"support", rs.name(), std::nullopt, {}};
  std::size_t total = 0;
  for (int k = 0; k < rs.num_roots(); ++k) {
    const auto info = support_connected(rs, rs.root(k));
    const bool connected = inject_fault ? info.nodes.size() == 1 : info.connected;
    if (!connected) record(out, total, rs.name() + ": root " + coords(rs.root(k)) + " has disconnected support");
  }
  close_records(out, total);
  out.scope = rs.name() + ": " + std::to_string(rs.num_roots()) + " roots";
  return out;
}

VerificationOutcome verify_chevalley(const RootSystem& rs, bool inject_fault) {
  VerificationOutcome out{"chevalley", rs.name(), std::nullopt, {}};
  const StructureConstants table(rs);
  const int n = rs.rank();
  const int roots = rs.num_roots();
  int fault_a = -1, fault_b = -1;
  if (inject_fault && !table.extraspecial_pairs().empty()) std::tie(fault_a, fault_b) = table.extraspecial_pairs().front();
  auto N = [&](int a, int b) { return (a == fault_a && b == fault_b) ? -table(a, b) : table(a, b); };
  std::size_t total = 0;

  for (int a = 0; a < roots; ++a)
    for (int b = 0; b < roots; ++b) {
      const auto c = rs.sum(a, b);
      if (!c) {
        if (N(a, b) != 0) record(out, total, "N defined off the root sums at " + coords(rs.root(a)) + coords(rs.root(b)));
        continue;
      }
      int p = 0;
      while (rs.is_root(rs.root(b) - (p + 1) * rs.root(a))) ++p;
      if (std::abs(N(a, b)) != p + 1)
        record(out, total, "|N| != p+1 at " + coords(rs.root(a)) + coords(rs.root(b)));
      if (N(a, b) != -N(b, a)) record(out, total, "antisymmetry fails at " + coords(rs.root(a)) + coords(rs.root(b)));
    }

  // [X_a, X_b] and [X_a, v] in the basis H_1..H_n, X_1..X_R.
  auto bracket = [&](int a, int b) {
    SparseVector v;
    if (b == rs.negative(a)) {
      for (int j = 0; j < n; ++j)
        if (rs.root(a)(j) != 0) v[j] = rs.root(a)(j) * rs.norm2(j) / rs.norm2(a);  // coroot of a
    } else if (const auto c = rs.sum(a, b)) {
      v[n + *c] = N(a, b);
    }
    return v;
  };
  auto act = [&](int a, const SparseVector& x) {
    SparseVector v;
    for (const auto& [idx, coef] : x) {
      if (idx < n) {
        v[n + a] -= coef * rs.pairing(a, idx);
      } else {
        for (const auto& [j, c2] : bracket(a, idx - n)) v[j] += coef * c2;
      }
    }
    return v;
  };
  auto jacobi = detail::parallel_map<std::vector<std::string>>(static_cast<std::size_t>(roots), [&](std::size_t ia) {
    std::vector<std::string> bad;
    const int a = static_cast<int>(ia);
    for (int b = a + 1; b < roots; ++b)
      for (int c = b + 1; c < roots; ++c) {
        SparseVector sum = act(a, bracket(b, c));
        for (const auto& [j, v] : act(b, bracket(c, a))) sum[j] += v;
        for (const auto& [j, v] : act(c, bracket(a, b))) sum[j] += v;
        for (const auto& [j, v] : sum)
          if (v != 0) {
            bad.push_back("Jacobi fails at " + coords(rs.root(a)) + coords(rs.root(b)) + coords(rs.root(c)));
            break;
          }
      }
    return bad;
  });
  for (auto& list : jacobi)
    for (auto& v : list) record(out, total, std::move(v));

  int automorphisms = 0;
  for (const auto& theta0 : diagram_automorphisms(rs)) {
    if (!theta0.is_involution()) continue;
    ++automorphisms;
    const PinnedSigns c(table, theta0);
    if (const int bad = c.consistency_violations(table))
      record(out, total, std::to_string(bad) + " inconsistent pinned-sign decompositions");
    for (int i = 0; i < n; ++i)
      if (c(i) != 1) record(out, total, "pinned sign of a simple root is not +1");
    for (int k = 0; k < roots; ++k)
      if (c(k) * c(rs.apply(theta0, k)) != 1)
        record(out, total, "c(a) c(theta0 a) != 1 at " + coords(rs.root(k)));
  }
  close_records(out, total);
  out.scope = rs.name() + ": " + std::to_string(roots) + " roots, " + std::to_string(automorphisms) +
              " diagram involutions";
  return out;
}

VerificationOutcome verify_unique_quasisplit(const RootSystem& rs, bool inject_fault) {
  VerificationOutcome out{"uniqueness", rs.name(), std::nullopt, {}};
  const auto model = Model::make(rs);
  std::size_t total = 0;
  int inner_count = 0;
  for (const auto& inner : inner_classes(model)) {
    ++inner_count;
    int qs = 0;
    for (const auto& cls : enumerate_classes(inner)) {
      const bool marked = is_quasisplit_class(cls) ||
                          (inject_fault && cls.contains(GradingVector(inner->fixed_nodes.size(), 1)));
      if (marked) ++qs;
    }
    if (qs != 1)
      record(out, total, rs.name() + " inner class " + inner->tag() + ": " + std::to_string(qs) + " quasi-split classes");
  }
  out.scope = rs.name() + ": " + std::to_string(inner_count) + " inner classes";
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"counts", "principal", "descent", "support", "chevalley",
                                                 "uniqueness"};
  return names;
}

VerificationOutcome run_check(const std::string& name, const RootSystem& rs, const ChamberPolicy& policy,
                              bool inject_fault) {
  if (name == "counts") return verify_counts(rs, inject_fault);
  if (name == "principal") return verify_principal_quasisplit(rs, inject_fault);
  if (name == "descent") return verify_lemma_main(rs, policy, inject_fault);
  if (name == "support") return verify_connected_support(rs, inject_fault);
  if (name == "chevalley") return verify_chevalley(rs, inject_fault);
  if (name == "uniqueness") return verify_unique_quasisplit(rs, inject_fault);
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<std::string> simple_types_up_to(int max_rank, bool exceptional_only) {
  std::vector<std::string> out;
  if (!exceptional_only) {
    for (int r = 1; r <= max_rank; ++r) out.push_back("A" + std::to_string(r));
    for (int r = 2; r <= max_rank; ++r) out.push_back("B" + std::to_string(r));
    for (int r = 3; r <= max_rank; ++r) out.push_back("C" + std::to_string(r));
    for (int r = 4; r <= max_rank; ++r) out.push_back("D" + std::to_string(r));
  }
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back("E" + std::to_string(r));
  if (max_rank >= 4) out.push_back("F4");
  if (max_rank >= 2) out.push_back("G2");
  return out;
}

}  // namespace symspace
