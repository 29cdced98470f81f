#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspace/rootdata.hpp"
#include "symspace/weyl.hpp"

namespace symspace {

/// Which chambers a scan covers: every element of W when `exhaustive` is set
/// and |W| <= exhaustive_limit, otherwise `samples` random chambers drawn
/// from `seed`.
struct ChamberPolicy {
  bool exhaustive = false;
  std::uint64_t seed = 1;
  int samples = 2000;
  std::uint64_t exhaustive_limit = 50000;
};

struct VerificationOutcome {
  std::string name;
  std::string scope;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Chambers covered by a policy; `scope` receives a description.
std::vector<Chamber> chambers_in_scope(const RootSystem& rs, const ChamberPolicy& policy, std::string* scope = nullptr);

/// Wherever property [G] holds at a chamber w, every simple root of the
/// imaginary subsystem (w-positivity) must be noncompact. Runs over all
/// classes and all representatives of each class. With inject_fault, one
/// epsilon is flipped before checking.
VerificationOutcome verify_lemma_main(const RootSystem& rs, const ChamberPolicy& policy = {},
                                      bool inject_fault = false);

/// Nontrivial inner class count against the known exceptional values, and
/// agreement of the T[2]/W and grading-orbit enumerations. With inject_fault
/// the grading route drops a generator.
VerificationOutcome verify_counts(const RootSystem& rs, bool inject_fault = false);

/// The all-(-1) inner class: orbit membership, property [G] at the identity
/// chamber and a chamber with dim U^theta = 0 must all hold. With
/// inject_fault the all-(+1) grading is tested instead.
VerificationOutcome verify_principal_quasisplit(const RootSystem& rs, bool inject_fault = false);

/// Every root has connected support. With inject_fault the Dynkin diagram is
/// replaced by its edgeless graph.
VerificationOutcome verify_connected_support(const RootSystem& rs, bool inject_fault = false);

/// |N| = p+1, antisymmetry, the Jacobi identity and the pinned-sign
/// identities. With inject_fault one constant is negated.
VerificationOutcome verify_chevalley(const RootSystem& rs, bool inject_fault = false);

/// Exactly one quasi-split class in every inner class. With inject_fault the
/// all-(+1) class is counted as quasi-split too.
VerificationOutcome verify_unique_quasisplit(const RootSystem& rs, bool inject_fault = false);

/// Known nontrivial inner class counts of the exceptional types.
std::optional<int> expected_inner_count(const RootSystem& rs);

/// Names accepted by run_check: counts, principal, descent, support,
/// chevalley, uniqueness.
const std::vector<std::string>& check_names();
VerificationOutcome run_check(const std::string& name, const RootSystem& rs, const ChamberPolicy& policy,
                              bool inject_fault = false);

/// Simple types of rank <= max_rank: A, B (from 2), C (from 3), D (from 4),
/// then E, F, G.
std::vector<std::string> simple_types_up_to(int max_rank, bool exceptional_only = false);

}  // namespace symspace
