#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symspace/classify.hpp"
#include "symspace/involution.hpp"

namespace symspace {

struct RealFormEntry {
  std::string type;  // simple ambient type, e.g. "E6"
  bool inner = true;
  int dim_K = 0;
  std::string label;
};

/// Real-form names keyed by (ambient type, inner/outer, dim K).
class RealFormTable {
 public:
  /// The table compiled into the library.
  static const RealFormTable& builtin();
  /// Parses a JSON array of entries; throws std::logic_error on a repeated key.
  static RealFormTable from_json(std::string_view text);

  const std::vector<RealFormEntry>& entries() const { return entries_; }
  /// Label for a key, or "unlabeled".
  std::string lookup(const std::string& type, bool inner, int dim_K) const;
  /// Label for a report on a simple ambient type; nullopt for products and
  /// groups with a central torus.
  std::optional<std::string> lookup(const SymmetricSpaceReport& report) const;
  std::string to_json() const;

 private:
  std::vector<RealFormEntry> entries_;
};

/// A named symmetric pair family with its parameters, e.g. GL_linear(2, 3).
struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

/// Canonical family names, aliases excluded.
const std::vector<std::string>& family_names();

/// Normalises the name (case, '-' for '_', aliases) and checks the parameter
/// ranges; throws std::invalid_argument.
FamilySpec parse_family(const std::string& name, const std::vector<int>& params);

/// Engine input for a family, on the adjoint quotient.
struct FamilyInstance {
  FamilySpec spec;
  std::string alias_of;  // canonical family when spec.name is an alias
  RootSystem roots;
  DiagramAutomorphism theta0;
  GradingVector grading;
  int center_dim = 0;         // central torus of the ambient group, removed here
  bool center_fixed = false;  // whether the involution fixes that centre
};

FamilyInstance family_to_class(const FamilySpec& spec);

struct FamilyResult {
  FamilyInstance instance;
  InvolutionClass cls;
  SymmetricSpaceReport report;  // adjoint quotient
  int group_dim_K = 0;
  std::optional<int> group_split_rank;
  std::vector<std::string> notes;
};

FamilyResult evaluate_family(const FamilySpec& spec, const RealFormTable* table = &RealFormTable::builtin());

}  // namespace symspace
