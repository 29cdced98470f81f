#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symspace/rootdata.hpp"

namespace symspace {

/// Chevalley structure constants N(a, b), with [X_a, X_b] = N(a, b) X_{a+b}.
///
/// Built from the extraspecial pairs of the root order: for each positive
/// non-simple root xi the extraspecial pair (gamma, delta) gets
/// N = +(p + 1), where p is the largest integer with delta - p*gamma a root.
/// Every other constant follows from antisymmetry, N(-a,-b) = -N(a,b), and the
/// cyclic relation N(a,b)/|c|^2 = N(b,c)/|a|^2 = N(c,a)/|b|^2 for a+b+c = 0.
///
/// With a sign seed, the extraspecial signs are drawn at random instead; the
/// result is another valid Chevalley basis.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs, std::optional<std::uint64_t> sign_seed = std::nullopt);

  /// N(a, b) for root indices; 0 when a + b is not a root.
  int operator()(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

  const RootSystem& roots() const { return rs_; }
  /// Extraspecial pairs (gamma, delta), one per positive non-simple root.
  const std::vector<std::pair<int, int>>& extraspecial_pairs() const { return extraspecial_; }

 private:
  RootSystem rs_;
  int n_ = 0;
  std::vector<std::int8_t> table_;
  std::vector<std::pair<int, int>> extraspecial_;
};

/// Signs c(a) of a pinned diagram automorphism, theta0(X_a) = c(a) X_{theta0 a},
/// with c = 1 on the simple roots and c(-a) = c(a).
class PinnedSigns {
 public:
  PinnedSigns(const StructureConstants& n, const DiagramAutomorphism& theta0);

  int operator()(int root) const { return signs_[static_cast<std::size_t>(root)]; }
  const DiagramAutomorphism& automorphism() const { return theta0_; }

  /// Checks c(a+b) N(a,b) = c(a) c(b) N(theta0 a, theta0 b) over all pairs of
  /// roots; returns the number of failures.
  int consistency_violations(const StructureConstants& n) const;

 private:
  DiagramAutomorphism theta0_;
  std::vector<int> signs_;
};

}  // namespace symspace
