#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symspace/chevalley.hpp"
#include "symspace/rootdata.hpp"
#include "symspace/weyl.hpp"

namespace symspace {

/// A root system together with its Chevalley constants. Shared by everything
/// derived from it.
struct Model {
  RootSystem roots;
  StructureConstants constants;

  static std::shared_ptr<const Model> make(const RootSystem& rs,
                                           std::optional<std::uint64_t> sign_seed = std::nullopt);
};

/// Values +1/-1 of an involution on the root vectors of the theta0-fixed
/// simple roots, listed in the order of InnerClass::fixed_nodes.
using GradingVector = std::vector<int>;

/// "+-+" form; empty string when there are no fixed nodes.
std::string grading_string(const GradingVector& s);
/// "010" form with 1 standing for -1; "-" when there are no fixed nodes.
std::string grading_bits(const GradingVector& s);
/// Inverse of grading_string / grading_bits (accepts either form).
GradingVector parse_grading(const std::string& text);

/// Orders grading vectors by their bit strings (+1 before -1, node order).
struct GradingLess {
  bool operator()(const GradingVector& a, const GradingVector& b) const;
};

/// One inner class: a diagram automorphism of order <= 2 with its pinned signs
/// and the folded generators of its centraliser in W.
struct InnerClass {
  std::shared_ptr<const Model> model;
  DiagramAutomorphism theta0;
  int index = 0;  // 0 for the identity, k for the k-th order-two automorphism
  std::vector<int> fixed_nodes;
  std::vector<Chamber> generators;
  PinnedSigns signs;

  bool is_inner() const { return index == 0; }
  /// "i" or "o<k>".
  std::string tag() const;
  const RootSystem& roots() const { return model->roots; }

  /// prod over fixed nodes j of s_j^{m_j}, for root = sum m_j alpha_j.
  int character(const GradingVector& s, int root) const;
  /// c(root) * character(s, root); throws std::logic_error unless theta0 fixes the root.
  int epsilon(const GradingVector& s, int root) const;
};

/// All order <= 2 diagram automorphisms of the model, identity first.
std::vector<std::shared_ptr<const InnerClass>> inner_classes(const std::shared_ptr<const Model>& model);

/// (w.s)_i = epsilon_s(w^{-1} alpha_i) for each fixed node i, with w in W^{theta0}.
GradingVector grading_action(const InnerClass& inner, const Chamber& w, const GradingVector& s);

struct InvolutionClass {
  std::shared_ptr<const InnerClass> inner;
  std::vector<GradingVector> orbit;  // sorted by GradingLess
  bool trivial = false;

  const GradingVector& canonical() const { return orbit.front(); }
  bool contains(const GradingVector& s) const;
  /// "<tag>:<bits>", e.g. "i:010" or "o1:-".
  std::string id() const;
};

/// Every class, the trivial one included, grouped by inner class and listed by
/// canonical bit string.
std::vector<InvolutionClass> enumerate_involution_classes(const std::shared_ptr<const Model>& model);
/// Same, for one inner class; `generators` overrides the folded generators.
std::vector<InvolutionClass> enumerate_classes(const std::shared_ptr<const InnerClass>& inner,
                                               const std::vector<Chamber>* generators = nullptr);
/// Drops the trivial class.
std::vector<InvolutionClass> nontrivial(std::vector<InvolutionClass> classes);

/// Whether the all-(-1) grading lies in the class.
bool is_quasisplit_class(const InvolutionClass& cls);

/// Index groups of classes related by a diagram automorphism sigma:
/// theta0' = sigma theta0 sigma^{-1}, s'_{sigma(i)} = s_i. Groups are listed by
/// first member.
std::vector<std::vector<int>> diagram_conjugacy_groups(const std::vector<InvolutionClass>& classes);
/// Keeps the first class of each diagram-conjugacy group.
std::vector<InvolutionClass> merge_diagram_conjugate(const std::vector<InvolutionClass>& classes);

/// Looks a class up by id; throws std::out_of_range.
const InvolutionClass& find_class(const std::vector<InvolutionClass>& classes, const std::string& id);

}  // namespace symspace
