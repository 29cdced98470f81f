#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symspace/involution.hpp"
#include "symspace/weyl.hpp"

namespace symspace {

class RealFormTable;

enum class RootLabel { real, complex, imaginary };

/// The action of an involution on the roots of a theta-stable maximal torus:
/// the induced root permutation tau and the grading eps on imaginary roots
/// (+1 compact, -1 noncompact).
///
/// classify_roots gives the fundamental torus, where tau is theta0 on roots;
/// other tori are reached by Cayley transforms through noncompact imaginary
/// roots.
class RootClassification {
 public:
  RootClassification(std::shared_ptr<const Model> model, std::vector<int> tau, std::vector<int> eps, bool inner,
                     std::vector<int> cayley_roots = {});

  const RootSystem& roots() const { return model_->roots; }
  const std::shared_ptr<const Model>& model() const { return model_; }
  int tau(int root) const { return tau_[static_cast<std::size_t>(root)]; }
  const std::vector<int>& tau() const { return tau_; }
  RootLabel label(int root) const;
  bool is_imaginary(int root) const { return tau(root) == root; }
  bool is_real(int root) const { return tau(root) == roots().negative(root); }
  bool is_complex(int root) const { return !is_imaginary(root) && !is_real(root); }
  /// Throws std::domain_error for real and complex roots.
  int epsilon(int root) const;
  bool is_compact(int root) const { return is_imaginary(root) && epsilon(root) > 0; }
  bool is_noncompact(int root) const { return is_imaginary(root) && epsilon(root) < 0; }
  /// Whether the involution is inner (then it fixes the central torus,
  /// otherwise it inverts it).
  bool inner() const { return inner_; }
  /// Roots of the torus this one was obtained from, in order of application.
  const std::vector<int>& cayley_roots() const { return cayley_roots_; }

  /// Same torus data (tau and eps).
  bool same_torus(const RootClassification& other) const { return tau_ == other.tau_ && eps_ == other.eps_; }

 private:
  std::shared_ptr<const Model> model_;
  std::vector<int> tau_;
  std::vector<int> eps_;
  bool inner_ = true;
  std::vector<int> cayley_roots_;
};

/// Fundamental torus for theta = s.theta0: tau = theta0, eps = c * s.
RootClassification classify_roots(const InnerClass& inner, const GradingVector& s);
RootClassification classify_roots(const InvolutionClass& cls);

/// Cayley transform through a noncompact imaginary root beta: tau' = s_beta tau;
/// imaginary roots orthogonal to beta stay imaginary, changing type when
/// alpha + beta is a root.
RootClassification cayley_transform(const RootClassification& rc, int beta);

/// Repeated Cayley transforms until no noncompact imaginary root is left.
RootClassification maximally_split_torus(const RootClassification& rc);

/// All tori reachable by Cayley transforms, the starting one first.
std::vector<RootClassification> reachable_tori(const RootClassification& rc);

/// Dimension of the tau-fixed part of the torus, central torus included.
int dim_t_fixed(const RootClassification& rc);
/// Dimension of the (-1)-eigenspace of tau on the torus, central torus included.
int dim_t_split(const RootClassification& rc);
/// dim K = dim T^tau + #compact + (#complex + #real)/2.
int dim_k(const RootClassification& rc);
/// Number of roots of each kind, in the order compact, noncompact, complex, real.
std::vector<int> root_kind_counts(const RootClassification& rc);

/// dim U^theta for the Borel of chamber w: compact imaginary w-positive roots
/// plus pairs {alpha, tau alpha} of distinct w-positive roots.
int dim_u_theta(const RootClassification& rc, const Chamber& w);

/// Fails iff some beta in w(Delta) is compact imaginary, or complex with
/// tau(beta) w-positive but not w-simple.
bool property_g(const RootClassification& rc, const Chamber& w);

/// Simple roots of the imaginary subsystem with respect to w-positivity.
std::vector<int> imaginary_simple_roots(const RootClassification& rc, const Chamber& w);

/// A torus and chamber with dim U^theta = 0, if one exists: the maximally split
/// torus with a chamber P satisfying tau(P) = -P.
std::optional<std::pair<RootClassification, Chamber>> open_chamber(const RootClassification& rc);

/// Type of the compact-root subsystem, with "+T<r>" for the residual torus.
/// Inner involutions only; throws std::invalid_argument otherwise.
std::string k_subsystem(const RootClassification& rc);

struct SymmetricSpaceReport {
  std::string root_system;
  std::string class_id;
  std::vector<std::vector<int>> theta0;  // nontrivial cycles, 1-based
  std::string grading;
  int orbit_size = 0;
  bool inner = true;
  int dim_G = 0;
  int dim_K = 0;
  int dim_T_fixed = 0;
  bool quasi_split = false;
  std::optional<int> split_rank;
  std::optional<std::string> k_type;
  std::optional<std::string> real_form;
};

SymmetricSpaceReport report(const InvolutionClass& cls, const RealFormTable* table = nullptr);

}  // namespace symspace
