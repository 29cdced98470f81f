#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace symspace {

/// Coordinates of a weight in the simple-root basis.
using RootVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// One simple factor of a semisimple type, e.g. {'E', 6}.
struct SimpleFactor {
  char letter = 'A';
  int rank = 1;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A connected block of the Dynkin diagram. For systems built from a type
/// string the nodes are contiguous and in Bourbaki order.
struct Component {
  SimpleFactor factor;
  std::vector<int> nodes;
};

/// A node permutation preserving the Cartan matrix.
struct DiagramAutomorphism {
  std::vector<int> node_permutation;  // 0-based: node i maps to node_permutation[i]
  int order = 1;

  bool is_identity() const;
  bool is_involution() const { return order <= 2; }
  /// Nontrivial cycles, 1-based, each cycle starting at its smallest node.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
    return a.node_permutation == b.node_permutation;
  }
};

/// Validates a (letter, rank) pair; throws std::invalid_argument on failure.
void check_simple_factor(const SimpleFactor& f);

/// Bourbaki Cartan matrix of a simple type.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
/// so the reflection in node i is s_i(v) = v - (cartan.row(i) . v) alpha_i.
IntMatrix cartan_matrix(const SimpleFactor& f);

/// Based root system of a reductive group given in adjoint coordinates.
///
/// Roots are stored positive first, ordered by height and then by descending
/// lexicographic order of their coordinates (so simple root i sits at index i),
/// followed by the negatives in the same order: root(k + P) == -root(k).
class RootSystem {
 public:
  /// Builds the root system of a product of simple factors and a central torus.
  static RootSystem build(std::span<const SimpleFactor> factors, int central_torus_dim = 0);
  /// Parses strings like "E6", "D4+A1", "A3+T1".
  static RootSystem parse(std::string_view type);
  /// Root system of an arbitrary (possibly decomposable) Cartan matrix. The
  /// components are identified by type; used for subsystems.
  static RootSystem from_cartan(const IntMatrix& cartan);

  int rank() const { return static_cast<int>(cartan_.rows()); }
  int central_torus_dim() const { return central_torus_dim_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Component>& components() const { return components_; }
  std::string name() const;

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  const RootVector& root(int k) const { return roots_[static_cast<std::size_t>(k)]; }
  const std::vector<RootVector>& roots() const { return roots_; }
  bool is_positive(int k) const { return k < num_positive(); }
  int negative(int k) const { return is_positive(k) ? k + num_positive() : k - num_positive(); }
  int height(int k) const { return heights_[static_cast<std::size_t>(k)]; }
  /// Root index of simple root i.
  int simple_root(int i) const { return i; }
  bool is_simple(int k) const { return k < rank(); }

  /// Index of a coordinate vector in the root list.
  std::optional<int> find(const RootVector& v) const;
  bool is_root(const RootVector& v) const { return find(v).has_value(); }
  /// Index of root(a) + root(b), if it is a root.
  std::optional<int> sum(int a, int b) const;

  /// Invariant form in simple-root coordinates, normalised so short roots have
  /// squared length 2 in every component.
  int inner(const RootVector& u, const RootVector& v) const;
  int norm2(int k) const { return norms_[static_cast<std::size_t>(k)]; }
  /// <root(a), root(b)^vee>.
  int pairing(int a, int b) const;

  /// Root permutation induced by the simple reflection s_i.
  const std::vector<int>& reflection_permutation(int i) const {
    return reflections_[static_cast<std::size_t>(i)];
  }
  /// Image of root k under a diagram automorphism.
  int apply(const DiagramAutomorphism& a, int k) const;
  RootVector apply(const DiagramAutomorphism& a, const RootVector& v) const;

  /// Component index of a node.
  int component_of(int node) const;
  /// Highest root of a component.
  int highest_root(int component) const;
  /// Whether nodes i and j are joined in the Dynkin diagram.
  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }

  /// Order of the Weyl group (saturates at UINT64_MAX).
  std::uint64_t weyl_group_order() const;

 private:
  RootSystem() = default;
  void generate();

  std::vector<Component> components_;
  int central_torus_dim_ = 0;
  IntMatrix cartan_;
  IntMatrix form_;  // symmetrised Cartan matrix, form_(i,j) = (alpha_i, alpha_j)
  std::vector<RootVector> roots_;
  std::vector<int> heights_;
  std::vector<int> norms_;
  std::vector<std::vector<int>> reflections_;
  std::map<std::vector<int>, int> index_;
};

/// Type label ("A5+A1", "B2", "E6") of a Cartan matrix whose components are
/// simple types. Components are listed by descending rank, then letter.
std::string cartan_type_name(const IntMatrix& cartan);

/// All node permutations preserving the Cartan matrix, identity first, then in
/// lexicographic order of the permutation.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

/// Nodes (0-based) with nonzero coordinate.
std::vector<int> node_support(const RootSystem& rs, const RootVector& v);
/// Whether a node set is connected in the Dynkin diagram.
bool nodes_connected(const RootSystem& rs, std::span<const int> nodes);

struct SupportInfo {
  std::vector<int> nodes;
  bool connected = false;
};

/// Support of a root and its connectivity; throws std::invalid_argument if v
/// is not a root.
SupportInfo support_connected(const RootSystem& rs, const RootVector& v);

/// Helper to build a RootVector from a list.
RootVector make_vector(std::initializer_list<int> coords);

}  // namespace symspace
