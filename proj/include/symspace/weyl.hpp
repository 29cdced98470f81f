#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "symspace/rootdata.hpp"

namespace symspace {

/// s_i(v) = v - <v, alpha_i^vee> alpha_i.
RootVector reflect(const RootSystem& rs, int node, const RootVector& v);

/// A Weyl group element w, standing for the positive system w(Phi+) and its
/// base w(Delta). Carries the word it was built from and the induced root
/// permutation.
class Chamber {
 public:
  static Chamber identity(const RootSystem& rs);
  static Chamber from_word(const RootSystem& rs, std::span<const int> word);

  /// w * s_node
  Chamber times(const RootSystem& rs, int node) const;
  /// (*this) * other
  Chamber compose(const Chamber& other) const;
  Chamber inverse() const;

  const std::vector<int>& word() const { return word_; }
  /// Root indices w(alpha_1), ..., w(alpha_n).
  std::vector<int> image_of_simples() const;

  int apply(int root) const { return perm_[static_cast<std::size_t>(root)]; }
  int apply_inverse(int root) const { return inverse_[static_cast<std::size_t>(root)]; }

  /// Whether root lies in w(Phi+).
  bool is_positive(const RootSystem& rs, int root) const { return rs.is_positive(apply_inverse(root)); }
  /// Whether root lies in w(Delta).
  bool is_simple(const RootSystem& rs, int root) const { return rs.is_simple(apply_inverse(root)); }

  /// Same group element (words may differ).
  bool same_element(const Chamber& other) const { return perm_ == other.perm_; }

 private:
  std::vector<int> word_;
  std::vector<int> perm_;
  std::vector<int> inverse_;
  int rank_ = 0;
};

template <typename T>
using Action = std::function<T(const T&)>;

/// Orbits of the group generated by `generators` on a finite invariant domain,
/// by breadth-first closure. Each orbit is sorted and the orbits are listed by
/// their smallest element. Throws std::domain_error if a generator maps a
/// point outside the domain.
template <typename T, typename Compare = std::less<T>>
std::vector<std::vector<T>> orbit_partition(std::span<const Action<T>> generators, std::span<const T> domain,
                                            Compare cmp = {}) {
  std::map<T, int, Compare> slot(cmp);
  for (const auto& x : domain) slot.emplace(x, -1);
  std::vector<std::vector<T>> orbits;
  for (const auto& start : domain) {
    if (slot.at(start) >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<T> orbit{start};
    slot[start] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (const auto& g : generators) {
        T y = g(orbit[h]);
        auto it = slot.find(y);
        if (it == slot.end()) throw std::domain_error("generator maps a point outside the domain");
        if (it->second < 0) {
          it->second = id;
          orbit.push_back(std::move(y));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(), cmp);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [&](const std::vector<T>& a, const std::vector<T>& b) { return cmp(a.front(), b.front()); });
  return orbits;
}

/// Generators of the centraliser of a diagram involution in W: s_i for fixed
/// nodes, s_i s_j for swapped non-adjacent pairs, s_i s_j s_i for swapped
/// adjacent pairs. Listed by smallest node.
std::vector<Chamber> fixed_subgroup_generators(const RootSystem& rs, const DiagramAutomorphism& theta0);

/// Every element of W; throws std::length_error if |W| exceeds `limit`.
std::vector<Chamber> enumerate_weyl_group(const RootSystem& rs, std::uint64_t limit);

/// A random element from a lazy random walk on the simple reflections.
Chamber random_chamber(const RootSystem& rs, std::mt19937_64& rng);

/// The element w with w(Phi+) equal to the given positive system, indicated
/// per root index.
Chamber chamber_for_positive_system(const RootSystem& rs, std::span<const char> positive);

/// Elements of the adjoint torus T_ad[2] as sign vectors on the simple roots,
/// bit i set when alpha_i takes the value -1.
using SignMask = std::uint32_t;

/// Action of s_node on T_ad[2] in character coordinates:
/// (w.t)_i = prod_j t_j^{m_j} where w^{-1} alpha_i = sum_j m_j alpha_j.
SignMask torus2_reflect(const RootSystem& rs, int node, SignMask t);

/// W-orbits on T_ad[2]; the identity element is included iff requested.
std::vector<std::vector<SignMask>> torus2_orbits(const RootSystem& rs, bool include_identity);

}  // namespace symspace
