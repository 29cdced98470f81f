#include "symspace/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symspace {

RootVector reflect(const RootSystem& rs, int node, const RootVector& v) {
  RootVector out = v;
  out(node) -= rs.cartan().row(node).dot(v);
  return out;
}

Chamber Chamber::identity(const RootSystem& rs) {
  Chamber c;
  c.perm_.resize(static_cast<std::size_t>(rs.num_roots()));
  std::iota(c.perm_.begin(), c.perm_.end(), 0);
  c.inverse_ = c.perm_;
  c.rank_ = rs.rank();
  return c;
}

Chamber Chamber::from_word(const RootSystem& rs, std::span<const int> word) {
  Chamber c = identity(rs);
  for (int i : word) c = c.times(rs, i);
  return c;
}

Chamber Chamber::times(const RootSystem& rs, int node) const {
  Chamber c;
  c.rank_ = rank_;
  c.word_ = word_;
  c.word_.push_back(node);
  const auto& s = rs.reflection_permutation(node);
  c.perm_.resize(perm_.size());
  c.inverse_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    const int image = perm_[static_cast<std::size_t>(s[k])];
    c.perm_[k] = image;
    c.inverse_[static_cast<std::size_t>(image)] = static_cast<int>(k);
  }
  return c;
}

Chamber Chamber::compose(const Chamber& other) const {
  Chamber c;
  c.rank_ = rank_;
  c.word_ = word_;
  c.word_.insert(c.word_.end(), other.word_.begin(), other.word_.end());
  c.perm_.resize(perm_.size());
  c.inverse_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    const int image = perm_[static_cast<std::size_t>(other.perm_[k])];
    c.perm_[k] = image;
    c.inverse_[static_cast<std::size_t>(image)] = static_cast<int>(k);
  }
  return c;
}

Chamber Chamber::inverse() const {
  Chamber c;
  c.rank_ = rank_;
  c.word_.assign(word_.rbegin(), word_.rend());
  c.perm_ = inverse_;
  c.inverse_ = perm_;
  return c;
}

std::vector<int> Chamber::image_of_simples() const {
  return {perm_.begin(), perm_.begin() + rank_};
}

std::vector<Chamber> fixed_subgroup_generators(const RootSystem& rs, const DiagramAutomorphism& theta0) {
  if (!theta0.is_involution()) throw std::invalid_argument("diagram automorphism must have order <= 2");
  std::vector<Chamber> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    const int j = theta0.node_permutation[static_cast<std::size_t>(i)];
    if (j == i) {
      gens.push_back(Chamber::from_word(rs, std::vector<int>{i}));
    } else if (j > i) {
      const std::vector<int> word = rs.adjacent(i, j) ? std::vector<int>{i, j, i} : std::vector<int>{i, j};
      gens.push_back(Chamber::from_word(rs, word));
    }
  }
  return gens;
}

std::vector<Chamber> enumerate_weyl_group(const RootSystem& rs, std::uint64_t limit) {
  if (rs.weyl_group_order() > limit) throw std::length_error("Weyl group larger than the enumeration limit");
  std::vector<Chamber> out{Chamber::identity(rs)};
  std::set<std::vector<int>> seen{out.front().image_of_simples()};
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (int i = 0; i < rs.rank(); ++i) {
      Chamber next = out[h].times(rs, i);
      if (seen.insert(next.image_of_simples()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

Chamber random_chamber(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, rs.rank());  // rank == "stay put"
  const int steps = 4 * rs.num_positive() + 8;
  Chamber c = Chamber::identity(rs);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng);
    if (i < rs.rank()) c = c.times(rs, i);
  }
  return c;
}

Chamber chamber_for_positive_system(const RootSystem& rs, std::span<const char> positive) {
  Chamber c = Chamber::identity(rs);
  for (int guard = 0; guard <= rs.num_positive(); ++guard) {
    int bad = -1;
    for (int i = 0; i < rs.rank() && bad < 0; ++i)
      if (!positive[static_cast<std::size_t>(c.apply(i))]) bad = i;
    if (bad < 0) return c;
    c = c.times(rs, bad);
  }
  throw std::invalid_argument("root subset is not a positive system");
}

SignMask torus2_reflect(const RootSystem& rs, int node, SignMask t) {
  // s_node^{-1} alpha_i = alpha_i - cartan(node, i) alpha_node
  const bool flip = (t >> node) & 1U;
  if (!flip) return t;
  SignMask out = t;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.cartan()(node, i) % 2 != 0) out ^= SignMask{1} << i;
  return out;
}

std::vector<std::vector<SignMask>> torus2_orbits(const RootSystem& rs, bool include_identity) {
  if (rs.rank() > 24) throw std::length_error("rank too large for T[2] enumeration");
  std::vector<SignMask> domain;
  for (SignMask t = include_identity ? 0 : 1; t < (SignMask{1} << rs.rank()); ++t) domain.push_back(t);
  std::vector<Action<SignMask>> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back([&rs, i](const SignMask& t) { return torus2_reflect(rs, i, t); });
  return orbit_partition<SignMask>(gens, domain);
}

}  // namespace symspace
