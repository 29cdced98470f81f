#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "symspace/weyl.hpp"

using namespace symspace;

namespace {

std::vector<int> perm_of(const RootSystem& rs, const Chamber& w) {
  std::vector<int> p(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) p[k] = w.apply(k);
  return p;
}

// Orbit count of a finite group action by brute-force union of images.
int count_orbits_naive(int domain, const std::vector<std::function<int(int)>>& gens) {
  std::vector<int> label(domain);
  for (int i = 0; i < domain; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < domain; ++x)
      for (const auto& g : gens) {
        const int y = g(x);
        const int m = std::min(label[x], label[y]);
        if (label[x] != m || label[y] != m) {
          label[x] = label[y] = m;
          changed = true;
        }
      }
  }
  return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

const DiagramAutomorphism& flip(const std::vector<DiagramAutomorphism>& autos) {
  for (const auto& a : autos)
    if (!a.is_identity() && a.order == 2) return a;
  throw std::logic_error("no flip");
}

}  // namespace

TEST_CASE("simple reflections") {
  const RootSystem a2 = RootSystem::parse("A2");
  CHECK(reflect(a2, 0, make_vector({1, 0})) == make_vector({-1, 0}));
  CHECK(reflect(a2, 0, make_vector({0, 1})) == make_vector({1, 1}));
  const RootSystem g2 = RootSystem::parse("G2");
  // alpha_1 is short: <alpha_2, alpha_1^vee> = -3, <alpha_1, alpha_2^vee> = -1.
  CHECK(reflect(g2, 1, make_vector({1, 0})) == make_vector({1, 1}));
  CHECK(reflect(g2, 0, make_vector({0, 1})) == make_vector({3, 1}));
}

TEST_CASE("chamber arithmetic") {
  const RootSystem b3 = RootSystem::parse("B3");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Chamber u = random_chamber(b3, rng);
    const Chamber v = random_chamber(b3, rng);
    CHECK(u.compose(u.inverse()).same_element(Chamber::identity(b3)));
    const Chamber uv = u.compose(v);
    for (int k = 0; k < b3.num_roots(); ++k) CHECK(uv.apply(k) == u.apply(v.apply(k)));
    // The word reproduces the element.
    CHECK(Chamber::from_word(b3, u.word()).same_element(u));
    // Image of simples matches apply on simple roots.
    const auto simples = u.image_of_simples();
    for (int i = 0; i < b3.rank(); ++i) {
      CHECK(simples[i] == u.apply(i));
      CHECK(u.is_simple(b3, simples[i]));
      CHECK(b3.root(simples[i]) == [&] {
        RootVector v = RootVector::Unit(3, i);
        const auto& w = u.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(b3, *it, v);
        return v;
      }());
    }
    // Exactly half of the roots are w-positive.
    int positives = 0;
    for (int k = 0; k < b3.num_roots(); ++k) positives += u.is_positive(b3, k);
    CHECK(positives == b3.num_positive());
  }
}

TEST_CASE("Weyl group enumeration") {
  CHECK(enumerate_weyl_group(RootSystem::parse("A3"), 100000).size() == 24);
  CHECK(enumerate_weyl_group(RootSystem::parse("B3"), 100000).size() == 48);
  CHECK(enumerate_weyl_group(RootSystem::parse("G2"), 100000).size() == 12);
  CHECK(enumerate_weyl_group(RootSystem::parse("F4"), 100000).size() == 1152);
  CHECK(RootSystem::parse("E8").weyl_group_order() == 696729600ULL);
  CHECK_THROWS_AS(enumerate_weyl_group(RootSystem::parse("E6"), 1000), std::length_error);
  const auto all = enumerate_weyl_group(RootSystem::parse("A3"), 100000);
  std::set<std::vector<int>> distinct;
  for (const auto& w : all) distinct.insert(perm_of(RootSystem::parse("A3"), w));
  CHECK(distinct.size() == 24);
}

TEST_CASE("orbit partition") {
  const std::vector<int> domain = {0, 1, 2, 3, 4, 5};
  const std::vector<Action<int>> gens = {[](const int& x) { return (x + 2) % 6; }};
  const auto orbits = orbit_partition<int>(gens, domain);
  CHECK(orbits == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});

  const std::vector<Action<int>> two = {[](const int& x) { return x ^ 1; }, [](const int& x) { return (x + 2) % 6; }};
  const std::vector<Action<int>> swapped = {two[1], two[0]};
  CHECK(orbit_partition<int>(two, domain) == orbit_partition<int>(swapped, domain));
  CHECK(orbit_partition<int>(two, domain).size() == 1);

  const std::vector<Action<int>> escape = {[](const int& x) { return x + 1; }};
  CHECK_THROWS_AS(orbit_partition<int>(escape, domain), std::domain_error);
}

TEST_CASE("T[2] orbits under W") {
  CHECK(torus2_orbits(RootSystem::parse("A1"), false).size() == 1);
  CHECK(torus2_orbits(RootSystem::parse("G2"), false).size() == 1);
  CHECK(torus2_orbits(RootSystem::parse("F4"), false).size() == 2);
  CHECK(torus2_orbits(RootSystem::parse("E6"), false).size() == 2);
  CHECK(torus2_orbits(RootSystem::parse("E7"), false).size() == 3);
  CHECK(torus2_orbits(RootSystem::parse("E8"), false).size() == 2);
  CHECK(torus2_orbits(RootSystem::parse("A1"), true).size() == 2);

  // The reflection formula against its definition, for every element and node.
  for (const char* type : {"A3", "B3", "C3", "G2", "D4"}) {
    const RootSystem rs = RootSystem::parse(type);
    const int n = rs.rank();
    for (SignMask t = 0; t < (SignMask{1} << n); ++t)
      for (int node = 0; node < n; ++node) {
        SignMask expected = 0;
        for (int i = 0; i < n; ++i) {
          // s_node is its own inverse.
          const RootVector pre = reflect(rs, node, RootVector::Unit(n, i));
          int parity = 0;
          for (int j = 0; j < n; ++j)
            if ((t >> j) & 1) parity += pre[j];
          if (parity % 2 != 0) expected |= SignMask{1} << i;
        }
        CHECK(torus2_reflect(rs, node, t) == expected);
      }
  }

  // Orbit count against a naive union over the simple reflections.
  const RootSystem d5 = RootSystem::parse("D5");
  std::vector<std::function<int(int)>> gens;
  for (int i = 0; i < d5.rank(); ++i)
    gens.push_back([&, i](int t) { return static_cast<int>(torus2_reflect(d5, i, static_cast<SignMask>(t))); });
  CHECK(count_orbits_naive(1 << d5.rank(), gens) == static_cast<int>(torus2_orbits(d5, true).size()));
}

TEST_CASE("generators of the centraliser of a diagram involution") {
  const RootSystem a3 = RootSystem::parse("A3");
  const auto a3_gens = fixed_subgroup_generators(a3, flip(diagram_automorphisms(a3)));
  REQUIRE(a3_gens.size() == 2);
  CHECK(a3_gens[0].word() == std::vector<int>{0, 2});
  CHECK(a3_gens[1].word() == std::vector<int>{1});

  const RootSystem e6 = RootSystem::parse("E6");
  const auto e6_gens = fixed_subgroup_generators(e6, flip(diagram_automorphisms(e6)));
  std::vector<std::vector<int>> words;
  for (const auto& g : e6_gens) words.push_back(g.word());
  CHECK(words == std::vector<std::vector<int>>{{0, 5}, {1}, {2, 4}, {3}});

  // The generated group equals the brute-force centraliser.
  for (const char* type : {"A2", "A3", "A4", "D4", "A1+A1", "B2+B2"}) {
    CAPTURE(type);
    const RootSystem rs = RootSystem::parse(type);
    for (const auto& theta : diagram_automorphisms(rs)) {
      if (theta.order != 2) continue;
      std::vector<int> theta_perm(rs.num_roots());
      for (int k = 0; k < rs.num_roots(); ++k) theta_perm[k] = rs.apply(theta, k);
      std::set<std::vector<int>> brute;
      for (const auto& w : enumerate_weyl_group(rs, 100000)) {
        bool commutes = true;
        for (int k = 0; k < rs.num_roots() && commutes; ++k)
          commutes = w.apply(theta_perm[k]) == theta_perm[w.apply(k)];
        if (commutes) brute.insert(perm_of(rs, w));
      }
      const auto gens = fixed_subgroup_generators(rs, theta);
      std::set<std::vector<int>> generated = {perm_of(rs, Chamber::identity(rs))};
      std::vector<Chamber> frontier = {Chamber::identity(rs)};
      while (!frontier.empty()) {
        const Chamber w = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
          const Chamber x = w.compose(g);
          if (generated.insert(perm_of(rs, x)).second) frontier.push_back(x);
        }
      }
      CHECK(generated == brute);
    }
  }
}

TEST_CASE("chamber from a positive system") {
  const RootSystem c3 = RootSystem::parse("C3");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Chamber w = random_chamber(c3, rng);
    std::vector<char> positive(c3.num_roots());
    for (int k = 0; k < c3.num_roots(); ++k) positive[k] = w.is_positive(c3, k);
    CHECK(chamber_for_positive_system(c3, positive).same_element(w));
  }
}
