#include <algorithm>
#include <random>

#include "doctest.h"
#include "symspace/catalog.hpp"
#include "symspace/classify.hpp"
#include "symspace/verify.hpp"

using namespace symspace;

namespace {

std::vector<InvolutionClass> classes_for(const std::string& type) {
  return enumerate_involution_classes(Model::make(RootSystem::parse(type)));
}

GradingVector diagonal_grading(const std::vector<int>& t) {
  GradingVector s;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) s.push_back(t[i] * t[i + 1]);
  return s;
}

int sum_of(const std::vector<int>& v) {
  int total = 0;
  for (int x : v) total += x;
  return total;
}

std::vector<Chamber> scan(const RootSystem& rs, int samples) {
  ChamberPolicy policy;
  policy.exhaustive = rs.rank() <= 4;
  policy.samples = samples;
  policy.seed = 5;
  return chambers_in_scope(rs, policy);
}

}  // namespace

TEST_CASE("principal grading of E6") {
  const auto all = classes_for("E6");
  const auto& inner = *all.front().inner;
  const GradingVector minus(6, -1);
  const RootClassification rc = classify_roots(inner, minus);
  const RootSystem& rs = rc.roots();
  int compact = 0;
  for (int a = 0; a < rs.num_roots(); ++a) {
    REQUIRE(rc.is_imaginary(a));
    CHECK(rc.epsilon(a) == (rs.height(a) % 2 == 0 ? 1 : -1));
    compact += rc.is_compact(a);
  }
  CHECK(compact == 32);
  CHECK(dim_k(rc) == 38);
  CHECK(k_subsystem(rc) == "A5+A1");
  CHECK(property_g(rc, Chamber::identity(rs)));
}

TEST_CASE("A1 and the A2 flip") {
  const auto a1 = classes_for("A1");
  const RootClassification rc1 = classify_roots(*a1.front().inner, {-1});
  CHECK(rc1.epsilon(0) == -1);
  CHECK(rc1.is_noncompact(0));

  const auto a2 = classes_for("A2");
  const auto& outer = find_class(a2, "o1:-");
  const RootClassification rc = classify_roots(outer);
  const RootSystem& rs = rc.roots();
  const int top = *rs.find(make_vector({1, 1}));
  CHECK(rc.label(top) == RootLabel::imaginary);
  CHECK(rc.epsilon(top) == -1);
  CHECK(rc.label(0) == RootLabel::complex);
  CHECK_THROWS_AS(rc.epsilon(0), std::domain_error);
  CHECK_FALSE(rc.inner());
  CHECK_THROWS_AS(k_subsystem(rc), std::invalid_argument);
}

TEST_CASE("dim U^theta against upper triangular fixed points of diagonal sign matrices") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto all = classes_for("A" + std::to_string(n));
    const auto& inner = *all.front().inner;
    const RootSystem& rs = inner.roots();
    for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> t(n + 1);
      for (int i = 0; i <= n; ++i) t[i] = (mask >> i) & 1 ? -1 : 1;
      int fixed_upper = 0;
      int fixed_diag_blocks = 0;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) fixed_upper += t[i] == t[j];
      const int plus = static_cast<int>(std::count(t.begin(), t.end(), 1));
      fixed_diag_blocks = plus * plus + (n + 1 - plus) * (n + 1 - plus) - 1;
      const RootClassification rc = classify_roots(inner, diagonal_grading(t));
      CHECK(dim_u_theta(rc, Chamber::identity(rs)) == fixed_upper);
      CHECK(dim_k(rc) == fixed_diag_blocks);
    }
  }
  const auto a3 = classes_for("A3");
  const RootClassification rc = classify_roots(*a3.front().inner, {1, -1, 1});
  CHECK(dim_u_theta(rc, Chamber::identity(rc.roots())) == 2);
}

TEST_CASE("property [G] examples") {
  const auto a3 = classes_for("A3");
  const RootSystem& rs = a3.front().inner->roots();
  const auto chambers = enumerate_weyl_group(rs, 100);
  REQUIRE(chambers.size() == 24);
  const auto& trivial = find_class(a3, "i:000");
  const auto& split31 = find_class(a3, "i:001");
  for (const auto& w : chambers) {
    CHECK_FALSE(property_g(classify_roots(trivial), w));
    for (const auto& s : split31.orbit) CHECK_FALSE(property_g(classify_roots(*split31.inner, s), w));
  }
  const RootClassification principal = classify_roots(*a3.front().inner, {-1, -1, -1});
  CHECK(property_g(principal, Chamber::identity(rs)));
  // For the trivial involution every root is compact and dim U^theta = dim U.
  CHECK(dim_u_theta(classify_roots(trivial), Chamber::identity(rs)) == rs.num_positive());
  CHECK(dim_k(classify_roots(trivial)) == rs.num_roots() + rs.rank());
}

TEST_CASE("compact subsystems of inner classes") {
  for (int m = 1; m <= 4; ++m)
    for (int n = m; m + n <= 8; ++n) {
      if (m + n < 2) continue;
      CAPTURE(m);
      CAPTURE(n);
      const std::string type = "A" + std::to_string(m + n - 1);
      const auto all = classes_for(type);
      std::vector<int> t(m + n, 1);
      for (int k = m; k < m + n; ++k) t[k] = -1;
      const RootClassification rc = classify_roots(*all.front().inner, diagonal_grading(t));
      std::string expected;
      if (n > 1) expected += "A" + std::to_string(n - 1);
      if (m > 1) expected += (expected.empty() ? "" : "+") + std::string("A") + std::to_string(m - 1);
      expected += (expected.empty() ? "" : "+") + std::string("T1");
      CHECK(k_subsystem(rc) == expected);
    }
  const auto e7 = classes_for("E7");
  CHECK(k_subsystem(classify_roots(e7.front())) == "E7");
}

TEST_CASE("reports") {
  const auto e6 = classes_for("E6");
  const auto& table = RealFormTable::builtin();
  const auto qs_outer = report(find_class(e6, "o1:01"), &table);
  CHECK(qs_outer.dim_K == 36);
  CHECK(qs_outer.quasi_split);
  CHECK(qs_outer.split_rank == 6);
  CHECK(qs_outer.real_form == "EI");
  CHECK_FALSE(qs_outer.k_type.has_value());
  const auto f4_outer = report(find_class(e6, "o1:00"), &table);
  CHECK(f4_outer.dim_K == 52);
  CHECK_FALSE(f4_outer.quasi_split);
  CHECK_FALSE(f4_outer.split_rank.has_value());
  CHECK(f4_outer.dim_G - f4_outer.dim_K == 26);
  const auto eii = report(find_class(e6, "i:000010"), &table);
  CHECK(eii.dim_K == 38);
  CHECK(eii.real_form == "EII");
  CHECK(eii.k_type == "A5+A1");
  CHECK(eii.theta0.empty());

  const auto a2 = classes_for("A2");
  const auto principal = report(find_class(a2, "i:01"));
  CHECK(principal.dim_K == 4);
  CHECK(principal.quasi_split);
  CHECK(principal.split_rank == 1);
  CHECK_FALSE(principal.real_form.has_value());

  const auto with_torus = report(classes_for("A3+T1").back());
  CHECK(with_torus.dim_G == 16);
}

TEST_CASE("dimension bookkeeping for every class up to rank 6") {
  for (const auto& type : simple_types_up_to(6)) {
    CAPTURE(type);
    for (const auto& cls : classes_for(type)) {
      CAPTURE(cls.id());
      const RootClassification rc = classify_roots(cls);
      const RootSystem& rs = rc.roots();
      const auto counts = root_kind_counts(rc);
      CHECK(sum_of(counts) == rs.num_roots());
      const int dim_g = rs.num_roots() + rs.rank();
      const int minus_part = counts[1] + (counts[2] + counts[3]) / 2 + (rs.rank() - dim_t_fixed(rc));
      CHECK(dim_k(rc) + minus_part == dim_g);
      CHECK(dim_t_fixed(rc) + dim_t_split(rc) == rs.rank());
      const auto r = report(cls);
      CHECK(r.dim_G == dim_g);
      CHECK(r.dim_K == dim_k(rc));
      CHECK(r.split_rank.has_value() == r.quasi_split);
      CHECK(r.k_type.has_value() == r.inner);
      // Every torus reachable by Cayley transforms gives the same dim K.
      for (const auto& torus : reachable_tori(rc)) CHECK(dim_k(torus) == r.dim_K);
    }
  }
}

TEST_CASE("quasi-split classes have an open chamber and match the split rank") {
  for (const auto& type : simple_types_up_to(7)) {
    CAPTURE(type);
    for (const auto& cls : classes_for(type)) {
      CAPTURE(cls.id());
      const RootClassification rc = classify_roots(cls);
      const auto open = open_chamber(rc);
      CHECK(open.has_value() == is_quasisplit_class(cls));
      if (!open) continue;
      CHECK(dim_u_theta(open->first, open->second) == 0);
      CHECK(dim_t_split(open->first) == report(cls).split_rank);
    }
  }
}

TEST_CASE("quasi-split iff property [G] somewhere") {
  for (const auto& type : simple_types_up_to(6)) {
    CAPTURE(type);
    const auto all = classes_for(type);
    const auto chambers = scan(all.front().inner->roots(), 1000);
    for (const auto& cls : all) {
      CAPTURE(cls.id());
      bool witnessed = false;
      for (const auto& s : cls.orbit) {
        const RootClassification rc = classify_roots(*cls.inner, s);
        for (const auto& w : chambers)
          if (property_g(rc, w)) {
            witnessed = true;
            break;
          }
        if (witnessed) break;
      }
      CHECK(witnessed == is_quasisplit_class(cls));
    }
  }
}

TEST_CASE("non-quasi-split classes never reach dim U^theta = 0") {
  for (const auto& type : simple_types_up_to(4)) {
    CAPTURE(type);
    const auto all = classes_for(type);
    const auto chambers = enumerate_weyl_group(all.front().inner->roots(), 50000);
    for (const auto& cls : all) {
      if (is_quasisplit_class(cls)) continue;
      CAPTURE(cls.id());
      for (const auto& torus : reachable_tori(classify_roots(cls))) {
        int smallest = 1 << 20;
        for (const auto& w : chambers) smallest = std::min(smallest, dim_u_theta(torus, w));
        CHECK(smallest > 0);
      }
    }
  }
}

TEST_CASE("the quasi-split class has the smallest K in its inner class") {
  for (const auto& type : simple_types_up_to(6)) {
    CAPTURE(type);
    const auto all = classes_for(type);
    for (const auto& cls : all) {
      if (!is_quasisplit_class(cls)) continue;
      const int qs_dim = dim_k(classify_roots(cls));
      for (const auto& other : all)
        if (other.inner->index == cls.inner->index) CHECK(dim_k(classify_roots(other)) >= qs_dim);
    }
  }
}

TEST_CASE("Cayley transforms") {
  const auto a1 = classes_for("A1");
  const RootClassification rc = classify_roots(*a1.front().inner, {-1});
  const RootClassification split = cayley_transform(rc, 0);
  CHECK(split.is_real(0));
  CHECK(dim_t_split(split) == 1);
  CHECK(split.cayley_roots() == std::vector<int>{0});
  CHECK_THROWS_AS(cayley_transform(classify_roots(*a1.front().inner, {1}), 0), std::invalid_argument);
  CHECK(maximally_split_torus(rc).same_torus(split));
  CHECK(reachable_tori(rc).size() == 2);
}

TEST_CASE("simple roots of the imaginary subsystem") {
  const auto e6 = classes_for("E6");
  const auto& outer = find_class(e6, "o1:00");
  const RootClassification rc = classify_roots(outer);
  const auto simple = imaginary_simple_roots(rc, Chamber::identity(rc.roots()));
  // The roots fixed by the E6 flip form a D4 subsystem.
  CHECK(simple.size() == 4);
  for (int a : simple) CHECK(rc.is_imaginary(a));
}
