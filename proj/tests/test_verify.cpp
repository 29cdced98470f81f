#include "doctest.h"
#include "symspace/verify.hpp"

using namespace symspace;

namespace {

ChamberPolicy sampled(int samples) {
  ChamberPolicy p;
  p.samples = samples;
  p.seed = 3;
  return p;
}

ChamberPolicy exhaustive() {
  ChamberPolicy p;
  p.exhaustive = true;
  return p;
}

}  // namespace

TEST_CASE("type lists") {
  const auto up_to_4 = simple_types_up_to(4);
  CHECK(up_to_4 == std::vector<std::string>{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"});
  CHECK(simple_types_up_to(8, true) == std::vector<std::string>{"E6", "E7", "E8", "F4", "G2"});
}

TEST_CASE("chamber scopes") {
  const RootSystem a3 = RootSystem::parse("A3");
  std::string scope;
  CHECK(chambers_in_scope(a3, exhaustive(), &scope).size() == 24);
  CHECK_FALSE(scope.empty());
  const RootSystem e8 = RootSystem::parse("E8");
  const auto sample = chambers_in_scope(e8, sampled(50));
  CHECK(sample.size() == 50);
  CHECK(sample.front().same_element(Chamber::identity(e8)));
  // Too large for an exhaustive scan: falls back to sampling.
  CHECK(chambers_in_scope(e8, exhaustive()).size() == 2000);
}

TEST_CASE("every check passes on unmodified input") {
  for (const auto& type : simple_types_up_to(4)) {
    CAPTURE(type);
    const RootSystem rs = RootSystem::parse(type);
    CHECK(verify_lemma_main(rs, exhaustive()).passed());
    CHECK(verify_principal_quasisplit(rs).passed());
    CHECK(verify_connected_support(rs).passed());
    CHECK(verify_chevalley(rs).passed());
    CHECK(verify_unique_quasisplit(rs).passed());
    CHECK(verify_counts(rs).passed());
  }
  for (const char* type : {"E6", "D5", "A5", "E8"}) {
    CAPTURE(type);
    const RootSystem rs = RootSystem::parse(type);
    CHECK(verify_lemma_main(rs, sampled(200)).passed());
    CHECK(verify_principal_quasisplit(rs).passed());
    CHECK(verify_unique_quasisplit(rs).passed());
    CHECK(verify_counts(rs).passed());
  }
  CHECK(verify_connected_support(RootSystem::parse("E8")).passed());
}

TEST_CASE("fault injection is detected") {
  for (const char* type : {"A1", "A3", "G2", "D4", "E6"}) {
    CAPTURE(type);
    const RootSystem rs = RootSystem::parse(type);
    CHECK_FALSE(verify_lemma_main(rs, sampled(200), true).passed());
    CHECK_FALSE(verify_principal_quasisplit(rs, true).passed());
    CHECK_FALSE(verify_unique_quasisplit(rs, true).passed());
    if (rs.rank() > 1) {
      CHECK_FALSE(verify_counts(rs, true).passed());
      CHECK_FALSE(verify_connected_support(rs, true).passed());
      CHECK_FALSE(verify_chevalley(rs, true).passed());
    }
  }
}

TEST_CASE("outcomes record their scope and seed") {
  const auto outcome = verify_lemma_main(RootSystem::parse("E6"), sampled(10));
  CHECK(outcome.name == "descent");
  CHECK(outcome.seed == 3u);
  CHECK(outcome.scope.find("E6") != std::string::npos);
  CHECK(expected_inner_count(RootSystem::parse("E7")) == 3);
  CHECK_FALSE(expected_inner_count(RootSystem::parse("A4")).has_value());
  for (const auto& name : check_names()) CHECK(run_check(name, RootSystem::parse("A2"), sampled(20)).name == name);
  CHECK_THROWS(run_check("bogus", RootSystem::parse("A2"), sampled(20)));
}
