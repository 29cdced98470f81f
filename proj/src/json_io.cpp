#include "symspace/json_io.hpp"

namespace symspace {

using nlohmann::json;

json to_json(const SymmetricSpaceReport& r) {
  json doc = {{"root_system", r.root_system}, {"class_id", r.class_id},   {"theta0", r.theta0},
              {"grading", r.grading},         {"orbit_size", r.orbit_size}, {"inner", r.inner},
              {"dim_G", r.dim_G},             {"dim_K", r.dim_K},         {"dim_T_fixed", r.dim_T_fixed},
              {"quasi_split", r.quasi_split}};
  if (r.split_rank) doc["split_rank"] = *r.split_rank;
  if (r.k_type) doc["k_type"] = *r.k_type;
  if (r.real_form) doc["real_form"] = *r.real_form;
  return doc;
}

SymmetricSpaceReport report_from_json(const json& doc) {
  SymmetricSpaceReport r;
  r.root_system = doc.at("root_system").get<std::string>();
  r.class_id = doc.at("class_id").get<std::string>();
  r.theta0 = doc.at("theta0").get<std::vector<std::vector<int>>>();
  r.grading = doc.at("grading").get<std::string>();
  r.orbit_size = doc.at("orbit_size").get<int>();
  r.inner = doc.at("inner").get<bool>();
  r.dim_G = doc.at("dim_G").get<int>();
  r.dim_K = doc.at("dim_K").get<int>();
  r.dim_T_fixed = doc.at("dim_T_fixed").get<int>();
  r.quasi_split = doc.at("quasi_split").get<bool>();
  if (doc.contains("split_rank")) r.split_rank = doc.at("split_rank").get<int>();
  if (doc.contains("k_type")) r.k_type = doc.at("k_type").get<std::string>();
  if (doc.contains("real_form")) r.real_form = doc.at("real_form").get<std::string>();
  return r;
}

json to_json(const VerificationOutcome& o) {
  json doc = {{"check", o.name}, {"scope", o.scope}, {"passed", o.passed()}, {"violations", o.violations}};
  if (o.seed) doc["seed"] = *o.seed;
  return doc;
}

json to_json(const FamilyResult& f) {
  json doc = {{"family", f.instance.spec.name},
              {"params", f.instance.spec.params},
              {"root_system", f.instance.roots.name()},
              {"grading", grading_string(f.instance.grading)},
              {"class_id", f.cls.id()},
              {"quasi_split", f.report.quasi_split},
              {"report", to_json(f.report)},
              {"group_dim_K", f.group_dim_K},
              {"notes", f.notes}};
  if (!f.instance.alias_of.empty()) doc["alias_of"] = f.instance.alias_of;
  if (f.group_split_rank) doc["group_split_rank"] = *f.group_split_rank;
  return doc;
}

json to_json(const RealFormTable& table) { return json::parse(table.to_json()); }

bool operator==(const SymmetricSpaceReport& a, const SymmetricSpaceReport& b) {
  return a.root_system == b.root_system && a.class_id == b.class_id && a.theta0 == b.theta0 &&
         a.grading == b.grading && a.orbit_size == b.orbit_size && a.inner == b.inner && a.dim_G == b.dim_G &&
         a.dim_K == b.dim_K && a.dim_T_fixed == b.dim_T_fixed && a.quasi_split == b.quasi_split &&
         a.split_rank == b.split_rank && a.k_type == b.k_type && a.real_form == b.real_form;
}

}  // namespace symspace
