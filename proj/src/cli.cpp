#include "symspace/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "symspace/json_io.hpp"

namespace symspace {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string cycles_text(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "identity";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

RootSystem parse_type(const std::string& type) {
  try {
    return RootSystem::parse(type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_report(std::ostream& out, const SymmetricSpaceReport& r) {
  std::vector<std::vector<std::string>> rows = {
      {"class_id", r.class_id},
      {"root_system", r.root_system},
      {"theta0", cycles_text(r.theta0)},
      {"grading", r.grading.empty() ? "(no fixed nodes)" : r.grading},
      {"orbit_size", std::to_string(r.orbit_size)},
      {"dim_G", std::to_string(r.dim_G)},
      {"dim_K", std::to_string(r.dim_K)},
      {"dim_T_fixed", std::to_string(r.dim_T_fixed)},
      {"quasi_split", yes_no(r.quasi_split)},
  };
  if (r.split_rank) rows.push_back({"split_rank", std::to_string(*r.split_rank)});
  if (r.k_type) rows.push_back({"k_type", *r.k_type});
  if (r.real_form) rows.push_back({"real_form", *r.real_form});
  print_table(out, rows);
}

int cmd_involutions(const std::string& type, bool merge, bool as_json, std::ostream& out) {
  const RootSystem rs = parse_type(type);
  auto classes = nontrivial(enumerate_involution_classes(Model::make(rs)));
  if (merge) classes = merge_diagram_conjugate(classes);
  const auto& table = RealFormTable::builtin();
  std::vector<SymmetricSpaceReport> reports;
  for (const auto& cls : classes) reports.push_back(report(cls, &table));
  if (as_json) {
    nlohmann::json doc = {{"root_system", rs.name()}, {"merged", merge}, {"classes", nlohmann::json::array()}};
    for (const auto& r : reports) doc["classes"].push_back(to_json(r));
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << rs.name() << ": " << reports.size() << " nontrivial class" << (reports.size() == 1 ? "" : "es") << (merge ? " (diagram conjugates merged)" : "")
      << '\n';
  std::vector<std::vector<std::string>> rows = {{"id", "theta0", "grading", "dim_K", "quasi_split", "label"}};
  for (const auto& r : reports)
    rows.push_back({r.class_id, cycles_text(r.theta0), r.grading.empty() ? "." : r.grading, std::to_string(r.dim_K),
                    yes_no(r.quasi_split), r.real_form.value_or("-")});
  print_table(out, rows);
  return 0;
}

int cmd_report(const std::string& type, const std::string& id, bool as_json, std::ostream& out) {
  const RootSystem rs = parse_type(type);
  const auto classes = enumerate_involution_classes(Model::make(rs));
  const InvolutionClass* cls = nullptr;
  try {
    cls = &find_class(classes, id);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const auto r = report(*cls, &RealFormTable::builtin());
  if (as_json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    print_report(out, r);
  }
  return 0;
}

int cmd_family(const std::string& name, const std::vector<int>& params, bool as_json, std::ostream& out) {
  FamilySpec spec;
  try {
    spec = parse_family(name, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FamilyResult f = evaluate_family(spec);
  if (as_json) {
    out << to_json(f).dump(2) << '\n';
    return 0;
  }
  std::string args;
  for (std::size_t i = 0; i < spec.params.size(); ++i) args += (i ? "," : "") + std::to_string(spec.params[i]);
  out << spec.name << "(" << args << ")";
  if (!f.instance.alias_of.empty()) out << " [alias of " << f.instance.alias_of << "]";
  out << ": " << f.instance.roots.name() << ", class " << f.cls.id() << '\n';
  out << "quasi_split: " << yes_no(f.report.quasi_split) << '\n';
  print_report(out, f.report);
  out << "group_dim_K  " << f.group_dim_K << '\n';
  if (f.group_split_rank) out << "group_split_rank  " << *f.group_split_rank << '\n';
  for (const auto& note : f.notes) out << "note: " << note << '\n';
  return 0;
}

int cmd_verify(const std::string& check, const std::string& type, int max_rank, const ChamberPolicy& policy,
               bool inject_fault, bool as_json, std::ostream& out) {
  if (std::find(check_names().begin(), check_names().end(), check) == check_names().end())
    throw UsageError("unknown check '" + check + "'");
  std::vector<std::string> types;
  if (!type.empty()) {
    types.push_back(type);
  } else {
    types = simple_types_up_to(max_rank, check == "counts");
  }
  std::vector<VerificationOutcome> outcomes;
  for (const auto& t : types) outcomes.push_back(run_check(check, parse_type(t), policy, inject_fault));
  const bool passed = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed(); });
  if (as_json) {
    nlohmann::json doc = {{"check", check}, {"passed", passed}, {"outcomes", nlohmann::json::array()}};
    for (const auto& o : outcomes) doc["outcomes"].push_back(to_json(o));
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& o : outcomes) {
      out << (o.passed() ? "PASS " : "FAIL ") << o.name << "  " << o.scope << '\n';
      for (const auto& v : o.violations) out << "  " << v << '\n';
    }
    out << check << ": " << (passed ? "all passed" : "violations found") << '\n';
  }
  return passed ? 0 : 1;
}

int cmd_catalog(bool as_json, std::ostream& out) {
  const auto& table = RealFormTable::builtin();
  if (as_json) {
    out << to_json(table).dump(2) << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows = {{"type", "class", "dim_K", "label"}};
  for (const auto& e : table.entries())
    rows.push_back({e.type, e.inner ? "inner" : "outer", std::to_string(e.dim_K), e.label});
  print_table(out, rows);
  out << "families:";
  for (const auto& name : family_names()) out << ' ' << name;
  out << " (aliases: U_pair = GL_linear, U_symplectic = GL_symplectic)\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involutions of reductive groups and quasi-split symmetric spaces", "symspace"};
  app.require_subcommand(1);
  bool as_json = false;
  bool merge = false;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--merge-diagram-conjugate", merge, "merge classes conjugate under diagram automorphisms");

  std::string type;
  auto* involutions = app.add_subcommand("involutions", "list the nontrivial involution classes of a type");
  involutions->add_option("type", type, "root system, e.g. E6, D4+A1, A3+T1")->required();

  std::string class_id;
  auto* rep = app.add_subcommand("report", "full report for one class");
  rep->add_option("type", type, "root system")->required();
  rep->add_option("--class", class_id, "class id as listed by 'involutions'")->required();

  std::string family;
  std::vector<int> params;
  auto* fam = app.add_subcommand("family", "evaluate a named symmetric pair family");
  fam->add_option("name", family, "family name, e.g. GL_linear or GL-linear")->required();
  fam->add_option("params", params, "family parameters")->required();

  std::string check;
  int max_rank = 8;
  ChamberPolicy policy;
  bool inject_fault = false;
  auto* ver = app.add_subcommand("verify", "run a verification check");
  ver->add_option("check", check, "counts, principal, descent, support, chevalley or uniqueness")->required();
  ver->add_option("type", type, "root system (default: every simple type up to --max-rank)");
  ver->add_option("--max-rank", max_rank, "largest rank when no type is given")->check(CLI::Range(1, 8));
  ver->add_option("--seed", policy.seed, "seed for sampled chambers");
  ver->add_option("--samples", policy.samples, "number of sampled chambers")->check(CLI::PositiveNumber);
  ver->add_flag("--exhaustive", policy.exhaustive, "scan every chamber when |W| <= 50000");
  ver->add_flag("--inject-fault", inject_fault, "perturb the checker to show it can fail");

  auto* cat = app.add_subcommand("catalog", "dump the real-form table");

  for (auto* sub : {involutions, rep, fam, ver, cat}) {
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_flag("--merge-diagram-conjugate", merge, "merge classes conjugate under diagram automorphisms");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (involutions->parsed()) return cmd_involutions(type, merge, as_json, out);
    if (rep->parsed()) return cmd_report(type, class_id, as_json, out);
    if (fam->parsed()) return cmd_family(family, params, as_json, out);
    if (ver->parsed()) return cmd_verify(check, type, max_rank, policy, inject_fault, as_json, out);
    if (cat->parsed()) return cmd_catalog(as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace symspace
