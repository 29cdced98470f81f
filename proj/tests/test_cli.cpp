#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "symspace/cli.hpp"
#include "symspace/json_io.hpp"

using namespace symspace;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source_path(const std::string& rel) { return std::string(SYMSPACE_SOURCE_DIR) + "/" + rel; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares against tests/golden/<name>; SYMSPACE_UPDATE_GOLDEN=1 rewrites the file.
void check_golden(const std::string& name, const std::vector<std::string>& args, int expected_code = 0) {
  const Run r = run(args);
  CHECK(r.code == expected_code);
  const std::string path = source_path("tests/golden/" + name);
  if (std::getenv("SYMSPACE_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << r.out;
    return;
  }
  CHECK(r.out == read_file(path));
}

// Minimal JSON Schema validation: type, required, properties,
// additionalProperties (false only) and items.
void validate(const json& schema, const json& doc, const std::string& where) {
  CAPTURE(where);
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    if (type == "object") REQUIRE(doc.is_object());
    if (type == "array") REQUIRE(doc.is_array());
    if (type == "string") CHECK(doc.is_string());
    if (type == "integer") CHECK(doc.is_number_integer());
    if (type == "boolean") CHECK(doc.is_boolean());
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"]) CHECK_MESSAGE(doc.contains(key), "missing " << key);
  if (schema.contains("properties")) {
    for (const auto& [key, value] : doc.items()) {
      if (schema["properties"].contains(key)) {
        validate(schema["properties"][key], value, where + "." + key);
      } else {
        CHECK_MESSAGE(schema.value("additionalProperties", true), "unexpected key " << key);
      }
    }
  }
  if (schema.contains("items"))
    for (std::size_t i = 0; i < doc.size(); ++i) validate(schema["items"], doc[i], where + "[" + std::to_string(i) + "]");
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden("involutions_E6.txt", {"involutions", "E6"});
  check_golden("involutions_E6.json", {"involutions", "E6", "--json"});
  check_golden("involutions_D4_merged.txt", {"involutions", "D4", "--merge-diagram-conjugate"});
  check_golden("report_E6_EII.txt", {"report", "E6", "--class", "i:000010"});
  check_golden("family_GL_linear_5_2.txt", {"family", "GL-linear", "5", "2"});
  check_golden("family_SO_pair_4_3.json", {"family", "SO_pair", "4", "3", "--json"});
  check_golden("verify_counts.txt", {"verify", "counts", "--max-rank", "8"});
  check_golden("catalog.txt", {"catalog"});
}

TEST_CASE("documented examples") {
  const Run e6 = run({"involutions", "E6", "--json"});
  REQUIRE(e6.code == 0);
  const json doc = json::parse(e6.out);
  std::multiset<int> dims;
  int inner = 0;
  for (const auto& c : doc["classes"]) {
    dims.insert(c["dim_K"].get<int>());
    inner += c["inner"].get<bool>();
  }
  CHECK(dims == std::multiset<int>{36, 38, 46, 52});
  CHECK(inner == 2);

  const Run gl = run({"family", "GL-linear", "5", "2"});
  CHECK(gl.code == 0);
  CHECK(gl.out.find("quasi_split: false") != std::string::npos);

  CHECK(run({"verify", "counts", "--max-rank", "8"}).code == 0);
  CHECK(run({"verify", "descent", "A3", "--exhaustive"}).code == 0);
  CHECK(run({"verify", "descent", "A3", "--exhaustive", "--inject-fault"}).code == 1);
  CHECK(run({"report", "A2", "--class", "i:01", "--json"}).code == 0);
}

TEST_CASE("usage errors exit with 2 and write to the error stream") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"involutions", "X9"}, {"report", "E6", "--class", "i:111111"},
        {"family", "nope", "1"}, {"family", "GL_linear", "1"}, {"verify", "bogus"}, {"frobnicate"}, {},
        {"verify", "counts", "--max-rank", "12"}}) {
    CAPTURE(args.size());
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  const Run help = run({"--help"});
  CHECK(help.code == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"involutions", "E7", "--json"}, {"verify", "descent", "E6", "--seed", "9", "--samples", "50"},
        {"family", "Sp_pair", "2", "2"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("JSON reports follow the published schema and round-trip") {
  const json schema = json::parse(read_file(source_path("schema/report.schema.json")));
  for (const char* type : {"A3", "D4", "E6", "G2", "B3+T1"}) {
    CAPTURE(type);
    const Run r = run({"involutions", type, "--json"});
    REQUIRE(r.code == 0);
    for (const auto& c : json::parse(r.out)["classes"]) {
      validate(schema, c, type);
      const SymmetricSpaceReport back = report_from_json(c);
      CHECK(to_json(back) == c);
      const Run single = run({"report", type, "--class", c["class_id"].get<std::string>(), "--json"});
      REQUIRE(single.code == 0);
      CHECK(report_from_json(json::parse(single.out)) == back);
    }
  }
  const Run fam = run({"family", "GL_orthogonal", "4", "--json"});
  validate(schema, json::parse(fam.out)["report"], "family");
}
