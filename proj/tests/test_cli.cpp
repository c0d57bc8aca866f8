#include "doctest.h"

#include "liesym/cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = liesym::cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_warnings(const std::string& err) {
  int n = 0;
  std::istringstream in(err);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("warning:", 0) == 0) ++n;
  return n;
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(LIESYM_SCHEMA_DIR) + "/" + name + ".json");
  REQUIRE_MESSAGE(in.good(), "schema file for ", name);
  return json::parse(in);
}

// Structural validator for the checked-in schemas: type (single name or a
// list of alternatives), required and properties on objects, items on
// arrays. Enough to pin the output shape without a full validator.
void check_schema(const json& value, const json& schema, const std::string& path) {
  auto type_ok = [&](const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
  };
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = t.is_array() ? std::any_of(t.begin(), t.end(),
                                         [&](const json& o) {
                                           return type_ok(o.get<std::string>());
                                         })
                           : type_ok(t.get<std::string>());
    INFO(path << " has type " << value.type_name());
    CHECK(ok);
    if (!ok) return;
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& name : schema.at("required")) {
        INFO(path << " requires key " << name.get<std::string>());
        CHECK(value.contains(name.get<std::string>()));
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [name, sub] : schema.at("properties").items())
        if (value.contains(name)) check_schema(value.at(name), sub, path + "." + name);
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      check_schema(value[i], schema.at("items"), path + "[" + std::to_string(i) + "]");
  }
}

json parse_against_schema(const RunResult& r, const std::string& schema_name) {
  json doc = json::parse(r.out);
  check_schema(doc, load_schema(schema_name), schema_name);
  return doc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("repro passes, warns twice, and its json is byte reproducible") {
  RunResult first = run({"paper-repro", "--json"});
  RunResult second = run({"paper-repro", "--json"});
  CHECK(first.code == 0);
  CHECK(second.code == 0);
  CHECK(first.out == second.out);
  CHECK(count_warnings(first.err) == 2);

  json doc = parse_against_schema(first, "paper-repro");
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("warnings").size() == 2);
  for (const json& stage : doc.at("stages")) CHECK(stage.at("status") == "ok");
}

TEST_CASE("analyze reports the three flagship generators") {
  RunResult r = run({"analyze", "--preset", "viscoelastic-tube", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "analyze");
  CHECK(doc.at("dimension") == 3);
  REQUIRE(doc.at("generators").size() == 3);
  CHECK(doc.at("generators")[0].at("printed") == "d/dx");
  CHECK(doc.at("generators")[1].at("printed") == "d/dt");
  CHECK(doc.at("generators")[2].at("printed") == "(t) d/dx + (1/a) d/du");
}

TEST_CASE("tables carries the commutator entries, adjoint images and flags") {
  RunResult r = run({"tables", "viscoelastic-tube", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "tables");
  CHECK(doc.at("commutators")[1][2] == "v1");
  CHECK(doc.at("commutators")[2][1] == "-v1");
  CHECK(doc.at("commutators")[0][1] == "0");
  CHECK(doc.at("adjoint")[1].at("images")[2] == "v3 - eps*v1");
  CHECK(doc.at("adjoint")[2].at("images")[1] == "v2 + eps*v1");
  CHECK(doc.at("adjoint")[0].at("exact") == true);
  CHECK(doc.at("series").at("solvable") == true);
  CHECK(doc.at("series").at("nilpotent") == true);
  CHECK(doc.at("series").at("derived_length") == 2);
  CHECK(doc.at("series").at("nilpotency_class") == 2);
}

TEST_CASE("optimal audits coverage and warns exactly once about v1") {
  RunResult r = run({"optimal", "viscoelastic-tube", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "optimal");
  CHECK(doc.at("samples") == 200);
  CHECK(doc.at("witnesses_ok") == true);
  REQUIRE(doc.at("uncovered").size() == 1);
  CHECK(doc.at("uncovered")[0] == "v1");
  CHECK(doc.at("warnings").size() == 1);
  CHECK(count_warnings(r.err) == 1);

  int total = doc.at("counts").at("v1").get<int>() + doc.at("counts").at("v2").get<int>() +
              doc.at("counts").at("v3_family").get<int>();
  CHECK(total == 200);
}

TEST_CASE("reduce takes a basis combination and solves the galilean case") {
  RunResult r = run({"reduce", "viscoelastic-tube", "--generator", "v3", "--solve", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "reduce");
  CHECK(doc.at("ode") == "zeta/chi + zeta_chi");
  CHECK(doc.at("order") == 1);
  REQUIRE(doc.at("closed_form").is_object());
  CHECK(doc.at("closed_form").at("zeta") == "c1/chi");
  CHECK(doc.at("closed_form").at("u") == "x/(t*a) + c1/t");
}

TEST_CASE("reduce keeps symbolic combination coefficients and forwards notes") {
  RunResult r =
      run({"reduce", "viscoelastic-tube", "--generator", "v3 + beta*v2", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "reduce");
  CHECK(doc.at("chi") == "x - 1/2*t^2/beta");
  CHECK(doc.at("order") == 5);
  CHECK(doc.at("warnings").size() == 1);
  CHECK(count_warnings(r.err) == 1);
  CHECK(doc.at("closed_form").is_null());
}

TEST_CASE("verify certifies the drift solution and can dump the field") {
  RunResult r = run({"verify", "viscoelastic-tube", "--solution", "(x + a*c1)/(a*t)", "--values",
                     "c1=1", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "verify");
  CHECK(doc.at("symbolic_zero") == true);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("residual").at("points") == 10000);
  CHECK(doc.at("residual").at("max_abs").get<double>() < 1e-12);

  auto csv_path = std::filesystem::temp_directory_path() / "liesym_residuals.csv";
  RunResult dumped =
      run({"verify", "viscoelastic-tube", "--solution", "(x + a*c1)/(a*t)", "--values", "c1=1",
           "--grid", "0,1,1,2,5,4", "--dump", csv_path.string()});
  REQUIRE(dumped.code == 0);
  std::ifstream csv(csv_path);
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == "x,t,residual");
  int rows = 0;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 20);
  std::filesystem::remove(csv_path);
}

TEST_CASE("verify applies a group element before checking") {
  RunResult r = run({"verify", "viscoelastic-tube", "--solution", "(x + a*c1)/(a*t)", "--values",
                     "c1=1", "--transform", "G3:1/2", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "verify");
  CHECK(doc.at("symbolic_zero") == true);
  CHECK(doc.contains("transformed_solution"));
}

TEST_CASE("prolong prints the coefficient table") {
  RunResult r = run(
      {"prolong", "--xi", "x", "--eta", "2*t", "--phi", "-u", "--order", "2", "--json"});
  REQUIRE(r.code == 0);
  json doc = parse_against_schema(r, "prolong");
  CHECK(doc.at("coefficients").at("u_x") == "(-2)*u_x");
  CHECK(doc.at("coefficients").at("u_t") == "(-3)*u_t");
  CHECK(doc.at("coefficients").at("u_t2") == "(-5)*u_t2");
}

TEST_CASE("the equation can come from a file with identical results") {
  auto path = std::filesystem::temp_directory_path() / "liesym_equation.txt";
  std::ofstream(path) << "# viscous profile\nu_t + u*u_x = u_x2\n";
  RunResult from_file = run({"analyze", path.string(), "--degree", "2", "--json"});
  RunResult inline_eq =
      run({"analyze", "--equation", "u_t + u*u_x = u_x2", "--degree", "2", "--json"});
  REQUIRE(from_file.code == 0);
  REQUIRE(inline_eq.code == 0);
  CHECK(from_file.out == inline_eq.out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes separate success, mismatch and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--preset", "nope"}).code == 2);
  CHECK(run({"analyze", "--preset", "kdv", "--equation", "u_t = 0"}).code == 2);
  CHECK(run({"reduce", "viscoelastic-tube", "--generator", "v1 + x"}).code == 2);
  CHECK(run({"verify", "--preset", "kdv"}).code == 2);

  // A generator that is not a symmetry leaves t behind: a mismatch, not a
  // usage problem.
  CHECK(run({"reduce", "viscoelastic-tube", "--xi", "0", "--eta", "1", "--phi", "1"}).code == 1);
  // A wrong solution fails both the symbolic and the numeric check.
  CHECK(run({"verify", "viscoelastic-tube", "--solution", "x*t"}).code == 1);
}

}  // TEST_SUITE
