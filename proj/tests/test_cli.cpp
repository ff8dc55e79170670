#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("distgraph_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout", err = scratch() / "stderr";
  const std::string cmd = std::string(DISTGRAPH_CLI) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

std::string error_code(const Run& r) {
  return nlohmann::json::parse(r.err).at("error").get<std::string>();
}

}  // namespace

TEST_CASE("invariant command") {
  const auto q = run("invariant " + corpus("quad_z2_plus3.json"));
  REQUIRE(q.code == 0);
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["degree"] == 2);
  REQUIRE(j["graph"].size() == 1);
  CHECK(j["graph"][0]["position"] == 0.0);
  CHECK(j["graph"][0]["label"]["d"] == 2);
  CHECK(j["graph"][0]["label"]["n"] == 0);
  CHECK(j["graph"][0]["label"]["pair"] == nlohmann::json::parse("[[1],[1]]"));

  const auto z3 = run("invariant " + corpus("cube_fixed.json"));
  REQUIRE(z3.code == 0);
  CHECK(nlohmann::json::parse(z3.out) == nlohmann::json::parse(R"({"degree":3,"graph":[]})"));

  std::ofstream(scratch() / "bad.json") << "{\"coefficients\": [1, 2,";
  const auto bad = run("invariant " + (scratch() / "bad.json").string());
  CHECK(bad.code == 2);
  CHECK(error_code(bad) == "PARSE");

  const auto missing = run("invariant /nonexistent/poly.json");
  CHECK(missing.code == 2);
  CHECK(error_code(missing) == "IO");
}

TEST_CASE("orientation flag does not change certificates") {
  const auto file = corpus("cubic_z3_m3z_p10.json");
  const auto ccw = run("invariant " + file);
  const auto cw = run("invariant --orientation cw " + file);
  const auto both = run("invariant --orientation both " + file);
  REQUIRE(ccw.code == 0);
  CHECK(cw.out == ccw.out);
  CHECK(both.out == ccw.out);
  CHECK(run("invariant --orientation up " + file).code == 2);
}

TEST_CASE("equiv command") {
  const auto eq = run("equiv " + corpus("quad_z2_plus3.json") + " " +
                      corpus("quad_z2_plus5.json"));
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("EQUIVALENT", 0) == 0);

  const auto deg = run("equiv " + corpus("quad_z2_plus3.json") + " " +
                       corpus("cubic_z3_m3z_p10.json"));
  CHECK(deg.code == 1);
  CHECK(deg.out.rfind("NOT_EQUIVALENT", 0) == 0);
  CHECK(deg.out.find("degree mismatch") != std::string::npos);

  const auto len = run("equiv " + corpus("quad_z2_plus3.json") + " " +
                       corpus("quad_z2_plus0p1.json"));
  CHECK(len.code == 1);
  CHECK(len.out.find("length 1 vs 0") != std::string::npos);

  // Certificates stand in for polynomials.
  const auto cert = scratch() / "cubic_cert.json";
  REQUIRE(run("invariant -o " + cert.string() + " " +
              corpus("cubic_z3_m3z_p10.json")).code == 0);
  const auto mixed = run("equiv " + cert.string() + " " + corpus("cubic_z3_m3z_p10.json"));
  CHECK(mixed.code == 0);

  const auto empty = run("equiv " + corpus("cube_fixed.json") + " " + corpus("cube_fixed.json"));
  CHECK(empty.code == 0);
  CHECK(empty.out.find("both empty") != std::string::npos);
}

TEST_CASE("check command") {
  const auto sym = run("check " + corpus("cubic_symmetric.json"));
  CHECK(sym.code == 1);
  const auto js = nlohmann::json::parse(sym.out);
  CHECK(js["generic"] == false);
  CHECK(js["error"] == "GENERICITY_VIOLATION");

  const auto q = run("check " + corpus("quad_z2_plus3.json"));
  CHECK(q.code == 0);
  const auto jq = nlohmann::json::parse(q.out);
  CHECK(jq["usable"] == true);
  CHECK(jq["criticals"][0]["escaping"] == true);

  const auto e = run("check " + corpus("quad_z2_plus0p1.json"));
  CHECK(e.code == 0);
  const auto je = nlohmann::json::parse(e.out);
  CHECK(je["criticals"][0]["escaping"] == false);
  CHECK(je["portrait"]["criticals"].empty());
}

TEST_CASE("oracle command") {
  const auto q = run("oracle --depth 2 " + corpus("quad_z2_plus3.json"));
  REQUIRE(q.code == 0);
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["consistent"] == true);
  CHECK(j["counts"][0]["regions"] == 1);
  CHECK(j["counts"][0]["boundaries"] == 2);
  CHECK(j["counts"][1]["boundaries"] == 3);
  CHECK(j["counts"][2]["regions"] == 2);

  const auto bad = run("oracle --depth 2 --res 512 --corrupt " +
                       corpus("cubic_z3_m3z_p10.json"));
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["consistent"] == false);
}

TEST_CASE("render command") {
  const auto svg = scratch() / "eq.svg";
  REQUIRE(run("render --res 128 -o " + svg.string() + " " +
              corpus("quad_z2_plus3.json") + " equipotentials").code == 0);
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  const auto csv = scratch() / "regions.csv";
  REQUIRE(run("render --res 128 --depth 2 -o " + csv.string() + " " +
              corpus("quad_z2_plus3.json") + " regions").code == 0);
  CHECK(slurp(csv).find("\r\n") != std::string::npos);
  CHECK(run("render " + corpus("quad_z2_plus3.json") + " teapot").code == 2);
  CHECK(run("render " + corpus("quad_z2_plus0p1.json") + " rays").code == 2);
}

TEST_CASE("bad configuration exits with 2") {
  CHECK(run("").code == 2);
  CHECK(run("invariant").code == 2);
  const auto res = run("oracle --res 10 " + corpus("quad_z2_plus3.json"));
  CHECK(res.code == 2);
  CHECK(error_code(res) == "PRECONDITION");
  CHECK(run("invariant --tol-green -1 " + corpus("quad_z2_plus3.json")).code == 2);
}
