#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynalg/cli.hpp"

using namespace dynalg;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dynalg_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const Json& j) { std::ofstream(p) << j.dump(2); }

Json exp_fixture(const std::vector<std::string>& coeffs) {
  return Json{{"name", "exp"},
              {"provenance", "closed form"},
              {"job", {"poincare", "--map", "z^2", "--point", "1", "--order", "4"}},
              {"expect", {{"exit", 0}, {"output", {{"coefficients", coeffs}}}}}};
}

}  // namespace

TEST_CASE("poincare command") {
  auto r = run_command({"poincare", "--map", "z^2", "--point", "1", "--order", "4"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["coefficients"] == Json({"1", "1", "1/2", "1/6", "1/24"}));
  CHECK(r.output["multiplier"] == "2");
}

TEST_CASE("exit codes") {
  CHECK(run_command({}).exit_code == 64);
  CHECK(run_command({"frobnicate"}).exit_code == 64);
  CHECK(run_command({"poincare", "--map", "z^2"}).exit_code == 64);
  CHECK(run_command({"poincare", "--map", "z^2", "--point", "1", "--bogus", "3"}).exit_code == 64);
  CHECK(run_command({"--field", "R", "parse", "--map", "z"}).exit_code == 64);
  auto help = run_command({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.usage.find("verify-paper") != std::string::npos);

  auto err = run_command({"poincare", "--map", "z^2", "--point", "0"});
  CHECK(err.exit_code == 2);
  CHECK(err.output["error"]["code"] == "ZeroMultiplier");
  auto perr = run_command({"parse", "--map", "z+*"});
  CHECK(perr.exit_code == 2);
  CHECK(perr.output["error"]["position"] == 2);

  CHECK(run_command({"commute", "--a", "z^2", "--b", "z^3"}).exit_code == 0);
  CHECK(run_command({"commute", "--a", "z^2", "--b", "z^2+1"}).exit_code == 1);
}

TEST_CASE("field selection") {
  CHECK(run_command({"parse", "--map", "i*z"}).exit_code == 2);
  auto r = run_command({"--field", "Qi", "parse", "--map", "i*z"});
  CHECK(r.exit_code == 0);
  CHECK(r.output["canonical"] == "(i)*z");
  auto fp = run_command({"--field", "Qi", "fixpoints", "--map", "z^3"});
  CHECK(fp.output["fixed_points"].size() == 4);  // 0, 1, -1 and infinity
  auto fi = run_command({"--field", "Qi", "fixpoints", "--map", "z^2+z+1"});
  CHECK(fi.output["fixed_points"].size() == 3);  // -i, i and infinity
  auto fq = run_command({"fixpoints", "--map", "z^2+z+1"});
  CHECK(fq.output["unresolved"].size() == 1);
}

TEST_CASE("orbifold euler example") {
  auto r = run_command({"orbifold-euler", "--support", "0:2,inf:2"});
  CHECK(r.output["euler_characteristic"] == "1");
}

TEST_CASE("out file and canonical printing") {
  const fs::path dir = fresh_dir("out");
  const std::string path = (dir / "r.json").string();
  const std::string a0 = "dynalg", a1 = "--out", a3 = "orbifold-euler", a4 = "--support", a5 = "0:2";
  const char* argv[] = {a0.c_str(), a1.c_str(), path.c_str(), a3.c_str(), a4.c_str(), a5.c_str()};
  std::ostringstream out, err;
  CHECK(run(6, argv, out, err) == 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == out.str());
  CHECK(out.str().find("\"euler_characteristic\": \"3/2\"") != std::string::npos);

  CHECK(dump_canonical(Json{{"b", 1}, {"a", 2}}) == "{\n  \"a\": 2,\n  \"b\": 1\n}");
}

TEST_CASE("verify-paper: pass, named failure, missing fixtures") {
  const fs::path good = fresh_dir("good");
  write(good / "exp.json", exp_fixture({"1", "1", "1/2", "1/6", "1/24"}));
  auto ok = verify_paper(good, 1);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output["passed"] == 1);

  const fs::path bad = fresh_dir("bad");
  write(bad / "exp.json", exp_fixture({"1", "1", "1/2", "1/7", "1/24"}));
  auto failed = verify_paper(bad, 1);
  CHECK(failed.exit_code == 1);
  REQUIRE(failed.output["checks"].size() == 1);
  CHECK(failed.output["checks"][0]["name"] == "exp");
  CHECK(failed.output["checks"][0]["passed"] == false);
  CHECK(failed.output["checks"][0]["detail"].get<std::string>().find("/coefficients/3") != std::string::npos);

  const fs::path empty = fresh_dir("empty");
  auto missing = run_command({"verify-paper", "--fixtures", empty.string()});
  CHECK(missing.exit_code == 2);
  CHECK(missing.output["error"]["code"] == "MissingFixture");
}

TEST_CASE("verify-paper output does not depend on the job count") {
  const fs::path dir = fresh_dir("jobs");
  for (int k = 0; k < 6; ++k) {
    Json fx = exp_fixture({"1", "1", "1/2", "1/6", "1/24"});
    fx["name"] = "exp" + std::to_string(k);
    if (k == 3) fx["expect"]["output"]["coefficients"][1] = "2";
    write(dir / ("f" + std::to_string(k) + ".json"), fx);
  }
  const auto serial = dump_canonical(verify_paper(dir, 1).output);
  const auto parallel = dump_canonical(verify_paper(dir, 4).output);
  CHECK(serial == parallel);
  CHECK(verify_paper(dir, 3).output["failed"] == 1);
}
