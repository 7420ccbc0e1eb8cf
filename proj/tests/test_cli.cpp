#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "supercontact/cli.hpp"

using supercontact::cli_main;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("xf and bracket") {
  const Run xf = run({"xf", "-l", "1", "-n", "2", "th1"});
  CHECK(xf.code == 0);
  CHECK(xf.out == "(1/2*th1)*d/dz + (1/2)*d/dth1\n");
  const Run br = run({"bracket", "-l", "1", "-n", "2", "1", "z"});
  CHECK(br.code == 0);
  CHECK(br.out == "1\n");
  const Run neg = run({"xf", "-l", "1", "-n", "1", "--", "-z"});
  CHECK(neg.code == 0);
  const Run js = run({"xf", "-l", "1", "-n", "2", "--json", "th1"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("hamiltonian") == "th1");
  CHECK(j.at("field") == "(1/2*th1)*d/dz + (1/2)*d/dth1");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"xf", "-l", "1", "-n", "2", "x9"}).code == 2);
  CHECK(run({"xf", "-l", "1", "-n", "2", "z +"}).code == 2);
  CHECK(run({"xf", "-n", "2", "z"}).code == 2);
  CHECK(run({"xf", "-l", "1", "-n", "0", "z"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"embed", "-l", "1", "-n", "2", "Sp9", "1", "1"}).code == 2);
  CHECK(run({"embed", "-l", "1", "-n", "2", "O", "2", "1"}).code == 2);
  const Run parse = run({"bracket", "-l", "1", "-n", "2", "z", "th3"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("th3") != std::string::npos);
}

TEST_CASE("resource cap") {
  const Run capped = run({"xf", "-l", "7", "-n", "1", "z"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("--force") != std::string::npos);
  CHECK(run({"xf", "-l", "1", "-n", "9", "z"}).code == 2);
  CHECK(run({"xf", "-l", "7", "-n", "1", "--force", "z"}).code == 0);
  CHECK(run({"xf", "-l", "0", "-n", "65", "--force", "z"}).code == 2);
}

TEST_CASE("help exits with 0") {
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("verify output") {
  const Run text = run({"verify", "-l", "0", "-n", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("[PASS] grassmann.supercommutativity") != std::string::npos);
  CHECK(text.out.find("29/29 checks passed") != std::string::npos);

  const Run a = run({"verify", "-l", "1", "-n", "1", "--json", "--seed", "3"});
  const Run b = run({"verify", "-l", "1", "-n", "1", "--json", "--seed", "3"});
  CHECK(a.code == 0);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  for (auto* j : {&ja, &jb})
    for (auto& c : j->at("checks")) c.erase("elapsedMs");
  CHECK(ja == jb);
  CHECK(ja.at("dimSpo") == 14);
  CHECK(ja.at("allPassed") == true);
}

TEST_CASE("report file") {
  const auto path = std::filesystem::temp_directory_path() / "supercontact_cli_report.json";
  std::filesystem::remove(path);
  const Run r = run({"table", "-l", "1", "-n", "2", "--report", path.string()});
  CHECK(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  const auto j = nlohmann::json::parse(f);
  CHECK(j.size() == 19);
  std::filesystem::remove(path);
  CHECK(run({"table", "-l", "1", "-n", "2", "--report", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("basis, embed and table") {
  const Run basis = run({"basis", "-l", "1", "-n", "2", "--json"});
  CHECK(basis.code == 0);
  const auto jb = nlohmann::json::parse(basis.out);
  CHECK(jb.size() == 19);
  CHECK(jb[0].at("family") == "Sp1");
  CHECK(jb[0].at("matrix").at("entries").size() == 6);

  const Run embed = run({"embed", "-l", "2", "-n", "3", "Sp1", "2", "3"});
  CHECK(embed.code == 0);
  CHECK(embed.out.find("(-x2)*d/dx1 + (y1)*d/dy2") != std::string::npos);
  CHECK(embed.out.find("2*x2*y1") != std::string::npos);

  const Run t1 = run({"table", "-l", "1", "-n", "2"});
  const Run t2 = run({"table", "-l", "1", "-n", "2"});
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("O(1,2)") != std::string::npos);
}
