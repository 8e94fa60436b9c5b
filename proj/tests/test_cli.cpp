#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "g2fp/cli.hpp"
#include "g2fp/io.hpp"
#include "support.hpp"

using namespace g2fp;
using namespace g2fp::testing;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(G2FP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "g2fp_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("json round trip") {
  const FixedPointData d = standard({3, 2, 1});
  CHECK(parse_data_file(to_json(d)) == d);
  const MomentProfile p = parse_profile(to_json(d));
  CHECK(p.n() == 4);
  CHECK_THROWS_AS(parse_data_file(Json::parse(R"({"n": 2, "points": []})")), MalformedData);
  CHECK_THROWS_AS(parse_data_file(Json::parse(R"({"n": "2", "points": []})")), MalformedData);
  CHECK_THROWS(parse_data_file(Json::parse(
      R"({"n": 2, "points": [{"phi": "x", "weights": ["1","1"]},{"phi": "1", "weights": ["1","1"]},
          {"phi": "2", "weights": ["1","1"]},{"phi": "3", "weights": ["1","1"]}]})")));
}

TEST_CASE("generate") {
  const Run r = run("generate --b 2,1");
  CHECK(r.code == 0);
  const FixedPointData d = parse_data_file(Json::parse(r.out));
  CHECK(d == standard({2, 1}));
  CHECK(run("generate --b 1,2").out == r.out);
  CHECK(run("generate --b 1,1").code == 2);
  CHECK(run("generate").code == 2);
  CHECK(run("generate --b 2,x").code == 2);
  const auto path = scratch("g321.json");
  CHECK(run("generate --b 3,2,1 --out " + path.string()).code == 0);
  CHECK(parse_data_file(read_json_file(path.string())) == standard({3, 2, 1}));
}

TEST_CASE("verify") {
  const auto path = scratch("g21.json");
  write(path, to_json(standard({2, 1})).dump());
  const Run r = run("verify " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("integral of u~^2: 2") != std::string::npos);
  CHECK(r.out.find("chi: 4") != std::string::npos);
  CHECK(r.out.find("c_1: 2x") != std::string::npos);
  CHECK(run("verify " + path.string()).out == r.out);

  const Run p = run("verify --pairing --json " + path.string());
  CHECK(p.code == 0);
  const Json doc = Json::parse(p.out);
  CHECK(doc["pass"] == true);
  bool found = false;
  for (const auto& s : doc["sections"]) {
    if (s["title"] != "pairing") continue;
    found = true;
    CHECK(s["values"]["middle block"] == Json::parse(R"([["2","1"],["1","0"]])"));
    CHECK(s["values"]["middle determinant"] == "-1");
  }
  CHECK(found);

  CHECK(run("verify --chern --basis --pairing " + path.string()).code == 0);

  FixedPointData d = standard({2, 1});
  std::vector<FixedPoint> pts(d.points().begin(), d.points().end());
  pts[0].weights = ints({1, 4});
  const auto bad = scratch("tampered.json");
  write(bad, to_json(FixedPointData(2, pts)).dump());
  const Run t = run("verify " + bad.string());
  CHECK(t.code == 1);
  CHECK(t.out.find("FAIL localization-of-one") != std::string::npos);

  const auto junk = scratch("junk.json");
  write(junk, "{ not json");
  CHECK(run("verify " + junk.string()).code == 2);
  CHECK(run("verify " + scratch("missing.json").string()).code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("classify") {
  const auto p2 = scratch("p2.json");
  write(p2, R"({"n": 2, "points": [{"phi": "-2"}, {"phi": "-1"}, {"phi": "1"}, {"phi": "2"}]})");
  const Run a = run("classify " + p2.string());
  CHECK(a.code == 0);
  CHECK(a.out.find("1 candidate, standard: yes") != std::string::npos);

  const auto p4 = scratch("p4.json");
  write(p4, to_json(standard({3, 2, 1})).dump());
  const Run b = run("classify --bound 6 " + p4.string());
  CHECK(b.code == 0);
  CHECK(b.out.find("1 candidate, standard: yes") != std::string::npos);

  const auto p0 = scratch("p0.json");
  write(p0, R"({"n": 2, "points": [{"phi": "-2"}, {"phi": "-1"}, {"phi": "0"}, {"phi": "3"}]})");
  const Run c = run("classify " + p0.string());
  CHECK(c.code == 1);
  CHECK(c.out.find("0 candidates") != std::string::npos);
  CHECK(c.out.find("symmetric: no") != std::string::npos);
  const Run cj = run("classify --json " + p0.string());
  CHECK(Json::parse(cj.out)["pass"] == false);

  const auto unordered = scratch("unordered.json");
  write(unordered, R"({"n": 2, "points": [{"phi": "2"}, {"phi": "-1"}, {"phi": "1"}, {"phi": "-2"}]})");
  CHECK(run("classify " + unordered.string()).code == 2);
  CHECK(run("classify --bound 0 " + p2.string()).code == 2);
}

TEST_CASE("report structure") {
  const Report r = verify_report(standard({2, 1}), VerifyOptions{true, true, true});
  CHECK(r.passed());
  std::vector<std::string> titles;
  for (const auto& s : r.sections) titles.push_back(s.title);
  CHECK(titles == std::vector<std::string>{"validate", "invariants", "localization", "basis", "chern", "pairing"});
  CHECK(parse_integer_list("3, 2,1") == ints({3, 2, 1}));
  CHECK_THROWS(parse_integer_list(""));
}
