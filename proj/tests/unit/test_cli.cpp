#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SYMSPACE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("info") {
  const auto a2 = run("info A:2 --format json");
  REQUIRE(a2.status == 0);
  const auto j = nlohmann::json::parse(a2.out);
  CHECK(j["n"] == 2);
  CHECK(j["d"] == 3);
  CHECK(j["nu_even"] == 5.0);
  CHECK(j["weyl_order"] == 6);
  const auto g2 = nlohmann::json::parse(run("info G:2 --format json").out);
  CHECK(g2["d"] == 6);
  CHECK(g2["weyl_order"] == 12);
  CHECK(run("info A:2").out.find("weyl_order") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("info Q:9").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("table A:2 --nu 4").status == 2);
  CHECK(run("table A:1 --direction 0").status == 2);
  CHECK(run("table A:2 --direction 1").status == 2);
  CHECK(run("eval A:2 --point 1").status == 2);
  CHECK(run("verify --only nothing").status == 2);
  CHECK(run("bessel --x -1").status == 2);
}

TEST_CASE("table along the simple root of A1") {
  const auto r = run("table A:1 --z 1 --direction 1 --start 0 --stop 2 --count 5");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("#", 0) == 0);
  CHECK(r.out.find("s,re_u,im_u,sinh_ratio_product,norm_H") != std::string::npos);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].size() == 5);
    CHECK(rows[i][1] > 0);
    CHECK(rows[i][2] == 0.0);
    if (i) CHECK(rows[i][1] < rows[i - 1][1]);
  }
  const auto base = nlohmann::json::parse(run("eval A:1 --point 0").out);
  CHECK(rows[0][1] == base["re_u"].get<double>());
  CHECK(rows[0][3] == 0.5);
}

TEST_CASE("table for A2 is real and bit-stable") {
  const auto a = run("table A:2 --z 1 --count 7");
  const auto b = run("table A:2 --z 1 --count 7");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  for (const auto& row : csv_rows(a.out)) CHECK(std::abs(row[2]) < 1e-10);
}

TEST_CASE("table as JSON") {
  const auto j = nlohmann::json::parse(run("table G:2 --count 3 --format json").out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["nu"] == 8);
}

TEST_CASE("bessel subcommand") {
  const auto j = nlohmann::json::parse(run("bessel --alpha 1 --x 1,2").out);
  CHECK(j["values"][0]["value"].get<double>() == doctest::Approx(0.6019072301972346));
  const auto h = nlohmann::json::parse(run("bessel --alpha 2.5 --x 1 --method half-integer").out);
  CHECK(h["values"][0]["value"].get<double>() ==
        doctest::Approx(nlohmann::json::parse(run("bessel --alpha 2.5 --x 1").out)["values"][0]["value"].get<double>()));
}

TEST_CASE("verify") {
  const auto ok = run("verify --only harmonicity --only weyl");
  CHECK(ok.status == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "pass");
  for (const auto& c : j["checks"]) {
    const std::string id = c["check_id"];
    CHECK((id.rfind("harmonicity.", 0) == 0 || id.rfind("weyl.", 0) == 0));
  }
  CHECK(run("verify --only harmonicity --corrupt-pi-plus").status == 1);
  CHECK(run("verify --only fundsol --systems A:1 --corrupt-prefactor-sign").status == 1);
  const auto tight = run("verify --only bessel --tol 1e-14");
  CHECK(tight.status == 1);
  bool listed = false;
  const auto report = nlohmann::json::parse(tight.out);
  for (const auto& c : report["checks"])
    if (c["status"] == "fail") listed = !c["achieved_error"].is_null();
  CHECK(listed);
}
