#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "shifted_shapes/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("float formatting round-trips with at least nine digits") {
  for (double v : {0.1, 1.0 / 3.0, 2.0, -1234.5678, 1e-300, 6.02214076e23, M_PI}) {
    const std::string s = shs::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
    int digits = 0;
    for (char ch : s.substr(0, s.find_first_of("eE"))) digits += std::isdigit(static_cast<unsigned char>(ch)) != 0;
    CHECK(digits >= 9);
  }
  CHECK(shs::format_double(0.5) == "0.500000000");
}

TEST_CASE("sample plancherel writes a mean profile") {
  const auto r = run("sample plancherel --n 1000 --trials 50 --seed 42 --format csv");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() > 2);
  CHECK(rows[0] == std::vector<std::string>{"z", "t"});
  double prev = -1e9;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 2);
    const double z = std::stod(rows[i][0]);
    CHECK(z > prev);
    prev = z;
    CHECK(std::stod(rows[i][1]) >= std::abs(z) - 1e-9);
  }
}

TEST_CASE("outputs are identical across worker counts") {
  const auto a = run("sample plancherel --n 300 --trials 8 --seed 7 --parallel 1");
  const auto b = run("sample plancherel --n 300 --trials 8 --seed 7 --parallel 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run("sample plancherel --n 300 --trials 8 --seed 8 --parallel 1");
  CHECK(a.out != c.out);
  const auto s1 = run("sample schur-weyl --n 200 --trials 4 --seed 3 --parallel 1 --grid-points 81");
  const auto s2 = run("sample schur-weyl --n 200 --trials 4 --seed 3 --parallel 2 --grid-points 81");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  const auto w1 = run("shape sw --c 1 --grid-points 101 --parallel 1");
  const auto w2 = run("shape sw --c 1 --grid-points 101 --parallel 4");
  CHECK(w1.out == w2.out);
  const std::string path = "cli_test_out.csv";
  CHECK(run("sample plancherel --n 300 --trials 8 --seed 7 --out " + path).code == 0);
  CHECK(slurp(path) == a.out);
  std::remove(path.c_str());
}

TEST_CASE("shape sw matches the pinned c = 1 value") {
  const auto r = run("shape sw --c 1 --grid-points 400 --epsilon 1e-2");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  std::vector<double> z, t;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    z.push_back(std::stod(rows[i][0]));
    t.push_back(std::stod(rows[i][1]));
  }
  REQUIRE(z.size() == 400);
  std::size_t k = 0;
  while (z[k + 1] < 0) ++k;
  const double at0 = t[k] + (t[k + 1] - t[k]) * (0 - z[k]) / (z[k + 1] - z[k]);
  CHECK(std::abs(at0 - 1.1573) < 5e-3);
}

TEST_CASE("json and csv carry the same numbers") {
  const auto c = run("shape lsvk --grid-points 57 --format csv");
  const auto j = run("shape lsvk --grid-points 57 --format json");
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  const auto rows = csv(c.out);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["z"].size() == rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i][0]) - doc["z"][i - 1].get<double>()) <= 1e-12);
    CHECK(std::abs(std::stod(rows[i][1]) - doc["t"][i - 1].get<double>()) <= 1e-12);
  }
  const auto lc = run("shape levels --alpha 0.5,1 --grid-points 21 --format csv");
  const auto lj = run("shape levels --alpha 0.5,1 --grid-points 21 --format json");
  REQUIRE(lc.code == 0);
  const auto lrows = csv(lc.out);
  CHECK(lrows[0] == std::vector<std::string>{"alpha", "z", "t"});
  const auto ldoc = nlohmann::json::parse(lj.out);
  std::size_t row = 1;
  for (const auto& member : ldoc["curves"])
    for (std::size_t i = 0; i < member["z"].size(); ++i, ++row) {
      CHECK(std::abs(std::stod(lrows[row][0]) - member["alpha"].get<double>()) <= 1e-12);
      CHECK(std::abs(std::stod(lrows[row][2]) - member["t"][i].get<double>()) <= 1e-12);
    }
  CHECK(row == lrows.size());
}

TEST_CASE("char subcommands") {
  const auto v = run("char verify --n 5");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(v.out.find("schur-weyl d=2") != std::string::npos);
  CHECK(v.out.find("plancherel") != std::string::npos);
  CHECK(v.out.find("dstar") != std::string::npos);
  const auto t = run("char table --n 3 --format json");
  REQUIRE(t.code == 0);
  const auto doc = nlohmann::json::parse(t.out);
  CHECK(doc["(3)"]["(3)"] == "1/2");
  CHECK(doc["(2,1)"]["(3)"] == "-1");
  CHECK(doc["(2,1)"]["(1,1,1)"] == "1");
  const auto k = run("char cumulants --n 5");
  REQUIRE(k.code == 0);
  CHECK(k.out.find("3,3,6\n") != std::string::npos);
  CHECK(k.out.find("3,5,0\n") != std::string::npos);
}

TEST_CASE("rsk encode") {
  const auto r = run("rsk encode --word 1,c2,2 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  int total = 0;
  for (const auto& p : doc["shape"]) total += p.get<int>();
  CHECK(total == 3);
  CHECK(doc["P"]["cells"].size() == 3);
  CHECK(doc["Q"]["cells"].size() == 3);
  for (const auto& cell : doc["Q"]["cells"])
    if (cell["x"].get<int>() == cell["y"].get<int>() + 1) CHECK_FALSE(cell["circled"].get<bool>());
  const auto one = run("rsk encode --word 1");
  REQUIRE(one.code == 0);
  CHECK(one.out == "tableau,row,position,entry\nP,1,1,1\nQ,1,1,1\n");
}

TEST_CASE("sample syt") {
  const auto r = run("sample syt --shape 2,1 --trials 3 --seed 1");
  REQUIRE(r.code == 0);
  CHECK(r.out == "trial,x,y,entry\n0,2,1,1\n0,3,1,2\n0,3,2,3\n1,2,1,1\n1,3,1,2\n1,3,2,3\n2,2,1,1\n2,3,1,2\n2,3,2,3\n");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("sample plancherel").code == 2);
  CHECK(run("sample plancherel --n -5").code == 2);
  CHECK(run("shape sw --c 1 --format xml").code == 2);
  CHECK(run("sample syt --shape 2,2").code == 2);
  CHECK(run("rsk encode --word 1,x").code == 2);
  CHECK(run("char table --n 12").code == 4);
  CHECK(run("char verify --n 12").code == 4);
  CHECK(run("shape sw --c 1 --epsilon 2 --grid-points 41").code == 3);
  CHECK(run("--help").code == 0);
}
