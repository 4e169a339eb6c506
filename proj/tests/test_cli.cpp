// End-to-end checks of the command-line tool through a shell.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LUNE_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lune_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::string gen(const std::string& name, const std::string& args) const {
    EXPECT_EQ(run("gen " + args + " --out " + path(name)).status, 0) << args;
    return path(name);
  }

  fs::path dir_;
};

std::vector<std::string> edge_kinds(const std::string& doc) {
  std::vector<std::string> kinds;
  const json parsed = json::parse(doc);
  for (const auto& e : parsed.at("data").at("edges")) kinds.push_back(e.at("kind").get<std::string>());
  return kinds;
}

}  // namespace

TEST_F(Cli, GeneratesShapes) {
  const Result r = run("gen reuleaux --n 3 --w 1.0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(edge_kinds(r.out), (std::vector<std::string>{"arc", "arc", "arc"}));
  const auto q = edge_kinds(run("gen quarter-disk --delta 0.8").out);
  EXPECT_EQ(std::count(q.begin(), q.end(), "geodesic"), 2);
  EXPECT_EQ(std::count(q.begin(), q.end(), "arc"), 1);
  EXPECT_EQ(json::parse(run("gen cap --radius 0.4").out).at("kind"), "cap");
  EXPECT_EQ(json::parse(run("gen reduced-ngon --n 5 --delta 0.7").out).at("kind"), "polygon");
  EXPECT_EQ(json::parse(run("gen hull-of-points --points '1,0,1;0,1,1;-1,-1,1'").out).at("kind"), "polygon");
}

TEST_F(Cli, InvalidGeneratorParametersAreUsageErrors) {
  EXPECT_EQ(run("gen reduced-ngon --n 4 --delta 0.5").status, 2);
  EXPECT_EQ(run("gen reuleaux --n 3 --w 2.5").status, 2);
  EXPECT_EQ(run("gen cap --radius 2").status, 2);
  EXPECT_EQ(run("gen blob").status, 2);
}

TEST_F(Cli, GenerationIsByteStableAndSeeded) {
  EXPECT_EQ(run("gen hull-of-points --count 9 --seed 4").out, run("gen hull-of-points --count 9 --seed 4").out);
  EXPECT_NE(run("gen hull-of-points --count 9 --seed 4").out, run("gen hull-of-points --count 9 --seed 5").out);
  EXPECT_EQ(run("gen hull-of-points --count 9", "LUNE_SEED=4").out, run("gen hull-of-points --count 9 --seed 4").out);
}

TEST_F(Cli, MeasureReportsKnownValues) {
  const std::string file = gen("r.json", "reuleaux --n 3 --w 1.0");
  const Result r = run("measure " + file + " --json");
  ASSERT_EQ(r.status, 0);
  const json m = json::parse(r.out);
  EXPECT_NEAR(m.at("thickness").get<double>(), 1.0, 1e-8);
  EXPECT_NEAR(m.at("diameter").get<double>(), 1.0, 1e-8);
  EXPECT_NEAR(m.at("min_enclosing_cap").at("radius").get<double>(),
              std::asin(2 * std::sqrt(3.0) / 3 * std::sin(0.5)), 1e-8);
  EXPECT_TRUE(m.at("constant_width").at("holds").get<bool>());
  EXPECT_TRUE(m.at("constant_diameter").at("holds").get<bool>());
  EXPECT_NEAR(m.at("polar_thickness").get<double>(), std::acos(-1.0) - 1.0, 1e-8);

  const Result text = run("measure " + file);
  EXPECT_NE(text.out.find("thickness: 1\n"), std::string::npos);
  EXPECT_NE(text.out.find("min_enclosing_cap.radius: "), std::string::npos);

  const json q = json::parse(run("measure " + gen("q.json", "quarter-disk --delta 0.8") + " --json").out);
  EXPECT_FALSE(q.at("constant_width").at("holds").get<bool>());
  EXPECT_NEAR(q.at("thickness").get<double>(), 0.8, 1e-8);
}

TEST_F(Cli, DocumentErrorsExitWithThree) {
  write("bad.json", "{");
  EXPECT_EQ(run("measure " + path("bad.json")).status, 3);
  EXPECT_EQ(run("measure " + path("missing.json")).status, 3);
  json doc = json::parse(run("gen cap --radius 0.4").out);
  doc["extra"] = 1;
  write("extra.json", doc.dump());
  EXPECT_EQ(run("measure " + path("extra.json")).status, 3);
  EXPECT_EQ(run("--lenient measure " + path("extra.json")).status, 0);
}

TEST_F(Cli, VerifyPrintsOneLinePerSuite) {
  const Result all = run("verify --suite all --seed 1");
  EXPECT_EQ(all.status, 0);
  EXPECT_EQ(count(all.out, "\n"), 14u);
  std::istringstream lines(all.out);
  for (std::string line; std::getline(lines, line);) EXPECT_TRUE(json::parse(line).at("pass").get<bool>()) << line;

  const Result cover = run("verify --suite T_V_cover --cases 20 --seed 3");
  EXPECT_EQ(cover.status, 0);
  EXPECT_EQ(json::parse(cover.out).at("cases_run"), 20);
  EXPECT_EQ(run("verify --suite bogus").status, 2);
  EXPECT_EQ(run("verify --suite T_I_main --seed 2").out, run("verify --suite T_I_main --seed 2").out);
  EXPECT_EQ(json::parse(run("verify --suite T_I_main", "LUNE_SEED=6").out).at("seed"), 6);
}

TEST_F(Cli, VerifySearchReports) {
  const Result r = run("verify --search 5 --seed 7");
  EXPECT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("trials"), 5);
  EXPECT_TRUE(j.at("flagged").empty());
}

TEST_F(Cli, ConfigOverridesTolerances) {
  write("ok.cfg", "eps_claim = 1e-5\n");
  const std::string file = gen("r.json", "reuleaux --n 3 --w 1.0");
  EXPECT_EQ(run("--config " + path("ok.cfg") + " measure " + file).status, 0);
  write("bad.cfg", "eps_claim = 1e-12\n");  // below eps_opt
  EXPECT_EQ(run("--config " + path("bad.cfg") + " measure " + file).status, 3);
  write("junk.cfg", "colour = blue\n");
  EXPECT_EQ(run("--config " + path("junk.cfg") + " measure " + file).status, 3);
}

TEST_F(Cli, PlotOrthographicWithCapAndLune) {
  const std::string file = gen("r.json", "reuleaux --n 3 --w 1.0");
  const Result r = run("plot " + file + " --with-cap --with-lune");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(count(r.out, "class=\"edge arc\""), 3u);
  EXPECT_EQ(count(r.out, "<circle class=\"cap\""), 1u);
  EXPECT_EQ(count(r.out, "class=\"lune\""), 2u);
  EXPECT_EQ(count(r.out, "class=\"lune-center\""), 2u);
  EXPECT_EQ(r.out, run("plot " + file + " --with-cap --with-lune").out);
  EXPECT_EQ(run("plot " + file + " --out " + path("r.svg")).status, 0);
  EXPECT_TRUE(fs::file_size(path("r.svg")) > 0);
}

TEST_F(Cli, GnomonicDrawsGeodesicsAsLines) {
  const std::string file = gen("p.json", "reduced-ngon --n 3 --delta 0.6");
  const Result r = run("plot " + file + " --projection gnomonic");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::size_t edges = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.find("class=\"edge geodesic\"") == std::string::npos) continue;
    ++edges;
    const auto d = line.substr(line.find("d=\"") + 3);
    EXPECT_EQ(count(d.substr(0, d.find('"')), "L"), 1u) << line;
  }
  EXPECT_EQ(edges, 3u);
}
