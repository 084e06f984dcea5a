#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FFAM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path tmpdir() {
  auto d = fs::temp_directory_path() / ("ffam_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("decompose 9 3") {
  auto r = run("decompose 9 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["text"] == "1/3, -1/3, 1/3");
  CHECK(j["indices"] == nlohmann::json::array({1, 2, 4}));
  CHECK(j["meta"]["command"] == "decompose");
}

TEST_CASE("dimension preset") {
  auto r = run("dimension --preset n8");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"]["dimension"].get<double>() == doctest::Approx(1.246477).epsilon(1e-6));
  CHECK(run("dimension --geometric 0.5 --temporal 2").code == 0);
  CHECK(run("dimension --geometric 2 --temporal 2").code == 3);
  CHECK(run("dimension").code == 2);
  CHECK(run("dimension --preset n99").code == 2);
}

TEST_CASE("verify suites") {
  auto r = run("verify all --max-n 30");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["all_pass"] == true);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("verify scaling --max-n 1").code == 2);
}

TEST_CASE("minpoly and express") {
  auto r = run("minpoly tan 6");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["minpoly"]["integer_coefficients"] == nlohmann::json::array({"-1", "0", "3"}));
  auto e = run("express 24 --target scale:9 --generator genscale");
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["coefficients"] ==
        nlohmann::json::array({"9/64", "-321/64", "179/64", "-3/64"}));
  CHECK(run("express 24 --target scale:99").code == 2);
  CHECK(run("minpoly sec 6").code == 2);
}

TEST_CASE("family and star outputs") {
  auto d = tmpdir();
  auto r = run("family 14 --case-info --svg " + (d / "ff14.svg").string());
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"]["size"] == 11);
  CHECK(j["family"]["case_info"]["case"] == "twice-odd");
  CHECK(fs::exists(d / "ff14.svg"));
  CHECK(run("family 2").code == 2);
  CHECK(run("family x").code == 2);
  CHECK(run("star 7").code == 0);
  auto sp = nlohmann::json::parse(run("starpoly 14 6").out);
  CHECK(sp["circuits"].size() == 2);
  CHECK(run("starpoly 8 4").code == 2);
  fs::remove_all(d);
}

TEST_CASE("web export and determinism across workers") {
  auto d = tmpdir();
  CHECK(run("--workers 1 web 14 --levels 4 --out " + (d / "a.jsonl").string()).code == 0);
  CHECK(run("--workers 8 web 14 --levels 4 --out " + (d / "b.jsonl").string()).code == 0);
  std::ifstream a(d / "a.jsonl"), b(d / "b.jsonl");
  std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(!sa.empty());
  CHECK(sa == sb);
  CHECK(run("--format csv web 14 --df --theta 2/14 --levels 5 --out " + (d / "df.csv").string()).code == 0);
  CHECK(fs::exists(d / "df.csv"));
  CHECK(run("web 14 --theta 2/14").code == 2);
  CHECK(run("--format png web 14").code == 2);
  fs::remove_all(d);
}

TEST_CASE("orbit") {
  auto r = run("orbit 4 --point 2,0 --max 100");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["orbit"]["period"] == 4);
  CHECK(run("orbit 7 --point 0,0").code == 3);
  CHECK(run("orbit 7 --point 5,-1").code == 3);
  CHECK(run("orbit 7 --point nope").code == 2);
  auto e = run("orbit 4 --point 2,0 --max 100 --exact");
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["orbit"]["period"] == 4);
}

TEST_CASE("config file and overrides") {
  auto d = tmpdir();
  {
    std::ofstream c(d / "cfg.txt");
    c << "# run settings\nworkers = 3\nseed = 42\nlevels = 2\n";
  }
  auto r = run("--config " + (d / "cfg.txt").string() + " --seed 7 web 7");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["workers"] == 3);
  CHECK(j["meta"]["seed"] == 7);
  CHECK(j["web"]["levels"] == 2);
  {
    std::ofstream c(d / "bad.txt");
    c << "colour = blue\n";
  }
  CHECK(run("--config " + (d / "bad.txt").string() + " star 5").code == 2);
  CHECK(run("--config " + (d / "missing.txt").string() + " star 5").code == 4);
  fs::remove_all(d);
}

TEST_CASE("unwritable output") {
  CHECK(run("family 7 --svg /proc/ffam/nope.svg").code == 4);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
