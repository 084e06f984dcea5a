#include "ffam/dynamics/df.hpp"
#include "ffam/dynamics/web.hpp"
#include "ffam/stargeom/star.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace ffam;

TEST_CASE("level-1 local web of N = 14 is the {14,6} star polygon") {
  Web w = local_web(14, 1);
  CHECK(w.meta.kind == "local");
  auto merged = merge_collinear(plain(w.segments));
  // 14 chords of the circumcircle of {14,6}, each 2 tan(6 pi/14) long
  CHECK(merged.total_length() == doctest::Approx(14 * 2 * std::tan(6 * M_PI / 14)).epsilon(1e-9));
  CHECK(merged.lines.size() == 14);
  // every vertex of {14,6} is an endpoint of the merged web
  auto sp = star_polygon(14, 6);
  auto segs = merged.segments();
  for (const auto& c : sp.circuits)
    for (auto v : c) {
      double best = 1e9;
      for (const auto& s : segs) best = std::min({best, dist(s.a, v), dist(s.b, v)});
      CHECK(best < 1e-9);
    }
}

TEST_CASE("web levels are nested and grow") {
  Web w = local_web(7, 4);
  std::size_t prev = 0;
  for (int l = 1; l <= 4; ++l) {
    auto s = w.up_to(l);
    CHECK(s.size() > prev);
    prev = s.size();
    for (const auto& g : s) CHECK(g.level <= l);
  }
  // every segment stays inside the closed inner star
  Region r = Region::star(7);
  for (const auto& g : w.segments) {
    CHECK(r.contains(g.a, 1e-9));
    CHECK(r.contains(g.b, 1e-9));
  }
}

TEST_CASE("parallel generation is byte-identical") {
  auto one = local_web(14, 5, 1).to_jsonl();
  CHECK(one == local_web(14, 5, 2).to_jsonl());
  CHECK(one == local_web(14, 5, 8).to_jsonl());
  auto d1 = df_web(2 * M_PI / 14, 12, 1).to_csv();
  CHECK(d1 == df_web(2 * M_PI / 14, 12, 3).to_csv());
}

TEST_CASE("canonical form") {
  std::vector<Segment> s{{{1, 0}, {0, 0}, 2}, {{0, 0}, {1, 0}, 1}, {{0, 1}, {0, 0}, 1}};
  canonicalize(s);
  REQUIRE(s.size() == 2);
  for (const auto& g : s) {
    bool ordered = g.a.x < g.b.x || (g.a.x == g.b.x && g.a.y <= g.b.y);
    CHECK(ordered);
  }
  CHECK(s[0].level == 1);
}

TEST_CASE("serializations") {
  Web w = local_web(5, 2);
  std::istringstream in(w.to_jsonl());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("x1"));
    CHECK(j["level"].get<int>() >= 1);
    ++n;
  }
  CHECK(n == w.segments.size());
  auto csv = w.to_csv();
  CHECK(csv.rfind("x1,y1,x2,y2,level\n", 0) == 0);
  CHECK(csv.find("-0,") == std::string::npos);
}

TEST_CASE("distances") {
  std::vector<Seg> a{{{0, 0}, {1, 0}}}, b{{{0, 0.5}, {1, 0.5}}};
  CHECK(hausdorff(a, a, 0.01) == 0);
  CHECK(hausdorff(a, b, 0.01) == doctest::Approx(0.5));
  std::vector<Seg> c{{{0, 0}, {2, 0}}};
  CHECK(directed_distance(a, c, 0.01) == 0);
  CHECK(directed_distance(c, a, 0.01) == doctest::Approx(1));
  CHECK(coverage(a, c, 0.01, 1e-9) == 1);
  CHECK(coverage(c, a, 0.01, 1e-9) == doctest::Approx(0.5).epsilon(0.02));
  auto t = transform(a, {2, 0, 1, 0, 1, 0});
  CHECK(t[0].a.x == 1);
  CHECK(t[0].b.x == 3);
}

TEST_CASE("outer web on the square is a grid") {
  auto ob = OuterBilliards::standard(4);
  Web w = outer_web(ob, 3, 6);
  for (const auto& s : w.segments) {
    // lines of the square's web are horizontal or vertical
    CHECK((std::abs(s.a.x - s.b.x) < 1e-12 || std::abs(s.a.y - s.b.y) < 1e-12));
    // and sit on even-integer offsets
    double c = std::abs(s.a.x - s.b.x) < 1e-12 ? s.a.x : s.a.y;
    CHECK(std::abs(std::remainder(c - 1, 2.0)) < 1e-9);
  }
}

TEST_CASE("Df web rectification") {
  Web d = df_web(2 * M_PI / 14, 6);
  CHECK(d.meta.kind == "df");
  auto R = df_rectification(2 * M_PI / 14);
  for (int i = 0; i < 6; ++i) CHECK(d.meta.rectification[i] == R[i]);
  for (const auto& s : d.segments) {
    CHECK(std::abs(s.a.x) <= 1 + 1e-9);
    CHECK(std::abs(s.a.y) <= 1 + 1e-9);
  }
}
