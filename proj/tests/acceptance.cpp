// Acceptance run: one PASS/FAIL line per criterion at the stated tolerances.
#include "ffam/analysis/report.hpp"
#include "ffam/dynamics/df.hpp"
#include "ffam/dynamics/exact_orbit.hpp"
#include "ffam/dynamics/pwi.hpp"
#include "ffam/dynamics/web.hpp"
#include "ffam/exactfield/minpoly.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/render/svg.hpp"
#include "ffam/stargeom/constants.hpp"

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

using namespace ffam;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<std::string> coeff_strings(const PolyQ& p) {
  std::vector<std::string> out;
  for (const auto& q : p.coeffs()) out.push_back(to_string(q));
  return out;
}

RealElement Q(int L, long num, long den = 1) { return RealElement::rational(L, Rational(num, den)); }

// 1. degree table
Outcome degree_table() {
  Outcome o;
  const int cos_deg[] = {1, 1, 2, 1, 3, 2, 3, 2, 5, 2, 6, 3, 4, 4, 8, 3, 9, 4};
  const int tan_deg[] = {2, 1, 4, 2, 6, 2, 6, 4, 10, 2, 12, 6, 8, 4, 16, 6, 18, 4};
  auto t0 = Clock::now();
  int hits = 0;
  for (int N = 3; N <= 20; ++N) {
    int c = minimal_polynomial(cos_2pi(N).element()).degree();
    int t = minimal_polynomial(tan_pi(N, 1).element()).degree();
    hits += (c == cos_deg[N - 3]) + (t == tan_deg[N - 3]);
    if (c != cos_deg[N - 3]) o.expect(false, fmt("N=%d cos degree %d, table %d", N, c, cos_deg[N - 3]));
    if (t != tan_deg[N - 3]) o.expect(false, fmt("N=%d tan degree %d, table %d", N, t, tan_deg[N - 3]));
  }
  double s = secs(t0);
  o.expect(hits == 36, fmt("%d/36 degree equalities", hits));
  o.expect(s < 10, fmt("runtime %.3f s < 10 s", s));
  return o;
}

// 2. constants
Outcome constants() {
  Outcome o;
  double g7 = gen_scale(7).to_double(), sw = scale_swap(14, 7).to_double(), g12 = gen_scale(12).to_double();
  double od = outer_dual_factor(14);
  o.expect(near(g7, 0.109916, 1e-6), fmt("GenScale[7] = %.9f", g7));
  o.expect(near(sw, 0.4739524, 1e-6), fmt("ScaleSwap[14,7] = %.9f", sw));
  o.expect(near(g12, 0.0717968, 1e-6), fmt("GenScale[12] = %.9f", g12));
  o.expect(near(od, 1.025716863, 1e-8), fmt("outer-dual factor N=14 = %.10f", od));
  auto h = tile_heights(7);
  const double want[] = {0, 0.231914, 0.603875, 2.10992};
  for (int k = 1; k <= 3; ++k) o.expect(near(h[k], want[k], 1e-5), fmt("N=7 height %d = %.7f", k, h[k]));
  return o;
}

// 3. exact identities
Outcome identities() {
  Outcome o;
  {
    auto t = scale_table(8);
    const int L = 32;
    o.expect(t->s[2] == Q(L, -1, 2) * t->s[1] + Q(L, 1, 2) * t->s[3], "N=8 s2 = (-1/2)s1 + (1/2)s3");
    o.expect(t->scale[2] == Q(L, 1, 2) * (Q(L, 1) - t->gen_scale), "N=8 scale[2] = (1/2)(1 - GenScale[8])");
  }
  {
    auto t = scale_table(9);
    const int L = 36;
    o.expect(t->s[3] == Q(L, 1, 3) * (t->s[1] - t->s[2] + t->s[4]), "N=9 s3 = (1/3)(s1 - s2 + s4)");
    o.expect(t->scale[3] == Q(L, 1, 3) * (Q(L, 1) - t->scale[2] + t->gen_scale),
             "N=9 scale[3] = (1/3)(1 - scale[2] + GenScale[9])");
  }
  {
    auto c = coeff_strings(express_in_generator(tan_pi(15, 5), tan_pi(15, 1)));
    std::vector<std::string> odd;
    for (std::size_t i = 1; i < c.size(); i += 2) odd.push_back(c[i]);
    bool even_zero = true;
    for (std::size_t i = 0; i < c.size(); i += 2) even_zero &= c[i] == "0";
    o.expect(even_zero && odd == std::vector<std::string>{"395/32", "-3075/32", "2297/32", "-25/32"},
             "N=15 sqrt3 over tan(pi/15): {395/32, -3075/32, 2297/32, -25/32}");
  }
  {
    auto c = coeff_strings(express_in_generator(scale(24, 9), gen_scale(24)));
    o.expect(c == std::vector<std::string>{"9/64", "-321/64", "179/64", "-3/64"},
             "N=24 scale[9] over GenScale[24]: {9/64, -321/64, 179/64, -3/64}");
  }
  {
    RealElement t = tan_pi(27, 1);
    auto c = coeff_strings(express_in_generator(scale(27, 9), t * t));
    o.expect(!c.empty() && c[0] == "6435/32768", "N=27 scale[9] over tan^2(pi/27): constant 6435/32768");
  }
  for (int N : {5, 7, 8, 12}) {
    auto r = lambda_conversions(N);
    // recomputed directly from lambda_2N
    RealElement l = lambda(2 * N);
    const unsigned L = 4 * N;
    bool direct = N % 2 == 0 ? gen_scale(N) * l * l == Q(L, 4) - l * l : gen_scale(N) * l == Q(L, 2) - l;
    o.expect(r.identity_holds && direct, fmt("N=%d GenScale from lambda_2N", N));
  }
  return o;
}

// 4. family sizes and D relations
Outcome families() {
  Outcome o;
  const int Ns[] = {14, 18, 11, 24, 7}, sizes[] = {11, 15, 13, 21, 7};
  for (int i = 0; i < 5; ++i) {
    int got = first_family(Ns[i]).size();
    o.expect(got == sizes[i], fmt("FF(%d) size %d (want %d)", Ns[i], got, sizes[i]));
  }
  for (int N : {5, 7, 9, 11}) {
    auto f = first_family(N);
    const Tile* d = f.find(Role::D);
    bool shares = share_full_side(*d, f.parent());
    // the side lengths agree exactly: hD tan(pi/2N) = tan(pi/N)
    bool same_side = d->exact_height * tan_pi(2 * N, 1) == tan_pi(N, 1);
    o.expect(same_side, fmt("N=%d D side equals parent side (exact)", N));
    o.expect(shares, fmt("N=%d D shares a full side with the parent (exact); max contact %.6f", N,
                         max_edge_contact(*d, f.parent())));
  }
  for (int N : {8, 12, 14, 24}) {
    auto f = first_family(N);
    const Tile* d = f.find(Role::D);
    o.expect(d->sides == N && d->exact_height == Q(family_field(N), 1), fmt("N=%d D congruent to parent", N));
  }
  return o;
}

// 5. scaling lemmas and twice-odd alignment
Outcome scaling() {
  Outcome o;
  Report r;
  for (int N = 3; N <= 30; ++N)
    for (int k = 1; N / k >= 3; ++k)
      if (N % k == 0) r.append(verify_scaling_lemma(N, k));
  o.expect(r.all_pass(), fmt("scaling lemma: %zu exact claims, N <= 30", r.claims.size()));
  Report s;
  for (int N = 4; N <= 30; N += 2) s.append(verify_even_symmetry(N));
  o.expect(s.all_pass(), fmt("even symmetry: %zu exact claims, even N <= 30", s.claims.size()));
  auto al = twice_odd_alignment(14);
  for (const auto& m : al.matches)
    o.expect(m.center_error < 1e-10,
             fmt("FF(7) %s -> FF(14) %s, center error %.3g", m.source.c_str(), m.target.value_or("none").c_str(),
                 m.center_error));
  return o;
}

// 6. independence and units
Outcome independence() {
  Outcome o;
  int good = 0;
  for (int N = 3; N <= 30; ++N) good += independence_rank(N) == static_cast<int>(euler_phi(N)) / 2;
  o.expect(good == 28, fmt("rank = phi(N)/2 for %d/28 values of N", good));
  for (int N : {5, 7, 8, 9, 12, 16, 24, 27}) {
    auto u = norm_and_unit_test(gen_scale(N));
    o.expect(u.unit, fmt("GenScale[%d] unit, norm %s", N, to_string(u.norm).c_str()));
  }
  auto g6 = norm_and_unit_test(gen_scale(6));
  auto t6 = minimal_polynomial(tan_pi(6, 1).element()).integer_form();
  o.expect(!g6.algebraic_integer, "GenScale[6] = 1/3 is not an algebraic integer (3x - 1)");
  o.expect(t6 == std::vector<Integer>{-1, 0, 3}, "tan(pi/6) minimal polynomial 3x^2 - 1");
  return o;
}

// 7. dynamics
Outcome dynamics() {
  Outcome o;
  auto ob = OuterBilliards::standard(14);
  auto f = first_family(14);
  const Tile* d = f.find(Role::D);
  auto r = orbit(d->center, ob, 1000);
  long period = r.period ? *r.period : -1;
  ExactOuterBilliards eob(14);
  auto ex = exact_orbit(d->exact_center, eob, 1000);
  o.expect(period == 14, fmt("D-center period %ld (exact %ld), want 14", period, ex.period ? *ex.period : -1L));
  {
    auto vs = d->vertices();
    auto ri = orbit(d->center + (vs[0] - d->center) * 0.5, ob, 1000, 1e-9, false);
    o.notes.push_back(fmt("info interior point of D has period %ld", ri.period ? *ri.period : -1L));
  }
  std::vector<Vec2> dual;
  for (const auto& c : star_polygon(14, 6).circuits)
    for (auto v : outer_dual(c, 14)) dual.push_back(v);
  double worst = 0;
  for (auto p : r.points) {
    double best = INFINITY;
    for (auto v : dual) best = std::min(best, dist(p, v));
    worst = std::max(worst, best);
  }
  o.expect(worst < 1e-10, fmt("D orbit on outer_dual({14,6}) vertices, max distance %.3g", worst));
  auto cs = tile_centers(14);
  for (int k = 1; k <= 6; ++k) {
    auto rk = orbit(cs[k], ob, 1000, 1e-9, false);
    long p = rk.period ? *rk.period : -1;
    long rule = 14 / std::gcd(k, 14);
    o.expect((p == 14 || p == 7) && p == rule, fmt("S[%d] center period %ld, degeneracy rule %ld", k, p, rule));
  }
  auto t0 = Clock::now();
  auto gp = generation_periods(12, 1, 2, 100000);
  double s = secs(t0);
  o.expect(gp[0] == 12 && gp[1] == 420, fmt("N=12 S[1] generations %lld, %lld", gp[0], gp[1]));
  o.expect(s < 60, fmt("generation run %.2f s < 60 s", s));
  return o;
}

// generation chain of N = 12 beyond desk scale
Outcome long_orbit() {
  Outcome o;
  auto t0 = Clock::now();
  auto gp = generation_periods(12, 1, 4, 2000000);
  o.expect(gp.size() >= 3 && gp[0] == 12 && gp[1] == 420 && gp[2] == 14148,
           fmt("N=12 S[1] generations %lld, %lld, %lld", gp[0], gp[1], gp[2]));
  long long g4 = gp.size() > 3 ? gp[3] : -1;
  o.expect(g4 == 387252, fmt("fourth generation %lld, want 387252 (%.2f s)", g4, secs(t0)));
  return o;
}

std::vector<Seg> map_similarity(const std::vector<Seg>& in, const Similarity& T) {
  std::vector<Seg> out;
  for (const auto& s : in) out.push_back({T.apply(s.a), T.apply(s.b)});
  return out;
}

// 8. web equivalence
Outcome webs() {
  Outcome o;
  auto al = twice_odd_alignment(14);
  const double scale = al.T_inverse.scale.to_double();
  const Vec2 shift{al.T_inverse.shift.x.to_double(), al.T_inverse.shift.y.to_double()};
  // image of the N = 7 inner star inside the N = 14 frame
  std::vector<Convex> pieces;
  const Region star7 = Region::star(7);
  for (const auto& piece : star7.pieces()) {
    Convex c;
    for (const auto& h : piece) c.push_back({h.a, h.b, h.c * scale + h.a * shift.x + h.b * shift.y});
    pieces.push_back(c);
  }
  Region image(pieces);
  const Region star14 = Region::star(14);
  std::vector<std::vector<Seg>> w7(11), w14(11);
  double worst = 0;
  for (int k : {1, 2, 3, 5, 8, 10}) {
    w7[k] = clip_all(map_similarity(plain(local_web(7, k).segments), al.T_inverse), star14);
    w14[k] = clip_all(plain(local_web(14, k).segments), image);
    double h = hausdorff(w7[k], w14[k], 2e-3);
    worst = std::max(worst, h);
    o.notes.push_back(fmt("info depth %d: Hausdorff(N=7 rescaled, N=14) = %.3g", k, h));
  }
  o.expect(worst < 1e-9, fmt("matched depth N=7 vs N=14, worst Hausdorff %.3g", worst));
  o.notes.push_back(fmt("info lagged: N=14 depth 1 in N=7 depth 8 within %.3g, N=7 depth 1 in N=14 depth 10 within %.3g",
                        directed_distance(w14[1], w7[8], 2e-3), directed_distance(w7[1], w14[10], 2e-3)));
  {
    const double th = 2 * M_PI / 14;
    auto R = df_rectification(th);
    std::vector<Vec2> box;
    for (Vec2 p : {Vec2{-1, -1}, Vec2{1, -1}, Vec2{1, 1}, Vec2{-1, 1}}) box.push_back(df_rectify(p, th));
    if (cross(box[1] - box[0], box[2] - box[0]) < 0) std::swap(box[1], box[3]);
    Region frame({convex_polygon(box, 1e-12)});
    auto rect = [&](int k) { return clip_all(transform(plain(df_web(th, k).segments), R), star14); };
    auto local = [&](int k) { return clip_all(plain(local_web(14, k).segments), frame); };
    double dw = 0;
    for (int k : {1, 3, 5, 10}) {
      auto wd = rect(k), wl = local(k);
      double h = hausdorff(wd, wl, 2e-3);
      dw = std::max(dw, h);
      o.notes.push_back(fmt("info depth %d: Hausdorff(rectified Df, local N=14) = %.3g, Df inside local within %.3g", k,
                            h, directed_distance(wd, wl, 2e-3)));
    }
    o.expect(dw < 1e-9, fmt("rectified Df web vs local_web(14) at equal depth, worst Hausdorff %.3g", dw));
    o.notes.push_back(fmt("info lagged: local depth 5 inside Df depth 50 within %.3g",
                          directed_distance(local(5), rect(50), 2e-3)));
  }
  {
    auto a = local_web(14, 6, 1).to_jsonl();
    bool same = a == local_web(14, 6, 2).to_jsonl() && a == local_web(14, 6, 8).to_jsonl();
    auto d = df_web(2 * M_PI / 14, 20, 1).to_jsonl();
    same = same && d == df_web(2 * M_PI / 14, 20, 2).to_jsonl() && d == df_web(2 * M_PI / 14, 20, 8).to_jsonl();
    o.expect(same, "1, 2, 8 workers give byte-identical canonical segment files");
  }
  return o;
}

// 9. dimensions
Outcome dimensions() {
  Outcome o;
  struct P {
    const char* name;
    double want, tol;
  };
  for (P p : {P{"n8", 1.246477, 1e-6}, P{"n12", 1.2513, 1e-4}, P{"n5", 1.24114, 1e-5}, P{"goetz5", 1.4404, 1e-4}}) {
    double d = dimension_preset(p.name).dimension;
    o.expect(near(d, p.want, p.tol), fmt("%s dimension %.7f (want %g +- %g)", p.name, d, p.want, p.tol));
  }
  RealElement s = sin_pi(14);
  RealElement v = Q(28, 4) * s * s;
  o.expect(v == lambda(14) * gen_scale(7), "4 sin^2(pi/14) = lambda_14 GenScale[7] (exact)");
  auto g = goetz_pi7();
  bool inside = true;
  for (const auto& a : g.exact) inside &= strictly_inside(fixed_point(a), a);
  o.expect(inside, "three-atom pi/7 map: each fixed point interior to its atom");
  return o;
}

// 10. golden renders
Outcome renders() {
  Outcome o;
  auto read = [](const std::string& name) {
    std::ifstream in(std::string(FFAM_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  std::vector<std::pair<std::string, std::function<std::string()>>> items{
      {"family_7.svg", [] { return render_family(first_family(7)); }},
      {"family_14.svg", [] { return render_family(first_family(14)); }},
      {"family_24.svg", [] { return render_family(first_family(24)); }},
      {"star_14_6.svg", [] { return to_svg(star_polygon_scene(star_polygon(14, 6))); }},
      {"local_web_14_5.svg", [] { return render_web(local_web(14, 5)); }},
  };
  for (const auto& [name, fn] : items) {
    std::string a = fn(), b = fn(), g = read(name);
    o.expect(!g.empty() && a == g && b == g, name + " matches golden bytes on repeated runs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false, verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--long-orbit")) long_run = true;
    if (!std::strcmp(argv[i], "-v")) verbose = true;
  }
  if (long_run) {
    auto o = long_orbit();
    std::printf("criterion  7 long orbit generation chain             %s\n", o.pass ? "PASS" : "FAIL");
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    return o.pass ? 0 : 1;
  }
  struct Item {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Item> items{
      {1, "degree table", degree_table},
      {2, "constants", constants},
      {3, "exact identities", identities},
      {4, "family sizes and D tile", families},
      {5, "scaling lemmas and twice-odd alignment", scaling},
      {6, "independence and units", independence},
      {7, "dynamics", dynamics},
      {8, "web equivalence", webs},
      {9, "dimensions", dimensions},
      {10, "golden renders", renders},
  };
  int failed = 0;
  for (const auto& it : items) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %2d %-40s %s (%.2f s)\n", it.id, it.title, o.pass ? "PASS" : "FAIL", secs(t0));
    for (const auto& n : o.notes)
      if (verbose || !o.pass || n.rfind("info", 0) == 0) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
  return failed ? 1 : 0;
}
