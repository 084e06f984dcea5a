#include "ffam/family/family.hpp"

#include "ffam/exactfield/trig.hpp"
#include "ffam/stargeom/constants.hpp"
#include "ffam/stargeom/star.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ffam {

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::Odd: return "odd";
    case FamilyCase::TwiceOdd: return "twice-odd";
    case FamilyCase::TwiceEven: return "twice-even";
  }
  return "?";
}

std::string Tile::tag() const {
  switch (role) {
    case Role::Parent: return "parent";
    case Role::S: return "S[" + std::to_string(index) + "]";
    case Role::LS: return "LS[" + std::to_string(index) + "]";
    case Role::DS: return "DS[" + std::to_string(index) + "]";
    case Role::D: return "D";
    case Role::M: return "M";
    case Role::C: return "C";
  }
  return "?";
}

const Tile* Family::find(Role role, int index) const {
  for (const auto& t : tiles)
    if (t.role == role && (index < 0 || t.index == index)) return &t;
  return nullptr;
}

FamilyCase family_case(int N) {
  if (N % 2) return FamilyCase::Odd;
  return N % 4 == 2 ? FamilyCase::TwiceOdd : FamilyCase::TwiceEven;
}

unsigned family_field(int N) { return static_cast<unsigned>(N % 2 ? 8 * N : 4 * N); }

namespace {

RealElement lifted(const RealElement& a, unsigned L) { return a.lift(L); }

Tile make_tile(int sides, ExactPoint c, RealElement h, Role role, int index, int gcd_base, unsigned L) {
  Tile t;
  t.sides = sides;
  t.exact_center = {lifted(c.x, L), lifted(c.y, L)};
  t.exact_height = lifted(h, L);
  t.center = {t.exact_center.x.to_double(), t.exact_center.y.to_double()};
  t.height = t.exact_height.to_double();
  t.phase = standard_phase(sides);
  t.role = role;
  t.index = index;
  t.degenerate = index >= 1 && std::gcd(index, gcd_base) > 1;
  return t;
}

bool same_tile(const Tile& a, const Tile& b) {
  if (a.sides != b.sides) return false;
  if (std::abs(a.height - b.height) > 1e-9 || dist(a.center, b.center) > 1e-9) return false;
  return a.exact_height == b.exact_height && a.exact_center.x == b.exact_center.x &&
         a.exact_center.y == b.exact_center.y;
}

void push_unique(std::vector<Tile>& out, Tile t) {
  for (const auto& u : out)
    if (same_tile(u, t)) return;
  out.push_back(std::move(t));
}

// cS[k] = Rot(-pi/N)(r * star[k]) exactly; k = 0 gives the vertex below the origin.
ExactPoint exact_center(int N, int k, unsigned L) {
  RealElement r = sec_pi(N, 1).lift(L);
  RealElement c = cos_pi(N, 1).lift(L), s = sin_pi(N, 1).lift(L);
  RealElement X = k == 0 ? RealElement::rational(L, 0) : -(tan_pi(N, k).lift(L) * r);
  RealElement Y = -r;
  return {c * X + s * Y, c * Y - s * X};
}

ExactPoint reflect_x(const ExactPoint& p, const RealElement& axis) {
  return {axis * Rational(2) - p.x, p.y};
}

// Right half S[0..H] of an even family, tags resolved, in Q(zeta_L).
std::vector<Tile> even_right(int N, unsigned L) {
  const int H = half_n(N);
  const bool twice_even = N % 4 == 0;
  RealElement cotH = cot_pi(N, H).lift(L);
  std::vector<Tile> out;
  out.push_back(make_tile(N, {RealElement::rational(L, 0), RealElement::rational(L, 0)},
                          RealElement::rational(L, 1), Role::Parent, 0, N, L));
  for (int k = 1; k <= H; ++k) {
    int sides = (twice_even || k % 2 == 0) ? N : N / 2;
    Role role = Role::S;
    if (k == H) role = Role::D;
    else if (k == H - 1) role = twice_even ? Role::C : Role::M;
    out.push_back(make_tile(sides, exact_center(N, k, L), tan_pi(N, k).lift(L) * cotH, role, k, N, L));
  }
  return out;
}

std::vector<Tile> even_left(const std::vector<Tile>& right, int N, unsigned L) {
  const int H = half_n(N);
  RealElement axis = exact_center(N, H - 1, L).x;
  Role role = N % 4 == 0 ? Role::DS : Role::LS;
  std::vector<Tile> out;
  for (const auto& t : right) {
    Tile m = make_tile(t.sides, reflect_x(t.exact_center, axis), t.exact_height, role, t.index, N, L);
    out.push_back(std::move(m));
  }
  return out;
}

Family even_family(int N) {
  const unsigned L = family_field(N);
  Family f;
  f.N = N;
  f.kind = family_case(N);
  auto right = even_right(N, L);
  auto left = even_left(right, N, L);
  for (auto& t : right) push_unique(f.tiles, t);
  for (auto& t : left) push_unique(f.tiles, t);
  return f;
}

Family odd_family(int N) {
  const unsigned L = family_field(N);
  const int H = half_n(N);
  Family f;
  f.N = N;
  f.kind = FamilyCase::Odd;
  RealElement hD = (tan_pi(N, 1) * cot_pi(2 * N, 1)).lift(L);
  RealElement cotH = cot_pi(N, H).lift(L);
  f.tiles.push_back(make_tile(N, {RealElement::rational(L, 0), RealElement::rational(L, 0)},
                              RealElement::rational(L, 1), Role::Parent, 0, N, L));
  for (int k = 1; k <= H; ++k) {
    Role role = k == H ? Role::D : (k == H - 1 ? Role::M : Role::S);
    push_unique(f.tiles, make_tile(2 * N, exact_center(N, k, L), hD * tan_pi(N, k).lift(L) * cotH, role,
                                   k, N, L));
  }
  // DS[0..N-2] from the left half of the 2N family
  Family big = even_family(2 * N);
  const Tile* M = big.find(Role::M);
  for (auto& t : promote_2N_to_N(big, *M)) {
    if (t.role != Role::DS || t.index > N - 2) continue;
    push_unique(f.tiles, std::move(t));
  }
  return f;
}

}  // namespace

Family first_family(int N) {
  if (N < 3) throw std::invalid_argument("first_family: N must be >= 3, got " + std::to_string(N));
  return N % 2 ? odd_family(N) : even_family(N);
}

std::vector<double> tile_heights(int N) {
  if (N < 3) throw std::invalid_argument("tile_heights: N must be >= 3");
  auto tab = scale_table(N);
  const int H = tab->half;
  std::vector<double> out(H + 1, 0.0);
  RealElement base = N % 2 ? tan_pi(N, 1) * cot_pi(2 * N, 1) : RealElement::rational(4 * N, 1);
  for (int k = 1; k <= H; ++k) out[k] = (base * tab->s[k] * tab->dual[H]).to_double();
  return out;
}

Vec2 Similarity::apply(Vec2 p) const {
  double s = scale.to_double();
  return {s * p.x + shift.x.to_double(), s * p.y + shift.y.to_double()};
}

ExactPoint Similarity::apply(const ExactPoint& p) const {
  return {scale * p.x + shift.x, scale * p.y + shift.y};
}

Similarity Similarity::inverse() const {
  RealElement inv = scale.inverse();
  return {inv, {-(inv * shift.x), -(inv * shift.y)}};
}

Similarity promote_transform(const Family& fam2N, const Tile& anchor) {
  if (anchor.role != Role::M) throw std::invalid_argument("promote_2N_to_N: anchor is not an M tile");
  const Tile* M = fam2N.find(Role::M);
  if (!M || M->sides != anchor.sides || !(M->exact_center.x == anchor.exact_center.x) ||
      !(M->exact_center.y == anchor.exact_center.y) || !(M->exact_height == anchor.exact_height))
    throw std::invalid_argument("promote_2N_to_N: anchor is not the M tile of this family");
  const int N2 = fam2N.N, H = half_n(N2);
  // 1/hM = s_H / s_{H-1}
  RealElement inv = (tan_pi(N2, H) * cot_pi(N2, H - 1)).lift(family_field(N2));
  return {inv, {-(inv * M->exact_center.x), -(inv * M->exact_center.y)}};
}

std::vector<Tile> promote_2N_to_N(const Family& fam2N, const Tile& anchor) {
  Similarity T = promote_transform(fam2N, anchor);
  const unsigned L = family_field(fam2N.N);
  std::vector<Tile> out;
  // both halves of the 2N family, the left half regenerated with its own tags
  std::vector<Tile> all = even_right(fam2N.N, L);
  auto left = even_left(all, fam2N.N, L);
  all.insert(all.end(), left.begin(), left.end());
  for (const auto& t : all) {
    if (t.role == Role::Parent) continue;
    Role role = t.role == Role::LS ? Role::DS : t.role;
    Tile m = make_tile(t.sides, T.apply(t.exact_center), T.scale * t.exact_height, role, t.index, fam2N.N, L);
    if (t.role == Role::M) m.role = Role::Parent, m.index = 0;
    out.push_back(std::move(m));
  }
  return out;
}

bool TwiceOddAlignment::all_matched() const {
  return std::all_of(matches.begin(), matches.end(), [](const auto& m) { return m.exact; });
}

double TwiceOddAlignment::max_center_error() const {
  double e = 0;
  for (const auto& m : matches) e = std::max(e, m.center_error);
  return e;
}

TwiceOddAlignment twice_odd_alignment(int N) {
  if (N < 6 || N % 4 != 2) throw std::invalid_argument("twice_odd_alignment: N must be 2 mod 4 and >= 6");
  const int n = N / 2;
  Family big = first_family(N), small = first_family(n);
  const unsigned L = family_field(N);
  TwiceOddAlignment r;
  r.N = N;
  const Tile& M = *big.find(Role::M);
  const int H = half_n(N);
  RealElement hM = M.exact_height;
  RealElement inv = (tan_pi(N, H) * cot_pi(N, H - 1)).lift(L);
  r.T = {inv, {-(inv * M.exact_center.x), -(inv * M.exact_center.y)}};
  r.T_inverse = {hM, M.exact_center};
  for (const auto& t : small.tiles) {
    AlignmentMatch m;
    m.source = t.tag();
    ExactPoint c = r.T_inverse.apply(t.exact_center);
    RealElement h = hM * t.exact_height;
    Vec2 cf{c.x.to_double(), c.y.to_double()};
    m.center_error = INFINITY;
    for (const auto& u : big.tiles) {
      if (u.sides != t.sides) continue;
      double e = dist(cf, u.center);
      if (e < m.center_error) {
        m.center_error = e;
        if (e < 1e-9 && c.x == u.exact_center.x && c.y == u.exact_center.y && h == u.exact_height) {
          m.target = u.tag();
          m.exact = true;
        }
      }
    }
    r.matches.push_back(std::move(m));
  }
  return r;
}

std::vector<ExactPoint> exact_vertices(const Tile& t) {
  const int m = t.sides;
  RealElement R = t.exact_height * sec_pi(m, 1);
  std::vector<ExactPoint> v;
  for (int j = 0; j < m; ++j)
    v.push_back({t.exact_center.x + R * sin_pi(m, 2 * j + 1), t.exact_center.y - R * cos_pi(m, 2 * j + 1)});
  return v;
}

bool share_full_side(const Tile& a, const Tile& b) {
  auto va = a.vertices(), vb = b.vertices();
  const int na = a.sides, nb = b.sides;
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Vec2 a0 = va[i], a1 = va[(i + 1) % na], b0 = vb[j], b1 = vb[(j + 1) % nb];
      bool same = (dist(a0, b0) < 1e-9 && dist(a1, b1) < 1e-9) || (dist(a0, b1) < 1e-9 && dist(a1, b0) < 1e-9);
      if (same) cand.push_back({i, j});
    }
  if (cand.empty()) return false;
  auto ea = exact_vertices(a), eb = exact_vertices(b);
  auto eq = [](const ExactPoint& p, const ExactPoint& q) { return p.x == q.x && p.y == q.y; };
  for (auto [i, j] : cand) {
    const auto &a0 = ea[i], &a1 = ea[(i + 1) % na], &b0 = eb[j], &b1 = eb[(j + 1) % nb];
    if ((eq(a0, b0) && eq(a1, b1)) || (eq(a0, b1) && eq(a1, b0))) return true;
  }
  return false;
}

double max_edge_contact(const Tile& a, const Tile& b) {
  auto va = a.vertices(), vb = b.vertices();
  double best = 0;
  for (int i = 0; i < a.sides; ++i) {
    Vec2 p = va[i], q = va[(i + 1) % a.sides];
    Vec2 d = q - p;
    double len = norm(d);
    Vec2 u = d * (1 / len);
    for (int j = 0; j < b.sides; ++j) {
      Vec2 r = vb[j], s = vb[(j + 1) % b.sides];
      if (std::abs(cross(u, r - p)) > 1e-9 || std::abs(cross(u, s - p)) > 1e-9) continue;
      double t0 = dot(r - p, u), t1 = dot(s - p, u);
      double lo = std::max(0.0, std::min(t0, t1)), hi = std::min(len, std::max(t0, t1));
      best = std::max(best, hi - lo);
    }
  }
  return best;
}

}  // namespace ffam
