#pragma once

#include "ffam/exactfield/field.hpp"
#include "ffam/stargeom/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ffam {

enum class Role { Parent, S, LS, DS, D, M, C };
enum class FamilyCase { Odd, TwiceOdd, TwiceEven };

std::string to_string(FamilyCase c);

struct ExactPoint {
  RealElement x, y;
};

struct Tile {
  int sides = 0;
  Vec2 center;
  double height = 0;   // apothem
  double phase = 0;    // polar angle of vertex 0
  Role role = Role::S;
  int index = 0;       // k of S[k], LS[k], DS[k]; also kept for D, M, C
  bool degenerate = false;
  // exact data in Q(zeta_L) with L = 4N (even N) or 8N (odd N)
  ExactPoint exact_center;
  RealElement exact_height;

  std::string tag() const;   // "parent", "S[3]", "LS[2]", "D", ...
  PolygonSpec polygon() const { return {sides, height, center, phase}; }
  std::vector<Vec2> vertices() const { return polygon().vertices(); }
  double side_length() const { return polygon().side_length(); }
};

struct Family {
  int N = 0;
  FamilyCase kind = FamilyCase::Odd;
  std::vector<Tile> tiles;   // parent first
  // Number of distinct tiles, parent included.
  int size() const { return static_cast<int>(tiles.size()); }
  const Tile& parent() const { return tiles.front(); }
  const Tile* find(Role role, int index = -1) const;
};

FamilyCase family_case(int N);
unsigned family_field(int N);   // L above

Family first_family(int N);

// hS[k], k = 1..<N/2>, as doubles (index 0 unused).
std::vector<double> tile_heights(int N);

struct Similarity {
  RealElement scale;     // x -> scale * x + shift
  ExactPoint shift;
  Vec2 apply(Vec2 p) const;
  ExactPoint apply(const ExactPoint& p) const;
  Similarity inverse() const;
};

// DS import: translate cM to the origin and divide by hM. Throws if `anchor`
// is not the M tile of `fam2N`.
Similarity promote_transform(const Family& fam2N, const Tile& anchor);
std::vector<Tile> promote_2N_to_N(const Family& fam2N, const Tile& anchor);

struct AlignmentMatch {
  std::string source;   // tag in FF(N/2)
  std::optional<std::string> target;  // tag in FF(N) or none
  double center_error = 0;
  bool exact = false;
};

struct TwiceOddAlignment {
  int N = 0;
  // T maps the N frame to the N/2 frame: translate by -cS[N/2-2], scale by 1/hM.
  Similarity T;
  Similarity T_inverse;
  std::vector<AlignmentMatch> matches;
  bool all_matched() const;
  double max_center_error() const;
};

TwiceOddAlignment twice_odd_alignment(int N);

// Exact vertex list of a tile in Q(zeta_L') for the field used by the tile.
std::vector<ExactPoint> exact_vertices(const Tile& t);
// True when a and b have a common edge with identical endpoints (exact).
bool share_full_side(const Tile& a, const Tile& b);
// Length of the longest exact-collinear overlap of an edge of a with an edge of b.
double max_edge_contact(const Tile& a, const Tile& b);

}  // namespace ffam
