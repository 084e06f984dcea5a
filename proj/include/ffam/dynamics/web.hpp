#pragma once

#include "ffam/dynamics/outer_billiards.hpp"
#include "ffam/dynamics/region.hpp"

#include <array>
#include <string>
#include <vector>

namespace ffam {

struct Segment {
  Vec2 a, b;
  int level = 1;
};

struct WebMeta {
  std::string kind;        // "local" | "outer" | "df"
  int N = 0;
  double theta = 0;
  int levels = 0;
  int workers = 1;
  double region_half_width = 0;
  std::string interleave = "union of forward and inverse images per level";
  // Affine map (x, y) -> (m00 x + m01 y + m02, m10 x + m11 y + m12) taking the
  // web frame to the local outer-billiards frame; identity except for df.
  std::array<double, 6> rectification{1, 0, 0, 0, 1, 0};
};

struct Web {
  std::vector<Segment> segments;  // canonical order
  WebMeta meta;

  std::vector<Segment> up_to(int level) const;
  std::string to_jsonl() const;
  std::string to_csv() const;
};

// Canonical form: endpoints ordered, keyed on a 1e-9 grid, sorted.
void canonicalize(std::vector<Segment>& segs);

// Exact web of the clockwise map within the square of half-width `half_width`:
// every point where tau^j or tau^-j is undefined for some j < levels.
Web outer_web(const OuterBilliards& ob, int levels, double half_width, int workers = 1);

// Web clipped to the closed inner star; the edges of N are part of level 1.
Web local_web(int N, int levels, int workers = 1);

// Collinear segments merged into maximal intervals, grouped by line.
struct MergedLines {
  struct Line {
    Vec2 origin, dir;   // unit direction
    std::vector<std::pair<double, double>> spans;
  };
  std::vector<Line> lines;
  double total_length() const;
  std::vector<Seg> segments() const;
};

MergedLines merge_collinear(const std::vector<Seg>& segs, double tol = 1e-9);
std::vector<Seg> plain(const std::vector<Segment>& segs);
std::vector<Seg> clip_all(const std::vector<Seg>& segs, const Region& r);
std::vector<Seg> transform(const std::vector<Seg>& segs, const std::array<double, 6>& m);

// One-sided sampled distance: max over points of a (spacing h) of the
// distance to b; the symmetric version takes the max of both directions.
double directed_distance(const std::vector<Seg>& a, const std::vector<Seg>& b, double h);
double hausdorff(const std::vector<Seg>& a, const std::vector<Seg>& b, double h);

// Fraction of sample points of `small` within tol of `big`.
double coverage(const std::vector<Seg>& small, const std::vector<Seg>& big, double h, double tol);

}  // namespace ffam
