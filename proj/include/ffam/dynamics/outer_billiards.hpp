#pragma once

#include "ffam/stargeom/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ffam {

enum class TauStatus { Ok = 0, Inside, Singular };

class TauError : public std::runtime_error {
 public:
  TauError(TauStatus s, const std::string& what, long iterate = -1)
      : std::runtime_error(what), status_(s), iterate_(iterate) {}
  TauStatus status() const { return status_; }
  long iterate() const { return iterate_; }  // orbit index where it happened, or -1

 private:
  TauStatus status_;
  long iterate_;
};

// Clockwise outer billiards map about a convex polygon.
class OuterBilliards {
 public:
  explicit OuterBilliards(PolygonSpec poly, double tol = 1e-12);
  static OuterBilliards standard(int N, double tol = 1e-12) {
    return OuterBilliards(PolygonSpec::standard(N), tol);
  }

  const PolygonSpec& polygon() const { return poly_; }
  const std::vector<Vec2>& vertices() const { return v_; }
  double tolerance() const { return tol_; }
  double circumradius() const { return poly_.circumradius(); }

  // Support vertex of tau (or of tau^-1 when inverse); -1 with status on failure.
  int support(Vec2 p, TauStatus* status, bool inverse = false) const;
  Vec2 tau(Vec2 p) const;
  Vec2 tau_inverse(Vec2 p) const;

 private:
  PolygonSpec poly_;
  std::vector<Vec2> v_;
  double tol_;
};

struct OrbitResult {
  std::optional<long> period;
  std::vector<Vec2> points;   // points[0] = start; up to the return
  std::vector<int> signature; // support vertex used at each step
};

// Iterates tau until the point returns within `tol` (scaled by the apothem)
// and the step signature repeats over a second period, or max_iter steps.
OrbitResult orbit(Vec2 p, const OuterBilliards& ob, long max_iter, double tol = 1e-9,
                  bool keep_points = true);

}  // namespace ffam
