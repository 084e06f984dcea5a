#include "ffam/analysis/dimension.hpp"

#include "ffam/dynamics/outer_billiards.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/stargeom/constants.hpp"
#include "ffam/stargeom/star.hpp"

#include <cmath>
#include <stdexcept>

namespace ffam {

DimensionReport fractal_dimension(double g, double t) {
  if (!(g > 0 && g < 1)) throw std::domain_error("fractal_dimension: geometric scale must lie in (0, 1)");
  if (!(t > 1)) throw std::domain_error("fractal_dimension: temporal scale must exceed 1");
  return {g, t, -std::log(t) / std::log(g), "formula", ""};
}

DimensionReport dimension_preset(const std::string& name) {
  DimensionReport d;
  if (name == "n8")
    d = fractal_dimension(gen_scale(8).to_double(), 9);
  else if (name == "n12")
    d = fractal_dimension(gen_scale(12).to_double(), 27);
  else if (name == "n5")
    d = fractal_dimension(gen_scale(5).to_double(), 6);
  else if (name == "goetz5")
    d = fractal_dimension(lambda(10).inverse().to_double(), 2);
  else
    throw std::invalid_argument("unknown dimension preset '" + name + "' (n8|n12|n5|goetz5)");
  d.label = name;
  return d;
}

TemporalEstimate temporal_scaling_estimate(const std::vector<long long>& p) {
  if (p.size() < 2) throw std::invalid_argument("temporal_scaling_estimate: need at least two periods");
  TemporalEstimate e;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i - 1] <= 0 || p[i] <= p[i - 1])
      throw std::invalid_argument("temporal_scaling_estimate: periods must be positive and increasing");
    e.ratios.push_back(static_cast<double>(p[i]) / static_cast<double>(p[i - 1]));
  }
  e.estimate = e.ratios.back();
  return e;
}

std::vector<long long> generation_periods(int N, int k, int generations, long max_iter) {
  auto ob = OuterBilliards::standard(N);
  auto cs = tile_centers(N);
  if (k < 1 || k >= static_cast<int>(cs.size())) throw std::out_of_range("generation_periods: bad tile index");
  const double g = gen_scale(N).to_double();
  const Vec2 v = cs[0];
  std::vector<long long> out;
  double f = 1;
  for (int i = 0; i < generations; ++i, f *= g) {
    auto r = orbit(v + (cs[k] - v) * f, ob, max_iter, 1e-9, false);
    out.push_back(r.period ? *r.period : -1);
  }
  return out;
}

}  // namespace ffam
