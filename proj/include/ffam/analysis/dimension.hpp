#pragma once

#include <string>
#include <vector>

namespace ffam {

struct DimensionReport {
  double geometric = 0;   // in (0, 1)
  double temporal = 0;    // > 1
  double dimension = 0;   // -ln(temporal)/ln(geometric)
  std::string provenance = "formula";  // or "measured-period-ratios"
  std::string label;
};

DimensionReport fractal_dimension(double geometric, double temporal);
// n8, n12, n5, goetz5
DimensionReport dimension_preset(const std::string& name);

struct TemporalEstimate {
  std::vector<double> ratios;
  double estimate = 0;   // last ratio
};

TemporalEstimate temporal_scaling_estimate(const std::vector<long long>& periods);

// Periods of S[k] centers shrunk toward the vertex star[1] by GenScale^g, g = 0..generations-1.
std::vector<long long> generation_periods(int N, int k, int generations, long max_iter);

}  // namespace ffam
