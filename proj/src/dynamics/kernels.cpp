#include "ffam/dynamics/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace ffam::simd {

Isa detected_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("FFAM_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

std::string isa_name(Isa i) { return i == Isa::Avx2 ? "avx2" : "scalar"; }

int tau_point(const TauBatch& poly, double px, double py, double* qx, double* qy) {
  const int n = poly.nv;
  for (int i = 0; i < n; ++i) {
    const int nx = i + 1 == n ? 0 : i + 1, pv = i == 0 ? n - 1 : i - 1;
    double dx = poly.vx[i] - px, dy = poly.vy[i] - py;
    double a = dx * (poly.vy[nx] - py) - dy * (poly.vx[nx] - px);
    double b = dx * (poly.vy[pv] - py) - dy * (poly.vx[pv] - px);
    if (a < -poly.tol && b < -poly.tol) {
      *qx = 2.0 * poly.vx[i] - px;
      *qy = 2.0 * poly.vy[i] - py;
      return i;
    }
  }
  // no strict support vertex: inside/on the polygon, or on an extended edge
  for (int i = 0; i < n; ++i) {
    const int nx = i + 1 == n ? 0 : i + 1;
    double e = (poly.vx[nx] - poly.vx[i]) * (py - poly.vy[i]) - (poly.vy[nx] - poly.vy[i]) * (px - poly.vx[i]);
    if (e < -poly.tol) return -2;
  }
  return -1;
}

void tau_batch_scalar(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy,
                      int* vertex, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    qx[k] = px[k];
    qy[k] = py[k];
    vertex[k] = tau_point(poly, px[k], py[k], &qx[k], &qy[k]);
  }
}

void tau_batch(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy, int* vertex,
               std::size_t n) {
  if (detected_isa() == Isa::Avx2)
    tau_batch_avx2(poly, px, py, qx, qy, vertex, n);
  else
    tau_batch_scalar(poly, px, py, qx, qy, vertex, n);
}

void df_batch_scalar(double* x, double* y, std::size_t n, double two_cos, int steps) {
  for (std::size_t k = 0; k < n; ++k) {
    double a = x[k], b = y[k];
    for (int s = 0; s < steps; ++s) {
      double t = two_cos * b - a;
      double fl = std::floor((t + 1.0) * 0.5);
      a = b;
      b = t - 2.0 * fl;
    }
    x[k] = a;
    y[k] = b;
  }
}

void df_batch(double* x, double* y, std::size_t n, double two_cos, int steps) {
  if (detected_isa() == Isa::Avx2)
    df_batch_avx2(x, y, n, two_cos, steps);
  else
    df_batch_scalar(x, y, n, two_cos, steps);
}

}  // namespace ffam::simd
