#pragma once

#include <cstddef>
#include <string>

namespace ffam::simd {

enum class Isa { Scalar, Avx2 };

Isa detected_isa();     // honours FFAM_SIMD=scalar
std::string isa_name(Isa);

// One tau step for n points against a CCW polygon with nv vertices.
// vertex[i] = support index, or -1 inside, -2 singular (q left unchanged).
struct TauBatch {
  const double* vx;
  const double* vy;
  int nv;
  double tol;
};
void tau_batch_scalar(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy,
                      int* vertex, std::size_t n);
void tau_batch_avx2(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy,
                    int* vertex, std::size_t n);
void tau_batch(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy,
               int* vertex, std::size_t n);

// `steps` Df iterations in place.
void df_batch_scalar(double* x, double* y, std::size_t n, double two_cos, int steps);
void df_batch_avx2(double* x, double* y, std::size_t n, double two_cos, int steps);
void df_batch(double* x, double* y, std::size_t n, double two_cos, int steps);

// Shared per-point scalar kernel.
int tau_point(const TauBatch& poly, double px, double py, double* qx, double* qy);

}  // namespace ffam::simd
