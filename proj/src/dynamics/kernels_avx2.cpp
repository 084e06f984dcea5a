#include "ffam/dynamics/kernels.hpp"

#include <immintrin.h>

namespace ffam::simd {

void tau_batch_avx2(const TauBatch& poly, const double* px, const double* py, double* qx, double* qy,
                    int* vertex, std::size_t n) {
  const int nv = poly.nv;
  const __m256d ntol = _mm256_set1_pd(-poly.tol);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x = _mm256_loadu_pd(px + k), y = _mm256_loadu_pd(py + k);
    __m256d found = _mm256_setzero_pd();
    __m256d idx = _mm256_set1_pd(-1.0);
    __m256d cx = x, cy = y;
    for (int i = 0; i < nv; ++i) {
      const int nx = i + 1 == nv ? 0 : i + 1, pv = i == 0 ? nv - 1 : i - 1;
      const __m256d vxi = _mm256_set1_pd(poly.vx[i]), vyi = _mm256_set1_pd(poly.vy[i]);
      const __m256d dx = _mm256_sub_pd(vxi, x), dy = _mm256_sub_pd(vyi, y);
      const __m256d a = _mm256_sub_pd(_mm256_mul_pd(dx, _mm256_sub_pd(_mm256_set1_pd(poly.vy[nx]), y)),
                                      _mm256_mul_pd(dy, _mm256_sub_pd(_mm256_set1_pd(poly.vx[nx]), x)));
      const __m256d b = _mm256_sub_pd(_mm256_mul_pd(dx, _mm256_sub_pd(_mm256_set1_pd(poly.vy[pv]), y)),
                                      _mm256_mul_pd(dy, _mm256_sub_pd(_mm256_set1_pd(poly.vx[pv]), x)));
      __m256d hit = _mm256_and_pd(_mm256_cmp_pd(a, ntol, _CMP_LT_OQ), _mm256_cmp_pd(b, ntol, _CMP_LT_OQ));
      hit = _mm256_andnot_pd(found, hit);
      idx = _mm256_blendv_pd(idx, _mm256_set1_pd(static_cast<double>(i)), hit);
      cx = _mm256_blendv_pd(cx, vxi, hit);
      cy = _mm256_blendv_pd(cy, vyi, hit);
      found = _mm256_or_pd(found, hit);
      if (_mm256_movemask_pd(found) == 0xF) break;
    }
    _mm256_storeu_pd(qx + k, _mm256_sub_pd(_mm256_mul_pd(two, cx), x));
    _mm256_storeu_pd(qy + k, _mm256_sub_pd(_mm256_mul_pd(two, cy), y));
    alignas(32) double id[4];
    _mm256_store_pd(id, idx);
    const int mask = _mm256_movemask_pd(found);
    for (int l = 0; l < 4; ++l) {
      if (mask & (1 << l)) {
        vertex[k + l] = static_cast<int>(id[l]);
      } else {
        qx[k + l] = px[k + l];
        qy[k + l] = py[k + l];
        vertex[k + l] = tau_point(poly, px[k + l], py[k + l], &qx[k + l], &qy[k + l]);
      }
    }
  }
  for (; k < n; ++k) {
    qx[k] = px[k];
    qy[k] = py[k];
    vertex[k] = tau_point(poly, px[k], py[k], &qx[k], &qy[k]);
  }
}

void df_batch_avx2(double* x, double* y, std::size_t n, double two_cos, int steps) {
  const __m256d tc = _mm256_set1_pd(two_cos), one = _mm256_set1_pd(1.0), half = _mm256_set1_pd(0.5),
                two = _mm256_set1_pd(2.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d a = _mm256_loadu_pd(x + k), b = _mm256_loadu_pd(y + k);
    for (int s = 0; s < steps; ++s) {
      const __m256d t = _mm256_sub_pd(_mm256_mul_pd(tc, b), a);
      const __m256d fl = _mm256_floor_pd(_mm256_mul_pd(_mm256_add_pd(t, one), half));
      a = b;
      b = _mm256_sub_pd(t, _mm256_mul_pd(two, fl));
    }
    _mm256_storeu_pd(x + k, a);
    _mm256_storeu_pd(y + k, b);
  }
  if (k < n) df_batch_scalar(x + k, y + k, n - k, two_cos, steps);
}

}  // namespace ffam::simd
