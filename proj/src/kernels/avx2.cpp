// AVX2+FMA lane. Built with -mavx2 -mfma on x86-64 only; callers go through
// the dispatch table and never reach this code on machines without AVX2.

#include "passgraph/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace passgraph::kernels {
namespace {

inline double hsum256(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* a, const double* b, int n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  int i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  acc0 = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  double s = hsum256(acc0);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, int n) {
  const __m256d va = _mm256_set1_pd(alpha);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void matvec_avx2(const double* W, const double* x, const double* b, double* y,
                 int m, int n) {
  for (int o = 0; o < m; ++o) {
    const double s = dot_avx2(W + static_cast<size_t>(o) * n, x, n);
    y[o] = b ? b[o] + s : s;
  }
}

void matvec_t_acc_avx2(const double* W, const double* g, double* xg, int m, int n) {
  for (int o = 0; o < m; ++o) {
    if (g[o] == 0.0) continue;
    axpy_avx2(g[o], W + static_cast<size_t>(o) * n, xg, n);
  }
}

void outer_acc_avx2(const double* g, const double* x, double* dW, double* db,
                    int m, int n) {
  for (int o = 0; o < m; ++o) {
    const double go = g[o];
    db[o] += go;
    if (go == 0.0) continue;
    axpy_avx2(go, x, dW + static_cast<size_t>(o) * n, n);
  }
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k = {
      "avx2",        dot_avx2,          axpy_avx2,
      matvec_avx2,   matvec_t_acc_avx2, outer_acc_avx2,
  };
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &k : nullptr;
}

}  // namespace passgraph::kernels

#else

namespace passgraph::kernels {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace passgraph::kernels

#endif
