#include "passgraph/kernels/kernels.hpp"

namespace passgraph::kernels {
namespace {

double dot_scalar(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void matvec_scalar(const double* W, const double* x, const double* b, double* y,
                   int m, int n) {
  for (int o = 0; o < m; ++o) {
    double s = b ? b[o] : 0.0;
    const double* row = W + static_cast<size_t>(o) * n;
    for (int i = 0; i < n; ++i) s += row[i] * x[i];
    y[o] = s;
  }
}

void matvec_t_acc_scalar(const double* W, const double* g, double* xg, int m, int n) {
  for (int o = 0; o < m; ++o) {
    const double go = g[o];
    if (go == 0.0) continue;
    const double* row = W + static_cast<size_t>(o) * n;
    for (int i = 0; i < n; ++i) xg[i] += go * row[i];
  }
}

void outer_acc_scalar(const double* g, const double* x, double* dW, double* db,
                      int m, int n) {
  for (int o = 0; o < m; ++o) {
    const double go = g[o];
    db[o] += go;
    if (go == 0.0) continue;
    double* row = dW + static_cast<size_t>(o) * n;
    for (int i = 0; i < n; ++i) row[i] += go * x[i];
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar",         dot_scalar,       axpy_scalar,
      matvec_scalar,    matvec_t_acc_scalar, outer_acc_scalar,
  };
  return k;
}

}  // namespace passgraph::kernels
