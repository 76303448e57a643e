#pragma once

#include <cstddef>
#include <string>

namespace passgraph::kernels {

// Table of the arithmetic primitives the network layers are built from.
// Two implementations exist: a scalar reference lane and an AVX2+FMA lane.
// The active lane is chosen once at startup from CPU capabilities and can be
// overridden (env PASSGRAPH_KERNELS=scalar|avx2, or set_active for tests).
//
// Matrices are row-major. `matvec` computes y = W·x + b with W of shape
// m×n, so one weight row per output, contiguous for the inner dot product.
struct Kernels {
  const char* name;

  double (*dot)(const double* a, const double* b, int n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, int n);
  // y = W·x + b      (b may be null)
  void (*matvec)(const double* W, const double* x, const double* b, double* y,
                 int m, int n);
  // xg += Wᵀ·g       (gradient w.r.t. the matvec input)
  void (*matvec_t_acc)(const double* W, const double* g, double* xg, int m, int n);
  // dW += g ⊗ x, db += g   (gradient w.r.t. the matvec parameters)
  void (*outer_acc)(const double* g, const double* x, double* dW, double* db,
                    int m, int n);
};

const Kernels& scalar_kernels();

// Null when the CPU (or build target) lacks AVX2+FMA.
const Kernels* avx2_kernels();

const Kernels& active();

// Returns false if the requested lane is unavailable.
bool set_active(const std::string& name);

}  // namespace passgraph::kernels
