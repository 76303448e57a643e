#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace passgraph {

// Categorized failure reason, carried by every thrown Error so the CLI can
// map it to an exit code and tests can assert on the exact class.
enum class ErrorCode {
  InvalidState,
  SeriesTooShort,
  ShapeMismatch,
  NonFiniteActivation,
  NonFiniteGradient,
  MissingLabel,
  TooFewSamples,
  EmptyInput,
  DegenerateLabels,
  VersionMismatch,
  ChecksumFailure,
  SchemaVersionUnsupported,
  MalformedLine,
  TooManyErrors,
  InsufficientSamples,
  ConfigInvalid,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

// Dense row-major matrix of doubles. Minimal by intent: the numeric layers
// below operate on raw pointers through the kernel table.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
  size_t size() const { return data.size(); }
};

// FNV-1a, used for model checksums and config hashes.
uint64_t fnv1a64(const void* bytes, size_t n, uint64_t seed = 1469598103934665603ULL);

// splitmix64; derives independent per-item RNG seeds from (seed, index).
uint64_t mix_seed(uint64_t seed, uint64_t index);

std::string hex64(uint64_t v);

}  // namespace passgraph
