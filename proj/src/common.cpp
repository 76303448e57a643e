#include "passgraph/common.hpp"

#include <cstdio>

namespace passgraph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFiniteActivation: return "NonFiniteActivation";
    case ErrorCode::NonFiniteGradient: return "NonFiniteGradient";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateLabels: return "DegenerateLabels";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ChecksumFailure: return "ChecksumFailure";
    case ErrorCode::SchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::TooManyErrors: return "TooManyErrors";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

uint64_t fnv1a64(const void* bytes, size_t n, uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  uint64_t h = seed;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace passgraph
