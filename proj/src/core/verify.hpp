#pragma once

#include <cstdint>
#include <string>

namespace supauli {

struct VerifyOptions {
  int m = 3;
  int trials = 100;
  std::uint64_t seed = 20240901;
  double tolerance = 1e-12;
};

struct VerifyResult {
  bool pass = true;
  std::string report;
};

// Suites: orthogonality, roundtrip, rank, identity-free, unitarity, all.
VerifyResult run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace supauli
