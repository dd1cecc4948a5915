#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hemifill {

// One acceptance check with its measured quantity spelled out, so a log line
// can be read without rerunning anything.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20260815;

// The checks below pin their tolerances and sample counts in the
// implementation; seed only moves the random draws.
std::vector<CheckResult> check_transport_agreement(std::uint64_t seed,
                                                   bool parallel);
std::vector<CheckResult> check_dirac_pairs(std::uint64_t seed);
std::vector<CheckResult> check_embedding_identities(std::uint64_t seed,
                                                    bool parallel);
std::vector<CheckResult> check_isometry_convergence(std::uint64_t seed,
                                                    bool parallel);
std::vector<CheckResult> check_lipschitz_extension(std::uint64_t seed,
                                                   bool parallel);
std::vector<CheckResult> check_g_monotonicity(bool parallel);
std::vector<CheckResult> check_jacobian_bounds(std::uint64_t seed,
                                               bool parallel);
std::vector<CheckResult> check_filling_areas(bool parallel);

std::vector<CheckResult> run_all_checks(std::uint64_t seed, bool parallel);

}  // namespace hemifill
