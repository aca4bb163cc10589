#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parconn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

// n scales the main sample count; 0 means the acceptance default.
CriterionResult sweep_incidence(std::uint64_t seed, int n = 0);
CriterionResult sweep_family_limit(std::uint64_t seed, int n = 0);
CriterionResult sweep_bnr(std::uint64_t seed, int n = 0);
CriterionResult sweep_jacobian(std::uint64_t seed, int n = 0);
CriterionResult sweep_taxonomy(std::uint64_t seed, int n = 0);
CriterionResult sweep_residues(std::uint64_t seed, int n = 0);
CriterionResult sweep_irreducibility(std::uint64_t seed, int n = 0);
CriterionResult sweep_sym2(std::uint64_t seed, int n = 0);
CriterionResult sweep_plane(std::uint64_t seed, int n = 0);
CriterionResult sweep_spectral(std::uint64_t seed, int n = 0);

// suite names: incidence family-limit bnr jacobian taxonomy residues
// irreducibility sym2 plane spectral
std::vector<std::string> sweep_names();
CriterionResult run_sweep(const std::string& suite, std::uint64_t seed, int n = 0);

}  // namespace parconn
