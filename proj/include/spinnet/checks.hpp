#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spinnet {

/// Outcome of one family of identity checks. A failing check names its
/// first counterexample in details.
struct Check {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  long cases = 0;
  std::string details;
};

struct CheckOptions {
  int max_delta = 3;
  std::uint64_t seed = 1;
  int samples = 20;
  // Bounds for the dense diagram identities.
  int max_symmetrizer = 6;
  int max_bubble_delta = 5;
  int max_fusion = 4;
  int max_recoupling = 4;
};

std::vector<Check> diagram_checks(const CheckOptions& opt);
std::vector<Check> recurrence_checks(const CheckOptions& opt);
std::vector<Check> symmetry_checks(const CheckOptions& opt);
std::vector<Check> product_checks(const CheckOptions& opt);
std::vector<Check> recoupling_checks(const CheckOptions& opt);
std::vector<Check> rank_one_checks(const CheckOptions& opt);

/// Suite names accepted by run_suite: diagrams, recurrence, symmetry,
/// products, recoupling, rank1, all.
const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& suite, const CheckOptions& opt);  // throws DomainError

bool all_pass(const std::vector<Check>& checks) noexcept;

}  // namespace spinnet
