#ifndef PROPERCLASS_VERIFY_SUITE_HPP
#define PROPERCLASS_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace properclass {

/// One verified claim: what was asserted, what came out, and whether it
/// matched exactly. `pass` only when every asserted quantity matches.
struct VerificationReport {
    std::string id;
    std::string claim;
    std::string computed;
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    double seconds = 0.0;
};

struct SuiteOptions {
    uint64_t seed = 20240901;
    int jobs = 1;
    int refinement = 3;
    int nerve_dim = 5;
};

/// The full verification battery (items A1..A13), deterministic for a
/// fixed seed. Items run concurrently up to `jobs`.
std::vector<VerificationReport> run_paper_suite(const SuiteOptions& options = {});

/// Names of all suite items, in execution order.
std::vector<std::string> paper_suite_items();

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace properclass

#endif
