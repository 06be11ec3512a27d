// Acceptance suite: runs every verification item and prints one line per
// criterion. Exits nonzero if any item fails.
//
// Note: A12 is expected to fail on the two fixtures with nontrivial
// fundamental group. The overcategory of the localized simplex category
// at any simplex is the category of elements of a free transitive
// pi1-set, so its nerve is the universal cover of the subdivision; for
// the 6-vertex projective plane that cover is a 2-sphere and for the
// Z/3 presentation complex a wedge of two 2-spheres, neither of which is
// acyclic in degree two. The suite reports the computed values rather
// than suppressing the discrepancy.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "properclass/verify_suite.hpp"

int main(int argc, char** argv) {
    properclass::SuiteOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            options.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            options.jobs = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--refine") == 0 && i + 1 < argc)
            options.refinement = std::atoi(argv[++i]);
    }

    std::vector<properclass::VerificationReport> reports =
        properclass::run_paper_suite(options);
    int failed = 0;
    double total = 0.0;
    for (const auto& r : reports) {
        std::printf("%-4s [%-12s] %7.2fs  %s\n", r.id.c_str(), r.verdict.c_str(), r.seconds,
                    r.claim.c_str());
        std::printf("      %s\n", r.computed.c_str());
        if (r.verdict != "pass") ++failed;
        total += r.seconds;
    }
    std::printf("%zu criteria, %d failed, %.2fs total\n", reports.size(), failed, total);
    return failed == 0 ? 0 : 1;
}
