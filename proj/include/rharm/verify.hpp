#ifndef RHARM_VERIFY_HPP
#define RHARM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rharm/rational.hpp"

namespace rharm {

// Brute-force counting oracles, independent of the recurrence tables.
// Partitions of {1..n} into k nonempty blocks with 1..r in distinct blocks.
BigInt count_partitions_r(unsigned n, unsigned k, unsigned r);
// Permutations of {1..n} with k cycles and 1..r in distinct cycles.
BigInt count_cycle_permutations_r(unsigned n, unsigned k, unsigned r);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // populated on failure
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

struct VerifyOptions {
    // Test hook: adds 1 to the reported second-kind entry (n, k, r) inside
    // the triangles suite, simulating a broken build.
    struct CorruptS2 {
        unsigned n, k, r;
    };
    std::optional<CorruptS2> corrupt_s2;
};

SuiteResult run_triangles_suite(const VerifyOptions& opts = {});
SuiteResult run_families_suite();
SuiteResult run_bridges_suite();
SuiteResult run_operators_suite();
SuiteResult run_closed_forms_suite();

// All of the above, in the order listed.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts = {});

}  // namespace rharm

#endif
