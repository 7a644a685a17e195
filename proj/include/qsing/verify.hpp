#pragma once

#include <string>
#include <vector>

namespace qsing {

/// Outcome of one verification suite. failures lists every property that
/// did not hold, as "name: detail" strings; violation marks the specific
/// failure of the cyclicity theorem witness.
struct SuiteResult {
    std::string name;
    bool passed = true;
    bool violation = false;
    std::vector<std::string> failures;
};

/// Dimensions exercised by default: {2, 3, 4, 5, 6, 7, 9, 15}.
std::vector<long> default_verify_dims();

/// Built-in verification corpus, one suite per dimension:
///  - even n: the quaternion-block family and its classification,
///  - odd prime n: a cyclic fixed-point-free witness plus the required
///    refusal of the odd-composite constructor,
///  - odd composite n: the metacyclic family identities (determinants,
///    orders, the conjugation relation, group size, fixed-point-freeness),
///    the embedding, and the classification of the embedded group.
std::vector<SuiteResult> run_verify_suites(const std::vector<long>& dims);

} // namespace qsing
