#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsa/invariants.hpp"

namespace lsa {

/// Bounded exhaustive search over structure-constant tables at dims (n, m)
/// with every free coefficient drawn from `coeffs` (must contain 0).
struct SearchSpec {
    int n = 0;
    int m = 0;
    std::vector<Scalar> coeffs;
    int jobs = 1;
    uint64_t budget = 100'000'000;  // node visits
    bool force = false;             // run even when the space exceeds the budget
    std::string resume;             // digit path at the partition depth, "" = start
    int charseq_trials = 8;
    uint64_t charseq_seed = 0;
};

/// Number of free table coefficients: n^3 + 3 n m^2.
int free_coefficient_count(int n, int m);

/// |coeffs|^free, exactly.
BigInt search_space_size(const SearchSpec& spec);

enum class Prop31 { holds, violated, not_applicable };

/// dim A^3 <= n - 4 for an even (m = 0) nilpotent algebra that is not
/// single-generated, has nilindex < n and a non-Lie natural gradation;
/// anything outside those hypotheses is not_applicable.
Prop31 check_prop31(const SuperAlgebra& even_algebra);

struct CensusReport {
    int n = 0, m = 0;
    std::vector<std::string> coeff_literals;
    int free_coefficients = 0;
    std::string space_size;  // exact |coeffs|^free
    uint64_t nodes_visited = 0;
    uint64_t valid_count = 0;          // superidentity-valid complete tables
    uint64_t nilpotent_count = 0;
    uint64_t non_nilpotent_count = 0;  // valid but not nilpotent
    std::map<std::string, uint64_t> histogram;  // "nilindex=k;charseq=..." -> count

    // Tables attaining nilindex >= n + m, keyed by canonical serialization.
    std::vector<std::pair<std::string, std::string>> attainers;  // (table, fingerprint)

    uint64_t maximal_attainers = 0;  // nilindex == n + m + 1
    std::vector<std::string> maximal_violations;
    uint64_t bound_checked = 0;  // nilindex == n + m instances tested
    std::vector<std::string> bound_violations;
    uint64_t single_generated_checked = 0;
    std::vector<std::string> single_generated_violations;
    uint64_t prop31_applicable = 0;
    uint64_t prop31_not_applicable = 0;
    std::vector<std::string> prop31_violations;

    std::string resumed_from;  // digit path or ""
    std::string cursor;        // next unprocessed prefix digits, "" when complete

    bool all_checks_pass() const {
        return maximal_violations.empty() && bound_violations.empty() &&
               single_generated_violations.empty() && prop31_violations.empty();
    }

    /// Stable-field-order JSON; bit-identical for identical inputs
    /// regardless of worker count.
    std::string to_json() const;
};

/// Depth-first deterministic enumeration of all superidentity-valid tables,
/// pruning every branch whose already-determined residuals are nonzero.
/// Single-threaded; the yield order is the fixed assignment order. The
/// callback returns false to stop early. Refuses (BudgetExceeded) when the
/// space size exceeds the budget and force is not set.
void enumerate(const SearchSpec& spec, const std::function<bool(const SuperAlgebra&)>& yield);

/// Full census with invariant tallies and theorem checks. Deterministic:
/// results are merged in prefix order, so reports are identical across
/// worker counts.
CensusReport census(const SearchSpec& spec);

}  // namespace lsa
