#pragma once

// The acceptance criteria as runnable checks, shared by the acceptance
// binary and `litcalc selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace litalg {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

CriterionResult criterion_formula_oracle(const AcceptanceOptions& o);
CriterionResult criterion_phi(const AcceptanceOptions& o);
CriterionResult criterion_krull_schmidt(const AcceptanceOptions& o);
CriterionResult criterion_ttt_end_to_end(const AcceptanceOptions& o);
CriterionResult criterion_column_tensors(const AcceptanceOptions& o);
CriterionResult criterion_tower_cross_check(const AcceptanceOptions& o);
CriterionResult criterion_one_change(const AcceptanceOptions& o);
CriterionResult criterion_exactness(const AcceptanceOptions& o);
CriterionResult criterion_projective_b(const AcceptanceOptions& o);

/// All criteria in order; `only` restricts to the listed ids when nonempty.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o,
                                            const std::vector<int>& only = {});

/// "[PASS] 4 title (1.2 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace litalg
