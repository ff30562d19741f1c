#pragma once

// LIT certificates (n, D, V): verification of conditions (a) and (b), witness
// search, add-closure, and the triangular constructors.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "litalg/itfun.hpp"
#include "litalg/tritriple.hpp"

namespace litalg {

/// D is add(d_generators), enlarged by the class of all modules X with
/// e*X = 0 when `all_annihilated_by` is set (e = 0 means every module).
struct LITCertificate {
    AlgebraPtr algebra;
    std::size_t n = 0;
    std::vector<Module> d_generators;
    std::optional<Vec> all_annihilated_by;
    Module v;  // zero module when V = 0

    bool all_modules() const;
    static LITCertificate make(AlgebraPtr a, std::size_t n, std::vector<Module> gens,
                               Module v = Module());
    static LITCertificate make_all_modules(AlgebraPtr a, std::size_t n, Module v = Module());
};

struct ConditionAReport {
    bool syzygy_closed = false;
    bool phi_zero = false;
    bool phi_exact = true;
    std::size_t phi = 0;
    bool ok() const { return syzygy_closed && phi_zero; }
    std::string detail;
};

/// Exact check that a basic algebra is self-injective: every indecomposable
/// projective has a simple socle and the socles are pairwise distinct.
bool is_self_injective(const AlgebraPtr& a);

ConditionAReport verify_condition_a(const LITCertificate& cert, Rng& rng);

struct TaggedPart {
    Module module;
    std::size_t multiplicity = 1;
    bool v_part = false;  // otherwise a D-part
};

struct ConditionBWitness {
    Module target;
    ShortExactSequence sequence;  // 0 -> X1 -> X0 -> Omega^n(target) -> 0
    std::vector<TaggedPart> x1_parts, x0_parts;
};

struct ConditionBReport {
    bool exact = false;
    bool right_term = false;
    bool membership = false;
    bool ok() const { return exact && right_term && membership; }
    std::string detail;
};

/// Membership of an indecomposable module in add(V) or in D.
class MembershipOracle {
  public:
    MembershipOracle(const LITCertificate& cert, Rng& rng);
    bool in_v(const Module& indecomposable, Rng& rng) const;
    bool in_d(const Module& indecomposable, Rng& rng) const;
    /// Indecomposable summands of V and of the D generators, deduplicated.
    const std::vector<Module>& v_parts() const { return v_parts_; }
    const std::vector<Module>& d_parts() const { return d_parts_; }

  private:
    const LITCertificate* cert_;
    std::vector<Module> v_parts_, d_parts_;
};

ConditionBReport verify_condition_b_witness(const LITCertificate& cert,
                                            const ConditionBWitness& w, Rng& rng);

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t surjections = 0;
};

/// Searches X0 = sum W_i^{a_i} over the summands of V and D with total
/// dimension at most `budget`, for a surjection onto Omega^n(target) whose
/// kernel lies in add(V + D).
std::optional<ConditionBWitness> search_condition_b(const LITCertificate& cert,
                                                    const Module& target, std::size_t budget,
                                                    Rng& rng, SearchStats* stats = nullptr);

struct AddClosureReport {
    bool closed = false;
    std::vector<Module> generators;  // non-projective indecomposable classes
    std::size_t added = 0;
};

AddClosureReport add_closure(const std::vector<Module>& gens, std::size_t budget, Rng& rng);

/// Regards a level-k certificate as level n >= k: V becomes Omega^(n-k) V
/// plus the regular module.
LITCertificate raise_level(const LITCertificate& cert, std::size_t n);

/// Which form of the clause on M (x)_T P is demanded of indecomposable
/// projectives P: indecomposable, or indecomposable or zero.
enum class TensorClause { strict, allow_zero };

/// (n+1, add(Omega(D_T,0,0) + (0,D_U,0)), Omega(V_T,V_U,0)) for Lambda.
LITCertificate lit_construct_triangular(const TriangularContext& ctx, const LITCertificate& cert_t,
                                        const LITCertificate& cert_u, Rng& rng,
                                        TensorClause clause = TensorClause::strict);

/// The variant for D_T = {0}: (n+1, (0,D_U,0), Omega(V_T,V_U,0)).
LITCertificate lit_construct_IT_case(const TriangularContext& ctx, const LITCertificate& cert_t,
                                     const LITCertificate& cert_u, Rng& rng);

/// The witness of the triangular construction: T- and U-witnesses for
/// Omega^n A and Omega^n B are glued into a sequence ending in Omega^n of the
/// target, and the Horseshoe construction moves it one level up. Inputs are
/// the certificates handed to lit_construct_triangular; needs level n >= 1.
/// Returns nothing when a component witness is not found or a glued part
/// falls outside the output class.
std::optional<ConditionBWitness> constructive_witness(const TriangularContext& ctx,
                                                      const LITCertificate& cert_t,
                                                      const LITCertificate& cert_u,
                                                      const LITCertificate& cert_lambda,
                                                      const Module& target, Rng& rng);

using WitnessBuilder = std::function<std::optional<ConditionBWitness>(const Module&, Rng&)>;

/// Simples, projectives, nonzero syzygies of both to depth 3, and random
/// modules of dimension <= 6, filled with random modules up to min_size.
std::vector<Module> standard_suite(const AlgebraPtr& a, std::size_t random_count,
                                   std::size_t min_size, Rng& rng);

struct SuiteEntry {
    std::size_t index = 0;
    std::size_t target_dim = 0;
    std::size_t omega_dim = 0;
    bool found = false;
    bool constructive = false;  // built by the WitnessBuilder rather than searched
    bool verified = false;
    std::size_t x0_dim = 0;
    std::size_t x1_dim = 0;
};

struct SuiteReport {
    ConditionAReport condition_a;
    std::vector<SuiteEntry> entries;
    std::size_t passed() const;
    bool ok() const { return condition_a.ok() && passed() == entries.size(); }
};

/// Verifies condition (a) and searches condition (b) witnesses for every
/// target with budget factor * dim(target). Targets are distributed over
/// `jobs` threads; each uses its own generator seeded from `seed` and the
/// target index, so the report does not depend on the job count. A builder,
/// when given, is tried before the search.
SuiteReport verify_suite(const LITCertificate& cert, const std::vector<Module>& targets,
                         std::size_t budget_factor, std::size_t jobs, std::uint64_t seed,
                         const WitnessBuilder& builder = {});

}  // namespace litalg
