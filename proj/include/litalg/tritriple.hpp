#pragma once

// Modules over Lambda = (T 0; M U) as triples (A, B, f: M (x)_T A -> B).

#include <string>
#include <vector>

#include "litalg/module.hpp"

namespace litalg {

struct TriangularContext {
    AlgebraPtr t, u;
    Bimodule m;
    AlgebraPtr lambda;
    AlgebraPtr t_op;
    Vec e_t, e_u;  // block selectors in lambda coordinates

    static TriangularContext create(AlgebraPtr t, AlgebraPtr u, Bimodule m);

    std::size_t t_offset() const { return 0; }
    std::size_t u_offset() const { return t->dim(); }
    std::size_t m_offset() const { return t->dim() + u->dim(); }
};

/// M (x)_T A as a quotient of the plain tensor space (index k * dim A + j).
struct TensorResult {
    Module module;
    Matrix projection;  // module.dim() x (dim M * dim A)
    Matrix section;     // right inverse of projection
};

TensorResult tensor_over_T(const Bimodule& m, const Module& a);

/// 1 (x) alpha : M (x) A1 -> M (x) A2.
Matrix tensor_map(const Bimodule& m, const TensorResult& src, const TensorResult& dst,
                  const Matrix& alpha);

struct TripleModule {
    Module a;  // over T
    Module b;  // over U
    Matrix f;  // b.dim() x dim(M (x) A)
};

/// The zero-dimensional component defaults are filled in for missing parts.
TripleModule make_triple(const TriangularContext& ctx, Module a, Module b, Matrix f);
void validate_triple(const TriangularContext& ctx, const TripleModule& tm);

Module triple_to_flat(const TriangularContext& ctx, const TripleModule& tm);
TripleModule flat_to_triple(const TriangularContext& ctx, const Module& x);
TripleModule triple_direct_sum(const TriangularContext& ctx, const std::vector<TripleModule>& parts);

std::vector<TripleModule> triple_projectives(const TriangularContext& ctx);

struct TripleMorphism {
    Matrix alpha;  // A1 -> A2
    Matrix beta;   // B1 -> B2
};

struct TripleSequence {
    TripleModule x1, x2, x3;
    TripleMorphism g1, g2;
};

struct TripleExactReport {
    bool squares_commute = false;
    bool a_row_exact = false;
    bool tensor_row_exact = false;
    bool b_row_exact = false;
    bool exact() const { return squares_commute && a_row_exact && b_row_exact; }
    std::string to_string() const;
};

TripleExactReport triple_exact(const TriangularContext& ctx, const TripleSequence& seq);

TripleModule triple_syzygy_formula(const TriangularContext& ctx, const TripleModule& tm,
                                   std::size_t n);
Module triple_syzygy_oracle(const TriangularContext& ctx, const TripleModule& tm, std::size_t n);

struct MHypotheses {
    bool left_projective = false;
    bool right_projective = false;
    bool tensor_indecomposable = false;
    std::vector<bool> per_projective;  // M (x) P_i indecomposable, per idempotent of T
    std::vector<bool> per_projective_zero;  // M (x) P_i = 0
    bool all() const { return left_projective && right_projective && tensor_indecomposable; }
    /// The weaker clause: each M (x) P_i is indecomposable or zero.
    bool tensor_indecomposable_or_zero() const;
    std::size_t zero_tensors() const;
};

/// M as a left U-module.
Module bimodule_as_left_module(const TriangularContext& ctx);
/// M as a left T^op-module.
Module bimodule_as_right_module(const TriangularContext& ctx);

MHypotheses check_M_hypotheses(const TriangularContext& ctx, Rng& rng);

}  // namespace litalg
