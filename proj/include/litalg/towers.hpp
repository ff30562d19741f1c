#pragma once

// Concrete LIT families: one-point extensions, (T 0; T T), the triangular
// towers B_n and B_n', and T (x) kQ for quivers of type A_n.

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "litalg/litcore.hpp"

namespace litalg {

/// Basis element t_k of T placed at matrix position (row, col): the path
/// col -> row of the quiver, tensored with t_k.
struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t t = 0;
    bool operator<(const MatrixEntry& o) const {
        return std::tie(row, col, t) < std::tie(o.row, o.col, o.t);
    }
};

/// An algebra of T-valued matrices over a set of vertices, with one entry
/// per basis element (in basis order).
struct MatrixPresentation {
    AlgebraPtr algebra;
    AlgebraPtr base;
    std::vector<std::size_t> vertices;
    std::vector<MatrixEntry> entries;
};

/// T at a single vertex.
MatrixPresentation base_presentation(const AlgebraPtr& t, std::size_t vertex);

/// Whether there is a path from `from` to `to` (every vertex reaches itself).
using Reach = std::function<bool(std::size_t from, std::size_t to)>;

/// (top 0; M bottom) where M holds the entries (i, j) with i in bottom, j in
/// top and a path j -> i. Throws if some bottom vertex reaches a top vertex.
struct Glued {
    TriangularContext context;
    MatrixPresentation presentation;
};
Glued glue(const MatrixPresentation& top, const MatrixPresentation& bottom, const Reach& reach);

/// Columns: the basis of `from` in `to` coordinates, matched by entry.
/// Throws if the entry sets differ.
Matrix presentation_map(const MatrixPresentation& from, const MatrixPresentation& to);

/// T (x) kQ as built by tensor_with_path_algebra, with the entry of each
/// basis element t (x) p read off from the endpoints of the path p.
MatrixPresentation path_algebra_presentation(const AlgebraPtr& t, const QuiverAnSpec& spec);

/// Path relation of the quiver of type A_n given by spec.
Reach an_reach(const QuiverAnSpec& spec);

/// Lower (j <= i) and upper (j >= i) triangular matrices over T, built by
/// the same gluing as bn and bn_prime.
MatrixPresentation lower_triangular_presentation(const AlgebraPtr& t, std::size_t n);
MatrixPresentation upper_triangular_presentation(const AlgebraPtr& t, std::size_t n);

struct TriangularResult {
    TriangularContext context;
    LITCertificate certificate;
    LITCertificate cert_t, cert_u;  // inputs of the construction
};

/// (k 0; M U) for M an indecomposable projective U-module. Without cert_u,
/// U must be self-injective and is taken with D = mod U at level 0.
TriangularResult one_point_extension(const AlgebraPtr& u, const Module& m, Rng& rng,
                                     std::optional<LITCertificate> cert_u = std::nullopt);

/// (T 0; T T).
TriangularResult ttt(const AlgebraPtr& t, const LITCertificate& cert_t, Rng& rng);

struct TowerStep {
    std::size_t vertex = 0;           // vertex added at this step
    std::size_t prefix_vertices = 0;  // vertices present before the step
    std::string kind;                 // "I": new vertex on top, "II": new vertex below
    std::size_t prefix_changes = 0;   // orientation changes inside the prefix
    std::size_t t_dim = 0, u_dim = 0, m_dim = 0, dim = 0;
    MHypotheses hypotheses;
    bool strict = false;   // all hypotheses as stated
    bool relaxed = false;  // M (x) P indecomposable or zero
    std::size_t level = 0;
    std::size_t generators = 0;
};

struct TowerPlan {
    AlgebraPtr base;
    QuiverAnSpec spec;
    std::vector<TowerStep> steps;
    bool strict() const;
};

struct TowerResult {
    MatrixPresentation presentation;
    LITCertificate certificate;
    TowerPlan plan;
    // The last 2x2 presentation and its input certificates.
    std::optional<TriangularContext> last_context;
    LITCertificate last_t, last_u;
};

/// B_n = (T 0; M_{n-1} B_{n-1}); level(cert_t) + n - 1.
TowerResult bn(const AlgebraPtr& t, const LITCertificate& cert_t, std::size_t n, Rng& rng,
               TensorClause clause = TensorClause::strict);

/// B_n' = (B_{n-1}' 0; M T) with M the last row, glued from vertex 1 upward.
TowerResult bn_prime(const AlgebraPtr& t, const LITCertificate& cert_t, std::size_t n, Rng& rng,
                     TensorClause clause = TensorClause::strict);

/// T (x) kQ for Q of type A_n, built vertex by vertex. When the arrow at the
/// new vertex m points towards m-1 (Case I), m goes on top of the prefix;
/// otherwise (Case II) below it.
TowerResult tensor_an(const AlgebraPtr& t, const LITCertificate& cert_t, const QuiverAnSpec& spec,
                      Rng& rng, TensorClause clause = TensorClause::strict);

/// C_n = M_n (x)_T X for the column bimodule M_n = (T ... T)^t over the lower
/// (or upper) triangular matrices of size n.
struct ColumnTensor {
    MatrixPresentation presentation;
    Module module;
};
ColumnTensor mn_tensor(const AlgebraPtr& t, std::size_t n, const Module& x, bool upper = false);

/// Condition (a) and condition (b) on the standard suite for the tower's
/// certificate, with constructive witnesses tried before the search.
SuiteReport verify_tower(const TowerResult& r, std::size_t random_count, std::size_t min_size,
                         std::size_t budget_factor, std::size_t jobs, std::uint64_t seed);

SuiteReport verify_triangular(const TriangularResult& r, std::size_t random_count,
                              std::size_t min_size, std::size_t budget_factor, std::size_t jobs,
                              std::uint64_t seed);

}  // namespace litalg
