#pragma once

// Left modules over an Algebra: morphisms, radicals, projective covers,
// syzygies, Krull-Schmidt decomposition, isomorphism tests and the
// Horseshoe construction.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "litalg/algebra.hpp"

namespace litalg {

using Rng = std::mt19937_64;

/// A finite-dimensional left module. Stores the action of every basis
/// element of the algebra and of every generator; copies share the data.
class Module {
  public:
    Module() = default;

    /// Validated construction from one matrix per generator (idempotents,
    /// then arrows). Throws InvalidInput naming a violated relation.
    static Module from_generator_actions(AlgebraPtr a, std::size_t dim,
                                         const std::vector<Matrix>& generators);
    /// Validated construction from one matrix per basis element.
    static Module from_basis_actions(AlgebraPtr a, std::size_t dim, std::vector<Matrix> actions);
    /// Unchecked construction for actions produced by the library itself.
    static Module trusted(AlgebraPtr a, std::size_t dim, std::vector<Matrix> actions);
    static Module zero(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return d_->algebra; }
    const Field& field() const { return d_->algebra->field(); }
    std::size_t dim() const { return d_ ? d_->dim : 0; }
    bool valid() const { return static_cast<bool>(d_); }

    const Matrix& action(std::size_t k) const { return d_->actions[k]; }
    const std::vector<Matrix>& actions() const { return d_->actions; }
    const Matrix& generator_action(std::size_t g) const { return d_->generators[g]; }
    Matrix act_by(const Vec& x) const;

    /// dim e_i M for each idempotent.
    std::vector<std::size_t> dimension_vector() const;

    /// Full check of the module axioms.
    void validate() const;

  private:
    struct Data {
        AlgebraPtr algebra;
        std::size_t dim = 0;
        std::vector<Matrix> actions;
        std::vector<Matrix> generators;
    };
    std::shared_ptr<const Data> d_;
};

struct Morphism {
    Module source;
    Module target;
    Matrix matrix;  // target.dim() x source.dim()
};

bool is_morphism(const Module& m, const Module& n, const Matrix& f);

struct ShortExactSequence {
    Module left, middle, right;
    Matrix inject;   // middle x left
    Matrix surject;  // right x middle
};

struct ProjectiveCoverData {
    Module cover;
    Matrix epi;  // m.dim() x cover.dim()
    Module syzygy;
    Matrix syzygy_inclusion;  // cover.dim() x syzygy.dim()
    std::vector<std::size_t> vertices;  // summand P(vertices[j]) for each top vector
    std::vector<Vec> top_vectors;
};

struct Submodule {
    Module module;
    Matrix inclusion;  // ambient coordinates of the basis
};

struct Quotient {
    Module module;
    Matrix projection;  // quotient.dim() x ambient.dim()
    Matrix section;     // ambient.dim() x quotient.dim(), a linear right inverse
};

struct RadicalTop {
    Submodule radical;
    Quotient top;
};

struct DecompositionPart {
    Module module;
    std::size_t multiplicity = 1;
    bool projective = false;
};

struct DecompositionResult {
    std::vector<DecompositionPart> parts;
    std::size_t part_count() const;
};

struct PdResult {
    std::size_t value = 0;
    bool finite = true;  // false: at least `value`
};

Module projective_indecomposable(const AlgebraPtr& a, std::size_t i);
Module simple_module(const AlgebraPtr& a, std::size_t i);
Module regular_module(const AlgebraPtr& a);

std::vector<Matrix> hom_basis(const Module& m, const Module& n);
Matrix random_combination(const Field& f, const std::vector<Matrix>& basis, std::size_t rows,
                          std::size_t cols, Rng& rng);

Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);
/// Actions conjugated by an invertible change of basis p: new = p^-1 * old * p.
Module change_basis(const Module& m, const Matrix& p);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

/// Columns of w must span a submodule.
Submodule submodule(const Module& m, const Matrix& w);
/// Smallest submodule containing the columns of w.
Submodule generated_submodule(const Module& m, const Matrix& w);
Quotient quotient(const Module& m, const Matrix& w);
Submodule kernel(const Module& m, const Module& n, const Matrix& f);

RadicalTop radical_and_top(const Module& m);
ProjectiveCoverData projective_cover(const Module& m);
Module syzygy(const Module& m, std::size_t n);
bool is_projective(const Module& m);
PdResult pd_bounded(const Module& m, std::size_t bound);

/// Krull-Schmidt decomposition; parts grouped by isomorphism class in order
/// of first appearance.
DecompositionResult decompose(const Module& m, Rng& rng);
/// The indecomposable summands with repetitions, ungrouped.
std::vector<Module> split_indecomposables(const Module& m, Rng& rng);
/// Searches End(m) for an element that is neither nilpotent nor invertible.
std::optional<Matrix> find_splitting_endomorphism(const Module& m, Rng& rng);
bool is_indecomposable(const Module& m, Rng& rng);
bool isomorphic_indecomposables(const Module& m, const Module& n, Rng& rng);
bool is_isomorphic(const Module& m, const Module& n, Rng& rng);
/// Parts of two decompositions matched up to isomorphism with multiplicity.
bool same_decomposition(const DecompositionResult& a, const DecompositionResult& b, Rng& rng);

Module strip_projectives(const Module& m, Rng& rng);

bool check_exact(const ShortExactSequence& s);

struct HorseshoeResult {
    ShortExactSequence sequence;  // 0 -> Omega X -> K -> Omega Z -> 0
    Module cover;                 // P_X + P_Z, K is the kernel of its map to Y
};
HorseshoeResult horseshoe(const ShortExactSequence& s);

std::string describe(const Module& m);

}  // namespace litalg
