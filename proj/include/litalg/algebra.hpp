#pragma once

// Finite-dimensional basic algebras over F_p: bound quiver algebras,
// opposites, triangular matrix algebras, tensor products with path algebras
// of type A_n, and corner algebras e*A*e.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "litalg/exactlin.hpp"

namespace litalg {

struct Arrow {
    std::string label;
    std::size_t source = 0;  // 1-based vertex
    std::size_t target = 0;
};

struct Quiver {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;

    void validate() const;
    bool is_type_A() const;
};

enum class Direction { rightward, leftward };

/// A quiver of type A_n whose orientation flips at each change vertex.
struct QuiverAnSpec {
    std::size_t n = 1;
    std::vector<std::size_t> change_vertices;  // sorted, each in (1, n)
    Direction initial = Direction::rightward;

    void validate() const;
};

Quiver build_quiver_An(const QuiverAnSpec& spec);

/// A term c * (a_k * ... * a_1): arrow labels in product order, so the
/// rightmost label is traversed first. A vertex label "e<i>" denotes a
/// trivial path.
struct RelationTerm {
    Scalar coefficient = 1;
    std::vector<std::string> path;
};

struct Relation {
    std::string text;
    std::vector<RelationTerm> terms;
};

/// Parses "b*a - 2 c*d" style relations.
Relation parse_relation(const std::string& text, Field f);

/// A radical generator that is pure with respect to the idempotents:
/// element = e_target * element * e_source.
struct ArrowGenerator {
    std::string label;
    Vec element;
    std::size_t source = 0;  // idempotent index
    std::size_t target = 0;
};

/// Raw presentation handed to Algebra::create.
struct AlgebraData {
    Field field;
    std::string name;
    std::vector<std::string> labels;
    std::vector<Matrix> left_mult;  // left_mult[i] * coords(y) = coords(b_i * y)
    Vec unit;
    std::vector<Vec> idempotents;
    std::vector<std::string> idempotent_labels;
    std::vector<Vec> radical;  // spanning set of the radical
    std::vector<ArrowGenerator> arrows;  // left empty to derive them
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Basic split finite-dimensional algebra with a distinguished complete set
/// of primitive orthogonal idempotents and an explicit radical basis.
///
/// The multiplicative generators are the idempotents followed by the arrows.
/// Every basis element is recorded as a combination of generator words so
/// that modules given by generator actions can be expanded to the full basis.
class Algebra {
  public:
    static AlgebraPtr create(AlgebraData data);

    const Field& field() const { return field_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;

    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
    Matrix left_mult_by(const Vec& x) const;
    Matrix right_mult_by(const Vec& x) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec basis_vector(std::size_t i) const;

    const Vec& unit() const { return unit_; }
    std::size_t idempotent_count() const { return idempotents_.size(); }
    const Vec& idempotent(std::size_t i) const { return idempotents_[i]; }
    const std::vector<std::string>& idempotent_labels() const { return idempotent_labels_; }

    /// Columns form a basis of the radical.
    const Matrix& radical_basis() const { return radical_; }
    std::size_t loewy_length() const { return loewy_length_; }

    const std::vector<ArrowGenerator>& arrows() const { return arrows_; }
    std::size_t generator_count() const { return idempotents_.size() + arrows_.size(); }
    std::string generator_label(std::size_t g) const;
    const Vec& generator(std::size_t g) const;
    std::size_t generator_index(const std::string& label) const;

    /// Words in the generators (product order) whose values form a basis.
    const std::vector<std::vector<std::size_t>>& words() const { return words_; }
    /// b_k = sum_w word_coefficients(w, k) * value(word w).
    const Matrix& word_coefficients() const { return word_coeffs_; }

    /// Basis (columns, algebra coordinates) of the left ideal A*e_i.
    const Matrix& projective_basis(std::size_t i) const { return proj_basis_[i]; }
    /// Left multiplication by each basis element restricted to A*e_i.
    const std::vector<Matrix>& projective_actions(std::size_t i) const {
        return proj_actions_[i];
    }
    /// Coordinates of e_i inside the basis of A*e_i.
    const Vec& projective_top(std::size_t i) const { return proj_top_[i]; }

    /// Scalar by which b_k acts on the simple module at idempotent i.
    Scalar simple_coefficient(std::size_t i, std::size_t k) const { return simple_coeffs_(i, k); }

    /// Structure-constant equality; used by the presentation checks.
    bool same_structure(const Algebra& o) const;

  private:
    Algebra() = default;
    void validate() const;
    void derive_arrows();
    void derive_words();
    void derive_projectives();

    Field field_;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Matrix> left_mult_;
    std::vector<Matrix> right_mult_;
    Vec unit_;
    std::vector<Vec> idempotents_;
    std::vector<std::string> idempotent_labels_;
    Matrix radical_;
    std::size_t loewy_length_ = 0;
    std::vector<ArrowGenerator> arrows_;
    std::vector<std::vector<std::size_t>> words_;
    Matrix word_coeffs_;
    std::vector<Matrix> proj_basis_;
    std::vector<std::vector<Matrix>> proj_actions_;
    std::vector<Vec> proj_top_;
    Matrix simple_coeffs_;
};

/// Quotient of the path algebra by the ideal generated by the relations.
/// Throws InvalidInput for relations with trivial or arrow components, paths
/// that do not compose, or when the arrow ideal is not nilpotent modulo the
/// relations within the path-length bound.
AlgebraPtr build_bound_quiver_algebra(const Quiver& q, const std::vector<Relation>& relations,
                                      Field f, std::string name = {},
                                      std::size_t max_path_length = 48);
AlgebraPtr build_bound_quiver_algebra(const Quiver& q, const std::vector<std::string>& relations,
                                      Field f, std::string name = {});

AlgebraPtr opposite(const AlgebraPtr& a);

/// A U-T-bimodule: left action of U, right action of T. right_action(t)
/// maps coords(m) to coords(m*t).
class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action);

    /// T as a T-T-bimodule.
    static Bimodule regular(const AlgebraPtr& t);
    /// Direct sum of U*e_j (x) e_i*T over the listed (j, i) pairs.
    static Bimodule projective(const AlgebraPtr& u, const AlgebraPtr& t,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
    /// U with right T-action through the algebra map phi (columns: images of
    /// the T basis in U coordinates).
    static Bimodule via_map(const AlgebraPtr& u, const AlgebraPtr& t, const Matrix& phi);
    static Bimodule from_generator_actions(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                                           const std::vector<Matrix>& left_generators,
                                           const std::vector<Matrix>& right_generators);

    const AlgebraPtr& left_algebra() const { return left_; }
    const AlgebraPtr& right_algebra() const { return right_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left_action(std::size_t u) const { return left_action_[u]; }
    const Matrix& right_action(std::size_t t) const { return right_action_[t]; }
    const std::vector<Matrix>& left_actions() const { return left_action_; }
    const std::vector<Matrix>& right_actions() const { return right_action_; }

    void validate() const;

  private:
    AlgebraPtr left_;
    AlgebraPtr right_;
    std::size_t dim_ = 0;
    std::vector<Matrix> left_action_;
    std::vector<Matrix> right_action_;
};

/// Lambda = (T 0; M U). Basis order: T, then U, then M. Idempotents: those of
/// T, then those of U.
AlgebraPtr triangular(const AlgebraPtr& t, const AlgebraPtr& u, const Bimodule& m);

/// Tensor product over F_p; basis (a, b) at index a * dim(B) + b.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// T (x) kQ for a quiver of type A_n without relations.
AlgebraPtr tensor_with_path_algebra(const AlgebraPtr& t, const Quiver& q);

/// The field itself as a one-dimensional algebra.
AlgebraPtr ground_field_algebra(Field f);

/// e*A*e for e the sum of the listed idempotents, with the embedding matrix
/// (columns: corner basis in A coordinates).
struct Corner {
    AlgebraPtr algebra;
    Matrix embedding;
};
Corner corner_algebra(const AlgebraPtr& a, const std::vector<std::size_t>& idempotents);

/// Checks that map (columns: images of a's basis in b coordinates) is a
/// bijective unital algebra homomorphism. A certificate check, not a search.
bool algebras_isomorphic_as_presented(const Algebra& a, const Algebra& b, const Matrix& map);

/// Checks the homomorphism property and unitality only (no bijectivity).
bool is_algebra_map(const Algebra& a, const Algebra& b, const Matrix& map, bool unital);

/// Checks that action (one matrix per basis element) is a representation
/// (left) or an anti-representation (right) with the unit acting as 1.
void check_representation(const Algebra& a, const std::vector<Matrix>& action, std::size_t dim,
                          bool left, const std::string& what);

/// Expands generator actions to all basis elements through the word table.
std::vector<Matrix> expand_generator_actions(const Algebra& a, const std::vector<Matrix>& gens,
                                             std::size_t dim, bool left);

/// Matches basis labels of a into b; throws if any label is missing.
Matrix basis_map_by_labels(const Algebra& a, const Algebra& b,
                           const std::string& suffix = {});

}  // namespace litalg
