#pragma once

// The Igusa-Todorov function: isoclass registry, the syzygy operator on the
// free group of non-projective indecomposables, rank sequences and phi.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "litalg/module.hpp"

namespace litalg {

using ClassId = std::size_t;
using StableClassSet = std::set<ClassId>;
/// Integer combination of classes.
using ClassVector = std::map<ClassId, std::int64_t>;

/// Registry of pairwise non-isomorphic indecomposable representatives.
/// Not synchronized: use one table per thread.
class IsoClassTable {
  public:
    /// Returns the id of the class of an indecomposable module, registering
    /// it when new.
    ClassId lookup(const Module& indecomposable, Rng& rng);
    std::optional<ClassId> find(const Module& indecomposable, Rng& rng) const;

    const Module& representative(ClassId id) const { return entries_[id].rep; }
    bool projective(ClassId id) const { return entries_[id].projective; }
    std::size_t size() const { return entries_.size(); }

    /// [Omega X] for the class X, projective parts dropped. Cached.
    const ClassVector& omega(ClassId id, Rng& rng);

  private:
    struct Entry {
        Module rep;
        std::vector<std::size_t> dimvec;
        bool projective = false;
        std::optional<ClassVector> omega;
    };
    std::vector<Entry> entries_;
};

/// Summand classes of m with multiplicities, projective parts included.
ClassVector class_vector(const Module& m, IsoClassTable& table, Rng& rng);

/// <m>: identifiers of the non-projective indecomposable summands.
StableClassSet bracket(const Module& m, IsoClassTable& table, Rng& rng);

/// Union of the supports of L applied to each class.
StableClassSet apply_L(const StableClassSet& s, IsoClassTable& table, Rng& rng);

/// Rank over Q of a list of integer class vectors.
std::size_t class_rank(const std::vector<ClassVector>& vs);

/// [rk <m>, rk L<m>, ..., rk L^kmax <m>] with L^k<m> the subgroup spanned by
/// the images of the generators of <m>.
std::vector<std::size_t> rank_sequence(const Module& m, std::size_t kmax, IsoClassTable& table,
                                       Rng& rng);

struct PhiResult {
    std::size_t value = 0;
    std::vector<std::size_t> ranks;  // computed prefix of the rank sequence
    /// True when the classes reachable by syzygies formed a finite set, which
    /// makes the value exact. Otherwise the first repeat plus two guard steps
    /// was used.
    bool exact = true;
};

PhiResult phi(const Module& m, IsoClassTable& table, Rng& rng);
/// phi of the direct sum of the list.
PhiResult phi_dim(const std::vector<Module>& gens, IsoClassTable& table, Rng& rng);

}  // namespace litalg
