#include "litalg/itfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace litalg {

namespace {

constexpr std::size_t kClassCap = 256;

using Rational = boost::multiprecision::cpp_rational;

std::vector<ClassVector> apply_L_vectors(const std::vector<ClassVector>& vs, IsoClassTable& table,
                                         Rng& rng) {
    std::vector<ClassVector> out;
    for (const auto& v : vs) {
        ClassVector w;
        for (auto [id, c] : v)
            for (auto [id2, c2] : table.omega(id, rng))
                w[id2] += c * c2;
        for (auto it = w.begin(); it != w.end();)
            it = it->second == 0 ? w.erase(it) : std::next(it);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<ClassVector> generators_of(const StableClassSet& s) {
    std::vector<ClassVector> out;
    for (auto id : s)
        out.push_back(ClassVector{{id, 1}});
    return out;
}

}  // namespace

std::optional<ClassId> IsoClassTable::find(const Module& m, Rng& rng) const {
    auto dv = m.dimension_vector();
    for (ClassId id = 0; id < entries_.size(); ++id) {
        const auto& e = entries_[id];
        if (e.rep.algebra() != m.algebra() || e.dimvec != dv)
            continue;
        if (isomorphic_indecomposables(e.rep, m, rng))
            return id;
    }
    return std::nullopt;
}

ClassId IsoClassTable::lookup(const Module& m, Rng& rng) {
    if (auto id = find(m, rng))
        return *id;
    entries_.push_back({m, m.dimension_vector(), is_projective(m), std::nullopt});
    return entries_.size() - 1;
}

const ClassVector& IsoClassTable::omega(ClassId id, Rng& rng) {
    if (!entries_[id].omega) {
        ClassVector v;
        if (!entries_[id].projective) {
            Module om = projective_cover(entries_[id].rep).syzygy;
            for (auto [cid, mult] : class_vector(om, *this, rng))
                if (!entries_[cid].projective)
                    v[cid] += static_cast<std::int64_t>(mult);
        }
        entries_[id].omega = std::move(v);
    }
    return *entries_[id].omega;
}

ClassVector class_vector(const Module& m, IsoClassTable& table, Rng& rng) {
    ClassVector out;
    for (const auto& part : decompose(m, rng).parts)
        out[table.lookup(part.module, rng)] += static_cast<std::int64_t>(part.multiplicity);
    return out;
}

StableClassSet bracket(const Module& m, IsoClassTable& table, Rng& rng) {
    StableClassSet out;
    for (auto [id, mult] : class_vector(m, table, rng))
        if (!table.projective(id))
            out.insert(id);
    return out;
}

StableClassSet apply_L(const StableClassSet& s, IsoClassTable& table, Rng& rng) {
    StableClassSet out;
    for (auto id : s)
        for (auto [id2, c] : table.omega(id, rng))
            out.insert(id2);
    return out;
}

std::size_t class_rank(const std::vector<ClassVector>& vs) {
    std::map<ClassId, std::size_t> col;
    for (const auto& v : vs)
        for (auto [id, c] : v)
            col.emplace(id, 0);
    std::size_t nc = 0;
    for (auto& [id, idx] : col)
        idx = nc++;
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vs) {
        std::vector<Rational> r(nc);
        for (auto [id, c] : v)
            r[col[id]] = c;
        rows.push_back(std::move(r));
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < nc && rk < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = rk; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size())
            continue;
        std::swap(rows[sel], rows[rk]);
        for (std::size_t r = rk + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            Rational factor = rows[r][c] / rows[rk][c];
            for (std::size_t k = c; k < nc; ++k)
                rows[r][k] -= factor * rows[rk][k];
        }
        ++rk;
    }
    return rk;
}

std::vector<std::size_t> rank_sequence(const Module& m, std::size_t kmax, IsoClassTable& table,
                                       Rng& rng) {
    auto vs = generators_of(bracket(m, table, rng));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k)
            vs = apply_L_vectors(vs, table, rng);
        out.push_back(class_rank(vs));
    }
    return out;
}

namespace {

PhiResult phi_of_classes(const StableClassSet& start, IsoClassTable& table, Rng& rng) {
    PhiResult res;
    // Classes reachable by repeated syzygies. When this set is finite with
    // c elements, L^k<X> lies in the eventual image of L on Q^c for k >= c,
    // where L is injective, so ranks are constant from k = c on.
    StableClassSet reach = start;
    std::vector<ClassId> frontier(start.begin(), start.end());
    bool closed = true;
    while (!frontier.empty()) {
        std::vector<ClassId> next;
        for (auto id : frontier)
            for (auto [id2, c] : table.omega(id, rng))
                if (reach.insert(id2).second)
                    next.push_back(id2);
        if (reach.size() > kClassCap) {
            closed = false;
            break;
        }
        frontier = std::move(next);
    }
    auto vs = generators_of(start);
    if (closed) {
        const std::size_t horizon = reach.size();
        for (std::size_t k = 0; k <= horizon; ++k) {
            if (k)
                vs = apply_L_vectors(vs, table, rng);
            res.ranks.push_back(class_rank(vs));
        }
        std::size_t n = horizon;
        while (n > 0 && res.ranks[n - 1] == res.ranks[horizon])
            --n;
        res.value = n;
        res.exact = true;
    } else {
        res.exact = false;
        res.ranks.push_back(class_rank(vs));
        std::size_t first_repeat = 0;
        bool found = false;
        for (std::size_t k = 1; k <= 4 * kClassCap; ++k) {
            vs = apply_L_vectors(vs, table, rng);
            res.ranks.push_back(class_rank(vs));
            if (!found && res.ranks[k] == res.ranks[k - 1]) {
                found = true;
                first_repeat = k - 1;
            }
            if (found && k >= first_repeat + 3)
                break;
        }
        std::size_t last = res.ranks.size() - 1;
        std::size_t n = last;
        while (n > 0 && res.ranks[n - 1] == res.ranks[last])
            --n;
        res.value = n;
    }
    for (std::size_t k = 1; k < res.ranks.size(); ++k)
        if (res.ranks[k] > res.ranks[k - 1])
            throw std::logic_error("phi: rank sequence increased");
    return res;
}

}  // namespace

PhiResult phi(const Module& m, IsoClassTable& table, Rng& rng) {
    return phi_of_classes(bracket(m, table, rng), table, rng);
}

PhiResult phi_dim(const std::vector<Module>& gens, IsoClassTable& table, Rng& rng) {
    StableClassSet all;
    for (const auto& g : gens) {
        auto b = bracket(g, table, rng);
        all.insert(b.begin(), b.end());
    }
    return phi_of_classes(all, table, rng);
}

}  // namespace litalg
