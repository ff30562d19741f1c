#include "litalg/litcore.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "litalg/sampling.hpp"

namespace litalg {

namespace {

constexpr std::size_t kRandomSurjectionTries = 24;
constexpr std::size_t kExhaustiveLimit = 4096;
constexpr std::size_t kSurjectionsPerCandidate = 4;
constexpr std::size_t kCandidateCap = 3000;
constexpr std::size_t kMultisetCap = 200000;

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

// Indecomposable summands with one representative per iso class.
std::vector<Module> unique_parts(const std::vector<Module>& ms, Rng& rng) {
    std::vector<Module> out;
    for (const auto& m : ms) {
        if (!m.valid() || m.dim() == 0)
            continue;
        for (const auto& part : decompose(m, rng).parts) {
            bool seen = false;
            for (const auto& o : out)
                if (o.dimension_vector() == part.module.dimension_vector() &&
                    isomorphic_indecomposables(o, part.module, rng)) {
                    seen = true;
                    break;
                }
            if (!seen)
                out.push_back(part.module);
        }
    }
    return out;
}

bool iso_to_any(const Module& x, const std::vector<Module>& list, Rng& rng) {
    auto dv = x.dimension_vector();
    for (const auto& o : list)
        if (o.dimension_vector() == dv && isomorphic_indecomposables(o, x, rng))
            return true;
    return false;
}

bool annihilated_by(const Module& x, const Vec& e) {
    return x.dim() == 0 || x.act_by(e).is_zero();
}

// Idempotent indices i with e * e_i = e_i.
std::vector<std::size_t> idempotents_in(const AlgebraPtr& a, const Vec& e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        if (a->multiply(e, a->idempotent(i)) == a->idempotent(i))
            out.push_back(i);
    return out;
}

// Projectives of A / AeA: P_i modulo the submodule generated by e * P_i.
std::vector<Module> marker_projectives(const AlgebraPtr& a, const Vec& e) {
    std::vector<Module> out;
    auto in_e = idempotents_in(a, e);
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        if (std::find(in_e.begin(), in_e.end(), i) != in_e.end())
            continue;
        Module p = projective_indecomposable(a, i);
        Matrix ep = image_basis(p.act_by(e));
        auto sub = generated_submodule(p, ep);
        out.push_back(quotient(p, sub.inclusion).module);
    }
    return out;
}

std::vector<std::size_t> top_multiplicities(const Module& m) {
    if (m.dim() == 0)
        return std::vector<std::size_t>(m.algebra()->idempotent_count(), 0);
    return radical_and_top(m).top.module.dimension_vector();
}

bool dominates(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i])
            return false;
    return true;
}

Module level_syzygy(const Module& m, std::size_t n) {
    return n == 0 ? m : syzygy(m, n);
}

}  // namespace

bool LITCertificate::all_modules() const {
    return all_annihilated_by && is_zero_vec(*all_annihilated_by);
}

LITCertificate LITCertificate::make(AlgebraPtr a, std::size_t n, std::vector<Module> gens,
                                    Module v) {
    for (const auto& g : gens)
        if (g.algebra() != a)
            throw InvalidInput("certificate: generator over a different algebra");
    if (v.valid() && v.algebra() != a)
        throw InvalidInput("certificate: V over a different algebra");
    LITCertificate c;
    c.n = n;
    c.d_generators = std::move(gens);
    c.v = v.valid() ? std::move(v) : Module::zero(a);
    c.algebra = std::move(a);
    return c;
}

LITCertificate LITCertificate::make_all_modules(AlgebraPtr a, std::size_t n, Module v) {
    auto c = make(a, n, {}, std::move(v));
    c.all_annihilated_by = Vec(c.algebra->dim(), 0);
    return c;
}

bool is_self_injective(const AlgebraPtr& a) {
    const Field f = a->field();
    std::vector<std::size_t> socle_vertex;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        Module p = projective_indecomposable(a, i);
        std::vector<Matrix> arrows;
        for (std::size_t g = a->idempotent_count(); g < a->generator_count(); ++g)
            arrows.push_back(p.generator_action(g));
        Matrix soc = arrows.empty() ? Matrix::identity(f, p.dim())
                                    : kernel_basis(Matrix::vstack(f, p.dim(), arrows));
        if (soc.cols() != 1)
            return false;
        Vec s = soc.col(0);
        std::size_t vertex = a->idempotent_count();
        for (std::size_t j = 0; j < a->idempotent_count(); ++j)
            if (p.act_by(a->idempotent(j)).apply(s) == s)
                vertex = j;
        if (vertex == a->idempotent_count())
            return false;
        if (std::find(socle_vertex.begin(), socle_vertex.end(), vertex) != socle_vertex.end())
            return false;
        socle_vertex.push_back(vertex);
    }
    return true;
}

ConditionAReport verify_condition_a(const LITCertificate& cert, Rng& rng) {
    ConditionAReport rep;
    std::ostringstream detail;
    const AlgebraPtr& a = cert.algebra;

    if (cert.all_modules()) {
        bool si = is_self_injective(a);
        rep.syzygy_closed = si;
        rep.phi_zero = si;
        detail << "all modules: self-injective " << (si ? "yes" : "no");
        rep.detail = detail.str();
        return rep;
    }

    std::vector<Module> marker_samples;
    bool marker_ok = true;
    if (cert.all_annihilated_by) {
        const Vec& e = *cert.all_annihilated_by;
        // The class of modules killed by e is syzygy-closed when e*A*(1-e) = 0,
        // and its Phi-dimension is that of the corner (1-e)A(1-e).
        Vec one_minus_e(a->dim());
        for (std::size_t k = 0; k < a->dim(); ++k)
            one_minus_e[k] = a->field().sub(a->unit()[k], e[k]);
        for (std::size_t k = 0; k < a->dim() && marker_ok; ++k)
            if (!is_zero_vec(a->multiply(a->multiply(e, a->basis_vector(k)), one_minus_e)))
                marker_ok = false;
        auto in_e = idempotents_in(a, e);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < a->idempotent_count(); ++i)
            if (std::find(in_e.begin(), in_e.end(), i) == in_e.end())
                rest.push_back(i);
        if (marker_ok && !rest.empty())
            marker_ok = is_self_injective(corner_algebra(a, rest).algebra);
        marker_samples = marker_projectives(a, e);
        for (std::size_t i : rest)
            marker_samples.push_back(simple_module(a, i));
        detail << "annihilator class: " << (marker_ok ? "closed, corner self-injective" : "fails")
               << "; ";
    }

    auto parts = unique_parts(cert.d_generators, rng);
    bool closed = marker_ok;
    for (const auto& p : parts) {
        if (!closed)
            break;
        if (is_projective(p))
            continue;
        Module om = projective_cover(p).syzygy;
        for (const auto& q : decompose(om, rng).parts) {
            if (q.projective || iso_to_any(q.module, parts, rng))
                continue;
            if (cert.all_annihilated_by && annihilated_by(q.module, *cert.all_annihilated_by))
                continue;
            closed = false;
            detail << "syzygy part outside D: " << describe(q.module) << "; ";
            break;
        }
    }
    rep.syzygy_closed = closed;

    IsoClassTable table;
    std::vector<Module> all = parts;
    all.insert(all.end(), marker_samples.begin(), marker_samples.end());
    auto ph = phi_dim(all, table, rng);
    rep.phi = ph.value;
    rep.phi_exact = ph.exact;
    rep.phi_zero = ph.value == 0;
    detail << "generators " << parts.size() << ", phi_dim " << ph.value
           << (ph.exact ? "" : " (not exact)");
    if (!marker_samples.empty())
        detail << ", annihilator class sampled by " << marker_samples.size() << " modules";
    rep.detail = detail.str();
    return rep;
}

MembershipOracle::MembershipOracle(const LITCertificate& cert, Rng& rng) : cert_(&cert) {
    v_parts_ = unique_parts({cert.v}, rng);
    d_parts_ = unique_parts(cert.d_generators, rng);
}

bool MembershipOracle::in_v(const Module& x, Rng& rng) const {
    return x.dim() == 0 || iso_to_any(x, v_parts_, rng);
}

// Projective modules count as members of D: adding them keeps D add-closed,
// syzygy-closed and of Phi-dimension zero.
bool MembershipOracle::in_d(const Module& x, Rng& rng) const {
    if (x.dim() == 0 || is_projective(x))
        return true;
    if (cert_->all_annihilated_by && annihilated_by(x, *cert_->all_annihilated_by))
        return true;
    return iso_to_any(x, d_parts_, rng);
}

namespace {

std::vector<TaggedPart> tag_parts(const Module& x, const MembershipOracle& oracle, Rng& rng,
                                  bool& all_members) {
    std::vector<TaggedPart> out;
    all_members = true;
    if (x.dim() == 0)
        return out;
    for (const auto& part : decompose(x, rng).parts) {
        TaggedPart t{part.module, part.multiplicity, false};
        if (oracle.in_d(part.module, rng)) {
            t.v_part = false;
        } else if (oracle.in_v(part.module, rng)) {
            t.v_part = true;
        } else {
            all_members = false;
            return out;
        }
        out.push_back(std::move(t));
    }
    return out;
}

Module sum_of_parts(const AlgebraPtr& a, const std::vector<TaggedPart>& parts) {
    std::vector<Module> ms;
    for (const auto& t : parts)
        for (std::size_t k = 0; k < t.multiplicity; ++k)
            ms.push_back(t.module);
    return ms.empty() ? Module::zero(a) : direct_sum(a, ms);
}

}  // namespace

ConditionBReport verify_condition_b_witness(const LITCertificate& cert,
                                            const ConditionBWitness& w, Rng& rng) {
    ConditionBReport rep;
    std::ostringstream detail;
    const auto& s = w.sequence;
    rep.exact = check_exact(s);
    if (!rep.exact)
        detail << "sequence not exact; ";
    Module target = level_syzygy(w.target, cert.n);
    rep.right_term = s.right.valid() && s.right.dim() == target.dim() &&
                     (target.dim() == 0 || is_isomorphic(s.right, target, rng));
    if (!rep.right_term)
        detail << "right term is not Omega^" << cert.n << " of the target; ";

    MembershipOracle oracle(cert, rng);
    rep.membership = true;
    auto check_side = [&](const std::vector<TaggedPart>& parts, const Module& x, const char* name) {
        for (const auto& t : parts) {
            bool ok = t.v_part ? oracle.in_v(t.module, rng) : oracle.in_d(t.module, rng);
            if (!ok) {
                rep.membership = false;
                detail << name << " part outside " << (t.v_part ? "add(V)" : "D") << ": "
                       << describe(t.module) << "; ";
                return;
            }
        }
        Module sum = sum_of_parts(cert.algebra, parts);
        if (sum.dim() != x.dim() || (x.dim() && !is_isomorphic(sum, x, rng))) {
            rep.membership = false;
            detail << name << " is not the sum of its tagged parts; ";
        }
    };
    if (s.left.valid() && s.middle.valid()) {
        check_side(w.x1_parts, s.left, "X1");
        check_side(w.x0_parts, s.middle, "X0");
    } else {
        rep.membership = false;
    }
    rep.detail = detail.str();
    return rep;
}

namespace {

struct Candidate {
    Module module;
    bool v_part = false;
    std::vector<std::size_t> dimvec;
    std::vector<std::size_t> top;
};

// Tries to complete a witness from X0 = sum of candidate copies.
std::optional<ConditionBWitness> try_x0(const LITCertificate& cert, const Module& target,
                                        const Module& y, const std::vector<Candidate>& cands,
                                        const std::vector<std::size_t>& counts,
                                        const MembershipOracle& oracle, Rng& rng,
                                        SearchStats* stats) {
    const AlgebraPtr& a = cert.algebra;
    const Field f = a->field();
    std::vector<Module> summands;
    std::vector<std::vector<Matrix>> homs;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!counts[i])
            continue;
        auto h = hom_basis(cands[i].module, y);
        if (h.empty())
            return std::nullopt;  // a summand with no map would need to lie in the kernel
        for (std::size_t k = 0; k < counts[i]; ++k) {
            summands.push_back(cands[i].module);
            homs.push_back(h);
        }
    }
    Module x0 = direct_sum(a, summands);

    // Full span test: all maps together must reach every vector of y.
    {
        std::vector<Matrix> blocks;
        for (std::size_t s = 0; s < summands.size(); ++s)
            for (const auto& h : homs[s])
                blocks.push_back(h);
        if (rank(Matrix::hstack(f, y.dim(), blocks)) < y.dim())
            return std::nullopt;
    }

    auto build = [&](const std::vector<std::vector<Scalar>>& coeffs) {
        std::vector<Matrix> blocks;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            Matrix b(f, y.dim(), summands[s].dim());
            for (std::size_t j = 0; j < homs[s].size(); ++j)
                if (coeffs[s][j])
                    b = b + homs[s][j].scaled(coeffs[s][j]);
            blocks.push_back(std::move(b));
        }
        return Matrix::hstack(f, y.dim(), blocks);
    };

    std::size_t total_hom = 0;
    for (const auto& h : homs)
        total_hom += h.size();
    const std::uint64_t p = f.characteristic();
    std::uint64_t space = 1;
    bool small = true;
    for (std::size_t k = 0; k < total_hom; ++k) {
        space *= p;
        if (space > kExhaustiveLimit) {
            small = false;
            break;
        }
    }

    std::size_t accepted_tries = 0;
    auto attempt = [&](const Matrix& phi) -> std::optional<ConditionBWitness> {
        if (rank(phi) != y.dim())
            return std::nullopt;
        ++accepted_tries;
        if (stats)
            ++stats->surjections;
        auto k = kernel(x0, y, phi);
        bool members = false;
        auto x1_parts = tag_parts(k.module, oracle, rng, members);
        if (!members)
            return std::nullopt;
        bool x0_members = false;
        auto x0_parts = tag_parts(x0, oracle, rng, x0_members);
        if (!x0_members)
            return std::nullopt;
        ConditionBWitness w;
        w.target = target;
        w.sequence = ShortExactSequence{k.module, x0, y, k.inclusion, phi};
        w.x1_parts = std::move(x1_parts);
        w.x0_parts = std::move(x0_parts);
        return w;
    };

    auto random_coeffs = [&]() {
        std::vector<std::vector<Scalar>> c;
        for (const auto& h : homs) {
            std::vector<Scalar> v(h.size());
            for (auto& x : v)
                x = static_cast<Scalar>(rng() % p);
            c.push_back(std::move(v));
        }
        return c;
    };

    if (!small) {
        for (std::size_t t = 0; t < kRandomSurjectionTries; ++t) {
            if (auto w = attempt(build(random_coeffs())))
                return w;
            if (accepted_tries >= kSurjectionsPerCandidate)
                break;
        }
        return std::nullopt;
    }
    // Exhaustive enumeration in odometer order, capped by the number of
    // surjections examined.
    std::vector<Scalar> flat(total_hom, 0);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t k = 0; k < total_hom; ++k) {
            flat[k] = static_cast<Scalar>(v % p);
            v /= p;
        }
        std::vector<std::vector<Scalar>> c;
        std::size_t pos = 0;
        for (const auto& h : homs) {
            c.emplace_back(flat.begin() + pos, flat.begin() + pos + h.size());
            pos += h.size();
        }
        if (auto w = attempt(build(c)))
            return w;
        if (accepted_tries >= 4 * kSurjectionsPerCandidate)
            break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ConditionBWitness> search_condition_b(const LITCertificate& cert,
                                                    const Module& target, std::size_t budget,
                                                    Rng& rng, SearchStats* stats) {
    const AlgebraPtr& a = cert.algebra;
    if (target.algebra() != a)
        throw InvalidInput("search_condition_b: target over a different algebra");
    Module y = level_syzygy(target, cert.n);
    MembershipOracle oracle(cert, rng);

    if (y.dim() == 0) {
        ConditionBWitness w;
        w.target = target;
        Module z = Module::zero(a);
        w.sequence = ShortExactSequence{z, z, y, Matrix(a->field(), 0, 0),
                                        Matrix(a->field(), 0, 0)};
        return w;
    }
    if (budget == 0)
        return std::nullopt;

    if (y.dim() <= budget) {
        bool members = false;
        auto parts = tag_parts(y, oracle, rng, members);
        if (members) {
            ConditionBWitness w;
            w.target = target;
            Module z = Module::zero(a);
            w.sequence = ShortExactSequence{z, y, y, Matrix(a->field(), y.dim(), 0),
                                            Matrix::identity(a->field(), y.dim())};
            w.x0_parts = std::move(parts);
            return w;
        }
    }

    std::vector<Candidate> cands;
    auto add_candidate = [&](const Module& m, bool v_part) {
        if (m.dim() == 0 || m.dim() > budget)
            return;
        for (const auto& c : cands)
            if (c.dimvec == m.dimension_vector() && isomorphic_indecomposables(c.module, m, rng))
                return;
        cands.push_back({m, v_part, m.dimension_vector(), top_multiplicities(m)});
    };
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        add_candidate(projective_indecomposable(a, i), false);
    for (const auto& m : oracle.d_parts())
        add_candidate(m, false);
    if (cert.all_annihilated_by)
        for (const auto& m : marker_projectives(a, *cert.all_annihilated_by))
            for (const auto& part : decompose(m, rng).parts)
                add_candidate(part.module, false);
    for (const auto& m : oracle.v_parts())
        add_candidate(m, true);
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
        return l.module.dim() < r.module.dim();
    });

    const auto y_dv = y.dimension_vector();
    const auto y_top = top_multiplicities(y);
    const std::size_t nv = a->idempotent_count();

    std::vector<std::size_t> counts(cands.size(), 0);
    std::size_t tried = 0, enumerated = 0;
    std::optional<ConditionBWitness> found;

    // Multisets with total dimension exactly d, candidates in list order.
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (found || tried >= kCandidateCap || enumerated >= kMultisetCap)
            return true;
        if (left == 0) {
            ++enumerated;
            std::vector<std::size_t> dv(nv, 0), top(nv, 0);
            for (std::size_t c = 0; c < cands.size(); ++c)
                for (std::size_t v = 0; v < nv; ++v) {
                    dv[v] += counts[c] * cands[c].dimvec[v];
                    top[v] += counts[c] * cands[c].top[v];
                }
            if (!dominates(dv, y_dv) || !dominates(top, y_top))
                return false;
            ++tried;
            if (stats)
                ++stats->candidates;
            found = try_x0(cert, target, y, cands, counts, oracle, rng, stats);
            return found.has_value();
        }
        if (i == cands.size())
            return false;
        const std::size_t d = cands[i].module.dim();
        for (std::size_t c = left / d + 1; c-- > 0;) {
            counts[i] = c;
            if (rec(i + 1, left - c * d)) {
                counts[i] = 0;
                return true;
            }
        }
        counts[i] = 0;
        return false;
    };
    for (std::size_t d = y.dim(); d <= budget && !found; ++d) {
        rec(0, d);
        if (tried >= kCandidateCap || enumerated >= kMultisetCap)
            break;
    }
    return found;
}

AddClosureReport add_closure(const std::vector<Module>& gens, std::size_t budget, Rng& rng) {
    AddClosureReport rep;
    for (const auto& p : unique_parts(gens, rng))
        if (!is_projective(p))
            rep.generators.push_back(p);
    std::size_t next = 0;
    while (next < rep.generators.size()) {
        Module om = projective_cover(rep.generators[next]).syzygy;
        ++next;
        for (const auto& q : decompose(om, rng).parts) {
            if (q.projective || iso_to_any(q.module, rep.generators, rng))
                continue;
            if (rep.added == budget)
                return rep;
            rep.generators.push_back(q.module);
            ++rep.added;
        }
    }
    rep.closed = true;
    return rep;
}

LITCertificate raise_level(const LITCertificate& cert, std::size_t n) {
    if (n < cert.n)
        throw InvalidInput("raise_level: cannot lower the level of a certificate");
    LITCertificate out = cert;
    if (n > cert.n && cert.v.dim())
        out.v = syzygy(cert.v, n - cert.n);
    out.n = n;
    return out;
}

namespace {

void require_verified(const LITCertificate& cert, const AlgebraPtr& a, const char* which,
                      Rng& rng) {
    if (cert.algebra != a)
        throw InvalidInput(std::string("construct: certificate ") + which +
                           " is over a different algebra");
    auto rep = verify_condition_a(cert, rng);
    if (!rep.ok())
        throw InvalidInput(std::string("construct: certificate ") + which +
                           " fails condition (a): " + rep.detail);
}

Module flat_syzygy_of(const TriangularContext& ctx, const Module& a, const Module& b) {
    auto tm = make_triple(ctx, a, b, Matrix());
    return triple_to_flat(ctx, triple_syzygy_formula(ctx, tm, 1));
}

Module flat_of(const TriangularContext& ctx, const Module& a, const Module& b) {
    return triple_to_flat(ctx, make_triple(ctx, a, b, Matrix()));
}

// U-side part of the output marker: modules (0, B, 0) with B killed by e_U'.
Vec lift_u_selector(const TriangularContext& ctx, const Vec& e_u_sel) {
    Vec e = ctx.e_t;
    for (std::size_t k = 0; k < e_u_sel.size(); ++k)
        e[ctx.u_offset() + k] = ctx.lambda->field().add(e[ctx.u_offset() + k], e_u_sel[k]);
    return e;
}

LITCertificate assemble(const TriangularContext& ctx, const LITCertificate& ct,
                        const LITCertificate& cu, bool it_case, Rng& rng) {
    const std::size_t n = std::max(ct.n, cu.n);
    auto t = raise_level(ct, n);
    auto u = raise_level(cu, n);
    std::vector<Module> raw;
    if (!it_case)
        for (const auto& d : unique_parts(t.d_generators, rng))
            raw.push_back(flat_syzygy_of(ctx, d, Module()));
    for (const auto& d : unique_parts(u.d_generators, rng))
        raw.push_back(flat_of(ctx, Module(), d));
    auto gens = unique_parts(raw, rng);
    Module v = flat_syzygy_of(ctx, t.v, u.v);
    auto out = LITCertificate::make(ctx.lambda, n + 1, std::move(gens), v);
    if (u.all_annihilated_by)
        out.all_annihilated_by = lift_u_selector(ctx, *u.all_annihilated_by);
    return out;
}

}  // namespace

LITCertificate lit_construct_triangular(const TriangularContext& ctx, const LITCertificate& cert_t,
                                        const LITCertificate& cert_u, Rng& rng,
                                        TensorClause clause) {
    auto h = check_M_hypotheses(ctx, rng);
    if (!h.left_projective)
        throw InvalidInput("construct: M is not projective as a left U-module");
    if (!h.right_projective)
        throw InvalidInput("construct: M is not projective as a right T-module");
    bool tensor_ok = clause == TensorClause::strict ? h.tensor_indecomposable
                                                    : h.tensor_indecomposable_or_zero();
    if (!tensor_ok) {
        std::string which;
        for (std::size_t i = 0; i < h.per_projective.size(); ++i)
            if (!h.per_projective[i])
                which += " P" + std::to_string(i + 1) + (h.per_projective_zero[i] ? "(zero)" : "");
        throw InvalidInput("construct: M (x)_T P is not indecomposable for" + which);
    }
    if (cert_t.all_annihilated_by)
        throw InvalidInput("construct: an annihilator class for T has no finite syzygy image; "
                           "supply finite generators");
    require_verified(cert_t, ctx.t, "for T", rng);
    require_verified(cert_u, ctx.u, "for U", rng);
    return assemble(ctx, cert_t, cert_u, false, rng);
}

LITCertificate lit_construct_IT_case(const TriangularContext& ctx, const LITCertificate& cert_t,
                                     const LITCertificate& cert_u, Rng& rng) {
    if (!cert_t.d_generators.empty() || cert_t.all_annihilated_by)
        throw InvalidInput("construct (IT case): the class D for T must be {0}");
    auto h = check_M_hypotheses(ctx, rng);
    if (!h.left_projective)
        throw InvalidInput("construct: M is not projective as a left U-module");
    if (!h.right_projective)
        throw InvalidInput("construct: M is not projective as a right T-module");
    require_verified(cert_t, ctx.t, "for T", rng);
    require_verified(cert_u, ctx.u, "for U", rng);
    return assemble(ctx, cert_t, cert_u, true, rng);
}

namespace {

// Component witness whose right term is exactly the given syzygy module.
std::optional<ShortExactSequence> component_sequence(const LITCertificate& cert, const Module& m,
                                                     const Module& omega, Rng& rng) {
    if (omega.dim() == 0) {
        Module z = Module::zero(cert.algebra);
        Matrix e(cert.algebra->field(), 0, 0);
        return ShortExactSequence{z, z, omega, e, e};
    }
    auto w = search_condition_b(cert, m, 4 * std::max(m.dim(), omega.dim()), rng);
    if (!w || w->sequence.right.dim() != omega.dim() ||
        w->sequence.right.actions() != omega.actions())
        return std::nullopt;
    return w->sequence;
}

}  // namespace

std::optional<ConditionBWitness> constructive_witness(const TriangularContext& ctx,
                                                      const LITCertificate& cert_t,
                                                      const LITCertificate& cert_u,
                                                      const LITCertificate& cert_lambda,
                                                      const Module& target, Rng& rng) {
    const std::size_t n = std::max(cert_t.n, cert_u.n);
    if (n == 0 || cert_lambda.n != n + 1 || target.algebra() != ctx.lambda)
        return std::nullopt;
    const Field f = ctx.lambda->field();
    auto t = raise_level(cert_t, n);
    auto u = raise_level(cert_u, n);
    auto tm = flat_to_triple(ctx, target);

    auto cov = projective_cover(level_syzygy(tm.a, n - 1));
    const Module& omega_a = cov.syzygy;
    Module omega_b = level_syzygy(tm.b, n);
    auto sa = component_sequence(t, tm.a, omega_a, rng);
    auto sb = component_sequence(u, tm.b, omega_b, rng);
    if (!sa || !sb)
        return std::nullopt;

    // (X1, 0, 0) -> (X0, M(x)P, 1(x)(i beta)) -> (Omega^n A, M(x)P, 1(x)i), then
    // (0, X1', 0) -> (0, X0', 0) -> (0, Omega^n B, 0).
    auto tp = tensor_over_T(ctx.m, cov.cover);
    auto tw = tensor_over_T(ctx.m, omega_a);
    auto tx0 = tensor_over_T(ctx.m, sa->middle);
    TripleModule f1{omega_a, tp.module, tensor_map(ctx.m, tw, tp, cov.syzygy_inclusion)};
    TripleModule y1{sa->middle, tp.module,
                    tensor_map(ctx.m, tx0, tp, cov.syzygy_inclusion * sa->surject)};
    TripleModule k1 = make_triple(ctx, sa->left, Module(), Matrix());
    TripleModule f2 = make_triple(ctx, Module(), omega_b, Matrix());
    TripleModule y2 = make_triple(ctx, Module(), sb->middle, Matrix());
    TripleModule k2 = make_triple(ctx, Module(), sb->left, Matrix());
    const std::size_t dp = tp.module.dim();

    Matrix s1 = Matrix::block_diagonal(f, {sa->surject, Matrix::identity(f, dp)});
    Matrix i1 = Matrix::vstack(f, sa->left.dim(), {sa->inject, Matrix(f, dp, sa->left.dim())});
    Module big_f = direct_sum(ctx.lambda, {triple_to_flat(ctx, f1), triple_to_flat(ctx, f2)});
    Module big_y = direct_sum(ctx.lambda, {triple_to_flat(ctx, y1), triple_to_flat(ctx, y2)});
    Module big_k = direct_sum(ctx.lambda, {triple_to_flat(ctx, k1), triple_to_flat(ctx, k2)});
    ShortExactSequence delta{big_k, big_y, big_f, Matrix::block_diagonal(f, {i1, sb->inject}),
                             Matrix::block_diagonal(f, {s1, sb->surject})};
    if (!check_exact(delta))
        return std::nullopt;

    auto hs = horseshoe(delta);
    MembershipOracle oracle(cert_lambda, rng);
    bool ok1 = false, ok0 = false;
    ConditionBWitness w;
    w.target = target;
    w.x1_parts = tag_parts(hs.sequence.left, oracle, rng, ok1);
    w.x0_parts = tag_parts(hs.sequence.middle, oracle, rng, ok0);
    if (!ok1 || !ok0)
        return std::nullopt;
    w.sequence = hs.sequence;
    return w;
}

std::vector<Module> standard_suite(const AlgebraPtr& a, std::size_t random_count,
                                   std::size_t min_size, Rng& rng) {
    std::vector<Module> out;
    std::vector<Module> base;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        base.push_back(simple_module(a, i));
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        base.push_back(projective_indecomposable(a, i));
    out = base;
    for (const auto& m : base) {
        Module cur = m;
        for (int k = 1; k <= 3; ++k) {
            cur = projective_cover(cur).syzygy;
            if (cur.dim() == 0)
                break;
            out.push_back(cur);
        }
    }
    for (std::size_t k = 0; k < random_count; ++k)
        out.push_back(random_module(a, 6, rng));
    while (out.size() < min_size)
        out.push_back(random_module(a, 6, rng));
    return out;
}

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.verified; }));
}

SuiteReport verify_suite(const LITCertificate& cert, const std::vector<Module>& targets,
                         std::size_t budget_factor, std::size_t jobs, std::uint64_t seed,
                         const WitnessBuilder& builder) {
    SuiteReport rep;
    {
        Rng rng(seed);
        rep.condition_a = verify_condition_a(cert, rng);
    }
    rep.entries.resize(targets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= targets.size())
                return;
            Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
            SuiteEntry& e = rep.entries[i];
            e.index = i;
            e.target_dim = targets[i].dim();
            e.omega_dim = level_syzygy(targets[i], cert.n).dim();
            std::optional<ConditionBWitness> w;
            if (builder) {
                w = builder(targets[i], rng);
                if (w && !verify_condition_b_witness(cert, *w, rng).ok())
                    w.reset();
                e.constructive = w.has_value();
            }
            if (!w)
                w = search_condition_b(cert, targets[i], budget_factor * targets[i].dim(), rng);
            e.found = w.has_value();
            if (w) {
                e.verified = verify_condition_b_witness(cert, *w, rng).ok();
                e.x0_dim = w->sequence.middle.dim();
                e.x1_dim = w->sequence.left.dim();
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, targets.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return rep;
}

}  // namespace litalg
