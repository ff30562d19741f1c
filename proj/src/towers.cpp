#include "litalg/towers.hpp"

#include <algorithm>
#include <map>

namespace litalg {

namespace {

// Coordinates of t_a * t_b in the base algebra.
Vec base_product(const Algebra& base, std::size_t a, std::size_t b) {
    return base.left_mult(a).col(b);
}

std::map<MatrixEntry, std::size_t> entry_index(const MatrixPresentation& p) {
    std::map<MatrixEntry, std::size_t> idx;
    for (std::size_t i = 0; i < p.entries.size(); ++i)
        idx.emplace(p.entries[i], i);
    return idx;
}

struct ColumnBlock {
    Bimodule m;
    std::vector<MatrixEntry> entries;
};

// The bottom-top bimodule of entries (i, j), i in bottom, j in top, j -> i.
ColumnBlock column_block(const MatrixPresentation& top, const MatrixPresentation& bottom,
                         const Reach& reach) {
    const Algebra& base = *top.base;
    const Field f = base.field();
    const std::size_t dt = base.dim();
    ColumnBlock out;
    for (auto i : bottom.vertices)
        for (auto j : top.vertices)
            if (reach(j, i))
                for (std::size_t k = 0; k < dt; ++k)
                    out.entries.push_back({i, j, k});
    MatrixPresentation tmp;
    tmp.entries = out.entries;
    auto idx = entry_index(tmp);
    const std::size_t dm = out.entries.size();

    // (a, c, s) * (c, j, k) = (a, j, s t_k)
    std::vector<Matrix> left;
    for (const auto& b : bottom.entries) {
        Matrix act(f, dm, dm);
        for (std::size_t col = 0; col < dm; ++col) {
            const auto& e = out.entries[col];
            if (e.row != b.col)
                continue;
            Vec prod = base_product(base, b.t, e.t);
            for (std::size_t r = 0; r < dt; ++r)
                if (prod[r] != 0) {
                    auto it = idx.find({b.row, e.col, r});
                    if (it == idx.end())
                        throw InvalidInput("glue: bottom block leaves the column entries");
                    act(it->second, col) = f.add(act(it->second, col), prod[r]);
                }
        }
        left.push_back(std::move(act));
    }
    // (i, c, k) * (c, d, r) = (i, d, t_k r)
    std::vector<Matrix> right;
    for (const auto& tp : top.entries) {
        Matrix act(f, dm, dm);
        for (std::size_t col = 0; col < dm; ++col) {
            const auto& e = out.entries[col];
            if (e.col != tp.row)
                continue;
            Vec prod = base_product(base, e.t, tp.t);
            for (std::size_t r = 0; r < dt; ++r)
                if (prod[r] != 0) {
                    auto it = idx.find({e.row, tp.col, r});
                    if (it == idx.end())
                        throw InvalidInput("glue: top block leaves the column entries");
                    act(it->second, col) = f.add(act(it->second, col), prod[r]);
                }
        }
        right.push_back(std::move(act));
    }
    out.m = Bimodule(bottom.algebra, top.algebra, dm, std::move(left), std::move(right));
    return out;
}

std::size_t count_changes(const QuiverAnSpec& spec, std::size_t prefix) {
    return static_cast<std::size_t>(std::count_if(
        spec.change_vertices.begin(), spec.change_vertices.end(),
        [&](std::size_t v) { return v < prefix; }));
}

struct Move {
    std::size_t vertex;
    bool on_top;
};

TowerResult run_tower(const AlgebraPtr& t, const LITCertificate* cert_t, std::size_t first,
                      const std::vector<Move>& moves, const Reach& reach,
                      const QuiverAnSpec& spec, TensorClause clause, Rng* rng) {
    TowerResult r;
    r.plan.base = t;
    r.plan.spec = spec;
    r.presentation = base_presentation(t, first);
    if (cert_t)
        r.certificate = *cert_t;
    for (std::size_t s = 0; s < moves.size(); ++s) {
        const auto& mv = moves[s];
        auto single = base_presentation(t, mv.vertex);
        Glued g = mv.on_top ? glue(single, r.presentation, reach) : glue(r.presentation, single, reach);
        TowerStep step;
        step.vertex = mv.vertex;
        step.prefix_vertices = r.presentation.vertices.size();
        step.kind = mv.on_top ? "I" : "II";
        step.prefix_changes = count_changes(spec, step.prefix_vertices);
        step.t_dim = g.context.t->dim();
        step.u_dim = g.context.u->dim();
        step.m_dim = g.context.m.dim();
        step.dim = g.context.lambda->dim();
        if (cert_t) {
            step.hypotheses = check_M_hypotheses(g.context, *rng);
            step.strict = step.hypotheses.all();
            step.relaxed = step.hypotheses.left_projective && step.hypotheses.right_projective &&
                           step.hypotheses.tensor_indecomposable_or_zero();
            const auto& ct = mv.on_top ? *cert_t : r.certificate;
            const auto& cu = mv.on_top ? r.certificate : *cert_t;
            LITCertificate next;
            try {
                next = lit_construct_triangular(g.context, ct, cu, *rng, clause);
            } catch (const InvalidInput& e) {
                throw InvalidInput("tower step " + std::to_string(s + 1) + " (prefix of " +
                                   std::to_string(step.prefix_vertices) + " vertices, adding " +
                                   std::to_string(mv.vertex) + "): " + e.what());
            }
            r.last_t = ct;
            r.last_u = cu;
            r.certificate = std::move(next);
            step.level = r.certificate.n;
            step.generators = r.certificate.d_generators.size();
        }
        r.last_context = g.context;
        r.presentation = std::move(g.presentation);
        r.plan.steps.push_back(std::move(step));
    }
    return r;
}

std::vector<Move> lower_moves(std::size_t n) {
    std::vector<Move> moves;
    for (std::size_t k = n; k-- > 1;)
        moves.push_back({k, true});
    return moves;
}

std::vector<Move> upper_moves(std::size_t n) {
    std::vector<Move> moves;
    for (std::size_t k = 2; k <= n; ++k)
        moves.push_back({k, true});
    return moves;
}

Reach lower_reach() {
    return [](std::size_t j, std::size_t i) { return j <= i; };
}
Reach upper_reach() {
    return [](std::size_t j, std::size_t i) { return j >= i; };
}

QuiverAnSpec equioriented(std::size_t n, Direction d) {
    QuiverAnSpec s;
    s.n = n;
    s.initial = d;
    return s;
}

// Arrow between m-1 and m points from m to m-1.
bool arrow_points_down(const QuiverAnSpec& spec, std::size_t m) {
    bool right = (spec.initial == Direction::rightward) == (count_changes(spec, m) % 2 == 0);
    return !right;
}

}  // namespace

MatrixPresentation base_presentation(const AlgebraPtr& t, std::size_t vertex) {
    MatrixPresentation p;
    p.algebra = t;
    p.base = t;
    p.vertices = {vertex};
    for (std::size_t k = 0; k < t->dim(); ++k)
        p.entries.push_back({vertex, vertex, k});
    return p;
}

Glued glue(const MatrixPresentation& top, const MatrixPresentation& bottom, const Reach& reach) {
    if (top.base.get() != bottom.base.get() && !top.base->same_structure(*bottom.base))
        throw InvalidInput("glue: different base algebras");
    for (auto i : bottom.vertices)
        for (auto j : top.vertices)
            if (reach(i, j))
                throw InvalidInput("glue: vertex " + std::to_string(i) + " below reaches " +
                                   std::to_string(j) + " above");
    auto block = column_block(top, bottom, reach);
    Glued g{TriangularContext::create(top.algebra, bottom.algebra, block.m), {}};
    auto& p = g.presentation;
    p.algebra = g.context.lambda;
    p.base = top.base;
    p.vertices = top.vertices;
    p.vertices.insert(p.vertices.end(), bottom.vertices.begin(), bottom.vertices.end());
    p.entries = top.entries;
    p.entries.insert(p.entries.end(), bottom.entries.begin(), bottom.entries.end());
    p.entries.insert(p.entries.end(), block.entries.begin(), block.entries.end());
    return g;
}

Matrix presentation_map(const MatrixPresentation& from, const MatrixPresentation& to) {
    if (from.entries.size() != to.entries.size())
        throw InvalidInput("presentation_map: different dimensions");
    auto idx = entry_index(to);
    Matrix map(from.algebra->field(), to.entries.size(), from.entries.size());
    for (std::size_t c = 0; c < from.entries.size(); ++c) {
        auto it = idx.find(from.entries[c]);
        if (it == idx.end())
            throw InvalidInput("presentation_map: entry missing in the target");
        map(it->second, c) = 1;
    }
    return map;
}

Reach an_reach(const QuiverAnSpec& spec) {
    spec.validate();
    // down[m]: the arrow between m-1 and m points to m-1
    std::vector<bool> down(spec.n + 1, false);
    for (std::size_t m = 2; m <= spec.n; ++m)
        down[m] = arrow_points_down(spec, m);
    return [down](std::size_t j, std::size_t i) {
        if (j == i)
            return true;
        if (j < i) {
            for (std::size_t m = j + 1; m <= i; ++m)
                if (down[m])
                    return false;
            return true;
        }
        for (std::size_t m = i + 1; m <= j; ++m)
            if (!down[m])
                return false;
        return true;
    };
}

MatrixPresentation path_algebra_presentation(const AlgebraPtr& t, const QuiverAnSpec& spec) {
    auto q = build_quiver_An(spec);
    auto kq = build_bound_quiver_algebra(q, std::vector<Relation>{}, t->field(), "kQ");
    MatrixPresentation p;
    p.algebra = tensor_product(t, kq);
    p.base = t;
    for (std::size_t v = 1; v <= spec.n; ++v)
        p.vertices.push_back(v);
    // vertex of each idempotent of kQ
    std::vector<std::size_t> vertex_of(kq->idempotent_count());
    for (std::size_t i = 0; i < kq->idempotent_count(); ++i)
        vertex_of[i] = std::stoul(kq->idempotent_labels()[i].substr(1));
    std::vector<MatrixEntry> path_entry(kq->dim());
    for (std::size_t b = 0; b < kq->dim(); ++b) {
        bool found = false;
        Vec x = kq->basis_vector(b);
        for (std::size_t i = 0; i < kq->idempotent_count() && !found; ++i)
            for (std::size_t j = 0; j < kq->idempotent_count() && !found; ++j) {
                Vec y = kq->multiply(kq->multiply(kq->idempotent(i), x), kq->idempotent(j));
                if (y == x) {
                    path_entry[b] = {vertex_of[i], vertex_of[j], 0};
                    found = true;
                }
            }
        if (!found)
            throw InvalidInput("path_algebra_presentation: basis element is not a path");
    }
    for (std::size_t a = 0; a < t->dim(); ++a)
        for (std::size_t b = 0; b < kq->dim(); ++b)
            p.entries.push_back({path_entry[b].row, path_entry[b].col, a});
    return p;
}

MatrixPresentation lower_triangular_presentation(const AlgebraPtr& t, std::size_t n) {
    if (n == 0)
        throw InvalidInput("lower_triangular_presentation: n must be at least 1");
    return run_tower(t, nullptr, n, lower_moves(n), lower_reach(), equioriented(n, Direction::rightward),
                     TensorClause::strict, nullptr)
        .presentation;
}

MatrixPresentation upper_triangular_presentation(const AlgebraPtr& t, std::size_t n) {
    if (n == 0)
        throw InvalidInput("upper_triangular_presentation: n must be at least 1");
    return run_tower(t, nullptr, 1, upper_moves(n), upper_reach(), equioriented(n, Direction::leftward),
                     TensorClause::strict, nullptr)
        .presentation;
}

TriangularResult one_point_extension(const AlgebraPtr& u, const Module& m, Rng& rng,
                                     std::optional<LITCertificate> cert_u) {
    if (m.algebra().get() != u.get())
        throw InvalidInput("one_point_extension: module over a different algebra");
    if (m.dim() == 0 || !is_projective(m) || !is_indecomposable(m, rng))
        throw InvalidInput("one_point_extension: M is not an indecomposable projective");
    if (!cert_u) {
        if (!is_self_injective(u))
            throw InvalidInput("one_point_extension: no certificate for U and U is not self-injective");
        cert_u = LITCertificate::make_all_modules(u, 0);
    }
    auto k = ground_field_algebra(u->field());
    std::vector<Matrix> right{Matrix::identity(u->field(), m.dim())};
    Bimodule bm(u, k, m.dim(), m.actions(), right);
    auto ctx = TriangularContext::create(k, u, bm);
    auto cert_k = LITCertificate::make(k, 0, {}, regular_module(k));
    auto cert = lit_construct_IT_case(ctx, cert_k, *cert_u, rng);
    return {ctx, cert, cert_k, *cert_u};
}

TriangularResult ttt(const AlgebraPtr& t, const LITCertificate& cert_t, Rng& rng) {
    auto ctx = TriangularContext::create(t, t, Bimodule::regular(t));
    auto cert = lit_construct_triangular(ctx, cert_t, cert_t, rng);
    return {ctx, cert, cert_t, cert_t};
}

bool TowerPlan::strict() const {
    return std::all_of(steps.begin(), steps.end(), [](const TowerStep& s) { return s.strict; });
}

TowerResult bn(const AlgebraPtr& t, const LITCertificate& cert_t, std::size_t n, Rng& rng,
               TensorClause clause) {
    if (n == 0)
        throw InvalidInput("bn: n must be at least 1");
    return run_tower(t, &cert_t, n, lower_moves(n), lower_reach(),
                     equioriented(n, Direction::rightward), clause, &rng);
}

TowerResult bn_prime(const AlgebraPtr& t, const LITCertificate& cert_t, std::size_t n, Rng& rng,
                     TensorClause clause) {
    if (n == 0)
        throw InvalidInput("bn_prime: n must be at least 1");
    return run_tower(t, &cert_t, 1, upper_moves(n), upper_reach(),
                     equioriented(n, Direction::leftward), clause, &rng);
}

TowerResult tensor_an(const AlgebraPtr& t, const LITCertificate& cert_t, const QuiverAnSpec& spec,
                      Rng& rng, TensorClause clause) {
    spec.validate();
    std::vector<Move> moves;
    for (std::size_t m = 2; m <= spec.n; ++m)
        moves.push_back({m, arrow_points_down(spec, m)});
    return run_tower(t, &cert_t, 1, moves, an_reach(spec), spec, clause, &rng);
}

ColumnTensor mn_tensor(const AlgebraPtr& t, std::size_t n, const Module& x, bool upper) {
    if (x.algebra().get() != t.get())
        throw InvalidInput("mn_tensor: module over a different algebra");
    ColumnTensor out;
    out.presentation = upper ? upper_triangular_presentation(t, n) : lower_triangular_presentation(t, n);
    auto column = base_presentation(t, upper ? n + 1 : 0);
    auto block = column_block(column, out.presentation, [](std::size_t, std::size_t) { return true; });
    out.module = tensor_over_T(block.m, x).module;
    return out;
}

namespace {

SuiteReport verify_with(const LITCertificate& cert, const std::optional<TriangularContext>& ctx,
                        const LITCertificate& ct, const LITCertificate& cu,
                        std::size_t random_count, std::size_t min_size, std::size_t budget_factor,
                        std::size_t jobs, std::uint64_t seed) {
    Rng rng(seed);
    auto targets = standard_suite(cert.algebra, random_count, min_size, rng);
    WitnessBuilder builder;
    if (ctx)
        builder = [&](const Module& target, Rng& r) {
            return constructive_witness(*ctx, ct, cu, cert, target, r);
        };
    return verify_suite(cert, targets, budget_factor, jobs, seed, builder);
}

}  // namespace

SuiteReport verify_tower(const TowerResult& r, std::size_t random_count, std::size_t min_size,
                         std::size_t budget_factor, std::size_t jobs, std::uint64_t seed) {
    return verify_with(r.certificate, r.last_context, r.last_t, r.last_u, random_count, min_size,
                       budget_factor, jobs, seed);
}

SuiteReport verify_triangular(const TriangularResult& r, std::size_t random_count,
                              std::size_t min_size, std::size_t budget_factor, std::size_t jobs,
                              std::uint64_t seed) {
    return verify_with(r.certificate, r.context, r.cert_t, r.cert_u, random_count, min_size,
                       budget_factor, jobs, seed);
}

}  // namespace litalg
