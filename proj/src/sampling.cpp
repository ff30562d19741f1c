#include "litalg/sampling.hpp"

namespace litalg {

AlgebraPtr truncated_polynomial(Field f, std::size_t n) {
    Quiver q;
    q.vertex_count = 1;
    q.arrows = {{"x", 1, 1}};
    std::string rel = "x";
    for (std::size_t i = 1; i < n; ++i)
        rel += "*x";
    return build_bound_quiver_algebra(q, std::vector<std::string>{rel}, f,
                                      "k[x]/x^" + std::to_string(n));
}

AlgebraPtr dual_numbers(Field f) { return truncated_polynomial(f, 2); }

AlgebraPtr path_algebra_An(Field f, std::size_t n) {
    QuiverAnSpec s;
    s.n = n;
    return build_bound_quiver_algebra(build_quiver_An(s), std::vector<Relation>{}, f,
                                      "A" + std::to_string(n));
}

std::vector<AlgebraPtr> algebra_pool(Field f) {
    std::vector<AlgebraPtr> out;
    out.push_back(ground_field_algebra(f));
    out.push_back(truncated_polynomial(f, 2));
    out.push_back(truncated_polynomial(f, 3));
    out.push_back(path_algebra_An(f, 2));
    out.push_back(path_algebra_An(f, 3));
    QuiverAnSpec s3;
    s3.n = 3;
    out.push_back(build_bound_quiver_algebra(build_quiver_An(s3),
                                             std::vector<std::string>{"a2*a1"}, f, "A3/rad2"));
    Quiver cyc;
    cyc.vertex_count = 2;
    cyc.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    out.push_back(build_bound_quiver_algebra(cyc, std::vector<std::string>{"a*b", "b*a"}, f,
                                             "cycle2"));
    Quiver kr;
    kr.vertex_count = 2;
    kr.arrows = {{"a", 1, 2}, {"b", 1, 2}};
    out.push_back(build_bound_quiver_algebra(kr, std::vector<std::string>{}, f, "Kronecker"));
    return out;
}

namespace {

Matrix random_vectors(const Field& f, std::size_t n, std::size_t k, Rng& rng) {
    Matrix m(f, n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m(i, j) = static_cast<Scalar>(rng() % f.characteristic());
    return m;
}

}  // namespace

Module random_projective(const AlgebraPtr& a, std::size_t max_dim, Rng& rng) {
    std::vector<Module> parts;
    std::size_t dim = 0;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t s = 0; s < count; ++s) {
        auto p = projective_indecomposable(a, rng() % a->idempotent_count());
        if (dim + p.dim() > max_dim)
            continue;
        dim += p.dim();
        parts.push_back(p);
    }
    if (parts.empty()) {
        for (std::size_t i = 0; i < a->idempotent_count(); ++i)
            if (a->projective_basis(i).cols() <= max_dim)
                return projective_indecomposable(a, i);
        throw InvalidInput("random_projective: no projective fits the dimension bound");
    }
    return direct_sum(a, parts);
}

Module random_module(const AlgebraPtr& a, std::size_t max_dim, Rng& rng) {
    const Field f = a->field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Module p = random_projective(a, max_dim + 4, rng);
        Matrix gens = random_vectors(f, p.dim(), rng() % 3, rng);
        Submodule w = generated_submodule(p, gens);
        Module m;
        if (w.module.dim() > 0 && rng() % 3 == 0)
            m = w.module;
        else
            m = quotient(p, w.inclusion).module;
        if (m.dim() > 0 && m.dim() <= max_dim)
            return change_basis(m, random_invertible(f, m.dim(), rng));
    }
    return simple_module(a, rng() % a->idempotent_count());
}

ShortExactSequence random_ses(const AlgebraPtr& a, std::size_t max_dim, Rng& rng) {
    const Field f = a->field();
    Module y = random_module(a, max_dim, rng);
    Submodule w = generated_submodule(y, random_vectors(f, y.dim(), 1 + rng() % 2, rng));
    Quotient q = quotient(y, w.inclusion);
    Matrix p = random_invertible(f, y.dim(), rng);
    Matrix pinv = *inverse(p);
    ShortExactSequence s;
    s.left = w.module;
    s.middle = change_basis(y, p);
    s.right = q.module;
    s.inject = pinv * w.inclusion;
    s.surject = q.projection * p;
    return s;
}

ShortExactSequence corrupt_ses(const ShortExactSequence& s, Rng& rng) {
    const Field f = s.middle.field();
    std::vector<int> kinds;
    if (s.left.dim() && s.right.dim())
        kinds.push_back(0);
    if (s.left.dim())
        kinds.push_back(1);
    if (s.right.dim())
        kinds.push_back(2);
    ShortExactSequence out = s;
    if (kinds.empty()) {
        // all terms zero: make the dimensions inconsistent
        out.right = direct_sum(s.middle.algebra(), {simple_module(s.middle.algebra(), 0)});
        out.surject = Matrix(f, 1, s.middle.dim());
        return out;
    }
    switch (kinds[rng() % kinds.size()]) {
        case 0: {
            // surject += v w^T with w^T inject != 0, so surject * inject != 0
            std::size_t c = rng() % s.left.dim();
            Vec col = s.inject.col(c);
            std::size_t r = 0;
            while (col[r] == 0)
                ++r;
            std::size_t row = rng() % s.right.dim();
            out.surject(row, r) = f.add(out.surject(row, r), 1);
            break;
        }
        case 1: {
            std::size_t c = rng() % s.left.dim();
            for (std::size_t r = 0; r < out.inject.rows(); ++r)
                out.inject(r, c) = 0;
            break;
        }
        default:
            out.surject = Matrix(f, s.surject.rows(), s.surject.cols());
            break;
    }
    return out;
}

TriangularContext random_context(Field f, std::size_t max_dim, Rng& rng) {
    auto pool = algebra_pool(f);
    while (true) {
        auto t = pool[rng() % pool.size()];
        auto u = pool[rng() % pool.size()];
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::size_t dim = 0;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t s = 0; s < count; ++s) {
            std::size_t j = rng() % u->idempotent_count(), i = rng() % t->idempotent_count();
            std::size_t d = u->projective_basis(j).cols() *
                            opposite(t)->projective_basis(i).cols();
            if (dim + d > max_dim)
                continue;
            dim += d;
            pairs.push_back({j, i});
        }
        if (pairs.empty())
            continue;
        return TriangularContext::create(t, u, Bimodule::projective(u, t, pairs));
    }
}

TripleModule random_triple(const TriangularContext& ctx, std::size_t max_dim, Rng& rng,
                           bool projective_b) {
    const Field f = ctx.t->field();
    Module a = rng() % 5 == 0 ? Module::zero(ctx.t) : random_module(ctx.t, max_dim, rng);
    Module b = projective_b ? random_projective(ctx.u, max_dim, rng)
                            : (rng() % 5 == 0 ? Module::zero(ctx.u)
                                              : random_module(ctx.u, max_dim, rng));
    auto tens = tensor_over_T(ctx.m, a);
    auto hom = hom_basis(tens.module, b);
    Matrix fm = random_combination(f, hom, b.dim(), tens.module.dim(), rng);
    return {a, b, fm};
}

}  // namespace litalg
