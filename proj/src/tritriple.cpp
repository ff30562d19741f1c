#include "litalg/tritriple.hpp"

#include <algorithm>
#include <sstream>

namespace litalg {

namespace {

Matrix right_generator_action(const Bimodule& m, std::size_t g) {
    const Algebra& t = *m.right_algebra();
    Matrix out(t.field(), m.dim(), m.dim());
    const Vec& e = t.generator(g);
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k])
            out = out + m.right_action(k).scaled(e[k]);
    return out;
}

// rows [off, off + n) of the identity of size total
Matrix row_selector(const Field& f, std::size_t off, std::size_t n, std::size_t total) {
    Matrix p(f, n, total);
    for (std::size_t i = 0; i < n; ++i)
        p(i, off + i) = 1;
    return p;
}

}  // namespace

TriangularContext TriangularContext::create(AlgebraPtr t, AlgebraPtr u, Bimodule m) {
    TriangularContext ctx;
    ctx.lambda = triangular(t, u, m);
    ctx.t_op = opposite(t);
    ctx.t = std::move(t);
    ctx.u = std::move(u);
    ctx.m = std::move(m);
    const Field f = ctx.lambda->field();
    ctx.e_t = Vec(ctx.lambda->dim(), 0);
    ctx.e_u = Vec(ctx.lambda->dim(), 0);
    for (std::size_t i = 0; i < ctx.lambda->idempotent_count(); ++i) {
        Vec& target = i < ctx.t->idempotent_count() ? ctx.e_t : ctx.e_u;
        for (std::size_t k = 0; k < target.size(); ++k)
            target[k] = f.add(target[k], ctx.lambda->idempotent(i)[k]);
    }
    return ctx;
}

TensorResult tensor_over_T(const Bimodule& m, const Module& a) {
    if (a.algebra() != m.right_algebra())
        throw InvalidInput("tensor_over_T: module is not over the right algebra of M");
    const Algebra& t = *m.right_algebra();
    const AlgebraPtr& u = m.left_algebra();
    const Field f = t.field();
    const std::size_t dm = m.dim(), da = a.dim(), n = dm * da;
    TensorResult out;
    if (n == 0) {
        out.module = Module::zero(u);
        out.projection = Matrix(f, 0, n);
        out.section = Matrix(f, n, 0);
        return out;
    }
    // balancing relations m*t (x) x - m (x) t*x for every generator t
    std::vector<Matrix> rels;
    const Matrix id_a = Matrix::identity(f, da), id_m = Matrix::identity(f, dm);
    for (std::size_t g = 0; g < t.generator_count(); ++g)
        rels.push_back(Matrix::kronecker(right_generator_action(m, g), id_a) -
                       Matrix::kronecker(id_m, a.generator_action(g)));
    Matrix w = image_basis(Matrix::hstack(f, n, rels));
    Matrix c = complement_basis(w);
    Matrix inv = *inverse(Matrix::hstack(f, n, {w, c}));
    out.projection = inv.block(w.cols(), 0, c.cols(), n);
    out.section = c;
    if (c.cols() == 0) {
        out.module = Module::zero(u);
        return out;
    }
    std::vector<Matrix> acts;
    for (std::size_t j = 0; j < u->dim(); ++j)
        acts.push_back(out.projection * Matrix::kronecker(m.left_action(j), id_a) * c);
    out.module = Module::trusted(u, c.cols(), std::move(acts));
    return out;
}

Matrix tensor_map(const Bimodule& m, const TensorResult& src, const TensorResult& dst,
                  const Matrix& alpha) {
    const Field f = m.left_algebra()->field();
    return dst.projection * Matrix::kronecker(Matrix::identity(f, m.dim()), alpha) * src.section;
}

TripleModule make_triple(const TriangularContext& ctx, Module a, Module b, Matrix f) {
    TripleModule tm;
    tm.a = a.valid() ? std::move(a) : Module::zero(ctx.t);
    tm.b = b.valid() ? std::move(b) : Module::zero(ctx.u);
    if (f.rows() == 0 && f.cols() == 0)
        f = Matrix(ctx.t->field(), tm.b.dim(), tensor_over_T(ctx.m, tm.a).module.dim());
    tm.f = std::move(f);
    validate_triple(ctx, tm);
    return tm;
}

void validate_triple(const TriangularContext& ctx, const TripleModule& tm) {
    if (tm.a.algebra() != ctx.t || tm.b.algebra() != ctx.u)
        throw InvalidInput("triple: components over the wrong algebras");
    auto tens = tensor_over_T(ctx.m, tm.a);
    if (tm.f.rows() != tm.b.dim() || tm.f.cols() != tens.module.dim())
        throw InvalidInput("triple: f has the wrong shape");
    if (!is_morphism(tens.module, tm.b, tm.f))
        throw InvalidInput("triple: f is not a morphism of U-modules");
}

Module triple_to_flat(const TriangularContext& ctx, const TripleModule& tm) {
    const Field f = ctx.t->field();
    const std::size_t da = tm.a.dim(), db = tm.b.dim(), d = da + db;
    auto tens = tensor_over_T(ctx.m, tm.a);
    if (tm.f.rows() != db || tm.f.cols() != tens.module.dim())
        throw InvalidInput("triple_to_flat: f has the wrong shape");
    Matrix fp = tm.f * tens.projection;  // on the plain tensor space
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < ctx.t->dim(); ++k) {
        Matrix x(f, d, d);
        if (da)
            x.set_block(0, 0, tm.a.action(k));
        acts.push_back(std::move(x));
    }
    for (std::size_t j = 0; j < ctx.u->dim(); ++j) {
        Matrix x(f, d, d);
        if (db)
            x.set_block(da, da, tm.b.action(j));
        acts.push_back(std::move(x));
    }
    for (std::size_t k = 0; k < ctx.m.dim(); ++k) {
        Matrix x(f, d, d);
        if (da && db)
            x.set_block(da, 0, fp.block(0, k * da, db, da));
        acts.push_back(std::move(x));
    }
    return Module::trusted(ctx.lambda, d, std::move(acts));
}

TripleModule flat_to_triple(const TriangularContext& ctx, const Module& x) {
    if (x.algebra() != ctx.lambda)
        throw InvalidInput("flat_to_triple: module is not over the triangular algebra");
    const Field f = ctx.t->field();
    Matrix pa = image_basis(x.act_by(ctx.e_t));
    Matrix pb = image_basis(x.act_by(ctx.e_u));
    const std::size_t da = pa.cols(), db = pb.cols();
    Matrix pa_inv = da ? left_inverse(pa) : Matrix(f, 0, x.dim());
    Matrix pb_inv = db ? left_inverse(pb) : Matrix(f, 0, x.dim());
    TripleModule tm;
    if (da) {
        std::vector<Matrix> acts;
        for (std::size_t k = 0; k < ctx.t->dim(); ++k)
            acts.push_back(pa_inv * x.action(ctx.t_offset() + k) * pa);
        tm.a = Module::trusted(ctx.t, da, std::move(acts));
    } else {
        tm.a = Module::zero(ctx.t);
    }
    if (db) {
        std::vector<Matrix> acts;
        for (std::size_t j = 0; j < ctx.u->dim(); ++j)
            acts.push_back(pb_inv * x.action(ctx.u_offset() + j) * pb);
        tm.b = Module::trusted(ctx.u, db, std::move(acts));
    } else {
        tm.b = Module::zero(ctx.u);
    }
    auto tens = tensor_over_T(ctx.m, tm.a);
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < ctx.m.dim(); ++k)
        blocks.push_back(pb_inv * x.action(ctx.m_offset() + k) * pa);
    Matrix big = Matrix::hstack(f, db, blocks);
    tm.f = big * tens.section;
    return tm;
}

TripleModule triple_direct_sum(const TriangularContext& ctx,
                               const std::vector<TripleModule>& parts) {
    const Field f = ctx.t->field();
    std::vector<Module> as, bs;
    std::size_t da = 0;
    for (const auto& p : parts) {
        as.push_back(p.a);
        bs.push_back(p.b);
        da += p.a.dim();
    }
    TripleModule out;
    out.a = direct_sum(ctx.t, as);
    out.b = direct_sum(ctx.u, bs);
    auto tens = tensor_over_T(ctx.m, out.a);
    std::vector<Matrix> rows;
    std::size_t off = 0;
    const Matrix id_m = Matrix::identity(f, ctx.m.dim());
    for (const auto& p : parts) {
        auto ti = tensor_over_T(ctx.m, p.a);
        Matrix sel = Matrix::kronecker(id_m, row_selector(f, off, p.a.dim(), da));
        rows.push_back(p.f * ti.projection * sel);
        off += p.a.dim();
    }
    Matrix big = Matrix::vstack(f, ctx.m.dim() * da, rows);
    out.f = big * tens.section;
    return out;
}

std::vector<TripleModule> triple_projectives(const TriangularContext& ctx) {
    const Field f = ctx.t->field();
    std::vector<TripleModule> out;
    for (std::size_t i = 0; i < ctx.t->idempotent_count(); ++i) {
        Module p = projective_indecomposable(ctx.t, i);
        auto tens = tensor_over_T(ctx.m, p);
        out.push_back({p, tens.module, Matrix::identity(f, tens.module.dim())});
    }
    for (std::size_t j = 0; j < ctx.u->idempotent_count(); ++j) {
        Module q = projective_indecomposable(ctx.u, j);
        out.push_back({Module::zero(ctx.t), q, Matrix(f, q.dim(), 0)});
    }
    return out;
}

std::string TripleExactReport::to_string() const {
    std::ostringstream os;
    os << "squares commute: " << (squares_commute ? "yes" : "NO")
       << "; A-row exact: " << (a_row_exact ? "yes" : "NO")
       << "; tensor row exact: " << (tensor_row_exact ? "yes" : "NO")
       << "; B-row exact: " << (b_row_exact ? "yes" : "NO");
    return os.str();
}

TripleExactReport triple_exact(const TriangularContext& ctx, const TripleSequence& s) {
    TripleExactReport r;
    auto t1 = tensor_over_T(ctx.m, s.x1.a);
    auto t2 = tensor_over_T(ctx.m, s.x2.a);
    auto t3 = tensor_over_T(ctx.m, s.x3.a);
    auto shape_ok = [](const Matrix& x, std::size_t rows, std::size_t cols) {
        return x.rows() == rows && x.cols() == cols;
    };
    if (!shape_ok(s.g1.alpha, s.x2.a.dim(), s.x1.a.dim()) ||
        !shape_ok(s.g2.alpha, s.x3.a.dim(), s.x2.a.dim()) ||
        !shape_ok(s.g1.beta, s.x2.b.dim(), s.x1.b.dim()) ||
        !shape_ok(s.g2.beta, s.x3.b.dim(), s.x2.b.dim()))
        return r;
    Matrix ta1 = tensor_map(ctx.m, t1, t2, s.g1.alpha);
    Matrix ta2 = tensor_map(ctx.m, t2, t3, s.g2.alpha);
    r.squares_commute = s.x2.f * ta1 == s.g1.beta * s.x1.f && s.x3.f * ta2 == s.g2.beta * s.x2.f;
    r.a_row_exact = check_exact({s.x1.a, s.x2.a, s.x3.a, s.g1.alpha, s.g2.alpha});
    r.b_row_exact = check_exact({s.x1.b, s.x2.b, s.x3.b, s.g1.beta, s.g2.beta});
    const std::size_t d2 = t2.module.dim(), d3 = t3.module.dim();
    r.tensor_row_exact = rank(ta2) == d3 && (ta2 * ta1).is_zero() && rank(ta1) + d3 == d2;
    return r;
}

TripleModule triple_syzygy_formula(const TriangularContext& ctx, const TripleModule& tm,
                                   std::size_t n) {
    if (n == 0)
        throw InvalidInput("triple_syzygy_formula: n must be at least 1");
    Module cur = tm.a;
    Module cover = Module::zero(ctx.t);
    Matrix incl(ctx.t->field(), 0, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        auto c = projective_cover(cur);
        cover = c.cover;
        incl = c.syzygy_inclusion;
        cur = c.syzygy;
    }
    auto tp = tensor_over_T(ctx.m, cover);
    auto tw = tensor_over_T(ctx.m, cur);
    TripleModule first{cur, tp.module, tensor_map(ctx.m, tw, tp, incl)};
    Module ob = syzygy(tm.b, n);
    TripleModule second{Module::zero(ctx.t), ob, Matrix(ctx.t->field(), ob.dim(), 0)};
    return triple_direct_sum(ctx, {first, second});
}

Module triple_syzygy_oracle(const TriangularContext& ctx, const TripleModule& tm, std::size_t n) {
    return syzygy(triple_to_flat(ctx, tm), n);
}

Module bimodule_as_left_module(const TriangularContext& ctx) {
    return Module::trusted(ctx.u, ctx.m.dim(), ctx.m.left_actions());
}

Module bimodule_as_right_module(const TriangularContext& ctx) {
    return Module::trusted(ctx.t_op, ctx.m.dim(), ctx.m.right_actions());
}

bool MHypotheses::tensor_indecomposable_or_zero() const {
    for (std::size_t i = 0; i < per_projective.size(); ++i)
        if (!per_projective[i] && !per_projective_zero[i])
            return false;
    return true;
}

std::size_t MHypotheses::zero_tensors() const {
    return static_cast<std::size_t>(
        std::count(per_projective_zero.begin(), per_projective_zero.end(), true));
}

MHypotheses check_M_hypotheses(const TriangularContext& ctx, Rng& rng) {
    MHypotheses h;
    h.left_projective = is_projective(bimodule_as_left_module(ctx));
    h.right_projective = is_projective(bimodule_as_right_module(ctx));
    h.tensor_indecomposable = true;
    for (std::size_t i = 0; i < ctx.t->idempotent_count(); ++i) {
        auto tens = tensor_over_T(ctx.m, projective_indecomposable(ctx.t, i));
        bool ok = is_indecomposable(tens.module, rng);
        h.per_projective.push_back(ok);
        h.per_projective_zero.push_back(tens.module.dim() == 0);
        h.tensor_indecomposable = h.tensor_indecomposable && ok;
    }
    return h;
}

}  // namespace litalg
