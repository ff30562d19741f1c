#include "litalg/module.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace litalg {

namespace {

std::vector<Matrix> generators_from_actions(const Algebra& a, const std::vector<Matrix>& actions,
                                            std::size_t dim) {
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < a.generator_count(); ++g) {
        Matrix m(a.field(), dim, dim);
        const Vec& e = a.generator(g);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k])
                m = m + actions[k].scaled(e[k]);
        gens.push_back(std::move(m));
    }
    return gens;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

void require_same_algebra(const Module& m, const Module& n, const char* what) {
    if (m.algebra() != n.algebra())
        throw InvalidInput(std::string(what) + ": modules over different algebras");
}

// g^k for k >= dim, by repeated squaring
Matrix stable_power(const Matrix& g, std::size_t dim) {
    Matrix out = g;
    std::size_t k = 1;
    while (k < dim) {
        out = out * out;
        k *= 2;
    }
    return out;
}

bool is_mixed(const Matrix& f) {
    const std::size_t n = f.rows();
    std::size_t r = rank(stable_power(f, n));
    return r > 0 && r < n;
}

bool is_invertible(const Matrix& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

// Calls visit on every F_p-combination of the basis until it returns true.
template <class Visit>
bool enumerate_combinations(const Field& f, const std::vector<Matrix>& basis, std::size_t rows,
                            std::size_t cols, Visit visit) {
    const std::size_t k = basis.size();
    const std::uint32_t p = f.characteristic();
    std::vector<Scalar> c(k, 0);
    while (true) {
        std::size_t i = 0;
        while (i < k && c[i] == p - 1) {
            c[i] = 0;
            ++i;
        }
        if (i == k)
            return false;
        ++c[i];
        Matrix m(f, rows, cols);
        for (std::size_t j = 0; j < k; ++j)
            if (c[j])
                m = m + basis[j].scaled(c[j]);
        if (visit(m))
            return true;
    }
}

std::size_t combination_count(const Field& f, std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= f.characteristic();
        if (total > (1u << 20))
            return total;
    }
    return total;
}

constexpr std::size_t kRandomSamples = 64;
constexpr std::size_t kExhaustiveDim = 6;

}  // namespace

// ------------------------------------------------------------------ Module

Module Module::trusted(AlgebraPtr a, std::size_t dim, std::vector<Matrix> actions) {
    Module m;
    auto d = std::make_shared<Data>();
    d->generators = generators_from_actions(*a, actions, dim);
    d->algebra = std::move(a);
    d->dim = dim;
    d->actions = std::move(actions);
    m.d_ = std::move(d);
    return m;
}

Module Module::from_basis_actions(AlgebraPtr a, std::size_t dim, std::vector<Matrix> actions) {
    check_representation(*a, actions, dim, true, "module");
    return trusted(std::move(a), dim, std::move(actions));
}

Module Module::from_generator_actions(AlgebraPtr a, std::size_t dim,
                                      const std::vector<Matrix>& generators) {
    auto actions = expand_generator_actions(*a, generators, dim, true);
    Module m = from_basis_actions(a, dim, std::move(actions));
    for (std::size_t g = 0; g < a->generator_count(); ++g)
        if (!(m.generator_action(g) == generators[g]))
            throw InvalidInput("module: the action of " + a->generator_label(g) +
                               " is inconsistent with the relations of " + a->name());
    return m;
}

Module Module::zero(AlgebraPtr a) {
    std::vector<Matrix> acts(a->dim(), Matrix(a->field(), 0, 0));
    return trusted(std::move(a), 0, std::move(acts));
}

Matrix Module::act_by(const Vec& x) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k])
            m = m + d_->actions[k].scaled(x[k]);
    return m;
}

std::vector<std::size_t> Module::dimension_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < algebra()->idempotent_count(); ++i)
        out.push_back(rank(generator_action(i)));
    return out;
}

void Module::validate() const { check_representation(*algebra(), actions(), dim(), true, "module"); }

bool is_morphism(const Module& m, const Module& n, const Matrix& f) {
    if (f.rows() != n.dim() || f.cols() != m.dim())
        return false;
    for (std::size_t g = 0; g < m.algebra()->generator_count(); ++g)
        if (!(f * m.generator_action(g) == n.generator_action(g) * f))
            return false;
    return true;
}

std::size_t DecompositionResult::part_count() const {
    std::size_t n = 0;
    for (const auto& p : parts)
        n += p.multiplicity;
    return n;
}

// ---------------------------------------------------------- basic modules

Module projective_indecomposable(const AlgebraPtr& a, std::size_t i) {
    if (i >= a->idempotent_count())
        throw InvalidInput("projective_indecomposable: idempotent index out of range");
    return Module::trusted(a, a->projective_basis(i).cols(), a->projective_actions(i));
}

Module simple_module(const AlgebraPtr& a, std::size_t i) {
    if (i >= a->idempotent_count())
        throw InvalidInput("simple_module: idempotent index out of range");
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        Matrix m(a->field(), 1, 1);
        m(0, 0) = a->simple_coefficient(i, k);
        acts.push_back(std::move(m));
    }
    return Module::trusted(a, 1, std::move(acts));
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < a->dim(); ++k)
        acts.push_back(a->left_mult(k));
    return Module::trusted(a, a->dim(), std::move(acts));
}

// --------------------------------------------------------------------- Hom

std::vector<Matrix> hom_basis(const Module& m, const Module& n) {
    require_same_algebra(m, n, "hom_basis");
    const AlgebraPtr& a = m.algebra();
    const Field f = a->field();
    const std::size_t ni = a->idempotent_count();
    if (m.dim() == 0 || n.dim() == 0)
        return {};
    // idempotent-adapted bases: M = sum e_i M
    auto adapt = [&](const Module& x, std::vector<std::size_t>& offs, std::vector<std::size_t>& sizes) {
        std::vector<Matrix> blocks;
        offs.assign(ni, 0);
        sizes.assign(ni, 0);
        std::size_t o = 0;
        for (std::size_t i = 0; i < ni; ++i) {
            Matrix b = image_basis(x.generator_action(i));
            offs[i] = o;
            sizes[i] = b.cols();
            o += b.cols();
            blocks.push_back(std::move(b));
        }
        return Matrix::hstack(f, x.dim(), blocks);
    };
    std::vector<std::size_t> mo, ms, no, ns;
    Matrix pm = adapt(m, mo, ms), pn = adapt(n, no, ns);
    Matrix pm_inv = *inverse(pm), pn_inv = *inverse(pn);
    // unknown offsets: block i is ns[i] x ms[i], row-major
    std::vector<std::size_t> uo(ni, 0);
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < ni; ++i) {
        uo[i] = unknowns;
        unknowns += ns[i] * ms[i];
    }
    if (unknowns == 0)
        return {};
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> eqs;
    for (const auto& arrow : a->arrows()) {
        std::size_t g = a->generator_index(arrow.label);
        std::size_t s = arrow.source, t = arrow.target;
        Matrix gm = (pm_inv * m.generator_action(g) * pm).block(mo[t], ms[s] ? mo[s] : 0, ms[t], ms[s]);
        Matrix gn = (pn_inv * n.generator_action(g) * pn).block(no[t], ns[s] ? no[s] : 0, ns[t], ns[s]);
        // phi_t * gm - gn * phi_s = 0, an ns[t] x ms[s] system
        for (std::size_t r = 0; r < ns[t]; ++r)
            for (std::size_t c = 0; c < ms[s]; ++c) {
                std::vector<std::pair<std::size_t, Scalar>> eq;
                for (std::size_t k = 0; k < ms[t]; ++k)
                    if (gm(k, c))
                        eq.push_back({uo[t] + r * ms[t] + k, gm(k, c)});
                for (std::size_t k = 0; k < ns[s]; ++k)
                    if (gn(r, k))
                        eq.push_back({uo[s] + k * ms[s] + c, f.neg(gn(r, k))});
                if (!eq.empty())
                    eqs.push_back(std::move(eq));
            }
    }
    Matrix sys(f, eqs.size(), unknowns);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (auto [c, v] : eqs[r])
            sys(r, c) = f.add(sys(r, c), v);
    Matrix ker = eqs.empty() ? Matrix::identity(f, unknowns) : kernel_basis(sys);
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Matrix phi(f, n.dim(), m.dim());
        for (std::size_t i = 0; i < ni; ++i)
            for (std::size_t r = 0; r < ns[i]; ++r)
                for (std::size_t c = 0; c < ms[i]; ++c)
                    phi(no[i] + r, mo[i] + c) = ker(uo[i] + r * ms[i] + c, j);
        out.push_back(pn * phi * pm_inv);
    }
    return out;
}

Matrix random_combination(const Field& f, const std::vector<Matrix>& basis, std::size_t rows,
                          std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (const auto& b : basis) {
        Scalar c = static_cast<Scalar>(rng() % f.characteristic());
        if (c)
            m = m + b.scaled(c);
    }
    return m;
}

// ------------------------------------------------------ sums and subspaces

Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
    std::size_t dim = 0;
    for (const auto& p : parts) {
        if (p.algebra() != a)
            throw InvalidInput("direct_sum: modules over different algebras");
        dim += p.dim();
    }
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.action(k));
        acts.push_back(Matrix::block_diagonal(a->field(), blocks));
    }
    return Module::trusted(a, dim, std::move(acts));
}

Module change_basis(const Module& m, const Matrix& p) {
    auto inv = inverse(p);
    if (!inv)
        throw InvalidInput("change_basis: matrix is not invertible");
    std::vector<Matrix> acts;
    for (const auto& x : m.actions())
        acts.push_back(*inv * x * p);
    return Module::trusted(m.algebra(), m.dim(), std::move(acts));
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = static_cast<Scalar>(rng() % f.characteristic());
        if (is_invertible(m))
            return m;
    }
}

Submodule submodule(const Module& m, const Matrix& w) {
    Matrix b = image_basis(w);
    const std::size_t k = b.cols();
    if (k == 0)
        return {Module::zero(m.algebra()), Matrix(m.field(), m.dim(), 0)};
    Matrix linv = left_inverse(b);
    std::vector<Matrix> acts;
    for (const auto& x : m.actions()) {
        Matrix xb = x * b;
        Matrix r = linv * xb;
        if (!(b * r == xb))
            throw InvalidInput("submodule: subspace is not stable under the action");
        acts.push_back(std::move(r));
    }
    return {Module::trusted(m.algebra(), k, std::move(acts)), b};
}

Submodule generated_submodule(const Module& m, const Matrix& w) {
    IncrementalBasis span(m.field(), m.dim());
    std::vector<Vec> basis;
    std::deque<Vec> queue;
    for (std::size_t c = 0; c < w.cols(); ++c)
        queue.push_back(w.col(c));
    const std::size_t ng = m.algebra()->generator_count();
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        if (!span.add(v))
            continue;
        for (std::size_t g = 0; g < ng; ++g)
            queue.push_back(m.generator_action(g).apply(v));
        basis.push_back(std::move(v));
    }
    Matrix b(m.field(), m.dim(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m.dim(); ++i)
            b(i, j) = basis[j][i];
    return submodule(m, b);
}

Quotient quotient(const Module& m, const Matrix& w) {
    const Field f = m.field();
    Matrix b = image_basis(w);
    Matrix c = complement_basis(b);
    Matrix full = Matrix::hstack(f, m.dim(), {b, c});
    Matrix inv = *inverse(full);
    Matrix proj = inv.block(b.cols(), 0, c.cols(), m.dim());
    std::vector<Matrix> acts;
    for (const auto& x : m.actions())
        acts.push_back(proj * x * c);
    Module q = c.cols() ? Module::trusted(m.algebra(), c.cols(), std::move(acts))
                        : Module::zero(m.algebra());
    return {q, proj, c};
}

Submodule kernel(const Module& m, const Module& n, const Matrix& f) {
    (void)n;
    return submodule(m, kernel_basis(f));
}

// ----------------------------------------------------- radical and covers

RadicalTop radical_and_top(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    std::vector<Matrix> blocks;
    for (std::size_t g = a->idempotent_count(); g < a->generator_count(); ++g)
        blocks.push_back(m.generator_action(g));
    Matrix span = blocks.empty() ? Matrix(m.field(), m.dim(), 0)
                                 : Matrix::hstack(m.field(), m.dim(), blocks);
    Submodule rad = submodule(m, span);
    return {rad, quotient(m, rad.inclusion)};
}

ProjectiveCoverData projective_cover(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    const Field f = a->field();
    ProjectiveCoverData out;
    RadicalTop rt = radical_and_top(m);
    std::vector<Module> summands;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
        const Matrix& ei = m.generator_action(i);
        Matrix ei_m = image_basis(ei);
        if (ei_m.cols() == 0)
            continue;
        Matrix ei_rad = image_basis(ei * rt.radical.inclusion);
        for (auto c : pivot_columns(Matrix::hstack(f, m.dim(), {ei_rad, ei_m}))) {
            if (c < ei_rad.cols())
                continue;
            out.vertices.push_back(i);
            out.top_vectors.push_back(ei_m.col(c - ei_rad.cols()));
            summands.push_back(projective_indecomposable(a, i));
        }
    }
    out.cover = direct_sum(a, summands);
    out.epi = Matrix(f, m.dim(), out.cover.dim());
    std::size_t off = 0;
    for (std::size_t j = 0; j < out.vertices.size(); ++j) {
        const Matrix& pb = a->projective_basis(out.vertices[j]);
        for (std::size_t c = 0; c < pb.cols(); ++c) {
            Vec img = m.act_by(pb.col(c)).apply(out.top_vectors[j]);
            for (std::size_t r = 0; r < m.dim(); ++r)
                out.epi(r, off + c) = img[r];
        }
        off += pb.cols();
    }
    Submodule k = kernel(out.cover, m, out.epi);
    out.syzygy = k.module;
    out.syzygy_inclusion = k.inclusion;
    return out;
}

Module syzygy(const Module& m, std::size_t n) {
    Module cur = m;
    for (std::size_t i = 0; i < n && cur.dim() > 0; ++i)
        cur = projective_cover(cur).syzygy;
    return cur;
}

bool is_projective(const Module& m) {
    if (m.dim() == 0)
        return true;
    return projective_cover(m).cover.dim() == m.dim();
}

PdResult pd_bounded(const Module& m, std::size_t bound) {
    Module cur = m;
    for (std::size_t n = 0; n <= bound; ++n) {
        if (is_projective(cur))
            return {n, true};
        if (n == bound)
            break;
        cur = projective_cover(cur).syzygy;
    }
    return {bound, false};
}

// ---------------------------------------------------------- decomposition

std::optional<Matrix> find_splitting_endomorphism(const Module& m, Rng& rng) {
    const Field f = m.field();
    const std::size_t n = m.dim();
    if (n <= 1)
        return std::nullopt;
    auto end = hom_basis(m, m);
    if (end.size() <= 1)
        return std::nullopt;
    const std::uint32_t p = f.characteristic();
    for (std::size_t s = 0; s < kRandomSamples; ++s) {
        Matrix x = random_combination(f, end, n, n, rng);
        if (p <= 13) {
            for (Scalar lam = 0; lam < p; ++lam) {
                Matrix y = lam ? x - Matrix::identity(f, n).scaled(lam) : x;
                if (is_mixed(y))
                    return y;
            }
        } else if (is_mixed(x)) {
            return x;
        } else {
            for (int t = 0; t < 8; ++t) {
                Matrix y = x - Matrix::identity(f, n).scaled(static_cast<Scalar>(rng() % p));
                if (is_mixed(y))
                    return y;
            }
        }
    }
    if (end.size() <= kExhaustiveDim) {
        std::optional<Matrix> found;
        enumerate_combinations(f, end, n, n, [&](const Matrix& x) {
            if (is_mixed(x)) {
                found = x;
                return true;
            }
            return false;
        });
        return found;
    }
    return std::nullopt;
}

bool is_indecomposable(const Module& m, Rng& rng) {
    return m.dim() > 0 && !find_splitting_endomorphism(m, rng);
}

std::vector<Module> split_indecomposables(const Module& m, Rng& rng) {
    std::vector<Module> out;
    std::vector<Module> stack{m};
    while (!stack.empty()) {
        Module cur = std::move(stack.back());
        stack.pop_back();
        if (cur.dim() == 0)
            continue;
        auto split = find_splitting_endomorphism(cur, rng);
        if (!split) {
            out.push_back(cur);
            continue;
        }
        Matrix g = stable_power(*split, cur.dim());
        // Fitting: M = ker g + im g
        stack.push_back(submodule(cur, image_basis(g)).module);
        stack.push_back(submodule(cur, kernel_basis(g)).module);
    }
    // sort for a canonical order: by dimension, then dimension vector
    std::stable_sort(out.begin(), out.end(), [](const Module& x, const Module& y) {
        if (x.dim() != y.dim())
            return x.dim() < y.dim();
        return x.dimension_vector() < y.dimension_vector();
    });
    return out;
}

bool isomorphic_indecomposables(const Module& m, const Module& n, Rng& rng) {
    require_same_algebra(m, n, "isomorphic_indecomposables");
    if (m.dim() != n.dim())
        return false;
    if (m.dim() == 0)
        return true;
    if (m.dimension_vector() != n.dimension_vector())
        return false;
    auto hom = hom_basis(m, n);
    if (hom.empty())
        return false;
    const Field f = m.field();
    for (std::size_t s = 0; s < kRandomSamples; ++s)
        if (is_invertible(random_combination(f, hom, n.dim(), m.dim(), rng)))
            return true;
    if (hom.size() <= kExhaustiveDim)
        return enumerate_combinations(f, hom, n.dim(), m.dim(), is_invertible);
    return false;
}

DecompositionResult decompose(const Module& m, Rng& rng) {
    DecompositionResult res;
    for (auto& part : split_indecomposables(m, rng)) {
        bool placed = false;
        for (auto& existing : res.parts)
            if (isomorphic_indecomposables(existing.module, part, rng)) {
                ++existing.multiplicity;
                placed = true;
                break;
            }
        if (!placed) {
            bool proj = is_projective(part);
            res.parts.push_back({std::move(part), 1, proj});
        }
    }
    return res;
}

bool same_decomposition(const DecompositionResult& a, const DecompositionResult& b, Rng& rng) {
    if (a.parts.size() != b.parts.size())
        return false;
    std::vector<bool> used(b.parts.size(), false);
    for (const auto& pa : a.parts) {
        bool found = false;
        for (std::size_t j = 0; j < b.parts.size() && !found; ++j) {
            if (used[j] || b.parts[j].multiplicity != pa.multiplicity)
                continue;
            if (isomorphic_indecomposables(pa.module, b.parts[j].module, rng)) {
                used[j] = true;
                found = true;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

bool is_isomorphic(const Module& m, const Module& n, Rng& rng) {
    require_same_algebra(m, n, "is_isomorphic");
    if (m.dim() != n.dim())
        return false;
    if (m.dim() == 0)
        return true;
    if (m.dimension_vector() != n.dimension_vector())
        return false;
    auto hom = hom_basis(m, n);
    if (hom.empty())
        return false;
    for (std::size_t s = 0; s < 16; ++s)
        if (is_invertible(random_combination(m.field(), hom, n.dim(), m.dim(), rng)))
            return true;
    return same_decomposition(decompose(m, rng), decompose(n, rng), rng);
}

Module strip_projectives(const Module& m, Rng& rng) {
    std::vector<Module> keep;
    for (const auto& p : decompose(m, rng).parts)
        if (!p.projective)
            for (std::size_t i = 0; i < p.multiplicity; ++i)
                keep.push_back(p.module);
    return direct_sum(m.algebra(), keep);
}

// -------------------------------------------------------------- sequences

bool check_exact(const ShortExactSequence& s) {
    const std::size_t l = s.left.dim(), c = s.middle.dim(), r = s.right.dim();
    if (l + r != c)
        return false;
    if (s.inject.rows() != c || s.inject.cols() != l || s.surject.rows() != r ||
        s.surject.cols() != c)
        return false;
    if (!is_morphism(s.left, s.middle, s.inject) || !is_morphism(s.middle, s.right, s.surject))
        return false;
    if (rank(s.inject) != l || rank(s.surject) != r)
        return false;
    // im inject = ker surject: inclusion plus the dimension count above
    return (s.surject * s.inject).is_zero();
}

HorseshoeResult horseshoe(const ShortExactSequence& s) {
    if (!check_exact(s))
        throw InvalidInput("horseshoe: input sequence is not exact");
    const AlgebraPtr& a = s.middle.algebra();
    const Field f = a->field();
    auto cx = projective_cover(s.left);
    auto cz = projective_cover(s.right);
    // lift the top vectors of Z to e_i Y
    std::vector<Vec> lifts;
    for (std::size_t j = 0; j < cz.vertices.size(); ++j) {
        auto y = solve(s.surject, Matrix::column(f, cz.top_vectors[j]));
        Vec v = s.middle.generator_action(cz.vertices[j]).apply(y->col(0));
        lifts.push_back(std::move(v));
    }
    const std::size_t px = cx.cover.dim(), pz = cz.cover.dim();
    Matrix h(f, s.middle.dim(), pz);
    std::size_t off = 0;
    for (std::size_t j = 0; j < cz.vertices.size(); ++j) {
        const Matrix& pb = a->projective_basis(cz.vertices[j]);
        for (std::size_t c = 0; c < pb.cols(); ++c) {
            Vec img = s.middle.act_by(pb.col(c)).apply(lifts[j]);
            for (std::size_t r = 0; r < s.middle.dim(); ++r)
                h(r, off + c) = img[r];
        }
        off += pb.cols();
    }
    Module cover = direct_sum(a, {cx.cover, cz.cover});
    Matrix pi = Matrix::hstack(f, s.middle.dim(), {s.inject * cx.epi, h});
    Submodule k = kernel(cover, s.middle, pi);
    Matrix kinv = left_inverse(k.inclusion);
    HorseshoeResult out;
    out.cover = cover;
    out.sequence.left = cx.syzygy;
    out.sequence.middle = k.module;
    out.sequence.right = cz.syzygy;
    Matrix up = Matrix::vstack(f, cx.syzygy.dim(),
                               {cx.syzygy_inclusion, Matrix(f, pz, cx.syzygy.dim())});
    out.sequence.inject = kinv * up;
    Matrix lower = k.inclusion.block(px, 0, pz, k.inclusion.cols());
    out.sequence.surject = cz.syzygy.dim() ? left_inverse(cz.syzygy_inclusion) * lower
                                           : Matrix(f, 0, k.inclusion.cols());
    return out;
}

std::string describe(const Module& m) {
    std::ostringstream os;
    os << "dim " << m.dim() << ", dimension vector [";
    auto dv = m.valid() ? m.dimension_vector() : std::vector<std::size_t>{};
    for (std::size_t i = 0; i < dv.size(); ++i)
        os << (i ? "," : "") << dv[i];
    os << "]";
    return os.str();
}

}  // namespace litalg
