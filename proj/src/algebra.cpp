#include "litalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace litalg {

namespace {

Vec zero_vec(std::size_t n) { return Vec(n, 0); }

Matrix cols_of(Field f, std::size_t n, const std::vector<Vec>& vs) {
    Matrix m(f, n, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = vs[j][i];
    return m;
}

bool in_column_space(const Matrix& basis, const Vec& v) {
    if (basis.cols() == 0) {
        for (auto x : v)
            if (x)
                return false;
        return true;
    }
    return solve(basis, Matrix::column(basis.field(), v)).has_value();
}

std::string single_label(const std::vector<std::string>& labels, const Vec& v) {
    std::size_t idx = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i])
            continue;
        if (idx != v.size() || v[i] != 1)
            return {};
        idx = i;
    }
    return idx == v.size() ? std::string{} : labels[idx];
}

}  // namespace

// Checks that basis -> action is a representation (left) or an
// anti-representation (right) of a, with the unit acting as the identity.
void check_representation(const Algebra& a, const std::vector<Matrix>& action, std::size_t dim,
                  bool left, const std::string& what) {
    const Field f = a.field();
    if (action.size() != a.dim())
        throw InvalidInput(what + ": expected " + std::to_string(a.dim()) + " action matrices");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw InvalidInput(what + ": action matrix has wrong shape");
    Matrix unit(f, dim, dim);
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.unit()[k])
            unit = unit + action[k].scaled(a.unit()[k]);
    if (!unit.is_identity())
        throw InvalidInput(what + ": the unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            // b_i * b_j = sum_k c_k b_k
            Matrix rhs(f, dim, dim);
            const Matrix& li = a.left_mult(i);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (li(k, j))
                    rhs = rhs + action[k].scaled(li(k, j));
            Matrix lhs = left ? action[i] * action[j] : action[j] * action[i];
            if (!(lhs == rhs))
                throw InvalidInput(what + ": action violates the relation " + a.labels()[i] +
                                   " * " + a.labels()[j]);
        }
}


// ---------------------------------------------------------------- quivers

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& a : arrows) {
        if (a.source < 1 || a.source > vertex_count || a.target < 1 || a.target > vertex_count)
            throw InvalidInput("arrow " + a.label + " has an endpoint outside [1, " +
                               std::to_string(vertex_count) + "]");
        if (a.label.empty())
            throw InvalidInput("arrow labels must be nonempty");
        if (a.label.size() >= 2 && a.label[0] == 'e' &&
            std::all_of(a.label.begin() + 1, a.label.end(), ::isdigit))
            throw InvalidInput("arrow label " + a.label + " clashes with vertex labels");
        if (!seen.insert(a.label).second)
            throw InvalidInput("duplicate arrow label " + a.label);
    }
}

bool Quiver::is_type_A() const {
    if (vertex_count == 0 || arrows.size() + 1 != vertex_count)
        return false;
    std::vector<std::size_t> degree(vertex_count + 1, 0);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : arrows) {
        if (a.source == a.target)
            return false;
        auto e = std::minmax(a.source, a.target);
        if (!edges.insert(e).second)
            return false;
        ++degree[a.source];
        ++degree[a.target];
    }
    for (std::size_t v = 1; v <= vertex_count; ++v)
        if (degree[v] > 2)
            return false;
    // connected: union-find
    std::vector<std::size_t> parent(vertex_count + 1);
    for (std::size_t v = 0; v <= vertex_count; ++v)
        parent[v] = v;
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : arrows)
        parent[find(a.source)] = find(a.target);
    for (std::size_t v = 2; v <= vertex_count; ++v)
        if (find(v) != find(1))
            return false;
    return true;
}

void QuiverAnSpec::validate() const {
    if (n < 1)
        throw InvalidInput("A_n quiver needs at least one vertex");
    for (std::size_t i = 0; i < change_vertices.size(); ++i) {
        auto k = change_vertices[i];
        if (k <= 1 || k >= n)
            throw InvalidInput("change vertex " + std::to_string(k) + " must satisfy 1 < k < " +
                               std::to_string(n));
        if (i && change_vertices[i - 1] >= k)
            throw InvalidInput("change vertices must be strictly increasing");
    }
}

Quiver build_quiver_An(const QuiverAnSpec& spec) {
    spec.validate();
    Quiver q;
    q.vertex_count = spec.n;
    for (std::size_t i = 1; i < spec.n; ++i) {
        std::size_t flips = 0;
        for (auto k : spec.change_vertices)
            if (k <= i)
                ++flips;
        bool right = (spec.initial == Direction::rightward) == (flips % 2 == 0);
        Arrow a;
        a.label = "a" + std::to_string(i);
        a.source = right ? i : i + 1;
        a.target = right ? i + 1 : i;
        q.arrows.push_back(a);
    }
    return q;
}

// -------------------------------------------------------------- relations

Relation parse_relation(const std::string& text, Field f) {
    Relation rel;
    rel.text = text;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw InvalidInput("relation \"" + text + "\" at position " + std::to_string(pos) +
                           ": " + why);
    };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size())
            break;
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::int64_t coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coeff = coeff * 10 + (text[pos++] - '0');
            skip();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
            skip();
        }
        RelationTerm term;
        term.coefficient = f.reduce(sign * coeff);
        while (true) {
            skip();
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (start == pos)
                fail("expected an arrow label");
            term.path.push_back(text.substr(start, pos - start));
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        rel.terms.push_back(std::move(term));
    }
    if (rel.terms.empty())
        throw InvalidInput("empty relation");
    return rel;
}

// ----------------------------------------------------------------- algebra

AlgebraPtr Algebra::create(AlgebraData data) {
    std::shared_ptr<Algebra> a(new Algebra());
    a->field_ = data.field;
    a->name_ = std::move(data.name);
    a->labels_ = std::move(data.labels);
    a->left_mult_ = std::move(data.left_mult);
    a->unit_ = std::move(data.unit);
    a->idempotents_ = std::move(data.idempotents);
    a->idempotent_labels_ = std::move(data.idempotent_labels);
    a->arrows_ = std::move(data.arrows);
    const std::size_t d = a->labels_.size();
    const Field f = a->field_;

    if (a->left_mult_.size() != d || a->unit_.size() != d)
        throw InvalidInput("algebra: structure constants do not match the basis size");
    for (const auto& l : a->left_mult_)
        if (l.rows() != d || l.cols() != d)
            throw InvalidInput("algebra: left multiplication matrix has wrong shape");
    for (const auto& e : a->idempotents_)
        if (e.size() != d)
            throw InvalidInput("algebra: idempotent has wrong length");
    if (a->idempotent_labels_.size() != a->idempotents_.size()) {
        a->idempotent_labels_.clear();
        for (std::size_t i = 0; i < a->idempotents_.size(); ++i)
            a->idempotent_labels_.push_back("e" + std::to_string(i + 1));
    }

    a->right_mult_.assign(d, Matrix(f, d, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < d; ++r)
                a->right_mult_[j](r, i) = a->left_mult_[i](r, j);

    a->radical_ = image_basis(cols_of(f, d, data.radical));
    a->validate();
    if (a->arrows_.empty())
        a->derive_arrows();
    for (const auto& g : a->arrows_) {
        if (g.source >= a->idempotents_.size() || g.target >= a->idempotents_.size())
            throw InvalidInput("arrow " + g.label + " refers to a missing idempotent");
        Vec pure = a->multiply(a->multiply(a->idempotents_[g.target], g.element),
                               a->idempotents_[g.source]);
        if (pure != g.element || !in_column_space(a->radical_, g.element))
            throw InvalidInput("arrow " + g.label + " is not a pure radical element");
    }
    a->derive_words();
    a->derive_projectives();
    return a;
}

void Algebra::validate() const {
    const std::size_t d = dim();
    const Field f = field_;
    if (!left_mult_by(unit_).is_identity() || !right_mult_by(unit_).is_identity())
        throw InvalidInput("algebra " + name_ + ": unit is not a two-sided identity");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix rhs(f, d, d);
            for (std::size_t k = 0; k < d; ++k)
                if (left_mult_[i](k, j))
                    rhs = rhs + left_mult_[k].scaled(left_mult_[i](k, j));
            if (!(left_mult_[i] * left_mult_[j] == rhs))
                throw InvalidInput("algebra " + name_ + ": multiplication is not associative");
        }
    Vec sum = zero_vec(d);
    for (std::size_t i = 0; i < idempotents_.size(); ++i) {
        for (std::size_t j = 0; j < idempotents_.size(); ++j) {
            Vec p = multiply(idempotents_[i], idempotents_[j]);
            if (p != (i == j ? idempotents_[i] : zero_vec(d)))
                throw InvalidInput("algebra " + name_ +
                                   ": idempotents are not orthogonal idempotents");
        }
        for (std::size_t k = 0; k < d; ++k)
            sum[k] = f.add(sum[k], idempotents_[i][k]);
    }
    if (sum != unit_)
        throw InvalidInput("algebra " + name_ + ": idempotents do not sum to the unit");
    // radical: two-sided ideal, nilpotent, quotient spanned by the idempotents
    const std::size_t r = radical_.cols();
    for (std::size_t c = 0; c < r; ++c) {
        Vec v = radical_.col(c);
        for (std::size_t k = 0; k < d; ++k)
            if (!in_column_space(radical_, left_mult_[k].apply(v)) ||
                !in_column_space(radical_, right_mult_[k].apply(v)))
                throw InvalidInput("algebra " + name_ + ": radical is not a two-sided ideal");
    }
    Matrix combined = Matrix::hstack(f, d, {radical_, cols_of(f, d, idempotents_)});
    if (d != r + idempotents_.size() || rank(combined) != d)
        throw InvalidInput("algebra " + name_ +
                           ": quotient by the radical is not spanned by the idempotents");
    Matrix power_span = radical_;
    std::size_t steps = 1;
    while (power_span.cols() > 0) {
        if (steps > d + 1)
            throw InvalidInput("algebra " + name_ + ": radical is not nilpotent");
        std::vector<Matrix> blocks;
        for (std::size_t c = 0; c < r; ++c)
            blocks.push_back(left_mult_by(radical_.col(c)) * power_span);
        power_span = image_basis(Matrix::hstack(f, d, blocks));
        ++steps;
    }
    const_cast<Algebra*>(this)->loewy_length_ = steps;
}

void Algebra::derive_arrows() {
    const std::size_t d = dim();
    const Field f = field_;
    const std::size_t r = radical_.cols();
    std::vector<Matrix> prods;
    for (std::size_t a = 0; a < r; ++a)
        prods.push_back(left_mult_by(radical_.col(a)) * radical_);
    Matrix rad2 = r ? image_basis(Matrix::hstack(f, d, prods)) : Matrix(f, d, 0);
    arrows_.clear();
    for (std::size_t s = 0; s < idempotents_.size(); ++s)
        for (std::size_t t = 0; t < idempotents_.size(); ++t) {
            Matrix proj = left_mult_by(idempotents_[t]) * right_mult_by(idempotents_[s]);
            Matrix x = image_basis(proj * radical_);
            Matrix y = image_basis(proj * rad2);
            if (x.cols() == y.cols())
                continue;
            auto piv = pivot_columns(Matrix::hstack(f, d, {y, x}));
            std::size_t k = 0;
            for (auto c : piv) {
                if (c < y.cols())
                    continue;
                ArrowGenerator g;
                g.element = x.col(c - y.cols());
                g.label = single_label(labels_, g.element);
                if (g.label.empty())
                    g.label = "g" + std::to_string(s + 1) + "_" + std::to_string(t + 1) + "_" +
                              std::to_string(++k);
                g.source = s;
                g.target = t;
                arrows_.push_back(std::move(g));
            }
        }
}

void Algebra::derive_words() {
    const std::size_t d = dim();
    const Field f = field_;
    IncrementalBasis span(f, d);
    std::vector<Vec> values;
    words_.clear();
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < idempotents_.size(); ++i)
        if (span.add(idempotents_[i])) {
            words_.push_back({i});
            values.push_back(idempotents_[i]);
            frontier.push_back(words_.size() - 1);
        }
    const std::size_t ng = generator_count();
    while (span.size() < d && !frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t g = idempotents_.size(); g < ng; ++g)
            for (auto w : frontier) {
                Vec v = multiply(generator(g), values[w]);
                if (span.add(v)) {
                    std::vector<std::size_t> word{g};
                    word.insert(word.end(), words_[w].begin(), words_[w].end());
                    words_.push_back(std::move(word));
                    values.push_back(std::move(v));
                    next.push_back(words_.size() - 1);
                }
            }
        frontier = std::move(next);
    }
    if (span.size() < d)
        throw InvalidInput("algebra " + name_ + ": generators do not generate the algebra");
    auto inv = inverse(cols_of(f, d, values));
    word_coeffs_ = *inv;
}

void Algebra::derive_projectives() {
    const std::size_t d = dim();
    const Field f = field_;
    proj_basis_.clear();
    proj_actions_.clear();
    proj_top_.clear();
    for (std::size_t i = 0; i < idempotents_.size(); ++i) {
        Matrix b = image_basis(right_mult_by(idempotents_[i]));
        Matrix linv = left_inverse(b);
        std::vector<Matrix> acts;
        acts.reserve(d);
        for (std::size_t k = 0; k < d; ++k)
            acts.push_back(linv * left_mult_[k] * b);
        proj_top_.push_back(linv.apply(idempotents_[i]));
        proj_basis_.push_back(std::move(b));
        proj_actions_.push_back(std::move(acts));
    }
    Matrix s = Matrix::hstack(f, d, {cols_of(f, d, idempotents_), radical_});
    auto sinv = inverse(s);
    simple_coeffs_ = sinv->block(0, 0, idempotents_.size(), d);
}

std::size_t Algebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    throw InvalidInput("algebra " + name_ + " has no basis element " + label);
}

Matrix Algebra::left_mult_by(const Vec& x) const {
    Matrix m(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i])
            m = m + left_mult_[i].scaled(x[i]);
    return m;
}

Matrix Algebra::right_mult_by(const Vec& x) const {
    Matrix m(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i])
            m = m + right_mult_[i].scaled(x[i]);
    return m;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const { return left_mult_by(x).apply(y); }

Vec Algebra::basis_vector(std::size_t i) const {
    Vec v = zero_vec(dim());
    v[i] = 1;
    return v;
}

std::string Algebra::generator_label(std::size_t g) const {
    if (g < idempotents_.size())
        return idempotent_labels_[g];
    return arrows_.at(g - idempotents_.size()).label;
}

const Vec& Algebra::generator(std::size_t g) const {
    if (g < idempotents_.size())
        return idempotents_[g];
    return arrows_.at(g - idempotents_.size()).element;
}

std::size_t Algebra::generator_index(const std::string& label) const {
    for (std::size_t g = 0; g < generator_count(); ++g)
        if (generator_label(g) == label)
            return g;
    throw InvalidInput("algebra " + name_ + " has no generator " + label);
}

bool Algebra::same_structure(const Algebra& o) const {
    if (dim() != o.dim() || !(field_ == o.field_))
        return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!(left_mult_[i] == o.left_mult_[i]))
            return false;
    return unit_ == o.unit_;
}

// ------------------------------------------------------ bound quiver algebras

namespace {

struct Path {
    std::size_t start = 0, end = 0;  // 0-based vertices
    std::vector<std::size_t> arrows;  // traversal order
};

struct PathSpace {
    std::vector<Path> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;

    std::size_t find(const Path& p) const {
        auto it = index.find({p.start, p.arrows});
        return it == index.end() ? paths.size() : it->second;
    }
};

std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty())
        return "e" + std::to_string(p.start + 1);
    std::string s;
    for (std::size_t i = p.arrows.size(); i-- > 0;) {
        s += q.arrows[p.arrows[i]].label;
        if (i)
            s += "*";
    }
    return s;
}

// All paths of length <= max_len, ordered by (length, labels in traversal order).
PathSpace enumerate_paths(const Quiver& q, std::size_t max_len, std::size_t cap) {
    PathSpace ps;
    std::vector<Path> level;
    for (std::size_t v = 0; v < q.vertex_count; ++v)
        level.push_back(Path{v, v, {}});
    auto key_less = [&](const Path& a, const Path& b) {
        for (std::size_t i = 0; i < a.arrows.size(); ++i) {
            const auto& la = q.arrows[a.arrows[i]].label;
            const auto& lb = q.arrows[b.arrows[i]].label;
            if (la != lb)
                return la < lb;
        }
        return false;
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0) {
            std::vector<Path> next;
            for (const auto& p : level)
                for (std::size_t a = 0; a < q.arrows.size(); ++a)
                    if (q.arrows[a].source - 1 == p.end) {
                        Path np = p;
                        np.arrows.push_back(a);
                        np.end = q.arrows[a].target - 1;
                        next.push_back(std::move(np));
                    }
            std::stable_sort(next.begin(), next.end(), key_less);
            level = std::move(next);
        }
        for (const auto& p : level) {
            ps.index[{p.start, p.arrows}] = ps.paths.size();
            ps.paths.push_back(p);
        }
        if (ps.paths.size() > cap)
            throw InvalidInput("path enumeration exceeds " + std::to_string(cap) +
                               " paths; the arrow ideal is not nilpotent modulo the relations");
    }
    return ps;
}

// Concatenation "first then second", or nullopt when the paths do not compose.
std::optional<Path> concat(const Path& first, const Path& second) {
    if (first.end != second.start)
        return std::nullopt;
    Path p{first.start, second.end, first.arrows};
    p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
    return p;
}

}  // namespace

AlgebraPtr build_bound_quiver_algebra(const Quiver& q, const std::vector<Relation>& relations,
                                      Field f, std::string name, std::size_t max_path_length) {
    q.validate();
    if (q.vertex_count == 0)
        throw InvalidInput("quiver has no vertices");
    std::map<std::string, std::size_t> arrow_index;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        arrow_index[q.arrows[a].label] = a;

    // Relations as maps path -> coefficient, after validation.
    std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, Scalar>> rels;
    std::size_t longest = 0;
    for (const auto& rel : relations) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, Scalar> terms;
        for (const auto& term : rel.terms) {
            Path p;
            bool trivial = term.path.size() == 1 && !arrow_index.count(term.path[0]);
            if (trivial) {
                const auto& lbl = term.path[0];
                std::size_t v = 0;
                if (lbl.size() < 2 || lbl[0] != 'e' ||
                    !std::all_of(lbl.begin() + 1, lbl.end(), ::isdigit) ||
                    (v = std::stoul(lbl.substr(1))) < 1 || v > q.vertex_count)
                    throw InvalidInput("relation \"" + rel.text + "\": unknown label " + lbl);
                p = Path{v - 1, v - 1, {}};
            } else {
                for (std::size_t i = term.path.size(); i-- > 0;) {
                    auto it = arrow_index.find(term.path[i]);
                    if (it == arrow_index.end())
                        throw InvalidInput("relation \"" + rel.text + "\": unknown arrow " +
                                           term.path[i]);
                    const Arrow& a = q.arrows[it->second];
                    if (p.arrows.empty()) {
                        p.start = a.source - 1;
                    } else if (p.end != a.source - 1) {
                        throw InvalidInput("relation \"" + rel.text + "\": path does not compose");
                    }
                    p.arrows.push_back(it->second);
                    p.end = a.target - 1;
                }
            }
            auto& c = terms[{p.start, p.arrows}];
            c = f.add(c, term.coefficient);
        }
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->second == 0) {
                it = terms.erase(it);
                continue;
            }
            if (it->first.second.size() < 2)
                throw InvalidInput("relation \"" + rel.text + "\" has a component of degree " +
                                   std::to_string(it->first.second.size()) +
                                   "; relations must lie in the square of the arrow ideal");
            longest = std::max(longest, it->first.second.size());
            ++it;
        }
        rels.push_back(std::move(terms));
    }

    for (std::size_t trunc = 1; trunc <= max_path_length; ++trunc) {
        PathSpace ps = enumerate_paths(q, trunc, 20000);
        const std::size_t n = ps.paths.size();
        IncrementalBasis ideal(f, n, /*pivot_high=*/true);
        std::deque<Vec> queue;
        for (const auto& terms : rels) {
            Vec v = zero_vec(n);
            for (const auto& [key, c] : terms) {
                auto it = ps.index.find(key);
                if (it != ps.index.end())
                    v[it->second] = c;
            }
            queue.push_back(std::move(v));
        }
        auto multiply_into = [&](const Vec& v, const Path& other, bool other_first) {
            Vec out = zero_vec(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!v[i])
                    continue;
                auto cp = other_first ? concat(other, ps.paths[i]) : concat(ps.paths[i], other);
                if (!cp)
                    continue;
                std::size_t j = ps.find(*cp);
                if (j < n)
                    out[j] = f.add(out[j], v[i]);
            }
            return out;
        };
        while (!queue.empty()) {
            Vec v = std::move(queue.front());
            queue.pop_front();
            ideal.reduce(v);
            if (std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; }))
                continue;
            ideal.add(v);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                Path pa{q.arrows[a].source - 1, q.arrows[a].target - 1, {a}};
                queue.push_back(multiply_into(v, pa, false));  // v then a: a * v
                queue.push_back(multiply_into(v, pa, true));   // a then v: v * a
            }
            for (std::size_t x = 0; x < q.vertex_count; ++x) {
                Path px{x, x, {}};
                queue.push_back(multiply_into(v, px, false));
                queue.push_back(multiply_into(v, px, true));
            }
        }
        // J^trunc must vanish modulo the ideal.
        bool nilpotent = true;
        for (std::size_t i = 0; i < n && nilpotent; ++i) {
            if (ps.paths[i].arrows.size() != trunc)
                continue;
            Vec e = zero_vec(n);
            e[i] = 1;
            nilpotent = ideal.contains(e);
        }
        if (!nilpotent || trunc < longest)
            continue;

        std::vector<bool> pivot(n, false);
        for (auto c : ideal.pivots())
            pivot[c] = true;
        std::vector<std::size_t> basis;
        std::vector<std::size_t> coord(n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (!pivot[i]) {
                coord[i] = basis.size();
                basis.push_back(i);
            }
        const std::size_t d = basis.size();
        auto normal_form = [&](std::size_t path_idx) {
            Vec e = zero_vec(n);
            e[path_idx] = 1;
            ideal.reduce(e);
            Vec out = zero_vec(d);
            for (std::size_t i = 0; i < n; ++i)
                if (e[i])
                    out[coord[i]] = e[i];
            return out;
        };
        AlgebraData data;
        data.field = f;
        data.name = std::move(name);
        for (auto b : basis)
            data.labels.push_back(path_label(q, ps.paths[b]));
        data.left_mult.assign(d, Matrix(f, d, d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                // b_i * b_j: traverse b_j then b_i
                auto cp = concat(ps.paths[basis[j]], ps.paths[basis[i]]);
                if (!cp)
                    continue;
                std::size_t idx = ps.find(*cp);
                if (idx >= n)
                    continue;
                Vec nf = normal_form(idx);
                for (std::size_t k = 0; k < d; ++k)
                    data.left_mult[i](k, j) = nf[k];
            }
        data.unit = zero_vec(d);
        for (std::size_t v = 0; v < q.vertex_count; ++v) {
            Vec e = zero_vec(d);
            e[coord[ps.find(Path{v, v, {}})]] = 1;
            data.unit[coord[ps.find(Path{v, v, {}})]] = 1;
            data.idempotents.push_back(e);
            data.idempotent_labels.push_back("e" + std::to_string(v + 1));
        }
        for (std::size_t i = 0; i < d; ++i)
            if (!ps.paths[basis[i]].arrows.empty()) {
                Vec r = zero_vec(d);
                r[i] = 1;
                data.radical.push_back(r);
            }
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            std::size_t idx = ps.find(Path{q.arrows[a].source - 1, q.arrows[a].target - 1, {a}});
            if (coord[idx] >= d)
                continue;
            ArrowGenerator g;
            g.label = q.arrows[a].label;
            g.element = zero_vec(d);
            g.element[coord[idx]] = 1;
            g.source = q.arrows[a].source - 1;
            g.target = q.arrows[a].target - 1;
            data.arrows.push_back(std::move(g));
        }
        if (data.arrows.empty() && !data.radical.empty())
            throw InvalidInput("relations kill every arrow");
        if (data.arrows.empty()) {
            // semisimple: create() derives nothing, which is what we want
        }
        return Algebra::create(std::move(data));
    }
    throw InvalidInput("the arrow ideal is not nilpotent modulo the relations (checked up to "
                       "path length " + std::to_string(max_path_length) + ")");
}

AlgebraPtr build_bound_quiver_algebra(const Quiver& q, const std::vector<std::string>& relations,
                                      Field f, std::string name) {
    std::vector<Relation> rels;
    for (const auto& r : relations)
        rels.push_back(parse_relation(r, f));
    return build_bound_quiver_algebra(q, rels, f, std::move(name));
}

AlgebraPtr ground_field_algebra(Field f) {
    Quiver q;
    q.vertex_count = 1;
    return build_bound_quiver_algebra(q, std::vector<Relation>{}, f, "k");
}

// --------------------------------------------------------------- opposite

AlgebraPtr opposite(const AlgebraPtr& a) {
    AlgebraData data;
    data.field = a->field();
    data.name = a->name() + "^op";
    data.labels = a->labels();
    for (std::size_t i = 0; i < a->dim(); ++i)
        data.left_mult.push_back(a->right_mult(i));
    data.unit = a->unit();
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        data.idempotents.push_back(a->idempotent(i));
    data.idempotent_labels = a->idempotent_labels();
    for (std::size_t c = 0; c < a->radical_basis().cols(); ++c)
        data.radical.push_back(a->radical_basis().col(c));
    for (const auto& g : a->arrows()) {
        ArrowGenerator h = g;
        std::swap(h.source, h.target);
        data.arrows.push_back(std::move(h));
    }
    return Algebra::create(std::move(data));
}

// --------------------------------------------------------------- bimodules

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
    validate();
}

void Bimodule::validate() const {
    check_representation(*left_, left_action_, dim_, true, "bimodule left action");
    check_representation(*right_, right_action_, dim_, false, "bimodule right action");
    for (const auto& l : left_action_)
        for (const auto& r : right_action_)
            if (!(l * r == r * l))
                throw InvalidInput("bimodule: left and right actions do not commute");
}

Bimodule Bimodule::regular(const AlgebraPtr& t) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < t->dim(); ++i) {
        l.push_back(t->left_mult(i));
        r.push_back(t->right_mult(i));
    }
    return Bimodule(t, t, t->dim(), std::move(l), std::move(r));
}

Bimodule Bimodule::projective(const AlgebraPtr& u, const AlgebraPtr& t,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const Field f = u->field();
    std::vector<std::vector<Matrix>> lblocks(u->dim()), rblocks(t->dim());
    std::size_t dim = 0;
    for (auto [j, i] : pairs) {
        if (j >= u->idempotent_count() || i >= t->idempotent_count())
            throw InvalidInput("projective bimodule: idempotent index out of range");
        const auto& pu = u->projective_actions(j);
        Matrix c = image_basis(t->left_mult_by(t->idempotent(i)));
        Matrix cinv = left_inverse(c);
        std::size_t du = u->projective_basis(j).cols(), dt = c.cols();
        for (std::size_t k = 0; k < u->dim(); ++k)
            lblocks[k].push_back(Matrix::kronecker(pu[k], Matrix::identity(f, dt)));
        for (std::size_t k = 0; k < t->dim(); ++k)
            rblocks[k].push_back(
                Matrix::kronecker(Matrix::identity(f, du), cinv * t->right_mult(k) * c));
        dim += du * dt;
    }
    std::vector<Matrix> l, r;
    for (auto& b : lblocks)
        l.push_back(Matrix::block_diagonal(f, b));
    for (auto& b : rblocks)
        r.push_back(Matrix::block_diagonal(f, b));
    return Bimodule(u, t, dim, std::move(l), std::move(r));
}

Bimodule Bimodule::via_map(const AlgebraPtr& u, const AlgebraPtr& t, const Matrix& phi) {
    if (phi.rows() != u->dim() || phi.cols() != t->dim() || !is_algebra_map(*t, *u, phi, true))
        throw InvalidInput("via_map: phi is not a unital algebra map");
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < u->dim(); ++i)
        l.push_back(u->left_mult(i));
    for (std::size_t k = 0; k < t->dim(); ++k)
        r.push_back(u->right_mult_by(phi.col(k)));
    return Bimodule(u, t, u->dim(), std::move(l), std::move(r));
}

std::vector<Matrix> expand_generator_actions(const Algebra& a, const std::vector<Matrix>& gens,
                                      std::size_t dim, bool left) {
    const Field f = a.field();
    if (gens.size() != a.generator_count())
        throw InvalidInput("expected one action matrix per generator of " + a.name());
    for (const auto& g : gens)
        if (g.rows() != dim || g.cols() != dim)
            throw InvalidInput("generator action has wrong shape");
    std::vector<Matrix> word_vals;
    for (const auto& w : a.words()) {
        Matrix m = Matrix::identity(f, dim);
        for (auto g : w)
            m = left ? m * gens[g] : gens[g] * m;
        word_vals.push_back(std::move(m));
    }
    std::vector<Matrix> out;
    const Matrix& wc = a.word_coefficients();
    for (std::size_t k = 0; k < a.dim(); ++k) {
        Matrix m(f, dim, dim);
        for (std::size_t w = 0; w < word_vals.size(); ++w)
            if (wc(w, k))
                m = m + word_vals[w].scaled(wc(w, k));
        out.push_back(std::move(m));
    }
    return out;
}


Bimodule Bimodule::from_generator_actions(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                                          const std::vector<Matrix>& left_generators,
                                          const std::vector<Matrix>& right_generators) {
    auto l = expand_generator_actions(*left, left_generators, dim, true);
    auto r = expand_generator_actions(*right, right_generators, dim, false);
    Bimodule b(std::move(left), std::move(right), dim, std::move(l), std::move(r));
    // the expansion is only meaningful if the generator matrices agree with it
    for (std::size_t g = 0; g < b.left_->generator_count(); ++g) {
        Matrix m(b.left_->field(), dim, dim);
        const Vec& e = b.left_->generator(g);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k])
                m = m + b.left_action_[k].scaled(e[k]);
        if (!(m == left_generators[g]))
            throw InvalidInput("bimodule: left action violates a relation of " +
                               b.left_->name());
    }
    for (std::size_t g = 0; g < b.right_->generator_count(); ++g) {
        Matrix m(b.right_->field(), dim, dim);
        const Vec& e = b.right_->generator(g);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k])
                m = m + b.right_action_[k].scaled(e[k]);
        if (!(m == right_generators[g]))
            throw InvalidInput("bimodule: right action violates a relation of " +
                               b.right_->name());
    }
    return b;
}

// ------------------------------------------------------------- triangular

AlgebraPtr triangular(const AlgebraPtr& t, const AlgebraPtr& u, const Bimodule& m) {
    if (m.left_algebra() != u || m.right_algebra() != t)
        throw InvalidInput("triangular: bimodule must be a U-T-bimodule");
    if (!(t->field() == u->field()))
        throw InvalidInput("triangular: field mismatch");
    const Field f = t->field();
    const std::size_t dt = t->dim(), du = u->dim(), dm = m.dim();
    const std::size_t d = dt + du + dm;
    const std::size_t ou = dt, om = dt + du;
    AlgebraData data;
    data.field = f;
    data.name = "(" + t->name() + " 0; M " + u->name() + ")";
    for (const auto& l : t->labels())
        data.labels.push_back("T:" + l);
    for (const auto& l : u->labels())
        data.labels.push_back("U:" + l);
    for (std::size_t k = 0; k < dm; ++k)
        data.labels.push_back("M:" + std::to_string(k + 1));
    for (std::size_t i = 0; i < dt; ++i) {
        Matrix l(f, d, d);
        l.set_block(0, 0, t->left_mult(i));
        data.left_mult.push_back(std::move(l));
    }
    for (std::size_t j = 0; j < du; ++j) {
        Matrix l(f, d, d);
        l.set_block(ou, ou, u->left_mult(j));
        l.set_block(om, om, m.left_action(j));
        data.left_mult.push_back(std::move(l));
    }
    for (std::size_t k = 0; k < dm; ++k) {
        // (0, m_k, 0) * (t', m', u') = (0, m_k t', 0)
        Matrix l(f, d, d);
        for (std::size_t i = 0; i < dt; ++i)
            for (std::size_t r = 0; r < dm; ++r)
                l(om + r, i) = m.right_action(i)(r, k);
        data.left_mult.push_back(std::move(l));
    }
    data.unit = zero_vec(d);
    for (std::size_t i = 0; i < dt; ++i)
        data.unit[i] = t->unit()[i];
    for (std::size_t j = 0; j < du; ++j)
        data.unit[ou + j] = u->unit()[j];
    for (std::size_t i = 0; i < t->idempotent_count(); ++i) {
        Vec e = zero_vec(d);
        for (std::size_t k = 0; k < dt; ++k)
            e[k] = t->idempotent(i)[k];
        data.idempotents.push_back(e);
        data.idempotent_labels.push_back("T:" + t->idempotent_labels()[i]);
    }
    for (std::size_t i = 0; i < u->idempotent_count(); ++i) {
        Vec e = zero_vec(d);
        for (std::size_t k = 0; k < du; ++k)
            e[ou + k] = u->idempotent(i)[k];
        data.idempotents.push_back(e);
        data.idempotent_labels.push_back("U:" + u->idempotent_labels()[i]);
    }
    for (std::size_t c = 0; c < t->radical_basis().cols(); ++c) {
        Vec r = zero_vec(d);
        for (std::size_t k = 0; k < dt; ++k)
            r[k] = t->radical_basis()(k, c);
        data.radical.push_back(r);
    }
    for (std::size_t c = 0; c < u->radical_basis().cols(); ++c) {
        Vec r = zero_vec(d);
        for (std::size_t k = 0; k < du; ++k)
            r[ou + k] = u->radical_basis()(k, c);
        data.radical.push_back(r);
    }
    for (std::size_t k = 0; k < dm; ++k) {
        Vec r = zero_vec(d);
        r[om + k] = 1;
        data.radical.push_back(r);
    }
    return Algebra::create(std::move(data));
}

// ----------------------------------------------------------------- tensor

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!(a->field() == b->field()))
        throw InvalidInput("tensor product: field mismatch");
    const Field f = a->field();
    const std::size_t da = a->dim(), db = b->dim(), d = da * db;
    AlgebraData data;
    data.field = f;
    data.name = a->name() + "(x)" + b->name();
    for (const auto& la : a->labels())
        for (const auto& lb : b->labels())
            data.labels.push_back(la + "|" + lb);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            data.left_mult.push_back(Matrix::kronecker(a->left_mult(i), b->left_mult(j)));
    auto kron_vec = [&](const Vec& x, const Vec& y) {
        Vec v(d);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j)
                v[i * db + j] = f.mul(x[i], y[j]);
        return v;
    };
    data.unit = kron_vec(a->unit(), b->unit());
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
        for (std::size_t j = 0; j < b->idempotent_count(); ++j) {
            data.idempotents.push_back(kron_vec(a->idempotent(i), b->idempotent(j)));
            data.idempotent_labels.push_back(a->idempotent_labels()[i] + "|" +
                                             b->idempotent_labels()[j]);
        }
    for (std::size_t c = 0; c < a->radical_basis().cols(); ++c)
        for (std::size_t j = 0; j < db; ++j)
            data.radical.push_back(kron_vec(a->radical_basis().col(c), b->basis_vector(j)));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t c = 0; c < b->radical_basis().cols(); ++c)
            data.radical.push_back(kron_vec(a->basis_vector(i), b->radical_basis().col(c)));
    return Algebra::create(std::move(data));
}

AlgebraPtr tensor_with_path_algebra(const AlgebraPtr& t, const Quiver& q) {
    if (!q.is_type_A())
        throw InvalidInput("tensor_with_path_algebra: quiver is not of type A_n");
    auto kq = build_bound_quiver_algebra(q, std::vector<Relation>{}, t->field(), "kQ");
    return tensor_product(t, kq);
}

// ----------------------------------------------------------------- corner

Corner corner_algebra(const AlgebraPtr& a, const std::vector<std::size_t>& idempotents) {
    const Field f = a->field();
    const std::size_t d = a->dim();
    Vec e = zero_vec(d);
    for (auto i : idempotents) {
        if (i >= a->idempotent_count())
            throw InvalidInput("corner: idempotent index out of range");
        for (std::size_t k = 0; k < d; ++k)
            e[k] = f.add(e[k], a->idempotent(i)[k]);
    }
    Matrix proj = a->left_mult_by(e) * a->right_mult_by(e);
    Matrix b = image_basis(proj);
    Matrix linv = left_inverse(b);
    const std::size_t dc = b.cols();
    AlgebraData data;
    data.field = f;
    data.name = "corner(" + a->name() + ")";
    for (std::size_t i = 0; i < dc; ++i) {
        std::string l = single_label(a->labels(), b.col(i));
        data.labels.push_back(l.empty() ? "c" + std::to_string(i + 1) : l);
    }
    for (std::size_t i = 0; i < dc; ++i)
        data.left_mult.push_back(linv * a->left_mult_by(b.col(i)) * b);
    data.unit = linv.apply(e);
    for (auto i : idempotents) {
        data.idempotents.push_back(linv.apply(a->idempotent(i)));
        data.idempotent_labels.push_back(a->idempotent_labels()[i]);
    }
    Matrix rad = image_basis(proj * a->radical_basis());
    for (std::size_t c = 0; c < rad.cols(); ++c)
        data.radical.push_back(linv.apply(rad.col(c)));
    return Corner{Algebra::create(std::move(data)), b};
}

// --------------------------------------------------------- presentations

bool is_algebra_map(const Algebra& a, const Algebra& b, const Matrix& map, bool unital) {
    if (map.rows() != b.dim() || map.cols() != a.dim())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!(map * a.left_mult(i) == b.left_mult_by(map.col(i)) * map))
            return false;
    return !unital || map.apply(a.unit()) == b.unit();
}

bool algebras_isomorphic_as_presented(const Algebra& a, const Algebra& b, const Matrix& map) {
    if (a.dim() != b.dim())
        throw InvalidInput("algebras_isomorphic_as_presented: dimensions differ");
    if (rank(map) != a.dim())
        return false;
    return is_algebra_map(a, b, map, true);
}

Matrix basis_map_by_labels(const Algebra& a, const Algebra& b, const std::string& suffix) {
    Matrix m(a.field(), b.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        m(b.index_of(a.labels()[i] + suffix), i) = 1;
    return m;
}

}  // namespace litalg
