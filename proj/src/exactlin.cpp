#include "litalg/exactlin.hpp"

#include <sstream>

namespace litalg {

bool is_prime(std::uint32_t p) {
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p > 65521)
        throw InvalidInput("field characteristic must be a prime below 65536, got " +
                           std::to_string(p));
}

Scalar Field::inv(Scalar a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = f.reduce(rows[r][c]);
    }
    return m;
}

Matrix Matrix::column(Field f, const Vec& v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::hstack(Field f, std::size_t rows, const std::vector<Matrix>& blocks) {
    std::size_t nc = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw InvalidInput("hstack: row count mismatch");
        nc += b.cols();
    }
    Matrix m(f, rows, nc);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(0, c0, b);
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::vstack(Field f, std::size_t cols, const std::vector<Matrix>& blocks) {
    std::size_t nr = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw InvalidInput("vstack: column count mismatch");
        nr += b.rows();
    }
    Matrix m(f, nr, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, 0, b);
        r0 += b.rows();
    }
    return m;
}

Matrix Matrix::block_diagonal(Field f, const std::vector<Matrix>& blocks) {
    std::size_t nr = 0, nc = 0;
    for (const auto& b : blocks) {
        nr += b.rows();
        nc += b.cols();
    }
    Matrix m(f, nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    Matrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Scalar s = a(i, j);
            if (s == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw InvalidInput("matrix product: inner dimensions differ");
    const std::uint64_t p = field_.characteristic();
    Matrix out(field_, rows_, o.cols_);
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = data_[i * cols_ + k];
            if (a == 0)
                continue;
            const Scalar* row = &o.data_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j)
                acc[j] += a * row[j];
            // keep the accumulator bounded for large p
            if (p > 4096 && (k & 63) == 63)
                for (auto& x : acc)
                    x %= p;
        }
        for (std::size_t j = 0; j < o.cols_; ++j)
            out.data_[i * o.cols_ + j] = static_cast<Scalar>(acc[j] % p);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix sum: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix difference: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar s) const {
    Matrix out(*this);
    for (auto& x : out.data_)
        x = field_.mul(x, s);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw InvalidInput("matrix-vector product: size mismatch");
    const std::uint64_t p = field_.characteristic();
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = (acc + std::uint64_t{data_[i * cols_ + j]} * v[j]) % p;
        out[i] = static_cast<Scalar>(acc);
    }
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw InvalidInput("block out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw InvalidInput("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            out(i, j) = (*this)(i, idx[j]);
    return out;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

bool Matrix::is_zero() const {
    for (auto x : data_)
        if (x)
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Echelon row_reduce(Matrix m) {
    const Field f = m.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t r = row; r < nr; ++r)
            if (m(r, col)) {
                sel = r;
                break;
            }
        if (sel == nr)
            continue;
        if (sel != row)
            for (std::size_t c = col; c < nc; ++c)
                std::swap(m(sel, c), m(row, c));
        Scalar iv = f.inv(m(row, col));
        if (iv != 1)
            for (std::size_t c = col; c < nc; ++c)
                m(row, c) = f.mul(m(row, c), iv);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row)
                continue;
            Scalar factor = m(r, col);
            if (!factor)
                continue;
            Scalar nf = p - factor;
            for (std::size_t c = col; c < nc; ++c) {
                Scalar pv = m(row, c);
                if (pv)
                    m(r, c) = static_cast<Scalar>((m(r, c) + std::uint64_t{nf} * pv) % p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    // eliminate on the shorter side
    if (m.rows() > m.cols())
        return row_reduce(m.transpose()).pivots.size();
    return row_reduce(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
    const Field f = m.field();
    const std::size_t nc = m.cols();
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(nc, false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix k(f, nc, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            k(ech.pivots[r], j) = f.neg(ech.rref(r, free[j]));
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw InvalidInput("solve: row counts differ");
    const Field f = a.field();
    const std::size_t n = a.cols(), k = b.cols();
    auto ech = row_reduce(Matrix::hstack(f, a.rows(), {a, b}));
    Matrix x(f, n, k);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        std::size_t pc = ech.pivots[r];
        if (pc >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < k; ++j)
            x(pc, j) = ech.rref(r, n + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || !(m * *x).is_identity())
        return std::nullopt;
    return x;
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
    if (m.cols() == 0)
        return {};
    return row_reduce(m).pivots;
}

Matrix image_basis(const Matrix& m) { return m.columns(pivot_columns(m)); }

Matrix left_inverse(const Matrix& b) {
    auto lt = solve(b.transpose(), Matrix::identity(b.field(), b.cols()));
    if (!lt)
        throw InvalidInput("left_inverse: matrix lacks full column rank");
    return lt->transpose();
}

Matrix complement_basis(const Matrix& b) {
    const Field f = b.field();
    const std::size_t n = b.rows();
    auto piv = pivot_columns(Matrix::hstack(f, n, {b, Matrix::identity(f, n)}));
    std::vector<std::size_t> extra;
    for (auto c : piv)
        if (c >= b.cols())
            extra.push_back(c - b.cols());
    return Matrix::identity(f, n).columns(extra);
}

Matrix power(const Matrix& m, std::size_t k) {
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

void IncrementalBasis::reduce(Vec& v) const {
    const std::uint32_t p = field_.characteristic();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = v[pivots_[i]];
        if (!c)
            continue;
        Scalar nc = p - c;
        const Vec& row = rows_[i];
        for (std::size_t j = 0; j < n_; ++j)
            if (row[j])
                v[j] = static_cast<Scalar>((v[j] + std::uint64_t{nc} * row[j]) % p);
    }
}

bool IncrementalBasis::add(Vec v) {
    reduce(v);
    std::size_t piv = n_;
    if (pivot_high_) {
        for (std::size_t j = n_; j-- > 0;)
            if (v[j]) {
                piv = j;
                break;
            }
    } else {
        for (std::size_t j = 0; j < n_; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
    }
    if (piv == n_)
        return false;
    Scalar iv = field_.inv(v[piv]);
    for (auto& x : v)
        x = field_.mul(x, iv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool IncrementalBasis::contains(Vec v) const {
    reduce(v);
    for (auto x : v)
        if (x)
            return false;
    return true;
}

}  // namespace litalg
