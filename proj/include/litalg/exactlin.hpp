#pragma once

// Dense exact linear algebra over prime fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace litalg {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Raised for malformed input anywhere in the library (bad shapes, broken
/// axioms, invalid presentations). The CLI maps it to exit code 2.
class InvalidInput : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The prime field F_p.
class Field {
  public:
    Field() = default;
    explicit Field(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    Scalar reduce(std::int64_t v) const {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    }
    Scalar inv(Scalar a) const;

    bool operator==(const Field&) const = default;

  private:
    std::uint32_t p_ = 2;
};

bool is_prime(std::uint32_t p);

/// Row-major matrix with entries in [0, p).
class Matrix {
  public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix column(Field f, const Vec& v);
    static Matrix hstack(Field f, std::size_t rows, const std::vector<Matrix>& blocks);
    static Matrix vstack(Field f, std::size_t cols, const std::vector<Matrix>& blocks);
    static Matrix block_diagonal(Field f, const std::vector<Matrix>& blocks);
    static Matrix kronecker(const Matrix& a, const Matrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& data() const { return data_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar s) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Vec col(std::size_t c) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::string to_string() const;

  private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with pivot columns (leftmost nonzero, topmost row).
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right null space. Free variables are taken in
/// increasing column order; each basis vector has a 1 in its free column.
Matrix kernel_basis(const Matrix& m);

/// One solution X of aX = b with free variables zeroed, or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Indices of the leftmost linearly independent columns.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// Basis of the column space made of the pivot columns of m.
Matrix image_basis(const Matrix& m);

/// L with L*b = I for b of full column rank.
Matrix left_inverse(const Matrix& b);

/// Columns e_j extending the column space of b to the whole space, in
/// increasing j.
Matrix complement_basis(const Matrix& b);

/// Multiplies m by itself k times.
Matrix power(const Matrix& m, std::size_t k);

/// Echelon basis grown one vector at a time. Each stored row is zero at the
/// pivots of the rows inserted before it, so reduction walks rows in order.
class IncrementalBasis {
  public:
    IncrementalBasis(Field f, std::size_t n, bool pivot_high = false)
        : field_(f), n_(n), pivot_high_(pivot_high) {}

    /// Reduces v in place against the stored rows.
    void reduce(Vec& v) const;
    /// Adds v if it is independent of the stored rows; returns whether it was.
    bool add(Vec v);
    bool contains(Vec v) const;

    std::size_t size() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<Vec>& rows() const { return rows_; }

  private:
    Field field_;
    std::size_t n_;
    bool pivot_high_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace litalg
