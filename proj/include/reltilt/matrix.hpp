#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reltilt/field.hpp"

namespace reltilt {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over F_p.
//
// Vectors are rows throughout the library: a linear map V -> W with dim V = m,
// dim W = n is an m x n matrix acting by v |-> v * A. A "basis matrix" holds
// one basis vector per row.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const Scalar* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    std::vector<Scalar> row(std::size_t i) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar c) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    void append_row(const std::vector<Scalar>& r);
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const std::vector<Matrix>& blocks);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Basis (as rows) of { v column : A v = 0 }.
Matrix kernel(const Matrix& a);
// Basis (as rows) of { x row : x A = 0 }.
Matrix left_kernel(const Matrix& a);

struct SolveResult {
    std::optional<Matrix> solution;  // some X with A X = B
    Matrix kernel;                   // rows span { v : A v = 0 }
};
// Throws DimensionError when A and B have different row counts.
SolveResult solve(const Matrix& a, const Matrix& b);
// X with X A = B (row convention), if any.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

// Independent rows spanning the row space, in reduced form.
Matrix row_basis(const Matrix& a);

struct SubspacePair {
    Matrix sum;
    Matrix intersection;
};
// U, V are spanning sets given as rows of the same width.
SubspacePair subspace_sum_intersect(const Matrix& u, const Matrix& v);

// Row-space containment: every row of `sub` lies in the row space of `space`.
bool row_space_contains(const Matrix& space, const Matrix& sub);

// For a subspace W of F^n (rows of w, independent or not), a basis C of a complement
// made of unit vectors, together with the quotient map F^n -> F^n / W in those coordinates
// (n x dim C, kernel exactly W).
struct Complement {
    Matrix complement;  // rows: unit vectors
    Matrix quotient;    // n x c
};
Complement complement_of(const Matrix& w, std::size_t n);

// A^k for square A.
Matrix matrix_power(const Matrix& a, std::uint64_t k);
bool is_nilpotent(const Matrix& a);

}  // namespace reltilt
