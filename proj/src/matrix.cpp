#include "reltilt/matrix.hpp"

#include <sstream>

namespace reltilt {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty) {
    if (rows.empty()) return Matrix(0, cols_if_empty);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionError("ragged matrix literal");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = fp::from_int(rows[i][j]);
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

bool Matrix::is_zero() const {
    for (Scalar x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                             std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(rows_, o.cols_);
    const std::uint64_t p = fp::prime();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0) continue;
            const Scalar* orow = o.row_ptr(k);
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * orow[j]) % p;
        }
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = Scalar(acc[j]);
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp::add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp::sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(Scalar c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = fp::mul(data_[i], c);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::append_row(const std::vector<Scalar>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionError("append_row width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    std::size_t nr = 0, nc = 0;
    for (const auto& b : blocks) {
        nr += b.rows_;
        nc += b.cols_;
    }
    Matrix r(nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        r.set_block(r0, c0, b);
        r0 += b.rows_;
        c0 += b.cols_;
    }
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << fp::to_signed((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& a) {
    RrefResult res;
    res.reduced = a;
    Matrix& m = res.reduced;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && m(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
        Scalar iv = fp::inv(m(r, c));
        for (std::size_t j = c; j < C; ++j) m(r, j) = fp::mul(m(r, j), iv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (m(r, j) != 0) m(i, j) = fp::sub(m(i, j), fp::mul(f, m(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix kernel(const Matrix& a) {
    const std::size_t C = a.cols();
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(C, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    Matrix k(0, C);
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(C, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = fp::neg(rr.reduced(i, f));
        k.append_row(v);
    }
    return k;
}

Matrix left_kernel(const Matrix& a) { return kernel(a.transpose()); }

SolveResult solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve: A has " + std::to_string(a.rows()) + " rows but B has " +
                             std::to_string(b.rows()));
    SolveResult res;
    res.kernel = kernel(a);
    const std::size_t n = a.cols(), m = b.cols();
    RrefResult rr = rref(Matrix::hstack(a, b));
    for (std::size_t i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] >= n) return res;  // inconsistent
    Matrix x(n, m);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < m; ++j) x(rr.pivots[i], j) = rr.reduced(i, n + j);
    res.solution = std::move(x);
    return res;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto r = solve(a.transpose(), b.transpose());
    if (!r.solution) return std::nullopt;
    return r.solution->transpose();
}

Matrix row_basis(const Matrix& a) {
    RrefResult rr = rref(a);
    return rr.reduced.block(0, 0, rr.rank, a.cols());
}

SubspacePair subspace_sum_intersect(const Matrix& u, const Matrix& v) {
    if (u.cols() != v.cols()) throw DimensionError("subspace_sum_intersect: ambient dimensions differ");
    SubspacePair res;
    res.sum = row_basis(Matrix::vstack(u, v));
    // (a, b) with a U = b V.
    Matrix stacked = Matrix::vstack(u, v.scaled(fp::neg(1 % fp::prime())));
    Matrix lk = left_kernel(stacked);
    Matrix a = lk.block(0, 0, lk.rows(), u.rows());
    res.intersection = row_basis(a * u);
    return res;
}

bool row_space_contains(const Matrix& space, const Matrix& sub) {
    if (sub.rows() == 0) return true;
    if (space.cols() != sub.cols()) throw DimensionError("row_space_contains width mismatch");
    return rank(Matrix::vstack(space, sub)) == rank(space);
}

Complement complement_of(const Matrix& w, std::size_t n) {
    if (w.rows() > 0 && w.cols() != n) throw DimensionError("complement_of width mismatch");
    RrefResult rr = rref(w.rows() ? w : Matrix(0, n));
    Matrix wb = rr.reduced.block(0, 0, rr.rank, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    Complement res;
    res.complement = Matrix(0, n);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> e(n, 0);
        e[c] = 1;
        res.complement.append_row(e);
        free_cols.push_back(c);
    }
    // Basis T = [W; C] is invertible; quotient = last columns of T^{-1}.
    // Writing x = a W + c C, reading the free coordinates: x_f = (aW)_f + c_f.
    // Since W is in rref, a_i = x_{pivot_i}; then c_f = x_f - sum_i x_{pivot_i} W(i, f).
    res.quotient = Matrix(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        res.quotient(f, k) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) res.quotient(rr.pivots[i], k) = fp::neg(wb(i, f));
    }
    return res;
}

Matrix matrix_power(const Matrix& a, std::uint64_t k) {
    if (a.rows() != a.cols()) throw DimensionError("matrix_power needs a square matrix");
    Matrix r = Matrix::identity(a.rows());
    Matrix b = a;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool is_nilpotent(const Matrix& a) { return matrix_power(a, a.rows()).is_zero(); }

}  // namespace reltilt
