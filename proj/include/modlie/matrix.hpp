#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlie/fp.hpp"

namespace modlie {

// Dense row-major matrix over F_p with a runtime modulus.  Vectors are
// columns: apply(v) computes M*v, and a module action sends basis element i
// to the matrix acting on column vectors.
class FpMatrix {
  public:
    FpMatrix(size_t rows, size_t cols, unsigned p)
        : rows_(rows), cols_(cols), f_(p), data_(rows * cols, 0) {}

    static FpMatrix identity(size_t n, unsigned p) {
        FpMatrix m(n, n, p);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FpMatrix from_rows(const std::vector<Vec>& rows, size_t cols, unsigned p) {
        FpMatrix m(rows.size(), cols, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned modulus() const { return f_.p; }
    const Fp& field() const { return f_; }

    unsigned& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    unsigned at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Vec row(size_t i) const {
        return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(size_t i, const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
        for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j] % f_.p;
    }

    // Column-vector action: (M v)_i = sum_j M_ij v_j.
    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
        Vec r(rows_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (size_t j = 0; j < cols_; ++j)
                acc += static_cast<std::uint64_t>(at(i, j)) * v[j];
            r[i] = static_cast<unsigned>(acc % f_.p);
        }
        return r;
    }

    FpMatrix mul(const FpMatrix& o) const {
        if (cols_ != o.rows_ || f_.p != o.f_.p)
            throw std::invalid_argument("mul: shape or modulus mismatch");
        FpMatrix r(rows_, o.cols_, f_.p);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                unsigned a = at(i, k);
                if (!a) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(a, o.at(k, j)));
            }
        return r;
    }

    FpMatrix add(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(rows_, cols_, f_.p);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(data_[i], o.data_[i]);
        return r;
    }

    FpMatrix sub(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(rows_, cols_, f_.p);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.sub(data_[i], o.data_[i]);
        return r;
    }

    FpMatrix scaled(unsigned c) const {
        FpMatrix r(rows_, cols_, f_.p);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.mul(c, data_[i]);
        return r;
    }

    FpMatrix powed(std::uint64_t e) const {
        if (rows_ != cols_) throw std::invalid_argument("powed: matrix not square");
        FpMatrix r = identity(rows_, f_.p);
        FpMatrix base = *this;
        while (e) {
            if (e & 1) r = r.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return r;
    }

    FpMatrix transposed() const {
        FpMatrix r(cols_, rows_, f_.p);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (unsigned x : data_)
            if (x) return false;
        return true;
    }

    const Vec& flatten() const { return data_; }

    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && f_.p == o.f_.p && data_ == o.data_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  private:
    void check_same_shape(const FpMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || f_.p != o.f_.p)
            throw std::invalid_argument("matrix op: shape or modulus mismatch");
    }

    size_t rows_, cols_;
    Fp f_;
    Vec data_;
};

struct RrefResult {
    FpMatrix mat;
    std::vector<unsigned> pivots;  // column index of each pivot row
};

// Reduced row echelon form with deterministic pivoting (first nonzero entry
// scanning rows top-down).  Canonical for a given row space.
RrefResult rref(FpMatrix m);

// One solution of M x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const FpMatrix& m, const Vec& b);

// Canonical basis (RREF rows) of the right null space {x : M x = 0}.
FpMatrix kernel_basis(const FpMatrix& m);

unsigned rank(const FpMatrix& m);

}  // namespace modlie
