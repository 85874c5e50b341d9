#pragma once

#include <optional>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

/// Dense matrix over exact rationals. Desk-scale only; elimination is plain
/// fraction-free-less Gauss-Jordan.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), c_(size_t(rows) * cols, Rat(0)) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return c_[size_t(i) * cols_ + j]; }
    Rat& at(int i, int j) { return c_[size_t(i) * cols_ + j]; }

    RatMat transposed() const;
    RatMat operator*(const RatMat& o) const;
    std::vector<Rat> operator*(const std::vector<Rat>& v) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
    }

    bool is_zero() const;
    bool is_symmetric() const;

    int rank() const;
    /// Basis of the right kernel (column vectors).
    std::vector<std::vector<Rat>> kernel() const;
    /// Solves A x = b; nullopt if inconsistent. For underdetermined systems
    /// returns one solution with free variables set to zero.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    /// Inverse of a square matrix; nullopt if singular.
    std::optional<RatMat> inverse() const;

private:
    /// In-place reduced row echelon form; returns pivot column per row.
    std::vector<int> rref();

    int rows_ = 0, cols_ = 0;
    std::vector<Rat> c_;
};

}  // namespace manin
