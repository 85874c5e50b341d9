#include "manin/ratmat.hpp"

#include <stdexcept>

namespace manin {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

std::vector<Rat> RatMat::operator*(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("RatMat: shape mismatch in matrix-vector product");
    std::vector<Rat> r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in sum");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: shape mismatch in difference");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool RatMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::vector<int> RatMat::rref() {
    std::vector<int> pivot_col;
    int lead = 0;
    for (int r = 0; r < rows_ && lead < cols_; ++r) {
        int p = -1;
        while (lead < cols_) {
            for (int i = r; i < rows_; ++i)
                if (!at(i, lead).is_zero()) {
                    p = i;
                    break;
                }
            if (p >= 0) break;
            ++lead;
        }
        if (lead >= cols_) break;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rat inv = Rat(1) / at(r, lead);
        for (int j = 0; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, lead).is_zero()) continue;
            Rat factor = at(i, lead);
            for (int j = 0; j < cols_; ++j) at(i, j) -= factor * at(r, j);
        }
        pivot_col.push_back(lead);
        ++lead;
    }
    return pivot_col;
}

int RatMat::rank() const {
    RatMat m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<Rat>> RatMat::kernel() const {
    RatMat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("RatMat::solve: rhs size mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == cols_) return std::nullopt;  // row (0 ... 0 | 1)
    std::vector<Rat> x(cols_, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), cols_);
    return x;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
    RatMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rat(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != static_cast<int>(r)) return std::nullopt;
    RatMat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

}  // namespace manin
