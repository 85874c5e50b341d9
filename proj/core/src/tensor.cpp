#include "manin/tensor.hpp"

#include <array>
#include <stdexcept>

namespace manin {

namespace {
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
}};
constexpr std::array<int, 6> kPerm3Sign = {1, 1, 1, -1, -1, -1};
}  // namespace

Tensor2::Tensor2(BasedSpace space) : space_(std::move(space)) {
    c_.assign(static_cast<size_t>(space_.dim()) * space_.dim(), Rat(0));
}

Tensor2 Tensor2::symmetric_part() const {
    Tensor2 s(space_);
    Rat half(1, 2);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) s.at(i, j) = half * (at(i, j) + at(j, i));
    return s;
}

Tensor2 Tensor2::antisymmetric_part() const {
    Tensor2 a(space_);
    Rat half(1, 2);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) a.at(i, j) = half * (at(i, j) - at(j, i));
    return a;
}

bool Tensor2::is_antisymmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool Tensor2::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 r(space_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (space_ != o.space_) throw std::invalid_argument("Tensor2: mismatched spaces");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (space_ != o.space_) throw std::invalid_argument("Tensor2: mismatched spaces");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Multivector Tensor2::to_multivector() const {
    if (!is_antisymmetric())
        throw std::invalid_argument("Tensor2::to_multivector: not antisymmetric");
    Multivector m(space_, 2);
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            m.add_coeff((Blade(1) << i) | (Blade(1) << j), at(i, j));
    return m;
}

Tensor2 Tensor2::from_multivector(const Multivector& m) {
    if (m.degree() != 2) throw std::invalid_argument("Tensor2::from_multivector: degree");
    Tensor2 t(m.space());
    for (const auto& [b, c] : m.terms()) {
        auto idx = blade_indices(b);
        t.at(idx[0], idx[1]) = c;
        t.at(idx[1], idx[0]) = -c;
    }
    return t;
}

Tensor3::Tensor3(BasedSpace space) : space_(std::move(space)) {
    c_.assign(static_cast<size_t>(space_.dim()) * space_.dim() * space_.dim(), Rat(0));
}

bool Tensor3::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool Tensor3::is_totally_antisymmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                if (at(i, j, k) != -at(j, i, k)) return false;
                if (at(i, j, k) != -at(i, k, j)) return false;
            }
    return true;
}

Tensor3 Tensor3::antisymmetrize() const {
    Tensor3 r(space_);
    Rat sixth(1, 6);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                std::array<int, 3> idx = {i, j, k};
                Rat acc(0);
                for (int p = 0; p < 6; ++p) {
                    const auto& pr = kPerm3[p];
                    Rat v = at(idx[pr[0]], idx[pr[1]], idx[pr[2]]);
                    acc += kPerm3Sign[p] > 0 ? v : -v;
                }
                r.at(i, j, k) = sixth * acc;
            }
    return r;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 r(space_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (space_ != o.space_) throw std::invalid_argument("Tensor3: mismatched spaces");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (space_ != o.space_) throw std::invalid_argument("Tensor3: mismatched spaces");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Multivector Tensor3::to_multivector() const {
    if (!is_totally_antisymmetric())
        throw std::invalid_argument("Tensor3::to_multivector: not totally antisymmetric");
    Multivector m(space_, 3);
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            for (int k = j + 1; k < dim(); ++k)
                m.add_coeff((Blade(1) << i) | (Blade(1) << j) | (Blade(1) << k), at(i, j, k));
    return m;
}

Tensor3 Tensor3::from_multivector(const Multivector& m) {
    if (m.degree() != 3) throw std::invalid_argument("Tensor3::from_multivector: degree");
    Tensor3 t(m.space());
    for (const auto& [b, c] : m.terms()) {
        auto idx = blade_indices(b);
        std::array<int, 3> v = {idx[0], idx[1], idx[2]};
        for (int p = 0; p < 6; ++p) {
            const auto& pr = kPerm3[p];
            t.at(v[pr[0]], v[pr[1]], v[pr[2]]) = kPerm3Sign[p] > 0 ? c : -c;
        }
    }
    return t;
}

Jacobiator::Jacobiator(BasedSpace space) : space_(std::move(space)) {
    size_t n = space_.dim();
    c_.assign(n * n * n * n, Rat(0));
}

bool Jacobiator::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Jacobiator::Violation> Jacobiator::first_violation() const {
    int n = space_.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (!at(i, j, k, l).is_zero()) return Violation{i, j, k, l, at(i, j, k, l)};
    return std::nullopt;
}

StructureConstants::StructureConstants(BasedSpace space) : space_(std::move(space)) {
    size_t n = space_.dim();
    c_.assign(n * n * n, Rat(0));
}

StructureConstants StructureConstants::from_entries(
    BasedSpace space, const std::vector<std::tuple<int, int, int, Rat>>& entries) {
    StructureConstants f(std::move(space));
    for (const auto& [i, j, k, v] : entries) f.set(i, j, k, v);
    return f;
}

void StructureConstants::set(int i, int j, int k, const Rat& v) {
    if (i == j && !v.is_zero())
        throw std::invalid_argument("StructureConstants: f_ii^k must vanish");
    c_[(i * dim() + j) * dim() + k] = v;
    c_[(j * dim() + i) * dim() + k] = -v;
}

void StructureConstants::check_antisymmetry() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < dim(); ++k)
                if (f(i, j, k) != -f(j, i, k))
                    throw std::invalid_argument(
                        "StructureConstants: antisymmetry violated at (i,j,k)=(" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                        ")");
}

std::vector<Rat> StructureConstants::bracket(const std::vector<Rat>& x,
                                             const std::vector<Rat>& y) const {
    std::vector<Rat> z(dim(), Rat(0));
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Rat xy = x[i] * y[j];
            for (int k = 0; k < dim(); ++k) {
                const Rat& fij = f(i, j, k);
                if (!fij.is_zero()) z[k] += xy * fij;
            }
        }
    }
    return z;
}

Multivector StructureConstants::bracket(const Multivector& x, const Multivector& y) const {
    if (x.degree() != 1 || y.degree() != 1)
        throw std::invalid_argument("StructureConstants::bracket: degree-1 inputs expected");
    Multivector z(space_, 1);
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            int i = blade_indices(bx)[0];
            int j = blade_indices(by)[0];
            Rat cij = cx * cy;
            for (int k = 0; k < dim(); ++k) {
                const Rat& fij = f(i, j, k);
                if (!fij.is_zero()) z.add_coeff(Blade(1) << k, cij * fij);
            }
        }
    return z;
}

Jacobiator jacobi_defect(const StructureConstants& f) {
    f.check_antisymmetry();
    int n = f.dim();
    Jacobiator J(f.space());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rat acc(0);
                    for (int m = 0; m < n; ++m) {
                        acc += f.f(i, j, m) * f.f(m, k, l);
                        acc += f.f(j, k, m) * f.f(m, i, l);
                        acc += f.f(k, i, m) * f.f(m, j, l);
                    }
                    if (acc.is_zero()) continue;
                    // The Jacobiator is totally antisymmetric in (i,j,k);
                    // record all signed permutations for direct lookup.
                    J.at(i, j, k, l) = acc;
                    J.at(j, k, i, l) = acc;
                    J.at(k, i, j, l) = acc;
                    J.at(j, i, k, l) = -acc;
                    J.at(i, k, j, l) = -acc;
                    J.at(k, j, i, l) = -acc;
                }
    return J;
}

Cobracket::Cobracket(BasedSpace space) : space_(std::move(space)) {
    size_t n = space_.dim();
    c_.assign(n * n * n, Rat(0));
}

void Cobracket::set(int i, int j, int k, const Rat& v) {
    if (j == k && !v.is_zero())
        throw std::invalid_argument("Cobracket: F_i^{jj} must vanish");
    c_[(i * dim() + j) * dim() + k] = v;
    c_[(i * dim() + k) * dim() + j] = -v;
}

bool Cobracket::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

Multivector Cobracket::of_basis(int i) const {
    Multivector m(space_, 2);
    for (int j = 0; j < dim(); ++j)
        for (int k = j + 1; k < dim(); ++k)
            m.add_coeff((Blade(1) << j) | (Blade(1) << k), F(i, j, k));
    return m;
}

Multivector Cobracket::of(const Multivector& x) const {
    if (x.degree() != 1) throw std::invalid_argument("Cobracket::of: degree-1 input expected");
    Multivector m(space_, 2);
    for (const auto& [b, c] : x.terms()) {
        Multivector fi = of_basis(blade_indices(b)[0]);
        fi *= c;
        m += fi;
    }
    return m;
}

}  // namespace manin
