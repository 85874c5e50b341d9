#include "manin/multivector.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace manin {

int blade_degree(Blade b) { return std::popcount(b); }

int blade_wedge_sign(Blade a, Blade b) {
    if (a & b) return 0;
    // Count transpositions moving each factor of b past the factors of a
    // above it.
    int inversions = 0;
    Blade bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int permutation_sign(std::span<const int> idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return sign;
}

Blade blade_of(std::span<const int> sorted_idx) {
    Blade b = 0;
    for (int i : sorted_idx) b |= Blade(1) << i;
    return b;
}

std::vector<int> blade_indices(Blade b) {
    std::vector<int> idx;
    while (b) {
        idx.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return idx;
}

Multivector::Multivector(BasedSpace space, int degree)
    : space_(std::move(space)), degree_(degree) {
    if (degree < 0 || degree > space_.dim())
        degree_ = degree;  // degree > dim is legal; such elements are zero
    if (space_.dim() > 64) throw std::invalid_argument("Multivector: dimension > 64");
}

Multivector Multivector::scalar(const BasedSpace& space, const Rat& value) {
    Multivector m(space, 0);
    if (!value.is_zero()) m.comp_[0] = value;
    return m;
}

Multivector Multivector::basis(const BasedSpace& space, int i) {
    if (i < 0 || i >= space.dim()) throw std::out_of_range("Multivector::basis");
    Multivector m(space, 1);
    m.comp_[Blade(1) << i] = Rat(1);
    return m;
}

Multivector Multivector::vector(const BasedSpace& space, const std::vector<Rat>& coeffs) {
    if (static_cast<int>(coeffs.size()) != space.dim())
        throw std::invalid_argument("Multivector::vector: coefficient count");
    Multivector m(space, 1);
    for (int i = 0; i < space.dim(); ++i)
        if (!coeffs[i].is_zero()) m.comp_[Blade(1) << i] = coeffs[i];
    return m;
}

const Rat& Multivector::coeff(Blade b) const {
    static const Rat zero(0);
    auto it = comp_.find(b);
    return it == comp_.end() ? zero : it->second;
}

Rat Multivector::component(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != degree_) return Rat(0);
    int sign = permutation_sign(idx);
    if (sign == 0) return Rat(0);
    Blade b = 0;
    for (int i : idx) {
        if (i < 0 || i >= space_.dim()) throw std::out_of_range("Multivector::component");
        b |= Blade(1) << i;
    }
    Rat c = coeff(b);
    return sign > 0 ? c : -c;
}

void Multivector::set_coeff(Blade b, const Rat& value) {
    if (blade_degree(b) != degree_)
        throw std::invalid_argument("Multivector::set_coeff: blade degree mismatch");
    if (value.is_zero())
        comp_.erase(b);
    else
        comp_[b] = value;
}

void Multivector::add_coeff(Blade b, const Rat& value) {
    if (value.is_zero()) return;
    if (blade_degree(b) != degree_)
        throw std::invalid_argument("Multivector::add_coeff: blade degree mismatch");
    auto [it, inserted] = comp_.try_emplace(b, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

void Multivector::check_space(const Multivector& o) const {
    if (space_ != o.space_)
        throw std::invalid_argument("Multivector: mismatched based spaces");
    if (degree_ != o.degree_)
        throw std::invalid_argument("Multivector: mismatched degrees");
}

Multivector Multivector::operator-() const {
    Multivector m(*this);
    for (auto& [b, c] : m.comp_) c = -c;
    return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    check_space(o);
    for (const auto& [b, c] : o.comp_) add_coeff(b, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    check_space(o);
    for (const auto& [b, c] : o.comp_) add_coeff(b, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rat& c) {
    if (c.is_zero()) {
        comp_.clear();
        return *this;
    }
    for (auto& [b, v] : comp_) v *= c;
    return *this;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.space_ == b.space_ && a.degree_ == b.degree_ && a.comp_ == b.comp_;
}

std::ostream& operator<<(std::ostream& os, const Multivector& m) {
    if (m.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [b, c] : m.comp_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int i : blade_indices(b)) os << "*" << m.space().label(i);
        if (b == 0) os << "*1";
    }
    return os;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    if (u.space() != v.space())
        throw std::invalid_argument("wedge: mismatched based spaces");
    Multivector out(u.space(), u.degree() + v.degree());
    for (const auto& [bu, cu] : u.terms())
        for (const auto& [bv, cv] : v.terms()) {
            int sign = blade_wedge_sign(bu, bv);
            if (sign == 0) continue;
            Rat c = cu * cv;
            if (sign < 0) c = -c;
            out.add_coeff(bu | bv, c);
        }
    return out;
}

Multivector contract_first(const std::vector<Rat>& xi, const Multivector& u) {
    if (static_cast<int>(xi.size()) != u.space().dim())
        throw std::invalid_argument("contract_first: covector size");
    if (u.degree() == 0) return Multivector(u.space(), 0);
    Multivector out(u.space(), u.degree() - 1);
    for (const auto& [b, c] : u.terms()) {
        auto idx = blade_indices(b);
        for (size_t p = 0; p < idx.size(); ++p) {
            if (xi[idx[p]].is_zero()) continue;
            // Moving e_{idx[p]} to the front costs p transpositions.
            Rat term = xi[idx[p]] * c;
            if (p % 2 == 1) term = -term;
            out.add_coeff(b & ~(Blade(1) << idx[p]), term);
        }
    }
    return out;
}

}  // namespace manin
