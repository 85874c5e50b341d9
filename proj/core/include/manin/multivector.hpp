#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "manin/based_space.hpp"
#include "manin/rational.hpp"

namespace manin {

/// Basis k-blades are encoded as bitmasks over basis indices: bit i set means
/// e_{i+1} is a factor, and the blade is the wedge of its factors in
/// increasing index order. Supports spaces up to dimension 64.
using Blade = std::uint64_t;

int blade_degree(Blade b);

/// Sign of e_I ^ e_J relative to e_{sort(I u J)}; 0 if I and J intersect.
int blade_wedge_sign(Blade a, Blade b);

/// Sign of the permutation sorting `idx` increasingly; 0 on repeated indices.
int permutation_sign(std::span<const int> idx);

Blade blade_of(std::span<const int> sorted_idx);
std::vector<int> blade_indices(Blade b);

/// Homogeneous element of the exterior algebra of a based space, with exact
/// rational coefficients stored on strictly increasing index tuples only.
/// Degree 0 is a scalar. The wedge normalization is x^y = x(x)y - y(x)x with
/// no 1/k! factors.
class Multivector {
public:
    Multivector() = default;
    Multivector(BasedSpace space, int degree);

    static Multivector scalar(const BasedSpace& space, const Rat& value);
    static Multivector basis(const BasedSpace& space, int i);
    /// Degree-1 element with the given coefficient vector.
    static Multivector vector(const BasedSpace& space, const std::vector<Rat>& coeffs);

    const BasedSpace& space() const { return space_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comp_.empty(); }

    /// Coefficient on a strictly increasing tuple, given as a blade.
    const Rat& coeff(Blade b) const;
    /// Coefficient on an arbitrary index tuple; applies the permutation sign,
    /// zero on repeated indices.
    Rat component(std::span<const int> idx) const;

    void set_coeff(Blade b, const Rat& value);
    void add_coeff(Blade b, const Rat& value);

    const std::map<Blade, Rat>& terms() const { return comp_; }

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rat& c);

    friend Multivector operator+(Multivector a, const Multivector& b) { a += b; return a; }
    friend Multivector operator-(Multivector a, const Multivector& b) { a -= b; return a; }
    friend Multivector operator*(const Rat& c, Multivector m) { m *= c; return m; }

    friend bool operator==(const Multivector& a, const Multivector& b);
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Multivector& m);

    /// Pushes the element through a linear map on degree-1 generators,
    /// extended multiplicatively to blades. `image(i)` is the image of e_{i+1}
    /// as a degree-1 multivector over `target`.
    template <typename ImageFn>
    Multivector map_generators(const BasedSpace& target, ImageFn image) const;

private:
    void check_space(const Multivector& o) const;

    BasedSpace space_;
    int degree_ = 0;
    std::map<Blade, Rat> comp_;  // nonzero entries only
};

/// Exterior product. Degrees add; rejects mismatched spaces.
Multivector wedge(const Multivector& u, const Multivector& v);

/// Contraction of a covector (coefficients xi_i on the dual basis) into the
/// first slot of a multivector: degree drops by one.
Multivector contract_first(const std::vector<Rat>& xi, const Multivector& u);

template <typename ImageFn>
Multivector Multivector::map_generators(const BasedSpace& target, ImageFn image) const {
    Multivector out(target, degree_);
    for (const auto& [blade, c] : comp_) {
        Multivector term = Multivector::scalar(target, c);
        for (int i : blade_indices(blade)) term = wedge(term, image(i));
        out += term;
    }
    return out;
}

}  // namespace manin
