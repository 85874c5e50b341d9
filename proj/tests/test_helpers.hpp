#pragma once

#include <map>
#include <random>
#include <vector>

#include "manin/multivector.hpp"
#include "manin/tensor.hpp"

namespace manin::testing {

/// Dense fully-antisymmetric tensor: components on every index tuple, kept
/// explicitly. Used as an independent representation for oracles.
struct DenseTensor {
    int dim = 0;
    int degree = 0;
    std::map<std::vector<int>, Rat> c;  // all index orders stored

    Rat at(const std::vector<int>& idx) const {
        auto it = c.find(idx);
        return it == c.end() ? Rat(0) : it->second;
    }
};

inline DenseTensor to_dense(const Multivector& m) {
    DenseTensor t;
    t.dim = m.space().dim();
    t.degree = m.degree();
    std::vector<int> idx(m.degree());
    // enumerate all tuples and pull signed components
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m.degree()) {
            Rat v = m.component(idx);
            if (!v.is_zero()) t.c[idx] = v;
            return;
        }
        for (int i = 0; i < t.dim; ++i) {
            idx[pos] = i;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return t;
}

/// Independent wedge: (u ^ v)^{I} = 1/(p! q!) sum_{sigma in S_{p+q}}
/// sgn(sigma) u^{I_sigma(1..p)} v^{I_sigma(p+1..p+q)}.
DenseTensor dense_wedge(const DenseTensor& u, const DenseTensor& v);

inline Multivector from_dense(const DenseTensor& t, const BasedSpace& space) {
    Multivector m(space, t.degree);
    for (const auto& [idx, v] : t.c) {
        bool increasing = true;
        for (size_t p = 0; p + 1 < idx.size(); ++p)
            if (idx[p] >= idx[p + 1]) {
                increasing = false;
                break;
            }
        if (!increasing) continue;
        Blade b = 0;
        for (int i : idx) b |= Blade(1) << i;
        m.set_coeff(b, v);
    }
    return m;
}

inline Rat random_rat(std::mt19937& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

inline Multivector random_multivector(const BasedSpace& space, int degree, std::mt19937& rng,
                                      double density = 0.7) {
    Multivector m(space, degree);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> idx(degree);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == degree) {
            if (coin(rng) < density) {
                Blade b = 0;
                for (int i : idx) b |= Blade(1) << i;
                m.set_coeff(b, random_rat(rng));
            }
            return;
        }
        for (int i = start; i < space.dim(); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (degree == 0)
        m = Multivector::scalar(space, random_rat(rng));
    else
        rec(rec, 0, 0);
    return m;
}

inline Tensor2 random_antisymmetric_tensor2(const BasedSpace& space, std::mt19937& rng) {
    Tensor2 t(space);
    for (int i = 0; i < space.dim(); ++i)
        for (int j = i + 1; j < space.dim(); ++j) {
            Rat v = random_rat(rng);
            t.at(i, j) = v;
            t.at(j, i) = -v;
        }
    return t;
}

}  // namespace manin::testing
