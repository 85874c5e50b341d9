#pragma once

#include <random>

#include "manin/lie_algebra.hpp"
#include "manin/quasi_triple.hpp"

namespace manin {

/// Exact pointwise geometry of the standard triple: S = g* with linear
/// coordinates xi_i, the dressing fields eps^i_S = -d/dxi_i and
/// (e_i)_S = f_ij^k xi_k d/dxi_j, hat forms e_i-hat = dxi_i, and the linear
/// bivector. Everything is rational; the triple is complete (the reference
/// complement is admissible at every point).
class KksGeometry {
public:
    explicit KksGeometry(LieAlgebraSpec g);

    const LieAlgebraSpec& g() const { return g_; }
    int n() const { return g_.dim(); }
    const QuasiTriple& triple() const { return triple_; }

    /// Linear bivector at xi; components calibrated by the characteristic
    /// property sharp(P, e_i-hat) = (e_i)_S, which fixes P^{ab} = f_ba^k xi_k.
    Tensor2 bivector(const std::vector<Rat>& xi) const;

    std::vector<Rat> dressing_e(int i, const std::vector<Rat>& xi) const;
    std::vector<Rat> dressing_eps(int i) const;
    /// Dressing of (x, xi0) in g (+) g* at the point xi.
    std::vector<Rat> dressing(const std::vector<Rat>& x, const std::vector<Rat>& xi0,
                              const std::vector<Rat>& xi) const;

    std::vector<Rat> hat_e(int i) const;  // dxi_i

    /// tau at xi: tau_ij = -f_ij^k xi_k (antisymmetric).
    RatMat tau(const std::vector<Rat>& xi) const;

    static std::vector<Rat> sharp(const Tensor2& P, const std::vector<Rat>& alpha);

    /// Exact suite: characteristic property at random rational points, tau
    /// antisymmetry, admissibility of the canonical complement, moment
    /// condition for mu = id.
    Report verify(int samples, unsigned seed) const;

private:
    LieAlgebraSpec g_;
    QuasiTriple triple_;
};

}  // namespace manin
