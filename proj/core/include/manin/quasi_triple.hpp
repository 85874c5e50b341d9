#pragma once

#include <stdexcept>

#include "manin/brackets.hpp"
#include "manin/lie_algebra.hpp"

namespace manin {

/// Lie quasi-bialgebra data (g, F, phi): cobracket F: g -> /\^2 g and
/// associator phi in /\^3 g. Validity is operational: the double assembled
/// from (F, phi) must satisfy the Jacobi identity.
struct QuasiBialgebraData {
    LieAlgebraSpec g;
    Cobracket F;
    Multivector phi;  // degree 3 over g
};

/// Twist t in /\^2 g connecting two isotropic complements; as a map
/// g* -> g it sends xi to t^{ij} xi_i e_j.
struct Twist {
    Multivector elem;  // degree 2

    static Twist zero(const BasedSpace& g) { return Twist{Multivector(g, 2)}; }
    static Twist from_tensor(const Tensor2& t) { return Twist{t.to_multivector()}; }

    Tensor2 tensor() const { return Tensor2::from_multivector(elem); }
    bool is_zero() const { return elem.is_zero(); }

    /// Composition of twists applied in sequence is the sum of the graphs.
    Twist operator+(const Twist& o) const { return Twist{elem + o.elem}; }
    Twist operator-() const { return Twist{-elem}; }
};

/// Thrown when the double assembled from (F, phi) fails the Jacobi identity;
/// carries the first violated basis triple of the double.
struct DoubleJacobiError : std::domain_error {
    DoubleJacobiError(int i, int j, int k, std::string what)
        : std::domain_error(std::move(what)), i(i), j(j), k(k) {}
    int i, j, k;
};

/// A Manin quasi-triple (d, g, h) held in the basis adapted to g and a
/// reference complement h0: basis e_1..e_n spans g, eps_1..eps_n spans h0,
/// the scalar product is hyperbolic ((e_i|eps_j) = delta_ij, both isotropic),
/// and the actual complement h is the graph of a twist over h0. Derived data
/// (F_h, phi_h) is computed by projecting brackets of the complement basis.
class QuasiTriple {
public:
    /// Assembles d = g (+) g* from quasi-bialgebra data; throws
    /// DoubleJacobiError if (F, phi) is not a Lie quasi-bialgebra.
    static QuasiTriple build_double(const QuasiBialgebraData& qb);

    /// The double d = g (+) g of a metric Lie algebra, with the diagonal g
    /// and reference complement half-antidiagonal, rewritten in the adapted
    /// basis: F = 0 and phi^{ijk} = 1/4 K^{il} K^{jm} f_lm^k.
    static QuasiTriple build_pair_from_metric(const LieAlgebraSpec& g);

    /// Same Manin pair, complement twisted further by t.
    QuasiTriple with_twist(const Twist& t) const;

    const LieAlgebraSpec& d() const { return d_; }
    int n() const { return n_; }
    const LieAlgebraSpec& g() const { return g_; }
    const Twist& twist() const { return twist_; }

    /// Derived cobracket and associator of the actual complement.
    const Cobracket& F() const { return F_; }
    const Multivector& phi() const { return phi_; }
    QuasiBialgebraData quasibialgebra() const { return {g_, F_, phi_}; }

    /// Rows are the d-coordinates of j(eps^i) = eps_i + t^{ij} e_j.
    RatMat j_matrix() const;
    /// d-coordinates of the i-th complement basis vector.
    std::vector<Rat> complement_basis(int i) const;

    /// Canonical r-matrix r_d = sum_i e_i (x) j(eps^i) as a Tensor2 over d.
    Tensor2 canonical_r() const;

private:
    QuasiTriple() = default;

    LieAlgebraSpec d_;  // adapted basis, hyperbolic form
    LieAlgebraSpec g_;  // restriction to the first n coordinates
    int n_ = 0;
    Twist twist_;
    Cobracket F_;
    Multivector phi_;

    friend QuasiBialgebraData derive_quasibialgebra(const QuasiTriple&);
};

/// (F, phi) of the actual complement by exact projection:
/// F(xi,eta) = j^{-1} p_h [j xi, j eta],  phi(xi,eta) = p_g [j xi, j eta].
/// Rejects non-isotropic or non-complementary complements with a witness;
/// asserts total antisymmetry of phi.
QuasiBialgebraData derive_quasibialgebra(const QuasiTriple& qt);

/// Twist transformation of quasi-bialgebra data:
///   F'(x)   = F(x) + ad_x t
///   phi'    = phi + <t,t> + psi,
/// where psi^{ijk} = t^{ia} F_a^{jk} - t^{ja} F_a^{ik} + t^{ka} F_a^{ij} is
/// the cyclic completion of the F-t cross term. The output is validated by
/// reassembling its double (Jacobi).
QuasiBialgebraData apply_twist(const QuasiBialgebraData& qb, const Twist& t);

/// Axioms of a Manin pair for a general metric Lie algebra d and a subspace
/// given by spanning columns: isotropy, maximality (equal to its own
/// orthogonal, dimension n), bracket closure, invariance of the form.
Report verify_manin_pair(const LieAlgebraSpec& d, const RatMat& g_span);

/// Exact verification of the canonical r-matrix identities on all basis
/// elements: [x, a_d] = F(x), [xi, a_d] = -f(xi) + phi(xi), [a_d, phi] = 0,
/// <r,r> = <a,a> + <s,s>, <a,a> = -1/2 [a,a], <r_d,r_d> = phi, the symmetric
/// part s_d = 1/2 K_d^{-1} and its invariance, and (d_F)^2 = [phi, .] on
/// degree-1 and degree-2 basis blades.
Report check_identities(const QuasiTriple& qt);

}  // namespace manin
