#pragma once

#include <utility>

#include "manin/frame_algebra.hpp"
#include "manin/group_model.hpp"
#include "manin/quasi_triple.hpp"

namespace manin {

/// Raised when a pointwise construction needs an admissible complement and
/// the dressing map is (numerically) singular; carries the margin.
struct NonAdmissibleError : std::domain_error {
    NonAdmissibleError(double margin, const std::string& what)
        : std::domain_error(what), margin(margin) {}
    double margin;
};

/// Pointwise geometry of the pair (G x G, G): S = (G x G)/G is identified
/// with G, the dressing action of G is conjugation, and the reference
/// complement is the half-antidiagonal. Tangent vectors are left-trivialized;
/// covectors are their duals. Complements are the reference twisted by an
/// antisymmetric matrix t (float-valued at this layer).
class DoubleGeometry {
public:
    explicit DoubleGeometry(MatrixGroupModel model);

    const MatrixGroupModel& model() const { return model_; }
    int n() const { return model_.n(); }

    /// Value of the dressing field of (x1, x2) at s, left-trivialized:
    /// x2 - Ad_{s^{-1}} x1.
    Eigen::VectorXd dressing(const Eigen::VectorXd& x1, const Eigen::VectorXd& x2,
                             const GroupPoint& s) const;
    /// Same for a double element in the adapted coordinates (g-part,
    /// complement-part).
    Eigen::VectorXd dressing_adapted(const Eigen::VectorXd& X, const GroupPoint& s) const;

    /// Columns are the dressing images of the twisted complement basis
    /// j'(eps^k) = eps_k + t^{kj} e_j at s.
    Eigen::MatrixXd complement_images(const GroupPoint& s, const Eigen::MatrixXd& t) const;

    struct Admissibility {
        bool admissible;
        double margin;  // smallest singular value of the dressing map
    };
    Admissibility admissibility(const GroupPoint& s, const Eigen::MatrixXd& t,
                                double threshold = 1e-7) const;

    /// tau_s from the dressing images; antisymmetric within 1e-9 (checked).
    Eigen::MatrixXd tau(const GroupPoint& s, const Eigen::MatrixXd& t) const;

    /// One-form x-hat at s as a left-trivialized covector, defined by
    /// <x-hat, xi_S> = -(x|xi) over the complement.
    Eigen::VectorXd hat(const Eigen::VectorXd& x, const GroupPoint& s,
                        const Eigen::MatrixXd& t) const;
    /// Closed form for the reference complement:
    /// <x-hat, y> = 2 K(x, (1 + Ad_{s^{-1}})^{-1} y).
    Eigen::VectorXd hat_closed_form(const Eigen::VectorXd& x, const GroupPoint& s) const;
    /// Hat form of the complement (base + t), transported from the base
    /// complement through nu_s = (1 + t o tau_s)^{-1}.
    Eigen::VectorXd twisted_hat(const Eigen::VectorXd& x, const GroupPoint& s,
                                const Eigen::MatrixXd& base, const Eigen::MatrixXd& t) const;

    /// Bivector of S at s (left-trivialized, antisymmetric n x n); the
    /// symmetric residual of the defining sum is checked against 1e-9.
    Eigen::MatrixXd P_S(const GroupPoint& s, const Eigen::MatrixXd& t) const;

    /// Multiplicative bivector of G at g: Ad_g r_d - r_d, computed on the
    /// full double; off-g blocks must vanish within 1e-12.
    Eigen::MatrixXd P_G(const GroupPoint& g, const Eigen::MatrixXd& t) const;

    /// Adjoint of g in G on the adapted double basis: blockdiag(A, K A K^{-1}).
    Eigen::MatrixXd double_Ad_adapted(const GroupPoint& g) const;

    /// (P^sharp alpha)^a = P^{ab} alpha_b.
    static Eigen::VectorXd sharp(const Eigen::MatrixXd& P, const Eigen::VectorXd& alpha) {
        return P * alpha;
    }

    struct AdmissibleTwist {
        Eigen::MatrixXd t;  // antisymmetric tensor, epsilon-scaled
        std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;  // K-orthonormal (a,b)
    };
    /// Twist of the reference complement restoring admissibility at s: the
    /// -1 eigenspace V of Ad_s is paired into K-orthonormal (a,b) planes and
    /// t = eps sum a^b. Empty V yields t = 0. Throws on eps = 0 or odd V.
    AdmissibleTwist find_admissible_twist(const GroupPoint& s, double eps,
                                          double cluster_tol = 1e-7) const;

    /// Exact lambda/rho frame field of a multivector over the adapted double:
    /// a_i -> e_i^l - e_i^r, eps_i -> -1/2 K^{ia} (e_a^l + e_a^r).
    Multivector dressing_frame_field(const Multivector& u_over_d) const;
    /// Frame field of an element of /\ g pushed through x -> x_S.
    Multivector action_frame_field(const Multivector& u_over_g) const;
    const FrameAlgebra& frame() const { return frame_; }

    /// Numeric value of a degree-2 frame field at s (e^l -> e, e^r -> Ad_{s^-1} e).
    Eigen::MatrixXd frame_eval2(const Multivector& field, const GroupPoint& s) const;
    /// Numeric value of a degree-3 frame field at s, flat n^3 array.
    std::vector<double> frame_eval3(const Multivector& field, const GroupPoint& s) const;

    /// The exact quasi-triple of this geometry (metric double, zero twist).
    const QuasiTriple& triple() const { return triple_; }

private:
    MatrixGroupModel model_;
    QuasiTriple triple_;
    FrameAlgebra frame_;   // over g
    RatMat K_inv_exact_;
};

}  // namespace manin
