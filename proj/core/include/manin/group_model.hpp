#pragma once

#include <Eigen/Dense>

#include <random>

#include "manin/models.hpp"
#include "manin/ratmat.hpp"
#include "manin/report.hpp"

namespace manin {

Eigen::MatrixXd to_eigen(const RatMat& m);
Eigen::MatrixXd twist_to_eigen(const Tensor2& t);

/// A group element in the model's representation together with its cached
/// adjoint operator on the algebra.
struct GroupPoint {
    Eigen::MatrixXd matrix;  // rep_size x rep_size
    Eigen::MatrixXd Ad;      // n x n, real
};

/// Matrix-group realization of a bundled algebra: representation matrices,
/// exp/log, adjoint operators, and the exact form K alongside its double
/// version.
class MatrixGroupModel {
public:
    explicit MatrixGroupModel(models::AlgebraModel model);

    const LieAlgebraSpec& algebra() const { return model_.algebra; }
    const std::string& name() const { return model_.algebra.name; }
    int n() const { return model_.algebra.dim(); }
    int rep_size() const { return model_.rep_size; }
    bool has_form() const { return model_.algebra.K.has_value(); }

    const Eigen::MatrixXd& rho(int i) const { return rho_[i]; }
    /// K and its inverse as floats (requires the form).
    const Eigen::MatrixXd& K() const;
    const Eigen::MatrixXd& K_inv() const;
    /// Structure constants as floats: f(i,j) is the column vector [e_i,e_j].
    Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    Eigen::MatrixXd algebra_matrix(const Eigen::VectorXd& coeffs) const;
    /// Coefficients of an algebra-valued matrix in the rho basis; throws if
    /// the residual exceeds the tolerance.
    Eigen::VectorXd algebra_coeffs(const Eigen::MatrixXd& m, double tol = 1e-9) const;

    GroupPoint exp_point(const Eigen::VectorXd& coeffs) const;
    GroupPoint point(const Eigen::MatrixXd& matrix) const;
    GroupPoint identity() const;
    /// Group log in the algebra (principal branch); inverse of exp_point near
    /// the identity.
    Eigen::VectorXd log_point(const GroupPoint& g) const;

    Eigen::MatrixXd adjoint(const Eigen::MatrixXd& g) const;

    /// Seeded random point: exp of uniform coefficients in [-range, range]^n.
    GroupPoint random_point(std::mt19937& rng, double range = 3.0) const;

    /// Model invariants: commutators of rho reproduce f within 1e-12,
    /// exp(log(g)) = g near the identity, Ad_g preserves K within 1e-9.
    Report validate(unsigned seed = 0, int samples = 20) const;

private:
    models::AlgebraModel model_;
    std::vector<Eigen::MatrixXd> rho_;
    Eigen::MatrixXd gram_inv_;  // inverse Frobenius Gram matrix of rho
    Eigen::MatrixXd K_, K_inv_;
};

}  // namespace manin
