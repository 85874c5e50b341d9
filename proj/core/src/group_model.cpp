#include "manin/group_model.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>
#include <stdexcept>

namespace manin {

Eigen::MatrixXd to_eigen(const RatMat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).to_double();
    return out;
}

Eigen::MatrixXd twist_to_eigen(const Tensor2& t) {
    Eigen::MatrixXd out(t.dim(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) out(i, j) = t.at(i, j).to_double();
    return out;
}

MatrixGroupModel::MatrixGroupModel(models::AlgebraModel model) : model_(std::move(model)) {
    if (!model_.has_rep())
        throw std::invalid_argument("MatrixGroupModel: representation matrices required");
    const int m = model_.rep_size;
    for (const auto& flat : model_.rep) {
        if (static_cast<int>(flat.size()) != m * m)
            throw std::invalid_argument("MatrixGroupModel: bad representation matrix size");
        Eigen::MatrixXd r(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) r(i, j) = flat[i * m + j];
        rho_.push_back(std::move(r));
    }
    Eigen::MatrixXd gram(n(), n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) gram(i, j) = (rho_[i].transpose() * rho_[j]).trace();
    gram_inv_ = gram.inverse();
    if (model_.algebra.K) {
        K_ = to_eigen(*model_.algebra.K);
        K_inv_ = K_.inverse();
    }
}

const Eigen::MatrixXd& MatrixGroupModel::K() const {
    if (!has_form()) throw std::logic_error("MatrixGroupModel: no bilinear form");
    return K_;
}

const Eigen::MatrixXd& MatrixGroupModel::K_inv() const {
    if (!has_form()) throw std::logic_error("MatrixGroupModel: no bilinear form");
    return K_inv_;
}

Eigen::VectorXd MatrixGroupModel::bracket(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y) const {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            double c = x(i) * y(j);
            if (c == 0.0) continue;
            for (int k = 0; k < n(); ++k)
                z(k) += c * model_.algebra.f.f(i, j, k).to_double();
        }
    return z;
}

Eigen::MatrixXd MatrixGroupModel::algebra_matrix(const Eigen::VectorXd& coeffs) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep_size(), rep_size());
    for (int i = 0; i < n(); ++i) m += coeffs(i) * rho_[i];
    return m;
}

Eigen::VectorXd MatrixGroupModel::algebra_coeffs(const Eigen::MatrixXd& m, double tol) const {
    Eigen::VectorXd rhs(n());
    for (int j = 0; j < n(); ++j) rhs(j) = (rho_[j].transpose() * m).trace();
    Eigen::VectorXd c = gram_inv_ * rhs;
    double residual = (algebra_matrix(c) - m).norm();
    if (residual > tol)
        throw std::domain_error("algebra_coeffs: matrix not in the algebra span, residual " +
                                std::to_string(residual));
    return c;
}

GroupPoint MatrixGroupModel::exp_point(const Eigen::VectorXd& coeffs) const {
    Eigen::MatrixXd g = algebra_matrix(coeffs).exp();
    return point(g);
}

GroupPoint MatrixGroupModel::point(const Eigen::MatrixXd& matrix) const {
    GroupPoint p;
    p.matrix = matrix;
    p.Ad = adjoint(matrix);
    return p;
}

GroupPoint MatrixGroupModel::identity() const {
    return point(Eigen::MatrixXd::Identity(rep_size(), rep_size()));
}

Eigen::VectorXd MatrixGroupModel::log_point(const GroupPoint& g) const {
    Eigen::MatrixXd l = g.matrix.log();
    return algebra_coeffs(l, 1e-7);
}

Eigen::MatrixXd MatrixGroupModel::adjoint(const Eigen::MatrixXd& g) const {
    Eigen::MatrixXd ginv = g.inverse();
    Eigen::MatrixXd ad(n(), n());
    for (int i = 0; i < n(); ++i) {
        Eigen::MatrixXd conj = g * rho_[i] * ginv;
        ad.col(i) = algebra_coeffs(conj, 1e-7);
    }
    return ad;
}

GroupPoint MatrixGroupModel::random_point(std::mt19937& rng, double range) const {
    std::uniform_real_distribution<double> dist(-range, range);
    Eigen::VectorXd c(n());
    for (int i = 0; i < n(); ++i) c(i) = dist(rng);
    return exp_point(c);
}

Report MatrixGroupModel::validate(unsigned seed, int samples) const {
    Report rep;
    double comm_residual = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            Eigen::MatrixXd lhs = rho_[i] * rho_[j] - rho_[j] * rho_[i];
            Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(rep_size(), rep_size());
            for (int k = 0; k < n(); ++k)
                rhs += model_.algebra.f.f(i, j, k).to_double() * rho_[k];
            comm_residual = std::max(comm_residual, (lhs - rhs).norm());
        }
    rep.add("model.rep_brackets", "[rho_i, rho_j] = f_ij^k rho_k", comm_residual < 1e-12,
            format_residual(comm_residual));

    std::mt19937 rng(seed);
    double explog_residual = 0, biinv_residual = 0;
    for (int s = 0; s < samples; ++s) {
        GroupPoint g = random_point(rng, 1.0);  // near identity for the log branch
        Eigen::VectorXd back = log_point(g);
        explog_residual =
            std::max(explog_residual, (exp_point(back).matrix - g.matrix).norm());
        if (has_form()) {
            biinv_residual = std::max(
                biinv_residual, (g.Ad.transpose() * K_ * g.Ad - K_).norm());
        }
    }
    rep.add("model.explog", "exp(log(g)) = g near the identity", explog_residual < 1e-9,
            format_residual(explog_residual));
    if (has_form())
        rep.add("model.ad_preserves_K", "Ad_g^T K Ad_g = K", biinv_residual < 1e-9,
                format_residual(biinv_residual));
    rep.finalize();
    return rep;
}

}  // namespace manin
