#include "manin/double_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace manin {

DoubleGeometry::DoubleGeometry(MatrixGroupModel model)
    : model_(std::move(model)),
      triple_(QuasiTriple::build_pair_from_metric(model_.algebra())),
      frame_(model_.algebra()),
      K_inv_exact_(*model_.algebra().K->inverse()) {}

Eigen::VectorXd DoubleGeometry::dressing(const Eigen::VectorXd& x1, const Eigen::VectorXd& x2,
                                         const GroupPoint& s) const {
    return x2 - s.Ad.inverse() * x1;
}

Eigen::VectorXd DoubleGeometry::dressing_adapted(const Eigen::VectorXd& X,
                                                 const GroupPoint& s) const {
    Eigen::VectorXd u = X.head(n());
    Eigen::VectorXd v = X.tail(n());
    Eigen::VectorXd half = 0.5 * (model_.K_inv() * v);
    return dressing(u + half, u - half, s);
}

Eigen::MatrixXd DoubleGeometry::complement_images(const GroupPoint& s,
                                                  const Eigen::MatrixXd& t) const {
    Eigen::MatrixXd B = s.Ad.inverse();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n(), n());
    // column k: (1 - B) t^{k,:} - 1/2 (1 + B) K^{-1} e_k
    return (I - B) * t.transpose() - 0.5 * (I + B) * model_.K_inv();
}

DoubleGeometry::Admissibility DoubleGeometry::admissibility(const GroupPoint& s,
                                                            const Eigen::MatrixXd& t,
                                                            double threshold) const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(complement_images(s, t));
    double margin = svd.singularValues()(n() - 1);
    return {margin > threshold, margin};
}

Eigen::MatrixXd DoubleGeometry::tau(const GroupPoint& s, const Eigen::MatrixXd& t) const {
    auto adm = admissibility(s, t);
    if (!adm.admissible)
        throw NonAdmissibleError(adm.margin, "tau: complement not admissible at this point");
    Eigen::MatrixXd B = s.Ad.inverse();
    Eigen::MatrixXd M = complement_images(s, t);
    Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n(), n()) - B;  // columns (e_i)_S
    Eigen::MatrixXd tau_m = (M.fullPivLu().solve(V)).transpose();
    double asym = (tau_m + tau_m.transpose()).norm();
    if (asym > 1e-9 * (1.0 + tau_m.norm()))
        throw std::domain_error("tau: antisymmetry violated, residual " + std::to_string(asym));
    return tau_m;
}

Eigen::VectorXd DoubleGeometry::hat(const Eigen::VectorXd& x, const GroupPoint& s,
                                    const Eigen::MatrixXd& t) const {
    auto adm = admissibility(s, t);
    if (!adm.admissible)
        throw NonAdmissibleError(adm.margin, "hat: complement not admissible at this point");
    Eigen::MatrixXd M = complement_images(s, t);
    // <c, M e_k> = -(x | j'(eps^k)) = -x_k
    return -M.transpose().fullPivLu().solve(x);
}

Eigen::VectorXd DoubleGeometry::hat_closed_form(const Eigen::VectorXd& x,
                                                const GroupPoint& s) const {
    Eigen::MatrixXd B = s.Ad.inverse();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n(), n());
    return 2.0 * (I + B).transpose().fullPivLu().solve(model_.K() * x);
}

Eigen::VectorXd DoubleGeometry::twisted_hat(const Eigen::VectorXd& x, const GroupPoint& s,
                                            const Eigen::MatrixXd& base,
                                            const Eigen::MatrixXd& t) const {
    Eigen::MatrixXd tau_base = tau(s, base);
    // t as a map g* -> g is xi |-> t^{kj} xi_k e_j, matrix t^T; tau as a map
    // g -> g* is x |-> tau_{ik} x_i eps^k, matrix tau^T.
    Eigen::MatrixXd comp =
        Eigen::MatrixXd::Identity(n(), n()) + t.transpose() * tau_base.transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(comp);
    if (!lu.isInvertible())
        throw NonAdmissibleError(0.0, "twisted_hat: 1 + t o tau is singular");
    return hat(lu.solve(x), s, base);
}

Eigen::MatrixXd DoubleGeometry::P_S(const GroupPoint& s, const Eigen::MatrixXd& t) const {
    Eigen::MatrixXd B = s.Ad.inverse();
    Eigen::MatrixXd U = Eigen::MatrixXd::Identity(n(), n()) - B;  // dressing of a_i
    Eigen::MatrixXd V = complement_images(s, t);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n(), n());
    for (int i = 0; i < n(); ++i) P -= U.col(i) * V.col(i).transpose();
    double sym = 0.5 * (P + P.transpose()).norm();
    if (sym > 1e-9 * (1.0 + P.norm()))
        throw std::domain_error("P_S: symmetric residual " + std::to_string(sym));
    return 0.5 * (P - P.transpose());
}

Eigen::MatrixXd DoubleGeometry::double_Ad_adapted(const GroupPoint& g) const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n(), 2 * n());
    out.topLeftCorner(n(), n()) = g.Ad;
    out.bottomRightCorner(n(), n()) = model_.K() * g.Ad * model_.K_inv();
    return out;
}

Eigen::MatrixXd DoubleGeometry::P_G(const GroupPoint& g, const Eigen::MatrixXd& t) const {
    int N = 2 * n();
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(N, N);
    R.topLeftCorner(n(), n()) = t;
    for (int i = 0; i < n(); ++i) R(i, n() + i) = 1.0;
    Eigen::MatrixXd AdD = double_Ad_adapted(g);
    Eigen::MatrixXd tg = AdD * R * AdD.transpose() - R;
    double scale = 1.0 + AdD.norm() * AdD.norm();
    double off = tg.bottomLeftCorner(n(), n()).norm() + tg.topRightCorner(n(), n()).norm() +
                 tg.bottomRightCorner(n(), n()).norm();
    if (off > 1e-12 * scale)
        throw std::domain_error("P_G: twist not g-valued, residual " + std::to_string(off));
    Eigen::MatrixXd top = tg.topLeftCorner(n(), n());
    double asym = (top + top.transpose()).norm();
    if (asym > 1e-12 * scale)
        throw std::domain_error("P_G: twist not antisymmetric, residual " + std::to_string(asym));
    return top;
}

DoubleGeometry::AdmissibleTwist DoubleGeometry::find_admissible_twist(const GroupPoint& s,
                                                                      double eps,
                                                                      double cluster_tol) const {
    if (eps == 0.0) throw std::invalid_argument("find_admissible_twist: eps must be nonzero");
    AdmissibleTwist out;
    out.t = Eigen::MatrixXd::Zero(n(), n());

    Eigen::EigenSolver<Eigen::MatrixXd> es(s.Ad);
    std::vector<Eigen::VectorXd> candidates;
    for (int i = 0; i < n(); ++i) {
        if (std::abs(es.eigenvalues()(i) - std::complex<double>(-1.0, 0.0)) > cluster_tol)
            continue;
        Eigen::VectorXd re = es.eigenvectors().col(i).real();
        Eigen::VectorXd im = es.eigenvectors().col(i).imag();
        if (re.norm() > 1e-12) candidates.push_back(re);
        if (im.norm() > 1e-12) candidates.push_back(im);
    }
    if (candidates.empty()) return out;

    // Gram-Schmidt against K; duplicate directions from conjugate pairs drop
    // out by rank filtering.
    const Eigen::MatrixXd& K = model_.K();
    std::vector<Eigen::VectorXd> basis;
    for (auto v : candidates) {
        for (const auto& b : basis) v -= (b.transpose() * K * v)(0) * b;
        double norm2 = (v.transpose() * K * v)(0);
        if (norm2 < 1e-14)
            continue;
        if (norm2 < 0)
            throw std::domain_error(
                "find_admissible_twist: K is not positive on the -1 eigenspace");
        basis.push_back(v / std::sqrt(norm2));
    }
    if (basis.size() % 2 != 0)
        throw std::logic_error("find_admissible_twist: odd-dimensional -1 eigenspace");

    for (size_t p = 0; p + 1 < basis.size(); p += 2) {
        const Eigen::VectorXd& a = basis[p];
        const Eigen::VectorXd& b = basis[p + 1];
        out.t += eps * (a * b.transpose() - b * a.transpose());
        out.pairs.emplace_back(a, b);
    }
    return out;
}

Multivector DoubleGeometry::dressing_frame_field(const Multivector& u_over_d) const {
    const BasedSpace& fs = frame_.space();
    const int m = n();
    return u_over_d.map_generators(fs, [&](int i) {
        if (i < m) {
            Multivector v(fs, 1);
            v.set_coeff(Blade(1) << i, Rat(1));
            v.set_coeff(Blade(1) << (m + i), Rat(-1));
            return v;
        }
        // eps_i -> -1/2 K^{ia} (e_a^l + e_a^r)
        Multivector v(fs, 1);
        for (int a = 0; a < m; ++a) {
            Rat c = Rat(-1, 2) * K_inv_exact_.at(i - m, a);
            if (c.is_zero()) continue;
            v.add_coeff(Blade(1) << a, c);
            v.add_coeff(Blade(1) << (m + a), c);
        }
        return v;
    });
}

Multivector DoubleGeometry::action_frame_field(const Multivector& u_over_g) const {
    const BasedSpace& fs = frame_.space();
    const int m = n();
    return u_over_g.map_generators(fs, [&](int i) {
        Multivector v(fs, 1);
        v.set_coeff(Blade(1) << i, Rat(1));
        v.set_coeff(Blade(1) << (m + i), Rat(-1));
        return v;
    });
}

Eigen::MatrixXd DoubleGeometry::frame_eval2(const Multivector& field,
                                            const GroupPoint& s) const {
    if (field.degree() != 2) throw std::invalid_argument("frame_eval2: degree-2 field expected");
    Eigen::MatrixXd W(n(), 2 * n());
    W.leftCols(n()) = Eigen::MatrixXd::Identity(n(), n());
    W.rightCols(n()) = s.Ad.inverse();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(2 * n(), 2 * n());
    for (const auto& [b, c] : field.terms()) {
        auto idx = blade_indices(b);
        C(idx[0], idx[1]) = c.to_double();
        C(idx[1], idx[0]) = -c.to_double();
    }
    return W * C * W.transpose();
}

std::vector<double> DoubleGeometry::frame_eval3(const Multivector& field,
                                                const GroupPoint& s) const {
    if (field.degree() != 3) throw std::invalid_argument("frame_eval3: degree-3 field expected");
    Eigen::MatrixXd W(n(), 2 * n());
    W.leftCols(n()) = Eigen::MatrixXd::Identity(n(), n());
    W.rightCols(n()) = s.Ad.inverse();
    std::vector<double> out(size_t(n()) * n() * n(), 0.0);
    constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    constexpr int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (const auto& [blade, coeff] : field.terms()) {
        auto idx = blade_indices(blade);
        double cv = coeff.to_double();
        for (int a = 0; a < n(); ++a)
            for (int b = 0; b < n(); ++b)
                for (int c = 0; c < n(); ++c) {
                    double acc = 0;
                    for (int p = 0; p < 6; ++p)
                        acc += sgn[p] * W(a, idx[perm[p][0]]) * W(b, idx[perm[p][1]]) *
                               W(c, idx[perm[p][2]]);
                    out[(size_t(a) * n() + b) * n() + c] += cv * acc;
                }
    }
    return out;
}

}  // namespace manin
