#include "manin/moment.hpp"

#include <Eigen/SVD>


namespace manin {

namespace {

GroupPoint sample_admissible(const DoubleGeometry& geo, const Eigen::MatrixXd& twist,
                             std::mt19937& rng, double margin_floor) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        GroupPoint s = geo.model().random_point(rng, 1.5);
        if (geo.admissibility(s, twist).margin > margin_floor) return s;
    }
    throw std::runtime_error("sample_admissible: no admissible point found");
}

/// Orthonormal column basis of the column span of A, singular values above
/// the threshold.
Eigen::MatrixXd column_space(const Eigen::MatrixXd& A, double threshold) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold) ++rank;
    return svd.matrixU().leftCols(rank);
}

bool same_subspace(const Eigen::MatrixXd& U, const Eigen::MatrixXd& V, double tol) {
    if (U.cols() != V.cols()) return false;
    // both orthonormal: spans agree iff projecting one onto the other loses nothing
    return ((Eigen::MatrixXd::Identity(U.rows(), U.rows()) - U * U.transpose()) * V).norm() <
           tol;
}

bool contained_in(const Eigen::MatrixXd& U, const Eigen::MatrixXd& sub, double tol) {
    return ((Eigen::MatrixXd::Identity(U.rows(), U.rows()) - U * U.transpose()) * sub).norm() <
           tol;
}

}  // namespace

Report moment_check_S(const DoubleGeometry& geo, const Eigen::MatrixXd& twist,
                      const SampleOptions& opt) {
    Report rep;
    const int n = geo.n();
    std::mt19937 rng(opt.seed);
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);

    double res_ref = 0, res_twist = 0, res_lemma = 0, res_equiv = 0;
    for (int k = 0; k < opt.samples; ++k) {
        // need a point where both complements behave
        GroupPoint s = geo.model().identity();
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            s = geo.model().random_point(rng, 1.5);
            found = geo.admissibility(s, zero).margin > opt.margin_floor &&
                    geo.admissibility(s, twist).margin > opt.margin_floor;
        }
        if (!found) throw std::runtime_error("moment_check_S: no admissible sample found");
        Eigen::MatrixXd B = s.Ad.inverse();
        Eigen::MatrixXd P = geo.P_S(s, zero);
        Eigen::MatrixXd Pt = geo.P_S(s, twist);
        Eigen::MatrixXd tau = geo.tau(s, zero);
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(n, i);
            Eigen::VectorXd xS = x - B * x;
            res_ref = std::max(res_ref,
                               (DoubleGeometry::sharp(P, geo.hat(x, s, zero)) - xS).norm());
            res_twist = std::max(
                res_twist,
                (DoubleGeometry::sharp(Pt, geo.twisted_hat(x, s, zero, twist)) - xS).norm());
            // lemma: t_S(y-hat) = -((t o tau) y)_S
            Eigen::MatrixXd tS = (Eigen::MatrixXd::Identity(n, n) - B) * twist *
                                 (Eigen::MatrixXd::Identity(n, n) - B).transpose();
            Eigen::VectorXd lhs = DoubleGeometry::sharp(tS, geo.hat(x, s, zero));
            Eigen::VectorXd ttau = twist.transpose() * tau.transpose() * x;
            Eigen::VectorXd rhs = -(ttau - B * ttau);
            res_lemma = std::max(res_lemma, (lhs - rhs).norm());
        }
        // equivariance of the dressing fields: (Ad_h x)_S at h s h^{-1}
        // equals the pushforward Ad_h (x_S(s)) in the left trivialization
        GroupPoint h = geo.model().random_point(rng, 1.0);
        GroupPoint hs = geo.model().point(h.matrix * s.matrix * h.matrix.inverse());
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(n, i);
            Eigen::VectorXd xS_s = x - s.Ad.inverse() * x;
            Eigen::VectorXd AdhX = h.Ad * x;
            Eigen::VectorXd xS_hs = AdhX - hs.Ad.inverse() * AdhX;
            res_equiv = std::max(res_equiv, (xS_hs - h.Ad * xS_s).norm());
        }
    }
    rep.add("moment.S.reference", "sharp(P_S) x-hat = x_S (reference complement)",
            res_ref < opt.tol, format_residual(res_ref));
    rep.add("moment.S.twisted", "sharp(P_S - t_S) x-hat' = x_S (twisted complement)",
            res_twist < opt.tol, format_residual(res_twist));
    rep.add("moment.S.equiv_lemma", "t_S(y-hat) = -((t o tau) y)_S", res_lemma < opt.tol,
            format_residual(res_lemma));
    rep.add("moment.S.equivariance", "x_S is Ad-equivariant", res_equiv < opt.tol,
            format_residual(res_equiv));
    rep.finalize();
    return rep;
}

Report moment_check_conjugacy(const DoubleGeometry& geo, const GroupPoint& g0,
                              const SampleOptions& opt, double eps) {
    Report rep;
    const int n = geo.n();
    std::mt19937 rng(opt.seed);
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
    const Eigen::MatrixXd& K = geo.model().K();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    // central g0: the class is a point and every quantity vanishes
    bool central = true;
    {
        std::mt19937 probe(1);
        for (int k = 0; k < 8 && central; ++k) {
            GroupPoint h = geo.model().random_point(probe);
            if ((h.matrix * g0.matrix - g0.matrix * h.matrix).norm() > 1e-9) central = false;
        }
    }

    double res_mc = 0, res_def = 0, res_ker = 0, res_equivar = 0, res_tangent = 0;
    bool ker_ok = true;
    for (int k = 0; k < opt.samples; ++k) {
        GroupPoint h = geo.model().random_point(rng, 1.5);
        GroupPoint m = geo.model().point(h.matrix * g0.matrix * h.matrix.inverse());
        Eigen::MatrixXd B = m.Ad.inverse();
        Eigen::MatrixXd P = geo.P_S(m, zero);

        // Eq. momentMC: sharp(P)(K(x,theta)) = 1/2 ((1 + Ad_m) x)_M
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(n, i);
            Eigen::VectorXd lhs = DoubleGeometry::sharp(P, K * x);
            Eigen::VectorXd y = 0.5 * (x + m.Ad * x);
            Eigen::VectorXd rhs = y - B * y;
            res_mc = std::max(res_mc, (lhs - rhs).norm());
        }

        // definition-form moment condition through an admissible complement
        {
            auto adm = geo.admissibility(m, zero);
            Eigen::MatrixXd tw = zero;
            if (adm.margin <= opt.margin_floor) tw = geo.find_admissible_twist(m, eps).t;
            Eigen::MatrixXd Pt = geo.P_S(m, tw);
            for (int i = 0; i < n; ++i) {
                Eigen::VectorXd x = Eigen::VectorXd::Unit(n, i);
                Eigen::VectorXd xS = x - B * x;
                res_def = std::max(
                    res_def, (DoubleGeometry::sharp(Pt, geo.hat(x, m, tw)) - xS).norm());
            }
        }

        // tangent space of the class and kernel characterization
        Eigen::MatrixXd tangent = column_space(I - B, 1e-9);
        res_tangent = std::max(
            res_tangent,
            ((I - tangent * tangent.transpose()) * column_space(P, 1e-9)).norm());
        if (tangent.cols() > 0) {
            // restrict P to the class tangent space
            Eigen::MatrixXd Pc = tangent.transpose() * P * tangent;
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(Pc, Eigen::ComputeFullV);
            std::vector<int> null_idx;
            for (int i = 0; i < svd.singularValues().size(); ++i)
                if (svd.singularValues()(i) < 1e-9) null_idx.push_back(i);
            Eigen::MatrixXd ker(tangent.cols(), null_idx.size());
            for (size_t c = 0; c < null_idx.size(); ++c) ker.col(c) = svd.matrixV().col(null_idx[c]);
            // expected kernel: restricted K(x, theta) for x in ker(1 + Ad_m)
            Eigen::JacobiSVD<Eigen::MatrixXd> ksvd(I + m.Ad, Eigen::ComputeFullV);
            std::vector<int> kin;
            for (int i = 0; i < ksvd.singularValues().size(); ++i)
                if (ksvd.singularValues()(i) < 1e-7) kin.push_back(i);
            Eigen::MatrixXd expected(tangent.cols(), kin.size());
            for (size_t c = 0; c < kin.size(); ++c)
                expected.col(c) = tangent.transpose() * (K * ksvd.matrixV().col(kin[c]));
            if (expected.cols() != ker.cols()) {
                ker_ok = false;
            } else if (expected.cols() > 0) {
                Eigen::MatrixXd keru = column_space(ker, 1e-12);
                Eigen::MatrixXd expu = column_space(expected, 1e-12);
                if (keru.cols() != expu.cols() || !same_subspace(keru, expu, 1e-7))
                    ker_ok = false;
            }
        }

        // equivariance of the inclusion moment map: acting first and including
        // agrees with including and then dressing (conjugation)
        GroupPoint h2 = geo.model().random_point(rng, 1.0);
        Eigen::MatrixXd lhs = (h2.matrix * h.matrix) * g0.matrix * (h2.matrix * h.matrix).inverse();
        Eigen::MatrixXd rhs = h2.matrix * m.matrix * h2.matrix.inverse();
        res_equivar = std::max(res_equivar, (lhs - rhs).norm());
    }

    if (central) {
        rep.add("moment.class.point", "central g0: class is a single point", true, "0");
    }
    rep.add("moment.class.mc", "sharp(P) K(x,theta) = 1/2 ((1 + Ad) x)_M",
            res_mc < 1e-8, format_residual(res_mc));
    rep.add("moment.class.definition", "sharp(P') mu* x-hat' = x_M through admissible complement",
            res_def < 1e-8, format_residual(res_def));
    rep.add("moment.class.kernel", "ker sharp(P) = { K(x,theta) : (1 + Ad) x = 0 }", ker_ok,
            ker_ok ? "0" : "subspace mismatch");
    rep.add("moment.class.tangency", "im sharp(P) inside the class tangent space",
            res_tangent < 1e-7, format_residual(res_tangent));
    rep.add("moment.class.equivariance", "mu(h.m) = h mu(m) h^{-1}", res_equivar < opt.tol,
            format_residual(res_equivar));
    rep.finalize();
    return rep;
}

Eigen::VectorXd numeric_differential(const DoubleGeometry& geo, const ScalarFn& f,
                                     const GroupPoint& s, double h) {
    const int n = geo.n();
    Eigen::VectorXd df(n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd step = Eigen::VectorXd::Zero(n);
        step(i) = h;
        double fp = f(s.matrix * geo.model().exp_point(step).matrix);
        step(i) = -h;
        double fm = f(s.matrix * geo.model().exp_point(step).matrix);
        df(i) = (fp - fm) / (2 * h);
    }
    return df;
}

double invariant_bracket(const DoubleGeometry& geo, const ScalarFn& f1, const ScalarFn& f2,
                         const GroupPoint& s, const Eigen::MatrixXd& twist, double h) {
    Eigen::VectorXd d1 = numeric_differential(geo, f1, s, h);
    Eigen::VectorXd d2 = numeric_differential(geo, f2, s, h);
    Eigen::MatrixXd P = geo.P_S(s, twist);
    return d1.dot(P * d2);
}

Report distribution_check(const DoubleGeometry& geo, const GroupPoint& s,
                          const Eigen::MatrixXd& twist, double tol) {
    Report rep;
    const int n = geo.n();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(n, n);
    auto a0 = geo.admissibility(s, zero);
    auto a1 = geo.admissibility(s, twist);
    rep.add("distribution.admissible", "both complements admissible at s",
            a0.admissible && a1.admissible,
            format_residual(std::min(a0.margin, a1.margin)));
    if (!a0.admissible || !a1.admissible) {
        rep.finalize();
        return rep;
    }

    Eigen::MatrixXd P0 = geo.P_S(s, zero);
    Eigen::MatrixXd P1 = geo.P_S(s, twist);
    Eigen::MatrixXd U0 = column_space(P0, tol);
    Eigen::MatrixXd U1 = column_space(P1, tol);
    bool equal = same_subspace(U0, U1, 1e-7);
    rep.add("distribution.twist_invariance", "im sharp(P) equal across the twist", equal,
            equal ? "0" : "rank " + std::to_string(U0.cols()) + " vs " +
                              std::to_string(U1.cols()));

    Eigen::MatrixXd B = s.Ad.inverse();
    Eigen::MatrixXd orbit = column_space(Eigen::MatrixXd::Identity(n, n) - B, tol);
    bool contains = contained_in(U0, orbit, 1e-7);
    rep.add("distribution.orbit", "orbit tangents inside im sharp(P)", contains);
    rep.finalize();
    return rep;
}

}  // namespace manin
