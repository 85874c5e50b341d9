#include "manin/quasi_triple.hpp"

#include <string>

namespace manin {

namespace {

RatMat hyperbolic_form(int n) {
    RatMat K(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        K.at(i, n + i) = Rat(1);
        K.at(n + i, i) = Rat(1);
    }
    return K;
}

Multivector embed_in_double(const Multivector& u, const BasedSpace& dspace) {
    // g sits on the first n coordinates, so blades carry over unchanged.
    Multivector out(dspace, u.degree());
    for (const auto& [b, c] : u.terms()) out.set_coeff(b, c);
    return out;
}

}  // namespace

QuasiTriple QuasiTriple::build_double(const QuasiBialgebraData& qb) {
    const int n = qb.g.dim();
    if (qb.F.dim() != n || qb.phi.space() != qb.g.space() || qb.phi.degree() != 3)
        throw std::invalid_argument("build_double: inconsistent shapes");
    qb.g.f.check_antisymmetry();

    BasedSpace dspace = double_space(qb.g.space());
    StructureConstants fd(dspace);
    const StructureConstants& f = qb.g.f;
    // [e_i, e_j] = f_ij^k e_k
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!f.f(i, j, k).is_zero()) fd.set(i, j, k, f.f(i, j, k));
    // [e_i, eps^j] = -f_ik^j eps^k + F_i^{jk} e_k
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rat c = -f.f(i, k, j);
                if (!c.is_zero()) fd.set(i, n + j, n + k, c);
                const Rat& Fc = qb.F.F(i, j, k);
                if (!Fc.is_zero()) fd.set(i, n + j, k, Fc);
            }
    // [eps^i, eps^j] = F^{ij}_k eps^k + phi^{ijk} e_k
    Tensor3 phi_t = Tensor3::from_multivector(qb.phi);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rat& Fc = qb.F.F(k, i, j);  // F^{ij}_k read from the same array
                if (!Fc.is_zero()) fd.set(n + i, n + j, n + k, Fc);
                const Rat& pc = phi_t.at(i, j, k);
                if (!pc.is_zero()) fd.set(n + i, n + j, k, pc);
            }

    Jacobiator J = jacobi_defect(fd);
    if (auto v = J.first_violation()) {
        throw DoubleJacobiError(
            v->i, v->j, v->k,
            "double of (" + qb.g.name + ", F, phi) violates Jacobi at basis triple (" +
                dspace.label(v->i) + "," + dspace.label(v->j) + "," + dspace.label(v->k) +
                "), defect " + v->value.str());
    }

    QuasiTriple qt;
    qt.n_ = n;
    qt.d_ = LieAlgebraSpec{qb.g.name + ".double", fd, hyperbolic_form(n)};
    qt.g_ = qb.g;
    qt.twist_ = Twist::zero(qb.g.space());
    qt.F_ = qb.F;
    qt.phi_ = qb.phi;
    return qt;
}

QuasiTriple QuasiTriple::build_pair_from_metric(const LieAlgebraSpec& g) {
    if (!g.K) throw std::invalid_argument("build_pair_from_metric: bilinear form required");
    require_valid(g);  // includes nondegeneracy and invariance of K
    const int n = g.dim();
    auto Kinv_opt = g.K->inverse();
    if (!Kinv_opt) throw std::invalid_argument("build_pair_from_metric: degenerate form");
    const RatMat& Kinv = *Kinv_opt;

    // phi^{ijk} = 1/4 K^{il} K^{jm} f_lm^k
    Tensor3 phi_t(g.space());
    Rat quarter(1, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rat acc(0);
                for (int l = 0; l < n; ++l) {
                    if (Kinv.at(i, l).is_zero()) continue;
                    for (int m = 0; m < n; ++m) {
                        const Rat& flm = g.f.f(l, m, k);
                        if (!flm.is_zero()) acc += Kinv.at(i, l) * Kinv.at(j, m) * flm;
                    }
                }
                phi_t.at(i, j, k) = quarter * acc;
            }
    if (!phi_t.is_totally_antisymmetric())
        throw std::invalid_argument("build_pair_from_metric: phi not totally antisymmetric");

    QuasiBialgebraData qb{g, Cobracket(g.space()), phi_t.to_multivector()};
    return build_double(qb);
}

QuasiTriple QuasiTriple::with_twist(const Twist& t) const {
    if (t.elem.space() != g_.space())
        throw std::invalid_argument("with_twist: twist space mismatch");
    QuasiTriple qt(*this);
    qt.twist_ = twist_ + t;
    QuasiBialgebraData derived = derive_quasibialgebra(qt);
    qt.F_ = derived.F;
    qt.phi_ = derived.phi;
    return qt;
}

RatMat QuasiTriple::j_matrix() const {
    RatMat J(n_, 2 * n_);
    Tensor2 t = twist_.tensor();
    for (int i = 0; i < n_; ++i) {
        J.at(i, n_ + i) = Rat(1);
        for (int j = 0; j < n_; ++j) J.at(i, j) = t.at(i, j);
    }
    return J;
}

std::vector<Rat> QuasiTriple::complement_basis(int i) const {
    RatMat J = j_matrix();
    std::vector<Rat> v(2 * n_, Rat(0));
    for (int c = 0; c < 2 * n_; ++c) v[c] = J.at(i, c);
    return v;
}

Tensor2 QuasiTriple::canonical_r() const {
    Tensor2 r(d_.space());
    Tensor2 t = twist_.tensor();
    for (int i = 0; i < n_; ++i) {
        r.at(i, n_ + i) = Rat(1);
        for (int j = 0; j < n_; ++j) r.at(i, j) = t.at(i, j);
    }
    return r;
}

QuasiBialgebraData derive_quasibialgebra(const QuasiTriple& qt) {
    const int n = qt.n();
    const LieAlgebraSpec& d = qt.d();
    const RatMat& Kd = *d.K;

    // Columns: e_1..e_n then the actual complement basis.
    RatMat M(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) M.at(i, i) = Rat(1);
    std::vector<std::vector<Rat>> comp(n);
    for (int i = 0; i < n; ++i) {
        comp[i] = qt.complement_basis(i);
        for (int r = 0; r < 2 * n; ++r) M.at(r, n + i) = comp[i][r];
    }

    // Isotropy of the complement, with a witness pair on failure.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat acc(0);
            for (int a = 0; a < 2 * n; ++a)
                for (int b = 0; b < 2 * n; ++b)
                    if (!Kd.at(a, b).is_zero()) acc += comp[i][a] * Kd.at(a, b) * comp[j][b];
            if (!acc.is_zero())
                throw std::invalid_argument("derive_quasibialgebra: complement not isotropic, (h_" +
                                            std::to_string(i + 1) + "|h_" + std::to_string(j + 1) +
                                            ") = " + acc.str());
        }

    auto Minv_opt = M.inverse();
    if (!Minv_opt)
        throw std::invalid_argument("derive_quasibialgebra: complement not transverse to g");
    const RatMat& Minv = *Minv_opt;

    Cobracket F(qt.g().space());
    Tensor3 phi_t(qt.g().space());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rat> w = d.f.bracket(comp[i], comp[j]);
            std::vector<Rat> coords = Minv * w;
            for (int k = 0; k < n; ++k) {
                phi_t.at(i, j, k) = coords[k];
                phi_t.at(j, i, k) = -coords[k];
                F.set(k, i, j, coords[n + k]);  // F^{ij}_k
            }
        }
    if (!phi_t.is_totally_antisymmetric())
        throw std::invalid_argument("derive_quasibialgebra: phi not totally antisymmetric");

    return {qt.g(), F, phi_t.to_multivector()};
}

QuasiBialgebraData apply_twist(const QuasiBialgebraData& qb, const Twist& t) {
    const int n = qb.g.dim();
    const BasedSpace& gs = qb.g.space();
    if (t.elem.space() != gs) throw std::invalid_argument("apply_twist: twist space mismatch");
    Tensor2 tt = t.tensor();

    // F'(x) = F(x) + ad_x t
    Cobracket F1(gs);
    for (int m = 0; m < n; ++m) {
        Multivector adt = ad_derivation(Multivector::basis(gs, m), t.elem, qb.g.f);
        Tensor2 adt_t = Tensor2::from_multivector(adt);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) F1.set(m, j, k, qb.F.F(m, j, k) + adt_t.at(j, k));
    }

    // phi' = phi + <t,t> + psi with
    // psi^{ijk} = t^{ia} F_a^{jk} - t^{ja} F_a^{ik} + t^{ka} F_a^{ij}.
    Tensor3 phi_t = Tensor3::from_multivector(qb.phi);
    Tensor3 ttt = drinfeld_bracket(tt, qb.g.f);
    Tensor3 psi(gs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rat acc(0);
                for (int a = 0; a < n; ++a) {
                    if (!tt.at(i, a).is_zero()) acc += tt.at(i, a) * qb.F.F(a, j, k);
                    if (!tt.at(j, a).is_zero()) acc -= tt.at(j, a) * qb.F.F(a, i, k);
                    if (!tt.at(k, a).is_zero()) acc += tt.at(k, a) * qb.F.F(a, i, j);
                }
                psi.at(i, j, k) = acc;
            }
    Tensor3 phi_new = phi_t + ttt + psi;
    if (!phi_new.is_totally_antisymmetric())
        throw std::domain_error("apply_twist: twisted phi not totally antisymmetric");

    return {qb.g, F1, phi_new.to_multivector()};
}

Report verify_manin_pair(const LieAlgebraSpec& d, const RatMat& g_span) {
    Report rep;
    const int N = d.dim();
    const int m = g_span.cols();
    if (!d.K) {
        rep.add("pair.form", "d carries a bilinear form", false, "0", "no form given");
        rep.finalize();
        return rep;
    }
    const RatMat& K = *d.K;

    // (a) isotropy
    RatMat gram = g_span.transposed() * K * g_span;
    std::string iso_witness;
    if (!gram.is_zero()) {
        for (int i = 0; i < m && iso_witness.empty(); ++i)
            for (int j = 0; j < m; ++j)
                if (!gram.at(i, j).is_zero()) {
                    iso_witness = "(v_" + std::to_string(i + 1) + "|v_" + std::to_string(j + 1) +
                                  ") = " + gram.at(i, j).str();
                    break;
                }
    }
    rep.add("pair.isotropy", "(g|g) = 0", gram.is_zero(), "0", iso_witness);

    // (b) maximality: the subspace equals its own orthogonal. The orthogonal
    // is the kernel of span^T K.
    RatMat pairing = g_span.transposed() * K;  // m x N
    auto orth = pairing.kernel();
    bool maximal = static_cast<int>(orth.size()) == g_span.rank();
    if (maximal) {
        RatMat combined(N, m + static_cast<int>(orth.size()));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < m; ++j) combined.at(i, j) = g_span.at(i, j);
        for (size_t c = 0; c < orth.size(); ++c)
            for (int i = 0; i < N; ++i) combined.at(i, m + int(c)) = orth[c][i];
        maximal = combined.rank() == g_span.rank();
    }
    bool half_dim = (2 * g_span.rank() == N);
    rep.add("pair.maximality", "g equals its own orthogonal (dim g = n)", maximal && half_dim,
            "0",
            maximal && half_dim
                ? ""
                : "rank " + std::to_string(g_span.rank()) + ", orthogonal dim " +
                      std::to_string(orth.size()));

    // (c) bracket closure
    bool closed = true;
    std::string closure_witness;
    int base_rank = g_span.rank();
    for (int i = 0; i < m && closed; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<Rat> xi(N), xj(N);
            for (int r = 0; r < N; ++r) {
                xi[r] = g_span.at(r, i);
                xj[r] = g_span.at(r, j);
            }
            std::vector<Rat> br = d.f.bracket(xi, xj);
            RatMat ext(N, m + 1);
            for (int r = 0; r < N; ++r) {
                for (int c = 0; c < m; ++c) ext.at(r, c) = g_span.at(r, c);
                ext.at(r, m) = br[r];
            }
            if (ext.rank() != base_rank) {
                closed = false;
                closure_witness =
                    "[v_" + std::to_string(i + 1) + ",v_" + std::to_string(j + 1) + "] not in g";
                break;
            }
        }
    rep.add("pair.closure", "[g,g] in g", closed, "0", closure_witness);

    // (d) invariance of the form on d
    bool inv = true;
    std::string inv_witness;
    for (int i = 0; i < N && inv; ++i)
        for (int j = 0; j < N && inv; ++j)
            for (int k = 0; k < N; ++k) {
                Rat acc(0);
                for (int l = 0; l < N; ++l) {
                    acc += d.f.f(i, j, l) * K.at(l, k);
                    acc += d.f.f(i, k, l) * K.at(j, l);
                }
                if (!acc.is_zero()) {
                    inv = false;
                    inv_witness = "triple (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  "," + std::to_string(k + 1) + ")";
                    break;
                }
            }
    rep.add("pair.invariance", "(ad_x y|z) + (y|ad_x z) = 0", inv, "0", inv_witness);

    rep.finalize();
    return rep;
}

Report check_identities(const QuasiTriple& qt) {
    Report rep;
    const int n = qt.n();
    const LieAlgebraSpec& d = qt.d();
    const BasedSpace& ds = d.space();
    const BasedSpace& gs = qt.g().space();

    Tensor2 r = qt.canonical_r();
    Tensor2 s = r.symmetric_part();
    Tensor2 a = r.antisymmetric_part();
    Multivector a_mv = a.to_multivector();
    Multivector phi_d = qt.phi().map_generators(
        ds, [&](int i) { return Multivector::basis(ds, i); });

    // [x, a_d] = F(x) on the g-basis
    {
        bool pass = true;
        std::string witness;
        for (int i = 0; i < n && pass; ++i) {
            Multivector lhs = schouten(Multivector::basis(ds, i), a_mv, d.f);
            Multivector rhs = qt.F().of_basis(i).map_generators(
                ds, [&](int k) { return Multivector::basis(ds, k); });
            if (lhs != rhs) {
                pass = false;
                witness = "x = " + ds.label(i);
            }
        }
        rep.add("triple.ad_x", "[x, a_d] = F(x)", pass, "0", witness);
    }

    // [xi, a_d] = -f(xi) + phi(xi) on the complement basis
    {
        bool pass = true;
        std::string witness;
        for (int i = 0; i < n && pass; ++i) {
            Multivector xi = Multivector::vector(ds, qt.complement_basis(i));
            Multivector lhs = schouten(xi, a_mv, d.f);
            // f(eps^i) = sum_{m<k} f_mk^i  j(eps^m) ^ j(eps^k)
            Multivector fxi(ds, 2);
            for (int mm = 0; mm < n; ++mm)
                for (int k = mm + 1; k < n; ++k) {
                    const Rat& c = qt.g().f.f(mm, k, i);
                    if (c.is_zero()) continue;
                    Multivector w = wedge(Multivector::vector(ds, qt.complement_basis(mm)),
                                          Multivector::vector(ds, qt.complement_basis(k)));
                    w *= c;
                    fxi += w;
                }
            // phi(eps^i): first-slot contraction, taken in g then embedded
            std::vector<Rat> delta(n, Rat(0));
            delta[i] = Rat(1);
            Multivector phixi = contract_first(delta, qt.phi()).map_generators(ds, [&](int k) {
                return Multivector::basis(ds, k);
            });
            if (lhs != (-fxi) + phixi) {
                pass = false;
                witness = "xi = eps" + std::to_string(i + 1);
            }
        }
        rep.add("triple.ad_xi", "[xi, a_d] = -f(xi) + phi(xi)", pass, "0", witness);
    }

    // [a_d, phi] = 0
    rep.add("triple.a_phi", "[a_d, phi] = 0", schouten(a_mv, phi_d, d.f).is_zero());

    // <a,a> = -1/2 [a,a]
    {
        Tensor3 aa = drinfeld_bracket(a, d.f);
        bool antisym = aa.is_totally_antisymmetric();
        Multivector lhs = antisym ? aa.to_multivector() : Multivector(ds, 3);
        Multivector rhs = Rat(-1, 2) * schouten(a_mv, a_mv, d.f);
        rep.add("triple.skew", "<a,a> = -1/2 [a,a]", antisym && lhs == rhs);
    }

    // <r,r> = <a,a> + <s,s>
    {
        Tensor3 rr = drinfeld_bracket(r, d.f);
        Tensor3 aa = drinfeld_bracket(a, d.f);
        Tensor3 ss = drinfeld_bracket(s, d.f);
        rep.add("triple.ras", "<r,r> = <a,a> + <s,s>", rr == aa + ss);
    }

    // <r_d, r_d> = phi
    {
        Tensor3 rr = drinfeld_bracket(r, d.f);
        bool pass = rr.is_totally_antisymmetric() && rr.to_multivector() == phi_d;
        rep.add("triple.cyb", "<r_d,r_d> = phi", pass);
    }

    // symmetric part: 2 s = K_d^{-1}, and s is ad(d)-invariant
    {
        auto Kinv = d.K->inverse();
        bool pass = Kinv.has_value();
        if (pass) {
            for (int i = 0; i < 2 * n && pass; ++i)
                for (int j = 0; j < 2 * n; ++j)
                    if (s.at(i, j) + s.at(i, j) != Kinv->at(i, j)) {
                        pass = false;
                        break;
                    }
        }
        rep.add("triple.sym", "2 sym(r_d) = K_d^{-1}", pass);
        rep.add("triple.sym_invariant", "sym(r_d) is ad(d)-invariant", is_ad_invariant(s, d.f));
    }

    // scalar product of d is ad-invariant
    {
        Report sub = validate_algebra(d);
        bool pass = true;
        for (const auto& c : sub.checks())
            if (c.id == "form.invariance") pass = c.pass;
        rep.add("triple.d_form_invariant", "(ad_X Y|Z) + (Y|ad_X Z) = 0 on d", pass);
    }

    // (d_F)^2 = [phi, .] on degree-1 and degree-2 basis blades of g
    {
        bool pass = true;
        std::string witness;
        for (int i = 0; i < n && pass; ++i) {
            Multivector u = Multivector::basis(gs, i);
            if (ce_differential(qt.F(), ce_differential(qt.F(), u)) !=
                schouten(qt.phi(), u, qt.g().f)) {
                pass = false;
                witness = "u = " + gs.label(i);
            }
        }
        for (int i = 0; i < n && pass; ++i)
            for (int j = i + 1; j < n && pass; ++j) {
                Multivector u = wedge(Multivector::basis(gs, i), Multivector::basis(gs, j));
                if (ce_differential(qt.F(), ce_differential(qt.F(), u)) !=
                    schouten(qt.phi(), u, qt.g().f)) {
                    pass = false;
                    witness = "u = " + gs.label(i) + "^" + gs.label(j);
                }
            }
        rep.add("triple.dF_squared", "(d_F)^2 = [phi, .]", pass, "0", witness);
    }

    rep.finalize();
    return rep;
}

}  // namespace manin
