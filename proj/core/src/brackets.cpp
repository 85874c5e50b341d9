#include "manin/brackets.hpp"

#include <stdexcept>

namespace manin {

namespace {

void require_space(const Multivector& u, const StructureConstants& f) {
    if (u.space() != f.space())
        throw std::invalid_argument("bracket: multivector space does not match structure constants");
}

// Naive decomposable-formula kernel:
//   [e_I, e_J] = sum_{a,b} (-1)^{a+b} f_{i_a j_b}^k  e_k ^ e_{I\a} ^ e_{J\b}.
Multivector schouten_naive(const Multivector& u, const Multivector& v,
                           const StructureConstants& f) {
    int p = u.degree(), q = v.degree();
    int out_deg = p + q - 1;
    if (out_deg < 0) out_deg = 0;
    Multivector out(u.space(), out_deg);
    if (p == 0 || q == 0) return out;
    int n = f.dim();
    for (const auto& [bu, cu] : u.terms()) {
        auto iu = blade_indices(bu);
        for (const auto& [bv, cv] : v.terms()) {
            auto iv = blade_indices(bv);
            Rat cuv = cu * cv;
            for (size_t a = 0; a < iu.size(); ++a) {
                Blade rest_u = bu & ~(Blade(1) << iu[a]);
                for (size_t b = 0; b < iv.size(); ++b) {
                    Blade rest_v = bv & ~(Blade(1) << iv[b]);
                    int s_rest = blade_wedge_sign(rest_u, rest_v);
                    if (s_rest == 0) continue;
                    Blade rest = rest_u | rest_v;
                    int s_pos = ((a + b) % 2 == 0) ? 1 : -1;
                    for (int k = 0; k < n; ++k) {
                        const Rat& fk = f.f(iu[a], iv[b], k);
                        if (fk.is_zero()) continue;
                        int s_front = blade_wedge_sign(Blade(1) << k, rest);
                        if (s_front == 0) continue;
                        Rat c = cuv * fk;
                        if (s_pos * s_rest * s_front < 0) c = -c;
                        out.add_coeff((Blade(1) << k) | rest, c);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

Multivector schouten(const Multivector& u, const Multivector& v, const StructureConstants& f) {
    require_space(u, f);
    require_space(v, f);
    Multivector out = schouten_naive(u, v, f);
    // Convention flip: the bracket used here is the opposite of the naive
    // one, [u,v] = (-1)^{(|u|-1)(|v|-1)} [u,v]_naive. The two agree except
    // when both degrees are even; the <r,r> = -1/2 [r,r] calibration picks
    // this branch.
    if (((u.degree() - 1) * (v.degree() - 1)) % 2 != 0) out = -out;
    return out;
}

Multivector ad_derivation(const Multivector& x, const Multivector& u,
                          const StructureConstants& f) {
    require_space(x, f);
    require_space(u, f);
    if (x.degree() != 1) throw std::invalid_argument("ad_derivation: x must have degree 1");
    Multivector out(u.space(), u.degree());
    if (u.degree() == 0) return out;
    std::vector<Rat> xc(f.dim(), Rat(0));
    for (const auto& [b, c] : x.terms()) xc[blade_indices(b)[0]] = c;
    for (const auto& [b, c] : u.terms()) {
        auto idx = blade_indices(b);
        for (size_t p = 0; p < idx.size(); ++p) {
            Blade rest = b & ~(Blade(1) << idx[p]);
            // Replace the factor at slot p by [x, e_{idx[p]}], pulled to the
            // front at cost (-1)^p.
            std::vector<Rat> ei(f.dim(), Rat(0));
            ei[idx[p]] = Rat(1);
            std::vector<Rat> w = f.bracket(xc, ei);
            for (int k = 0; k < f.dim(); ++k) {
                if (w[k].is_zero()) continue;
                int s = blade_wedge_sign(Blade(1) << k, rest);
                if (s == 0) continue;
                Rat term = c * w[k];
                if ((p % 2 == 1) != (s < 0)) term = -term;
                out.add_coeff((Blade(1) << k) | rest, term);
            }
        }
    }
    return out;
}

Multivector ce_differential(const Cobracket& F, const Multivector& u) {
    if (F.space() != u.space())
        throw std::invalid_argument("ce_differential: mismatched spaces");
    Multivector out(u.space(), u.degree() + 1);
    if (u.degree() == 0) return out;  // trivial module: d of scalars is zero
    for (const auto& [b, c] : u.terms()) {
        auto idx = blade_indices(b);
        for (size_t p = 0; p < idx.size(); ++p) {
            Blade rest = b & ~(Blade(1) << idx[p]);
            Multivector dfac = F.of_basis(idx[p]);
            for (const auto& [bf, cf] : dfac.terms()) {
                int s = blade_wedge_sign(bf, rest);
                if (s == 0) continue;
                Rat term = c * cf;
                if ((p % 2 == 1) != (s < 0)) term = -term;
                out.add_coeff(bf | rest, term);
            }
        }
    }
    return out;
}

Tensor3 drinfeld_bracket(const Tensor2& r, const StructureConstants& f) {
    if (r.space() != f.space())
        throw std::invalid_argument("drinfeld_bracket: mismatched spaces");
    int n = f.dim();
    Tensor3 t(r.space());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Rat& fijk = f.f(i, j, k);
                if (fijk.is_zero()) continue;
                // [r12,r13]: f_{ij}^k r^{ib} r^{jc} lands in slot (k,b,c).
                for (int b = 0; b < n; ++b) {
                    const Rat& rib = r.at(i, b);
                    if (rib.is_zero()) continue;
                    for (int c = 0; c < n; ++c) {
                        const Rat& rjc = r.at(j, c);
                        if (!rjc.is_zero()) t.at(k, b, c) += fijk * rib * rjc;
                    }
                }
                // [r12,r23]: f_{ij}^k r^{ai} r^{jc} lands in slot (a,k,c).
                for (int a = 0; a < n; ++a) {
                    const Rat& rai = r.at(a, i);
                    if (rai.is_zero()) continue;
                    for (int c = 0; c < n; ++c) {
                        const Rat& rjc = r.at(j, c);
                        if (!rjc.is_zero()) t.at(a, k, c) += fijk * rai * rjc;
                    }
                }
                // [r13,r23]: f_{ij}^k r^{ai} r^{bj} lands in slot (a,b,k).
                for (int a = 0; a < n; ++a) {
                    const Rat& rai = r.at(a, i);
                    if (rai.is_zero()) continue;
                    for (int b = 0; b < n; ++b) {
                        const Rat& rbj = r.at(b, j);
                        if (!rbj.is_zero()) t.at(a, b, k) += fijk * rai * rbj;
                    }
                }
            }
        }
    return t;
}

Tensor2 ad_tensor2(const std::vector<Rat>& x, const Tensor2& r, const StructureConstants& f) {
    int n = f.dim();
    Tensor2 out(r.space());
    for (int m = 0; m < n; ++m) {
        if (x[m].is_zero()) continue;
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j) {
                const Rat& fmaj = f.f(m, a, j);
                if (fmaj.is_zero()) continue;
                for (int k = 0; k < n; ++k) {
                    // (ad_x r)^{jk} += x^m f_{ma}^j r^{ak}
                    if (!r.at(a, k).is_zero()) out.at(j, k) += x[m] * fmaj * r.at(a, k);
                    // (ad_x r)^{kj} += x^m f_{ma}^j r^{ka}
                    if (!r.at(k, a).is_zero()) out.at(k, j) += x[m] * fmaj * r.at(k, a);
                }
            }
    }
    return out;
}

bool is_ad_invariant(const Tensor2& r, const StructureConstants& f) {
    int n = f.dim();
    for (int m = 0; m < n; ++m) {
        std::vector<Rat> x(n, Rat(0));
        x[m] = Rat(1);
        if (!ad_tensor2(x, r, f).is_zero()) return false;
    }
    return true;
}

bool is_ad_invariant(const Multivector& u, const StructureConstants& f) {
    for (int m = 0; m < f.dim(); ++m) {
        Multivector x = Multivector::basis(f.space(), m);
        if (!ad_derivation(x, u, f).is_zero()) return false;
    }
    return true;
}

}  // namespace manin
