#include "manin/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace manin {

void Report::finalize() {
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

namespace {

std::string triple_str(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
           std::to_string(k + 1) + ")";
}

}  // namespace

Report validate_algebra(const LieAlgebraSpec& g) {
    Report rep;
    int n = g.dim();

    bool antisym = true;
    std::string antisym_witness;
    for (int i = 0; i < n && antisym; ++i)
        for (int j = 0; j <= i && antisym; ++j)
            for (int k = 0; k < n; ++k)
                if (g.f.f(i, j, k) != -g.f.f(j, i, k)) {
                    antisym = false;
                    antisym_witness = "f" + triple_str(i, j, k);
                    break;
                }
    rep.add("algebra.antisymmetry", "f_ij^k = -f_ji^k", antisym, "0", antisym_witness);

    if (antisym) {
        Jacobiator J = jacobi_defect(g.f);
        auto v = J.first_violation();
        rep.add("algebra.jacobi", "sum_cyc f_ij^m f_mk^l = 0", !v.has_value(),
                v ? v->value.str() : "0",
                v ? "triple " + triple_str(v->i, v->j, v->k) : "");
    } else {
        rep.add("algebra.jacobi", "sum_cyc f_ij^m f_mk^l = 0", false, "0",
                "skipped: f not antisymmetric");
    }

    if (g.K) {
        const RatMat& K = *g.K;
        bool shape = K.rows() == n && K.cols() == n;
        rep.add("form.shape", "K is n x n", shape);
        if (shape) {
            rep.add("form.symmetric", "K(x,y) = K(y,x)", K.is_symmetric());
            rep.add("form.nondegenerate", "det K != 0", K.rank() == n);
            bool inv = true;
            std::string witness;
            for (int i = 0; i < n && inv; ++i)
                for (int j = 0; j < n && inv; ++j)
                    for (int k = 0; k < n; ++k) {
                        // K([e_i,e_j],e_k) + K(e_j,[e_i,e_k])
                        Rat acc(0);
                        for (int m = 0; m < n; ++m) {
                            acc += g.f.f(i, j, m) * K.at(m, k);
                            acc += g.f.f(i, k, m) * K.at(j, m);
                        }
                        if (!acc.is_zero()) {
                            inv = false;
                            witness = "triple " + triple_str(i, j, k) + ", defect " + acc.str();
                            break;
                        }
                    }
            rep.add("form.invariance", "K([x,y],z) + K(y,[x,z]) = 0", inv, "0", witness);
        }
    }

    rep.finalize();
    return rep;
}

void require_valid(const LieAlgebraSpec& g) {
    Report rep = validate_algebra(g);
    for (const auto& c : rep.checks())
        if (!c.pass)
            throw std::invalid_argument("LieAlgebraSpec '" + g.name + "': " + c.id + " failed" +
                                        (c.witness.empty() ? "" : " (" + c.witness + ")"));
}

}  // namespace manin
