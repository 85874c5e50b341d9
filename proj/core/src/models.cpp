#include "manin/models.hpp"

namespace manin::models {

namespace {

RatMat diag_form(int n, const Rat& value) {
    RatMat K(n, n);
    for (int i = 0; i < n; ++i) K.at(i, i) = value;
    return K;
}

}  // namespace

AlgebraModel su2() {
    BasedSpace s(3);
    StructureConstants f(s);
    f.set(0, 1, 2, Rat(1));
    f.set(1, 2, 0, Rat(1));
    f.set(2, 0, 1, Rat(1));
    AlgebraModel m;
    m.algebra = {"su2", f, diag_form(3, Rat(1, 2))};
    // Realified defining representation: e_k = -(i/2) sigma_k acting on
    // C^2 = R^4 with coordinates (Re z1, Im z1, Re z2, Im z2).
    m.rep_size = 4;
    m.rep = {
        {0, 0, 0, 0.5, 0, 0, -0.5, 0, 0, 0.5, 0, 0, -0.5, 0, 0, 0},
        {0, 0, -0.5, 0, 0, 0, 0, -0.5, 0.5, 0, 0, 0, 0, 0.5, 0, 0},
        {0, 0.5, 0, 0, -0.5, 0, 0, 0, 0, 0, 0, -0.5, 0, 0, 0.5, 0},
    };
    return m;
}

AlgebraModel sl2r() {
    BasedSpace s(3);
    StructureConstants f(s);
    f.set(0, 1, 1, Rat(2));    // [h,e] = 2e
    f.set(0, 2, 2, Rat(-2));   // [h,f] = -2f
    f.set(1, 2, 0, Rat(1));    // [e,f] = h
    RatMat K(3, 3);            // trace form of the defining representation
    K.at(0, 0) = Rat(2);
    K.at(1, 2) = Rat(1);
    K.at(2, 1) = Rat(1);
    AlgebraModel m;
    m.algebra = {"sl2r", f, K};
    m.rep_size = 2;
    m.rep = {
        {1, 0, 0, -1},
        {0, 1, 0, 0},
        {0, 0, 1, 0},
    };
    return m;
}

AlgebraModel nonabelian2d() {
    BasedSpace s(2);
    StructureConstants f(s);
    f.set(0, 1, 1, Rat(1));  // [e1,e2] = e2
    AlgebraModel m;
    m.algebra = {"nonabelian2d", f, std::nullopt};
    m.rep_size = 2;
    m.rep = {
        {1, 0, 0, 0},
        {0, 1, 0, 0},
    };
    return m;
}

AlgebraModel u1() {
    BasedSpace s(1);
    StructureConstants f(s);
    AlgebraModel m;
    m.algebra = {"u1", f, diag_form(1, Rat(1))};
    m.rep_size = 2;
    m.rep = {
        {0, -1, 1, 0},
    };
    return m;
}

AlgebraModel t2() {
    BasedSpace s(2);
    StructureConstants f(s);
    AlgebraModel m;
    m.algebra = {"t2", f, diag_form(2, Rat(1))};
    m.rep_size = 4;
    m.rep = {
        {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
    };
    return m;
}

std::optional<AlgebraModel> by_name(const std::string& name) {
    if (name == "su2") return su2();
    if (name == "sl2r") return sl2r();
    if (name == "nonabelian2d") return nonabelian2d();
    if (name == "u1") return u1();
    if (name == "t2") return t2();
    return std::nullopt;
}

std::vector<std::string> names() { return {"su2", "sl2r", "nonabelian2d", "u1", "t2"}; }

}  // namespace manin::models
