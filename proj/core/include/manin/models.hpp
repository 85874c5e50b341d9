#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manin/lie_algebra.hpp"

namespace manin::models {

/// Bundled desk-scale algebra with an optional faithful real matrix
/// representation (row-major, one matrix per basis element). Complex
/// representations are realified.
struct AlgebraModel {
    LieAlgebraSpec algebra;
    int rep_size = 0;
    std::vector<std::vector<double>> rep;

    bool has_rep() const { return rep_size > 0; }
};

/// su(2) with f = epsilon, K = 1/2 delta; defining representation realified
/// to 4x4.
AlgebraModel su2();
/// sl(2,R) in the (h,e,f) basis with the 2x2 trace form.
AlgebraModel sl2r();
/// The nonabelian 2-dimensional algebra [e1,e2] = e2; no invariant form
/// (standard triple only).
AlgebraModel nonabelian2d();
/// u(1), realified rotation generator.
AlgebraModel u1();
/// The 2-torus algebra u(1) (+) u(1).
AlgebraModel t2();

std::optional<AlgebraModel> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace manin::models
