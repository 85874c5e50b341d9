#pragma once

#include <optional>
#include <string>

#include "manin/ratmat.hpp"
#include "manin/report.hpp"
#include "manin/tensor.hpp"

namespace manin {

/// A finite-dimensional Lie algebra over exact rationals given by structure
/// constants, with an optional invariant symmetric bilinear form.
struct LieAlgebraSpec {
    std::string name;
    StructureConstants f;
    std::optional<RatMat> K;

    int dim() const { return f.dim(); }
    const BasedSpace& space() const { return f.space(); }
};

/// Axioms of the spec: antisymmetry and Jacobi for f; when K is present,
/// symmetry, nondegeneracy, and ad-invariance
/// K([x,y],z) + K(y,[x,z]) = 0 on all basis triples.
Report validate_algebra(const LieAlgebraSpec& g);

/// Throws std::invalid_argument with the failing axiom if validation fails.
void require_valid(const LieAlgebraSpec& g);

}  // namespace manin
