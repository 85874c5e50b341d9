#pragma once

#include "manin/brackets.hpp"
#include "manin/lie_algebra.hpp"
#include "manin/ratmat.hpp"

namespace manin {

/// Exact calculus of left-/right-invariant multivector fields on a Lie group
/// with algebra `base`: the free exterior algebra on generators e_i^l, e_i^r
/// with brackets [e^l,e^l] = f, [e^r,e^r] = -f, [e^l,e^r] = 0. Constant
/// coefficients only; pointwise evaluation substitutes e^l -> e and
/// e^r -> B e for B = Ad_{s^{-1}}.
class FrameAlgebra {
public:
    explicit FrameAlgebra(LieAlgebraSpec base);

    const LieAlgebraSpec& base() const { return base_; }
    const BasedSpace& space() const { return f_.space(); }
    const StructureConstants& f() const { return f_; }
    int m() const { return base_.dim(); }

    Multivector left(const Multivector& u) const;   // u^lambda
    Multivector right(const Multivector& u) const;  // u^rho

    /// Generators as degree-1 fields.
    Multivector gen_left(int i) const { return Multivector::basis(space(), i); }
    Multivector gen_right(int i) const { return Multivector::basis(space(), m() + i); }

    /// Exact pointwise value: substitutes e_i^l -> e_i, e_i^r -> B e_i and
    /// extends through wedges. B is Ad_{s^{-1}} on the base algebra.
    Multivector evaluate(const Multivector& field, const RatMat& B) const;

private:
    LieAlgebraSpec base_;
    StructureConstants f_;  // frame structure constants on dim 2m
};

}  // namespace manin
