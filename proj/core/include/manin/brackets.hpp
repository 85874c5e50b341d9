#pragma once

#include "manin/multivector.hpp"
#include "manin/tensor.hpp"

namespace manin {

/// Algebraic Schouten bracket on the exterior algebra of (space, f). On
/// degree-1 inputs this is the Lie bracket; the sign convention on higher
/// degrees is fixed so that <r,r> = -1/2 [r,r] holds for antisymmetric r
/// (see drinfeld_bracket). Result degree is |u|+|v|-1.
Multivector schouten(const Multivector& u, const Multivector& v, const StructureConstants& f);

/// ad_x extended as a degree-0 derivation of the exterior algebra. Equals
/// schouten(x, u, f) for degree-1 x; kept as an independent code path.
Multivector ad_derivation(const Multivector& x, const Multivector& u,
                          const StructureConstants& f);

/// Coboundary operator of the cobracket F, extended from
/// d_F(e_i) = sum_{j<k} F_i^{jk} e_j ^ e_k as an odd derivation. Raises
/// degree by one; (d_F)^2 = [phi, . ] for the (F, phi) of a Lie
/// quasi-bialgebra.
Multivector ce_differential(const Cobracket& F, const Multivector& u);

/// Generalized classical Yang-Baxter combination
/// [r12,r13] + [r12,r23] + [r13,r23] computed componentwise with the
/// structure constants f.
Tensor3 drinfeld_bracket(const Tensor2& r, const StructureConstants& f);

/// Adjoint action of a degree-1 element on a Tensor2:
/// (ad_x r)^{jk} = x^m (f_ma^j r^{ak} + f_ma^k r^{ja}).
Tensor2 ad_tensor2(const std::vector<Rat>& x, const Tensor2& r, const StructureConstants& f);

/// True iff (ad_x (x) 1 + 1 (x) ad_x) r = 0 for every basis x.
bool is_ad_invariant(const Tensor2& r, const StructureConstants& f);

/// True iff the trivector is killed by every ad_x (extended as derivation).
bool is_ad_invariant(const Multivector& u, const StructureConstants& f);

}  // namespace manin
