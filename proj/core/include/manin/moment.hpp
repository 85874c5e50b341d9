#pragma once

#include <functional>

#include "manin/double_geometry.hpp"
#include "manin/kks.hpp"

namespace manin {

/// Scalar function of the group element in its representation.
using ScalarFn = std::function<double(const Eigen::MatrixXd&)>;

struct SampleOptions {
    int samples = 50;
    unsigned seed = 0;
    double tol = 1e-9;
    /// Points with admissibility margin below this are resampled.
    double margin_floor = 1e-3;
};

/// Moment condition for the dressing action on S = (G x G)/G with mu = id:
/// sharp(P_S)(x-hat) = x_S at seeded admissible points, for the reference
/// complement and for the given nontrivial twist (transported hat forms).
/// Also checks the equivariance lemma t_S(y-hat) = -((t o tau) y)_S.
Report moment_check_S(const DoubleGeometry& geo, const Eigen::MatrixXd& twist,
                      const SampleOptions& opt);

/// Eq-of-motion checks on the conjugacy class of g0 with mu = inclusion:
/// the Maurer-Cartan form of the moment condition
/// sharp(P)(K(x,theta)) = 1/2 ((1 + Ad_m) x)_M, the kernel characterization
/// ker sharp(P_m) = { K(x,theta) : x in ker(1 + Ad_m) } on the class, the
/// definition-form moment condition through an admissible (possibly
/// eps-twisted) complement, equivariance, and tangency of the bivector image.
Report moment_check_conjugacy(const DoubleGeometry& geo, const GroupPoint& g0,
                              const SampleOptions& opt, double eps = 0.5);

/// P_S(df1, df2)(s), with differentials from central differences along
/// s exp(h e_i) curves.
double invariant_bracket(const DoubleGeometry& geo, const ScalarFn& f1, const ScalarFn& f2,
                         const GroupPoint& s, const Eigen::MatrixXd& twist, double h = 1e-5);

/// Left-trivialized differential of f at s by central differences.
Eigen::VectorXd numeric_differential(const DoubleGeometry& geo, const ScalarFn& f,
                                     const GroupPoint& s, double h = 1e-5);

/// Image of sharp(P) for the reference and twisted complements at s: equal
/// subspaces, equal rank, and both contain the orbit tangent space.
Report distribution_check(const DoubleGeometry& geo, const GroupPoint& s,
                          const Eigen::MatrixXd& twist, double tol = 1e-9);

}  // namespace manin
