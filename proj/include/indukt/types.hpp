#pragma once

#include <complex>

#include <Eigen/Dense>

namespace indukt {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for operator identities (unitarity, multiplicativity,
/// intertwining). 1e-9 unless overridden for the session.
double default_tolerance();
void set_default_tolerance(double tol);

/// Tolerance for measure identities (Haar invariance, Pf = 1 on J,
/// equivariance). Fixed: weights enter the operator checks multiplicatively,
/// so this must sit well below default_tolerance().
inline constexpr double kMeasureTol = 1e-12;

}  // namespace indukt
