#pragma once

#include <complex>

namespace pdipole {

enum class KernelKind;

/// Average over one source cell of the wire Green's function:
///   (1/delta) * integral_{offset - delta/2}^{offset + delta/2} K(u) du
/// with K the reduced or exact thin-wire kernel (1/(4 pi) included).
/// Lengths in metres, wavenumber in rad/m; result in 1/m^2.
std::complex<double> cell_potential(double offset_m, double delta_m, double radius_m,
                                    double wavenumber, KernelKind kind);

/// Complete elliptic integral of the first kind written in terms of the
/// complementary modulus, K(sqrt(1 - kc^2)), via the AGM. Accurate as kc -> 0.
double ellint_k_complementary(double kc);

}  // namespace pdipole
