#include "pdipole/kernel.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "pdipole/constants.hpp"
#include "pdipole/em_solver.hpp"

namespace pdipole {

namespace {

using constants::kPi;
using cplx = std::complex<double>;

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

constexpr int kPanels = 4;
constexpr int kAzimuthPoints = 16;

template <class F>
auto integrate(F&& f, double lo, double hi, int panels) {
  using R = decltype(f(lo));
  R sum{};
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      sum += kGlWeights[i] * f(mid + half * kGlNodes[i]);
    }
  }
  return sum * (0.5 * width);
}

// (e^{-jkR} - 1) / R without cancellation at small kR.
cplx dynamic_part(double k, double r) {
  if (r == 0.0) return {0.0, -k};
  const double half = 0.5 * k * r;
  return cplx(0.0, -2.0) * std::sin(half) * std::polar(1.0, -half) / r;
}

cplx reduced_potential(double c, double d, double a, double k) {
  const double lo = c - 0.5 * d;
  const double hi = c + 0.5 * d;
  const double static_part = std::asinh(hi / a) - std::asinh(lo / a);
  const cplx dyn = integrate([&](double u) { return dynamic_part(k, std::hypot(u, a)); }, lo, hi,
                             kPanels);
  return (static_part + dyn) / (4.0 * kPi * d);
}

// Azimuthal mean of the dynamic part on the cylinder surface.
cplx exact_dynamic_kernel(double u, double a, double k) {
  // phi in [0, pi] by symmetry; Gauss-Legendre with two 8-point panels.
  cplx sum{};
  const double half = 0.25 * kPi;
  for (int p = 0; p < kAzimuthPoints / 8; ++p) {
    const double mid = (p + 0.5) * 0.5 * kPi;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      const double phi = mid + half * kGlNodes[i];
      const double r = std::hypot(u, 2.0 * a * std::sin(0.5 * phi));
      sum += kGlWeights[i] * dynamic_part(k, r);
    }
  }
  return sum * half / kPi;
}

// Static azimuthal mean times 4 pi:  (2 / pi) K(kappa) / s,  s = sqrt(u^2 + 4a^2).
double exact_static_kernel(double u, double a) {
  const double s = std::hypot(u, 2.0 * a);
  return 2.0 / kPi * ellint_k_complementary(std::abs(u) / s) / s;
}

// Integral of exact_static_kernel over [0, h] with the log singularity at u = 0
// removed analytically:
//   (2/pi) [ K - ln(4 s/u) ] / s  +  (2/pi) ln(4 s) / s
//   - (2/pi) ln(u) (1/s - 1/(2a))  - (2/pi) ln(u) / (2a)
double exact_static_from_zero(double h, double a) {
  const auto smooth = [a](double u) {
    const double s = std::hypot(u, 2.0 * a);
    const double kc = u / s;
    const double k_minus_log = ellint_k_complementary(kc) - std::log(4.0 / kc);
    return (k_minus_log + std::log(4.0 * s)) / s - std::log(u) * (1.0 / s - 0.5 / a);
  };
  const double regular = integrate(smooth, 0.0, h, 2 * kPanels);
  const double log_part = -(h * std::log(h) - h) / (2.0 * a);
  return 2.0 / kPi * (regular + log_part);
}

cplx exact_potential(double c, double d, double a, double k) {
  const double lo = c - 0.5 * d;
  const double hi = c + 0.5 * d;
  double static_part = 0.0;
  if (lo < 0.0 && hi > 0.0) {
    static_part = exact_static_from_zero(hi, a) + exact_static_from_zero(-lo, a);
  } else {
    static_part = integrate([a](double u) { return exact_static_kernel(u, a); }, lo, hi, kPanels);
  }
  const cplx dyn =
      integrate([&](double u) { return exact_dynamic_kernel(u, a, k); }, lo, hi, kPanels);
  return (static_part + dyn) / (4.0 * kPi * d);
}

}  // namespace

double ellint_k_complementary(double kc) {
  if (kc <= 0.0) return std::numeric_limits<double>::infinity();
  double x = 1.0;
  double y = kc;
  for (int i = 0; i < 64 && std::abs(x - y) > 1e-15 * x; ++i) {
    const double xn = 0.5 * (x + y);
    y = std::sqrt(x * y);
    x = xn;
  }
  return kPi / (x + y);
}

std::complex<double> cell_potential(double offset_m, double delta_m, double radius_m,
                                    double wavenumber, KernelKind kind) {
  const double c = std::abs(offset_m);  // the kernel is even in the offset
  return kind == KernelKind::kReduced ? reduced_potential(c, delta_m, radius_m, wavenumber)
                                      : exact_potential(c, delta_m, radius_m, wavenumber);
}

}  // namespace pdipole
