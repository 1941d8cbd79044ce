#ifndef FOCKCP_QUADRATURE_HPP
#define FOCKCP_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>

#include "fockcp/errors.hpp"

// The two integration kernels behind every shift:
//
//   traveling:   Re \int_0^1 f(tau) dtau           (oscillatory, e^{i zeta tau})
//   evanescent:  Re \int_0^\infty -i f(i kappa) dkappa   (damped, e^{-zeta kappa})
//
// Both use panel-per-oscillation composite Gauss-Kronrod 15(7) with adaptive
// bisection of the worst panel. The evanescent kernel truncates at
// kappa_max = max(20, 40/zeta); the e^{-zeta kappa} damping leaves the tail
// below 1e-14 relative there, and a tail estimate is folded into the error.
//
// The evanescent integrand is complex inside the total-internal-reflection
// window of a dielectric; the kernel integrates the complex value, returns
// the real part, and reports |Im| of the total as a diagnostic.

namespace fockcp {

struct QuadratureSettings {
  double relTol = 1e-10;
  double absTol = 1e-30;  // absolute floor, natural units
  int maxPanels = 4000;
  double oscillationsPerPanel = 1.0;
  // Test hook: > 0 overrides the automatic evanescent truncation point.
  double kappaMaxOverride = 0.0;
};

struct QuadratureResult {
  double value = 0.0;          // real part of the accumulated integral
  double errorEstimate = 0.0;  // absolute, on the complex accumulation
  int panelsUsed = 0;
  double imagAbs = 0.0;  // |Im| of the accumulated integral (diagnostic)
};

using TravelingIntegrand = std::function<std::complex<double>(double)>;
using EvanescentIntegrand =
    std::function<std::complex<double>(std::complex<double>)>;

// Re \int_0^1 f(tau) dtau. Initial panels no wider than
// oscillationsPerPanel * pi / zeta. Throws ToleranceNotMetError,
// NonFiniteIntegrandError.
QuadratureResult integrate_traveling(const TravelingIntegrand& f, double zeta,
                                     const QuadratureSettings& settings);

// Evanescent contribution \int_0^\infty (-i) f(i kappa) dkappa, real part.
// `breakpoints` seeds panel boundaries at known kinks (e.g. the TIR edge
// kappa = sqrt(n^2-1)). Throws ToleranceNotMetError, NonFiniteIntegrandError,
// NonDecayingIntegrandError.
QuadratureResult integrate_evanescent(const EvanescentIntegrand& f,
                                      double zeta,
                                      const QuadratureSettings& settings,
                                      std::span<const double> breakpoints = {});

}  // namespace fockcp

#endif
