#ifndef FOCKCP_OPTICS_HPP
#define FOCKCP_OPTICS_HPP

#include <array>
#include <complex>

#include "fockcp/scenario.hpp"

// Half-space interface optics: wave-vector bookkeeping, Fresnel reflection,
// polarization bases and their outer products, vacuum-side mode functions,
// and the traveling/evanescent classification of the resonant pole.
// Everything here is in natural units (hbar = c = eps0 = 1).

namespace fockcp {

using cplx = std::complex<double>;
using Vec3c = std::array<cplx, 3>;
using Mat3c = std::array<std::array<cplx, 3>, 3>;

struct WaveVector {
  double kx = 0.0;
  double ky = 0.0;
  cplx kz;  // Im(kz) >= 0 on the vacuum side z > 0

  double kpar() const;
  cplx omega() const;  // |k| on the physical branch
};

enum class Polarization { TE, TM };

enum class PoleBranch { Traveling, Evanescent };

struct PoleClass {
  PoleBranch branch = PoleBranch::Traveling;
  // Traveling: +sqrt(wL^2 - kpar^2) (the mirror pole at -kz_pole is implied);
  // evanescent: i sqrt(kpar^2 - wL^2).
  cplx kzPole;
};

// Perpendicular wave-vector component inside the medium,
//   k_z^d = sqrt(n^2 kz^2 + kpar^2 (n^2 - 1)),
// on the branch with Im >= 0 (for a positive real radicand, the positive
// real root).
cplx kz_in_medium(cplx kz, double kpar, double n);

// Fresnel coefficients:
//   TE: (kz - k_z^d) / (kz + k_z^d)
//   TM: (n^2 kz - k_z^d) / (n^2 kz + k_z^d)
// Perfect conductor: exactly -1 (TE) and +1 (TM); n = 1: exactly 0.
// Throws DegenerateDenominatorError when the denominator underflows.
cplx reflection(Polarization pol, cplx kz, double kpar, const Medium& medium);

// Reflection at the resonant pole, kz = omega_L * chi, kpar = omega_L
// sqrt(1 - chi^2): chi = tau in [0,1] on the traveling branch, chi = i kappa
// on the evanescent one. Scale invariance of R makes omega_L drop out.
cplx reflection_at_pole(Polarization pol, cplx chi, const Medium& medium);

// Unit polarization vectors (Appendix-style choice)
//   e_TE = (ky, -kx, 0)/kpar,  e_TM = (kx kz, ky kz, -kpar^2)/(k kpar)
// and their kz -> -kz counterparts. The kpar = 0 degeneracy is resolved by
// the azimuth-zero limit kx -> 0+ along ky = 0.
struct PolarizationBasis {
  Vec3c te, tm;        // e_k,lambda
  Vec3c teBar, tmBar;  // under kz -> -kz
};

PolarizationBasis polarization_basis(const WaveVector& k);

// Dyadic e_k,lambda (x) ebar_k,lambda, written out explicitly.
Mat3c polarization_outer(const WaveVector& k, Polarization pol);

// Incident+reflected vacuum-side mode function (z > 0):
//   f = -i sqrt(w / (2 (2pi)^3)) [ e^{i k.r} e_kl + R e^{i kbar.r} ebar_kl ]
Vec3c mode_ir(const std::array<double, 3>& r, const WaveVector& k,
              Polarization pol, const Medium& medium);

// kpar < omega_L: pole on the real axis (traveling); kpar > omega_L: pole at
// i sqrt(kpar^2 - wL^2) (evanescent). The grazing point kpar = omega_L is
// classified traveling with kz_pole = 0; the tau-measure endpoint makes it
// weightless in every integral.
PoleClass classify_pole(double kpar, double omega_l);

}  // namespace fockcp

#endif
