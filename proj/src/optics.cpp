#include "fockcp/optics.hpp"

#include <cmath>
#include <numbers>

namespace fockcp {

namespace {

constexpr cplx kImag{0.0, 1.0};

// Principal square root with the -0.0 imaginary-part footgun removed, then
// flipped onto the Im >= 0 branch. Leaves a positive real radicand on the
// positive real root.
cplx sqrt_im_pos(cplx w) {
  if (w.imag() == 0.0) w = cplx(w.real(), 0.0);
  cplx r = std::sqrt(w);
  if (r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace

double WaveVector::kpar() const { return std::hypot(kx, ky); }

cplx WaveVector::omega() const {
  const double kp = kpar();
  cplx w = std::sqrt(kz * kz + kp * kp);
  if (w.real() < 0.0) w = -w;
  return w;
}

cplx kz_in_medium(cplx kz, double kpar, double n) {
  return sqrt_im_pos(n * n * kz * kz + kpar * kpar * (n * n - 1.0));
}

cplx reflection(Polarization pol, cplx kz, double kpar, const Medium& medium) {
  if (medium.perfectConductor)
    return pol == Polarization::TE ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
  if (medium.n == 1.0) return cplx(0.0, 0.0);

  const double n2 = medium.n * medium.n;
  const cplx kzd = kz_in_medium(kz, kpar, medium.n);
  const cplx num = pol == Polarization::TE ? kz - kzd : n2 * kz - kzd;
  const cplx den = pol == Polarization::TE ? kz + kzd : n2 * kz + kzd;
  const double scale = std::abs(kz) + std::abs(kzd);
  if (std::abs(den) <= 1e-15 * scale || scale == 0.0)
    throw DegenerateDenominatorError(
        "reflection denominator underflow (grazing/branch-point input)");
  return num / den;
}

cplx reflection_at_pole(Polarization pol, cplx chi, const Medium& medium) {
  if (medium.perfectConductor)
    return pol == Polarization::TE ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
  if (medium.n == 1.0) return cplx(0.0, 0.0);

  // kz = chi, kpar = sqrt(1 - chi^2), so k_z^d = sqrt(chi^2 + n^2 - 1);
  // real in the TIR window kappa < sqrt(n^2-1), +i|.|^(1/2) beyond it.
  const double n2 = medium.n * medium.n;
  const cplx kzd = sqrt_im_pos(chi * chi + (n2 - 1.0));
  const cplx num = pol == Polarization::TE ? chi - kzd : n2 * chi - kzd;
  const cplx den = pol == Polarization::TE ? chi + kzd : n2 * chi + kzd;
  const double scale = std::abs(chi) + std::abs(kzd);
  if (std::abs(den) <= 1e-15 * scale || scale == 0.0)
    throw DegenerateDenominatorError(
        "reflection denominator underflow (grazing/branch-point input)");
  return num / den;
}

PolarizationBasis polarization_basis(const WaveVector& k) {
  PolarizationBasis b;
  const double kp = k.kpar();
  const cplx w = k.omega();
  if (kp > 0.0) {
    const double inv = 1.0 / kp;
    b.te = {cplx(k.ky * inv), cplx(-k.kx * inv), cplx(0.0)};
    b.teBar = b.te;
    const cplx f = 1.0 / (w * kp);
    b.tm = {k.kx * k.kz * f, k.ky * k.kz * f, cplx(-kp * kp) * f};
    b.tmBar = {-k.kx * k.kz * f, -k.ky * k.kz * f, cplx(-kp * kp) * f};
  } else {
    // Azimuth-zero limit (ky = 0, kx -> 0+).
    b.te = {cplx(0.0), cplx(-1.0), cplx(0.0)};
    b.teBar = b.te;
    b.tm = {k.kz / w, cplx(0.0), cplx(0.0)};
    b.tmBar = {-k.kz / w, cplx(0.0), cplx(0.0)};
  }
  return b;
}

Mat3c polarization_outer(const WaveVector& k, Polarization pol) {
  Mat3c m{};
  const double kp = k.kpar();
  const cplx kz = k.kz;
  const cplx k2 = kz * kz + kp * kp;

  if (kp == 0.0) {
    if (pol == Polarization::TE) {
      m[1][1] = 1.0;
    } else {
      m[0][0] = -kz * kz / k2;
    }
    return m;
  }

  if (pol == Polarization::TE) {
    const double f = 1.0 / (kp * kp);
    m[0][0] = k.ky * k.ky * f;
    m[0][1] = -k.kx * k.ky * f;
    m[1][0] = m[0][1];
    m[1][1] = k.kx * k.kx * f;
    return m;
  }

  const cplx f = 1.0 / (kp * kp * k2);
  const cplx kz2 = kz * kz;
  const double kp2 = kp * kp;
  m[0][0] = -k.kx * k.kx * kz2 * f;
  m[0][1] = -k.kx * k.ky * kz2 * f;
  m[0][2] = -k.kx * kz * kp2 * f;
  m[1][0] = m[0][1];
  m[1][1] = -k.ky * k.ky * kz2 * f;
  m[1][2] = -k.ky * kz * kp2 * f;
  m[2][0] = k.kx * kz * kp2 * f;
  m[2][1] = k.ky * kz * kp2 * f;
  m[2][2] = cplx(kp2 * kp2) * f;
  return m;
}

Vec3c mode_ir(const std::array<double, 3>& r, const WaveVector& k,
              Polarization pol, const Medium& medium) {
  if (r[2] <= 0.0)
    throw InvalidScenarioError("mode_ir requires a vacuum-side point, z > 0");

  const cplx w = k.omega();
  const PolarizationBasis b = polarization_basis(k);
  const cplx ref = reflection(pol, k.kz, k.kpar(), medium);

  const cplx phase = std::exp(kImag * (k.kx * r[0] + k.ky * r[1] + k.kz * r[2]));
  const cplx phaseBar =
      std::exp(kImag * (k.kx * r[0] + k.ky * r[1] - k.kz * r[2]));
  const cplx pref =
      -kImag * std::sqrt(w / (2.0 * std::pow(2.0 * std::numbers::pi, 3)));

  const Vec3c& e = pol == Polarization::TE ? b.te : b.tm;
  const Vec3c& ebar = pol == Polarization::TE ? b.teBar : b.tmBar;

  Vec3c out;
  for (int i = 0; i < 3; ++i)
    out[i] = pref * (phase * e[i] + ref * phaseBar * ebar[i]);
  return out;
}

PoleClass classify_pole(double kpar, double omega_l) {
  PoleClass p;
  if (kpar <= omega_l) {
    p.branch = PoleBranch::Traveling;
    p.kzPole = cplx(std::sqrt(omega_l * omega_l - kpar * kpar), 0.0);
  } else {
    p.branch = PoleBranch::Evanescent;
    p.kzPole = cplx(0.0, std::sqrt(kpar * kpar - omega_l * omega_l));
  }
  return p;
}

}  // namespace fockcp
