#include "fockcp/integrands.hpp"

#include <cmath>
#include <numbers>

namespace fockcp {

namespace {

constexpr cplx kImag{0.0, 1.0};
constexpr double kInv32Pi2 =
    1.0 / (32.0 * std::numbers::pi * std::numbers::pi);

struct Brackets {
  cplx a;  // R_TE - chi^2 R_TM
  cplx b;  // (1 - chi^2) R_TM
};

Brackets brackets(cplx chi, const Medium& medium) {
  const cplx rte = reflection_at_pole(Polarization::TE, chi, medium);
  const cplx rtm = reflection_at_pole(Polarization::TM, chi, medium);
  const cplx chi2 = chi * chi;
  return {rte - chi2 * rtm, (1.0 - chi2) * rtm};
}

void check_off_resonance(const IntegrandParams& p) {
  if (p.omega == p.omegaL)
    throw ResonantDriveError("integrand pole at omega == omegaL");
}

}  // namespace

IntegrandParams IntegrandParams::from(const NaturalParams& p) {
  return IntegrandParams{p.omega, p.omegaL, p.z,   p.photons, p.ex2,
                         p.ey2,   p.ez2,    p.dx2, p.dy2,     p.dz2};
}

IntegrandParams IntegrandParams::from(const Scenario& s) {
  return from(to_natural(s));
}

cplx s_diagram(int index, cplx chi, const IntegrandParams& p,
               const Medium& medium) {
  check_off_resonance(p);
  if (index < 1 || index > 4)
    throw InvalidScenarioError("diagram index must be in 1..4");

  const auto [a, b] = brackets(chi, medium);
  const double w = p.omega;
  const double wl = p.omegaL;
  const double wl4 = wl * wl * wl * wl;
  const cplx phase = std::exp(kImag * p.zeta() * chi);
  const cplx pref = -kImag * p.photons * wl4 * kInv32Pi2 * phase;

  if (index == 2 || index == 3) {
    const cplx bracket =
        (p.ex2 * p.dx2 * p.dx2 + p.ey2 * p.dy2 * p.dy2) * a +
        2.0 * p.ez2 * p.dz2 * p.dz2 * b;
    return pref / ((w + wl) * (w - wl)) * bracket;
  }

  const double sumEd = p.ex2 * p.dx2 + p.ey2 * p.dy2 + p.ez2 * p.dz2;
  const cplx bracket = p.dpar2() * a + 2.0 * p.dz2 * b;
  const double den = index == 1 ? (w + wl) * (w + wl) : (w - wl) * (w - wl);
  return pref / den * sumEd * bracket;
}

cplx s_tot(cplx chi, const IntegrandParams& p, const Medium& medium) {
  check_off_resonance(p);

  const auto [a, b] = brackets(chi, medium);
  const double w = p.omega;
  const double wl = p.omegaL;
  const double w2 = w * w;
  const double wl2 = wl * wl;
  const double den = (w2 - wl2) * (w2 - wl2);

  const cplx quartic = (p.ex2 * p.dx2 * p.dx2 + p.ey2 * p.dy2 * p.dy2) * a +
                       2.0 * p.ez2 * p.dz2 * p.dz2 * b;
  const cplx cross =
      (p.ez2 * p.dz2 * p.dpar2() + (p.ex2 + p.ey2) * p.dx2 * p.dy2) * a +
      2.0 * (p.ex2 * p.dx2 + p.ey2 * p.dy2) * p.dz2 * b;

  const cplx phase = std::exp(kImag * p.zeta() * chi);
  return -kImag * p.photons * wl2 * wl2 * kInv32Pi2 * phase / den *
         (4.0 * w2 * quartic + 2.0 * (w2 + wl2) * cross);
}

cplx s_parallel(cplx chi, const IntegrandParams& p, const Medium& medium) {
  check_off_resonance(p);

  const cplx rte = reflection_at_pole(Polarization::TE, chi, medium);
  const cplx rtm = reflection_at_pole(Polarization::TM, chi, medium);
  const double w = p.omega;
  const double wl = p.omegaL;
  const double den = (w * w - wl * wl) * (w * w - wl * wl);
  const cplx phase = std::exp(kImag * p.zeta() * chi);

  return -kImag * p.photons * wl * wl * wl * wl * w * w /
         (8.0 * std::numbers::pi * std::numbers::pi * den) * p.ex2 * p.dx2 *
         p.dx2 * phase * (rte - chi * chi * rtm);
}

}  // namespace fockcp
