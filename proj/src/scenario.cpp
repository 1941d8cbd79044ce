#include "fockcp/scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fockcp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidScenarioError(msg);
}

}  // namespace

DriveField DriveField::fock(double omega_l, double n_photons, double ex2,
                            double ey2, double ez2) {
  DriveField d;
  d.omegaL = omega_l;
  d.photons = n_photons;
  d.ex2 = ex2;
  d.ey2 = ey2;
  d.ez2 = ez2;
  return d;
}

DriveField DriveField::classical(double omega_l, double intensity_w_per_m2,
                                 double wx2, double wy2, double wz2) {
  DriveField d;
  d.omegaL = omega_l;
  d.classicalIntensity = intensity_w_per_m2;
  d.ex2 = wx2;
  d.ey2 = wy2;
  d.ez2 = wz2;
  return d;
}

void Scenario::validate() const {
  require(atom.omega0 > 0.0, "atom.omega0 must be > 0");
  require(atom.dx2 >= 0.0 && atom.dy2 >= 0.0 && atom.dz2 >= 0.0,
          "squared dipole components must be >= 0");
  require(drive.omegaL > 0.0, "drive frequency must be > 0");
  require(drive.photons.has_value() != drive.classicalIntensity.has_value(),
          "drive needs exactly one of photon number or classical intensity");
  if (drive.photons) {
    require(*drive.photons >= 0.0, "photon number must be >= 0");
    require(*drive.photons == std::floor(*drive.photons),
            "photon number must be an integer");
  }
  if (drive.classicalIntensity)
    require(*drive.classicalIntensity >= 0.0,
            "classical intensity must be >= 0");
  require(drive.ex2 >= 0.0 && drive.ey2 >= 0.0 && drive.ez2 >= 0.0,
          "squared amplitude components must be >= 0");
  if (!medium.perfectConductor)
    require(medium.n >= 1.0, "refractive index must be >= 1");
  require(z > 0.0, "atom-surface distance must be > 0");
  if (atom.omega0 == drive.omegaL)
    throw ResonantDriveError("drive frequency equals the transition frequency");
}

bool Scenario::nearResonance() const {
  return std::abs(atom.omega0 - drive.omegaL) <
         kResonanceGuardBand * atom.omega0;
}

double zeta(double omega_l, double z) {
  return 2.0 * omega_l * z / PhysicalConstants::c;
}

double polarizability(const AtomModel& atom, double omega_l) {
  if (atom.omega0 == omega_l)
    throw ResonantDriveError("polarizability pole at omega0 == omegaL");
  const double w = atom.omega0;
  return 2.0 / PhysicalConstants::hbar * w * atom.dtot2() /
         (w * w - omega_l * omega_l);
}

double intensity(const DriveField& drive, IntensityMode mode) {
  if (drive.classicalIntensity) {
    if (mode == IntensityMode::Exact)
      throw InvalidScenarioError(
          "exact intensity needs the photon-number drive description");
    return *drive.classicalIntensity;
  }
  const double wl = units::omega_to_natural(drive.omegaL);
  const double e2 = drive.etot2();
  const double nl = drive.photons.value_or(0.0);
  const double i_nat =
      mode == IntensityMode::Exact
          ? e2 * wl * (2.0 * nl + 1.0) / (8.0 * std::numbers::pi)
          : e2 * nl * wl / (4.0 * std::numbers::pi);
  return units::intensity_to_si(i_nat);
}

NaturalParams to_natural(const Scenario& s) {
  NaturalParams p;
  p.omega = units::omega_to_natural(s.atom.omega0);
  p.omegaL = units::omega_to_natural(s.drive.omegaL);
  p.z = s.z;
  p.dx2 = units::dipole_sq_to_natural(s.atom.dx2);
  p.dy2 = units::dipole_sq_to_natural(s.atom.dy2);
  p.dz2 = units::dipole_sq_to_natural(s.atom.dz2);
  if (s.drive.photons) {
    p.photons = *s.drive.photons;
    p.ex2 = s.drive.ex2;
    p.ey2 = s.drive.ey2;
    p.ez2 = s.drive.ez2;
  } else {
    // Classical correspondence: N_L E0^2 = 4 pi I / omega_L; split over the
    // direction weights and keep the whole scale in the amplitudes.
    p.photons = 1.0;
    const double wsum = s.drive.etot2();
    const double scale =
        wsum > 0.0 ? 4.0 * std::numbers::pi *
                         units::intensity_to_natural(*s.drive.classicalIntensity) /
                         (p.omegaL * wsum)
                   : 0.0;
    p.ex2 = s.drive.ex2 * scale;
    p.ey2 = s.drive.ey2 * scale;
    p.ez2 = s.drive.ez2 * scale;
  }
  return p;
}

double to_si(double shift_natural) { return units::energy_to_si(shift_natural); }

}  // namespace fockcp
