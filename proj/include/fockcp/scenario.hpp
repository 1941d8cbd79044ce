#ifndef FOCKCP_SCENARIO_HPP
#define FOCKCP_SCENARIO_HPP

#include <optional>
#include <string>

#include "fockcp/constants.hpp"
#include "fockcp/errors.hpp"

// Scenario data model. All types are immutable value types once validated;
// every operation on them is a pure function, safe to call concurrently.

namespace fockcp {

// Two-level atom with diagonal dipole products d_n* d_m = |d_n|^2 delta_nm.
// Only squared Cartesian components enter any downstream formula, so that is
// what is stored.
struct AtomModel {
  double omega0 = 0.0;  // transition angular frequency, rad/s
  double dx2 = 0.0;     // |d_x|^2, C^2 m^2
  double dy2 = 0.0;
  double dz2 = 0.0;

  double dpar2() const { return dx2 + dy2; }
  double dtot2() const { return dx2 + dy2 + dz2; }
};

// Monochromatic quantized drive. Exactly one of (photons, classicalIntensity)
// is set. On the Fock route the squared amplitude components are in natural
// units (1/m^3); on the classical route they are dimensionless direction
// weights and the overall scale comes from the intensity.
struct DriveField {
  double omegaL = 0.0;  // rad/s
  std::optional<double> photons;             // N_L >= 0
  std::optional<double> classicalIntensity;  // W/m^2
  double ex2 = 0.0;
  double ey2 = 0.0;
  double ez2 = 0.0;

  static DriveField fock(double omega_l, double n_photons, double ex2,
                         double ey2, double ez2);
  static DriveField classical(double omega_l, double intensity_w_per_m2,
                              double wx2 = 1.0, double wy2 = 0.0,
                              double wz2 = 0.0);

  double etot2() const { return ex2 + ey2 + ez2; }
};

struct Medium {
  bool perfectConductor = false;
  double n = 1.0;  // real refractive index, >= 1, frequency independent

  static Medium conductor() { return Medium{true, 0.0}; }
  static Medium dielectric(double n) { return Medium{false, n}; }
  static Medium vacuum() { return Medium{false, 1.0}; }
};

struct Scenario {
  AtomModel atom;
  DriveField drive;
  Medium medium;
  double z = 0.0;  // atom-surface distance, m, atom on the vacuum side

  // Throws InvalidScenarioError / ResonantDriveError on a bad scenario.
  void validate() const;

  // Relative detuning below this only warns (diagnostic flag downstream).
  static constexpr double kResonanceGuardBand = 1e-6;
  bool nearResonance() const;
};

// zeta = 2 omega_L z / c: photon round-trip time over drive period (x 2pi).
double zeta(double omega_l, double z);

// alpha(omega_L) = (2/hbar) omega0 |d|^2 / (omega0^2 - omega_L^2), C^2 m^2/J.
// Throws ResonantDriveError at omega0 == omega_L.
double polarizability(const AtomModel& atom, double omega_l);

enum class IntensityMode { Exact, Classical };

// Fock route:   exact     I = E0^2 omega_L (2 N_L + 1) / 8pi
//               classical I = E0^2 omega_L N_L / 4pi
// (natural forms; returned in W/m^2). The classical-intensity route returns
// the stored intensity for mode Classical and rejects mode Exact.
double intensity(const DriveField& drive, IntensityMode mode);

// Natural-unit image of a scenario: the parameter set every integrand needs.
struct NaturalParams {
  double omega = 0.0;    // transition frequency, 1/m
  double omegaL = 0.0;   // drive frequency, 1/m
  double z = 0.0;        // m
  double photons = 0.0;  // N_L (1 on the classical route, scale in e2)
  double ex2 = 0.0, ey2 = 0.0, ez2 = 0.0;  // 1/m^3
  double dx2 = 0.0, dy2 = 0.0, dz2 = 0.0;  // m^2

  double dpar2() const { return dx2 + dy2; }
  double zeta() const { return 2.0 * omegaL * z; }
};

NaturalParams to_natural(const Scenario& s);

// Natural-unit energy -> J. Inverse of units::energy_to_natural.
double to_si(double shift_natural);

}  // namespace fockcp

#endif
