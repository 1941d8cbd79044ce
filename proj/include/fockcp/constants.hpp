#ifndef FOCKCP_CONSTANTS_HPP
#define FOCKCP_CONSTANTS_HPP

// Physical constants (CODATA 2018 / SI-2019 exact values) and the
// conversion rules between SI and the internal natural-unit system.
//
// Internally everything is computed with hbar = c = eps0 = 1 and lengths
// kept in meters, so
//
//   frequency   w_nat   = w_SI / c                  [1/m]
//   distance    z_nat   = z_SI                      [m]
//   dipole^2    d2_nat  = d2_SI / (eps0 hbar c)     [m^2]
//   intensity   I_nat   = I_SI / (hbar c^2)         [1/m^4]
//   energy      E_SI    = E_nat * hbar c            [J]
//
// The rule is pinned by requiring that the assembled perfect-conductor
// closed forms come out in their SI shape -I_cl a^2/(32 pi c eps0^2 z^3) ...;
// the acceptance suite cross-checks it against the quadrature route.

namespace fockcp {

struct PhysicalConstants {
  static constexpr double c = 299792458.0;          // m/s, exact
  static constexpr double hbar = 1.054571817e-34;   // J s
  static constexpr double epsilon0 = 8.8541878128e-12;  // F/m
};

namespace units {

inline constexpr double omega_to_natural(double omega_si) {
  return omega_si / PhysicalConstants::c;
}
inline constexpr double omega_to_si(double omega_nat) {
  return omega_nat * PhysicalConstants::c;
}

inline constexpr double dipole_sq_to_natural(double d2_si) {
  return d2_si / (PhysicalConstants::epsilon0 * PhysicalConstants::hbar *
                  PhysicalConstants::c);
}
inline constexpr double dipole_sq_to_si(double d2_nat) {
  return d2_nat * PhysicalConstants::epsilon0 * PhysicalConstants::hbar *
         PhysicalConstants::c;
}

inline constexpr double intensity_to_natural(double i_si) {
  return i_si / (PhysicalConstants::hbar * PhysicalConstants::c *
                 PhysicalConstants::c);
}
inline constexpr double intensity_to_si(double i_nat) {
  return i_nat * PhysicalConstants::hbar * PhysicalConstants::c *
         PhysicalConstants::c;
}

inline constexpr double energy_to_si(double e_nat) {
  return e_nat * PhysicalConstants::hbar * PhysicalConstants::c;
}
inline constexpr double energy_to_natural(double e_si) {
  return e_si / (PhysicalConstants::hbar * PhysicalConstants::c);
}

// Polarizability in SI is C^2 m^2 / J; natural value is alpha_SI / eps0 (m^3).
inline constexpr double polarizability_to_natural(double a_si) {
  return a_si / PhysicalConstants::epsilon0;
}
inline constexpr double polarizability_to_si(double a_nat) {
  return a_nat * PhysicalConstants::epsilon0;
}

}  // namespace units
}  // namespace fockcp

#endif
