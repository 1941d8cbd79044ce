#include "fockcp/fockcp.h"

#include <cmath>
#include <string>

#include "fockcp/potential.hpp"
#include "fockcp/version.hpp"

// extern-C surface: opaque handle over the value-type Scenario, exceptions
// mapped to status codes, message parked in a thread-local buffer.

struct fockcp_scenario {
  fockcp::Scenario value;
};

namespace {

thread_local std::string g_last_error;

fockcp_status set_error(fockcp_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
fockcp_status guarded(Fn&& fn) {
  try {
    fn();
    return FOCKCP_OK;
  } catch (const fockcp::ResonantDriveError& e) {
    return set_error(FOCKCP_ERR_RESONANT_DRIVE, e.what());
  } catch (const fockcp::ToleranceNotMetError& e) {
    return set_error(FOCKCP_ERR_TOLERANCE, e.what());
  } catch (const fockcp::NonFiniteIntegrandError& e) {
    return set_error(FOCKCP_ERR_NONFINITE, e.what());
  } catch (const fockcp::NonDecayingIntegrandError& e) {
    return set_error(FOCKCP_ERR_NONDECAYING, e.what());
  } catch (const fockcp::DegenerateDenominatorError& e) {
    return set_error(FOCKCP_ERR_DEGENERATE, e.what());
  } catch (const fockcp::InvalidScenarioError& e) {
    return set_error(FOCKCP_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(FOCKCP_ERR_UNKNOWN, e.what());
  } catch (...) {
    return set_error(FOCKCP_ERR_UNKNOWN, "unknown error");
  }
}

fockcp::QuadratureSettings to_cpp(const fockcp_quad_settings* s) {
  fockcp::QuadratureSettings out;
  if (s) {
    out.relTol = s->rel_tol;
    out.absTol = s->abs_tol;
    out.maxPanels = s->max_panels;
    out.oscillationsPerPanel = s->oscillations_per_panel;
  }
  return out;
}

void fill(const fockcp::ShiftResult& r, fockcp_shift_result* out) {
  out->traveling_j = r.traveling;
  out->evanescent_j = r.evanescent;
  out->total_j = r.total;
  out->zeta = r.zeta;
  out->traveling_error_j = r.diagnostics.travelingError;
  out->evanescent_error_j = r.diagnostics.evanescentError;
  out->traveling_panels = r.diagnostics.travelingPanels;
  out->evanescent_panels = r.diagnostics.evanescentPanels;
  out->evanescent_imag_residue_j = r.diagnostics.evanescentImagResidue;
  out->near_resonance = r.diagnostics.nearResonance ? 1 : 0;
}

fockcp_status require(bool ok, const char* what) {
  return ok ? FOCKCP_OK : set_error(FOCKCP_ERR_INVALID, what);
}

}  // namespace

extern "C" {

fockcp_scenario* fockcp_scenario_create(void) {
  return new (std::nothrow) fockcp_scenario{};
}

void fockcp_scenario_free(fockcp_scenario* s) { delete s; }

fockcp_status fockcp_scenario_set_atom(fockcp_scenario* s, double omega0,
                                       double dx2, double dy2, double dz2) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.atom = fockcp::AtomModel{omega0, dx2, dy2, dz2};
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_set_drive_fock(fockcp_scenario* s, double omega_l,
                                             double photons, double ex2,
                                             double ey2, double ez2) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.drive = fockcp::DriveField::fock(omega_l, photons, ex2, ey2, ez2);
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_set_drive_classical(fockcp_scenario* s,
                                                  double omega_l,
                                                  double intensity,
                                                  double wx2, double wy2,
                                                  double wz2) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.drive =
      fockcp::DriveField::classical(omega_l, intensity, wx2, wy2, wz2);
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_set_medium_conductor(fockcp_scenario* s) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.medium = fockcp::Medium::conductor();
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_set_medium_dielectric(fockcp_scenario* s,
                                                    double n) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.medium = fockcp::Medium::dielectric(n);
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_set_distance(fockcp_scenario* s, double z_m) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  s->value.z = z_m;
  return FOCKCP_OK;
}

fockcp_status fockcp_scenario_validate(const fockcp_scenario* s) {
  if (auto st = require(s != nullptr, "null scenario")) return st;
  return guarded([&] { s->value.validate(); });
}

void fockcp_quad_settings_default(fockcp_quad_settings* out) {
  if (!out) return;
  fockcp::QuadratureSettings d;
  out->rel_tol = d.relTol;
  out->abs_tol = d.absTol;
  out->max_panels = d.maxPanels;
  out->oscillations_per_panel = d.oscillationsPerPanel;
}

fockcp_status fockcp_shift_general(const fockcp_scenario* s,
                                   const fockcp_quad_settings* settings,
                                   fockcp_shift_result* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded(
      [&] { fill(fockcp::shift_general(s->value, to_cpp(settings)), out); });
}

fockcp_status fockcp_shift_parallel_dielectric(const fockcp_scenario* s,
                                               const fockcp_quad_settings* settings,
                                               fockcp_shift_result* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    fill(fockcp::shift_parallel_dielectric(s->value, to_cpp(settings)), out);
  });
}

fockcp_status fockcp_pc_shift(const fockcp_scenario* s, fockcp_pc_part part,
                              double* out_j) {
  if (auto st = require(s && out_j, "null argument")) return st;
  return guarded([&] {
    *out_j = fockcp::pc_shift(static_cast<fockcp::PcPart>(part), s->value);
  });
}

fockcp_status fockcp_pc_asymptotic(const fockcp_scenario* s,
                                   fockcp_pc_regime regime, double* out_j) {
  if (auto st = require(s && out_j, "null argument")) return st;
  return guarded([&] {
    *out_j =
        fockcp::pc_asymptotic(static_cast<fockcp::PcRegime>(regime), s->value);
  });
}

fockcp_status fockcp_pc_decompose(const fockcp_scenario* s,
                                  double out_terms_j[3]) {
  if (auto st = require(s && out_terms_j, "null argument")) return st;
  return guarded([&] {
    const fockcp::PcDecomposition d = fockcp::pc_decompose(s->value);
    out_terms_j[0] = d.termCos3;
    out_terms_j[1] = d.termSin2;
    out_terms_j[2] = d.termCos1;
  });
}

fockcp_status fockcp_zeta(const fockcp_scenario* s, double* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = fockcp::zeta(s->value.drive.omegaL, s->value.z); });
}

fockcp_status fockcp_polarizability(const fockcp_scenario* s, double* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded(
      [&] { *out = fockcp::polarizability(s->value.atom, s->value.drive.omegaL); });
}

fockcp_status fockcp_intensity(const fockcp_scenario* s,
                               fockcp_intensity_mode mode,
                               double* out_w_per_m2) {
  if (auto st = require(s && out_w_per_m2, "null argument")) return st;
  return guarded([&] {
    *out_w_per_m2 = fockcp::intensity(
        s->value.drive, static_cast<fockcp::IntensityMode>(mode));
  });
}

fockcp_status fockcp_scenario_resolve(const fockcp_scenario* s,
                                      fockcp_natural_params* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    s->value.validate();
    const fockcp::NaturalParams p = fockcp::to_natural(s->value);
    out->omega0 = p.omega;
    out->omega_l = p.omegaL;
    out->z_m = p.z;
    out->zeta = p.zeta();
    out->photons = p.photons;
    out->ex2 = p.ex2;
    out->ey2 = p.ey2;
    out->ez2 = p.ez2;
    out->dx2 = p.dx2;
    out->dy2 = p.dy2;
    out->dz2 = p.dz2;
    out->refractive_index =
        s->value.medium.perfectConductor ? HUGE_VAL : s->value.medium.n;
    out->polarizability_si =
        fockcp::polarizability(s->value.atom, s->value.drive.omegaL);
    out->classical_intensity_si =
        fockcp::intensity(s->value.drive, fockcp::IntensityMode::Classical);
  });
}

const char* fockcp_last_error(void) { return g_last_error.c_str(); }

const char* fockcp_version(void) { return FOCKCP_VERSION_STRING; }

}  // extern "C"
