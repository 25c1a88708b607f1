#pragma once

#include <vector>

#include "contact2d/cutoff.hpp"

namespace contact2d {

// literal: V0 = 2 g0 / eps^2 (profile integral 2*pi*g0).
// unit: V0 = g0 / (pi eps^2), so the profile integrates to g0 exactly; this is the
// normalization override used for cross-scheme comparisons.
enum class WellNorm { literal, unit };

struct WellSpec {
    double eps;
    double g0;
    double m = 1.0;
    WellNorm norm = WellNorm::literal;

    double depth() const;  // signed V0, sign follows g0
    // coupling of the equal-strength delta limit: integral of V over the plane
    double delta_strength() const;
    void validate() const;
};

struct WellBoundState {
    double B;         // binding energy in (0, |V0|)
    double residual;  // normalized matching-function residual
};

// All s-wave bound states, sorted descending in B; empty when g0 >= 0.
std::vector<WellBoundState> well_bound_states(const WellSpec& well, int scan_points = 512);

// Continuous s-wave phase shift (Levinson branch: delta0(k -> 0) = n_bound * pi).
double s_wave_phase_shift_well(const WellSpec& well, double k);

// c_cal with kappa_eff = c_cal * pi/eps: the sharp-cutoff model at the well's
// delta-equivalent coupling reproducing reference.B. reference must be a sharp-cutoff
// bound state; its kappa centers the search bracket.
double effective_cutoff_calibration(const WellSpec& well, const BoundState& reference);

}  // namespace contact2d
