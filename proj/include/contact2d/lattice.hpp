#pragma once

#include <optional>
#include <vector>

#include "contact2d/cutoff.hpp"

namespace contact2d {

struct LatticeSpec {
    double eps = 1.0;     // spacing, > 0
    int dim = 2;          // 1 or 2
    double sigma = 1.0;   // mass convention: factor multiplying E_eps inside G(B)
    void validate() const;
};

// E_eps(k) = eps^-2 sum_i (1 - cos(eps k_i)); k must lie in the closed zone.
double lattice_dispersion(const std::vector<double>& k, double eps);

// G(B) = int_BZ d^dim k/(2pi)^dim 1/(sigma E_eps(k) + B); B > 0.
double bz_green_integral(double B, const LatticeSpec& spec);

// Rank-one condition 1 = |g0| G(B); empty when g0 >= 0 (no bound state).
std::optional<BoundState> lattice_bound_state(double g0, const LatticeSpec& spec);

struct ContinuumRow {
    double eps;
    double kappa;   // pi/eps
    double g0;      // coupling used at this eps
    double B;
};

// Sweep eps with kappa = pi/eps; running=true re-derives g0 from the counterterm at
// each kappa, running=false freezes g0_fixed.
std::vector<ContinuumRow> continuum_limit_check(double m_sq, double c_log, double kappa_ref,
                                                double lambda0,
                                                const std::vector<double>& eps_list,
                                                const LatticeSpec& base, bool running,
                                                double g0_fixed = -1.0);

}  // namespace contact2d
