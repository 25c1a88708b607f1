#pragma once

namespace contact2d {

// Model constants. Defaults give renormalized coupling g = pi at mu = 1 once the
// counterterm running is switched on (c_log/(3*lambda0) = 1/pi).
struct PhysParams {
    double m0_sq = 1.0;                       // bare mass^2, any sign
    double lambda0 = 1.0471975511965976;      // quartic coupling, > 0 (pi/3)
    double m_sq = 1.0;                        // renormalized mass^2, > 0
    double c = 1.0;                           // speed of light, > 0
    double kappa = 100.0;                     // UV cutoff, > 0
    double mu = 1.0;                          // renormalization point, > 0
    double g = 3.1415926535897931;            // renormalized contact coupling
    double c_log = 1.0;                       // counterterm slope, > 0
    double kappa_ref = 1.0;                   // counterterm reference cutoff, > 0

    void validate() const;
    // Case-ii bookkeeping: m0_sq derived from the running counterterm at this->kappa.
    PhysParams with_running() const;
};

// g0 = 3*lambda0 / m0_sq
double bare_coupling(double lambda0, double m0_sq);

// m0^2(kappa) = m_sq - c_log * ln(kappa/kappa_ref)
double running_bare_mass(double m_sq, double c_log, double kappa, double kappa_ref);

// omega(p) = sqrt(p^2 c^2 + m^2 c^4)
double dispersion_rel(double p, double m, double c);

// omega - m c^2 - p^2/(2m), evaluated cancellation-free
double nr_expansion_remainder(double p, double m, double c);

}  // namespace contact2d
