#include "contact2d/params.hpp"

#include <cmath>
#include <string>

#include "contact2d/errors.hpp"

namespace contact2d {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
}
}  // namespace

void PhysParams::validate() const {
    require(lambda0 > 0.0, "lambda0 must be > 0");
    require(m_sq > 0.0, "m_sq must be > 0");
    require(c > 0.0, "c must be > 0");
    require(kappa > 0.0, "kappa must be > 0");
    require(mu > 0.0, "mu must be > 0");
    require(c_log > 0.0, "c_log must be > 0");
    require(kappa_ref > 0.0, "kappa_ref must be > 0");
    require(std::isfinite(m0_sq), "m0_sq must be finite");
}

PhysParams PhysParams::with_running() const {
    PhysParams p = *this;
    p.m0_sq = running_bare_mass(m_sq, c_log, kappa, kappa_ref);
    return p;
}

double bare_coupling(double lambda0, double m0_sq) {
    if (!(lambda0 > 0.0)) throw domain_error("lambda0 must be > 0");
    if (m0_sq == 0.0) throw domain_error("m0_sq = 0: bare coupling undefined");
    return 3.0 * lambda0 / m0_sq;
}

double running_bare_mass(double m_sq, double c_log, double kappa, double kappa_ref) {
    if (!(m_sq > 0.0)) throw domain_error("m_sq must be > 0");
    if (!(c_log > 0.0)) throw domain_error("c_log must be > 0");
    if (!(kappa > 0.0) || !(kappa_ref > 0.0))
        throw domain_error("kappa and kappa_ref must be > 0");
    return m_sq - c_log * std::log(kappa / kappa_ref);
}

double dispersion_rel(double p, double m, double c) {
    if (m < 0.0) throw domain_error("mass must be >= 0");
    if (!(c > 0.0)) throw domain_error("c must be > 0");
    return std::hypot(p * c, m * c * c);
}

double nr_expansion_remainder(double p, double m, double c) {
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    if (!(c > 0.0)) throw domain_error("c must be > 0");
    // omega - mc^2 - p^2/2m = -mc^2 x^2 / (4 (sqrt(1+x) + 1 + x/2)), x = p^2/(mc)^2:
    // multiply by the conjugate-like factor so no large terms cancel.
    const double x = (p / (m * c)) * (p / (m * c));
    const double s = std::sqrt(1.0 + x);
    return -m * c * c * x * x / (4.0 * (s + 1.0 + 0.5 * x));
}

}  // namespace contact2d
