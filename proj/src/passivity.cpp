#include "contact2d/passivity.hpp"

#include <cmath>

#include "contact2d/errors.hpp"

namespace contact2d {

double boosted_min_rel(double u, double m, double c, bool subtract_zitterbewegung) {
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    if (!(c > 0.0)) throw domain_error("c must be > 0");
    if (!(std::fabs(u) < c)) throw domain_error("superluminal boost: |u| must be < c");
    const double ratio = u / c;
    const double gamma_inv = std::sqrt((1.0 - ratio) * (1.0 + ratio));
    const double rest = m * c * c;
    // subtracted form written as -mc^2 (1 - sqrt(1-r^2)) = -mc^2 r^2/(1+sqrt(1-r^2))
    if (subtract_zitterbewegung) return -rest * ratio * ratio / (1.0 + gamma_inv);
    return rest * gamma_inv;
}

double boosted_min_nr(double u, double m, int n) {
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    if (n < 1) throw domain_error("particle count must be >= 1");
    return -0.5 * n * m * u * u;
}

BoostReport contraction_report(double u, double m, double c, int n) {
    BoostReport r;
    r.u = u;
    r.m = m;
    r.c = c;
    r.n = n;
    r.min_rel = n * boosted_min_rel(u, m, c, false);
    r.min_rel_subtracted = n * boosted_min_rel(u, m, c, true);
    r.min_nr = boosted_min_nr(u, m, n);
    r.cone_half_angle = std::atan(1.0 / c);
    r.rel_nonnegative = r.min_rel >= 0.0;
    r.nr_negative = r.min_nr < 0.0;
    return r;
}

}  // namespace contact2d
