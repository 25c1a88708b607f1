#pragma once

namespace contact2d {

// min over p of [omega_c(p) + u p] = m c^2 sqrt(1 - u^2/c^2); with the rest-energy
// subtraction the same minimum shifted by -m c^2 (nonpositive).
double boosted_min_rel(double u, double m, double c, bool subtract_zitterbewegung = false);

// n-particle Galilean minimum: -n m u^2 / 2, negative for any u != 0.
double boosted_min_nr(double u, double m, int n);

struct BoostReport {
    double u = 0.0;
    double m = 1.0;
    double c = 1.0;
    int n = 1;
    double min_rel = 0.0;            // n-particle, unsubtracted
    double min_rel_subtracted = 0.0; // n-particle, rest energy removed
    double min_nr = 0.0;
    double cone_half_angle = 0.0;    // arctan(1/c)
    bool rel_nonnegative = false;
    bool nr_negative = false;
};

BoostReport contraction_report(double u, double m, double c, int n);

}  // namespace contact2d
