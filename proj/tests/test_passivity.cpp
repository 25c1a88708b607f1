#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "contact2d/errors.hpp"
#include "contact2d/params.hpp"
#include "contact2d/passivity.hpp"

using namespace contact2d;

namespace {

// direct minimization of omega(p) - u p by golden-section search
double boost_minimum_by_search(double u, double m, double c, bool subtract) {
    auto f = [&](double p) {
        double w = dispersion_rel(p, m, c);
        if (subtract) w -= m * c * c;
        return w - u * p;
    };
    double a = 0.0, b = 64.0 * m * c;  // p* = m u / sqrt(1 - u^2/c^2) lies well inside
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 220; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace

TEST_CASE("relativistic boosted minimum") {
    // 3-4-5 kinematics: sqrt(1 - 0.36) = 0.8
    CHECK(boosted_min_rel(0.6, 1.0, 1.0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(boosted_min_rel(0.0, 2.0, 3.0) == doctest::Approx(18.0).epsilon(1e-15));
    CHECK(boosted_min_rel(-0.6, 1.0, 1.0) ==
          doctest::Approx(boosted_min_rel(0.6, 1.0, 1.0)).epsilon(1e-15));

    for (double u : {0.1, 0.5, 0.9, 0.99}) {
        for (double c : {1.0, 2.0, 10.0}) {
            if (u >= c) continue;
            const double got = boosted_min_rel(u, 1.3, c);
            CHECK(std::fabs(got - boost_minimum_by_search(u, 1.3, c, false)) <
                  1e-8 * (1.0 + std::fabs(got)));
            CHECK(got >= 0.0);
            const double sub = boosted_min_rel(u, 1.3, c, true);
            CHECK(std::fabs(sub - boost_minimum_by_search(u, 1.3, c, true)) <
                  1e-8 * (1.0 + std::fabs(sub)));
            CHECK(sub <= 0.0);
            // subtraction removes exactly the rest energy
            CHECK(std::fabs(sub - (got - 1.3 * c * c)) < 1e-12 * (1.0 + 1.3 * c * c));
        }
    }
    // no catastrophic cancellation at small u: -m u^2/2 (1 + O(u^2/c^2))
    const double tiny = boosted_min_rel(1e-8, 1.0, 1.0, true);
    CHECK(std::fabs(tiny / (-0.5e-16) - 1.0) < 1e-8);

    CHECK_THROWS_WITH_AS(boosted_min_rel(1.0, 1.0, 1.0),
                         "superluminal boost: |u| must be < c", domain_error);
    CHECK_THROWS_WITH_AS(boosted_min_rel(-3.0, 1.0, 2.0),
                         "superluminal boost: |u| must be < c", domain_error);
    CHECK_THROWS_WITH_AS(boosted_min_rel(0.1, 0.0, 1.0), "mass must be > 0",
                         domain_error);
    CHECK_THROWS_WITH_AS(boosted_min_rel(0.1, 1.0, 0.0), "c must be > 0", domain_error);
}

TEST_CASE("galilean boosted minimum") {
    CHECK(boosted_min_nr(0.6, 1.0, 10) == doctest::Approx(-1.8).epsilon(1e-15));
    CHECK(boosted_min_nr(0.0, 1.0, 5) == 0.0);
    CHECK(boosted_min_nr(-2.0, 0.5, 3) == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(boosted_min_nr(0.1, -1.0, 1), "mass must be > 0", domain_error);
    CHECK_THROWS_WITH_AS(boosted_min_nr(0.1, 1.0, 0), "particle count must be >= 1",
                         domain_error);
}

TEST_CASE("subtracted minimum approaches the galilean one at large c") {
    // per particle: -m u^2/2 * [2/(1 + 1/gamma)] -> -m u^2/2 as c -> inf
    const double u = 1.0, m = 1.0;
    const double nr = boosted_min_nr(u, m, 1);
    CHECK(std::fabs(boosted_min_rel(u, m, 100.0, true) / nr - 1.0) < 1e-2);
    CHECK(std::fabs(boosted_min_rel(u, m, 1e4, true) / nr - 1.0) < 1e-6);
    // leading correction is O(u^2/c^2): quarters under c -> 2c
    const double d1 = boosted_min_rel(u, m, 50.0, true) / nr - 1.0;
    const double d2 = boosted_min_rel(u, m, 100.0, true) / nr - 1.0;
    CHECK(std::fabs(d1 / d2 - 4.0) < 0.05);
}

TEST_CASE("contraction report") {
    const BoostReport r = contraction_report(0.6, 1.0, 1.0, 7);
    CHECK(r.u == 0.6);
    CHECK(r.n == 7);
    CHECK(r.min_rel == doctest::Approx(7 * 0.8).epsilon(1e-14));
    CHECK(r.min_rel_subtracted == doctest::Approx(7 * -0.2).epsilon(1e-14));
    CHECK(r.min_nr == doctest::Approx(-0.5 * 7 * 0.36).epsilon(1e-14));
    CHECK(r.cone_half_angle == doctest::Approx(std::atan(1.0)).epsilon(1e-15));
    CHECK(r.rel_nonnegative);
    CHECK(r.nr_negative);

    CHECK(contraction_report(0.5, 1.0, 1000.0, 1).cone_half_angle ==
          doctest::Approx(std::atan(1e-3)).epsilon(1e-12));
    // the relativistic side never dips below zero across the admissible band
    for (double u = 0.0; u < 0.991; u += 0.033) {
        CHECK(contraction_report(u, 2.0, 1.0, 3).rel_nonnegative);
    }
    // u = 0: the galilean minimum is exactly zero, not negative
    CHECK_FALSE(contraction_report(0.0, 1.0, 1.0, 2).nr_negative);
    CHECK(contraction_report(1e-3, 1.0, 1.0, 2).nr_negative);
}
