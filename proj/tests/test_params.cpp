#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "contact2d/errors.hpp"
#include "contact2d/params.hpp"

using namespace contact2d;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("bare coupling ratio") {
    CHECK(bare_coupling(1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bare_coupling(kPi / 3.0, 1.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(bare_coupling(2.0, -0.5) == doctest::Approx(-12.0).epsilon(1e-15));

    CHECK_THROWS_AS(bare_coupling(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(bare_coupling(-1.0, 1.0), domain_error);
    CHECK_THROWS_AS(bare_coupling(1.0, 0.0), domain_error);
}

TEST_CASE("running bare mass") {
    // at the reference cutoff the counterterm vanishes
    CHECK(running_bare_mass(1.0, 1.0, 7.5, 7.5) == 1.0);
    // slope in ln kappa is exactly -c_log
    const double a = running_bare_mass(1.0, 2.0, 10.0, 1.0);
    const double b = running_bare_mass(1.0, 2.0, 100.0, 1.0);
    CHECK(b - a == doctest::Approx(-2.0 * std::log(10.0)).epsilon(1e-14));
    // sign flip happens at kappa = kappa_ref * exp(m_sq/c_log)
    const double kc = std::exp(1.0 / 0.25);
    CHECK(running_bare_mass(1.0, 0.25, kc, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(running_bare_mass(1.0, 0.25, 2.0 * kc, 1.0) < 0.0);

    CHECK_THROWS_AS(running_bare_mass(0.0, 1.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(running_bare_mass(1.0, 0.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(running_bare_mass(1.0, 1.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(running_bare_mass(1.0, 1.0, 1.0, -2.0), domain_error);
}

TEST_CASE("default parameter block is self-consistent") {
    PhysParams p;
    p.validate();
    // c_log/(3 lambda0) = 1/pi wires the running coupling to g = pi at kappa_ref
    CHECK(3.0 * p.lambda0 == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(bare_coupling(p.lambda0, running_bare_mass(p.m_sq, p.c_log, p.kappa_ref,
                                                     p.kappa_ref)) ==
          doctest::Approx(kPi).epsilon(1e-15));

    PhysParams r = p.with_running();
    CHECK(r.m0_sq == doctest::Approx(1.0 - std::log(100.0)).epsilon(1e-15));
    // everything else untouched
    CHECK(r.lambda0 == p.lambda0);
    CHECK(r.kappa == p.kappa);

    PhysParams bad = p;
    bad.mu = 0.0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    bad = p;
    bad.kappa = -1.0;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    bad = p;
    bad.m0_sq = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("relativistic dispersion") {
    CHECK(dispersion_rel(0.0, 2.0, 3.0) == doctest::Approx(18.0).epsilon(1e-15));
    CHECK(dispersion_rel(5.0, 0.0, 2.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(dispersion_rel(3.0, 4.0, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
    // no overflow for arguments whose squares would overflow
    const double big = 1e200;
    CHECK(dispersion_rel(big, 1.0, 1.0) == doctest::Approx(big).epsilon(1e-12));
    // monotone in |p|
    CHECK(dispersion_rel(2.0, 1.0, 1.0) > dispersion_rel(1.0, 1.0, 1.0));

    CHECK_THROWS_AS(dispersion_rel(1.0, -1.0, 1.0), domain_error);
    CHECK_THROWS_AS(dispersion_rel(1.0, 1.0, 0.0), domain_error);
}

TEST_CASE("expansion remainder matches direct subtraction at moderate c") {
    // c small enough that the naive difference still has ~9 good digits
    for (double c : {1.5, 2.0, 3.0}) {
        for (double p : {0.3, 1.0, 2.0}) {
            const double m = 1.25;
            const double direct =
                dispersion_rel(p, m, c) - m * c * c - p * p / (2.0 * m);
            CHECK(nr_expansion_remainder(p, m, c) ==
                  doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("expansion remainder leading order and scaling") {
    // remainder -> -p^4/(8 m^3 c^2) as c grows
    const double r100 = nr_expansion_remainder(1.0, 1.0, 100.0);
    CHECK(r100 < 0.0);
    CHECK(r100 / (-1.0 / (8.0 * 100.0 * 100.0)) == doctest::Approx(1.0).epsilon(1e-4));
    // doubling c quarters the remainder (up to the next order in 1/c^2)
    const double r200 = nr_expansion_remainder(1.0, 1.0, 200.0);
    CHECK(r200 / r100 == doctest::Approx(0.25).epsilon(1e-4));
    // exact at p = 0
    CHECK(nr_expansion_remainder(0.0, 1.0, 10.0) == 0.0);

    CHECK_THROWS_AS(nr_expansion_remainder(1.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(nr_expansion_remainder(1.0, 1.0, -1.0), domain_error);
}
