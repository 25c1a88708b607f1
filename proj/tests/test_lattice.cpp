#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <optional>
#include <vector>

#include "contact2d/errors.hpp"
#include "contact2d/lattice.hpp"
#include "contact2d/params.hpp"

using namespace contact2d;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Independent oracle for the zone integral at dim 2, eps = sigma = 1:
//   W(b) = 2/(pi(2+b)) K(k),  k^2 = 4/(2+b)^2,
// with K evaluated by the arithmetic-geometric mean. The complementary modulus
// is formed cancellation-free: k'^2 = b(b+4)/(2+b)^2.
double watson_by_agm(double b) {
    const double kp2 = b * (b + 4.0) / ((2.0 + b) * (2.0 + b));
    double a = 1.0, g = std::sqrt(kp2);
    for (int i = 0; i < 80 && std::fabs(a - g) > 1e-17 * a; ++i) {
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    const double K = kPi / (2.0 * a);
    return 2.0 / (kPi * (2.0 + b)) * K;
}

// brute-force trapezoid for the 1D zone integral (periodic integrand:
// exponentially convergent, so one resolution check suffices)
double green1d_trapezoid(double B, double eps, double sigma, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = -kPi / eps + (2.0 * kPi / eps) * (i + 0.5) / n;
        sum += 1.0 / (sigma * lattice_dispersion({k}, eps) + B);
    }
    return sum / (n * eps);
}

}  // namespace

TEST_CASE("lattice dispersion") {
    CHECK(lattice_dispersion({0.1}, 1.0) ==
          doctest::Approx(0.0049958347219742905).epsilon(1e-14));
    // zone corner: 2/eps^2 per direction
    CHECK(lattice_dispersion({kPi / 0.5, kPi / 0.5}, 0.5) ==
          doctest::Approx(16.0).epsilon(1e-14));
    CHECK(lattice_dispersion({0.0, 0.0}, 1.0) == 0.0);
    // continuum recovery: E = k^2/2 + O(eps^2 k^4)
    const double e = lattice_dispersion({0.5, 0.3}, 0.01);
    CHECK(std::fabs(e - 0.17) < 1e-4 * 0.17);
    // full relative precision near the zone center (regression: 1 - cos form
    // loses half the digits here)
    const double tiny = lattice_dispersion({1e-8}, 1.0);
    CHECK(tiny / 5e-17 == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(lattice_dispersion({3.15}, 1.0),
                         "momentum component outside the Brillouin zone", domain_error);
    CHECK_NOTHROW(lattice_dispersion({kPi * (1.0 + 1e-13)}, 1.0));
    CHECK_THROWS_WITH_AS(lattice_dispersion({}, 1.0),
                         "momentum vector must be non-empty", domain_error);
    CHECK_THROWS_AS(lattice_dispersion({0.1}, 0.0), domain_error);
}

TEST_CASE("zone Green integral, dim 2, against elliptic oracle") {
    const LatticeSpec unitspec{1.0, 2, 1.0};
    // spot values frozen from high-precision quadrature
    const struct {
        double b, w;
    } table[] = {
        {4.0, 0.17161006257729377},    {1.0, 0.38402336967922767},
        {0.25, 0.63247019461341981},   {0.1, 0.79196685346068842},
        {1e-3, 1.5403293216331239},    {1e-6, 2.6400773767130118},
        {1e-10, 4.1059491946037720},
    };
    for (const auto& row : table) {
        INFO("b = ", row.b);
        CHECK(bz_green_integral(row.b, unitspec) ==
              doctest::Approx(row.w).epsilon(2e-11));
        CHECK(bz_green_integral(row.b, unitspec) ==
              doctest::Approx(watson_by_agm(row.b)).epsilon(2e-11));
    }
    // a few more arguments purely against the oracle, straddling the
    // internal quadrature crossover
    for (double b : {12.0, 2.0, 0.6, 0.3, 0.26, 0.24, 0.2, 0.04, 3e-5, 2e-8}) {
        INFO("b = ", b);
        CHECK(bz_green_integral(b, unitspec) ==
              doctest::Approx(watson_by_agm(b)).epsilon(5e-9));
    }
    // logarithmic divergence toward B = 0: slope 1/(2 pi sigma)
    const double s = (bz_green_integral(1e-10, unitspec) -
                      bz_green_integral(1e-6, unitspec)) /
                     std::log(1e4);
    CHECK(s == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(3e-4));
    // sigma scaling: G(B; sigma) = W(B eps^2/sigma)/sigma
    const LatticeSpec half{1.0, 2, 2.0};
    CHECK(bz_green_integral(2.0, half) ==
          doctest::Approx(0.5 * bz_green_integral(1.0, unitspec)).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(bz_green_integral(0.0, unitspec), "B must be > 0",
                         domain_error);
    CHECK_THROWS_AS(bz_green_integral(1.0, LatticeSpec{1.0, 3, 1.0}), domain_error);
    CHECK_THROWS_AS(bz_green_integral(1.0, LatticeSpec{0.0, 2, 1.0}), domain_error);
    CHECK_THROWS_AS(bz_green_integral(1.0, LatticeSpec{1.0, 2, -1.0}), domain_error);
}

TEST_CASE("zone Green integral, dim 1, closed form vs quadrature") {
    for (double B : {0.01, 0.5, 3.0}) {
        for (double eps : {1.0, 0.2}) {
            const LatticeSpec spec{eps, 1, 1.3};
            INFO("B = ", B, ", eps = ", eps);
            CHECK(bz_green_integral(B, spec) ==
                  doctest::Approx(green1d_trapezoid(B, eps, 1.3, 16384)).epsilon(1e-10));
        }
    }
}

TEST_CASE("lattice bound state") {
    const LatticeSpec spec{1.0, 2, 1.0};
    const auto b = lattice_bound_state(-0.5, spec);
    REQUIRE(b.has_value());
    CHECK(b->B / 5.5788477338809889e-5 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b->residual < 1e-10);
    // the defining condition holds to solver precision
    CHECK(std::fabs(0.5 * bz_green_integral(b->B, spec) - 1.0) < 1e-10);
    // deeper attraction binds harder
    CHECK(lattice_bound_state(-0.6, spec)->B > b->B);
    // dim 1 root is algebraic: b(b+2) = g0^2 at eps = sigma = |g0| = 1
    const auto b1 = lattice_bound_state(-1.0, LatticeSpec{1.0, 1, 1.0});
    REQUIRE(b1.has_value());
    CHECK(b1->B == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    // no state without attraction
    CHECK_FALSE(lattice_bound_state(0.0, spec).has_value());
    CHECK_FALSE(lattice_bound_state(2.0, spec).has_value());
}

TEST_CASE("binding exponent tracks the coupling") {
    // ln B vs 1/|g0| has slope -2 pi sigma in the shallow regime
    for (double sigma : {1.0, 2.0}) {
        const LatticeSpec spec{1.0, 2, sigma};
        const double la = std::log(lattice_bound_state(-0.20, spec)->B);
        const double lb = std::log(lattice_bound_state(-0.25, spec)->B);
        const double slope = (la - lb) / (1.0 / 0.20 - 1.0 / 0.25);
        CHECK(slope == doctest::Approx(-2.0 * kPi * sigma).epsilon(1e-6));
    }
}

TEST_CASE("continuum sweep") {
    const LatticeSpec base{1.0, 2, 1.0};
    // frozen coupling: b* = B eps^2 depends only on g0, so B scales as 1/eps^2
    const auto fixed =
        continuum_limit_check(1.0, 1.0, 1.0, kPi / 3.0, {0.5, 0.25}, base, false, -1.0);
    REQUIRE(fixed.size() == 2);
    CHECK(fixed[0].eps == 0.5);
    CHECK(fixed[0].kappa == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(fixed[0].g0 == -1.0);
    CHECK(fixed[1].B / fixed[0].B == doctest::Approx(4.0).epsilon(1e-9));

    // counterterm running re-derives g0 at each cutoff
    const auto run =
        continuum_limit_check(1.0, 1.0, 1.0, kPi / 3.0, {0.5, 0.25}, base, true);
    for (const auto& row : run) {
        const double want =
            bare_coupling(kPi / 3.0, running_bare_mass(1.0, 1.0, kPi / row.eps, 1.0));
        CHECK(row.g0 == doctest::Approx(want).epsilon(1e-14));
        CHECK(row.g0 < 0.0);
    }
    // with running the binding approaches a finite continuum limit instead of
    // following the 1/eps^2 blowup
    CHECK(run[1].B / run[0].B < 2.0);

    CHECK_THROWS_WITH_AS(
        continuum_limit_check(1.0, 1.0, 1.0, 1.0, {}, base, false, -1.0),
        "eps_list must be non-empty", domain_error);
    CHECK_THROWS_WITH_AS(
        continuum_limit_check(1.0, 1.0, 1.0, 1.0, {0.25, 0.5}, base, false, -1.0),
        "eps_list must be positive decreasing", domain_error);
    CHECK_THROWS_AS(
        continuum_limit_check(1.0, 1.0, 1.0, 1.0, {0.5, 0.25}, base, false, 1.0),
        solver_error);
    // running hits repulsive g0 when the cutoff is too low: kappa < e kappa_ref
    CHECK_THROWS_AS(continuum_limit_check(1.0, 1.0, 1.0, kPi / 3.0, {2.0}, base, true),
                    solver_error);
}
