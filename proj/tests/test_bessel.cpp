#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "contact2d/bessel.hpp"
#include "contact2d/errors.hpp"

using namespace contact2d;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Row {
    double x, j0, j1, y0, y1, i0, i1, k0, k1;
};

// Reference values computed with 50-digit arithmetic (mpmath), rounded to the
// nearest double. Arguments straddle every internal regime switch.
const Row kTable[] = {
    {0.1, 0.99750156206604003, 0.049937526036241998, -1.5342386513503668,
     -6.4589510947020270, 1.0025015629340956, 0.050062526047092692,
     2.4270690247020166, 9.8538447808706061},
    {0.5, 0.93846980724081290, 0.24226845767487389, -0.44451873350670656,
     -1.4714723926702431, 1.0634833707413235, 0.25789430539089632,
     0.92441907122766586, 1.6564411200033009},
    {1.0, 0.76519768655796655, 0.44005058574493352, 0.088256964215676958,
     -0.78121282130028872, 1.2660658777520083, 0.56515910399248503,
     0.42102443824070833, 0.60190723019723457},
    {1.9, 0.28181855937438547, 0.58115707271343407, 0.49681997128382021,
     -0.16440577233159526, 2.1277401940538879, 1.4482443730548890,
     0.12884597927604748, 0.15966015303266761},
    {2.0, 0.22389077914123567, 0.57672480775687339, 0.51037567264974512,
     -0.10703243154093755, 2.2795853023360673, 1.5906368546373291,
     0.11389387274953344, 0.13986588181652243},
    {2.5, -0.048383776468197996, 0.49709410246427404, 0.49807035961523189,
     0.14591813796678580, 3.2898391440501230, 2.5167162452886984,
     0.062347553200366186, 0.073890816347747064},
    {3.0, -0.26005195490193344, 0.33905895852593646, 0.37685001001279038,
     0.32467442479179998, 4.8807925858650241, 3.9533702174026094,
     0.034739504386279248, 0.040156431128194184},
    {5.0, -0.17759677131433830, -0.32757913759146522, -0.30851762524903378,
     0.14786314339122684, 27.239871823604447, 24.335642142450527,
     0.0036910983340425943, 0.0040446134454521642},
    {8.0, 0.17165080713755391, 0.23463634685391462, 0.22352148938756622,
     -0.15806046173124749, 427.56411572180479, 399.87313678256010,
     0.00014647070522281539, 0.00015536921180500113},
    {10.0, -0.24593576445134834, 0.043472746168861437, 0.055671167283599391,
     0.24901542420695388, 2815.7166284662545, 2670.9883037012547,
     1.7780062316167652e-5, 1.8648773453825585e-5},
    {12.0, 0.047689310796833537, -0.22344710449062761, -0.22523731263436143,
     -0.057099218260896521, 18948.925349296309, 18141.348781638832,
     2.2008253973114914e-6, 2.2907574647671878e-6},
    {13.0, 0.20692610237706781, -0.070318052121778371, -0.078207864527875911,
     -0.21008140842069351, 49444.489582217573, 47502.987358995861,
     7.7845438614204963e-7, 8.0785884122023473e-7},
    {13.9, 0.18357985545786967, 0.11652489036905633, 0.10985918945952650,
     -0.17975095106954834, 117531.39845520615, 113221.41207279277,
     3.0625607006434672e-7, 3.1708719392817852e-7},
    {14.0, 0.17107347611045866, 0.13337515469879325, 0.12719256858218369,
     -0.16664484185617227, 129418.56270064856, 124707.25914906986,
     2.7613708239816199e-7, 2.8583436534402497e-7},
    {15.0, -0.014224472826780773, 0.20510403861352276, 0.20546429603891826,
     0.021073628036873512, 339649.37329791388, 328124.92197020640,
     9.8195364823964345e-8, 1.0141729369762092e-7},
    {20.0, 0.16702466434058315, 0.066833124175850046, 0.062640596809383831,
     -0.16551161436252130, 43558282.559553533, 42454973.385127770,
     5.7412378153365243e-10, 5.8830579695570382e-10},
    {30.0, -0.086367983581040211, -0.11875106261662294, -0.11729573168666403,
     0.084425570661747235, 781672297823.97749, 768532038938.95700,
     2.1324774964630564e-14, 2.1677320018915494e-14},
    {50.0, 0.055812327669251815, -0.097511828125175138, -0.098064995470077079,
     -0.056795668562014768, 2.9325537838493363e+20, 2.9030785901035568e+20,
     3.4101677497894955e-23, 3.4441022267175556e-23},
};

// plain relative comparison; doctest's Approx mixes in a +1 absolute floor
// that would swallow the tiny K values in the table
void check_rel(double got, double want, double tol) {
    CHECK(std::fabs(got / want - 1.0) <= tol);
}

}  // namespace

TEST_CASE("oscillatory family against reference table") {
    for (const Row& r : kTable) {
        INFO("x = ", r.x);
        // J/Y oscillate; near a zero the relative error degrades, so compare
        // against the envelope-scaled absolute error as well.
        const double env = 1e-11 * std::sqrt(2.0 / (kPi * r.x));
        CHECK(std::fabs(bessel_j0(r.x) - r.j0) <= 1e-12 * std::fabs(r.j0) + env);
        CHECK(std::fabs(bessel_j1(r.x) - r.j1) <= 1e-12 * std::fabs(r.j1) + env);
        CHECK(std::fabs(bessel_y0(r.x) - r.y0) <= 1e-12 * std::fabs(r.y0) + env);
        CHECK(std::fabs(bessel_y1(r.x) - r.y1) <= 1e-12 * std::fabs(r.y1) + env);
    }
}

TEST_CASE("monotone family against reference table") {
    for (const Row& r : kTable) {
        INFO("x = ", r.x);
        check_rel(bessel_i0(r.x), r.i0, 1e-12);
        check_rel(bessel_i1(r.x), r.i1, 1e-12);
        check_rel(bessel_k0(r.x), r.k0, 1e-12);
        check_rel(bessel_k1(r.x), r.k1, 1e-12);
    }
}

TEST_CASE("small-argument limits") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i1(0.0) == 0.0);
    // J1(x)/x -> 1/2, I1(x)/x -> 1/2
    CHECK(bessel_j1(1e-8) / 1e-8 == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(bessel_i1(1e-8) / 1e-8 == doctest::Approx(0.5).epsilon(1e-10));
    // K0 ~ -ln(x/2) - gamma
    const double gamma = 0.57721566490153286;
    CHECK(bessel_k0(1e-10) ==
          doctest::Approx(-std::log(0.5e-10) - gamma).epsilon(1e-12));
    // the whole family is restricted to the radial half-line
    CHECK_THROWS_AS(bessel_j0(-2.5), domain_error);
    CHECK_THROWS_AS(bessel_j1(-2.5), domain_error);
    CHECK_THROWS_AS(bessel_i0(-3.0), domain_error);
    CHECK_THROWS_AS(bessel_i1(-3.0), domain_error);
}

TEST_CASE("cross-family Wronskians") {
    // J1 Y0 - J0 Y1 = 2/(pi x);  I0 K1 + I1 K0 = 1/x
    for (double x : {0.05, 0.3, 1.0, 2.7, 6.0, 11.0, 14.5, 25.0, 40.0}) {
        INFO("x = ", x);
        const double wjy =
            bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x);
        check_rel(wjy, 2.0 / (kPi * x), 1e-10);
        const double wik =
            bessel_i0(x) * bessel_k1(x) + bessel_i1(x) * bessel_k0(x);
        check_rel(wik, 1.0 / x, 1e-10);
    }
}

TEST_CASE("zeros of J0") {
    // first few zeros to full precision
    CHECK(bessel_j0_zero(1) == doctest::Approx(2.4048255576957728).epsilon(1e-13));
    CHECK(bessel_j0_zero(2) == doctest::Approx(5.5200781102863106).epsilon(1e-13));
    CHECK(bessel_j0_zero(3) == doctest::Approx(8.6537279129110122).epsilon(1e-13));
    CHECK(bessel_j0_zero(5) == doctest::Approx(14.930917708487786).epsilon(1e-13));
    CHECK(bessel_j0_zero(20) == doctest::Approx(62.048469190227170).epsilon(1e-13));
    // each is an actual root
    for (int m = 1; m <= 25; ++m) {
        const double z = bessel_j0_zero(m);
        CHECK(std::fabs(bessel_j0(z)) < 1e-12);
    }
    // counting function is consistent with the zeros themselves
    for (int m = 1; m <= 25; ++m) {
        const double z = bessel_j0_zero(m);
        CHECK(count_j0_zeros_below(z * (1.0 - 1e-12)) == m - 1);
        CHECK(count_j0_zeros_below(z * (1.0 + 1e-12)) == m);
    }
    CHECK(count_j0_zeros_below(0.0) == 0);
    CHECK(count_j0_zeros_below(2.4) == 0);
    CHECK(count_j0_zeros_below(100.0) == 32);

    CHECK_THROWS_AS(bessel_j0_zero(0), domain_error);
}

TEST_CASE("domain errors for the singular family") {
    CHECK_THROWS_AS(bessel_y0(0.0), domain_error);
    CHECK_THROWS_AS(bessel_y1(-1.0), domain_error);
    CHECK_THROWS_AS(bessel_k0(0.0), domain_error);
    CHECK_THROWS_AS(bessel_k1(-0.5), domain_error);
}
