#pragma once

#include <complex>
#include <variant>

namespace contact2d {

struct SharpCutoff {
    double kappa;
};
struct SquareWell {
    double eps;
};
struct Lattice {
    double eps;
};
using RegScheme = std::variant<SharpCutoff, SquareWell, Lattice>;

// kappa = pi/eps identification between the scheme tags
double scheme_cutoff(const RegScheme& s);

// Renormalized description: cutoff-independent coupling at scale mu.
struct Renormalized {
    double g;
    double mu;
};

enum class LoopGeometry { disk, disk_asymptotic, square };

struct ComplexAmplitude {
    std::complex<double> value;
    double k;  // on-shell momentum
    // imag(T) + |T|^2/2, zero on shell at mass 1
    double unitarity_defect() const;
};

struct BoundState {
    double B = 0.0;
    std::variant<RegScheme, Renormalized> scheme;
    double residual = 0.0;
    bool nonpositive_g = false;  // flagged when computed outside g > 0
};

// I(z, kappa) = int d^2p/(2pi)^2 / (p^2 + z) over |p| <= kappa (disk),
// |p_i| <= kappa (square), or the large-kappa asymptotic form.
std::complex<double> loop_integral_I(std::complex<double> z, double kappa,
                                     LoopGeometry geom = LoopGeometry::disk);
// boundary value z = -k^2 - i0 (principal branch; imag part i/4 for k < kappa)
std::complex<double> loop_integral_on_shell(double k, double kappa,
                                            LoopGeometry geom = LoopGeometry::disk);

// T = [1/g0 + 2m I(-k^2 - i0, kappa)]^-1
ComplexAmplitude t_amplitude_bare(double k, double g0, double kappa, double m,
                                  LoopGeometry geom = LoopGeometry::disk);

// 1/g = 1/g0 + (1/pi) ln(kappa/mu); +inf sentinel when 1/g vanishes (unitary limit)
double renormalized_coupling(double g0, double kappa, double mu);

// T = [1/g - (1/pi) ln(k/mu) + i/2]^-1
ComplexAmplitude t_amplitude_renormalized(double k, double g, double mu);

// cot(delta0) = (2/pi) ln(k/mu) - 2/g, branch delta0 in (0, pi)
double s_wave_phase_shift(double k, double g, double mu);

// B = mu^2 e^{2pi/g} / 2; g <= 0 flagged, not rejected
BoundState bound_state_energy(double g, double mu);

// T expressed through the pole position: [(1/2pi) ln(2B/k^2) + i/2]^-1
ComplexAmplitude t_amplitude_from_binding(double k, double B);

// f(theta) = -(2 pi k)^{-1/2} T, independent of theta
std::complex<double> angular_amplitude(double k, const ComplexAmplitude& T);

// Bound state of the bare cutoff model: root of 1/g0 + 2m I(2mB) = 0, g0 < 0.
BoundState cutoff_bound_state(double g0, double kappa, double m,
                              LoopGeometry geom = LoopGeometry::disk);

}  // namespace contact2d
