#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace contact2d {

struct HubbardLattice {
    int dim = 1;  // 1 or 2
    int L = 2;    // sites per side
    bool periodic = true;

    int sites() const;
    std::vector<std::pair<int, int>> edges() const;  // undirected, deduplicated
    void validate() const;
};

// Occupation-number basis of the n-particle sector, lexicographically ascending.
struct FockBasis {
    int n = 0;
    int sites = 0;
    std::size_t dim_basis = 0;
    std::vector<std::uint8_t> occ;  // flattened, dim_basis * sites

    const std::uint8_t* state(std::size_t i) const { return occ.data() + i * sites; }
    std::size_t index_of(const std::uint8_t* s) const;  // binary search
};

FockBasis build_basis(int n, int sites, std::size_t cap = 500000);

struct EDOptions {
    double tol = 1e-8;        // residual ||Hv - E v||
    int krylov = 80;          // inner Lanczos steps per restart
    int max_restarts = 400;
    std::uint64_t seed = 0;
    std::size_t basis_cap = 500000;
};

struct EDResult {
    double E0 = 0.0;
    double residual = 0.0;
    int iterations = 0;  // Hamiltonian applications
    int n = 0;
    int sites = 0;
    double t = 0.0;
    double U = 0.0;
    std::size_t dim_basis = 0;
};

// Ground energy of H = -t sum_<ij> (b_i^+ b_j + h.c.) + (U/2) sum_i n_i(n_i-1)
// restricted to the n-particle sector; matrix-free, seeded, deterministic.
EDResult ground_energy(int n, const HubbardLattice& lat, double t, double U,
                       const EDOptions& opts = {});

// Mapping of the continuum contact model onto the Hubbard parameters.
double hubbard_hopping(double m, double eps);            // t = 1/(2 m eps^2)
double hubbard_onsite(double g0, double eps, int dim);   // U = g0 / eps^dim

struct StabilityRow {
    int n;
    std::size_t dim_basis;
    double energy;
    double per_particle;
    double residual;
    int iterations;
};

struct StabilityReport {
    std::vector<StabilityRow> rows;
    std::string verdict;  // "STABLE" or "UNSTABLE-SIGNATURE"
};

// Collapse-trend probe: verdict UNSTABLE-SIGNATURE iff E_n/n is strictly
// decreasing across the scan.
StabilityReport stability_scan(const std::vector<int>& ns, const HubbardLattice& lat,
                               double t, double U, const EDOptions& opts = {});

struct TgExcitation {
    double dE;               // enumerated excitation energy
    double p;                // 2 pi j / L
    double k_fermi;          // pi (N-1) / L
    double identity;         // p^2 + 2 k_F p (exact)
    double thermo;           // p^2 + 2 pi rho p, rho = N/L
    double finite_size_dev;  // dE - thermo = -2 pi rho p / N
};

// Hard-core bosons on a ring map to free fermions; promote the Fermi-edge mode by j.
TgExcitation tg_excitation(int N, double L, int j, int j_max = 1000000);

}  // namespace contact2d
