#include "contact2d/fewbody.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "contact2d/errors.hpp"

namespace contact2d {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double binomial_approx(int a, int b) {
    return std::exp(std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0));
}

std::size_t binomial_exact(int a, int b) {
    // safe here: callers pre-screen against the cap, so the value fits easily
    unsigned long long r = 1;
    b = std::min(b, a - b);
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return (std::size_t)r;
}

// Symmetric tridiagonal eigensolver (implicit QL with Wilkinson shifts), d/e in
// place, z accumulates eigenvectors; EISPACK tql2 lineage.
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int m) {
    for (int i = 1; i < m; ++i) e[i - 1] = e[i];
    e[m - 1] = 0.0;
    for (int l = 0; l < m; ++l) {
        int iter = 0;
        int mm;
        do {
            for (mm = l; mm < m - 1; ++mm) {
                const double dd = std::fabs(d[mm]) + std::fabs(d[mm + 1]);
                if (std::fabs(e[mm]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (mm != l) {
                if (++iter > 50) throw solver_error("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[mm] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = mm - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[mm] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < m; ++k) {
                        f = z[k * m + i + 1];
                        z[k * m + i + 1] = s * z[k * m + i] + c * f;
                        z[k * m + i] = c * z[k * m + i] - s * f;
                    }
                }
                if (r == 0.0 && mm - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[mm] = 0.0;
            }
        } while (mm != l);
    }
}

struct Hamiltonian {
    const FockBasis& basis;
    std::vector<std::pair<int, int>> edges;
    double t, U;
    std::vector<double> diag;

    Hamiltonian(const FockBasis& b, const HubbardLattice& lat, double t_, double U_)
        : basis(b), edges(lat.edges()), t(t_), U(U_) {
        diag.resize(basis.dim_basis);
        for (std::size_t i = 0; i < basis.dim_basis; ++i) {
            const std::uint8_t* s = basis.state(i);
            double d = 0.0;
            for (int j = 0; j < basis.sites; ++j) d += (double)s[j] * (s[j] - 1);
            diag[i] = 0.5 * U * d;
        }
    }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const std::size_t dim = basis.dim_basis;
        const int sites = basis.sites;
        for (std::size_t i = 0; i < dim; ++i) y[i] = diag[i] * x[i];
        std::vector<std::uint8_t> tmp(sites);
        for (std::size_t i = 0; i < dim; ++i) {
            const double xi = x[i];
            if (xi == 0.0) continue;
            const std::uint8_t* s = basis.state(i);
            for (const auto& [a, b] : edges) {
                // hop a -> b and b -> a; amplitude -t sqrt(n_src (n_dst + 1))
                if (s[a] > 0) {
                    std::memcpy(tmp.data(), s, sites);
                    tmp[a]--;
                    tmp[b]++;
                    const std::size_t j = basis.index_of(tmp.data());
                    y[j] -= t * std::sqrt((double)s[a] * (s[b] + 1)) * xi;
                }
                if (s[b] > 0) {
                    std::memcpy(tmp.data(), s, sites);
                    tmp[b]--;
                    tmp[a]++;
                    const std::size_t j = basis.index_of(tmp.data());
                    y[j] -= t * std::sqrt((double)s[b] * (s[a] + 1)) * xi;
                }
            }
        }
    }
};

double nrm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

int HubbardLattice::sites() const {
    int s = 1;
    for (int i = 0; i < dim; ++i) s *= L;
    return s;
}

void HubbardLattice::validate() const {
    if (dim != 1 && dim != 2) throw domain_error("lattice dim must be 1 or 2");
    if (L < 2) throw domain_error("lattice needs L >= 2 sites per side");
}

std::vector<std::pair<int, int>> HubbardLattice::edges() const {
    validate();
    std::vector<std::pair<int, int>> e;
    if (dim == 1) {
        for (int i = 0; i + 1 < L; ++i) e.emplace_back(i, i + 1);
        if (periodic && L > 2) e.emplace_back(L - 1, 0);
    } else {
        auto id = [&](int r, int c) { return r * L + c; };
        for (int r = 0; r < L; ++r)
            for (int c = 0; c < L; ++c) {
                if (c + 1 < L) e.emplace_back(id(r, c), id(r, c + 1));
                if (r + 1 < L) e.emplace_back(id(r, c), id(r + 1, c));
                if (periodic && L > 2) {
                    if (c == L - 1) e.emplace_back(id(r, c), id(r, 0));
                    if (r == L - 1) e.emplace_back(id(r, c), id(0, c));
                }
            }
    }
    return e;
}

std::size_t FockBasis::index_of(const std::uint8_t* s) const {
    std::size_t lo = 0, hi = dim_basis;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const int c = std::memcmp(state(mid), s, sites);
        if (c < 0)
            lo = mid + 1;
        else if (c > 0)
            hi = mid;
        else
            return mid;
    }
    throw solver_error("occupation state not found in basis (particle number broken?)");
}

FockBasis build_basis(int n, int sites, std::size_t cap) {
    if (n < 1) throw domain_error("particle number must be >= 1");
    if (n > 255) throw domain_error("particle number must fit one site counter (<= 255)");
    if (sites < 2) throw domain_error("need at least 2 sites");
    if (binomial_approx(n + sites - 1, n) > 1.5 * (double)cap + 16.0)
        throw domain_error("basis dimension " +
                           std::to_string((unsigned long long)binomial_approx(n + sites - 1, n)) +
                           " exceeds cap " + std::to_string(cap) + "; raise basis_cap");
    const std::size_t dim = binomial_exact(n + sites - 1, n);
    if (dim > cap)
        throw domain_error("basis dimension " + std::to_string(dim) + " exceeds cap " +
                           std::to_string(cap) + "; raise basis_cap");

    FockBasis basis;
    basis.n = n;
    basis.sites = sites;
    basis.dim_basis = dim;
    basis.occ.reserve(dim * sites);
    // lexicographically ascending compositions of n into `sites` parts
    std::vector<std::uint8_t> cur(sites, 0);
    auto emit = [&](auto&& self, int pos, int left) -> void {
        if (pos == sites - 1) {
            cur[pos] = (std::uint8_t)left;
            basis.occ.insert(basis.occ.end(), cur.begin(), cur.end());
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = (std::uint8_t)v;
            self(self, pos + 1, left - v);
        }
    };
    emit(emit, 0, n);
    return basis;
}

double hubbard_hopping(double m, double eps) {
    if (!(m > 0.0) || !(eps > 0.0)) throw domain_error("hopping map needs m > 0, eps > 0");
    return 1.0 / (2.0 * m * eps * eps);
}

double hubbard_onsite(double g0, double eps, int dim) {
    if (!(eps > 0.0)) throw domain_error("onsite map needs eps > 0");
    if (dim != 1 && dim != 2) throw domain_error("onsite map needs dim 1 or 2");
    return g0 / std::pow(eps, dim);
}

EDResult ground_energy(int n, const HubbardLattice& lat, double t, double U,
                       const EDOptions& opts) {
    lat.validate();
    if (!(t > 0.0)) throw domain_error("hopping t must be > 0");
    if (!(opts.tol > 0.0)) throw domain_error("tolerance must be > 0");
    const FockBasis basis = build_basis(n, lat.sites(), opts.basis_cap);
    const Hamiltonian H(basis, lat, t, U);
    const std::size_t dim = basis.dim_basis;

    EDResult res;
    res.n = n;
    res.sites = basis.sites;
    res.t = t;
    res.U = U;
    res.dim_basis = dim;

    std::mt19937_64 rng(opts.seed);
    std::vector<double> v0(dim);
    for (auto& x : v0) x = std::ldexp((double)(rng() >> 11), -53) - 0.5;
    {
        const double nv = nrm2(v0);
        for (auto& x : v0) x /= nv;
    }

    const int m_max = (int)std::min<std::size_t>(opts.krylov, dim);
    std::vector<double> alpha(m_max), beta(m_max);
    std::vector<double> v_prev(dim), v_cur(dim), w(dim), ritz(dim);
    double best_theta = 0.0, best_res = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < opts.max_restarts; ++restart) {
        // pass 1: tridiagonalize from v0
        std::fill(v_prev.begin(), v_prev.end(), 0.0);
        v_cur = v0;
        int m = m_max;
        for (int j = 0; j < m_max; ++j) {
            H.apply(v_cur, w);
            ++res.iterations;
            alpha[j] = dot(w, v_cur);
            for (std::size_t i = 0; i < dim; ++i)
                w[i] -= alpha[j] * v_cur[i] + (j ? beta[j - 1] * v_prev[i] : 0.0);
            const double b = nrm2(w);
            beta[j] = b;
            if (b < 1e-13 * (1.0 + std::fabs(alpha[j]))) {
                m = j + 1;  // invariant subspace reached
                break;
            }
            if (j + 1 < m_max) {
                v_prev.swap(v_cur);
                for (std::size_t i = 0; i < dim; ++i) v_cur[i] = w[i] / b;
            }
        }
        // smallest Ritz pair of the tridiagonal
        std::vector<double> d(alpha.begin(), alpha.begin() + m);
        std::vector<double> e(m, 0.0);
        for (int i = 1; i < m; ++i) e[i] = beta[i - 1];
        std::vector<double> z(m * m, 0.0);
        for (int i = 0; i < m; ++i) z[i * m + i] = 1.0;
        tql2(d, e, z, m);
        int idx = 0;
        for (int i = 1; i < m; ++i)
            if (d[i] < d[idx]) idx = i;
        const double theta = d[idx];

        // pass 2: rebuild the Krylov vectors, accumulate the Ritz vector
        std::fill(ritz.begin(), ritz.end(), 0.0);
        std::fill(v_prev.begin(), v_prev.end(), 0.0);
        v_cur = v0;
        for (int j = 0; j < m; ++j) {
            const double zj = z[j * m + idx];
            for (std::size_t i = 0; i < dim; ++i) ritz[i] += zj * v_cur[i];
            if (j + 1 == m) break;
            H.apply(v_cur, w);
            ++res.iterations;
            for (std::size_t i = 0; i < dim; ++i)
                w[i] -= alpha[j] * v_cur[i] + (j ? beta[j - 1] * v_prev[i] : 0.0);
            v_prev.swap(v_cur);
            for (std::size_t i = 0; i < dim; ++i) v_cur[i] = w[i] / beta[j];
        }
        const double rn = nrm2(ritz);
        for (auto& x : ritz) x /= rn;
        H.apply(ritz, w);
        ++res.iterations;
        double resid = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double r = w[i] - theta * ritz[i];
            resid += r * r;
        }
        resid = std::sqrt(resid);
        if (resid < best_res) {
            best_res = resid;
            best_theta = theta;
        }
        if (resid < opts.tol) {
            res.E0 = theta;
            res.residual = resid;
            return res;
        }
        v0 = ritz;  // restart from the best current approximation
    }
    throw solver_error("eigensolver did not converge: best estimate E0 = " +
                       std::to_string(best_theta) + ", residual = " +
                       std::to_string(best_res));
}

StabilityReport stability_scan(const std::vector<int>& ns, const HubbardLattice& lat,
                               double t, double U, const EDOptions& opts) {
    if (ns.empty()) throw domain_error("stability scan needs a non-empty n list");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw domain_error("n list must be strictly increasing");

    StabilityReport rep;
    for (int n : ns) {
        const EDResult r = ground_energy(n, lat, t, U, opts);
        rep.rows.push_back({n, r.dim_basis, r.E0, r.E0 / n, r.residual, r.iterations});
    }
    // margin well above solver tolerance so U = 0 noise cannot fake a trend
    bool strictly_decreasing = rep.rows.size() >= 2;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const double prev = rep.rows[i - 1].per_particle;
        if (!(rep.rows[i].per_particle < prev - 1e-6 * (1.0 + std::fabs(prev))))
            strictly_decreasing = false;
    }
    rep.verdict = strictly_decreasing ? "UNSTABLE-SIGNATURE" : "STABLE";
    return rep;
}

TgExcitation tg_excitation(int N, double L, int j, int j_max) {
    if (N < 1 || N % 2 == 0) throw domain_error("N must be odd (symmetric Fermi sea)");
    if (!(L > 0.0)) throw domain_error("ring length must be > 0");
    if (j < 1 || j > j_max)
        throw domain_error("excitation index j outside enumeration window [1, " +
                           std::to_string(j_max) + "]");
    const int mf = (N - 1) / 2;
    const double unit = 2.0 * kPi / L;
    // literal enumeration of the two occupied momentum sets (2m = 1 units: E = sum k^2)
    double e_ground = 0.0, e_exc = 0.0;
    for (int m = -mf; m <= mf; ++m) e_ground += (unit * m) * (unit * m);
    for (int m = -mf; m <= mf; ++m) {
        const int mm = (m == mf) ? mf + j : m;
        e_exc += (unit * mm) * (unit * mm);
    }
    TgExcitation out;
    out.dE = e_exc - e_ground;
    out.p = unit * j;
    out.k_fermi = kPi * (N - 1) / L;
    out.identity = out.p * out.p + 2.0 * out.k_fermi * out.p;
    const double rho = N / L;
    out.thermo = out.p * out.p + 2.0 * kPi * rho * out.p;
    out.finite_size_dev = out.dE - out.thermo;
    return out;
}

}  // namespace contact2d
