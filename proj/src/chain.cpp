#include "qcf/chain.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

namespace {
constexpr double kResultantTol = 1e-10;
}

ChainGeometry::ChainGeometry(int N, int K, std::vector<int> nu) : N_(N), K_(K), nu_(std::move(nu)) {
    if (K_ < 3) throw std::invalid_argument("ChainGeometry: K must be at least 3");
    if (K_ >= N_ - 1) throw std::invalid_argument("ChainGeometry: requires K < N - 1");
    if (static_cast<int>(nu_.size()) != 2 * N_ + 1)
        throw std::invalid_argument("ChainGeometry: nu must have 2N+1 entries, got " +
                                    std::to_string(nu_.size()));

    long long total = 0;
    for (int j = -N_; j <= N_; ++j) {
        int v = nu_[static_cast<std::size_t>(j + N_)];
        if (v < 1)
            throw std::invalid_argument("ChainGeometry: nu[" + std::to_string(j) +
                                        "] must be positive");
        if (j >= -K_ - 1 && j <= K_ + 1 && v != 1)
            throw std::invalid_argument("ChainGeometry: nu[" + std::to_string(j) +
                                        "] must be 1 inside the interface band");
        total += v;
    }
    if (total % 2 == 0)
        throw std::invalid_argument(
            "ChainGeometry: sum(nu) must be odd so that sum(nu) = 2M+1");
    M_ = static_cast<int>((total - 1) / 2);

    ell_.resize(static_cast<std::size_t>(2 * N_ + 2));
    ell_[0] = -M_;
    for (int j = -N_; j <= N_; ++j)
        ell_[static_cast<std::size_t>(j + N_ + 1)] = ell_[static_cast<std::size_t>(j + N_)] + nu(j);
}

ChainGeometry ChainGeometry::uniform(int N, int K, int coarsening) {
    if (coarsening < 1)
        throw std::invalid_argument("ChainGeometry: coarsening factor must be positive");
    std::vector<int> nu(static_cast<std::size_t>(2 * N + 1), coarsening);
    for (int j = -K - 1; j <= K + 1; ++j)
        if (j >= -N && j <= N) nu[static_cast<std::size_t>(j + N)] = 1;
    return ChainGeometry(N, K, std::move(nu));
}

bool ChainGeometry::all_nu_one() const {
    for (int v : nu_)
        if (v != 1) return false;
    return true;
}

CenteredVector interpolate_positions(const ChainGeometry& g, const CenteredVector& z) {
    const int N = g.N();
    if (z.lo() != -N || z.hi() != N + 1)
        throw std::invalid_argument("interpolate_positions: z must cover -N..N+1");
    for (int j = -N; j <= N; ++j)
        if (!(z[j + 1] > z[j]))
            throw NotIncreasingError("interpolate_positions: z[" + std::to_string(j + 1) +
                                     "] <= z[" + std::to_string(j) + "]");

    CenteredVector y(-g.M(), g.M() + 1);
    for (int j = -N; j <= N; ++j) {
        const double nu = g.nu(j);
        for (int i = 0; i < g.nu(j); ++i)
            y[g.ell(j) + i] = (nu - i) / nu * z[j] + i / nu * z[j + 1];
    }
    y[g.M() + 1] = z[N + 1];
    return y;
}

Load aggregate_loads(const ChainGeometry& g, const CenteredVector& f_tilde) {
    const int N = g.N();
    const int M = g.M();
    if (f_tilde.lo() != -M || f_tilde.hi() != M + 1)
        throw std::invalid_argument("aggregate_loads: f_tilde must cover -M..M+1");

    Load load;
    load.f_tilde = f_tilde;
    load.f = CenteredVector(-N, N + 1);
    for (int j = -N; j <= N + 1; ++j) {
        const int nu_left = g.nu(j - 1);
        const int nu_right = g.nu(j);
        double sum = 0.0;
        for (int i = 0; i <= nu_left; ++i)
            sum += static_cast<double>(nu_left - i) / nu_left * f_tilde.value_or(g.ell(j) - i, 0.0);
        for (int i = 1; i <= nu_right; ++i)
            sum +=
                static_cast<double>(nu_right - i) / nu_right * f_tilde.value_or(g.ell(j) + i, 0.0);
        load.f[j] = sum;
    }

    double resultant = 0.0;
    for (int j = -N; j <= N + 1; ++j) resultant += load.f[j];
    load.resultant = resultant;
    if (std::abs(resultant) > kResultantTol)
        throw ResultantNonzeroError("aggregate_loads: loads do not balance, sum f = " +
                                    std::to_string(resultant));

    load.phi = CenteredVector(-N, N);
    load.phi[-N] = -load.f[-N];
    for (int j = -N + 1; j <= 0; ++j) load.phi[j] = load.phi[j - 1] - load.f[j];
    double paired = 0.0;
    for (int j = 1; j <= N; ++j) {
        paired += load.f[j] + load.f[-j + 1];
        load.phi[j] = load.phi[-j] - paired;
    }
    paired += load.f[N + 1] + load.f[-N];
    load.phi_end = -paired;
    return load;
}

CenteredVector strain_from_positions(const ChainGeometry& g, const CenteredVector& z) {
    const int N = g.N();
    if (z.lo() != -N || z.hi() != N + 1)
        throw std::invalid_argument("strain_from_positions: z must cover -N..N+1");
    CenteredVector r(-N, N);
    for (int j = -N; j <= N; ++j) {
        r[j] = (z[j + 1] - z[j]) / g.nu(j);
        if (!(r[j] > 0.0))
            throw NonPositiveStrainError("strain_from_positions: spacing r[" +
                                         std::to_string(j) + "] is not positive");
    }
    return r;
}

CenteredVector positions_from_strain(const ChainGeometry& g, const CenteredVector& r,
                                     double anchor) {
    check_strain(g, r);
    const int N = g.N();
    CenteredVector z(-N, N + 1);
    z[-N] = anchor;
    for (int j = -N; j <= N; ++j) z[j + 1] = z[j] + g.nu(j) * r[j];
    return z;
}

void check_strain(const ChainGeometry& g, const CenteredVector& r) {
    if (r.lo() != -g.N() || r.hi() != g.N())
        throw std::invalid_argument("strain must cover -N..N");
    for (int j = -g.N(); j <= g.N(); ++j)
        if (!(r[j] > 0.0))
            throw NonPositiveStrainError("strain r[" + std::to_string(j) + "] is not positive");
}

}  // namespace qcf
