#include "qcf/potential.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

double LennardJones::phi_impl(double r) const {
    double r6 = std::pow(r, -6.0);
    return r6 * r6 - 2.0 * r6;
}

double LennardJones::eta_impl(double r) const {
    return -12.0 * std::pow(r, -13.0) + 12.0 * std::pow(r, -7.0);
}

double LennardJones::eta_prime_impl(double r) const {
    return 156.0 * std::pow(r, -14.0) - 84.0 * std::pow(r, -8.0);
}

double LennardJones::eta_double_prime_impl(double r) const {
    return -2184.0 * std::pow(r, -15.0) + 672.0 * std::pow(r, -9.0);
}

namespace {

constexpr double kRootTol = 1e-12;
constexpr double kResidualTol = 1e-10;
// Assumption sampling window. The analysis never evaluates the potential
// outside it; behavior beyond is deliberately unchecked.
constexpr double kSampleLo = 0.3;
constexpr double kSampleHi = 3.0;
constexpr int kSamplesPerInterval = 100;

void require(bool ok, const std::string& what) {
    if (!ok) throw OrderingViolatedError("critical_radii: " + what);
}

// Checks sign(f) == sign_left on (lo, split) and == -sign_left on
// (split, hi), sampling strictly inside each subinterval.
void check_sign_change(const std::function<double(double)>& f, double lo, double split,
                       double hi, int sign_left, const std::string& name) {
    auto probe = [&](double a, double b, int expected) {
        for (int k = 0; k < kSamplesPerInterval; ++k) {
            double x = a + (k + 0.5) / kSamplesPerInterval * (b - a);
            double v = f(x);
            if (expected > 0 ? !(v > 0.0) : !(v < 0.0))
                throw OrderingViolatedError("critical_radii: " + name +
                                            " has wrong sign at r = " + std::to_string(x));
        }
    };
    probe(lo, split, sign_left);
    probe(split, hi, -sign_left);
}

}  // namespace

CriticalRadii critical_radii(const PairPotential& p, const RadiiBrackets& hints) {
    CriticalRadii radii{};
    radii.r1_tilde = find_root([&](double r) { return p.eta_prime(r); }, hints.r1_tilde, kRootTol);
    radii.r2_tilde =
        find_root([&](double r) { return p.eta_double_prime(r); }, hints.r2_tilde, kRootTol);
    radii.a0 = find_root([&](double r) { return p.eta_hat(r); }, hints.a0, kRootTol);
    radii.a1 = find_root([&](double r) { return p.eta_hat_prime(r); }, hints.a1, kRootTol);

    require(std::abs(p.eta_prime(radii.r1_tilde)) <= kResidualTol, "eta' residual at r1_tilde");
    require(std::abs(p.eta_double_prime(radii.r2_tilde)) <= kResidualTol,
            "eta'' residual at r2_tilde");
    require(std::abs(p.eta_hat(radii.a0)) <= kResidualTol, "eta_hat residual at a0");
    require(std::abs(p.eta_hat_prime(radii.a1)) <= kResidualTol, "eta_hat' residual at a1");

    require(radii.a0 > 0.0, "a0 must be positive");
    require(radii.a0 < radii.r1_tilde, "a0 < r1_tilde");
    require(radii.r1_tilde < radii.r2_tilde, "r1_tilde < r2_tilde");
    require(radii.r2_tilde < 2.0 * radii.a0, "r2_tilde < 2 a0");
    require(radii.a0 < radii.a1, "a0 < a1");

    check_sign_change([&](double r) { return p.eta_prime(r); }, kSampleLo, radii.r1_tilde,
                      kSampleHi, +1, "eta'");
    check_sign_change([&](double r) { return p.eta_double_prime(r); }, kSampleLo, radii.r2_tilde,
                      kSampleHi, -1, "eta''");
    check_sign_change([&](double r) { return p.eta_hat(r); }, kSampleLo, radii.a0, kSampleHi, -1,
                      "eta_hat");
    check_sign_change([&](double r) { return p.eta_hat_prime(r); }, kSampleLo, radii.a1, kSampleHi,
                      +1, "eta_hat'");

    return radii;
}

double zero_load_spacing(const PairPotential& p, Interval hint) {
    return find_root([&](double r) { return p.eta_hat(r); }, hint, kRootTol);
}

}  // namespace qcf
