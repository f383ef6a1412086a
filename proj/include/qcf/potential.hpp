#pragma once

#include <stdexcept>

#include "qcf/rootfind.hpp"

namespace qcf {

/// Two-body interaction phi(r) between atoms a distance r > 0 apart,
/// together with its first three derivatives. eta = phi' is the bond
/// force, eta' the bond stiffness. Concrete potentials implement the
/// *_impl hooks; the public entry points reject non-positive separations.
///
/// Hatted quantities describe a uniform chain with both nearest and
/// next-nearest neighbors at spacing r:
///   phi_hat(r) = phi(r) + phi(2r)        energy per atom
///   eta_hat(r) = eta(r) + 2 eta(2r)      its derivative
///   eta_hat_prime(r) = eta'(r) + 4 eta'(2r)
class PairPotential {
public:
    virtual ~PairPotential() = default;

    double phi(double r) const { return phi_impl(checked(r)); }
    double eta(double r) const { return eta_impl(checked(r)); }
    double eta_prime(double r) const { return eta_prime_impl(checked(r)); }
    double eta_double_prime(double r) const { return eta_double_prime_impl(checked(r)); }

    double phi_hat(double r) const { return phi(r) + phi(2.0 * r); }
    double eta_hat(double r) const { return eta(r) + 2.0 * eta(2.0 * r); }
    double eta_hat_prime(double r) const { return eta_prime(r) + 4.0 * eta_prime(2.0 * r); }

protected:
    virtual double phi_impl(double r) const = 0;
    virtual double eta_impl(double r) const = 0;
    virtual double eta_prime_impl(double r) const = 0;
    virtual double eta_double_prime_impl(double r) const = 0;

private:
    static double checked(double r) {
        if (!(r > 0.0))
            throw std::domain_error("PairPotential: separation must be positive");
        return r;
    }
};

/// Normalized Lennard-Jones potential phi(r) = r^-12 - 2 r^-6, which has
/// its well of depth 1 at r = 1.
class LennardJones final : public PairPotential {
protected:
    double phi_impl(double r) const override;
    double eta_impl(double r) const override;
    double eta_prime_impl(double r) const override;
    double eta_double_prime_impl(double r) const override;
};

/// The four radii that organize the admissible-strain analysis:
///   r1_tilde  inflection of phi        (eta' = 0)
///   r2_tilde  zero of eta''
///   a0        zero-load spacing        (eta_hat = 0)
///   a1        tensile stability limit  (eta_hat' = 0)
struct CriticalRadii {
    double r1_tilde;
    double r2_tilde;
    double a0;
    double a1;
};

/// Bracket hints for the four critical radii. The defaults contain the
/// Lennard-Jones roots with room to spare while staying monotone.
struct RadiiBrackets {
    Interval r1_tilde{0.9, 1.3};
    Interval r2_tilde{1.0, 1.5};
    Interval a0{0.9, 1.3};
    Interval a1{0.9, 1.3};
};

/// Locates all four critical radii by bracketed root-finding (absolute
/// tolerance 1e-12) and eagerly validates the shape assumptions the
/// downstream analysis relies on:
///   - residuals of the four defining equations at most 1e-10,
///   - ordering 0 < a0 < r1_tilde < r2_tilde < 2 a0 and a0 < a1,
///   - sign patterns of eta', eta'', eta_hat, eta_hat' sampled at 100
///     points per interval over [0.3, 3.0].
/// Throws NoBracketError or OrderingViolatedError on failure.
CriticalRadii critical_radii(const PairPotential& p, const RadiiBrackets& hints = {});

/// Zero-load lattice spacing a0, the root of eta_hat in `hint`.
double zero_load_spacing(const PairPotential& p, Interval hint = {0.9, 1.3});

}  // namespace qcf
