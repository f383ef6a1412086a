#pragma once

#include <vector>

#include "qcf/centered_vector.hpp"

namespace qcf {

/// Representative-atom layout of the chain. Repatoms sit at atomistic
/// sites: repatom j = -N..N+1 is atom ell(j), with nu(j) equally spaced
/// atoms between repatoms j and j+1. The 2K central repatoms
/// j = -K+1..K are treated atomistically, the rest as continuum.
///
/// Validity requires K >= 3 and K < N-1 (the interface case analysis
/// needs non-overlapping special rows), nu_j = 1 on j = -K-1..K+1
/// (no coarsening within the interaction cutoff of an atomistic site),
/// and an odd total atom count sum(nu) = 2M+1.
class ChainGeometry {
public:
    ChainGeometry(int N, int K, std::vector<int> nu);

    /// Geometry with nu = coarsening on all intervals where coarsening is
    /// allowed, nu = 1 on the mandatory interface band.
    static ChainGeometry uniform(int N, int K, int coarsening);

    int N() const { return N_; }
    int K() const { return K_; }
    int M() const { return M_; }

    /// Atoms between repatoms j and j+1; 1 outside j = -N..N by convention.
    int nu(int j) const {
        return (j >= -N_ && j <= N_) ? nu_[static_cast<std::size_t>(j + N_)] : 1;
    }

    /// Atom index of repatom j, for j = -N..N+1.
    int ell(int j) const { return ell_[static_cast<std::size_t>(j + N_)]; }

    int repatom_count() const { return 2 * N_ + 2; }
    int atom_count() const { return 2 * M_ + 2; }

    bool all_nu_one() const;

private:
    int N_;
    int K_;
    int M_;
    std::vector<int> nu_;
    std::vector<int> ell_;
};

/// External load data at all three levels: per-atom dead loads f_tilde
/// (indices -M..M+1), aggregated repatom loads f (-N..N+1), and the
/// conjugate potential phi (-N..N) with phi_end = Phi_{N+1}. The implicit
/// boundary value Phi_{-N-1} is zero.
struct Load {
    CenteredVector f_tilde;
    CenteredVector f;
    CenteredVector phi;
    double phi_end = 0.0;
    double resultant = 0.0;
};

/// Linear interpolation of atom positions between repatoms. z must be
/// strictly increasing with indices -N..N+1; the result y has indices
/// -M..M+1 and satisfies y[ell(j)] == z[j] exactly.
CenteredVector interpolate_positions(const ChainGeometry& g, const CenteredVector& z);

/// Aggregates per-atom dead loads onto repatoms with hat-function weights
/// and forms the conjugate potential by prefix sums. Out-of-range f_tilde
/// terms count as zero. Throws ResultantNonzeroError when |sum f| > 1e-10,
/// since the conjugate potential only exists for balanced loads.
///
/// The prefix sums for j > 0 are accumulated as a mirror value plus paired
/// terms (f_m + f_{-m+1}), so an anti-symmetric f yields a bit-for-bit
/// symmetric phi.
Load aggregate_loads(const ChainGeometry& g, const CenteredVector& f_tilde);

/// Per-interval lattice spacings r_j = (z_{j+1} - z_j) / nu_j, j = -N..N.
CenteredVector strain_from_positions(const ChainGeometry& g, const CenteredVector& z);

/// Inverse of strain_from_positions up to translation: z_{-N} = anchor,
/// z_{j+1} = z_j + nu_j r_j.
CenteredVector positions_from_strain(const ChainGeometry& g, const CenteredVector& r,
                                     double anchor);

/// Validates that r covers -N..N with strictly positive entries.
void check_strain(const ChainGeometry& g, const CenteredVector& r);

}  // namespace qcf
