#pragma once

#include <functional>

namespace qcf {

/// Closed interval used as a root bracket.
struct Interval {
    double lo;
    double hi;
};

/// Finds the root of f in [bracket.lo, bracket.hi] to absolute tolerance
/// `tol` on the abscissa. Bisection supplies guaranteed progress; a secant
/// step is tried first at every iteration and kept when it lands strictly
/// inside the current bracket. Throws NoBracketError when f does not
/// change sign over the bracket.
double find_root(const std::function<double(double)>& f, Interval bracket,
                 double tol = 1e-12);

}  // namespace qcf
