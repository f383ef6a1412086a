#include "qcf/rootfind.hpp"

#include <cmath>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

double find_root(const std::function<double(double)>& f, Interval bracket, double tol) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoBracketError("find_root: no sign change on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");

    // 200 iterations is far beyond what bisection needs to reach any
    // realistic tolerance from a unit-scale bracket.
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double x = mid;
        if (fhi != flo) {
            double secant = (lo * fhi - hi * flo) / (fhi - flo);
            if (secant > lo + 0.01 * (hi - lo) && secant < hi - 0.01 * (hi - lo))
                x = secant;
        }
        double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qcf
