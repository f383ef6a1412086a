#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcf {

/// Dense vector of doubles indexed over a centered integer range
/// [lo, hi], e.g. strains r_{-N}..r_N or repatom forces F_{-N}..F_{N+1}.
/// Keeping the centered indices in the data model avoids the off-by-one
/// bookkeeping that creeps in when everything is renumbered from zero.
class CenteredVector {
public:
    CenteredVector() = default;

    CenteredVector(int lo, int hi, double fill = 0.0)
        : lo_(lo), data_(static_cast<std::size_t>(check_range(lo, hi)), fill) {}

    static CenteredVector from_values(int lo, std::vector<double> values) {
        CenteredVector v;
        v.lo_ = lo;
        v.data_ = std::move(values);
        return v;
    }

    static CenteredVector uniform(int lo, int hi, double value) {
        return CenteredVector(lo, hi, value);
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(data_.size()) - 1; }
    int size() const { return static_cast<int>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double& operator[](int j) { return data_[index(j)]; }
    double operator[](int j) const { return data_[index(j)]; }

    bool contains_index(int j) const { return j >= lo() && j <= hi(); }

    /// Value at j, or `fallback` when j lies outside the stored range.
    double value_or(int j, double fallback) const {
        return contains_index(j) ? data_[static_cast<std::size_t>(j - lo_)] : fallback;
    }

    const std::vector<double>& values() const { return data_; }
    std::vector<double>& values() { return data_; }

    double inf_norm() const {
        double m = 0.0;
        for (double x : data_) {
            double a = x < 0 ? -x : x;
            if (a > m) m = a;
        }
        return m;
    }

    friend bool operator==(const CenteredVector& a, const CenteredVector& b) {
        return a.lo_ == b.lo_ && a.data_ == b.data_;
    }

private:
    static int check_range(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("CenteredVector: hi < lo");
        return hi - lo + 1;
    }

    std::size_t index(int j) const {
        if (!contains_index(j))
            throw std::out_of_range("CenteredVector: index " + std::to_string(j) +
                                    " outside [" + std::to_string(lo()) + ", " +
                                    std::to_string(hi()) + "]");
        return static_cast<std::size_t>(j - lo_);
    }

    int lo_ = 0;
    std::vector<double> data_;
};

inline CenteredVector operator-(const CenteredVector& a, const CenteredVector& b) {
    if (a.lo() != b.lo() || a.size() != b.size())
        throw std::invalid_argument("CenteredVector: range mismatch in subtraction");
    CenteredVector out(a.lo(), a.hi());
    for (int j = a.lo(); j <= a.hi(); ++j) out[j] = a[j] - b[j];
    return out;
}

inline CenteredVector operator+(const CenteredVector& a, const CenteredVector& b) {
    if (a.lo() != b.lo() || a.size() != b.size())
        throw std::invalid_argument("CenteredVector: range mismatch in addition");
    CenteredVector out(a.lo(), a.hi());
    for (int j = a.lo(); j <= a.hi(); ++j) out[j] = a[j] + b[j];
    return out;
}

}  // namespace qcf
