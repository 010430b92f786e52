#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3vc {

/// Measure decrements c_1..c_l of the branches of one branching operation,
/// i.e. the recurrence T(k) <= T(k - c_1) + ... + T(k - c_l) + 1.
class branch_vector {
public:
    branch_vector(std::vector<int> decrements) : c_(std::move(decrements))
    {
        if (c_.empty())
            throw std::invalid_argument("branch vector must have at least one branch");
        for (int c : c_)
            if (c < 1)
                throw std::invalid_argument("branch decrements must be positive");
    }

    branch_vector(std::initializer_list<int> decrements) : branch_vector(std::vector<int>(decrements)) {}

    std::span<const int> decrements() const { return c_; }
    std::size_t size() const { return c_.size(); }

    // 1 - sum x^{-c_i}; strictly increasing for x > 0
    double characteristic(double x) const
    {
        double s = 1.0;
        for (int c : c_)
            s -= std::pow(x, -c);
        return s;
    }

private:
    std::vector<int> c_;
};

/// Largest root of 1 - sum x^{-c_i}, by bisection on [1, l + 1].
/// The characteristic is <= 0 at 1 and > 0 at l + 1.
inline double branching_factor(const branch_vector& v, double tol = 1e-9)
{
    if (!(tol > 0))
        throw std::invalid_argument("tolerance must be positive");
    double lo = 1.0, hi = static_cast<double>(v.size()) + 1.0;
    if (std::abs(v.characteristic(lo)) < tol)
        return lo;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double f = v.characteristic(mid);
        if (std::abs(f) < tol && hi - lo < tol)
            return mid;
        (f < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct factor_row {
    std::string step;
    branch_vector branches;
    double quoted;  // value the algorithm's analysis states, 4 decimals
};

/// Worst-case branch vectors of the branching steps of the search.
inline std::vector<factor_row> factor_table()
{
    return {
        {"step 3: dominated vertex, d(v)=3", {1, 2}, 1.6181},
        {"step 4: satellite, d(v)=4", {1, 4, 4, 4, 4}, 1.7485},
        {"step 5: normal vertex, d(v)=4", {1, 4, 5, 5, 5, 5}, 1.6930},
        {"step 6: chain, d(u0)=3", {2, 3, 3, 3}, 1.6717},
        {"step 7: degree-2 vertex next to a triangle", {3, 3, 3, 3, 3}, 1.7100},
        {"step 8: degree-3 vertex at distance 2", {2, 3, 3, 3, 4}, 1.7456},
    };
}

}  // namespace p3vc
