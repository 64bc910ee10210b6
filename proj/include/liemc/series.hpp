#pragma once

#include <vector>

#include "liemc/rational.hpp"

namespace liemc {

// n-th Bernoulli number (first-kind convention, B1 = -1/2), computed from
// the defining recurrence sum_{j<=n} C(n+1,j) B_j = 0 with B_0 = 1.
Rational bernoulli(int n);

// A truncated formal power series sum c_i t^i, used as a function of ad_x.
// The built-in constructors are generated from bernoulli(), never from a
// hard-coded table.
class OperatorSeries {
public:
    explicit OperatorSeries(std::vector<Rational> coefficients);

    // (e^t - 1)/t : c_i = 1/(i+1)!
    static OperatorSeries phi(int order);
    // t/(e^t - 1) : c_i = B_i/i!
    static OperatorSeries todd(int order);
    // t/(1 - e^{-t}) = todd(-t) : c_i = (-1)^i B_i/i!
    static OperatorSeries todd_minus(int order);
    // t/(1 - e^t) = -todd(t)
    static OperatorSeries todd_flip(int order);

    int order() const { return int(coefficients_.size()) - 1; }
    const Rational& at(int i) const { return coefficients_[size_t(i)]; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

private:
    std::vector<Rational> coefficients_;
};

}  // namespace liemc
