#include "liemc/series.hpp"

#include <stdexcept>

namespace liemc {

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::vector<Rational> b;
    b.reserve(size_t(n) + 1);
    b.push_back(Rational(1));
    for (int m = 1; m <= n; ++m) {
        Rational s(0);
        for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * b[size_t(j)];
        b.push_back(-s / Rational(m + 1));
    }
    return b[size_t(n)];
}

OperatorSeries::OperatorSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("OperatorSeries: empty coefficient list");
}

OperatorSeries OperatorSeries::phi(int order) {
    std::vector<Rational> c;
    c.reserve(size_t(order) + 1);
    for (int i = 0; i <= order; ++i) c.push_back(Rational(1) / factorial(i + 1));
    return OperatorSeries(std::move(c));
}

OperatorSeries OperatorSeries::todd(int order) {
    std::vector<Rational> c;
    c.reserve(size_t(order) + 1);
    for (int i = 0; i <= order; ++i) c.push_back(bernoulli(i) / factorial(i));
    return OperatorSeries(std::move(c));
}

OperatorSeries OperatorSeries::todd_minus(int order) {
    std::vector<Rational> c;
    c.reserve(size_t(order) + 1);
    for (int i = 0; i <= order; ++i) {
        Rational v = bernoulli(i) / factorial(i);
        c.push_back(i % 2 ? -v : v);
    }
    return OperatorSeries(std::move(c));
}

OperatorSeries OperatorSeries::todd_flip(int order) {
    std::vector<Rational> c;
    c.reserve(size_t(order) + 1);
    for (int i = 0; i <= order; ++i) c.push_back(-(bernoulli(i) / factorial(i)));
    return OperatorSeries(std::move(c));
}

}  // namespace liemc
