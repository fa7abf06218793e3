#pragma once

#include <map>
#include <string>
#include <vector>

#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Sparse multivariate polynomial with exact rational coefficients.  Exponent
// vectors all share the polynomial's arity.
class RatPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational>;

    RatPoly() = default;
    explicit RatPoly(int arity) : arity_(arity) {}

    static RatPoly constant(int arity, const Rational& c);
    static RatPoly variable(int arity, int index, int power = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(std::vector<int> expo, const Rational& c);
    Rational coefficient(const std::vector<int>& expo) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly scaled(const Rational& c) const;

    bool operator==(const RatPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    // Image of each variable; images must share a common arity.
    RatPoly substitute(const std::vector<RatPoly>& images) const;

    Rational eval(const std::vector<Rational>& x) const;
    cplx eval(const std::vector<cplx>& x) const;

    // Total degree with per-variable weights (max over terms); -1 for zero.
    long long weighted_degree(const std::vector<int>& weights) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int arity_ = 0;
    TermMap terms_;
};

// Determinant by Laplace expansion memoized on column subsets.  Intended for
// small matrices (n <= 10 or so).
RatPoly poly_det(const std::vector<std::vector<RatPoly>>& m);

// Complete homogeneous polynomial h_n expressed in the power sums T_1..T_arity
// (arity >= n required for the generic h_n), via n*h_n = sum_k T_k h_{n-k}.
// h_0 = 1, h_{n<0} = 0.
RatPoly complete_homogeneous(int n, int arity);

// Schur polynomial of a partition, expressed in power sums T_1..T_arity.
// arity must be at least lambda[0] + len(lambda) - 1.
RatPoly schur_in_power_sums(const std::vector<int>& lambda, int arity);

// Substitute T_{weights[i]} = weights[i] * u_{i+1} (every other T to zero)
// into a polynomial in power sums.  This is the pullback convention for power
// sums in a single local coordinate t with u_i = t^{w_i}/w_i.  weights must be
// distinct and positive; the result has arity weights.size().
RatPoly pin_power_sums(const RatPoly& in_power_sums, const std::vector<int>& weights);

}  // namespace sigmacurve
