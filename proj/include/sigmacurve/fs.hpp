#pragma once

#include <vector>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Determinant of the n x n matrix whose i-th row evaluates the first n + 1
// affine monomials phi_0..phi_n, minus the deleted column, at the i-th point.
// drop = n keeps phi_0..phi_{n-1}.  Rows are literal point evaluations, so
// coinciding points give zero.
cplx fs_determinant(const CurveSpec& c, const std::vector<AffinePoint>& pts, int drop);

// fs_determinant with drop = n.
cplx fs_psi(const CurveSpec& c, const std::vector<AffinePoint>& pts);

// prod_{i<j} (x_j - x_i), the determinant of the plain Vandermonde rows
// (1, x_i, ..., x_i^{n-1}).
cplx fs_vandermonde(const std::vector<AffinePoint>& pts);

// Monic interpolation function of the divisor P_1 + ... + P_n: the unique
//   mu = phi_n + sum_{k<n} coeff[k] phi_k
// vanishing at the given points.  A point of multiplicity two adds a
// first-derivative condition along the curve; higher multiplicities and
// branch-point tangency are not supported.  The remaining zeros beyond the
// input divisor form the residual divisor, see residual_divisor().
class MuFunction {
public:
    MuFunction(const CurveSpec& c, const std::vector<AffinePoint>& pts);

    int n() const { return n_; }
    const CurveSpec& curve() const { return curve_; }
    const std::vector<cplx>& coeff() const { return coeff_; }
    // Coefficient in the alternating-sign form mu = phi_n +
    // sum_k (-1)^{n-k} mu_coefficient(k) phi_k.
    cplx mu_coefficient(int k) const;

    cplx operator()(const cplx& x, const cplx& y) const;
    cplx operator()(const AffinePoint& p) const { return (*this)(p.x, p.y); }
    cplx dx(const cplx& x, const cplx& y) const;  // d/dx along the curve

private:
    CurveSpec curve_;
    MonomialBasis basis_;
    int n_ = 0;
    std::vector<cplx> coeff_;
};

// The zeros of the interpolation function of pts beyond pts itself: N(n) - n
// points whose Abel sum is minus the Abel sum of pts modulo the lattice.
// Throws RootResolutionFailure when the zeros cannot be matched to fiber
// points unambiguously.
std::vector<AffinePoint> residual_divisor(const CurveSpec& c,
                                          const std::vector<AffinePoint>& pts);

}  // namespace sigmacurve
