#pragma once

#include <cstdint>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/jet.hpp"
#include "sigmacurve/numbers.hpp"
#include "sigmacurve/periods.hpp"
#include "sigmacurve/polynomial.hpp"
#include "sigmacurve/theta.hpp"

namespace sigmacurve {

// Entire function on the Jacobian built from theta with the vanishing
// half-characteristic of the point at infinity.  The scale is pinned so the
// Taylor expansion at the origin starts with the weight-pinned Schur
// polynomial of the Weierstrass gap diagram; with that normalization the
// function does not depend on the choice of homology basis.
class SigmaFunction {
public:
    explicit SigmaFunction(const PeriodData& pd, std::uint64_t seed = 7);

    const PeriodData& periods() const { return pd_; }
    const YoungDiagramData& diagram() const { return yd_; }
    const ThetaChar& characteristic() const { return delta_; }
    const cplx& scale() const { return c_; }
    // Leading Taylor polynomial at the origin (exact coefficients).
    const RatPoly& leading_term() const { return leading_; }

    cplx operator()(const Vec& u) const;
    // Value and derivatives up to `order` <= 3.
    Jet jet(const Vec& u, int order) const;

    // 2 omega1 l1 + 2 omega2 l2
    Vec lattice_vector(const IVec& l1, const IVec& l2) const;
    // sigma(u + Omega) / sigma(u) for Omega = lattice_vector(l1, l2)
    cplx shift_factor(const Vec& u, const IVec& l1, const IVec& l2) const;

    // Second and third log-derivative combinations, poles on the theta
    // divisor: pp(u)_{ij} = -d_i d_j log sigma, ppp = -d_i d_j d_k.
    Mat kleinian_pp(const Vec& u) const;
    cplx kleinian_ppp(const Vec& u, int i, int j, int k) const;

private:
    PeriodData pd_;
    YoungDiagramData yd_;
    RatPoly leading_;
    ThetaChar delta_;
    cplx c_ = 1.0;
    Mat bmat_;  // (2 omega1)^{-1}
    double theta_tol_ = 1e-13;

    // exp(-u^T gamma u / 2) theta[delta](bmat u) before scaling
    cplx sigma0(const Vec& u) const;
    void find_characteristic(std::uint64_t seed);
    void normalize();
};

}  // namespace sigmacurve
