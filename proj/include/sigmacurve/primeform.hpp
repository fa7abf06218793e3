#pragma once

#include <cstdint>
#include <vector>

#include "sigmacurve/abel.hpp"
#include "sigmacurve/sigma.hpp"

namespace sigmacurve {

// Affine point together with a chosen lift of its Abel image.  Keeping the
// lift explicit lets callers probe lattice shifts without re-integrating.
struct LiftedPoint {
    AffinePoint p;
    Vec w;
};

// Smallest odd half-characteristic, in lexicographic (mask_a, mask_b) order,
// whose theta gradient at the origin is usable.  Throws
// CharacteristicNotFound when every odd candidate has a degenerate gradient.
ThetaChar odd_characteristic(const PeriodData& pd, double grad_tol = 1e-8);

struct ThirdKindResult {
    AffinePoint reached;  // endpoint lift selected by the integration path
    cplx double_ratio;    // cross ratio of the four theta factors
    cplx exp_integral;    // exp of the normalized third-kind integral
    double defect;        // |double_ratio / exp_integral - 1|
};

// Scalarized prime form on a cyclic (r,s) curve.  All two-point values are
// quoted in the trivialization by the first basis differential: the square
// roots of dx-densities use principal branches per point, so each value is
// canonical up to one sign per point, and ratios of the different forms are
// compared after calibrating those signs against a reference point.
class PrimeForm {
public:
    explicit PrimeForm(const PeriodData& pd, std::uint64_t seed = 7);

    const PeriodData& periods() const { return sig_.periods(); }
    const CurveSpec& curve() const { return sig_.periods().curve; }
    const SigmaFunction& sigma() const { return sig_; }
    const AbelMap& abel() const { return abel_; }
    const ThetaChar& characteristic() const { return delta_; }

    LiftedPoint lift(const AffinePoint& p) const { return {p, abel_(p)}; }

    // First-kind basis as dx-densities at p; throws BranchPoint near y = 0.
    Vec basis_density(const AffinePoint& p) const;
    // Trivializing dx-density: theta gradient at zero contracted with the
    // normalized basis.  Its zeros are the only points the forms cannot use.
    cplx trivialization(const AffinePoint& p) const;

    // theta[delta]((2 omega1)^{-1} (wP - wQ)) sqrt(nu1/zeta)(P) sqrt(nu1/zeta)(Q)
    cplx theta_form(const LiftedPoint& P, const LiftedPoint& Q) const;
    // exp(-(1/2) D^t gamma D) theta_form, D = wP - wQ; the lattice behaviour
    // of this dressing matches shift_factor below.
    cplx modular_form(const LiftedPoint& P, const LiftedPoint& Q) const;
    // Stratum sigma at wP - wQ: the second natural derivative set for r = 2,
    // plain sigma for the trigonal family.
    cplx sigma_form(const LiftedPoint& P, const LiftedPoint& Q) const;
    // Trigonal only: sigma at wP + zh wQ + zh^2 wQ over sqrt(-3), where zh is
    // the diagonal Galois action on the Jacobian.
    cplx sigma_form_conjugate(const LiftedPoint& P, const LiftedPoint& Q) const;

    // modular_form((wP + Omega, wQ)) / modular_form((wP, wQ)) for
    // Omega = 2 omega1 l1 + 2 omega2 l2, as a closed-form multiplier in
    // D = wP - wQ.
    cplx shift_factor(const Vec& D, const IVec& l1, const IVec& l2) const;

    // Exponent test for the normalized differential of the third kind with
    // unit residues at Q and Qp.  The path runs from P2 to the fiber over x1;
    // the lift it lands on is reported in the result.  The cycle
    // normalization subtracts first-kind pieces so that the alpha-period of
    // the corrected differential equals the argument winding of the theta
    // ratio over the same representative cycles.
    ThirdKindResult third_kind(const AffinePoint& Q, const AffinePoint& Qp,
                               const AffinePoint& P2, const cplx& x1) const;

    // Demonstration map for slit-domain reductions: k times the sum over
    // sheets of zeta^i d/dv1 log of the stratum sigma at u - zh^{-i} v.
    // Throws ZeroDivisorPoint when a sigma factor vanishes.
    cplx benney_core_term(const Vec& u, const Vec& v, const cplx& k) const;

private:
    SigmaFunction sig_;
    AbelMap abel_;
    MonomialBasis basis_;
    GaloisData gal_;
    ThetaChar delta_;
    Mat bmat_;            // (2 omega1)^{-1}
    Vec grad_weights_;    // bmat^t grad theta[delta](0)
    std::vector<int> stratum_;  // zero-based derivative set of sigma_form
    double theta_tol_ = 1e-13;

    cplx root_factor(const AffinePoint& p) const;
    cplx stratum_sigma(const Vec& u) const;
};

}  // namespace sigmacurve
