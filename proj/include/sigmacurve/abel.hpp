#pragma once

#include "sigmacurve/contour.hpp"
#include "sigmacurve/periods.hpp"
#include "sigmacurve/series.hpp"

namespace sigmacurve {

// Integral of the first-kind basis from the point at infinity.  Far points
// are summed directly in the local parameter at infinity; the rest are
// reached by a routed polyline from a far anchor on the same sheet.
class AbelMap {
public:
    explicit AbelMap(const PeriodData& pd, int series_terms = 160);

    const PeriodData& periods() const { return pd_; }
    const CurveSpec& curve() const { return pd_.curve; }

    Vec operator()(const cplx& x, const cplx& y) const;
    Vec operator()(const AffinePoint& p) const { return (*this)(p.x, p.y); }

    // Writes w as 2 omega1 n + 2 omega2 m + w0 with integer n, m and returns
    // w0.  If coords is non-null it receives the unrounded 2g real lattice
    // coordinates of w.
    Vec reduce_mod_lattice(const Vec& w, RVec* coords = nullptr) const;

    // Lattice distance |coords - round(coords)|_inf of w; zero for lattice
    // vectors.
    double lattice_distance(const Vec& w) const;

private:
    PeriodData pd_;
    CurveSeries cs_;
    double far_radius_;
    double tol_;
    Eigen::PartialPivLU<RMat> lattice_lu_;

    // local parameter of the lift of x nearest to y among t with t^{-r} = x
    cplx far_parameter(const cplx& x, const cplx& y) const;
    Vec series_value(const cplx& t) const;
};

}  // namespace sigmacurve
