#include "sigmacurve/homology.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sigmacurve/contour.hpp"
#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

double cross2(const cplx& a, const cplx& b) { return a.real() * b.imag() - a.imag() * b.real(); }

std::vector<cplx> node_lifts(const CurveSpec& c, const CyclePath& p) {
    std::vector<cplx> ys(p.x.size());
    ys[0] = p.y0;
    for (std::size_t i = 0; i + 1 < p.x.size(); ++i)
        ys[i + 1] = continue_y_segment(c, p.x[i], ys[i], p.x[i + 1]);
    return ys;
}

// Signed crossings between two lifted polylines with precomputed node fibers.
int crossings(const CurveSpec& c, const CyclePath& A, const std::vector<cplx>& ysA,
              const CyclePath& B, const std::vector<cplx>& ysB) {
    const cplx zeta = c.zeta();
    const double scale = c.branch_scale();
    int total = 0;
    for (std::size_t i = 0; i + 1 < A.x.size(); ++i) {
        const cplx p = A.x[i], dp = A.x[i + 1] - p;
        if (std::abs(dp) < 1e-13 * scale) continue;
        for (std::size_t j = 0; j + 1 < B.x.size(); ++j) {
            const cplx q = B.x[j], dq = B.x[j + 1] - q;
            if (std::abs(dq) < 1e-13 * scale) continue;
            const double den = cross2(dp, dq);
            if (std::abs(den) < 1e-12 * std::abs(dp) * std::abs(dq)) continue;
            const double t = cross2(q - p, dq) / den;
            const double s = cross2(q - p, dp) / den;
            if (t <= 0.0 || t >= 1.0 || s <= 0.0 || s >= 1.0) continue;
            const double edge = 1e-7;
            if (t < edge || t > 1.0 - edge || s < edge || s > 1.0 - edge)
                throw DegenerateConfiguration("cycle crossing too close to a node");
            const cplx z = p + t * dp;
            const cplx ya = continue_y_segment(c, p, ysA[i], z);
            const cplx yb = continue_y_segment(c, q, ysB[j], z);
            int best = 0;
            double dmin = 1e300, dsecond = 1e300;
            cplx rot = yb;
            for (int k = 0; k < c.r; ++k) {
                const double d = std::abs(ya - rot);
                if (d < dmin) {
                    dsecond = dmin;
                    dmin = d;
                    best = k;
                } else if (d < dsecond) {
                    dsecond = d;
                }
                rot *= zeta;
            }
            if (dmin > 0.25 * dsecond)
                throw DegenerateConfiguration("ambiguous sheet at cycle crossing");
            if (best == 0) total += den > 0.0 ? 1 : -1;
        }
    }
    return total;
}

std::vector<cplx> jittered_ellipse(const cplx& mid, const cplx& half, double ax, double bx,
                                   int segs, double phase) {
    std::vector<cplx> pts(segs + 1);
    for (int i = 0; i <= segs; ++i) {
        const double th = phase + 2.0 * kPi * i / segs;
        pts[i] = mid + half * cplx(ax * std::cos(th), bx * std::sin(th));
    }
    pts[segs] = pts[0];
    return pts;
}

// Interior nodes shifted sideways so outbound and return corridors never
// retrace the same segments.
std::vector<cplx> nudged(std::vector<cplx> leg, double amount) {
    if (leg.size() < 3) {
        std::vector<cplx> dense;
        dense.push_back(leg.front());
        dense.push_back(0.75 * leg.front() + 0.25 * leg.back());
        dense.push_back(0.5 * (leg.front() + leg.back()));
        dense.push_back(0.25 * leg.front() + 0.75 * leg.back());
        dense.push_back(leg.back());
        leg = dense;
    }
    const cplx dir = leg.back() - leg.front();
    const cplx perp = kI * dir / std::abs(dir);
    for (std::size_t i = 1; i + 1 < leg.size(); ++i) {
        const double lam = static_cast<double>(i) / (leg.size() - 1);
        leg[i] += amount * std::abs(dir) * std::sin(kPi * lam) * perp;
    }
    return leg;
}

void append_tail(std::vector<cplx>& path, const std::vector<cplx>& leg) {
    path.insert(path.end(), leg.begin() + 1, leg.end());
}

std::vector<CyclePath> hyperelliptic_candidates(const CurveSpec& c, std::mt19937_64& rng) {
    const auto b = c.branch_x();
    const int g = c.genus();
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Nearest-neighbour chain keeps each pair geometrically close, so the
    // surrounding loop stays clear of the remaining branch points.
    std::vector<int> chain{0};
    std::vector<char> seen(b.size(), 0);
    seen[0] = 1;
    while (chain.size() < b.size()) {
        const cplx at = b[chain.back()];
        int pick = -1;
        double dmin = 1e300;
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (seen[k]) continue;
            const double d = std::abs(b[k] - at);
            if (d < dmin) {
                dmin = d;
                pick = static_cast<int>(k);
            }
        }
        seen[pick] = 1;
        chain.push_back(pick);
    }

    std::vector<CyclePath> out;
    for (int i = 0; i < 2 * g; ++i) {
        const cplx lo = b[chain[i]], hi = b[chain[i + 1]];
        const cplx mid = 0.5 * (lo + hi);
        const cplx half = 0.5 * (hi - lo);
        double ax = 1.45 + 0.15 * unit(rng);
        double bx = 0.45 + 0.15 * unit(rng);
        bool clear = false;
        for (int shrink = 0; shrink < 16 && !clear; ++shrink) {
            clear = true;
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (static_cast<int>(k) == chain[i] || static_cast<int>(k) == chain[i + 1]) continue;
                const cplx xi = (b[k] - mid) / half;
                const double q = xi.real() * xi.real() / (ax * ax) + xi.imag() * xi.imag() / (bx * bx);
                if (q < 1.35) {
                    ax = 1.0 + 0.72 * (ax - 1.0);
                    bx *= 0.72;
                    clear = false;
                    break;
                }
            }
        }
        if (!clear || ax < 1.04)
            throw DegenerateConfiguration("no clear loop around branch pair");
        CyclePath p;
        p.x = jittered_ellipse(mid, half, ax, bx, 64 + 4 * (i % 3), 2.0 * kPi * unit(rng));
        p.y0 = lift_points(c, p.x[0])[0].y;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<CyclePath> trigonal_candidates(const CurveSpec& c, std::mt19937_64& rng) {
    const auto b = c.branch_x();
    const int nb = static_cast<int>(b.size());
    const cplx zeta = c.zeta();
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> nearest(nb, 1e300);
    for (int j = 0; j < nb; ++j)
        for (int k = 0; k < nb; ++k)
            if (k != j) nearest[j] = std::min(nearest[j], std::abs(b[j] - b[k]));

    std::vector<CyclePath> out;
    for (int j = 0; j < nb; ++j) {
        for (int k = 0; k < nb; ++k) {
            if (k == j) continue;
            for (int m = 0; m < 3; ++m) {
                const double rj = nearest[j] * (0.20 + 0.06 * unit(rng));
                const double rk = nearest[k] * (0.20 + 0.06 * unit(rng));
                const double rmin = std::min(rj, rk);
                cplx mid = 0.5 * (b[j] + b[k]) +
                           0.3 * rmin * cplx(unit(rng) - 0.5, unit(rng) - 0.5);
                const cplx step = kI * (b[k] - b[j]) / std::abs(b[k] - b[j]);
                for (int tries = 0; tries < 24; ++tries) {
                    double dmin = 1e300;
                    for (const auto& w : b) dmin = std::min(dmin, std::abs(mid - w));
                    if (dmin > rmin) break;
                    mid += 0.25 * rmin * step;
                }
                const cplx ej = b[j] + rj * (mid - b[j]) / std::abs(mid - b[j]);
                const cplx ek = b[k] + rk * (mid - b[k]) / std::abs(mid - b[k]);
                const double clearance = 0.7 * std::min(rj, rk);
                std::vector<cplx> avoid_j, avoid_k;
                for (int l = 0; l < nb; ++l) {
                    if (l != j) avoid_j.push_back(b[l]);
                    if (l != k) avoid_k.push_back(b[l]);
                }
                const auto leg_j = route_path(mid, ej, avoid_j, clearance);
                const auto leg_k = route_path(mid, ek, avoid_k, clearance);
                const double dj = 0.020 + 0.012 * unit(rng);
                const double dk = 0.020 + 0.012 * unit(rng);

                const auto ring = [&](const cplx& center, const cplx& start, double radius,
                                      int turns) {
                    const int segs = 56 * turns;
                    const double ph = std::arg(start - center);
                    std::vector<cplx> pts(segs + 1);
                    for (int i = 0; i <= segs; ++i) {
                        const double th = ph + 2.0 * kPi * turns * i / segs;
                        pts[i] = center + radius * std::exp(kI * th);
                    }
                    pts[0] = start;
                    pts[segs] = start;
                    return pts;
                };

                CyclePath p;
                p.x = nudged(leg_j, dj);
                append_tail(p.x, ring(b[j], ej, rj, 1));
                {
                    auto back = nudged(leg_j, -dj);
                    std::reverse(back.begin(), back.end());
                    append_tail(p.x, back);
                }
                append_tail(p.x, nudged(leg_k, dk));
                append_tail(p.x, ring(b[k], ek, rk, 2));
                {
                    auto back = nudged(leg_k, -dk);
                    std::reverse(back.begin(), back.end());
                    append_tail(p.x, back);
                }
                cplx y0 = lift_points(c, mid)[0].y;
                for (int t = 0; t < m; ++t) y0 *= zeta;
                p.y0 = y0;
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

std::vector<CyclePath> build_candidates(const CurveSpec& c, std::mt19937_64& rng) {
    if (c.r == 2) return hyperelliptic_candidates(c, rng);
    if (c.r == 3) return trigonal_candidates(c, rng);
    throw UnsupportedFamily("cycle construction covers r = 2 and r = 3");
}

}  // namespace

int intersection_number(const CurveSpec& c, const CyclePath& A, const CyclePath& B) {
    return crossings(c, A, node_lifts(c, A), B, node_lifts(c, B));
}

IMat symplectic_reduce(const IMat& C0, int g) {
    const int K = static_cast<int>(C0.rows());
    if (C0.cols() != K || 2 * g > K) throw BadInput("intersection matrix shape");
    using LMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
    LMat C = C0.cast<long long>();
    LMat T = LMat::Identity(K, K);
    const auto rowop = [&](int dst, int src, long long q) {
        if (q == 0) return;
        C.row(dst) += q * C.row(src);
        C.col(dst) += q * C.col(src);
        T.row(dst) += q * T.row(src);
        if (C.cwiseAbs().maxCoeff() > (1LL << 60)) throw ReductionFailure("entry overflow");
    };
    std::vector<char> used(K, 0);
    std::vector<int> arows, brows;
    for (int pair = 0; pair < g; ++pair) {
        int pi = -1, pj = -1;
        for (int guard = 0; guard < 64 * K * K; ++guard) {
            pi = pj = -1;
            long long best = 0;
            for (int i = 0; i < K; ++i) {
                if (used[i]) continue;
                for (int j = 0; j < K; ++j) {
                    if (used[j] || j == i || C(i, j) == 0) continue;
                    const long long a = std::llabs(C(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) throw ReductionFailure("cycle candidates span too little homology");
            const long long d = C(pi, pj);
            bool reduced = false;
            for (int k = 0; k < K && !reduced; ++k) {
                if (used[k] || k == pi || k == pj) continue;
                if (C(k, pj) % d != 0) {
                    rowop(k, pi, -(C(k, pj) / d));
                    reduced = true;
                } else if (C(pi, k) % d != 0) {
                    rowop(k, pj, -(C(pi, k) / d));
                    reduced = true;
                }
            }
            if (!reduced) break;
        }
        if (C(pi, pj) < 0) std::swap(pi, pj);
        if (C(pi, pj) != 1) throw ReductionFailure("non-unimodular pivot");
        for (int k = 0; k < K; ++k) {
            if (used[k] || k == pi || k == pj) continue;
            rowop(k, pi, -C(k, pj));
            rowop(k, pj, C(k, pi));
        }
        used[pi] = used[pj] = 1;
        arows.push_back(pi);
        brows.push_back(pj);
    }
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            if (!used[i] && !used[j] && C(i, j) != 0)
                throw ReductionFailure("intersection data of rank above 2g");
    IMat combo(2 * g, K);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < K; ++j) {
            if (std::llabs(T(arows[i], j)) > (1LL << 30) || std::llabs(T(brows[i], j)) > (1LL << 30))
                throw ReductionFailure("basis coefficients too large");
            combo(i, j) = static_cast<int>(T(arows[i], j));
            combo(g + i, j) = static_cast<int>(T(brows[i], j));
        }
    }
    const IMat check = combo * C0 * combo.transpose();
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) {
            const int want = (j == i + g) ? 1 : (i == j + g ? -1 : 0);
            if (check(i, j) != want) throw ReductionFailure("reduced form is not symplectic");
        }
    return combo;
}

HomologyBasis homology_basis(const CurveSpec& c, std::uint64_t seed) {
    const int g = c.genus();
    std::string last = "no attempt";
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (attempt + 1));
        try {
            HomologyBasis basis;
            basis.g = g;
            basis.candidates = build_candidates(c, rng);
            const int K = static_cast<int>(basis.candidates.size());
            std::vector<std::vector<cplx>> ys(K);
            for (int i = 0; i < K; ++i) {
                ys[i] = node_lifts(c, basis.candidates[i]);
                if (std::abs(ys[i].back() - basis.candidates[i].y0) >
                    1e-8 * (1.0 + std::abs(basis.candidates[i].y0)))
                    throw HomologyFailure("candidate loop does not close on its sheet");
            }
            basis.inter = IMat::Zero(K, K);
            for (int i = 0; i < K; ++i)
                for (int j = i + 1; j < K; ++j) {
                    const int n = crossings(c, basis.candidates[i], ys[i], basis.candidates[j], ys[j]);
                    basis.inter(i, j) = n;
                    basis.inter(j, i) = -n;
                }
            basis.combo = symplectic_reduce(basis.inter, g);
            return basis;
        } catch (const CurveError& e) {
            last = e.what();
        }
    }
    throw HomologyFailure(std::string("no symplectic basis found: ") + last);
}

}  // namespace sigmacurve
