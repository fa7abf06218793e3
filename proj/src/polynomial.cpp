#include "sigmacurve/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

RatPoly RatPoly::constant(int arity, const Rational& c) {
    RatPoly p(arity);
    p.add_term(std::vector<int>(arity, 0), c);
    return p;
}

RatPoly RatPoly::variable(int arity, int index, int power) {
    if (index < 0 || index >= arity) throw BadInput("RatPoly::variable: index out of range");
    RatPoly p(arity);
    std::vector<int> e(arity, 0);
    e[index] = power;
    p.add_term(std::move(e), Rational(1));
    return p;
}

void RatPoly::add_term(std::vector<int> expo, const Rational& c) {
    if ((int)expo.size() != arity_) throw BadInput("RatPoly::add_term: arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(std::move(expo), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational RatPoly::coefficient(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    if (arity_ != o.arity_) throw BadInput("RatPoly: arity mismatch in +");
    RatPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    if (arity_ != o.arity_) throw BadInput("RatPoly: arity mismatch in -");
    RatPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (arity_ != o.arity_) throw BadInput("RatPoly: arity mismatch in *");
    RatPoly r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

RatPoly RatPoly::operator-() const { return scaled(Rational(-1)); }

RatPoly RatPoly::scaled(const Rational& c) const {
    RatPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

RatPoly RatPoly::substitute(const std::vector<RatPoly>& images) const {
    if ((int)images.size() != arity_) throw BadInput("RatPoly::substitute: needs one image per variable");
    int out_arity = images.empty() ? 0 : images[0].arity();
    RatPoly r(out_arity);
    for (const auto& [e, c] : terms_) {
        RatPoly term = RatPoly::constant(out_arity, c);
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        r = r + term;
    }
    return r;
}

Rational RatPoly::eval(const std::vector<Rational>& x) const {
    if ((int)x.size() != arity_) throw BadInput("RatPoly::eval: arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

cplx RatPoly::eval(const std::vector<cplx>& x) const {
    if ((int)x.size() != arity_) throw BadInput("RatPoly::eval: arity mismatch");
    cplx acc = 0.0;
    for (const auto& [e, c] : terms_) {
        cplx t = c.to_double();
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

long long RatPoly::weighted_degree(const std::vector<int>& weights) const {
    if ((int)weights.size() != arity_) throw BadInput("RatPoly::weighted_degree: arity mismatch");
    long long best = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        long long d = 0;
        for (int i = 0; i < arity_; ++i) d += (long long)e[i] * weights[i];
        best = std::max(best, d);
    }
    return best;
}

std::string RatPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

RatPoly poly_det(const std::vector<std::vector<RatPoly>>& m) {
    int n = (int)m.size();
    if (n == 0) throw BadInput("poly_det: empty matrix");
    for (const auto& row : m)
        if ((int)row.size() != n) throw BadInput("poly_det: not square");
    int arity = m[0][0].arity();

    // det over rows [row..n) and the columns selected by mask.
    std::map<std::pair<int, unsigned>, RatPoly> memo;
    std::function<RatPoly(int, unsigned)> go = [&](int row, unsigned mask) -> RatPoly {
        if (row == n) return RatPoly::constant(arity, Rational(1));
        auto key = std::make_pair(row, mask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        RatPoly acc(arity);
        int pos = 0;
        for (int col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            if (!m[row][col].is_zero()) {
                RatPoly sub = m[row][col] * go(row + 1, mask & ~(1u << col));
                acc = (pos % 2 == 0) ? acc + sub : acc - sub;
            }
            ++pos;
        }
        memo.emplace(key, acc);
        return acc;
    };
    return go(0, (1u << n) - 1);
}

RatPoly complete_homogeneous(int n, int arity) {
    if (n < 0) return RatPoly(arity);
    if (n > arity) throw BadInput("complete_homogeneous: arity too small for generic h_n");
    std::vector<RatPoly> h;
    h.push_back(RatPoly::constant(arity, Rational(1)));
    for (int m = 1; m <= n; ++m) {
        RatPoly acc(arity);
        for (int k = 1; k <= m; ++k) acc = acc + RatPoly::variable(arity, k - 1) * h[m - k];
        h.push_back(acc.scaled(Rational(1, m)));
    }
    return h[n];
}

RatPoly schur_in_power_sums(const std::vector<int>& lambda, int arity) {
    std::vector<int> lam;
    for (int part : lambda)
        if (part > 0) lam.push_back(part);
    if (lam.empty()) return RatPoly::constant(arity, Rational(1));
    for (size_t i = 1; i < lam.size(); ++i)
        if (lam[i] > lam[i - 1]) throw BadInput("schur_in_power_sums: not a partition");
    int ell = (int)lam.size();
    if (arity < lam[0] + ell - 1)
        throw BadInput("schur_in_power_sums: arity too small");
    std::vector<std::vector<RatPoly>> jt(ell, std::vector<RatPoly>(ell, RatPoly(arity)));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            jt[i][j] = complete_homogeneous(lam[i] - (i + 1) + (j + 1), arity);
    return poly_det(jt);
}

RatPoly pin_power_sums(const RatPoly& in_power_sums, const std::vector<int>& weights) {
    int g = (int)weights.size();
    std::vector<RatPoly> images(in_power_sums.arity(), RatPoly(g));
    for (int i = 0; i < g; ++i) {
        if (weights[i] <= 0 || weights[i] > in_power_sums.arity())
            throw BadInput("pin_power_sums: weight out of range");
        images[weights[i] - 1] = RatPoly::variable(g, i).scaled(Rational(weights[i]));
    }
    return in_power_sums.substitute(images);
}

}  // namespace sigmacurve
