#include "qcournot/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcournot {
namespace {

// Coefficient noise floor used while building polynomial remainder
// sequences; keeps rounding junk from inflating degrees.
constexpr double kTruncRel = 1e-13;

// Zeroes coefficients at or below the floor. The floor comes from the scale
// of the polynomials that produced the remainder, not from the remainder
// itself, so division junk cannot masquerade as legitimate high-degree terms.
Polynomial strip_below(const Polynomial& p, double floor) {
    std::vector<double> out = p.coeffs();
    for (double& c : out)
        if (std::abs(c) <= floor)
            c = 0.0;
    return Polynomial(std::move(out));
}

Polynomial unit_scale(const Polynomial& p) {
    const double m = p.max_abs_coeff();
    return m > 0.0 ? p * (1.0 / m) : p;
}

// Euclidean gcd with relative zero detection. Returns a constant polynomial
// when the inputs are coprime (the usual case).
Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a = unit_scale(a);
    b = unit_scale(b);
    while (!b.is_zero() && b.degree() >= 1) {
        const double floor = kTruncRel * std::max(a.max_abs_coeff(), b.max_abs_coeff());
        Polynomial rem = strip_below(a.divmod(b).remainder, floor);
        if (rem.is_zero())
            return b;
        a = std::move(b);
        b = unit_scale(rem);
    }
    return b.is_zero() ? a : b;
}

// p with repeated factors removed: p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 1)
        return p;
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() < 1)
        return p;
    return p.divmod(g).quotient;
}

struct SturmChain {
    std::vector<Polynomial> seq;

    explicit SturmChain(const Polynomial& square_free) {
        seq.push_back(square_free);
        if (square_free.degree() >= 1) {
            seq.push_back(square_free.derivative());
            while (seq.back().degree() >= 1) {
                const Polynomial& hi = seq[seq.size() - 2];
                const Polynomial& lo = seq.back();
                const double floor =
                    kTruncRel * std::max(hi.max_abs_coeff(), lo.max_abs_coeff());
                Polynomial rem =
                    strip_below(hi.divmod(lo).remainder * -1.0, floor);
                if (rem.is_zero())
                    break;
                seq.push_back(unit_scale(rem));
            }
        }
    }

    // Sign variations at x, zeros skipped.
    int variations(double x) const {
        int count = 0;
        int prev = 0;
        for (const Polynomial& p : seq) {
            const double v = p(x);
            const int s = (v > 0.0) - (v < 0.0);
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++count;
            prev = s;
        }
        return count;
    }

    // Distinct roots in (lo, hi].
    int count(double lo, double hi) const { return variations(lo) - variations(hi); }
};

double root_scale(const Polynomial& p, double r) {
    return p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(r)), p.degree());
}

// Bisection midpoint, nudged off exact zeros of the chain head so variation
// counts stay unambiguous.
double safe_midpoint(const Polynomial& p, double lo, double hi) {
    const double width = hi - lo;
    double m = lo + 0.5 * width;
    for (int k = 1; k <= 32 && p(m) == 0.0; ++k)
        m = lo + width * (0.5 + k * 1e-6);
    return m;
}

// Improvement-only Newton; steps that fail to reduce |p| end the polish, so
// the iterate cannot wander off even from a slightly misplaced bracket.
double newton_polish(const Polynomial& p, const Polynomial& dp, double x) {
    double best = x;
    double best_abs = std::abs(p(x));
    for (int it = 0; it < 5; ++it) {
        const double d = dp(x);
        if (d == 0.0 || !std::isfinite(d))
            break;
        const double xn = x - p(x) / d;
        if (!std::isfinite(xn))
            break;
        const double fn = std::abs(p(xn));
        if (fn >= best_abs)
            break;
        best = xn;
        best_abs = fn;
        x = xn;
    }
    return best;
}

// Shrinks an interval known (by Sturm count) to hold exactly one root of the
// square-free part, then polishes.
double refine_single_root(const SturmChain& chain, double lo, double hi,
                          int var_lo) {
    const Polynomial& p = chain.seq.front();
    static const Polynomial kZero;
    const Polynomial& dp = chain.seq.size() > 1 ? chain.seq[1] : kZero;
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
        const double m = safe_midpoint(p, lo, hi);
        if (m <= lo || m >= hi)
            break;
        const int var_m = chain.variations(m);
        if (var_lo - var_m >= 1) {
            hi = m;
        } else {
            lo = m;
            var_lo = var_m;
        }
    }
    const double mid = 0.5 * (lo + hi);
    return dp.is_zero() ? mid : newton_polish(p, dp, mid);
}

void merge_close_roots(RootSet& rs) {
    if (rs.roots.size() < 2)
        return;
    RootSet merged;
    merged.roots.push_back(rs.roots.front());
    merged.multiplicity_flags.push_back(rs.multiplicity_flags.front());
    for (std::size_t i = 1; i < rs.roots.size(); ++i) {
        const double r = rs.roots[i];
        double& last = merged.roots.back();
        if (r - last <= kRootMergeTol * std::max(1.0, std::abs(r))) {
            last = 0.5 * (last + r);
            merged.multiplicity_flags.back() = true;
        } else {
            merged.roots.push_back(r);
            merged.multiplicity_flags.push_back(rs.multiplicity_flags[i]);
        }
    }
    rs = std::move(merged);
}

void sort_root_set(RootSet& rs) {
    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rs.roots[a] < rs.roots[b]; });
    RootSet sorted;
    for (std::size_t i : order) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.multiplicity_flags.push_back(static_cast<bool>(rs.multiplicity_flags[i]));
    }
    rs = std::move(sorted);
}

} // namespace

RootSet real_roots_cubic(const Polynomial& p) {
    if (p.is_zero())
        throw ZeroPolynomial();
    if (p.degree() > 3)
        throw DegreeTooHigh("real_roots_cubic requires degree <= 3");
    RootSet rs;
    if (p.degree() == 0)
        return rs;

    const std::vector<double>& c = p.coeffs();
    const Polynomial dp = p.derivative();
    auto polish1 = [&](double x) {
        const double d = dp(x);
        if (d != 0.0) {
            const double xn = x - p(x) / d;
            if (std::abs(p(xn)) < std::abs(p(x)))
                return xn;
        }
        return x;
    };

    if (p.degree() == 1) {
        rs.roots.push_back(-c[0] / c[1]);
        rs.multiplicity_flags.push_back(false);
        return rs;
    }

    if (p.degree() == 2) {
        const double b = c[1] / c[2];
        const double cc = c[0] / c[2];
        const double disc = b * b - 4.0 * cc;
        const double scale = std::max(b * b, std::abs(4.0 * cc));
        if (disc < -1e-14 * scale)
            return rs;
        if (disc <= 1e-14 * scale) {
            rs.roots.push_back(polish1(-0.5 * b));
            rs.multiplicity_flags.push_back(true);
            return rs;
        }
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        double r1 = q;
        double r2 = q != 0.0 ? cc / q : -0.5 * b;
        rs.roots = {polish1(r1), polish1(r2)};
        rs.multiplicity_flags = {false, false};
        sort_root_set(rs);
        return rs;
    }

    // Depressed-form classification, Numerical Recipes style.
    const double a2 = c[2] / c[3];
    const double a1 = c[1] / c[3];
    const double a0 = c[0] / c[3];
    const double q = (a2 * a2 - 3.0 * a1) / 9.0;
    const double r = (2.0 * a2 * a2 * a2 - 9.0 * a2 * a1 + 27.0 * a0) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;
    const double shift = a2 / 3.0;
    // Rounding pushes exact repeated roots off the r^2 == q^3 manifold.
    const double band = 4e-15 * std::max(r2, std::abs(q3));
    if (q3 - r2 > band) {
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double f = -2.0 * std::sqrt(q);
        for (int k = -1; k <= 1; ++k) {
            const double x =
                f * std::cos((t + 2.0 * std::numbers::pi * k) / 3.0) - shift;
            rs.roots.push_back(polish1(x));
            rs.multiplicity_flags.push_back(false);
        }
    } else if (r2 - q3 > band) {
        const double a =
            r >= 0.0 ? -std::cbrt(r + std::sqrt(r2 - q3)) : std::cbrt(-r + std::sqrt(r2 - q3));
        const double b = a != 0.0 ? q / a : 0.0;
        rs.roots.push_back(polish1(a + b - shift));
        rs.multiplicity_flags.push_back(false);
    } else if (q <= 0.0) {
        rs.roots.push_back(-shift); // triple root
        rs.multiplicity_flags.push_back(true);
    } else {
        const double sq = std::copysign(std::sqrt(q), r);
        rs.roots.push_back(polish1(-2.0 * sq - shift));
        rs.multiplicity_flags.push_back(false);
        rs.roots.push_back(polish1(sq - shift));
        rs.multiplicity_flags.push_back(true);
    }
    sort_root_set(rs);
    merge_close_roots(rs);
    return rs;
}

int sturm_count(const Polynomial& p, double lo, double hi) {
    if (p.is_zero())
        throw ZeroPolynomial();
    if (!(lo < hi))
        throw InvalidRange("sturm_count requires lo < hi");
    if (p.degree() == 0)
        return 0;
    return SturmChain(square_free_part(p)).count(lo, hi);
}

RootSet real_roots(const Polynomial& p) {
    if (p.is_zero())
        throw ZeroPolynomial();
    RootSet rs;
    if (p.degree() == 0)
        return rs;

    const Polynomial g = poly_gcd(p, p.derivative());
    const Polynomial sf = g.degree() >= 1 ? p.divmod(g).quotient : p;
    const SturmChain chain(sf);

    const double bound = p.cauchy_root_bound() * (1.0 + 1e-9) + 1e-9;

    struct Interval {
        double lo, hi;
        int var_lo, var_hi;
    };
    std::vector<Interval> stack;
    {
        const int vl = chain.variations(-bound);
        const int vh = chain.variations(bound);
        stack.push_back({-bound, bound, vl, vh});
    }

    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        const int n = iv.var_lo - iv.var_hi;
        if (n <= 0)
            continue;
        const double mid = 0.5 * (iv.lo + iv.hi);
        if (n == 1) {
            rs.roots.push_back(
                refine_single_root(chain, iv.lo, iv.hi, iv.var_lo));
            rs.multiplicity_flags.push_back(false);
            continue;
        }
        if (iv.hi - iv.lo <= kRootMergeTol * std::max(1.0, std::abs(mid))) {
            // Roots too close to separate at double precision: report the
            // cluster once, flagged as a suspected multiple root.
            rs.roots.push_back(
                refine_single_root(chain, iv.lo, iv.hi, iv.var_lo));
            rs.multiplicity_flags.push_back(true);
            continue;
        }
        const double m = safe_midpoint(sf, iv.lo, iv.hi);
        const int vm = chain.variations(m);
        stack.push_back({iv.lo, m, iv.var_lo, vm});
        stack.push_back({m, iv.hi, vm, iv.var_hi});
    }

    sort_root_set(rs);
    merge_close_roots(rs);

    // Roots shared with gcd(p, p') are multiple roots of p.
    if (g.degree() >= 1) {
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            if (std::abs(g(rs.roots[i])) <= kRootResidualTol * root_scale(g, rs.roots[i]))
                rs.multiplicity_flags[i] = true;
    }
    return rs;
}

} // namespace qcournot
