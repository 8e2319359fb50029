#ifndef QCOURNOT_REALROOTS_HPP
#define QCOURNOT_REALROOTS_HPP

#include "qcournot/polynomial.hpp"

#include <vector>

namespace qcournot {

/// Relative residual tolerance: every reported root r of p satisfies
/// |p(r)| <= kRootResidualTol * max|coeff| * max(1, |r|)^deg.
inline constexpr double kRootResidualTol = 1e-10;

/// Distance below which two isolated roots are merged and reported once as a
/// suspected multiple root (bifurcation tangencies land here).
inline constexpr double kRootMergeTol = 1e-7;

/// Distinct real roots, sorted ascending, with per-root indicators of
/// suspected multiplicity > 1.
struct RootSet {
    std::vector<double> roots;
    std::vector<bool> multiplicity_flags;

    std::size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
};

/// All real roots of a polynomial of degree <= 3, by closed form
/// (trigonometric for three real roots, Cardano otherwise) followed by one
/// Newton step. Throws ZeroPolynomial / DegreeTooHigh.
RootSet real_roots_cubic(const Polynomial& p);

/// Number of distinct real roots of p in (lo, hi], by Sturm sign variations
/// on the square-free part of p. Requires lo < hi.
int sturm_count(const Polynomial& p, double lo, double hi);

/// All distinct real roots of p: Cauchy bound, Sturm isolation, bisection to
/// relative width 1e-12 and at most 5 Newton polish steps. Roots closer than
/// kRootMergeTol collapse into one flagged entry.
RootSet real_roots(const Polynomial& p);

} // namespace qcournot

#endif
