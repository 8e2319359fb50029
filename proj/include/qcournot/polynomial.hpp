#ifndef QCOURNOT_POLYNOMIAL_HPP
#define QCOURNOT_POLYNOMIAL_HPP

#include "qcournot/errors.hpp"

#include <initializer_list>
#include <vector>

namespace qcournot {

/// Dense univariate polynomial with real coefficients in ascending degree
/// order: coeffs()[k] multiplies x^k. Exactly-zero leading coefficients are
/// stripped on construction; the zero polynomial is represented by an empty
/// coefficient vector. Degrees above 16 are rejected (the solver needs at
/// most 9).
class Polynomial {
public:
    static constexpr int kMaxDegree = 16;

    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the normalized polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double leading() const { return coeffs_.back(); }

    /// Horner evaluation.
    double operator()(double x) const;

    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double s) const;

    /// Largest |coefficient|; 0 for the zero polynomial.
    double max_abs_coeff() const;

    /// 1 + max_k |c_k / c_n|: every real root lies in (-bound, bound).
    double cauchy_root_bound() const;

    /// Quotient and remainder of *this / divisor (divisor nonzero).
    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;

    /// Composition this(inner(x)); the resulting degree must stay <= 16.
    Polynomial compose(const Polynomial& inner) const;

private:
    void normalize();

    std::vector<double> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

} // namespace qcournot

#endif
