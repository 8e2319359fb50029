#include "qcournot/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace qcournot {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
    normalize();
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    if (degree() > kMaxDegree)
        throw DegreeTooHigh("polynomial degree exceeds 16");
}

double Polynomial::operator()(double x) const {
    double y = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        y = y * x + *it;
    return y;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<double> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        out[k] += rhs.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero())
        return {};
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> out = coeffs_;
    for (double& c : out)
        c *= s;
    return Polynomial(std::move(out));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::cauchy_root_bound() const {
    if (degree() < 1)
        return 1.0;
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
        m = std::max(m, std::abs(coeffs_[k]));
    return 1.0 + m / std::abs(coeffs_.back());
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw ZeroPolynomial();
    if (degree() < divisor.degree())
        return {{}, *this};
    std::vector<double> rem = coeffs_;
    std::vector<double> quot(coeffs_.size() - divisor.coeffs_.size() + 1, 0.0);
    const double lead = divisor.leading();
    const int dd = divisor.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        const double f = rem[k] / lead;
        quot[k - dd] = f;
        if (f == 0.0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[k - dd + j] -= f * divisor.coeffs_[j];
        rem[k] = 0.0;
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * inner + Polynomial{*it};
    return result;
}

} // namespace qcournot
