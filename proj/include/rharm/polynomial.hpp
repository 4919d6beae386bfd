#ifndef RHARM_POLYNOMIAL_HPP
#define RHARM_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rharm/rational.hpp"

namespace rharm {

// Dense univariate polynomial over Rational, ascending degree. Trailing
// zero coefficients may be stored; equality ignores them. Immutable in
// practice: all operations return new values.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    // x^k
    static Polynomial monomial(std::size_t k, Rational c = 1);

    // Coefficient of x^i; 0 beyond stored range.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return !degree().has_value(); }

    Rational eval(const Rational& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    // Multiply by x^r.
    Polynomial shifted(std::size_t r) const;

    bool operator==(const Polynomial& other) const;

    // "0", "1 + 3/2*x^2", ... for diagnostics and markdown output.
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace rharm

#endif
