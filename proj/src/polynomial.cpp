#include "rharm/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rharm {

Polynomial Polynomial::monomial(std::size_t k, Rational c) {
    std::vector<Rational> coeffs(k + 1, Rational(0));
    coeffs[k] = std::move(c);
    return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()),
                              Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) + other.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other.scaled(Rational(-1));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1,
                              Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (Rational& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t r) const {
    if (coeffs_.empty()) return Polynomial();
    std::vector<Rational> out(r, Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
    std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coeff(i) != other.coeff(i)) return false;
    return true;
}

std::string Polynomial::str() const {
    auto deg = degree();
    if (!deg) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= *deg; ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << to_string(coeffs_[i]);
        } else {
            if (coeffs_[i] != 1) os << to_string(coeffs_[i]) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rharm
