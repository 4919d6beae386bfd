#include "rharm/families.hpp"

#include <functional>
#include <stdexcept>

namespace rharm {

namespace {

// sum_k S2_r(n,k) * weight(k) * x^k
Polynomial build_family(unsigned n, unsigned r,
                        const std::function<Rational(unsigned)>& weight) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        BigInt s = stirling2_r(n, k, r);
        if (s != 0) coeffs[k] = Rational(s) * weight(k);
    }
    return Polynomial(std::move(coeffs));
}

void require_alpha(unsigned alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
}

// (k+alpha-1)! / (alpha-1)!  — Gamma(k+alpha)/Gamma(alpha) at integers
Rational rising_factorial_weight(unsigned k, unsigned alpha) {
    return Rational(factorial(k + alpha - 1)) / Rational(factorial(alpha - 1));
}

}  // namespace

Polynomial exponential_poly(unsigned n) {
    return build_family(n, 0, [](unsigned) { return Rational(1); });
}

Polynomial geometric_poly(unsigned n) {
    return build_family(n, 0, [](unsigned k) { return Rational(factorial(k)); });
}

Polynomial general_geometric_poly(unsigned n, unsigned alpha) {
    require_alpha(alpha);
    return build_family(n, 0, [alpha](unsigned k) {
        return rising_factorial_weight(k, alpha);
    });
}

Polynomial r_exponential_poly(unsigned n, unsigned r) {
    return build_family(n, r, [](unsigned) { return Rational(1); });
}

Rational r_exponential_number(unsigned n, unsigned r) {
    return r_exponential_poly(n, r).eval(1);
}

Polynomial r_geometric_poly(unsigned n, unsigned r) {
    return build_family(n, r, [](unsigned k) { return Rational(factorial(k)); });
}

Rational r_geometric_number(unsigned n, unsigned r) {
    return r_geometric_poly(n, r).eval(1);
}

Polynomial r_bell_mezo_poly(unsigned n, unsigned r) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[k] = Rational(stirling2_r(n + r, k + r, r));
    return Polynomial(std::move(coeffs));
}

Polynomial r_fubini_nyul_poly(unsigned n, unsigned r) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[k] = Rational(stirling2_r(n + r, k + r, r) * factorial(k + r));
    return Polynomial(std::move(coeffs));
}

Polynomial harmonic_r_geometric_poly(unsigned n, unsigned r) {
    return build_family(n, r, [](unsigned k) {
        return Rational(factorial(k)) * harmonic(k);
    });
}

Rational harmonic_r_geometric_number(unsigned n, unsigned r) {
    return harmonic_r_geometric_poly(n, r).eval(1);
}

Polynomial harmonic_r_exponential_poly(unsigned n, unsigned r) {
    return build_family(n, r, [](unsigned k) { return harmonic(k); });
}

Rational harmonic_r_exponential_number(unsigned n, unsigned r) {
    return harmonic_r_exponential_poly(n, r).eval(1);
}

Polynomial hyperharmonic_r_geometric_poly(unsigned n, unsigned r,
                                          unsigned alpha) {
    require_alpha(alpha);
    return build_family(n, r, [alpha](unsigned k) {
        return Rational(factorial(k)) * hyperharmonic(k, alpha);
    });
}

Rational hyperharmonic_r_geometric_number(unsigned n, unsigned r,
                                          unsigned alpha) {
    return hyperharmonic_r_geometric_poly(n, r, alpha).eval(1);
}

Polynomial general_r_geometric_poly(unsigned n, unsigned r, unsigned alpha) {
    require_alpha(alpha);
    return build_family(n, r, [alpha](unsigned k) {
        return rising_factorial_weight(k, alpha);
    });
}

Rational general_r_geometric_number(unsigned n, unsigned r, unsigned alpha) {
    return general_r_geometric_poly(n, r, alpha).eval(1);
}

Polynomial hyperharmonic_r_exponential_poly(unsigned n, unsigned r,
                                            unsigned alpha) {
    require_alpha(alpha);
    return build_family(n, r, [alpha](unsigned k) {
        return hyperharmonic(k, alpha);
    });
}

Rational hyperharmonic_r_exponential_number(unsigned n, unsigned r,
                                            unsigned alpha) {
    return hyperharmonic_r_exponential_poly(n, r, alpha).eval(1);
}

Polynomial borel_transform(const Polynomial& p) {
    std::vector<Rational> coeffs = p.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] *= Rational(factorial(static_cast<unsigned>(k)));
    return Polynomial(std::move(coeffs));
}

bool first_kind_reexpression_check(unsigned n, unsigned r, unsigned alpha) {
    require_alpha(alpha);
    Polynomial rebuilt = build_family(n, r, [alpha](unsigned k) {
        return Rational(stirling1_r(k + alpha, alpha + 1, alpha));
    });
    Polynomial direct = alpha == 1
                            ? harmonic_r_geometric_poly(n, r)
                            : hyperharmonic_r_geometric_poly(n, r, alpha);
    return rebuilt == direct;
}

}  // namespace rharm
