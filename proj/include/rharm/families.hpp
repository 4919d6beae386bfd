#ifndef RHARM_FAMILIES_HPP
#define RHARM_FAMILIES_HPP

#include "rharm/combinatorics.hpp"
#include "rharm/polynomial.hpp"

namespace rharm {

// Every family is a sum over k of an r-Stirling (second kind) coefficient
// times a k-dependent weight. Numbers are always the polynomial evaluated
// at x = 1, never a separate recurrence.

// phi_n(x) = sum_k S2(n,k) x^k
Polynomial exponential_poly(unsigned n);

// F_n(x) = sum_k S2(n,k) k! x^k
Polynomial geometric_poly(unsigned n);

// F_{n,alpha}(x) = sum_k S2(n,k) (k+alpha-1)!/(alpha-1)! x^k, alpha >= 1
Polynomial general_geometric_poly(unsigned n, unsigned alpha);

// _r phi_n(x) = sum_k S2_r(n,k) x^k
Polynomial r_exponential_poly(unsigned n, unsigned r);
Rational r_exponential_number(unsigned n, unsigned r);

// _r F_n(x) = sum_k S2_r(n,k) k! x^k
Polynomial r_geometric_poly(unsigned n, unsigned r);
Rational r_geometric_number(unsigned n, unsigned r);

// B_{n,r}(x) = sum_k S2_r(n+r, k+r) x^k
Polynomial r_bell_mezo_poly(unsigned n, unsigned r);

// sum_k (k+r)! S2_r(n+r, k+r) x^k  (ordered r-Bell / r-Fubini)
Polynomial r_fubini_nyul_poly(unsigned n, unsigned r);

// _r F^h_n(x) = sum_k S2_r(n,k) k! H_k x^k
Polynomial harmonic_r_geometric_poly(unsigned n, unsigned r);
Rational harmonic_r_geometric_number(unsigned n, unsigned r);

// _r phi^h_n(x) = sum_k S2_r(n,k) H_k x^k
Polynomial harmonic_r_exponential_poly(unsigned n, unsigned r);
Rational harmonic_r_exponential_number(unsigned n, unsigned r);

// _r F^h_{n,alpha}(x) = sum_k S2_r(n,k) k! H_k^(alpha) x^k, alpha >= 1
Polynomial hyperharmonic_r_geometric_poly(unsigned n, unsigned r,
                                          unsigned alpha);
Rational hyperharmonic_r_geometric_number(unsigned n, unsigned r,
                                          unsigned alpha);

// _r F_{n,alpha}(x) = sum_k S2_r(n,k) (k+alpha-1)!/(alpha-1)! x^k
Polynomial general_r_geometric_poly(unsigned n, unsigned r, unsigned alpha);
Rational general_r_geometric_number(unsigned n, unsigned r, unsigned alpha);

// _r phi^h_{n,alpha}(x) = sum_k S2_r(n,k) H_k^(alpha) x^k
Polynomial hyperharmonic_r_exponential_poly(unsigned n, unsigned r,
                                            unsigned alpha);
Rational hyperharmonic_r_exponential_number(unsigned n, unsigned r,
                                            unsigned alpha);

// Termwise c_k -> k! c_k; the exact form of integrating p(z*lambda)
// against e^(-lambda) over [0, inf). Maps each exponential-type family to
// its geometric-type partner.
Polynomial borel_transform(const Polynomial& p);

// Rebuilds the (hyper)harmonic r-geometric polynomial with first-kind
// r-Stirling weights [k+alpha, alpha+1]_alpha in place of k! H_k^(alpha)
// and checks it against the direct constructor. alpha = 1 is the plain
// harmonic route with [k+1, 2].
bool first_kind_reexpression_check(unsigned n, unsigned r, unsigned alpha);

}  // namespace rharm

#endif
