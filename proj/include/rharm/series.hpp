#ifndef RHARM_SERIES_HPP
#define RHARM_SERIES_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "rharm/polynomial.hpp"
#include "rharm/rational.hpp"

namespace rharm {

// Formal power series over Rational known exactly up to x^order.
// Arithmetic truncates to the minimum operand order; no coefficient is
// ever fabricated beyond what the operands determine.
class TruncatedSeries {
public:
    // coeffs is truncated or zero-padded to order + 1 entries.
    TruncatedSeries(unsigned order, std::vector<Rational> coeffs);

    static TruncatedSeries zero(unsigned order);
    static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

    unsigned order() const { return order_; }
    const Rational& coeff(unsigned n) const { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    // Cauchy product to the common order.
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries scaled(const Rational& c) const;
    // Termwise derivative; order drops by one. Requires order >= 1.
    TruncatedSeries derivative() const;
    // Multiply by x^k; the known order rises by k.
    TruncatedSeries shifted(unsigned k) const;
    // Restriction to a smaller order.
    TruncatedSeries prefix(unsigned order) const;

    // Equality up to the common order.
    bool operator==(const TruncatedSeries& other) const;
    // First index <= common order where coefficients differ.
    std::optional<unsigned> first_mismatch(const TruncatedSeries& other) const;

private:
    unsigned order_;
    std::vector<Rational> coeffs_;
};

enum class BasicSeries { ExpX, InvOneMinusX, NegLogOneMinusX, InvPow };

// Maclaurin series of e^x, 1/(1-x), -ln(1-x), or 1/(1-x)^alpha.
// alpha is consulted only for InvPow (alpha = 0 gives the constant 1).
TruncatedSeries series_basic(BasicSeries kind, unsigned order,
                             unsigned alpha = 1);

struct GeneratorKind {
    enum Tag { Exp, Geom, HarmonicGF, HyperharmonicGF } tag;
    unsigned alpha = 1;  // order of HyperharmonicGF
};

// Maclaurin series of the chosen outer function g: e^x, 1/(1-x),
// -ln(1-x)/(1-x) (coefficients H_n), or -ln(1-x)/(1-x)^alpha
// (coefficients H_n^(alpha)).
TruncatedSeries generator_series(const GeneratorKind& g, unsigned order);

// Diagonal action of (xD_r)^m on a series: zero for m < r, otherwise
// c_n -> c_n * n^(m-r) * binom(n,r) * r!  (with 0^0 = 1).
TruncatedSeries xDr_apply(const TruncatedSeries& s, unsigned r, unsigned m);

// Independent route: sum_k S2_r(m,k) x^k s^(k)(x) by exact termwise
// differentiation. Requires m >= r and s.order >= m.
TruncatedSeries xDr_definitional(const TruncatedSeries& s, unsigned r,
                                 unsigned m);

// The verified identities. m >= r >= 0, s >= 0, alpha >= 1 throughout.
struct HarmonicClosedForm {
    unsigned m, r;
};
struct HyperharmonicClosedForm {
    unsigned m, r, alpha;
};
struct MultipleSum {
    unsigned m, r, s;
};
struct HyperharmonicMultipleSum {
    unsigned m, r, s, alpha;
};
struct Transformation {
    GeneratorKind g;
    Polynomial f;
    unsigned r;
};

using IdentityId =
    std::variant<HarmonicClosedForm, HyperharmonicClosedForm, MultipleSum,
                 HyperharmonicMultipleSum, Transformation>;

// LHS built coefficient by coefficient from the defining sums:
//   HarmonicClosedForm:       binom(n,r) r! n^(m-r) H_n
//   HyperharmonicClosedForm:  binom(n,r) r! n^(m-r) H_n^(alpha)
//   MultipleSum:              sum_{k<=n} binom(k,r) binom(n+s-k,s) r! k^(m-r) H_k
//   HyperharmonicMultipleSum: same with H_k^(alpha)
//   Transformation:           q_n binom(n,r) r! sum_{m>=r} p_m n^(m-r)
TruncatedSeries lhs_weighted_series(const IdentityId& id, unsigned order);

// RHS assembled from formal series only:
//   (1-x)^(-beta) [ P_h(x/(1-x)) - P(x/(1-x)) ln(1-x) ]
// with P_h / P the matching harmonic/hyperharmonic r-geometric pair and
// beta = 1, alpha, s+2, alpha+s+1 respectively; for Transformation,
//   sum_{m>=r} p_m sum_k S2_r(m,k) x^k g^(k)(x).
TruncatedSeries rhs_closed_form_series(const IdentityId& id, unsigned order);

struct VerifyReport {
    bool equal;
    std::optional<unsigned> first_mismatch;
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};

// Computes both sides to the given order and compares exactly.
VerifyReport verify_identity(const IdentityId& id, unsigned order);

}  // namespace rharm

#endif
