#include "rharm/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "rharm/combinatorics.hpp"
#include "rharm/families.hpp"

namespace rharm {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order_ + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
    return TruncatedSeries(order, {});
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p,
                                                 unsigned order) {
    std::vector<Rational> coeffs(order + 1, Rational(0));
    for (unsigned n = 0; n <= order; ++n) coeffs[n] = p.coeff(n);
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    unsigned ord = std::min(order_, other.order_);
    std::vector<Rational> out(ord + 1);
    for (unsigned n = 0; n <= ord; ++n) out[n] = coeffs_[n] + other.coeffs_[n];
    return TruncatedSeries(ord, std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    return *this + other.scaled(Rational(-1));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    unsigned ord = std::min(order_, other.order_);
    std::vector<Rational> out(ord + 1, Rational(0));
    for (unsigned i = 0; i <= ord; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; i + j <= ord; ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return TruncatedSeries(ord, std::move(out));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (Rational& v : out) v *= c;
    return TruncatedSeries(order_, std::move(out));
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order_ == 0)
        throw std::invalid_argument("cannot differentiate an order-0 series");
    std::vector<Rational> out(order_);
    for (unsigned n = 0; n + 1 <= order_; ++n)
        out[n] = coeffs_[n + 1] * Rational(n + 1);
    return TruncatedSeries(order_ - 1, std::move(out));
}

TruncatedSeries TruncatedSeries::shifted(unsigned k) const {
    std::vector<Rational> out(k, Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(order_ + k, std::move(out));
}

TruncatedSeries TruncatedSeries::prefix(unsigned order) const {
    if (order > order_)
        throw std::invalid_argument("prefix beyond known order");
    std::vector<Rational> out(coeffs_.begin(), coeffs_.begin() + order + 1);
    return TruncatedSeries(order, std::move(out));
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    return !first_mismatch(other).has_value();
}

std::optional<unsigned> TruncatedSeries::first_mismatch(
    const TruncatedSeries& other) const {
    unsigned ord = std::min(order_, other.order_);
    for (unsigned n = 0; n <= ord; ++n)
        if (coeffs_[n] != other.coeffs_[n]) return n;
    return std::nullopt;
}

TruncatedSeries series_basic(BasicSeries kind, unsigned order,
                             unsigned alpha) {
    std::vector<Rational> coeffs(order + 1, Rational(0));
    switch (kind) {
        case BasicSeries::ExpX:
            for (unsigned n = 0; n <= order; ++n)
                coeffs[n] = Rational(1, factorial(n));
            break;
        case BasicSeries::InvOneMinusX:
            for (unsigned n = 0; n <= order; ++n) coeffs[n] = 1;
            break;
        case BasicSeries::NegLogOneMinusX:
            for (unsigned n = 1; n <= order; ++n) coeffs[n] = Rational(1, n);
            break;
        case BasicSeries::InvPow:
            if (alpha == 0) {
                coeffs[0] = 1;
            } else {
                for (unsigned n = 0; n <= order; ++n)
                    coeffs[n] = Rational(binomial(n + alpha - 1, alpha - 1));
            }
            break;
    }
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries generator_series(const GeneratorKind& g, unsigned order) {
    switch (g.tag) {
        case GeneratorKind::Exp:
            return series_basic(BasicSeries::ExpX, order);
        case GeneratorKind::Geom:
            return series_basic(BasicSeries::InvOneMinusX, order);
        case GeneratorKind::HarmonicGF:
            return series_basic(BasicSeries::NegLogOneMinusX, order) *
                   series_basic(BasicSeries::InvOneMinusX, order);
        case GeneratorKind::HyperharmonicGF:
            if (g.alpha < 1)
                throw std::invalid_argument("hyperharmonic GF order must be >= 1");
            return series_basic(BasicSeries::NegLogOneMinusX, order) *
                   series_basic(BasicSeries::InvPow, order, g.alpha);
    }
    throw std::logic_error("unreachable");
}

TruncatedSeries xDr_apply(const TruncatedSeries& s, unsigned r, unsigned m) {
    if (m < r) return TruncatedSeries::zero(s.order());
    std::vector<Rational> out(s.order() + 1, Rational(0));
    BigInt rfact = factorial(r);
    for (unsigned n = 0; n <= s.order(); ++n) {
        BigInt factor = int_pow(BigInt(n), m - r) * binomial(n, r) * rfact;
        out[n] = s.coeff(n) * Rational(factor);
    }
    return TruncatedSeries(s.order(), std::move(out));
}

TruncatedSeries xDr_definitional(const TruncatedSeries& s, unsigned r,
                                 unsigned m) {
    if (m < r) throw std::invalid_argument("xDr_definitional requires m >= r");
    if (s.order() < m)
        throw std::invalid_argument("series order too small to apply (xD_r)^m");
    TruncatedSeries acc = TruncatedSeries::zero(s.order());
    TruncatedSeries deriv = s;
    for (unsigned k = 0; k <= m; ++k) {
        BigInt c = stirling2_r(m, k, r);
        if (c != 0)
            acc = acc + deriv.shifted(k).prefix(s.order()).scaled(Rational(c));
        if (k < m) deriv = deriv.derivative();
    }
    return acc;
}

namespace {

struct ClosedFormShape {
    unsigned m, r, s, alpha;  // alpha = 1 and s meaningful only where used
    unsigned beta;            // exponent of the (1-x)^-beta prefactor
    bool hyper;               // weight H^(alpha) instead of H
    bool multiple;            // convolved with 1/(1-x)^(s+1)
};

ClosedFormShape shape_of(const IdentityId& id) {
    if (const auto* h = std::get_if<HarmonicClosedForm>(&id))
        return {h->m, h->r, 0, 1, 1, false, false};
    if (const auto* h = std::get_if<HyperharmonicClosedForm>(&id))
        return {h->m, h->r, 0, h->alpha, h->alpha, true, false};
    if (const auto* h = std::get_if<MultipleSum>(&id))
        return {h->m, h->r, h->s, 1, h->s + 2, false, true};
    const auto& h = std::get<HyperharmonicMultipleSum>(id);
    return {h.m, h.r, h.s, h.alpha, h.alpha + h.s + 1, true, true};
}

void validate(const IdentityId& id, unsigned order) {
    if (const auto* t = std::get_if<Transformation>(&id)) {
        if (order < t->r)
            throw std::invalid_argument("order must be at least r");
        if (t->g.tag == GeneratorKind::HyperharmonicGF && t->g.alpha < 1)
            throw std::invalid_argument("alpha must be >= 1");
        return;
    }
    ClosedFormShape sh = shape_of(id);
    if (sh.m < sh.r) throw std::invalid_argument("requires m >= r");
    if (order < sh.r) throw std::invalid_argument("order must be at least r");
    if (sh.alpha < 1) throw std::invalid_argument("alpha must be >= 1");
}

// binom(n,r) * r! * n^(m-r), with 0^0 = 1, as a single exact integer.
BigInt diagonal_weight(unsigned n, unsigned r, unsigned m) {
    return binomial(n, r) * factorial(r) * int_pow(BigInt(n), m - r);
}

Rational weight_h(unsigned n, unsigned alpha, bool hyper) {
    return hyper ? hyperharmonic(n, alpha) : harmonic(n);
}

// P(x/(1-x)) as a series: sum_k c_k x^k / (1-x)^k, each term exact.
TruncatedSeries subst_x_over_one_minus_x(const Polynomial& p, unsigned order) {
    TruncatedSeries acc = TruncatedSeries::zero(order);
    auto deg = p.degree();
    if (!deg) return acc;
    for (unsigned k = 0; k <= *deg && k <= order; ++k) {
        if (p.coeff(k) == 0) continue;
        TruncatedSeries term =
            series_basic(BasicSeries::InvPow, order - k, k).shifted(k);
        acc = acc + term.scaled(p.coeff(k));
    }
    return acc;
}

TruncatedSeries transformation_lhs(const Transformation& t, unsigned order) {
    TruncatedSeries q = generator_series(t.g, order);
    auto deg = t.f.degree();
    std::vector<Rational> out(order + 1, Rational(0));
    for (unsigned n = 0; n <= order; ++n) {
        if (q.coeff(n) == 0) continue;
        // f_r(n) folded with r!/n^r: sum_{m>=r} p_m * n^(m-r), times
        // binom(n,r) r! — no division by n^r, so n = 0 is unproblematic.
        Rational fsum = 0;
        if (deg)
            for (unsigned m = t.r; m <= *deg; ++m)
                fsum += t.f.coeff(m) * Rational(int_pow(BigInt(n), m - t.r));
        out[n] = q.coeff(n) * Rational(binomial(n, t.r) * factorial(t.r)) * fsum;
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries transformation_rhs(const Transformation& t, unsigned order) {
    auto deg = t.f.degree();
    if (!deg || *deg < t.r) return TruncatedSeries::zero(order);
    unsigned d = static_cast<unsigned>(*deg);
    // g^(k) needs coefficients up to order after k differentiations.
    TruncatedSeries g = generator_series(t.g, order + d);
    std::vector<TruncatedSeries> gderiv{g};
    for (unsigned k = 1; k <= d; ++k)
        gderiv.push_back(gderiv.back().derivative());
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (unsigned m = t.r; m <= d; ++m) {
        if (t.f.coeff(m) == 0) continue;
        TruncatedSeries inner = TruncatedSeries::zero(order);
        for (unsigned k = 0; k <= m; ++k) {
            BigInt c = stirling2_r(m, k, t.r);
            if (c != 0)
                inner = inner +
                        gderiv[k].shifted(k).prefix(order).scaled(Rational(c));
        }
        acc = acc + inner.scaled(t.f.coeff(m));
    }
    return acc;
}

}  // namespace

TruncatedSeries lhs_weighted_series(const IdentityId& id, unsigned order) {
    validate(id, order);
    if (const auto* t = std::get_if<Transformation>(&id))
        return transformation_lhs(*t, order);
    ClosedFormShape sh = shape_of(id);
    std::vector<Rational> out(order + 1, Rational(0));
    if (!sh.multiple) {
        for (unsigned n = sh.r; n <= order; ++n)
            out[n] = Rational(diagonal_weight(n, sh.r, sh.m)) *
                     weight_h(n, sh.alpha, sh.hyper);
    } else {
        // Inner sum runs over all k <= n; binom(k,r) kills k < r.
        for (unsigned n = sh.r; n <= order; ++n) {
            Rational sum = 0;
            for (unsigned k = sh.r; k <= n; ++k)
                sum += Rational(diagonal_weight(k, sh.r, sh.m) *
                                binomial(n + sh.s - k, sh.s)) *
                       weight_h(k, sh.alpha, sh.hyper);
            out[n] = sum;
        }
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries rhs_closed_form_series(const IdentityId& id, unsigned order) {
    validate(id, order);
    if (const auto* t = std::get_if<Transformation>(&id))
        return transformation_rhs(*t, order);
    ClosedFormShape sh = shape_of(id);
    Polynomial ph = sh.hyper
                        ? hyperharmonic_r_geometric_poly(sh.m, sh.r, sh.alpha)
                        : harmonic_r_geometric_poly(sh.m, sh.r);
    Polynomial pg = sh.hyper ? general_r_geometric_poly(sh.m, sh.r, sh.alpha)
                             : r_geometric_poly(sh.m, sh.r);
    TruncatedSeries neg_log = series_basic(BasicSeries::NegLogOneMinusX, order);
    TruncatedSeries bracket = subst_x_over_one_minus_x(ph, order) +
                              subst_x_over_one_minus_x(pg, order) * neg_log;
    return series_basic(BasicSeries::InvPow, order, sh.beta) * bracket;
}

VerifyReport verify_identity(const IdentityId& id, unsigned order) {
    TruncatedSeries lhs = lhs_weighted_series(id, order);
    TruncatedSeries rhs = rhs_closed_form_series(id, order);
    auto mismatch = lhs.first_mismatch(rhs);
    return {!mismatch.has_value(), mismatch, std::move(lhs), std::move(rhs)};
}

}  // namespace rharm
