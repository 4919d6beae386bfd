#include "rharm/verify.hpp"

#include <functional>
#include <sstream>

#include "rharm/combinatorics.hpp"
#include "rharm/families.hpp"
#include "rharm/series.hpp"

namespace rharm {

BigInt count_partitions_r(unsigned n, unsigned k, unsigned r) {
    if (r > n) return 0;
    BigInt count = 0;
    // Restricted-growth placement of elements 1..n; blocks holding an
    // element <= r are marked so that 1..r stay pairwise separated.
    std::vector<bool> marked;
    std::function<void(unsigned, unsigned)> place = [&](unsigned elem,
                                                        unsigned used) {
        if (elem > n) {
            if (used == k) ++count;
            return;
        }
        bool restricted = elem <= r;
        for (unsigned b = 0; b < used; ++b) {
            if (restricted && marked[b]) continue;
            bool was = marked[b];
            if (restricted) marked[b] = true;
            place(elem + 1, used);
            marked[b] = was;
        }
        if (used < k) {  // open a new block (never more than k)
            marked.push_back(restricted);
            place(elem + 1, used + 1);
            marked.pop_back();
        }
    };
    place(1, 0);
    return count;
}

BigInt count_cycle_permutations_r(unsigned n, unsigned k, unsigned r) {
    if (r > n) return 0;
    BigInt count = 0;
    // Insert element i either as a new singleton cycle or directly after
    // one of the i-1 placed elements. cycle_of tracks cycle membership so
    // the 1..r constraint can be enforced as we go.
    std::vector<unsigned> cycle_of;   // element index -> cycle id
    std::vector<bool> cycle_marked;   // cycle id -> holds an element <= r
    std::function<void(unsigned, unsigned)> insert = [&](unsigned elem,
                                                         unsigned cycles) {
        if (elem > n) {
            if (cycles == k) ++count;
            return;
        }
        bool restricted = elem <= r;
        // new cycle
        cycle_of.push_back(cycles);
        cycle_marked.push_back(restricted);
        insert(elem + 1, cycles + 1);
        cycle_marked.pop_back();
        cycle_of.pop_back();
        // after an existing element
        for (unsigned j = 0; j + 1 < elem; ++j) {
            unsigned c = cycle_of[j];
            if (restricted && cycle_marked[c]) continue;
            bool was = cycle_marked[c];
            if (restricted) cycle_marked[c] = true;
            cycle_of.push_back(c);
            insert(elem + 1, cycles);
            cycle_of.pop_back();
            cycle_marked[c] = was;
        }
    };
    insert(1, 0);
    return count;
}

bool SuiteResult::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string name) { result_.name = std::move(name); }

    void check(const std::string& name, bool pass,
               const std::string& detail = "") {
        result_.checks.push_back({name, pass, pass ? "" : detail});
    }

    template <typename T>
    void check_eq(const std::string& name, const T& got, const T& want) {
        std::ostringstream os;
        if (!(got == want)) os << "got " << got << ", want " << want;
        check(name, got == want, os.str());
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string tag(const std::string& base,
                std::initializer_list<unsigned> params) {
    std::ostringstream os;
    os << base;
    char sep = '(';
    for (unsigned p : params) {
        os << sep << p;
        sep = ',';
    }
    os << ')';
    return os.str();
}

}  // namespace

SuiteResult run_triangles_suite(const VerifyOptions& opts) {
    SuiteBuilder suite("triangles");

    auto s2 = [&](unsigned n, unsigned k, unsigned r) {
        BigInt v = stirling2_r(n, k, r);
        if (opts.corrupt_s2 && opts.corrupt_s2->n == n &&
            opts.corrupt_s2->k == k && opts.corrupt_s2->r == r)
            v += 1;
        return v;
    };

    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= n; ++r) {
            bool ok2 = true, ok1 = true;
            std::string d2, d1;
            for (unsigned k = 0; k <= n; ++k) {
                BigInt got2 = s2(n, k, r);
                BigInt want2 = count_partitions_r(n, k, r);
                if (got2 != want2 && ok2) {
                    ok2 = false;
                    d2 = "first mismatch at k=" + std::to_string(k) + ": got " +
                         got2.str() + ", enumeration " + want2.str();
                }
                BigInt got1 = stirling1_r(n, k, r);
                BigInt want1 = count_cycle_permutations_r(n, k, r);
                if (got1 != want1 && ok1) {
                    ok1 = false;
                    d1 = "first mismatch at k=" + std::to_string(k) + ": got " +
                         got1.str() + ", enumeration " + want1.str();
                }
            }
            suite.check(tag("s2 enumeration", {n, r}), ok2, d2);
            suite.check(tag("s1 enumeration", {n, r}), ok1, d1);
        }

    // Bell numbers as shift-0 second-kind row sums.
    {
        const BigInt bell[] = {1, 1, 2, 5, 15};
        bool ok = true;
        for (unsigned n = 0; n <= 4; ++n) {
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += stirling2_r(n, k, 0);
            if (sum != bell[n]) ok = false;
        }
        suite.check("shift-0 row sums are Bell numbers", ok);
    }

    // First-kind bridge to harmonic numbers.
    for (unsigned k = 0; k <= 12; ++k)
        suite.check_eq(tag("stirling1 harmonic bridge", {k}),
                       Rational(stirling1_r(k + 1, 2, 0)),
                       Rational(factorial(k)) * harmonic(k));

    // First-kind r-version bridge to hyperharmonic numbers.
    for (unsigned r = 1; r <= 5; ++r)
        for (unsigned k = 0; k <= 10; ++k)
            suite.check_eq(tag("stirling1 hyperharmonic bridge", {k, r}),
                           Rational(stirling1_r(k + r, r + 1, r)),
                           Rational(factorial(k)) * hyperharmonic(k, r));

    // Hyperharmonic recurrence vs binomial closed form.
    for (unsigned alpha = 1; alpha <= 6; ++alpha)
        for (unsigned n = 0; n <= 30; ++n)
            suite.check_eq(
                tag("hyperharmonic closed form", {n, alpha}),
                hyperharmonic(n, alpha),
                Rational(binomial(n + alpha - 1, alpha - 1)) *
                    (harmonic(n + alpha - 1) - harmonic(alpha - 1)));

    return suite.take();
}

SuiteResult run_families_suite() {
    SuiteBuilder suite("families");

    for (unsigned n = 0; n <= 8; ++n)
        suite.check(tag("general geometric alpha=1 reduction", {n}),
                    general_geometric_poly(n, 1) == geometric_poly(n));

    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned n = 0; n <= 6; ++n) {
            suite.check(tag("hyperharmonic r-geometric alpha=1", {n, r}),
                        hyperharmonic_r_geometric_poly(n, r, 1) ==
                            harmonic_r_geometric_poly(n, r));
            suite.check(tag("general r-geometric alpha=1", {n, r}),
                        general_r_geometric_poly(n, r, 1) ==
                            r_geometric_poly(n, r));
            suite.check(tag("hyperharmonic r-exponential alpha=1", {n, r}),
                        hyperharmonic_r_exponential_poly(n, r, 1) ==
                            harmonic_r_exponential_poly(n, r));
        }

    // Families vanish identically below the shift.
    for (unsigned r = 1; r <= 5; ++r)
        for (unsigned n = 0; n < r; ++n) {
            bool ok = r_exponential_poly(n, r).is_zero() &&
                      r_geometric_poly(n, r).is_zero() &&
                      harmonic_r_geometric_poly(n, r).is_zero() &&
                      harmonic_r_exponential_poly(n, r).is_zero() &&
                      hyperharmonic_r_geometric_poly(n, r, 2).is_zero() &&
                      general_r_geometric_poly(n, r, 2).is_zero() &&
                      hyperharmonic_r_exponential_poly(n, r, 2).is_zero();
            suite.check(tag("vanishing below shift", {n, r}), ok);
        }

    // Borel transform pairs each exponential family with its geometric one.
    for (unsigned n = 0; n <= 8; ++n)
        suite.check(tag("borel exp->geom", {n}),
                    borel_transform(exponential_poly(n)) == geometric_poly(n));
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned n = 0; n <= 8; ++n) {
            suite.check(tag("borel r-exp->r-geom", {n, r}),
                        borel_transform(r_exponential_poly(n, r)) ==
                            r_geometric_poly(n, r));
            suite.check(tag("borel harmonic", {n, r}),
                        borel_transform(harmonic_r_exponential_poly(n, r)) ==
                            harmonic_r_geometric_poly(n, r));
            for (unsigned alpha = 1; alpha <= 3; ++alpha)
                suite.check(
                    tag("borel hyperharmonic", {n, r, alpha}),
                    borel_transform(
                        hyperharmonic_r_exponential_poly(n, r, alpha)) ==
                        hyperharmonic_r_geometric_poly(n, r, alpha));
        }

    return suite.take();
}

SuiteResult run_bridges_suite() {
    SuiteBuilder suite("bridges");

    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned n = 0; n <= 8; ++n) {
            // r-exponential from classical exponential polynomials.
            Polynomial sum;
            for (unsigned k = 0; k <= n; ++k)
                sum = sum + exponential_poly(k).scaled(Rational(
                                binomial(n, k) * int_pow(BigInt(r), n - k)));
            suite.check(tag("r-exp poly bridge", {n, r}),
                        r_exponential_poly(n + r, r) == sum.shifted(r));
            suite.check_eq(tag("r-exp number bridge", {n, r}),
                           r_exponential_number(n + r, r), sum.eval(1));

            // r-geometric from general geometric polynomials.
            Polynomial gsum;
            for (unsigned k = 0; k <= n; ++k)
                gsum = gsum +
                       general_geometric_poly(k, r + 1)
                           .scaled(Rational(binomial(n, k) *
                                            int_pow(BigInt(r), n - k)));
            gsum = gsum.scaled(Rational(factorial(r)));
            suite.check(tag("r-geom poly bridge", {n, r}),
                        r_geometric_poly(n + r, r) == gsum.shifted(r));
            suite.check_eq(tag("r-geom number bridge", {n, r}),
                           r_geometric_number(n + r, r), gsum.eval(1));

            // Offset bridges to the Mezo / Nyul variants.
            suite.check(tag("Mezo offset bridge", {n, r}),
                        r_exponential_poly(n + r, r) ==
                            r_bell_mezo_poly(n, r).shifted(r));
            suite.check(tag("Nyul offset bridge", {n, r}),
                        r_geometric_poly(n + r, r) ==
                            r_fubini_nyul_poly(n, r).shifted(r));
        }

    for (unsigned n = 0; n <= 8; ++n) {
        // Classical recurrences via binomial sums.
        Polynomial esum, gsum15, g2sum;
        Rational gnum15 = 0, g2num = 0;
        for (unsigned k = 0; k <= n; ++k) {
            esum = esum + exponential_poly(k).scaled(Rational(binomial(n, k)));
            gsum15 =
                gsum15 + geometric_poly(k).scaled(Rational(binomial(n + 1, k)));
            g2sum = g2sum +
                    general_geometric_poly(k, 2).scaled(Rational(binomial(n, k)));
            g2num += Rational(binomial(n, k)) * general_geometric_poly(k, 2).eval(1);
            gnum15 += Rational(binomial(n + 1, k)) * geometric_poly(k).eval(1);
        }
        suite.check(tag("exp Euler-Seidel poly", {n}),
                    exponential_poly(n + 1) == esum.shifted(1));
        suite.check_eq(tag("exp Euler-Seidel number", {n}),
                       exponential_poly(n + 1).eval(1), esum.eval(1));
        suite.check(tag("geom Euler-Seidel poly", {n}),
                    geometric_poly(n + 1) == gsum15.shifted(1));
        suite.check(tag("geom via general-geometric poly", {n}),
                    geometric_poly(n + 1) == g2sum.shifted(1));
        suite.check_eq(tag("geom via general-geometric number", {n}),
                       geometric_poly(n + 1).eval(1), g2num);
        // F_n = sum_{k<n} binom(n,k) F_k
        Rational fsum = 0;
        for (unsigned k = 0; k + 1 <= n; ++k)
            fsum += Rational(binomial(n, k)) * geometric_poly(k).eval(1);
        if (n >= 1)
            suite.check_eq(tag("geom number recurrence", {n}),
                           geometric_poly(n).eval(1), fsum);
    }

    // First-kind re-expressions of the (hyper)harmonic r-geometric family.
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned alpha = 1; alpha <= 3; ++alpha)
                suite.check(tag("first-kind re-expression", {n, r, alpha}),
                            first_kind_reexpression_check(n, r, alpha));

    return suite.take();
}

namespace {

const std::vector<GeneratorKind>& generator_grid() {
    static const std::vector<GeneratorKind> kinds = {
        {GeneratorKind::Exp, 1},
        {GeneratorKind::Geom, 1},
        {GeneratorKind::HarmonicGF, 1},
        {GeneratorKind::HyperharmonicGF, 2},
    };
    return kinds;
}

std::string generator_name(const GeneratorKind& g) {
    switch (g.tag) {
        case GeneratorKind::Exp: return "exp";
        case GeneratorKind::Geom: return "geom";
        case GeneratorKind::HarmonicGF: return "harmonic";
        case GeneratorKind::HyperharmonicGF:
            return "hyperharmonic" + std::to_string(g.alpha);
    }
    return "?";
}

}  // namespace

SuiteResult run_operators_suite() {
    SuiteBuilder suite("operators");
    const unsigned order = 12;
    for (const GeneratorKind& g : generator_grid()) {
        TruncatedSeries s = generator_series(g, order);
        for (unsigned r = 0; r <= 3; ++r)
            for (unsigned m = r; m <= 6; ++m)
                suite.check(
                    generator_name(g) + " " + tag("xDr diagonal vs definitional", {r, m}),
                    xDr_apply(s, r, m) == xDr_definitional(s, r, m));
    }
    return suite.take();
}

SuiteResult run_closed_forms_suite() {
    SuiteBuilder suite("closed_forms");

    // Transformation formula on monomials; r = 0 is the classical case.
    for (const GeneratorKind& g : generator_grid())
        for (unsigned r = 0; r <= 3; ++r)
            for (unsigned m = r; m <= 6; ++m) {
                VerifyReport rep = verify_identity(
                    Transformation{g, Polynomial::monomial(m), r}, 20);
                suite.check(generator_name(g) + " " +
                                tag("transformation", {r, m}),
                            rep.equal);
            }

    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned m = r; m <= r + 3; ++m)
            suite.check(tag("harmonic closed form", {m, r}),
                        verify_identity(HarmonicClosedForm{m, r}, 30).equal);

    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned m = r; m <= r + 2; ++m)
                suite.check(
                    tag("hyperharmonic closed form", {m, r, alpha}),
                    verify_identity(HyperharmonicClosedForm{m, r, alpha}, 30)
                        .equal);

    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned s = 0; s <= 2; ++s)
            for (unsigned m = r; m <= r + 2; ++m) {
                suite.check(tag("multiple sum", {m, r, s}),
                            verify_identity(MultipleSum{m, r, s}, 30).equal);
                for (unsigned alpha = 1; alpha <= 3; ++alpha)
                    suite.check(
                        tag("hyperharmonic multiple sum", {m, r, s, alpha}),
                        verify_identity(
                            HyperharmonicMultipleSum{m, r, s, alpha}, 30)
                            .equal);
            }

    // Binomial-weighted inner sum vs brute-force iteration over chains
    // 0 <= k_1 <= ... <= k_{s+1} <= n.
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned s = 0; s <= 2; ++s)
            for (unsigned m = r; m <= r + 2; ++m) {
                TruncatedSeries lhs =
                    lhs_weighted_series(MultipleSum{m, r, s}, 20);
                bool ok = true;
                std::string detail;
                for (unsigned n = 0; n <= 20 && ok; ++n) {
                    Rational nested = 0;
                    // k_1 ranges first; the nondecreasing extensions
                    // k_2 <= ... <= k_{s+1} in [k_1, n] are enumerated by
                    // recursion.
                    std::function<Rational(unsigned, unsigned)> extend =
                        [&](unsigned depth, unsigned lo) -> Rational {
                        if (depth == 0) return Rational(1);
                        Rational acc = 0;
                        for (unsigned k = lo; k <= n; ++k)
                            acc += extend(depth - 1, k);
                        return acc;
                    };
                    for (unsigned k1 = 0; k1 <= n; ++k1) {
                        Rational weight =
                            Rational(binomial(k1, r) * factorial(r) *
                                     int_pow(BigInt(k1), m - r)) *
                            harmonic(k1);
                        if (weight != 0) nested += weight * extend(s, k1);
                    }
                    if (nested != lhs.coeff(n)) {
                        ok = false;
                        detail = tag("mismatch at n=", {n});
                    }
                }
                suite.check(tag("multiple sum nested chains", {m, r, s}), ok,
                            detail);
            }

    return suite.take();
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
    return {run_triangles_suite(opts), run_families_suite(),
            run_bridges_suite(), run_operators_suite(),
            run_closed_forms_suite()};
}

}  // namespace rharm
