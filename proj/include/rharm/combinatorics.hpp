#ifndef RHARM_COMBINATORICS_HPP
#define RHARM_COMBINATORICS_HPP

#include <cstddef>
#include <vector>

#include "rharm/rational.hpp"

namespace rharm {

enum class StirlingKind { SecondKind, FirstKind };

// Memoized triangle of r-Stirling numbers for one (kind, shift) pair.
//
// Initial conditions: entry(n, k) = 0 for n < shift, entry(shift, k) =
// [k == shift], then the second-kind recurrence
//   entry(n, k) = entry(n-1, k-1) + k * entry(n-1, k)
// or the unsigned first-kind analogue
//   entry(n, k) = entry(n-1, k-1) + (n-1) * entry(n-1, k).
// Rows grow monotonically and are never invalidated.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, unsigned shift)
        : kind_(kind), shift_(shift) {}

    StirlingKind kind() const { return kind_; }
    unsigned shift() const { return shift_; }

    // Out-of-triangle indices (k > n, k < shift, n < shift) yield 0.
    const BigInt& entry(unsigned n, unsigned k) const;

private:
    void ensure_rows(unsigned n) const;

    StirlingKind kind_;
    unsigned shift_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

// r-Stirling number of the second kind: partitions of {1..n} into k
// nonempty blocks with 1..r in distinct blocks. Cached per (kind, shift);
// safe for concurrent callers.
BigInt stirling2_r(unsigned n, unsigned k, unsigned r);

// Unsigned r-Stirling number of the first kind: permutations of {1..n}
// with k cycles and 1..r in distinct cycles.
BigInt stirling1_r(unsigned n, unsigned k, unsigned r);

BigInt factorial(unsigned n);

// Binomial coefficient; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

// H_n, with H_0 = 0.
Rational harmonic(unsigned n);

// Hyperharmonic number H_n^(alpha) by the iterated-partial-sum recurrence;
// order alpha >= 1 (alpha = 1 is plain harmonic).
Rational hyperharmonic(unsigned n, unsigned alpha);

}  // namespace rharm

#endif
