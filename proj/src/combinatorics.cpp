#include "rharm/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace rharm {

namespace {

const BigInt kZero = 0;

}  // namespace

const BigInt& StirlingTable::entry(unsigned n, unsigned k) const {
    if (n < shift_ || k > n || k < shift_) return kZero;
    ensure_rows(n);
    return rows_[n - shift_][k];
}

void StirlingTable::ensure_rows(unsigned n) const {
    // rows_[i] holds row n = shift + i, indexed by k = 0..n.
    if (rows_.empty()) {
        std::vector<BigInt> base(shift_ + 1, 0);
        base[shift_] = 1;
        rows_.push_back(std::move(base));
    }
    while (rows_.size() <= n - shift_) {
        unsigned row_n = shift_ + static_cast<unsigned>(rows_.size());
        const std::vector<BigInt>& prev = rows_.back();
        std::vector<BigInt> row(row_n + 1, 0);
        for (unsigned k = shift_; k <= row_n; ++k) {
            BigInt v = (k > 0 && k - 1 < prev.size()) ? prev[k - 1] : 0;
            if (k < prev.size()) {
                if (kind_ == StirlingKind::SecondKind)
                    v += BigInt(k) * prev[k];
                else
                    v += BigInt(row_n - 1) * prev[k];
            }
            row[k] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

namespace {

std::mutex table_mutex;

BigInt table_lookup(StirlingKind kind, unsigned n, unsigned k, unsigned r) {
    static std::map<std::pair<int, unsigned>, StirlingTable> tables;
    std::lock_guard<std::mutex> lock(table_mutex);
    auto key = std::make_pair(static_cast<int>(kind), r);
    auto it = tables.find(key);
    if (it == tables.end())
        it = tables.emplace(key, StirlingTable(kind, r)).first;
    return it->second.entry(n, k);
}

}  // namespace

BigInt stirling2_r(unsigned n, unsigned k, unsigned r) {
    return table_lookup(StirlingKind::SecondKind, n, k, r);
}

BigInt stirling1_r(unsigned n, unsigned k, unsigned r) {
    return table_lookup(StirlingKind::FirstKind, n, k, r);
}

BigInt factorial(unsigned n) {
    static std::mutex m;
    static std::vector<BigInt> cache{1};
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n)
        cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1);
    }
    return result;
}

Rational harmonic(unsigned n) {
    static std::mutex m;
    static std::vector<Rational> cache{0};
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n)
        cache.push_back(cache.back() + Rational(1, BigInt(cache.size())));
    return cache[n];
}

Rational hyperharmonic(unsigned n, unsigned alpha) {
    if (alpha == 0)
        throw std::invalid_argument("hyperharmonic order must be >= 1");
    if (alpha == 1) return harmonic(n);
    Rational sum = 0;
    for (unsigned k = 1; k <= n; ++k) sum += hyperharmonic(k, alpha - 1);
    return sum;
}

}  // namespace rharm
