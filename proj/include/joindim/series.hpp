#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace joindim {

/// All exact quantities are 64-bit integers with checked arithmetic: an
/// operation that would wrap raises std::overflow_error instead of wrapping.
using Int = std::int64_t;

namespace detail {

[[noreturn]] inline void raise_overflow(const char* where) {
    throw std::overflow_error(std::string("arithmetic overflow in ") + where);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) raise_overflow("integer addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) raise_overflow("integer subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) raise_overflow("integer multiplication");
    return r;
}

}  // namespace detail

/// Binomial coefficient with the vanishing convention:
/// binomial(a, b) = 0 whenever b < 0 or a < b, and binomial(a, 0) = 1 for a >= 0.
inline Int binomial(Int a, Int b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    unsigned __int128 acc = 1;
    for (Int i = 1; i <= b; ++i) {
        acc *= static_cast<unsigned __int128>(a - b + i);
        acc /= static_cast<unsigned __int128>(i);
        // after the exact division, acc = binomial(a - b + i, i) <= binomial(a, b)
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<Int>::max()))
            detail::raise_overflow("binomial");
    }
    return static_cast<Int>(acc);
}

/// Integer power series truncated at a fixed highest exponent.
/// Immutable after construction; coefficients are exact (checked) integers.
class TruncatedSeries {
public:
    /// Zero series with exponents 0..trunc.
    explicit TruncatedSeries(int trunc) : coeffs_(checked_size(trunc), 0) {}

    /// Series with the given coefficients; trunc is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: coefficient vector must be nonempty");
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

    Int coeff(int k) const {
        if (k < 0 || k > trunc())
            throw std::out_of_range("TruncatedSeries::coeff: exponent " + std::to_string(k) +
                                    " outside [0, " + std::to_string(trunc()) + "]");
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static std::size_t checked_size(int trunc) {
        if (trunc < 0) throw std::invalid_argument("TruncatedSeries: trunc must be >= 0");
        return static_cast<std::size_t>(trunc) + 1;
    }

    std::vector<Int> coeffs_;
};

/// Convolution product. Both operands must share the same truncation order.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("mul: truncation orders differ (" + std::to_string(a.trunc()) +
                                    " vs " + std::to_string(b.trunc()) + ")");
    const int n = a.trunc();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        const Int ai = a.coeffs()[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            const Int bj = b.coeffs()[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            auto& ck = c[static_cast<std::size_t>(i + j)];
            ck = detail::checked_add(ck, detail::checked_mul(ai, bj));
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

/// 1/(1-t)^order: coefficient at k is binomial(order - 1 + k, k).
inline TruncatedSeries geometric(int order, int trunc) {
    if (order < 1) throw std::invalid_argument("geometric: order must be >= 1");
    if (trunc < 0) throw std::invalid_argument("geometric: trunc must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(trunc) + 1);
    for (int k = 0; k <= trunc; ++k)
        c[static_cast<std::size_t>(k)] = binomial(Int{order} - 1 + k, k);
    return TruncatedSeries(std::move(c));
}

/// P_k = 1 + t + ... + t^k.
inline TruncatedSeries p_k(int k, int trunc) {
    if (k < 0) throw std::invalid_argument("p_k: k must be >= 0");
    if (trunc < 0) throw std::invalid_argument("p_k: trunc must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(trunc) + 1, 0);
    for (int i = 0; i <= std::min(k, trunc); ++i) c[static_cast<std::size_t>(i)] = 1;
    return TruncatedSeries(std::move(c));
}

/// 1 - t^a; the identity series when a > trunc.
inline TruncatedSeries one_minus_power(int a, int trunc) {
    if (a < 1) throw std::invalid_argument("one_minus_power: a must be >= 1");
    if (trunc < 0) throw std::invalid_argument("one_minus_power: trunc must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(trunc) + 1, 0);
    c[0] = 1;
    if (a <= trunc) c[static_cast<std::size_t>(a)] = -1;
    return TruncatedSeries(std::move(c));
}

/// base^exp by repeated multiplication; exp >= 0.
inline TruncatedSeries power(const TruncatedSeries& base, int exp) {
    if (exp < 0) throw std::invalid_argument("power: exp must be >= 0");
    std::vector<Int> one(static_cast<std::size_t>(base.trunc()) + 1, 0);
    one[0] = 1;
    TruncatedSeries acc{std::move(one)};
    for (int i = 0; i < exp; ++i) acc = mul(acc, base);
    return acc;
}

/// prod_i (1 - t^{degs_i}) / (1-t)^{n+1}: the Hilbert series of the quotient by
/// a regular sequence with the given degrees in n+1 variables.
inline TruncatedSeries ci_quotient_series(int n, const std::vector<int>& degs, int trunc) {
    if (n < 1) throw std::invalid_argument("ci_quotient_series: n must be >= 1");
    TruncatedSeries s = geometric(n + 1, trunc);
    for (int a : degs) s = mul(s, one_minus_power(a, trunc));
    return s;
}

/// The same coefficient by subset inclusion-exclusion over the degrees:
/// sum over I of (-1)^{#I} binomial(n + e - sum_{i in I} degs_i, n),
/// with the vanishing convention absorbing negative upper arguments.
inline Int inclusion_exclusion_coeff(int n, int e, const std::vector<int>& degs) {
    if (n < 1) throw std::invalid_argument("inclusion_exclusion_coeff: n must be >= 1");
    if (e < 0) throw std::invalid_argument("inclusion_exclusion_coeff: e must be >= 0");
    for (int a : degs)
        if (a < 1) throw std::invalid_argument("inclusion_exclusion_coeff: degrees must be >= 1");
    if (degs.size() > 62)
        throw std::invalid_argument("inclusion_exclusion_coeff: too many degrees");
    Int total = 0;
    const std::uint64_t subsets = std::uint64_t{1} << degs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Int upper = Int{n} + e;
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (mask >> i & 1) upper -= degs[i];
        const Int term = binomial(upper, n);
        const bool odd = __builtin_popcountll(mask) & 1;
        total = detail::checked_add(total, odd ? -term : term);
    }
    return total;
}

}  // namespace joindim
