#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "joindim/formulas.hpp"

namespace joindim {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);  // p prime, a != 0
}

/// Uniform draw from [0, bound) by rejection; fully determined by the
/// generator's output sequence, so results are identical across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t residue = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - residue;
    for (;;) {
        const std::uint64_t u = rng();
        if (u <= limit) return u % bound;
    }
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v == q) return true;
        if (v % q == 0) return false;
    }
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::pow_mod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline void require_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace detail

/// Monomials of a fixed total degree in n+1 variables, enumerated by
/// lexicographically decreasing exponent tuple (e_0, ..., e_n); index 0 is
/// x_0^deg. This order is fixed so that matrices and seeded runs reproduce
/// bit-exactly.
class MonomialBasis {
public:
    MonomialBasis(int n, int deg) : n_(n), deg_(deg) {
        if (n < 0 || deg < 0) throw std::invalid_argument("MonomialBasis: n, deg must be >= 0");
        std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
        build(cur, 0, deg);
    }

    int n() const { return n_; }
    int deg() const { return deg_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<int>& tuple(std::size_t i) const { return tuples_[i]; }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }

    /// Rank of an exponent tuple in the enumeration (combinatorial, no lookup table).
    std::size_t index_of(const std::vector<int>& e) const {
        std::size_t idx = 0;
        int rem = deg_;
        for (int j = 0; j < n_; ++j) {  // the last exponent is forced by the total degree
            const int free_after = n_ - j;  // positions j+1..n_
            for (int v = rem; v > e[static_cast<std::size_t>(j)]; --v)
                idx += static_cast<std::size_t>(binomial(rem - v + free_after - 1, free_after - 1));
            rem -= e[static_cast<std::size_t>(j)];
        }
        return idx;
    }

private:
    void build(std::vector<int>& cur, int pos, int rem) {
        if (pos == n_) {
            cur[static_cast<std::size_t>(pos)] = rem;
            tuples_.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            build(cur, pos + 1, rem - v);
        }
    }

    int n_;
    int deg_;
    std::vector<std::vector<int>> tuples_;
};

/// Homogeneous form of fixed degree over F_p, coefficients stored densely in
/// the MonomialBasis(n, deg) order.
struct DenseForm {
    int n = 0;
    int deg = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> coeffs;
};

/// Form with every coefficient drawn independently and uniformly from F_p.
/// Coefficients are consumed from `rng` in basis order.
inline DenseForm sample_form(int n, int deg, std::uint64_t p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_form: n must be >= 1");
    if (deg < 1) throw std::invalid_argument("sample_form: deg must be >= 1");
    detail::require_odd_prime(p);
    const MonomialBasis basis(n, deg);
    DenseForm f{n, deg, p, std::vector<std::uint64_t>(basis.size())};
    for (auto& c : f.coeffs) c = detail::uniform_below(rng, p);
    return f;
}

/// Product of two forms over the same field (test/diagnostic helper).
inline DenseForm multiply(const DenseForm& f, const DenseForm& g) {
    if (f.n != g.n || f.p != g.p)
        throw std::invalid_argument("multiply: mismatched variable count or field");
    const MonomialBasis bf(f.n, f.deg), bg(g.n, g.deg), bout(f.n, f.deg + g.deg);
    DenseForm out{f.n, f.deg + g.deg, f.p, std::vector<std::uint64_t>(bout.size(), 0)};
    std::vector<int> sum(static_cast<std::size_t>(f.n) + 1);
    for (std::size_t i = 0; i < bf.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < bg.size(); ++j) {
            if (g.coeffs[j] == 0) continue;
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] = bf.tuple(i)[k] + bg.tuple(j)[k];
            auto& c = out.coeffs[bout.index_of(sum)];
            c = (c + detail::mul_mod(f.coeffs[i], g.coeffs[j], f.p)) % f.p;
        }
    }
    return out;
}

/// Dense matrix over F_p (p an odd prime), used for Macaulay rank computations.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
        detail::require_odd_prime(p);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t p() const { return p_; }

    std::uint64_t get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % p_; }

    /// Rank by Gaussian elimination with row pivoting (on a scratch copy).
    std::size_t rank() const {
        std::vector<std::uint64_t> a = data_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && a[pivot * cols_ + col] == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t c = col; c < cols_; ++c)
                    std::swap(a[pivot * cols_ + c], a[rank * cols_ + c]);
            const std::uint64_t inv = detail::inv_mod(a[rank * cols_ + col], p_);
            for (std::size_t c = col; c < cols_; ++c)
                a[rank * cols_ + c] = detail::mul_mod(a[rank * cols_ + c], inv, p_);
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                const std::uint64_t factor = a[r * cols_ + col];
                if (factor == 0) continue;
                for (std::size_t c = col; c < cols_; ++c) {
                    const std::uint64_t sub = detail::mul_mod(factor, a[rank * cols_ + c], p_);
                    a[r * cols_ + c] = (a[r * cols_ + c] + p_ - sub) % p_;
                }
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> data_;
};

/// Dimension over F_p of the degree-d graded piece of the ideal generated by
/// the given forms: the rank of the matrix whose rows are m*g for every
/// generator g and every monomial m of degree d - deg(g), with columns indexed
/// by the degree-d monomials.
inline Int ideal_degree_dim(int n, int d, const std::vector<DenseForm>& generators,
                            std::uint64_t p) {
    if (n < 1) throw std::invalid_argument("ideal_degree_dim: n must be >= 1");
    if (d < 0) throw std::invalid_argument("ideal_degree_dim: d must be >= 0");
    detail::require_odd_prime(p);
    for (const auto& g : generators) {
        if (g.n != n) throw std::invalid_argument("ideal_degree_dim: generator in wrong variable count");
        if (g.p != p) throw std::invalid_argument("ideal_degree_dim: generator over wrong field");
        if (g.deg > d)
            throw std::invalid_argument("ideal_degree_dim: generator degree " +
                                        std::to_string(g.deg) + " exceeds d = " + std::to_string(d));
    }

    const MonomialBasis cols(n, d);
    std::size_t rows = 0;
    for (const auto& g : generators) rows += MonomialBasis(n, d - g.deg).size();
    if (rows == 0) return 0;

    PrimeFieldMatrix mat(rows, cols.size(), p);
    std::size_t row = 0;
    std::vector<int> sum(static_cast<std::size_t>(n) + 1);
    for (const auto& g : generators) {
        const MonomialBasis multipliers(n, d - g.deg);
        const MonomialBasis support(n, g.deg);
        for (std::size_t mi = 0; mi < multipliers.size(); ++mi, ++row) {
            const auto& m = multipliers.tuple(mi);
            for (std::size_t qi = 0; qi < support.size(); ++qi) {
                if (g.coeffs[qi] == 0) continue;
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = m[k] + support.tuple(qi)[k];
                mat.set(row, cols.index_of(sum), g.coeffs[qi]);
            }
        }
    }
    return static_cast<Int>(mat.rank());
}

/// Hilbert-function criterion: true iff, for every e <= up_to_degree, the
/// sampled forms cut out exactly the graded dimensions a regular sequence of
/// their degrees would. Certifies that sampled generators behave generically.
inline bool regular_sequence_check(int n, const std::vector<DenseForm>& forms, std::uint64_t p,
                                   int up_to_degree) {
    if (static_cast<int>(forms.size()) > n)
        throw std::invalid_argument("regular_sequence_check: requires #forms <= n");
    detail::require_odd_prime(p);
    std::vector<int> degs;
    for (const auto& f : forms) degs.push_back(f.deg);
    for (int e = 0; e <= up_to_degree; ++e) {
        std::vector<DenseForm> active;
        for (const auto& f : forms)
            if (f.deg <= e) active.push_back(f);
        const Int got = ideal_degree_dim(n, e, active, p);
        const Int expected =
            detail::checked_sub(binomial(Int{n} + e, e), ci_quotient_series(n, degs, e).coeff(e));
        if (got != expected) return false;
    }
    return true;
}

/// One oracle measurement of a join dimension against the formula bound.
struct DimensionReport {
    explicit DimensionReport(JoinProfile p) : profile(std::move(p)) {}

    JoinProfile profile;
    Int formula_bound = 0;
    std::optional<Int> hl_value;  // all-ones profiles only
    Int oracle_value = 0;
    int trials = 0;
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    bool equality = false;        // oracle_value == formula_bound
    bool bound_violated = false;  // oracle_value > formula_bound: hard invariant failure
};

/// Measure dim J_{a_1,...,a_r} by Terracini's lemma: sample g_i of degree a_i
/// and h_i of degree d-a_i, take dim (g_1,h_1,...,g_r,h_r)_d - 1, and keep the
/// maximum over `trials` independent samples. Forms are drawn g-then-h in
/// profile order, trial by trial, from a single mt19937_64 stream seeded with
/// `seed`; identical inputs give identical reports.
inline DimensionReport terracini_join_dim(const JoinProfile& profile, std::uint64_t p, int trials,
                                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("terracini_join_dim: trials must be >= 1");
    detail::require_odd_prime(p);

    DimensionReport report(profile);
    report.formula_bound = join_dim_upper_bound(profile);
    report.trials = trials;
    report.p = p;
    report.seed = seed;
    if (profile.all_ones())
        report.hl_value = detail::checked_sub(
            detail::checked_sub(binomial(Int{profile.n()} + profile.d(), profile.d()), 1),
            hl_codim(profile.d(), profile.n(), profile.r()));

    std::mt19937_64 rng(seed);
    Int best = -1;
    for (int t = 0; t < trials; ++t) {
        std::vector<DenseForm> gens;
        gens.reserve(2 * static_cast<std::size_t>(profile.r()));
        for (int a : profile.degs()) {
            gens.push_back(sample_form(profile.n(), a, p, rng));
            gens.push_back(sample_form(profile.n(), profile.d() - a, p, rng));
        }
        best = std::max(best, ideal_degree_dim(profile.n(), profile.d(), gens, p) - 1);
    }
    report.oracle_value = best;
    report.equality = report.oracle_value == report.formula_bound;
    report.bound_violated = report.oracle_value > report.formula_bound;
    return report;
}

/// Batch oracle run over every sorted profile with 1 <= r <= max_r.
/// `passed` requires no bound violations anywhere and, on each all-ones
/// profile with r < generic_slice_rank, oracle = bound = Hochster-Laksov value.
struct CrossCheckResult {
    std::vector<DimensionReport> reports;
    bool passed = true;
};

/// Profile i in enumeration order receives the sub-seed `seed + i`.
inline CrossCheckResult cross_check(int d, int n, int max_r, std::uint64_t p, int trials,
                                    std::uint64_t seed) {
    if (d < 3) throw std::invalid_argument("cross_check: requires d >= 3");
    if (max_r < 1 || max_r >= n)
        throw std::invalid_argument("cross_check: requires 1 <= max_r < n");
    const Int slrk = generic_slice_rank(d, n);
    CrossCheckResult result;
    std::uint64_t index = 0;
    for (int r = 1; r <= max_r; ++r) {
        for (const auto& degs : degree_profiles(d, r)) {
            const JoinProfile profile(d, n, degs);
            DimensionReport rep = terracini_join_dim(profile, p, trials, seed + index);
            ++index;
            if (rep.bound_violated) result.passed = false;
            if (profile.all_ones() && r < slrk &&
                !(rep.equality && rep.hl_value && *rep.hl_value == rep.formula_bound))
                result.passed = false;
            result.reports.push_back(std::move(rep));
        }
    }
    return result;
}

}  // namespace joindim
