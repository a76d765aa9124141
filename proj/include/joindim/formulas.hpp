#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "joindim/series.hpp"

namespace joindim {

/// Degree profile (a_1 <= ... <= a_r) of a join of factor loci inside the
/// space of degree-d forms in n+1 variables. Entries lie in [1, floor(d/2)];
/// the constructor sorts and validates.
class JoinProfile {
public:
    JoinProfile(int d, int n, std::vector<int> degs)
        : d_(d), n_(n), degs_(std::move(degs)) {
        if (d_ < 2) throw std::invalid_argument("JoinProfile: d must be >= 2");
        if (n_ < 1) throw std::invalid_argument("JoinProfile: n must be >= 1");
        if (degs_.empty()) throw std::invalid_argument("JoinProfile: degree list must be nonempty");
        std::sort(degs_.begin(), degs_.end());
        for (int a : degs_)
            if (a < 1 || 2 * a > d_)
                throw std::invalid_argument("JoinProfile: degrees must lie in [1, floor(d/2)], got " +
                                            std::to_string(a) + " for d = " + std::to_string(d_));
    }

    int d() const { return d_; }
    int n() const { return n_; }
    const std::vector<int>& degs() const { return degs_; }
    int r() const { return static_cast<int>(degs_.size()); }

    /// Multiplicity of j among the degrees.
    int ell(int j) const {
        return static_cast<int>(std::count(degs_.begin(), degs_.end(), j));
    }

    /// Multiplicity of d/2; identically 0 for odd d (d/2 is not an integer).
    int ell_half() const { return d_ % 2 == 0 ? ell(d_ / 2) : 0; }

    /// n - (number of degree-1 entries).
    int m() const { return n_ - ell(1); }

    bool all_ones() const { return degs_.back() == 1; }

    bool operator==(const JoinProfile&) const = default;

private:
    int d_;
    int n_;
    std::vector<int> degs_;
};

/// Slice rank of the general degree-d form in n+1 variables:
/// the least r >= 0 with r(n+1-r) >= binomial(n-r+d, d). Always <= n.
inline Int generic_slice_rank(int d, int n) {
    if (d < 3) throw std::invalid_argument("generic_slice_rank: requires d >= 3");
    if (n < 1) throw std::invalid_argument("generic_slice_rank: requires n >= 1");
    for (Int r = 0; r <= n; ++r) {
        const Int lhs = detail::checked_mul(r, Int{n} + 1 - r);
        bool satisfied;
        try {
            satisfied = lhs >= binomial(Int{n} - r + d, d);
        } catch (const std::overflow_error&) {
            satisfied = false;  // binomial exceeds the Int range, so certainly > lhs
        }
        if (satisfied) return r;
    }
    throw std::logic_error("generic_slice_rank: scan exhausted");  // r = n always satisfies
}

/// Codimension of the r-th secant of the rank-one factor locus:
/// binomial(n-r+d, d) - r(n+1-r), valid (and positive) for 1 <= r < generic_slice_rank.
inline Int sigma_r_x1_codim(int d, int n, int r) {
    if (d < 3) throw std::invalid_argument("sigma_r_x1_codim: requires d >= 3");
    if (r < 1 || r >= generic_slice_rank(d, n))
        throw std::invalid_argument("sigma_r_x1_codim: requires 1 <= r < generic_slice_rank(d, n)");
    return detail::checked_sub(binomial(Int{n} - r + d, d),
                               detail::checked_mul(r, Int{n} + 1 - r));
}

/// Hochster-Laksov codimension count: coeff_d of (1-t^{d-1})^r / (1-t)^{n+1-r}.
/// Coincides with sigma_r_x1_codim for r < generic_slice_rank; may be negative
/// beyond it, where the count carries no geometric meaning.
inline Int hl_codim(int d, int n, int r) {
    if (d < 3) throw std::invalid_argument("hl_codim: requires d >= 3");
    if (r < 1 || r > n) throw std::invalid_argument("hl_codim: requires 1 <= r <= n");
    return mul(geometric(n + 1 - r, d), power(one_minus_power(d - 1, d), r)).coeff(d);
}

/// Dimension of the family of codimension-r complete intersections of the
/// given degrees in P^n: sum_j coeff_{a_j} of prod_i (1-t^{a_i}) / (1-t)^{n+1}.
inline Int ci_dimension(int n, const std::vector<int>& degs) {
    if (degs.empty() || static_cast<int>(degs.size()) > n)
        throw std::invalid_argument("ci_dimension: requires 1 <= #degs <= n");
    int trunc = 0;
    for (int a : degs) trunc = std::max(trunc, a);
    const TruncatedSeries s = ci_quotient_series(n, degs, trunc);
    Int total = 0;
    for (int a : degs) total = detail::checked_add(total, s.coeff(a));
    return total;
}

/// coeff_d of prod_i (1-t^{a_i})(1-t^{d-a_i}) / (1-t)^{n+1}.
inline Int join_series_coeff(const JoinProfile& p) {
    TruncatedSeries s = geometric(p.n() + 1, p.d());
    for (int a : p.degs()) {
        s = mul(s, one_minus_power(a, p.d()));
        s = mul(s, one_minus_power(p.d() - a, p.d()));
    }
    return s.coeff(p.d());
}

/// The profile objective F: join_series_coeff - binomial(ell_{d/2}, 2).
/// For d >= 5 it is strictly minimal, for fixed (d, n, r), at the all-ones profile.
inline Int f_value(const JoinProfile& p) {
    return detail::checked_sub(join_series_coeff(p), binomial(p.ell_half(), 2));
}

/// Upper bound on the projective dimension of the join with the given profile:
/// binomial(n+d, d) - f_value - 1. Requires r < n; attained for all-ones
/// profiles with r < generic_slice_rank.
inline Int join_dim_upper_bound(const JoinProfile& p) {
    if (p.r() >= p.n())
        throw std::invalid_argument("join_dim_upper_bound: requires r < n");
    return detail::checked_sub(
        detail::checked_sub(binomial(Int{p.n()} + p.d(), p.d()), f_value(p)), 1);
}

/// Finite-difference family at (l1, l2): A is always defined; B..E only on
/// their respective domains l1 >= 1, 2, 3, 4 (absent otherwise, never zero-filled).
struct AbcdeRecord {
    Int a = 0;
    std::optional<Int> b, c, d, e;
};

namespace detail {

// coeff_{d-drop} of P_inf^{m+1-l2} * P_1^{l2} with m = n - l1.
inline Int abcde_series_coeff(int d, int n, int l1, int l2, int drop) {
    const int m = n - l1;
    return mul(geometric(m + 1 - l2, d), power(p_k(1, d), l2)).coeff(d - drop);
}

inline Int a_closed(int d, int n, int l1, int l2) {
    const Int m = n - l1;
    Int v = abcde_series_coeff(d, n, l1, l2, 0);
    v = checked_sub(v, checked_mul(l2, binomial(m + 2, 2)));
    v = checked_sub(v, checked_mul(l1, m + 1));
    return checked_add(v, checked_mul(l2, l2));
}

inline Int b_closed(int d, int n, int l1, int l2) {
    const Int m = n - l1;
    Int v = abcde_series_coeff(d, n, l1, l2, 1);
    v = checked_sub(v, binomial(m + 2, 2));
    v = checked_sub(v, checked_mul(Int{l2}, m));
    return checked_add(checked_sub(v, l1), 1);
}

inline Int c_closed(int d, int n, int l1, int l2) {
    const Int m = n - l1;
    Int v = abcde_series_coeff(d, n, l1, l2, 2);
    return checked_sub(checked_sub(v, 2 * (m + 1)), l2);
}

inline Int d_closed(int d, int n, int l1, int l2) {
    return checked_sub(abcde_series_coeff(d, n, l1, l2, 3), 3);
}

inline Int e_closed(int d, int n, int l1, int l2) {
    return abcde_series_coeff(d, n, l1, l2, 4);
}

}  // namespace detail

/// Closed forms for A..E at (l1, l2), each cross-checked against its defining
/// finite difference of the previous letter; a mismatch is an internal bug and
/// raises std::logic_error.
inline AbcdeRecord abcde(int d, int n, int l1, int l2) {
    if (d < 5) throw std::invalid_argument("abcde: requires d >= 5");
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("abcde: requires l1, l2 >= 0");
    if (l1 + l2 >= n) throw std::invalid_argument("abcde: requires l1 + l2 < n");

    const auto checked = [](const char* name, Int closed, Int difference) {
        if (closed != difference)
            throw std::logic_error(std::string("abcde: closed form for ") + name +
                                   " disagrees with its finite difference");
        return closed;
    };

    AbcdeRecord rec;
    rec.a = detail::a_closed(d, n, l1, l2);
    if (l1 >= 1)
        rec.b = checked("B", detail::b_closed(d, n, l1, l2),
                        detail::checked_sub(detail::a_closed(d, n, l1 - 1, l2 + 1),
                                            detail::a_closed(d, n, l1, l2)));
    if (l1 >= 2)
        rec.c = checked("C", detail::c_closed(d, n, l1, l2),
                        detail::checked_sub(detail::b_closed(d, n, l1 - 1, l2 + 1),
                                            detail::b_closed(d, n, l1, l2)));
    if (l1 >= 3)
        rec.d = checked("D", detail::d_closed(d, n, l1, l2),
                        detail::checked_sub(detail::c_closed(d, n, l1 - 1, l2 + 1),
                                            detail::c_closed(d, n, l1, l2)));
    if (l1 >= 4)
        rec.e = checked("E", detail::e_closed(d, n, l1, l2),
                        detail::checked_sub(detail::d_closed(d, n, l1 - 1, l2 + 1),
                                            detail::d_closed(d, n, l1, l2)));
    return rec;
}

/// All nondecreasing degree profiles of length r with entries in [1, floor(d/2)].
inline std::vector<std::vector<int>> degree_profiles(int d, int r) {
    if (d < 2) throw std::invalid_argument("degree_profiles: requires d >= 2");
    if (r < 1) throw std::invalid_argument("degree_profiles: requires r >= 1");
    const int max_deg = d / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(r));
    const auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int a = lo; a <= max_deg; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace joindim
