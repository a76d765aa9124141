#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "joindim/formulas.hpp"

namespace joindim {

/// Parameter values carried by reports: plain integers or degree lists.
using ParamValue = std::variant<Int, std::vector<int>>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct Counterexample {
    ParamList params;
    Int lhs = 0;
    Int rhs = 0;
};

/// Outcome of one exhaustive sweep. passed() iff nothing failed; at most
/// kMaxStoredCounterexamples offenders are kept, the count stays exact.
struct VerificationReport {
    static constexpr std::size_t kMaxStoredCounterexamples = 100;

    std::string check;
    ParamList ranges;
    long long instances = 0;
    long long counterexample_count = 0;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return counterexample_count == 0; }

    void record_failure(Counterexample ce) {
        ++counterexample_count;
        if (counterexamples.size() < kMaxStoredCounterexamples)
            counterexamples.push_back(std::move(ce));
    }
};

namespace detail {

class ReportTimer {
public:
    explicit ReportTimer(VerificationReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
    }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// For every r < generic_slice_rank(d, n) and every sorted profile, checks
/// that F(profile) > F(1,...,1) unless the profile is all ones. A tie or a
/// reversal at any non-all-ones profile is a counterexample, so this also
/// certifies uniqueness of the minimizer.
inline VerificationReport verify_minimality(int d, int n) {
    if (d < 5) throw std::invalid_argument("verify_minimality: requires d >= 5");
    if (n < 2) throw std::invalid_argument("verify_minimality: requires n >= 2");
    VerificationReport report;
    report.check = "minimality";
    report.ranges = {{"d", Int{d}}, {"n", Int{n}}};
    detail::ReportTimer timer(report);
    const Int slrk = generic_slice_rank(d, n);
    for (int r = 1; r < slrk; ++r) {
        const Int f_ones = f_value({d, n, std::vector<int>(static_cast<std::size_t>(r), 1)});
        for (const auto& degs : degree_profiles(d, r)) {
            ++report.instances;
            if (degs.back() == 1) continue;  // the all-ones profile itself
            const Int f = f_value({d, n, degs});
            if (!(f > f_ones))
                report.record_failure({{{"d", Int{d}}, {"n", Int{n}}, {"degs", degs}}, f, f_ones});
        }
    }
    return report;
}

/// Sweeps the strict inequality
///   coeff_4(P_inf^{l_theta} * P_1^{m - l_theta - 1}) > l_theta_minus_1 + (l_theta - 1)(2m - 1)
/// over all l_theta >= 1, l_theta_minus_1 >= 0 and 2 <= m <= m_max with
/// m > l_theta_minus_1 + l_theta.
inline VerificationReport verify_theta_inequality(int m_max) {
    if (m_max < 2) throw std::invalid_argument("verify_theta_inequality: requires m_max >= 2");
    VerificationReport report;
    report.check = "theta";
    report.ranges = {{"m_max", Int{m_max}}};
    detail::ReportTimer timer(report);
    for (int m = 2; m <= m_max; ++m) {
        for (int l_theta = 1; l_theta < m; ++l_theta) {
            TruncatedSeries s = geometric(l_theta, 4);
            const TruncatedSeries p1 = p_k(1, 4);
            for (int i = 0; i < m - l_theta - 1; ++i) s = mul(s, p1);
            const Int lhs = s.coeff(4);
            for (int l_prev = 0; l_prev + l_theta < m; ++l_prev) {
                ++report.instances;
                const Int rhs = Int{l_prev} + Int{l_theta - 1} * (Int{2} * m - 1);
                if (!(lhs > rhs))
                    report.record_failure({{{"m", Int{m}},
                                            {"l_theta", Int{l_theta}},
                                            {"l_theta_minus_1", Int{l_prev}}},
                                           lhs,
                                           rhs});
            }
        }
    }
    return report;
}

/// Sweeps all (l1, l2) with l1 + l2 < n and asserts B_{l1,0} > 0 for
/// 1 <= l1 < generic_slice_rank(d, n), C >= 0 for l1 >= 2, D >= 0 for l1 >= 3
/// and E >= 2 for l1 >= 4.
inline VerificationReport verify_edcba(int d, int n) {
    if (d < 5) throw std::invalid_argument("verify_edcba: requires d >= 5");
    if (n < 2) throw std::invalid_argument("verify_edcba: requires n >= 2");
    VerificationReport report;
    report.check = "edcba";
    report.ranges = {{"d", Int{d}}, {"n", Int{n}}};
    detail::ReportTimer timer(report);
    const Int slrk = generic_slice_rank(d, n);
    for (int l1 = 1; l1 < n; ++l1) {
        for (int l2 = 0; l1 + l2 < n; ++l2) {
            const AbcdeRecord rec = abcde(d, n, l1, l2);
            const ParamList params = {{"d", Int{d}}, {"n", Int{n}}, {"l1", Int{l1}}, {"l2", Int{l2}}};
            if (l2 == 0 && l1 < slrk) {
                ++report.instances;
                if (!(*rec.b > 0)) report.record_failure({params, *rec.b, 0});
            }
            if (l1 >= 2) {
                ++report.instances;
                if (!(*rec.c >= 0)) report.record_failure({params, *rec.c, 0});
            }
            if (l1 >= 3) {
                ++report.instances;
                if (!(*rec.d >= 0)) report.record_failure({params, *rec.d, 0});
            }
            if (l1 >= 4) {
                ++report.instances;
                if (!(*rec.e >= 2)) report.record_failure({params, *rec.e, 2});
            }
        }
    }
    return report;
}

/// Asserts A_{l1,l2} > A_{l1+l2,0} for all l1 >= 0, l2 >= 1 with
/// l1 + l2 < generic_slice_rank(d, n).
inline VerificationReport verify_chain(int d, int n) {
    if (d < 5) throw std::invalid_argument("verify_chain: requires d >= 5");
    if (n < 2) throw std::invalid_argument("verify_chain: requires n >= 2");
    VerificationReport report;
    report.check = "chain";
    report.ranges = {{"d", Int{d}}, {"n", Int{n}}};
    detail::ReportTimer timer(report);
    const Int slrk = generic_slice_rank(d, n);
    for (int l1 = 0; l1 < slrk; ++l1) {
        for (int l2 = 1; l1 + l2 < slrk; ++l2) {
            ++report.instances;
            const Int lhs = abcde(d, n, l1, l2).a;
            const Int rhs = abcde(d, n, l1 + l2, 0).a;
            if (!(lhs > rhs))
                report.record_failure(
                    {{{"d", Int{d}}, {"n", Int{n}}, {"l1", Int{l1}}, {"l2", Int{l2}}}, lhs, rhs});
        }
    }
    return report;
}

/// For every sorted profile with r < generic_slice_rank(d, n) whose largest
/// entry theta exceeds 2, asserts F(profile) > F(profile with one theta
/// lowered to theta - 1). Vacuous for d = 5 (no entry can exceed 2).
inline VerificationReport verify_theta_reduction(int d, int n) {
    if (d < 5) throw std::invalid_argument("verify_theta_reduction: requires d >= 5");
    if (n < 2) throw std::invalid_argument("verify_theta_reduction: requires n >= 2");
    VerificationReport report;
    report.check = "theta-reduction";
    report.ranges = {{"d", Int{d}}, {"n", Int{n}}};
    detail::ReportTimer timer(report);
    const Int slrk = generic_slice_rank(d, n);
    for (int r = 1; r < slrk; ++r) {
        for (const auto& degs : degree_profiles(d, r)) {
            if (degs.back() <= 2) continue;
            ++report.instances;
            std::vector<int> reduced = degs;
            reduced.back() -= 1;
            const Int lhs = f_value({d, n, degs});
            const Int rhs = f_value({d, n, reduced});
            if (!(lhs > rhs))
                report.record_failure({{{"d", Int{d}}, {"n", Int{n}}, {"degs", degs}}, lhs, rhs});
        }
    }
    return report;
}

/// Exhaustively compares the series coefficient of
/// prod (1-t^{b_i}) / (1-t)^{n+1} with the inclusion-exclusion sum over the
/// box n <= n_max, e <= e_max, degree multisets of length <= len_max with
/// entries <= deg_max.
inline VerificationReport verify_identity_lemma(int n_max, int e_max, int deg_max, int len_max) {
    if (n_max < 1 || e_max < 1 || deg_max < 1 || len_max < 1)
        throw std::invalid_argument("verify_identity_lemma: all bounds must be >= 1");
    VerificationReport report;
    report.check = "identity";
    report.ranges = {{"n_max", Int{n_max}},
                     {"e_max", Int{e_max}},
                     {"deg_max", Int{deg_max}},
                     {"len_max", Int{len_max}}};
    detail::ReportTimer timer(report);

    std::vector<std::vector<int>> multisets{{}};
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == len_max) return;
        for (int a = lo; a <= deg_max; ++a) {
            cur.push_back(a);
            multisets.push_back(cur);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    for (int n = 1; n <= n_max; ++n) {
        for (const auto& degs : multisets) {
            const TruncatedSeries s = ci_quotient_series(n, degs, e_max);
            for (int e = 0; e <= e_max; ++e) {
                ++report.instances;
                const Int lhs = s.coeff(e);
                const Int rhs = inclusion_exclusion_coeff(n, e, degs);
                if (lhs != rhs)
                    report.record_failure(
                        {{{"n", Int{n}}, {"e", Int{e}}, {"degs", degs}}, lhs, rhs});
            }
        }
    }
    return report;
}

/// Fold per-instance reports from a range sweep into one: counts add up,
/// stored counterexamples stay capped, elapsed times accumulate.
inline VerificationReport merge_reports(std::string check, ParamList ranges,
                                        const std::vector<VerificationReport>& parts) {
    VerificationReport merged;
    merged.check = std::move(check);
    merged.ranges = std::move(ranges);
    for (const auto& part : parts) {
        merged.instances += part.instances;
        merged.counterexample_count += part.counterexample_count;
        merged.elapsed_ms += part.elapsed_ms;
        for (const auto& ce : part.counterexamples)
            if (merged.counterexamples.size() < VerificationReport::kMaxStoredCounterexamples)
                merged.counterexamples.push_back(ce);
    }
    return merged;
}

}  // namespace joindim
