#pragma once

// Quota rules over incomplete opinions: per-issue acceptance/rejection
// quotas as exact fractions, the issue-wise majority rule, and the quota
// band within which a uniform symmetric rule coincides with majority.

#include <string>
#include <utility>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/rational.hpp"

namespace liqdem {

class QuotaSpec {
public:
    // Per-issue acceptance and rejection quotas. Each quota must lie in
    // (0, 1] and every issue must satisfy q1 + q0 > 1, which is what keeps
    // the acceptance and rejection clauses from firing together.
    QuotaSpec(std::vector<Rational> q1, std::vector<Rational> q0)
        : q1_(std::move(q1)), q0_(std::move(q0)) {
        if (q1_.empty() || q1_.size() != q0_.size())
            throw QuotaError("QuotaSpec: need matching non-empty quota lists");
        for (std::size_t p = 0; p < q1_.size(); ++p) {
            validate_range(q1_[p]);
            validate_range(q0_[p]);
            if (!(q1_[p] + q0_[p] > Rational(1)))
                throw QuotaError("QuotaSpec: q1 + q0 must exceed 1 on issue " + std::to_string(p));
        }
    }

    static QuotaSpec uniform(int m, Rational q1, Rational q0) {
        return QuotaSpec(std::vector<Rational>(m, q1), std::vector<Rational>(m, q0));
    }

    static QuotaSpec uniform_symmetric(int m, Rational q) { return uniform(m, q, q); }

    static QuotaSpec unanimity(int m) { return uniform_symmetric(m, Rational(1)); }

    int m() const { return static_cast<int>(q1_.size()); }
    const Rational& q1(IssueId p) const { return q1_.at(p); }
    const Rational& q0(IssueId p) const { return q0_.at(p); }

    bool is_uniform() const {
        for (int p = 1; p < m(); ++p)
            if (q1_[p] != q1_[0] || q0_[p] != q0_[0]) return false;
        return true;
    }

    bool is_symmetric() const {
        for (int p = 0; p < m(); ++p)
            if (q1_[p] != q0_[p]) return false;
        return true;
    }

private:
    static void validate_range(const Rational& q) {
        if (!(q > Rational(0)) || q > Rational(1))
            throw QuotaError("QuotaSpec: quota " + q.to_string() + " outside (0, 1]");
    }

    std::vector<Rational> q1_;
    std::vector<Rational> q0_;
};

// Accept when the accepting share of non-abstainers reaches the acceptance
// quota, reject symmetrically, abstain otherwise. When nobody is active on
// an issue both thresholds degenerate to zero; the only reading that keeps
// the rule a function into incomplete opinions is to abstain.
inline IncompleteOpinion apply_quota(const QuotaSpec& spec, const OpinionProfile& profile) {
    if (spec.m() != profile.m())
        throw InputError("apply_quota: quota issue count differs from profile");
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        int acc = profile.count_accept(p);
        int rej = profile.count_reject(p);
        int active = acc + rej;
        if (active == 0) {
            out.set(p, TriVal::Abstain);
            continue;
        }
        bool accept = acc >= spec.q1(p).ceil_mul(active);
        bool reject = rej >= spec.q0(p).ceil_mul(active);
        if (accept && reject)
            throw Error("apply_quota: both clauses fired; quota constraint violated");
        out.set(p, accept ? TriVal::Accept : reject ? TriVal::Reject : TriVal::Abstain);
    }
    return out;
}

// Issue-by-issue strict majority of the non-abstaining voters.
inline IncompleteOpinion majority(const OpinionProfile& profile) {
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        int acc = profile.count_accept(p);
        int rej = profile.count_reject(p);
        out.set(p, acc > rej   ? TriVal::Accept
                   : rej > acc ? TriVal::Reject
                               : TriVal::Abstain);
    }
    return out;
}

// The interval (1/2, (n+1)/(2n)] of uniform symmetric quotas that realize
// the majority rule for n voters.
struct MajorityQuotaBand {
    Rational lo_exclusive;
    Rational hi_inclusive;

    bool contains(const Rational& q) const { return q > lo_exclusive && q <= hi_inclusive; }
};

inline MajorityQuotaBand majority_quota_band(int n) {
    if (n < 1) throw InputError("majority_quota_band: need n >= 1");
    return {Rational(1, 2), Rational(n + 1, 2 * static_cast<std::int64_t>(n))};
}

} // namespace liqdem
