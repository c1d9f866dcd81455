#pragma once

// Aggregators over incomplete-opinion profiles and exhaustive checkers for
// their axiomatic properties. Every checker quantifies over the full space
// of individually rational profiles (and, where the definition demands it,
// over agent permutations or single-agent deviations), guarded by a work
// budget. On failure the first counterexample in enumeration order is
// returned.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liqdem/agenda.hpp"
#include "liqdem/common.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/quota.hpp"

namespace liqdem {

struct Aggregator {
    std::string name;
    std::function<IncompleteOpinion(const OpinionProfile&)> apply;
};

inline Aggregator make_majority() {
    return {"maj", [](const OpinionProfile& o) { return majority(o); }};
}

inline Aggregator make_quota_rule(QuotaSpec spec, std::string name = "quota") {
    return {std::move(name),
            [spec = std::move(spec)](const OpinionProfile& o) { return apply_quota(spec, o); }};
}

// Aggregation structure: agents, issues, constraint, plus the precomputed
// pool of individually rational opinions every exhaustive check ranges over.
struct BaStructure {
    int n;
    Theory theory;
    std::vector<IncompleteOpinion> pool;

    BaStructure(int agents, Theory th)
        : n(agents), theory(std::move(th)), pool(rational_opinions(theory)) {
        if (n < 1) throw InputError("BaStructure: need at least one agent");
        if (pool.empty())
            throw InputError("BaStructure: constraint admits no rational opinion");
    }

    static BaStructure tautology(int agents, int issues) {
        return BaStructure(agents, Theory::tautology(issues));
    }

    std::uint64_t profile_space_size() const {
        long double t = 1;
        for (int i = 0; i < n; ++i) t *= static_cast<long double>(pool.size());
        return t > 1e18 ? UINT64_MAX : static_cast<std::uint64_t>(t);
    }
};

enum class Property {
    Unanimous,
    Anonymous,
    Oligarchic,
    Monotonic,
    Independent,
    Neutral,
    Responsive,
    Unbiased,
    Rational,
};

inline const char* property_name(Property p) {
    switch (p) {
        case Property::Unanimous: return "unanimous";
        case Property::Anonymous: return "anonymous";
        case Property::Oligarchic: return "oligarchic";
        case Property::Monotonic: return "monotonic";
        case Property::Independent: return "independent";
        case Property::Neutral: return "neutral";
        case Property::Responsive: return "responsive";
        case Property::Unbiased: return "unbiased";
        case Property::Rational: return "rational";
    }
    return "?";
}

inline std::optional<Property> property_from_name(const std::string& s) {
    for (Property p : {Property::Unanimous, Property::Anonymous, Property::Oligarchic,
                       Property::Monotonic, Property::Independent, Property::Neutral,
                       Property::Responsive, Property::Unbiased, Property::Rational})
        if (s == property_name(p)) return p;
    return std::nullopt;
}

struct PropertyCheck {
    bool holds = false;
    std::string detail;                      // human-readable witness description
    std::vector<OpinionProfile> witnesses;   // offending profile(s), if any
};

namespace detail {

inline std::vector<OpinionProfile> all_profiles(const BaStructure& s, std::uint64_t budget,
                                                const char* what) {
    check_budget(static_cast<long double>(s.profile_space_size()), budget, what);
    std::vector<OpinionProfile> out;
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

inline std::string profile_string(const OpinionProfile& p) {
    std::string s = "(";
    for (int i = 0; i < p.n(); ++i) {
        if (i) s += ",";
        s += p[i].to_string();
    }
    return s + ")";
}

// Flip of column p: accept <-> reject, abstention preserved.
inline OpinionProfile reversed_on(const OpinionProfile& o, IssueId p) {
    std::vector<IncompleteOpinion> ops(o.opinions());
    for (auto& op : ops) {
        TriVal v = op.get(p);
        if (v == TriVal::Accept) op.set(p, TriVal::Reject);
        else if (v == TriVal::Reject) op.set(p, TriVal::Accept);
    }
    return OpinionProfile(std::move(ops));
}

} // namespace detail

inline PropertyCheck check_unanimous(const Aggregator& F, const BaStructure& s,
                                     std::uint64_t budget = kDefaultBudget) {
    PropertyCheck r{true, "", {}};
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        for (IssueId p = 0; p < s.theory.m(); ++p) {
            TriVal first = prof[0].get(p);
            bool all_same = true;
            for (int i = 1; i < s.n; ++i)
                if (prof[i].get(p) != first) { all_same = false; break; }
            if (all_same && out.get(p) != first) {
                r = {false,
                     "all agents hold " + std::string(1, to_char(first)) + " on issue " +
                         std::to_string(p) + " but the outcome is " +
                         std::string(1, to_char(out.get(p))) + " at " + detail::profile_string(prof),
                     {prof}};
                return false;
            }
        }
        return true;
    });
    return r;
}

inline PropertyCheck check_anonymous(const Aggregator& F, const BaStructure& s,
                                     std::uint64_t budget = kDefaultBudget) {
    long double perms = 1;
    for (int i = 2; i <= s.n; ++i) perms *= i;
    detail::check_budget(static_cast<long double>(s.profile_space_size()) * perms, budget,
                         "check_anonymous");
    PropertyCheck r{true, "", {}};
    std::vector<int> base(s.n);
    for (int i = 0; i < s.n; ++i) base[i] = i;
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        std::vector<int> perm = base;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<IncompleteOpinion> shuffled(s.n, IncompleteOpinion(s.theory.m()));
            for (int i = 0; i < s.n; ++i) shuffled[i] = prof[perm[i]];
            OpinionProfile permuted{std::move(shuffled)};
            if (!(F.apply(permuted) == out)) {
                r = {false,
                     "permuting " + detail::profile_string(prof) + " changes the outcome",
                     {prof, permuted}};
                return false;
            }
        }
        return true;
    });
    return r;
}

// Oligarchic: some non-empty coalition C determines, on every issue, exactly
// the determinate collective values. Returns the oligarchs in `detail` when
// the property holds.
inline PropertyCheck check_oligarchic(const Aggregator& F, const BaStructure& s,
                                      std::uint64_t budget = kDefaultBudget) {
    auto profiles = detail::all_profiles(s, budget, "check_oligarchic");
    for (std::uint32_t cmask = 1; cmask < (1u << s.n); ++cmask) {
        bool works = true;
        for (const auto& prof : profiles) {
            IncompleteOpinion out = F.apply(prof);
            for (IssueId p = 0; p < s.theory.m() && works; ++p) {
                for (TriVal x : {TriVal::Reject, TriVal::Accept}) {
                    bool coalition_unanimous = true;
                    for (int i = 0; i < s.n; ++i)
                        if ((cmask >> i) & 1u)
                            if (prof[i].get(p) != x) { coalition_unanimous = false; break; }
                    bool outcome_is_x = out.get(p) == x;
                    if (outcome_is_x != coalition_unanimous) { works = false; break; }
                }
            }
            if (!works) break;
        }
        if (works) {
            std::string members;
            for (int i = 0; i < s.n; ++i)
                if ((cmask >> i) & 1u) members += (members.empty() ? "" : ",") + std::to_string(i);
            return {true, "oligarchs {" + members + "}", {}};
        }
    }
    return {false, "no coalition determines the outcome on all issues", {}};
}

inline PropertyCheck check_monotonic(const Aggregator& F, const BaStructure& s,
                                     std::uint64_t budget = kDefaultBudget) {
    detail::check_budget(static_cast<long double>(s.profile_space_size()) *
                             static_cast<long double>(s.n) * static_cast<long double>(s.pool.size()),
                         budget, "check_monotonic");
    PropertyCheck r{true, "", {}};
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        for (int i = 0; i < s.n; ++i) {
            for (const IncompleteOpinion& alt : s.pool) {
                std::vector<IncompleteOpinion> ops(prof.opinions());
                ops[i] = alt;
                OpinionProfile moved{std::move(ops)};
                IncompleteOpinion out2 = F.apply(moved);
                for (IssueId p = 0; p < s.theory.m(); ++p) {
                    TriVal before = prof[i].get(p), after = alt.get(p);
                    bool raises1 = before != TriVal::Accept &&
                                   (after == TriVal::Accept || after == TriVal::Abstain);
                    bool raises0 = before != TriVal::Reject &&
                                   (after == TriVal::Reject || after == TriVal::Abstain);
                    bool bad1 = raises1 && out.get(p) == TriVal::Accept && out2.get(p) != TriVal::Accept;
                    bool bad0 = raises0 && out.get(p) == TriVal::Reject && out2.get(p) != TriVal::Reject;
                    if (bad1 || bad0) {
                        r = {false,
                             "agent " + std::to_string(i) + " raising support on issue " +
                                 std::to_string(p) + " overturns the outcome at " +
                                 detail::profile_string(prof),
                             {prof, moved}};
                        return false;
                    }
                }
            }
        }
        return true;
    });
    return r;
}

inline PropertyCheck check_independent(const Aggregator& F, const BaStructure& s,
                                       std::uint64_t budget = kDefaultBudget) {
    auto profiles = detail::all_profiles(s, budget, "check_independent");
    for (IssueId p = 0; p < s.theory.m(); ++p) {
        // key: the issue-p column; all profiles sharing it must agree on F(.)(p)
        std::vector<std::pair<std::string, std::pair<TriVal, const OpinionProfile*>>> seen;
        for (const auto& prof : profiles) {
            std::string key;
            for (int i = 0; i < s.n; ++i) key.push_back(to_char(prof[i].get(p)));
            TriVal v = F.apply(prof).get(p);
            bool found = false;
            for (auto& [k, entry] : seen) {
                if (k == key) {
                    found = true;
                    if (entry.first != v)
                        return {false,
                                "same column on issue " + std::to_string(p) +
                                    " yields different outcomes at " +
                                    detail::profile_string(*entry.second) + " and " +
                                    detail::profile_string(prof),
                                {*entry.second, prof}};
                    break;
                }
            }
            if (!found) seen.push_back({key, {v, &prof}});
        }
    }
    return {true, "", {}};
}

inline PropertyCheck check_neutral(const Aggregator& F, const BaStructure& s,
                                   std::uint64_t budget = kDefaultBudget) {
    PropertyCheck r{true, "", {}};
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        for (IssueId p = 0; p < s.theory.m(); ++p)
            for (IssueId q = p + 1; q < s.theory.m(); ++q) {
                bool same_column = true;
                for (int i = 0; i < s.n; ++i)
                    if (prof[i].get(p) != prof[i].get(q)) { same_column = false; break; }
                if (same_column && out.get(p) != out.get(q)) {
                    r = {false,
                         "issues " + std::to_string(p) + " and " + std::to_string(q) +
                             " share a column but differ in outcome at " +
                             detail::profile_string(prof),
                         {prof}};
                    return false;
                }
            }
        return true;
    });
    return r;
}

inline PropertyCheck check_responsive(const Aggregator& F, const BaStructure& s,
                                      std::uint64_t budget = kDefaultBudget) {
    std::vector<bool> saw_accept(s.theory.m(), false), saw_reject(s.theory.m(), false);
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        for (IssueId p = 0; p < s.theory.m(); ++p) {
            if (out.get(p) == TriVal::Accept) saw_accept[p] = true;
            if (out.get(p) == TriVal::Reject) saw_reject[p] = true;
        }
        return true;
    });
    for (IssueId p = 0; p < s.theory.m(); ++p) {
        if (!saw_accept[p])
            return {false, "no profile makes issue " + std::to_string(p) + " accepted", {}};
        if (!saw_reject[p])
            return {false, "no profile makes issue " + std::to_string(p) + " rejected", {}};
    }
    return {true, "", {}};
}

inline PropertyCheck check_unbiased(const Aggregator& F, const BaStructure& s,
                                    std::uint64_t budget = kDefaultBudget) {
    PropertyCheck r{true, "", {}};
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        for (IssueId p = 0; p < s.theory.m(); ++p) {
            OpinionProfile rev = detail::reversed_on(prof, p);
            // the reversed profile must itself lie in the rational domain
            bool in_domain = true;
            for (int i = 0; i < s.n; ++i)
                if (!check_opinion(rev[i], s.theory).rational()) { in_domain = false; break; }
            if (!in_domain) continue;
            IncompleteOpinion out2 = F.apply(rev);
            bool lhs = out.get(p) == TriVal::Accept;
            bool rhs = out2.get(p) == TriVal::Reject;
            if (lhs != rhs) {
                r = {false,
                     "reversing issue " + std::to_string(p) + " at " +
                         detail::profile_string(prof) + " does not reverse the outcome",
                     {prof, rev}};
                return false;
            }
        }
        return true;
    });
    return r;
}

inline PropertyCheck check_rational(const Aggregator& F, const BaStructure& s,
                                    std::uint64_t budget = kDefaultBudget) {
    PropertyCheck r{true, "", {}};
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        IncompleteOpinion out = F.apply(prof);
        OpinionStatus st = check_opinion(out, s.theory);
        if (!st.rational()) {
            r = {false,
                 "outcome " + out.to_string() + " at " + detail::profile_string(prof) +
                     (st.consistent ? " is not closed" : " is inconsistent"),
                 {prof}};
            return false;
        }
        return true;
    });
    return r;
}

inline PropertyCheck check_property(const Aggregator& F, Property prop, const BaStructure& s,
                                    std::uint64_t budget = kDefaultBudget) {
    switch (prop) {
        case Property::Unanimous: return check_unanimous(F, s, budget);
        case Property::Anonymous: return check_anonymous(F, s, budget);
        case Property::Oligarchic: return check_oligarchic(F, s, budget);
        case Property::Monotonic: return check_monotonic(F, s, budget);
        case Property::Independent: return check_independent(F, s, budget);
        case Property::Neutral: return check_neutral(F, s, budget);
        case Property::Responsive: return check_responsive(F, s, budget);
        case Property::Unbiased: return check_unbiased(F, s, budget);
        case Property::Rational: return check_rational(F, s, budget);
    }
    throw InputError("check_property: unknown property");
}

// Number of individually rational profiles on which F abstains on issue p.
inline std::uint64_t undecisiveness(const Aggregator& F, const BaStructure& s, IssueId p,
                                    std::uint64_t budget = kDefaultBudget) {
    std::uint64_t count = 0;
    for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
        if (F.apply(prof).get(p) == TriVal::Abstain) ++count;
        return true;
    });
    return count;
}

// Undecisiveness sweep over a grid of uniform symmetric quotas: the minimum
// must be attained exactly by the quotas inside the majority band, and those
// rules must reproduce majority on every profile.
struct QuotaGridEntry {
    Rational quota;
    std::vector<std::uint64_t> undecisiveness_per_issue;
    bool in_band = false;
    bool minimal = false;
    bool equals_majority = false;
};

struct UndecisivenessSweep {
    std::vector<QuotaGridEntry> entries;
    bool band_is_exact_argmin = false;
    bool band_rules_equal_majority = false;
    bool passed() const { return band_is_exact_argmin && band_rules_equal_majority; }
};

inline UndecisivenessSweep sweep_undecisiveness(const BaStructure& s,
                                                const std::vector<Rational>& grid,
                                                std::uint64_t budget = kDefaultBudget) {
    UndecisivenessSweep report;
    MajorityQuotaBand band = majority_quota_band(s.n);
    Aggregator maj = make_majority();
    for (const Rational& q : grid) {
        QuotaSpec spec = QuotaSpec::uniform_symmetric(s.theory.m(), q);
        Aggregator F = make_quota_rule(spec);
        QuotaGridEntry e;
        e.quota = q;
        e.in_band = band.contains(q);
        for (IssueId p = 0; p < s.theory.m(); ++p)
            e.undecisiveness_per_issue.push_back(undecisiveness(F, s, p, budget));
        e.equals_majority = true;
        for_each_profile(s.pool, s.n, budget, [&](const OpinionProfile& prof) {
            if (!(F.apply(prof) == maj.apply(prof))) {
                e.equals_majority = false;
                return false;
            }
            return true;
        });
        report.entries.push_back(std::move(e));
    }
    for (IssueId p = 0; p < s.theory.m(); ++p) {
        std::uint64_t best = UINT64_MAX;
        for (const auto& e : report.entries)
            best = std::min(best, e.undecisiveness_per_issue[p]);
        for (auto& e : report.entries)
            e.minimal = (p == 0 ? true : e.minimal) && e.undecisiveness_per_issue[p] == best;
    }
    report.band_is_exact_argmin = true;
    report.band_rules_equal_majority = true;
    for (const auto& e : report.entries) {
        if (e.minimal != e.in_band) report.band_is_exact_argmin = false;
        if (e.in_band && !e.equals_majority) report.band_rules_equal_majority = false;
    }
    return report;
}

// On a simple agenda, majority must be rational on every profile; on a
// non-simple one an irrationality witness may exist and is searched for.
struct MajorityRationalityReport {
    bool agenda_simple = false;
    bool majority_rational = false;
    std::optional<OpinionProfile> witness;
    std::string witness_outcome;
    bool passed() const { return !agenda_simple || majority_rational; }
};

inline MajorityRationalityReport check_majority_rationality(
    const BaStructure& s, std::uint64_t budget = kDefaultBudget) {
    MajorityRationalityReport report;
    report.agenda_simple = is_simple(s.theory);
    PropertyCheck rc = check_rational(make_majority(), s, budget);
    report.majority_rational = rc.holds;
    if (!rc.holds && !rc.witnesses.empty()) {
        report.witness = rc.witnesses.front();
        report.witness_outcome = majority(rc.witnesses.front()).to_string();
    }
    return report;
}

} // namespace liqdem
