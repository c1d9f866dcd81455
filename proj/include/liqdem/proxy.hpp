#pragma once

// Delegable-proxy voting: proxy opinions (value or trustee per issue), the
// per-issue delegation graph with gurus and transitive-closure weights,
// proxy quota aggregators, individual rationality, and the translations
// between proxy and incomplete-opinion profiles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/quota.hpp"
#include "liqdem/rational.hpp"
#include "liqdem/semantics.hpp"

namespace liqdem {

// One proxy entry: a binary value or a trustee to copy from.
class ProxyEntry {
public:
    static ProxyEntry value(bool accept) {
        ProxyEntry e;
        e.is_value_ = true;
        e.value_ = accept;
        return e;
    }

    static ProxyEntry delegate(AgentId trustee) {
        ProxyEntry e;
        e.is_value_ = false;
        e.trustee_ = trustee;
        return e;
    }

    bool is_value() const { return is_value_; }
    bool accepts() const { return value_; }
    AgentId trustee() const { return trustee_; }

    friend bool operator==(const ProxyEntry&, const ProxyEntry&) = default;

private:
    bool is_value_ = true;
    bool value_ = false;
    AgentId trustee_ = 0;
};

using ProxyOpinion = std::vector<ProxyEntry>; // one entry per issue

class ProxyProfile {
public:
    ProxyProfile(std::vector<ProxyOpinion> opinions, int m)
        : opinions_(std::move(opinions)), m_(m) {
        if (opinions_.empty()) throw InputError("ProxyProfile: at least one agent required");
        int n = static_cast<int>(opinions_.size());
        for (AgentId i = 0; i < n; ++i) {
            if (static_cast<int>(opinions_[i].size()) != m_)
                throw InputError("ProxyProfile: agent " + std::to_string(i) +
                                 " has wrong issue count");
            for (const ProxyEntry& e : opinions_[i]) {
                if (e.is_value()) continue;
                if (e.trustee() < 0 || e.trustee() >= n)
                    throw InputError("ProxyProfile: trustee out of range for agent " +
                                     std::to_string(i));
                if (e.trustee() == i)
                    throw InputError("ProxyProfile: self-delegation is not expressible (agent " +
                                     std::to_string(i) + ")");
            }
        }
    }

    int n() const { return static_cast<int>(opinions_.size()); }
    int m() const { return m_; }
    const ProxyOpinion& operator[](AgentId i) const { return opinions_.at(i); }
    const ProxyEntry& entry(AgentId i, IssueId p) const { return opinions_.at(i).at(p); }

    friend bool operator==(const ProxyProfile&, const ProxyProfile&) = default;

private:
    std::vector<ProxyOpinion> opinions_;
    int m_;
};

// Delegation graph for one issue: voters self-loop, delegators point at
// their trustee. Gurus, closure weights and cycles are computed eagerly.
class DelegationGraph {
public:
    DelegationGraph(const ProxyProfile& profile, IssueId p)
        : issue_(p), graph_(build_next(profile, p)) {
        int n = graph_.n();
        value_.assign(n, false);
        for (AgentId i = 0; i < n; ++i) {
            const ProxyEntry& e = profile.entry(i, p);
            if (e.is_value()) value_[i] = e.accepts();
        }
        compute_gurus();
        compute_weights();
    }

    IssueId issue() const { return issue_; }
    int n() const { return graph_.n(); }
    const FunctionalGraph& structure() const { return graph_; }

    // The fixpoint reachable from i, if the cycle it feeds is a self-loop.
    std::optional<AgentId> guru(AgentId i) const {
        AgentId g = guru_[i];
        return g < 0 ? std::nullopt : std::optional<AgentId>(g);
    }

    bool is_guru(AgentId i) const { return graph_.next(i) == i; }

    // Guru's vote on this issue; only meaningful for gurus.
    bool guru_value(AgentId g) const { return value_.at(g); }

    // Indegree under the reflexive-transitive closure of the delegation
    // relation: the number of agents (self included) whose path runs
    // through i.
    std::uint64_t weight(AgentId i) const { return weight_.at(i); }

    // Distance-decaying weight: each agent j reaching i contributes
    // 1/len(path j -> i), the agent itself contributes 1.
    Rational viscous_weight(AgentId i) const {
        Rational total = 1;
        for (AgentId j = 0; j < n(); ++j) {
            if (j == i) continue;
            AgentId v = j;
            for (int steps = 1; steps <= n(); ++steps) {
                v = graph_.next(v);
                if (v == i) {
                    total += Rational(1, steps);
                    break;
                }
                if (v == j) break; // looped back without meeting i
            }
        }
        return total;
    }

    // No guru exists: every agent's path ends in a cycle of length >= 2.
    bool is_void() const {
        for (AgentId i = 0; i < n(); ++i)
            if (is_guru(i)) return false;
        return true;
    }

    std::vector<AgentId> gurus() const {
        std::vector<AgentId> out;
        for (AgentId i = 0; i < n(); ++i)
            if (is_guru(i)) out.push_back(i);
        return out;
    }

private:
    static std::vector<AgentId> build_next(const ProxyProfile& profile, IssueId p) {
        std::vector<AgentId> next(profile.n());
        for (AgentId i = 0; i < profile.n(); ++i) {
            const ProxyEntry& e = profile.entry(i, p);
            next[i] = e.is_value() ? i : e.trustee();
        }
        return next;
    }

    void compute_gurus() {
        guru_.assign(n(), -1);
        for (AgentId i = 0; i < n(); ++i) {
            int ci = graph_.cycle_of(i);
            const auto& cyc = graph_.cycles()[ci];
            if (cyc.size() == 1 && graph_.next(cyc[0]) == cyc[0]) guru_[i] = cyc[0];
        }
    }

    void compute_weights() {
        int n = this->n();
        weight_.assign(n, 0);
        // tree nodes: subtree size, accumulated outward-in
        std::vector<AgentId> order(n);
        for (AgentId i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
            return graph_.dist_to_cycle(a) > graph_.dist_to_cycle(b);
        });
        for (AgentId i : order) {
            if (graph_.on_cycle(i)) continue;
            weight_[i] += 1;
            weight_[graph_.next(i)] += weight_[i];
        }
        // cycle nodes: every member of the component reaches them
        for (AgentId i = 0; i < n; ++i)
            if (graph_.on_cycle(i))
                weight_[i] = graph_.component_size(graph_.cycle_of(i));
    }

    IssueId issue_;
    FunctionalGraph graph_;
    std::vector<bool> value_;
    std::vector<AgentId> guru_;
    std::vector<std::uint64_t> weight_;
};

struct ProxyAggregator {
    std::string name;
    std::function<IncompleteOpinion(const ProxyProfile&)> apply;
};

// Weighted quota aggregation over guru votes: thresholds run over the total
// voting weight of the gurus (the represented agents). Void issues abstain.
inline IncompleteOpinion pv_quota(const QuotaSpec& spec, const ProxyProfile& profile) {
    if (spec.m() != profile.m())
        throw InputError("pv_quota: quota issue count differs from profile");
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        DelegationGraph g(profile, p);
        std::uint64_t acc = 0, rej = 0;
        for (AgentId i : g.gurus())
            (g.guru_value(i) ? acc : rej) += g.weight(i);
        std::uint64_t active = acc + rej;
        if (active == 0) {
            out.set(p, TriVal::Abstain);
            continue;
        }
        bool accept = acc >= static_cast<std::uint64_t>(spec.q1(p).ceil_mul(static_cast<std::int64_t>(active)));
        bool reject = rej >= static_cast<std::uint64_t>(spec.q0(p).ceil_mul(static_cast<std::int64_t>(active)));
        out.set(p, accept ? TriVal::Accept : reject ? TriVal::Reject : TriVal::Abstain);
    }
    return out;
}

// Proxy majority: accept when the guru weight behind acceptance strictly
// exceeds the guru weight behind rejection.
inline IncompleteOpinion pv_majority(const ProxyProfile& profile) {
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        DelegationGraph g(profile, p);
        std::uint64_t acc = 0, rej = 0;
        for (AgentId i : g.gurus())
            (g.guru_value(i) ? acc : rej) += g.weight(i);
        out.set(p, acc > rej   ? TriVal::Accept
                   : rej > acc ? TriVal::Reject
                               : TriVal::Abstain);
    }
    return out;
}

// Majority under the distance-decaying weight; deliberately not a
// one man-one vote rule.
inline IncompleteOpinion pv_viscous_majority(const ProxyProfile& profile) {
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        DelegationGraph g(profile, p);
        Rational acc = 0, rej = 0;
        for (AgentId i : g.gurus())
            (g.guru_value(i) ? acc : rej) += g.viscous_weight(i);
        out.set(p, acc > rej   ? TriVal::Accept
                   : rej > acc ? TriVal::Reject
                               : TriVal::Abstain);
    }
    return out;
}

inline ProxyAggregator make_pv_majority() {
    return {"pv-maj", [](const ProxyProfile& o) { return pv_majority(o); }};
}

inline ProxyAggregator make_pv_quota(QuotaSpec spec, std::string name = "pv-quota") {
    return {std::move(name),
            [spec = std::move(spec)](const ProxyProfile& o) { return pv_quota(spec, o); }};
}

inline ProxyAggregator make_pv_viscous_majority() {
    return {"pv-viscous-maj", [](const ProxyProfile& o) { return pv_viscous_majority(o); }};
}

// Guru translation: each agent inherits its guru's value, abstaining when
// no guru exists.
inline OpinionProfile translate_t(const ProxyProfile& profile) {
    std::vector<IncompleteOpinion> out(profile.n(), IncompleteOpinion(profile.m()));
    for (IssueId p = 0; p < profile.m(); ++p) {
        DelegationGraph g(profile, p);
        for (AgentId i = 0; i < profile.n(); ++i) {
            auto guru = g.guru(i);
            if (guru) out[i].set(p, g.guru_value(*guru) ? TriVal::Accept : TriVal::Reject);
        }
    }
    return OpinionProfile(std::move(out));
}

// Individual rationality: the literal set collecting, per issue, the guru's
// vote (nothing where no guru exists) must be gamma-consistent and closed.
inline bool individually_rational(const ProxyProfile& profile, AgentId agent, const Theory& th) {
    LiteralSet ls;
    for (IssueId p = 0; p < profile.m(); ++p) {
        DelegationGraph g(profile, p);
        auto guru = g.guru(agent);
        if (guru) ls.add({p, g.guru_value(*guru)});
    }
    if (!th.consistent(ls)) return false;
    for (IssueId p = 0; p < th.m(); ++p) {
        if (ls.contains_issue(p)) continue;
        if (th.entails(ls, pos(p)) || th.entails(ls, neg(p))) return false;
    }
    return true;
}

inline std::vector<AgentId> irrational_agents(const ProxyProfile& profile, const Theory& th) {
    std::vector<AgentId> out;
    for (AgentId i = 0; i < profile.n(); ++i)
        if (!individually_rational(profile, i, th)) out.push_back(i);
    return out;
}

// Embedding of incomplete profiles into proxy profiles: voters keep their
// values; on each issue the abstainers delegate around a cycle (each to the
// next abstainer in agent order). A single abstainer cannot form a cycle:
// with the dummy extension enabled, mutually delegating helper voters are
// appended (one if every issue has an abstainer to attach them to, two
// otherwise so the helpers can absorb each other); the helpers never obtain
// a guru, so translated outcomes and weighted counts are unaffected.
inline ProxyProfile embed_s(const OpinionProfile& profile, bool allow_dummy = false) {
    int n = profile.n(), m = profile.m();
    std::vector<std::vector<AgentId>> abstainers(m);
    bool needs_dummy = false;
    for (IssueId p = 0; p < m; ++p) {
        for (AgentId i = 0; i < n; ++i)
            if (profile[i].get(p) == TriVal::Abstain) abstainers[p].push_back(i);
        if (abstainers[p].size() == 1) needs_dummy = true;
    }
    int dummies = 0;
    if (needs_dummy) {
        if (!allow_dummy)
            throw InputError("embed_s: an issue has exactly one abstainer and the dummy "
                             "extension is disabled");
        bool all_issues_have_abstainers = true;
        for (IssueId p = 0; p < m; ++p)
            if (abstainers[p].empty()) all_issues_have_abstainers = false;
        dummies = all_issues_have_abstainers ? 1 : 2;
    }

    int total = n + dummies;
    std::vector<ProxyOpinion> out(total, ProxyOpinion(m, ProxyEntry::value(false)));
    for (IssueId p = 0; p < m; ++p) {
        const auto& abst = abstainers[p];
        for (AgentId i = 0; i < n; ++i) {
            TriVal v = profile[i].get(p);
            if (v != TriVal::Abstain) {
                out[i][p] = ProxyEntry::value(v == TriVal::Accept);
                continue;
            }
            if (abst.size() >= 2) {
                auto it = std::find(abst.begin(), abst.end(), i);
                std::size_t k = static_cast<std::size_t>(it - abst.begin());
                out[i][p] = ProxyEntry::delegate(abst[(k + 1) % abst.size()]);
            } else {
                out[i][p] = ProxyEntry::delegate(n); // pair up with the first helper
            }
        }
        if (dummies == 1) {
            // the single helper leans on this issue's abstainer cycle
            out[n][p] = ProxyEntry::delegate(abst.front());
        } else if (dummies == 2) {
            if (!abst.empty()) {
                out[n][p] = ProxyEntry::delegate(abst.front());
                out[n + 1][p] = ProxyEntry::delegate(n);
            } else {
                out[n][p] = ProxyEntry::delegate(n + 1);
                out[n + 1][p] = ProxyEntry::delegate(n);
            }
        }
    }
    return ProxyProfile(std::move(out), m);
}

struct OmovCheck {
    bool holds = false;
    std::optional<ProxyProfile> witness;
    std::string detail;
};

// Enumerates individually rational proxy profiles and tests
// pv(O) == F(t(O)) on each.
inline OmovCheck one_man_one_vote_check(const ProxyAggregator& pv,
                                        const std::function<IncompleteOpinion(const OpinionProfile&)>& F,
                                        int n, const Theory& th,
                                        std::uint64_t budget = kDefaultBudget) {
    int m = th.m();
    // per-agent options: values 0/1 and each other agent, per issue
    std::vector<std::vector<ProxyEntry>> options(n);
    for (AgentId i = 0; i < n; ++i) {
        options[i].push_back(ProxyEntry::value(false));
        options[i].push_back(ProxyEntry::value(true));
        for (AgentId j = 0; j < n; ++j)
            if (j != i) options[i].push_back(ProxyEntry::delegate(j));
    }
    std::size_t per_agent = options[0].size();
    long double total = 1;
    for (int k = 0; k < n * m; ++k) total *= static_cast<long double>(per_agent);
    detail::check_budget(total, budget, "one_man_one_vote_check");

    std::vector<std::size_t> idx(static_cast<std::size_t>(n) * m, 0);
    for (;;) {
        std::vector<ProxyOpinion> ops(n, ProxyOpinion(m, ProxyEntry::value(false)));
        for (AgentId i = 0; i < n; ++i)
            for (IssueId p = 0; p < m; ++p)
                ops[i][p] = options[i][idx[static_cast<std::size_t>(i) * m + p]];
        ProxyProfile prof(std::move(ops), m);
        bool rational = true;
        for (AgentId i = 0; i < n && rational; ++i)
            rational = individually_rational(prof, i, th);
        if (rational) {
            IncompleteOpinion lhs = pv.apply(prof);
            IncompleteOpinion rhs = F(translate_t(prof));
            if (!(lhs == rhs))
                return {false, prof,
                        "pv gives " + lhs.to_string() + " but F(t(.)) gives " + rhs.to_string()};
        }
        // advance the odometer; done once every digit wraps
        std::size_t k = idx.size();
        bool advanced = false;
        while (k-- > 0) {
            AgentId agent = static_cast<AgentId>(k / m);
            if (idx[k] + 1 < options[agent].size()) {
                ++idx[k];
                advanced = true;
                break;
            }
            idx[k] = 0;
        }
        if (!advanced) return {true, std::nullopt, ""};
    }
}

} // namespace liqdem
