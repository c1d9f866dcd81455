#pragma once

// Individually rational opinion-copying dynamics: in each synchronous round
// every agent adopts, per issue, the current opinion of that issue's
// trustee, but only if the combined trustee opinions across all issues are
// consistent with the constraint; otherwise the agent keeps its whole
// opinion. The orbit is deterministic and eventually periodic, so runs are
// resolved by detecting the first recurrence.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/quota.hpp"
#include "liqdem/semantics.hpp"

namespace liqdem {

// Per-issue trustee maps; trustee(i, p) == i means agent i listens to itself.
class BdpGraph {
public:
    BdpGraph(std::vector<std::vector<AgentId>> trustee_per_agent, int m)
        : trustee_(std::move(trustee_per_agent)), m_(m) {
        if (trustee_.empty()) throw InputError("BdpGraph: at least one agent required");
        int n = static_cast<int>(trustee_.size());
        for (const auto& row : trustee_) {
            if (static_cast<int>(row.size()) != m_)
                throw InputError("BdpGraph: wrong issue count in trustee map");
            for (AgentId t : row)
                if (t < 0 || t >= n) throw InputError("BdpGraph: trustee out of range");
        }
        for (IssueId p = 0; p < m_; ++p) {
            std::vector<AgentId> next(n);
            for (AgentId i = 0; i < n; ++i) next[i] = trustee_[i][p];
            per_issue_.emplace_back(std::move(next));
        }
    }

    int n() const { return static_cast<int>(trustee_.size()); }
    int m() const { return m_; }
    AgentId trustee(AgentId i, IssueId p) const { return trustee_.at(i).at(p); }
    const FunctionalGraph& issue_graph(IssueId p) const { return per_issue_.at(p); }

    // Upper bound on stabilization time when every cycle is unanimous:
    // the longest distance from any agent to its cycle, across issues.
    int stabilization_bound() const {
        int b = 0;
        for (const auto& g : per_issue_) b = std::max(b, g.max_tail_depth());
        return b;
    }

private:
    std::vector<std::vector<AgentId>> trustee_;
    int m_;
    std::vector<FunctionalGraph> per_issue_;
};

class BdpState {
public:
    // Opinions are total binary opinions, one bitmask per agent; every agent
    // must start consistent with the constraint.
    BdpState(BdpGraph graph, Theory theory, std::vector<std::uint32_t> opinions)
        : graph_(std::move(graph)), theory_(std::move(theory)), opinions_(std::move(opinions)) {
        if (theory_.m() != graph_.m())
            throw InputError("BdpState: issue count mismatch between theory and graph");
        if (static_cast<int>(opinions_.size()) != graph_.n())
            throw InputError("BdpState: one opinion per agent required");
        std::uint32_t mask = issue_mask();
        for (auto& o : opinions_) o &= mask;
        for (AgentId i = 0; i < graph_.n(); ++i)
            if (!consistent_bits(opinions_[i]))
                throw InputError("BdpState: agent " + std::to_string(i) +
                                 " starts with an inconsistent opinion");
    }

    const BdpGraph& graph() const { return graph_; }
    const Theory& theory() const { return theory_; }
    const std::vector<std::uint32_t>& opinions() const { return opinions_; }
    int step_count() const { return step_; }

    bool opinion(AgentId i, IssueId p) const { return (opinions_.at(i) >> p) & 1u; }

    // One synchronous round. Per agent: collect the trustee opinion on each
    // issue, adopt the whole vector if it is consistent, keep otherwise.
    void step() {
        std::vector<std::uint32_t> next(opinions_.size());
        for (AgentId i = 0; i < graph_.n(); ++i) {
            std::uint32_t incoming = 0;
            for (IssueId p = 0; p < graph_.m(); ++p)
                if ((opinions_[graph_.trustee(i, p)] >> p) & 1u) incoming |= 1u << p;
            next[i] = consistent_bits(incoming) ? incoming : opinions_[i];
        }
        opinions_ = std::move(next);
        ++step_;
    }

    OpinionProfile profile() const {
        std::vector<IncompleteOpinion> ops;
        ops.reserve(opinions_.size());
        for (std::uint32_t o : opinions_)
            ops.push_back(IncompleteOpinion::from_bits(o, graph_.m()));
        return OpinionProfile(std::move(ops));
    }

    bool consistent_bits(std::uint32_t bits) const {
        LiteralSet ls{issue_mask(), bits};
        return theory_.consistent(ls);
    }

private:
    std::uint32_t issue_mask() const {
        return graph_.m() == 32 ? ~0u : ((1u << graph_.m()) - 1);
    }

    BdpGraph graph_;
    Theory theory_;
    std::vector<std::uint32_t> opinions_;
    int step_ = 0;
};

inline BdpState bdp_step(BdpState state) {
    state.step();
    return state;
}

enum class BdpStatus { Stabilized, Periodic, Inconclusive };

struct BdpOutcome {
    BdpStatus status = BdpStatus::Inconclusive;
    int steps_to_stabilize = -1;                // valid when stabilized
    std::vector<std::uint32_t> limit;           // valid when stabilized
    int period = 0;                             // valid when periodic
    int preperiod = 0;                          // first index of the recurring segment
    // Per agent: mask of issues on which the opinion keeps oscillating.
    std::vector<std::uint32_t> unstable_issues;
    std::vector<std::uint32_t> eventual_values; // settled bits outside unstable_issues
    std::vector<std::vector<std::uint32_t>> orbit;

    bool stabilized() const { return status == BdpStatus::Stabilized; }
};

// Iterates until the profile repeats (stabilized when the repeat is
// immediate) or max_steps rounds have been taken. A budget of
// 2^(n*m) + 1 steps can never return Inconclusive.
inline BdpOutcome run(BdpState state, int max_steps) {
    if (max_steps < 1) throw InputError("run: max_steps must be at least 1");
    BdpOutcome out;
    std::unordered_map<std::string, int> seen;
    auto key = [&](const std::vector<std::uint32_t>& ops) {
        std::string k;
        k.reserve(ops.size() * 4);
        for (std::uint32_t o : ops)
            for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((o >> (8 * b)) & 0xff));
        return k;
    };

    out.orbit.push_back(state.opinions());
    seen[key(state.opinions())] = 0;
    for (int t = 1; t <= max_steps; ++t) {
        state.step();
        const auto& ops = state.opinions();
        auto it = seen.find(key(ops));
        if (it != seen.end()) {
            int first = it->second;
            out.orbit.push_back(ops);
            if (first == t - 1) {
                out.status = BdpStatus::Stabilized;
                out.steps_to_stabilize = first;
                out.limit = ops;
                out.unstable_issues.assign(ops.size(), 0);
                out.eventual_values = ops;
            } else {
                out.status = BdpStatus::Periodic;
                out.period = t - first;
                out.preperiod = first;
                // issues that vary across the recurring window oscillate forever
                int n = static_cast<int>(ops.size());
                out.unstable_issues.assign(n, 0);
                out.eventual_values.assign(n, 0);
                for (int i = 0; i < n; ++i) {
                    std::uint32_t all_and = ~0u, all_or = 0;
                    for (int w = first; w < t; ++w) {
                        all_and &= out.orbit[w][i];
                        all_or |= out.orbit[w][i];
                    }
                    out.unstable_issues[i] = all_and ^ all_or;
                    out.eventual_values[i] = all_and;
                }
            }
            return out;
        }
        seen[key(ops)] = t;
        out.orbit.push_back(ops);
    }
    out.status = BdpStatus::Inconclusive;
    return out;
}

// Every cycle of every issue graph is unanimous on that issue.
inline bool all_cycles_unanimous(const BdpGraph& graph,
                                 const std::vector<std::uint32_t>& opinions) {
    for (IssueId p = 0; p < graph.m(); ++p) {
        const FunctionalGraph& g = graph.issue_graph(p);
        for (const auto& cyc : g.cycles()) {
            bool first = (opinions.at(cyc[0]) >> p) & 1u;
            for (AgentId i : cyc)
                if ((((opinions.at(i) >> p) & 1u) != 0) != first) return false;
        }
    }
    return true;
}

struct StabilizationSweep {
    std::uint64_t pairs_checked = 0;
    bool equivalence_holds = true;          // stabilizes <=> unanimous cycles
    bool bound_holds = true;                // stabilization within the tail bound
    std::uint64_t stabilized_count = 0;
    std::string first_mismatch;
    bool passed() const { return equivalence_holds && bound_holds; }
};

// Exhausts all (delegation graph, binary profile) pairs for the tautologous
// constraint and checks stabilization <=> all-cycles-unanimous, plus the
// stabilization-time bound whenever the condition holds.
inline StabilizationSweep verify_stabilization_equivalence(
    int n, int m, std::uint64_t budget = kDefaultBudget) {
    long double graphs = 1;
    for (int k = 0; k < n * m; ++k) graphs *= n;
    long double profiles = 1;
    for (int k = 0; k < n * m; ++k) profiles *= 2;
    detail::check_budget(graphs * profiles, budget, "verify_stabilization_equivalence");

    Theory th = Theory::tautology(m);
    StabilizationSweep report;
    int max_steps = (1 << (n * m)) + 1;

    std::vector<AgentId> tr(static_cast<std::size_t>(n) * m, 0);
    for (;;) {
        std::vector<std::vector<AgentId>> rows(n, std::vector<AgentId>(m));
        for (AgentId i = 0; i < n; ++i)
            for (IssueId p = 0; p < m; ++p) rows[i][p] = tr[static_cast<std::size_t>(i) * m + p];
        BdpGraph graph(rows, m);

        for (std::uint32_t prof = 0; prof < (1u << (n * m)); ++prof) {
            std::vector<std::uint32_t> opinions(n);
            for (AgentId i = 0; i < n; ++i)
                opinions[i] = (prof >> (i * m)) & ((1u << m) - 1);
            bool condition = all_cycles_unanimous(graph, opinions);
            BdpOutcome oc = run(BdpState(graph, th, opinions), max_steps);
            ++report.pairs_checked;
            if (oc.stabilized()) ++report.stabilized_count;
            if (oc.stabilized() != condition) {
                report.equivalence_holds = false;
                if (report.first_mismatch.empty())
                    report.first_mismatch = "mismatch at profile " + std::to_string(prof);
            }
            if (condition && oc.stabilized() &&
                oc.steps_to_stabilize > graph.stabilization_bound())
                report.bound_holds = false;
        }

        std::size_t k = tr.size();
        bool advanced = false;
        while (k-- > 0) {
            if (tr[k] + 1 < n) {
                ++tr[k];
                advanced = true;
                break;
            }
            tr[k] = 0;
        }
        if (!advanced) break;
    }
    return report;
}

struct TransformOutcome {
    BdpOutcome dynamics;
    OpinionProfile transformed; // limit values; oscillating entries abstain
    IncompleteOpinion aggregate;
};

// Runs the dynamics, maps every agent-issue pair that never settles to
// abstention, and aggregates the resulting incomplete profile.
inline TransformOutcome transform_then_aggregate(
    const std::vector<std::uint32_t>& opinions, const BdpGraph& graph, const Theory& theory,
    const std::function<IncompleteOpinion(const OpinionProfile&)>& aggregate, int max_steps) {
    BdpOutcome oc = run(BdpState(graph, theory, opinions), max_steps);
    if (oc.status == BdpStatus::Inconclusive)
        throw BudgetError("transform_then_aggregate: dynamics did not resolve within max_steps");
    int n = graph.n(), m = graph.m();
    std::vector<IncompleteOpinion> ops(n, IncompleteOpinion(m));
    for (AgentId i = 0; i < n; ++i)
        for (IssueId p = 0; p < m; ++p) {
            if ((oc.unstable_issues[i] >> p) & 1u) continue; // abstains
            ops[i].set(p, ((oc.eventual_values[i] >> p) & 1u) ? TriVal::Accept : TriVal::Reject);
        }
    OpinionProfile transformed(std::move(ops));
    IncompleteOpinion agg = aggregate(transformed);
    return {std::move(oc), std::move(transformed), std::move(agg)};
}

inline TransformOutcome transform_then_aggregate_majority(
    const std::vector<std::uint32_t>& opinions, const BdpGraph& graph, const Theory& theory,
    int max_steps) {
    return transform_then_aggregate(
        opinions, graph, theory,
        [](const OpinionProfile& p) { return majority(p); }, max_steps);
}

} // namespace liqdem
