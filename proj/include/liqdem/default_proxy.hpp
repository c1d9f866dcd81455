#pragma once

// Proxy voting with default values: every agent submits a binary value and
// a trustee (possibly itself). Whole cycles, not only self-loops, act as
// opinion sources: a cycle speaks with the majority of its members'
// defaults and is mute when they split evenly. A cycle's weight is the
// number of agents whose delegation path ends in it, so that each voter
// counts exactly once.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/proxy.hpp"
#include "liqdem/quota.hpp"

namespace liqdem {

struct DefaultEntry {
    bool value = false;   // the default opinion
    AgentId trustee = 0;  // may equal the agent itself

    friend bool operator==(const DefaultEntry&, const DefaultEntry&) = default;
};

class DefaultProxyProfile {
public:
    DefaultProxyProfile(std::vector<std::vector<DefaultEntry>> opinions, int m)
        : opinions_(std::move(opinions)), m_(m) {
        if (opinions_.empty())
            throw InputError("DefaultProxyProfile: at least one agent required");
        int n = static_cast<int>(opinions_.size());
        for (AgentId i = 0; i < n; ++i) {
            if (static_cast<int>(opinions_[i].size()) != m_)
                throw InputError("DefaultProxyProfile: agent " + std::to_string(i) +
                                 " has wrong issue count");
            for (const DefaultEntry& e : opinions_[i])
                if (e.trustee < 0 || e.trustee >= n)
                    throw InputError("DefaultProxyProfile: trustee out of range for agent " +
                                     std::to_string(i));
        }
    }

    int n() const { return static_cast<int>(opinions_.size()); }
    int m() const { return m_; }
    const DefaultEntry& entry(AgentId i, IssueId p) const { return opinions_.at(i).at(p); }

private:
    std::vector<std::vector<DefaultEntry>> opinions_;
    int m_;
};

struct CycleInfo {
    std::vector<AgentId> members;
    int accept = 0;          // members whose default accepts
    int reject = 0;          // members whose default rejects
    std::uint64_t weight = 0; // agents whose delegation path reaches this cycle

    bool hung() const { return accept == reject; }
    TriVal verdict() const {
        return accept > reject ? TriVal::Accept
               : reject > accept ? TriVal::Reject
                                 : TriVal::Abstain;
    }
};

struct CycleDecomposition {
    FunctionalGraph graph;
    std::vector<CycleInfo> cycles;

    int cycle_index_of(AgentId i) const { return graph.cycle_of(i); }
};

inline CycleDecomposition decompose(const DefaultProxyProfile& profile, IssueId p) {
    std::vector<AgentId> next(profile.n());
    for (AgentId i = 0; i < profile.n(); ++i) next[i] = profile.entry(i, p).trustee;
    FunctionalGraph g(std::move(next));
    std::vector<CycleInfo> infos;
    infos.reserve(g.cycles().size());
    for (std::size_t c = 0; c < g.cycles().size(); ++c) {
        CycleInfo info;
        info.members = g.cycles()[c];
        for (AgentId i : info.members)
            (profile.entry(i, p).value ? info.accept : info.reject) += 1;
        info.weight = static_cast<std::uint64_t>(g.component_size(static_cast<int>(c)));
        infos.push_back(std::move(info));
    }
    return {std::move(g), std::move(infos)};
}

// Majority over cycle verdicts weighted by the population each cycle
// represents; hung cycles contribute to neither side.
inline IncompleteOpinion pv_default_majority(const DefaultProxyProfile& profile) {
    IncompleteOpinion out(profile.m());
    for (IssueId p = 0; p < profile.m(); ++p) {
        CycleDecomposition d = decompose(profile, p);
        std::uint64_t acc = 0, rej = 0;
        for (const CycleInfo& c : d.cycles) {
            if (c.verdict() == TriVal::Accept) acc += c.weight;
            else if (c.verdict() == TriVal::Reject) rej += c.weight;
        }
        out.set(p, acc > rej   ? TriVal::Accept
                   : rej > acc ? TriVal::Reject
                               : TriVal::Abstain);
    }
    return out;
}

// Each agent inherits the verdict of the cycle its delegation path reaches.
inline OpinionProfile translate_t_prime(const DefaultProxyProfile& profile) {
    std::vector<IncompleteOpinion> out(profile.n(), IncompleteOpinion(profile.m()));
    for (IssueId p = 0; p < profile.m(); ++p) {
        CycleDecomposition d = decompose(profile, p);
        for (AgentId i = 0; i < profile.n(); ++i)
            out[i].set(p, d.cycles[d.cycle_index_of(i)].verdict());
    }
    return OpinionProfile(std::move(out));
}

// View of a default profile as a plain proxy profile: agents on self-loops
// keep their default as a vote, everyone else delegates. Only valid when no
// agent other than a self-loop holder delegates to itself, which the
// constructor of ProxyProfile enforces.
inline ProxyProfile to_plain_proxy(const DefaultProxyProfile& profile) {
    std::vector<ProxyOpinion> ops(profile.n(), ProxyOpinion(profile.m(), ProxyEntry::value(false)));
    for (AgentId i = 0; i < profile.n(); ++i)
        for (IssueId p = 0; p < profile.m(); ++p) {
            const DefaultEntry& e = profile.entry(i, p);
            ops[i][p] = (e.trustee == i) ? ProxyEntry::value(e.value)
                                         : ProxyEntry::delegate(e.trustee);
        }
    return ProxyProfile(std::move(ops), profile.m());
}

} // namespace liqdem
