#pragma once

// Structure of a functional graph (endomap on agents): cycle decomposition,
// distance to the cycle and reachable-cycle index per node. Delegation
// graphs, default-value cycle analysis and the opinion-copying dynamics all
// sit on top of this.

#include <cstdint>
#include <vector>

#include "liqdem/common.hpp"

namespace liqdem {

class FunctionalGraph {
public:
    explicit FunctionalGraph(std::vector<AgentId> next) : next_(std::move(next)) {
        int n = static_cast<int>(next_.size());
        for (AgentId t : next_)
            if (t < 0 || t >= n) throw InputError("FunctionalGraph: trustee out of range");
        analyze();
    }

    int n() const { return static_cast<int>(next_.size()); }
    AgentId next(AgentId i) const { return next_.at(i); }
    const std::vector<AgentId>& next_map() const { return next_; }

    const std::vector<std::vector<AgentId>>& cycles() const { return cycles_; }
    int cycle_of(AgentId i) const { return cycle_of_.at(i); }
    bool on_cycle(AgentId i) const { return on_cycle_.at(i); }
    int dist_to_cycle(AgentId i) const { return dist_.at(i); }

    // Number of agents whose delegation path ends in the given cycle.
    int component_size(int cycle_index) const { return component_size_.at(cycle_index); }

    // Longest tail: the maximum distance from any node to its cycle.
    int max_tail_depth() const {
        int d = 0;
        for (int x : dist_) d = std::max(d, x);
        return d;
    }

private:
    void analyze() {
        int n = this->n();
        std::vector<int> color(n, 0); // 0 unseen, 1 on current path, 2 resolved
        cycle_of_.assign(n, -1);
        on_cycle_.assign(n, false);
        dist_.assign(n, 0);

        for (AgentId start = 0; start < n; ++start) {
            if (color[start]) continue;
            std::vector<AgentId> path;
            AgentId v = start;
            while (color[v] == 0) {
                color[v] = 1;
                path.push_back(v);
                v = next_[v];
            }
            if (color[v] == 1) {
                // new cycle discovered on the current path
                std::size_t at = 0;
                while (path[at] != v) ++at;
                std::vector<AgentId> cyc(path.begin() + at, path.end());
                int ci = static_cast<int>(cycles_.size());
                for (AgentId u : cyc) {
                    cycle_of_[u] = ci;
                    on_cycle_[u] = true;
                    dist_[u] = 0;
                }
                cycles_.push_back(std::move(cyc));
                path.resize(at);
            }
            // unwind the tail in reverse: each node is one step further out
            for (std::size_t k = path.size(); k-- > 0;) {
                AgentId u = path[k];
                cycle_of_[u] = cycle_of_[next_[u]];
                dist_[u] = on_cycle_[next_[u]] ? 1 : dist_[next_[u]] + 1;
            }
            for (AgentId u = 0; u < n; ++u)
                if (color[u] == 1) color[u] = 2;
        }
        component_size_.assign(cycles_.size(), 0);
        for (AgentId i = 0; i < n; ++i) ++component_size_[cycle_of_[i]];
    }

    std::vector<AgentId> next_;
    std::vector<std::vector<AgentId>> cycles_;
    std::vector<int> cycle_of_;
    std::vector<bool> on_cycle_;
    std::vector<int> dist_;
    std::vector<int> component_size_;
};

} // namespace liqdem
