#pragma once

// Model enumeration and the consistency/entailment services built on it.
// A Theory caches the full model list of its constraint once; every
// downstream check is a scan over that list.

#include <cstdint>
#include <optional>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/formula.hpp"

namespace liqdem {

// Total truth assignment over m issues, one bit per issue.
struct Valuation {
    std::uint32_t bits = 0;
    int m = 0;

    bool get(IssueId i) const { return (bits >> i) & 1u; }
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// A set of literals with at most one sign per issue, as a pair of masks.
struct LiteralSet {
    std::uint32_t defined = 0;
    std::uint32_t values = 0;

    void add(Literal l) {
        defined |= 1u << l.issue;
        if (l.positive) values |= 1u << l.issue;
        else values &= ~(1u << l.issue);
    }

    bool contains_issue(IssueId i) const { return (defined >> i) & 1u; }

    bool matches(std::uint32_t valuation) const {
        return (valuation & defined) == values;
    }

    std::vector<Literal> literals(int m) const {
        std::vector<Literal> out;
        for (IssueId i = 0; i < m; ++i)
            if (contains_issue(i)) out.push_back({i, ((values >> i) & 1u) != 0});
        return out;
    }
};

// Packs a literal list; empty result when two opposite signs collide.
inline std::optional<LiteralSet> pack_literals(const std::vector<Literal>& lits) {
    LiteralSet s;
    for (const Literal& l : lits) {
        std::uint32_t bit = 1u << l.issue;
        if (s.defined & bit) {
            bool prev = (s.values & bit) != 0;
            if (prev != l.positive) return std::nullopt;
        }
        s.add(l);
    }
    return s;
}

inline std::vector<Valuation> models(const Formula& gamma, const IssueSet& issues) {
    int m = issues.size();
    if (m > kMaxIssues)
        throw EnumerationLimitError("models: issue count exceeds enumeration cap");
    if (gamma.max_atom() >= m)
        throw InputError("models: formula references an issue outside the set");
    std::vector<Valuation> out;
    for (std::uint32_t v = 0; v < (1u << m); ++v)
        if (gamma.eval(v)) out.push_back({v, m});
    return out;
}

class Theory {
public:
    Theory(Formula gamma, IssueSet issues)
        : gamma_(std::move(gamma)), issues_(std::move(issues)) {
        for (const Valuation& v : liqdem::models(gamma_, issues_))
            model_masks_.push_back(v.bits);
    }

    static Theory tautology(int m) { return Theory(Formula::top(), IssueSet::numbered(m)); }

    int m() const { return issues_.size(); }
    const IssueSet& issues() const { return issues_; }
    const Formula& gamma() const { return gamma_; }
    const std::vector<std::uint32_t>& model_masks() const { return model_masks_; }

    bool satisfiable() const { return !model_masks_.empty(); }

    bool consistent(const LiteralSet& s) const {
        for (std::uint32_t v : model_masks_)
            if (s.matches(v)) return true;
        return false;
    }

    // True iff some model of gamma agrees with every literal; sign-conflicting
    // sets are inconsistent by definition.
    bool consistent_with(const std::vector<Literal>& lits) const {
        auto packed = pack_literals(lits);
        return packed && consistent(*packed);
    }

    // True iff every model agreeing with the set also satisfies the target
    // (vacuously true when no model agrees).
    bool entails(const LiteralSet& s, Literal target) const {
        std::uint32_t bit = 1u << target.issue;
        for (std::uint32_t v : model_masks_) {
            if (!s.matches(v)) continue;
            bool val = (v & bit) != 0;
            if (val != target.positive) return false;
        }
        return true;
    }

    bool entails(const std::vector<Literal>& lits, Literal target) const {
        auto packed = pack_literals(lits);
        if (!packed) return true; // inconsistent premises entail everything
        return entails(*packed, target);
    }

private:
    Formula gamma_;
    IssueSet issues_;
    std::vector<std::uint32_t> model_masks_;
};

} // namespace liqdem
