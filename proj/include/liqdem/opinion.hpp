#pragma once

// Incomplete opinions (accept / reject / abstain per issue), profiles, the
// consistency and closure checks, and enumeration of the individually
// rational opinion space.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/semantics.hpp"

namespace liqdem {

enum class TriVal : std::uint8_t { Reject = 0, Accept = 1, Abstain = 2 };

inline char to_char(TriVal v) {
    switch (v) {
        case TriVal::Reject: return '0';
        case TriVal::Accept: return '1';
        case TriVal::Abstain: return '*';
    }
    return '?';
}

inline TriVal trival_from_char(char c) {
    switch (c) {
        case '0': return TriVal::Reject;
        case '1': return TriVal::Accept;
        case '*': return TriVal::Abstain;
        default: throw InputError(std::string("opinion value must be 0, 1 or *, got '") + c + "'");
    }
}

class IncompleteOpinion {
public:
    IncompleteOpinion() = default;

    explicit IncompleteOpinion(int m) : m_(m) {}

    static IncompleteOpinion from_string(const std::string& s) {
        IncompleteOpinion o(static_cast<int>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i)
            o.set(static_cast<IssueId>(i), trival_from_char(s[i]));
        return o;
    }

    // Total opinion from a valuation bitmask.
    static IncompleteOpinion from_bits(std::uint32_t bits, int m) {
        IncompleteOpinion o(m);
        o.defined_ = (m == 32) ? ~0u : ((1u << m) - 1);
        o.values_ = bits & o.defined_;
        return o;
    }

    int m() const { return m_; }

    TriVal get(IssueId i) const {
        std::uint32_t bit = 1u << i;
        if (!(defined_ & bit)) return TriVal::Abstain;
        return (values_ & bit) ? TriVal::Accept : TriVal::Reject;
    }

    void set(IssueId i, TriVal v) {
        std::uint32_t bit = 1u << i;
        if (v == TriVal::Abstain) {
            defined_ &= ~bit;
            values_ &= ~bit;
        } else {
            defined_ |= bit;
            if (v == TriVal::Accept) values_ |= bit;
            else values_ &= ~bit;
        }
    }

    bool is_total() const { return defined_ == ((m_ == 32) ? ~0u : ((1u << m_) - 1)); }

    // Bitmask view of a total opinion.
    std::uint32_t bits() const { return values_; }

    LiteralSet literal_set() const { return {defined_, values_}; }

    std::string to_string() const {
        std::string s;
        s.reserve(m_);
        for (IssueId i = 0; i < m_; ++i) s.push_back(to_char(get(i)));
        return s;
    }

    friend bool operator==(const IncompleteOpinion&, const IncompleteOpinion&) = default;

private:
    std::uint32_t defined_ = 0;
    std::uint32_t values_ = 0;
    int m_ = 0;
};

class OpinionProfile {
public:
    OpinionProfile() = default;

    explicit OpinionProfile(std::vector<IncompleteOpinion> opinions)
        : opinions_(std::move(opinions)) {
        if (opinions_.empty()) throw InputError("OpinionProfile: at least one agent required");
    }

    int n() const { return static_cast<int>(opinions_.size()); }
    int m() const { return opinions_.front().m(); }

    const IncompleteOpinion& operator[](AgentId i) const { return opinions_.at(i); }
    IncompleteOpinion& operator[](AgentId i) { return opinions_.at(i); }
    const std::vector<IncompleteOpinion>& opinions() const { return opinions_; }

    int count_accept(IssueId p) const { return count(p, TriVal::Accept); }
    int count_reject(IssueId p) const { return count(p, TriVal::Reject); }
    int count_active(IssueId p) const { return count_accept(p) + count_reject(p); }

    friend bool operator==(const OpinionProfile&, const OpinionProfile&) = default;

private:
    int count(IssueId p, TriVal v) const {
        int c = 0;
        for (const auto& o : opinions_)
            if (o.get(p) == v) ++c;
        return c;
    }

    std::vector<IncompleteOpinion> opinions_;
};

struct OpinionStatus {
    bool consistent = false;
    bool closed = false;
    bool rational() const { return consistent && closed; }
};

// Consistency: the determinate entries extend to a model of gamma.
// Closure: every literal the determinate entries entail under gamma is
// already assigned with that sign.
inline OpinionStatus check_opinion(const IncompleteOpinion& o, const Theory& th) {
    LiteralSet ls = o.literal_set();
    OpinionStatus st;
    st.consistent = th.consistent(ls);
    st.closed = true;
    for (IssueId p = 0; p < th.m(); ++p) {
        TriVal v = o.get(p);
        if (th.entails(ls, pos(p)) && v != TriVal::Accept) st.closed = false;
        if (th.entails(ls, neg(p)) && v != TriVal::Reject) st.closed = false;
        if (!st.closed) break;
    }
    return st;
}

// All consistent and closed incomplete opinions for the constraint, in
// lexicographic order of their string form read as a base-3 counter.
inline std::vector<IncompleteOpinion> rational_opinions(const Theory& th) {
    int m = th.m();
    std::vector<IncompleteOpinion> out;
    std::vector<TriVal> digits(m, TriVal::Reject);
    for (;;) {
        IncompleteOpinion o(m);
        for (IssueId i = 0; i < m; ++i) o.set(i, digits[i]);
        if (check_opinion(o, th).rational()) out.push_back(o);
        int i = m - 1;
        while (i >= 0 && digits[i] == TriVal::Abstain) digits[i--] = TriVal::Reject;
        if (i < 0) break;
        digits[i] = static_cast<TriVal>(static_cast<int>(digits[i]) + 1);
    }
    return out;
}

// Exhaustive iteration over the profile space pool^n; throws when the space
// exceeds the budget. The visitor may return false to stop early.
inline void for_each_profile(const std::vector<IncompleteOpinion>& pool, int n,
                             std::uint64_t budget,
                             const std::function<bool(const OpinionProfile&)>& fn) {
    if (pool.empty()) throw InputError("for_each_profile: empty opinion pool");
    long double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<long double>(pool.size());
    if (total > static_cast<long double>(budget))
        throw BudgetError("profile space of size " + std::to_string(static_cast<double>(total)) +
                          " exceeds budget " + std::to_string(budget));

    std::vector<std::size_t> idx(n, 0);
    std::vector<IncompleteOpinion> ops(n, pool[0]);
    for (;;) {
        if (!fn(OpinionProfile(ops))) return;
        int i = n - 1;
        while (i >= 0 && idx[i] + 1 == pool.size()) {
            idx[i] = 0;
            ops[i] = pool[0];
            --i;
        }
        if (i < 0) return;
        ++idx[i];
        ops[i] = pool[idx[i]];
    }
}

} // namespace liqdem
