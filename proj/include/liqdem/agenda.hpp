#pragma once

// Agenda classification by exhaustive search: minimally inconsistent literal
// sets, simplicity, even negatability and path-connectedness. All of it is
// definition-faithful brute force over subsets of the agenda; the costs are
// exponential in m and acceptable only at desk scale, which is the regime
// every caller here operates in.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liqdem/common.hpp"
#include "liqdem/semantics.hpp"

namespace liqdem {

// The full agenda p0, !p0, p1, !p1, ...
inline std::vector<Literal> full_agenda(int m) {
    std::vector<Literal> out;
    out.reserve(2 * m);
    for (IssueId i = 0; i < m; ++i) {
        out.push_back(pos(i));
        out.push_back(neg(i));
    }
    return out;
}

namespace detail {

// Visits index subsets of {0..count-1} of the given size in lexicographic
// order; returns false from the visitor to stop.
template <typename Fn>
bool for_each_combination(int count, int size, Fn&& fn) {
    if (size > count) return true;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return false;
        int i = size - 1;
        while (i >= 0 && idx[i] == count - size + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool set_inconsistent(const Theory& th, const std::vector<Literal>& lits) {
    return !th.consistent_with(lits);
}

} // namespace detail

// All X subseteq agenda with |X| <= max_size that are inconsistent with gamma
// while every proper subset is consistent. Enumerated by size ascending;
// supersets of already-found sets are pruned, which is what makes the
// minimality test implicit.
inline std::vector<std::vector<Literal>> minimal_inconsistent_sets(
    const std::vector<Literal>& agenda, const Theory& th, int max_size) {
    int count = static_cast<int>(agenda.size());
    if (max_size > count)
        throw InputError("minimal_inconsistent_sets: max_size exceeds agenda size");
    if (count > 62)
        throw EnumerationLimitError("minimal_inconsistent_sets: agenda too large");

    std::vector<std::vector<Literal>> found;
    std::vector<std::uint64_t> found_masks;

    for (int size = 1; size <= max_size; ++size) {
        detail::for_each_combination(count, size, [&](const std::vector<int>& idx) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ull << i;
            for (std::uint64_t fm : found_masks)
                if ((fm & mask) == fm) return true; // superset of a minimal set
            std::vector<Literal> lits;
            lits.reserve(idx.size());
            for (int i : idx) lits.push_back(agenda[i]);
            if (detail::set_inconsistent(th, lits)) {
                found.push_back(std::move(lits));
                found_masks.push_back(mask);
            }
            return true;
        });
    }
    return found;
}

// Minimal inconsistent sets of size >= 3 never contain a complementary pair,
// so they use at most one literal per issue; scanning sizes up to
// max(2, m) is exhaustive.
inline int minimal_inconsistent_scan_depth(const Theory& th, int agenda_size) {
    return std::min(agenda_size, std::max(2, th.m()));
}

inline bool is_simple(const std::vector<Literal>& agenda, const Theory& th) {
    auto sets = minimal_inconsistent_sets(
        agenda, th, minimal_inconsistent_scan_depth(th, static_cast<int>(agenda.size())));
    return std::none_of(sets.begin(), sets.end(),
                        [](const auto& s) { return s.size() >= 3; });
}

inline bool is_simple(const Theory& th) { return is_simple(full_agenda(th.m()), th); }

// Some minimal inconsistent X has an even-sized Y subseteq X whose
// sign-flip turns X into a gamma-consistent set.
inline bool is_evenly_negatable(const std::vector<Literal>& agenda, const Theory& th) {
    auto sets = minimal_inconsistent_sets(
        agenda, th, minimal_inconsistent_scan_depth(th, static_cast<int>(agenda.size())));
    for (const auto& x : sets) {
        int k = static_cast<int>(x.size());
        for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
            if (__builtin_popcount(sub) % 2 != 0) continue;
            std::vector<Literal> flipped;
            flipped.reserve(k);
            for (int i = 0; i < k; ++i)
                flipped.push_back((sub >> i) & 1u ? x[i].negated() : x[i]);
            if (th.consistent_with(flipped)) return true;
        }
    }
    return false;
}

inline bool is_evenly_negatable(const Theory& th) {
    return is_evenly_negatable(full_agenda(th.m()), th);
}

// Conditional entailment a |=^c b: some X subseteq the agenda is
// gamma-consistent with a, gamma-consistent with !b, and {a} u X u {gamma}
// logically implies b. X ranges over all sign-consistent literal sets.
inline bool conditional_entails(const Theory& th, Literal a, Literal b) {
    int m = th.m();
    std::vector<int> trits(m, 0); // 0 absent, 1 positive, 2 negative
    for (;;) {
        LiteralSet x;
        for (IssueId i = 0; i < m; ++i) {
            if (trits[i] == 1) x.add(pos(i));
            else if (trits[i] == 2) x.add(neg(i));
        }
        auto with = [&](Literal l) -> std::optional<LiteralSet> {
            LiteralSet s = x;
            if (s.contains_issue(l.issue) &&
                (((s.values >> l.issue) & 1u) != 0) != l.positive)
                return std::nullopt; // sign conflict
            s.add(l);
            return s;
        };
        auto xa = with(a);
        auto xnb = with(b.negated());
        if (xa && xnb && th.consistent(*xa) && th.consistent(*xnb) && th.entails(*xa, b))
            return true;
        // next trit vector
        int i = 0;
        while (i < m && trits[i] == 2) trits[i++] = 0;
        if (i == m) return false;
        ++trits[i];
    }
}

// Every ordered pair of distinct agenda literals is linked by a chain of
// conditional entailments.
inline bool is_path_connected(const std::vector<Literal>& agenda, const Theory& th) {
    int k = static_cast<int>(agenda.size());
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) reach[i][j] = conditional_entails(th, agenda[i], agenda[j]);
    for (int via = 0; via < k; ++via)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (reach[i][via] && reach[via][j]) reach[i][j] = true;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !reach[i][j]) return false;
    return true;
}

inline bool is_path_connected(const Theory& th) {
    return is_path_connected(full_agenda(th.m()), th);
}

} // namespace liqdem
