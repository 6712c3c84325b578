#pragma once

// Independent oracles for the combinatorial pieces: exhaustive subset search
// for maximum cliques and exhaustive path search for alignments. None of this
// shares code with the library implementations it checks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "visemap/confusion.hpp"
#include "visemap/transcript.hpp"

namespace oracle {

/// Largest clique by scanning all 2^n vertex subsets; among maximum-size
/// cliques returns the lexicographically smallest sorted symbol list.
/// Only usable for small n.
inline std::vector<std::string> brute_force_max_clique(
    const visemap::ConfusionGraph& g, const std::vector<std::string>& candidates) {
    std::vector<size_t> idx;
    for (const auto& sym : candidates) idx.push_back(g.index_of(sym));
    std::sort(idx.begin(), idx.end());
    size_t n = idx.size();
    std::vector<std::string> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<size_t> subset;
        for (size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) subset.push_back(idx[i]);
        bool clique = true;
        for (size_t a = 0; a < subset.size() && clique; ++a)
            for (size_t b = a + 1; b < subset.size() && clique; ++b)
                if (!g.has_edge(subset[a], subset[b])) clique = false;
        if (!clique) continue;
        std::vector<std::string> symbols;
        for (auto i : subset) symbols.push_back(g.vertices[i]);
        std::sort(symbols.begin(), symbols.end());
        if (symbols.size() > best.size() || (symbols.size() == best.size() && symbols < best))
            best = std::move(symbols);
    }
    return best;
}

inline size_t brute_force_max_clique_size(const visemap::ConfusionGraph& g,
                                          const std::vector<std::string>& candidates) {
    return brute_force_max_clique(g, candidates).size();
}

struct AlignmentCounts {
    int matches = 0, substitutions = 0, deletions = 0, insertions = 0;
    int cost() const { return substitutions + deletions + insertions; }
    bool operator==(const AlignmentCounts&) const = default;
};

namespace detail {

inline void enumerate_cost(const std::vector<std::string>& r, const std::vector<std::string>& h,
                           size_t i, size_t j, int cost, int& best) {
    int remaining = std::abs(static_cast<int>(r.size() - i) - static_cast<int>(h.size() - j));
    if (cost + remaining >= best) return;
    if (i == r.size() && j == h.size()) {
        best = cost;
        return;
    }
    if (i < r.size() && j < h.size())
        enumerate_cost(r, h, i + 1, j + 1, cost + (r[i] == h[j] ? 0 : 1), best);
    if (i < r.size()) enumerate_cost(r, h, i + 1, j, cost + 1, best);
    if (j < h.size()) enumerate_cost(r, h, i, j + 1, cost + 1, best);
}

// Walks the alignment from the back, trying moves in the documented
// preference order (match, substitution, deletion, insertion). The first
// completed path of exactly minimal cost is the tie-broken alignment.
inline bool reconstruct(const std::vector<std::string>& r, const std::vector<std::string>& h,
                        size_t i, size_t j, int budget, AlignmentCounts& counts) {
    if (i == 0 && j == 0) return budget == 0;
    int remaining = std::abs(static_cast<int>(i) - static_cast<int>(j));
    if (budget < remaining) return false;
    if (i > 0 && j > 0) {
        bool equal = r[i - 1] == h[j - 1];
        int move_cost = equal ? 0 : 1;
        if (budget >= move_cost && reconstruct(r, h, i - 1, j - 1, budget - move_cost, counts)) {
            (equal ? counts.matches : counts.substitutions)++;
            return true;
        }
    }
    if (i > 0 && budget >= 1 && reconstruct(r, h, i - 1, j, budget - 1, counts)) {
        counts.deletions++;
        return true;
    }
    if (j > 0 && budget >= 1 && reconstruct(r, h, i, j - 1, budget - 1, counts)) {
        counts.insertions++;
        return true;
    }
    return false;
}

}  // namespace detail

/// Exhaustive-search alignment: minimal cost over every monotone alignment,
/// tie-broken exactly like the library's traceback.
inline AlignmentCounts brute_force_align(const std::vector<std::string>& ref,
                                         const std::vector<std::string>& hyp) {
    int best = static_cast<int>(ref.size() + hyp.size()) + 1;
    detail::enumerate_cost(ref, hyp, 0, 0, 0, best);
    if (ref.empty() && hyp.empty()) best = 0;
    AlignmentCounts counts;
    bool ok = detail::reconstruct(ref, hyp, ref.size(), hyp.size(), best, counts);
    (void)ok;
    return counts;
}

/// Random confusion matrix over the given labels: each unordered pair gets a
/// confusion with probability `density`, split across the two directions.
inline visemap::ConfusionMatrix random_confusion(std::mt19937& rng,
                                                 std::vector<std::string> labels,
                                                 double density) {
    size_t n = labels.size();
    std::vector<std::vector<std::int64_t>> counts(n, std::vector<std::int64_t>(n, 0));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> mass(1, 9);
    std::uniform_int_distribution<int> pick(0, 2);
    for (size_t i = 0; i < n; ++i) counts[i][i] = mass(rng);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (coin(rng) >= density) continue;
            switch (pick(rng)) {
                case 0: counts[i][j] = mass(rng); break;
                case 1: counts[j][i] = mass(rng); break;
                default:
                    counts[i][j] = mass(rng);
                    counts[j][i] = mass(rng);
            }
        }
    }
    return visemap::ConfusionMatrix(std::move(labels), std::move(counts));
}

}  // namespace oracle
