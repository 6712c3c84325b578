#pragma once

#include <optional>
#include <string>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/transcript.hpp"

namespace visemap {

/// One aligned column: a reference unit, a hypothesis unit, or both.
struct AlignedPair {
    std::optional<std::string> ref;
    std::optional<std::string> hyp;

    bool operator==(const AlignedPair&) const = default;
};

struct AlignmentResult {
    int n_ref = 0;  // N: reference length
    int matches = 0;
    int substitutions = 0;  // S
    int deletions = 0;      // D
    int insertions = 0;     // I
    std::vector<AlignedPair> pairs;
};

/// Minimum-edit-distance alignment with unit costs for substitution,
/// deletion and insertion. Traceback tie-breaking prefers match, then
/// substitution, then deletion, then insertion, so the pairs list is
/// reproducible across runs.
inline AlignmentResult align(const Transcript& ref, const Transcript& hyp) {
    if (ref.utterance_id != hyp.utterance_id)
        raise(ErrorCode::IdMismatch, "aligning '" + ref.utterance_id + "' against '" +
                                         hyp.utterance_id + "'");
    const auto& r = ref.units;
    const auto& h = hyp.units;
    size_t n = r.size(), m = h.size();

    std::vector<std::vector<int>> cost(n + 1, std::vector<int>(m + 1, 0));
    for (size_t i = 1; i <= n; ++i) cost[i][0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) cost[0][j] = static_cast<int>(j);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            int diag = cost[i - 1][j - 1] + (r[i - 1] == h[j - 1] ? 0 : 1);
            int del = cost[i - 1][j] + 1;
            int ins = cost[i][j - 1] + 1;
            cost[i][j] = std::min({diag, del, ins});
        }
    }

    AlignmentResult result;
    result.n_ref = static_cast<int>(n);
    size_t i = n, j = m;
    while (i > 0 || j > 0) {
        bool equal = i > 0 && j > 0 && r[i - 1] == h[j - 1];
        int diag_cost = equal ? 0 : 1;
        if (i > 0 && j > 0 && cost[i][j] == cost[i - 1][j - 1] + diag_cost) {
            result.pairs.push_back({r[i - 1], h[j - 1]});
            if (equal)
                ++result.matches;
            else
                ++result.substitutions;
            --i, --j;
        } else if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
            result.pairs.push_back({r[i - 1], std::nullopt});
            ++result.deletions;
            --i;
        } else {
            result.pairs.push_back({std::nullopt, h[j - 1]});
            ++result.insertions;
            --j;
        }
    }
    std::reverse(result.pairs.begin(), result.pairs.end());
    return result;
}

}  // namespace visemap
