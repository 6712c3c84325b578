#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "visemap/confusion.hpp"

// Exact maximum-clique search. Problem sizes here are small (a phoneme set,
// typically under 50 vertices), so an exact branch-and-bound with a greedy
// colouring bound is affordable; no approximation is involved anywhere.

namespace visemap {
namespace detail {

/// Branch and bound over an adjacency matrix restricted to `cand` (vertex
/// indices). `target` short-circuits the search: once a clique of at least
/// `target` vertices is found the search stops. Returns the best size found.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<std::vector<char>>& adj, int target)
        : adj_(adj), target_(target) {}

    int run(const std::vector<int>& cand) {
        best_ = 0;
        expand(0, cand);
        return best_;
    }

private:
    void expand(int clique_size, const std::vector<int>& cand) {
        if (best_ >= target_) return;
        if (cand.empty()) {
            best_ = std::max(best_, clique_size);
            return;
        }
        // Greedy colouring of the candidate subgraph. The number of colours
        // used by any proper colouring bounds the clique number, and a vertex
        // of colour c can extend the clique to at most clique_size + c.
        std::vector<int> colour(cand.size(), 0);
        std::vector<std::vector<int>> colour_classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            size_t c = 0;
            while (c < colour_classes.size()) {
                bool clash = false;
                for (int u : colour_classes[c])
                    if (adj_[cand[i]][u]) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
                ++c;
            }
            if (c == colour_classes.size()) colour_classes.emplace_back();
            colour_classes[c].push_back(cand[i]);
            colour[i] = static_cast<int>(c) + 1;
        }
        // Order candidates by colour so the bound tightens as we go.
        std::vector<size_t> order(cand.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return colour[a] < colour[b]; });

        for (size_t k = order.size(); k-- > 0;) {
            size_t i = order[k];
            if (clique_size + colour[i] <= best_) return;  // colours only shrink from here
            int v = cand[i];
            std::vector<int> next;
            for (size_t t = 0; t < k; ++t) {
                int u = cand[order[t]];
                if (adj_[v][u]) next.push_back(u);
            }
            if (next.empty())
                best_ = std::max(best_, clique_size + 1);
            else
                expand(clique_size + 1, next);
            if (best_ >= target_) return;
        }
    }

    const std::vector<std::vector<char>>& adj_;
    int target_;
    int best_ = 0;
};

inline int max_clique_size(const std::vector<std::vector<char>>& adj,
                           const std::vector<int>& cand,
                           int target = std::numeric_limits<int>::max()) {
    return CliqueSearch(adj, target).run(cand);
}

/// Lexicographically smallest clique of exactly `size` vertices within
/// `cand`, where vertex order is index order. Works by fixing members one at
/// a time: the smallest vertex that still leaves a large enough clique among
/// its later neighbours is committed.
inline std::vector<int> lex_smallest_clique(const std::vector<std::vector<char>>& adj,
                                            std::vector<int> cand, int size) {
    std::sort(cand.begin(), cand.end());
    std::vector<int> clique;
    while (static_cast<int>(clique.size()) < size) {
        bool advanced = false;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::vector<int> rest;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (adj[v][cand[j]]) rest.push_back(cand[j]);
            int need = size - static_cast<int>(clique.size()) - 1;
            if (max_clique_size(adj, rest, need) >= need) {
                clique.push_back(v);
                cand = std::move(rest);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;  // no clique of the requested size exists
    }
    return clique;
}

}  // namespace detail

/// Maximum clique of the confusion graph induced on `candidates`, as sorted
/// symbols. Ties between equal-size cliques go to the one whose sorted member
/// list is lexicographically smallest. Empty candidates give an empty clique.
inline std::vector<std::string> max_clique(const ConfusionGraph& g,
                                           const std::vector<std::string>& candidates) {
    if (candidates.empty()) return {};
    size_t n = g.vertices.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) adj[i][j] = g.has_edge(i, j) ? 1 : 0;

    std::vector<int> cand;
    cand.reserve(candidates.size());
    for (const auto& sym : candidates) cand.push_back(static_cast<int>(g.index_of(sym)));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    int best = detail::max_clique_size(adj, cand);
    auto indices = detail::lex_smallest_clique(adj, cand, best);

    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(g.vertices[static_cast<size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace visemap
