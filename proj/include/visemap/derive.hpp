#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "visemap/clique.hpp"
#include "visemap/confusion.hpp"
#include "visemap/inventory.hpp"
#include "visemap/viseme_map.hpp"

// Talker-dependent map derivation from a phoneme confusion matrix.
//
// Tight stage: phonemes that were only ever recognised as themselves (and
// phonemes that never appear at all) each become a singleton class. The
// remaining, mutually confused phonemes are grouped greedily: repeatedly take
// the largest clique of the symmetrised confusion graph induced on the
// still-unassigned phonemes, emit it as the next class, and remove its
// members from consideration. In split mode a class may not mix vowels and
// consonants, so the clique search runs within each pool.
//
// Loose stage: a second pass over a tight map. Each singleton class that has
// any symmetrised confusion with a multi-phoneme class is merged into the
// multi-phoneme class with the greatest confusion mass. Eligibility and
// masses are evaluated against the tight partition as it stood; merges do not
// cascade.
//
// Determinism: labels are ordered lexicographically before anything else
// happens, equal-size cliques resolve to the lexicographically smallest
// member list, singletons merge in symbol order, and mass ties go to the
// class containing the lexicographically smallest symbol.

namespace visemap {

enum class ClassMixing { Mixed, Split };

/// How "greatest confusion" aggregates when a singleton is attracted by a
/// multi-phoneme class: total symmetrised mass against all members (the
/// default), or the single heaviest edge (for sensitivity checks).
enum class LooseAggregation { SumOfCounts, MaxEdge };

struct DerivationConfig {
    ClassMixing mixing = ClassMixing::Mixed;
    LooseAggregation aggregation = LooseAggregation::SumOfCounts;
};

inline const char* class_mixing_name(ClassMixing m) {
    return m == ClassMixing::Mixed ? "mixed" : "split";
}

namespace detail {

inline VisemeMap assemble_derived(const std::string& stage, const DerivationConfig& config,
                                  std::vector<std::vector<std::string>> classes) {
    VisemeMap map;
    map.id = stage + "-" + class_mixing_name(config.mixing);
    map.citation = "derived(" + stage + ", " + class_mixing_name(config.mixing) + ")";
    map.coverage = Coverage::Full;
    int n = 0;
    for (auto& members : classes) {
        char label[16];
        std::snprintf(label, sizeof(label), "V%02d", ++n);
        map.classes.push_back({label, std::move(members)});
    }
    validate_map(map);
    return map;
}

}  // namespace detail

inline VisemeMap derive_tight(const ConfusionMatrix& m, const PhonemeInventory& inventory,
                              const DerivationConfig& config = {}) {
    for (const auto& label : m.labels()) {
        if (!inventory.contains(label))
            raise(ErrorCode::UnknownPhoneme,
                  "matrix label '" + label + "' not in inventory '" + inventory.name() + "'");
    }

    ConfusionGraph graph = to_graph(m);
    std::vector<std::vector<std::string>> classes;

    // Self-identified and never-seen phonemes are settled immediately.
    std::vector<std::string> pool;
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        if (graph.is_isolated(i))
            classes.push_back({graph.vertices[i]});
        else
            pool.push_back(graph.vertices[i]);
    }

    auto best_clique = [&](const std::vector<std::string>& candidates) {
        if (config.mixing == ClassMixing::Mixed) return max_clique(graph, candidates);
        std::vector<std::string> vowels, consonants;
        for (const auto& sym : candidates) {
            (inventory.classify(sym) == PhonemeClass::Vowel ? vowels : consonants)
                .push_back(sym);
        }
        auto a = max_clique(graph, vowels);
        auto b = max_clique(graph, consonants);
        if (a.size() != b.size()) return a.size() > b.size() ? a : b;
        return a <= b ? a : b;  // sorted member lists; lexicographic tie-break
    };

    while (!pool.empty()) {
        auto clique = best_clique(pool);
        classes.push_back(clique);
        std::erase_if(pool, [&](const std::string& sym) {
            return std::find(clique.begin(), clique.end(), sym) != clique.end();
        });
    }

    return detail::assemble_derived("tight", config, std::move(classes));
}

inline VisemeMap derive_loose(const VisemeMap& tight, const ConfusionMatrix& m,
                              const PhonemeInventory& inventory,
                              const DerivationConfig& config = {}) {
    std::set<std::string> map_symbols;
    for (const auto& cls : tight.classes)
        map_symbols.insert(cls.members.begin(), cls.members.end());
    std::set<std::string> matrix_symbols(m.labels().begin(), m.labels().end());
    if (map_symbols != matrix_symbols)
        raise(ErrorCode::LabelMismatch,
              "map '" + tight.id + "' and confusion matrix cover different phonemes");

    struct Candidate {
        std::vector<std::string> members;  // grows as singletons join
        std::vector<std::string> original; // tight members; masses use these
    };
    std::vector<Candidate> multis;
    std::vector<std::string> singles;
    for (const auto& cls : tight.classes) {
        if (cls.label == kGarbageLabel) continue;
        if (cls.members.size() >= 2)
            multis.push_back({cls.members, cls.members});
        else if (cls.members.size() == 1)
            singles.push_back(cls.members[0]);
    }
    std::sort(singles.begin(), singles.end());

    std::set<std::string> merged;
    for (const auto& sym : singles) {
        size_t si = m.index_of(sym);
        std::int64_t best_mass = 0;
        Candidate* best = nullptr;
        for (auto& cand : multis) {
            if (config.mixing == ClassMixing::Split &&
                inventory.classify(cand.original.front()) != inventory.classify(sym))
                continue;
            std::int64_t mass = 0;
            for (const auto& member : cand.original) {
                auto edge = m.symmetric(si, m.index_of(member));
                if (config.aggregation == LooseAggregation::SumOfCounts)
                    mass += edge;
                else
                    mass = std::max(mass, edge);
            }
            if (mass <= 0) continue;
            if (best == nullptr || mass > best_mass ||
                (mass == best_mass &&
                 *std::min_element(cand.original.begin(), cand.original.end()) <
                     *std::min_element(best->original.begin(), best->original.end()))) {
                best_mass = mass;
                best = &cand;
            }
        }
        if (best != nullptr) {
            best->members.push_back(sym);
            merged.insert(sym);
        }
    }

    // Rebuild in the tight map's class order; absorbed singletons disappear.
    std::vector<std::vector<std::string>> classes;
    size_t next_multi = 0;
    for (const auto& cls : tight.classes) {
        if (cls.label == kGarbageLabel) continue;
        if (cls.members.size() >= 2) {
            auto members = multis[next_multi++].members;
            std::sort(members.begin(), members.end());
            classes.push_back(std::move(members));
        } else if (!merged.count(cls.members[0])) {
            classes.push_back(cls.members);
        }
    }
    return detail::assemble_derived("loose", config, std::move(classes));
}

}  // namespace visemap
