#pragma once

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "visemap/align.hpp"
#include "visemap/error.hpp"
#include "visemap/transcript.hpp"
#include "visemap/viseme_map.hpp"

namespace visemap {

/// Correctness C = (N - D - S) / N, pooled over the collection: counts are
/// summed across utterances before dividing.
inline double correctness(const std::vector<AlignmentResult>& results) {
    long long n = 0, d = 0, s = 0;
    for (const auto& r : results) {
        n += r.n_ref;
        d += r.deletions;
        s += r.substitutions;
    }
    if (n == 0) raise(ErrorCode::EmptyReference, "no reference labels to score against");
    return static_cast<double>(n - d - s) / static_cast<double>(n);
}

struct CorrectnessSummary {
    std::map<int, double> per_fold;
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation (n-1) / sqrt(folds)
    int fold_count = 0;
};

inline CorrectnessSummary aggregate(const std::map<int, double>& fold_scores) {
    if (fold_scores.empty()) raise(ErrorCode::EmptyInput, "no folds to aggregate");
    CorrectnessSummary summary;
    summary.per_fold = fold_scores;
    summary.fold_count = static_cast<int>(fold_scores.size());
    double sum = 0.0;
    for (const auto& [fold, c] : fold_scores) sum += c;
    summary.mean = sum / summary.fold_count;
    if (summary.fold_count > 1) {
        double ss = 0.0;
        for (const auto& [fold, c] : fold_scores) {
            double d = c - summary.mean;
            ss += d * d;
        }
        double sample_sd = std::sqrt(ss / (summary.fold_count - 1));
        summary.std_error = sample_sd / std::sqrt(static_cast<double>(summary.fold_count));
    }
    return summary;
}

/// Scores a hypothesis set against references, pooling within each fold.
/// References and hypotheses pair up by utterance id.
inline CorrectnessSummary score_transcripts(const std::vector<Transcript>& refs,
                                            const std::vector<Transcript>& hyps) {
    std::unordered_map<std::string, const Transcript*> by_id;
    for (const auto& h : hyps) by_id.emplace(h.utterance_id, &h);
    std::map<int, std::vector<AlignmentResult>> per_fold;
    for (const auto& ref : refs) {
        auto it = by_id.find(ref.utterance_id);
        if (it == by_id.end())
            raise(ErrorCode::IdMismatch,
                  "no hypothesis for utterance '" + ref.utterance_id + "'");
        per_fold[ref.fold].push_back(align(ref, *it->second));
    }
    std::map<int, double> fold_scores;
    for (const auto& [fold, results] : per_fold) fold_scores[fold] = correctness(results);
    return aggregate(fold_scores);
}

struct SweepRow {
    std::string map_id;
    double mean_c = 0.0;
    double std_error = 0.0;
    int fold_count = 0;
};

/// One row per map, scored on its own hypothesis transcripts against the
/// phoneme references converted through the map. Rows come back sorted by
/// mean correctness, best first (ties by id for reproducibility).
inline std::vector<SweepRow> sweep(
    const std::vector<VisemeMap>& maps, const std::vector<Transcript>& refs,
    const std::unordered_map<std::string, std::vector<Transcript>>& hyps_by_map) {
    std::vector<SweepRow> rows;
    rows.reserve(maps.size());
    for (const auto& map : maps) {
        auto it = hyps_by_map.find(map.id);
        if (it == hyps_by_map.end())
            raise(ErrorCode::IncompleteSweep, "no hypotheses for map '" + map.id + "'");
        std::vector<Transcript> viseme_refs;
        viseme_refs.reserve(refs.size());
        for (const auto& ref : refs) viseme_refs.push_back(apply_map(map, ref));
        CorrectnessSummary summary;
        try {
            summary = score_transcripts(viseme_refs, it->second);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::IdMismatch)
                raise(ErrorCode::IncompleteSweep,
                      "map '" + map.id + "': " + std::string(e.what()));
            throw;
        }
        rows.push_back({map.id, summary.mean, summary.std_error, summary.fold_count});
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.mean_c != b.mean_c) return a.mean_c > b.mean_c;
        return a.map_id < b.map_id;
    });
    return rows;
}

}  // namespace visemap
