#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/io.hpp"

namespace visemap {

/// Square matrix of recognition counts: counts(i, j) = number of times
/// reference phoneme i was recognised as phoneme j. Integer-valued by
/// construction so downstream comparisons stay exact.
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;

    ConfusionMatrix(std::vector<std::string> labels, std::vector<std::vector<std::int64_t>> counts)
        : labels_(std::move(labels)), counts_(std::move(counts)) {
        if (counts_.size() != labels_.size())
            raise(ErrorCode::ShapeError, "row count does not match label count");
        std::set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second)
                raise(ErrorCode::DuplicatePhoneme, "duplicate label '" + l + "'");
        for (const auto& row : counts_) {
            if (row.size() != labels_.size())
                raise(ErrorCode::ShapeError, "matrix is not square");
            for (auto c : row)
                if (c < 0) raise(ErrorCode::ParseError, "negative count");
        }
    }

    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    std::int64_t count(size_t i, size_t j) const { return counts_[i][j]; }

    size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end())
            raise(ErrorCode::UnknownPhoneme, "label '" + label + "' not in matrix");
        return static_cast<size_t>(it - labels_.begin());
    }

    /// Direction-free confusion mass between two phonemes.
    std::int64_t symmetric(size_t i, size_t j) const { return counts_[i][j] + counts_[j][i]; }

    bool operator==(const ConfusionMatrix& other) const {
        return labels_ == other.labels_ && counts_ == other.counts_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::int64_t>> counts_;
};

/// Confusion CSV: first row `,label1,label2,...`; each following row
/// `labelK,c1,c2,...` with labelK in header order; integer cells only.
inline ConfusionMatrix parse_confusion(const std::string& text) {
    auto lines = detail::lines_of(text);
    std::erase_if(lines, [](const std::string& l) { return detail::trim(l).empty(); });
    if (lines.empty()) raise(ErrorCode::ParseError, "empty confusion file");

    auto header = detail::split_char(lines[0], ',');
    if (header.empty() || !detail::trim(header[0]).empty())
        raise(ErrorCode::ParseError, "confusion header must start with an empty cell");
    std::vector<std::string> labels;
    for (size_t i = 1; i < header.size(); ++i) {
        auto l = detail::trim(header[i]);
        if (l.empty()) raise(ErrorCode::ParseError, "empty label in confusion header");
        labels.push_back(l);
    }

    if (lines.size() - 1 != labels.size())
        raise(ErrorCode::ShapeError, "expected " + std::to_string(labels.size()) +
                                         " data rows, found " + std::to_string(lines.size() - 1));

    std::vector<std::vector<std::int64_t>> counts;
    for (size_t r = 1; r < lines.size(); ++r) {
        auto cells = detail::split_char(lines[r], ',');
        if (cells.size() != labels.size() + 1)
            raise(ErrorCode::ShapeError, "row '" + lines[r] + "' has wrong width");
        if (detail::trim(cells[0]) != labels[r - 1])
            raise(ErrorCode::ParseError, "row label '" + detail::trim(cells[0]) +
                                             "' does not match header order");
        std::vector<std::int64_t> row;
        for (size_t c = 1; c < cells.size(); ++c) {
            auto cell = detail::trim(cells[c]);
            if (cell.empty() || cell.find_first_not_of("0123456789-") != std::string::npos)
                raise(ErrorCode::ParseError, "non-integer cell '" + cell + "'");
            std::int64_t value = 0;
            try {
                value = std::stoll(cell);
            } catch (const std::exception&) {
                raise(ErrorCode::ParseError, "non-integer cell '" + cell + "'");
            }
            if (value < 0) raise(ErrorCode::ParseError, "negative cell '" + cell + "'");
            row.push_back(value);
        }
        counts.push_back(std::move(row));
    }
    return ConfusionMatrix(std::move(labels), std::move(counts));
}

inline ConfusionMatrix load_confusion(const std::filesystem::path& path) {
    return parse_confusion(read_file(path));
}

inline std::string serialize_confusion(const ConfusionMatrix& m) {
    std::string out;
    for (const auto& l : m.labels()) {
        out += ',';
        out += l;
    }
    out += '\n';
    for (size_t i = 0; i < m.size(); ++i) {
        out += m.label(i);
        for (size_t j = 0; j < m.size(); ++j) {
            out += ',';
            out += std::to_string(m.count(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Undirected graph over phonemes with an edge wherever the symmetrised
/// off-diagonal confusion is positive. Vertices are held in sorted order so
/// everything downstream is independent of the CSV's label order.
struct ConfusionGraph {
    std::vector<std::string> vertices;               // sorted
    std::vector<std::vector<std::int64_t>> weight;   // symmetric, zero diagonal

    size_t index_of(const std::string& v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v)
            raise(ErrorCode::UnknownPhoneme, "vertex '" + v + "' not in graph");
        return static_cast<size_t>(it - vertices.begin());
    }

    bool has_edge(size_t i, size_t j) const { return i != j && weight[i][j] > 0; }

    size_t edge_count() const {
        size_t n = 0;
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (weight[i][j] > 0) ++n;
        return n;
    }

    bool is_isolated(size_t i) const {
        for (size_t j = 0; j < vertices.size(); ++j)
            if (has_edge(i, j)) return false;
        return true;
    }
};

inline ConfusionGraph to_graph(const ConfusionMatrix& m) {
    ConfusionGraph g;
    g.vertices = m.labels();
    std::sort(g.vertices.begin(), g.vertices.end());
    size_t n = g.vertices.size();
    g.weight.assign(n, std::vector<std::int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        size_t mi = m.index_of(g.vertices[i]);
        for (size_t j = i + 1; j < n; ++j) {
            size_t mj = m.index_of(g.vertices[j]);
            auto w = m.symmetric(mi, mj);
            g.weight[i][j] = w;
            g.weight[j][i] = w;
        }
    }
    return g;
}

/// Phonemes only ever recognised as themselves: positive diagonal, zero
/// everywhere else in their row and column. A phoneme that never appears at
/// all (all-zero row and column) does not qualify.
inline std::vector<std::string> true_positive_only(const ConfusionMatrix& m) {
    std::vector<std::string> out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m.count(i, i) <= 0) continue;
        bool clean = true;
        for (size_t j = 0; j < m.size() && clean; ++j)
            if (j != i && (m.count(i, j) != 0 || m.count(j, i) != 0)) clean = false;
        if (clean) out.push_back(m.label(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace visemap
