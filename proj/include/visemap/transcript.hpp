#pragma once

#include <set>
#include <string>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/io.hpp"

namespace visemap {

/// One utterance worth of unit labels (phonemes or visemes), tagged with the
/// cross-validation fold it belongs to. Folds are 1-based.
struct Transcript {
    std::string utterance_id;
    int fold = 1;
    std::vector<std::string> units;

    bool operator==(const Transcript&) const = default;
};

/// Transcript file: TSV, one utterance per line,
/// `<utterance_id> <TAB> <fold> <TAB> <label> <label> ...`.
/// Utterance ids must be unique within a file.
inline std::vector<Transcript> parse_transcripts(const std::string& text) {
    std::vector<Transcript> out;
    std::set<std::string> seen;
    for (const auto& raw : detail::lines_of(text)) {
        if (detail::trim(raw).empty()) continue;
        auto fields = detail::split_char(raw, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            raise(ErrorCode::ParseError, "bad transcript line: '" + raw + "'");
        Transcript t;
        t.utterance_id = detail::trim(fields[0]);
        if (t.utterance_id.empty())
            raise(ErrorCode::ParseError, "empty utterance id in line: '" + raw + "'");
        try {
            size_t pos = 0;
            t.fold = std::stoi(detail::trim(fields[1]), &pos);
            if (pos != detail::trim(fields[1]).size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "bad fold number in line: '" + raw + "'");
        }
        if (t.fold < 1)
            raise(ErrorCode::ParseError, "fold must be >= 1 in line: '" + raw + "'");
        if (fields.size() == 3) t.units = detail::split_ws(fields[2]);
        if (!seen.insert(t.utterance_id).second)
            raise(ErrorCode::ParseError, "duplicate utterance id '" + t.utterance_id + "'");
        out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<Transcript> load_transcripts(const std::filesystem::path& path) {
    return parse_transcripts(read_file(path));
}

inline std::string serialize_transcripts(const std::vector<Transcript>& transcripts) {
    std::string out;
    for (const auto& t : transcripts) {
        out += t.utterance_id;
        out += '\t';
        out += std::to_string(t.fold);
        out += '\t';
        for (size_t i = 0; i < t.units.size(); ++i) {
            if (i) out += ' ';
            out += t.units[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace visemap
