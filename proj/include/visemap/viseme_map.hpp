#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/inventory.hpp"
#include "visemap/io.hpp"
#include "visemap/transcript.hpp"

namespace visemap {

/// Reserved label for the class that absorbs phonemes a map does not cover.
/// Never counted in confusion factors.
inline constexpr const char* kGarbageLabel = "gar";

/// A viseme: one class of phonemes assumed visually indistinguishable.
struct Viseme {
    std::string label;
    std::vector<std::string> members;

    bool operator==(const Viseme&) const = default;
};

enum class Coverage { Consonant, Vowel, Full };

inline const char* coverage_name(Coverage c) {
    switch (c) {
        case Coverage::Consonant: return "consonant";
        case Coverage::Vowel: return "vowel";
        case Coverage::Full: return "full";
    }
    return "full";
}

inline Coverage parse_coverage(const std::string& token) {
    if (token == "consonant") return Coverage::Consonant;
    if (token == "vowel") return Coverage::Vowel;
    if (token == "full") return Coverage::Full;
    raise(ErrorCode::ParseError, "unknown coverage token '" + token + "'");
}

/// A named many-to-one phoneme-to-viseme map: an ordered partition of a
/// phoneme subset into viseme classes, plus an explicit list of phonemes the
/// source deliberately excluded. Immutable value; `validate` enforces the
/// partition and exclusion invariants.
struct VisemeMap {
    std::string id;
    std::string citation;
    Coverage coverage = Coverage::Full;
    std::vector<Viseme> classes;
    std::vector<std::string> excluded;  // kept sorted

    bool operator==(const VisemeMap&) const = default;
};

/// Throws unless the map is well-formed: unique class labels, non-empty
/// members (garbage class may be empty), each symbol in at most one class,
/// excluded symbols in no class.
inline void validate_map(const VisemeMap& map) {
    std::set<std::string> labels;
    std::set<std::string> symbols;
    for (const auto& cls : map.classes) {
        if (cls.label.empty())
            raise(ErrorCode::ParseError, "map '" + map.id + "' has a class with an empty label");
        if (!labels.insert(cls.label).second)
            raise(ErrorCode::ParseError,
                  "map '" + map.id + "' declares class '" + cls.label + "' twice");
        if (cls.members.empty() && cls.label != kGarbageLabel)
            raise(ErrorCode::ParseError,
                  "map '" + map.id + "' class '" + cls.label + "' has no members");
        for (const auto& sym : cls.members) {
            if (!symbols.insert(sym).second)
                raise(ErrorCode::OverlappingClasses,
                      "map '" + map.id + "' assigns '" + sym + "' to more than one class");
        }
    }
    for (const auto& sym : map.excluded) {
        if (symbols.count(sym))
            raise(ErrorCode::OverlappingClasses,
                  "map '" + map.id + "' both excludes and assigns '" + sym + "'");
    }
}

/// symbol -> viseme label lookup table for a map.
inline std::unordered_map<std::string, std::string> label_index(const VisemeMap& map) {
    std::unordered_map<std::string, std::string> index;
    for (const auto& cls : map.classes)
        for (const auto& sym : cls.members) index.emplace(sym, cls.label);
    return index;
}

/// Replaces each phoneme by the label of its containing viseme. Uncovered or
/// excluded phonemes fall back to the garbage label, so the result always has
/// the input's length.
inline Transcript apply_map(const VisemeMap& map, const Transcript& t) {
    auto index = label_index(map);
    Transcript out;
    out.utterance_id = t.utterance_id;
    out.fold = t.fold;
    out.units.reserve(t.units.size());
    for (const auto& sym : t.units) {
        auto it = index.find(sym);
        out.units.push_back(it == index.end() ? std::string(kGarbageLabel) : it->second);
    }
    return out;
}

struct ConfusionFactorReport {
    int viseme_count = 0;   // V: non-garbage classes
    int phoneme_count = 0;  // P: distinct phonemes in non-garbage classes
    double cf = 0.0;        // V / P

    bool operator==(const ConfusionFactorReport&) const = default;
};

/// CF = V/P over the non-garbage classes; lower means a more contractive map.
inline ConfusionFactorReport confusion_factor(const VisemeMap& map) {
    int visemes = 0;
    std::set<std::string> phonemes;
    for (const auto& cls : map.classes) {
        if (cls.label == kGarbageLabel) continue;
        ++visemes;
        phonemes.insert(cls.members.begin(), cls.members.end());
    }
    if (visemes == 0)
        raise(ErrorCode::EmptyMap, "map '" + map.id + "' has no non-garbage classes");
    ConfusionFactorReport report;
    report.viseme_count = visemes;
    report.phoneme_count = static_cast<int>(phonemes.size());
    report.cf = static_cast<double>(visemes) / static_cast<double>(report.phoneme_count);
    return report;
}

/// Pairs a consonant-coverage map with a vowel-coverage map into a full map
/// over `inventory`. Class labels are prefixed "c." / "v." to avoid
/// collisions. A symbol listed on both sides stays on the side matching its
/// inventory class (consonant side when the inventory cannot classify it).
/// Inventory phonemes covered by neither side go to the garbage class.
inline VisemeMap combine(const VisemeMap& consonants, const VisemeMap& vowels,
                         const PhonemeInventory& inventory) {
    if (consonants.coverage != Coverage::Consonant)
        raise(ErrorCode::CoverageMismatch,
              "'" + consonants.id + "' does not have consonant coverage");
    if (vowels.coverage != Coverage::Vowel)
        raise(ErrorCode::CoverageMismatch, "'" + vowels.id + "' does not have vowel coverage");

    std::set<std::string> consonant_side;
    for (const auto& cls : consonants.classes)
        consonant_side.insert(cls.members.begin(), cls.members.end());

    auto vowel_side_wins = [&](const std::string& sym) {
        return inventory.contains(sym) && inventory.classify(sym) == PhonemeClass::Vowel;
    };

    VisemeMap out;
    out.id = consonants.id + "+" + vowels.id;
    out.citation = "combined(" + consonants.id + ", " + vowels.id + ")";
    out.coverage = Coverage::Full;

    std::set<std::string> covered;
    for (const auto& cls : consonants.classes) {
        Viseme v{"c." + cls.label, {}};
        for (const auto& sym : cls.members) {
            v.members.push_back(sym);
            covered.insert(sym);
        }
        out.classes.push_back(std::move(v));
    }
    for (const auto& cls : vowels.classes) {
        Viseme v{"v." + cls.label, {}};
        for (const auto& sym : cls.members) {
            if (consonant_side.count(sym)) {
                if (!vowel_side_wins(sym)) continue;  // consonant side keeps it
                // vowel side wins: strip from the consonant-side class
                for (auto& c : out.classes) {
                    auto it = std::find(c.members.begin(), c.members.end(), sym);
                    if (it != c.members.end()) {
                        c.members.erase(it);
                        break;
                    }
                }
            }
            v.members.push_back(sym);
            covered.insert(sym);
        }
        if (!v.members.empty()) out.classes.push_back(std::move(v));
    }
    // a class emptied by duplicate resolution would violate the non-empty invariant
    std::erase_if(out.classes, [](const Viseme& v) { return v.members.empty(); });

    std::set<std::string> excluded(consonants.excluded.begin(), consonants.excluded.end());
    excluded.insert(vowels.excluded.begin(), vowels.excluded.end());
    for (const auto& sym : covered) excluded.erase(sym);
    out.excluded.assign(excluded.begin(), excluded.end());

    Viseme garbage{kGarbageLabel, {}};
    for (const auto& p : inventory)
        if (!covered.count(p.symbol) && !excluded.count(p.symbol))
            garbage.members.push_back(p.symbol);
    out.classes.push_back(std::move(garbage));

    validate_map(out);
    return out;
}

/// Map file format. Header lines:
///   # id: <id>
///   # citation: <free text>
///   # coverage: consonant|vowel|full
///   # excluded: <symbols>
/// Body lines: `<label>: <symbol> <symbol> ...`. Other `#` lines are comments.
inline VisemeMap parse_map(const std::string& text) {
    VisemeMap map;
    bool saw_id = false, saw_coverage = false;
    for (const auto& raw : detail::lines_of(text)) {
        auto line = detail::trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto header = detail::trim(line.substr(1));
            auto colon = header.find(':');
            if (colon == std::string::npos) continue;  // plain comment
            auto key = detail::trim(header.substr(0, colon));
            auto value = detail::trim(header.substr(colon + 1));
            if (key == "id") {
                map.id = value;
                saw_id = true;
            } else if (key == "citation") {
                map.citation = value;
            } else if (key == "coverage") {
                map.coverage = parse_coverage(value);
                saw_coverage = true;
            } else if (key == "excluded") {
                map.excluded = detail::split_ws(value);
                std::sort(map.excluded.begin(), map.excluded.end());
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            raise(ErrorCode::ParseError, "bad map line: '" + raw + "'");
        Viseme cls;
        cls.label = detail::trim(line.substr(0, colon));
        cls.members = detail::split_ws(line.substr(colon + 1));
        map.classes.push_back(std::move(cls));
    }
    if (!saw_id) raise(ErrorCode::ParseError, "map file missing '# id:' header");
    if (!saw_coverage) raise(ErrorCode::ParseError, "map file missing '# coverage:' header");
    validate_map(map);
    return map;
}

inline VisemeMap load_map(const std::filesystem::path& path) {
    return parse_map(read_file(path));
}

inline std::string serialize_map(const VisemeMap& map) {
    std::string out;
    out += "# id: " + map.id + "\n";
    out += "# citation: " + map.citation + "\n";
    out += "# coverage: " + std::string(coverage_name(map.coverage)) + "\n";
    out += "# excluded:";
    for (const auto& sym : map.excluded) out += " " + sym;
    out += "\n";
    for (const auto& cls : map.classes) {
        out += cls.label + ":";
        for (const auto& sym : cls.members) out += " " + sym;
        out += "\n";
    }
    return out;
}

}  // namespace visemap
