#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/io.hpp"

namespace visemap {

enum class PhonemeClass { Vowel, Consonant };

inline const char* phoneme_class_name(PhonemeClass c) {
    return c == PhonemeClass::Vowel ? "vowel" : "consonant";
}

/// Atomic speech unit. `symbol` is the typeable ASCII identifier used in all
/// file formats; `ipa` is a display-only string.
struct Phoneme {
    std::string symbol;
    PhonemeClass cls = PhonemeClass::Consonant;
    std::string ipa;

    bool operator==(const Phoneme&) const = default;
};

/// Ordered, duplicate-free registry of phonemes. Immutable after construction.
class PhonemeInventory {
public:
    PhonemeInventory() = default;

    PhonemeInventory(std::string name, std::vector<Phoneme> phonemes)
        : name_(std::move(name)), phonemes_(std::move(phonemes)) {
        for (size_t i = 0; i < phonemes_.size(); ++i) {
            const auto& p = phonemes_[i];
            if (p.symbol.empty() || p.symbol.find_first_of(" \t\r\n") != std::string::npos)
                raise(ErrorCode::ParseError, "invalid phoneme symbol '" + p.symbol + "'");
            if (!index_.emplace(p.symbol, i).second)
                raise(ErrorCode::DuplicatePhoneme,
                      "phoneme '" + p.symbol + "' declared twice in inventory '" + name_ + "'");
        }
    }

    const std::string& name() const { return name_; }
    size_t size() const { return phonemes_.size(); }
    const std::vector<Phoneme>& phonemes() const { return phonemes_; }

    bool contains(const std::string& symbol) const { return index_.count(symbol) != 0; }

    PhonemeClass classify(const std::string& symbol) const {
        auto it = index_.find(symbol);
        if (it == index_.end())
            raise(ErrorCode::UnknownPhoneme,
                  "phoneme '" + symbol + "' not in inventory '" + name_ + "'");
        return phonemes_[it->second].cls;
    }

    auto begin() const { return phonemes_.begin(); }
    auto end() const { return phonemes_.end(); }

private:
    std::string name_;
    std::vector<Phoneme> phonemes_;
    std::unordered_map<std::string, size_t> index_;
};

/// Inventory file: one phoneme per line, `<symbol> <vowel|consonant> [ipa]`.
/// `#` starts a comment line; blank lines are ignored.
inline PhonemeInventory parse_inventory(const std::string& text, const std::string& name) {
    std::vector<Phoneme> phonemes;
    for (const auto& raw : detail::lines_of(text)) {
        auto line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto tokens = detail::split_ws(line);
        if (tokens.size() < 2 || tokens.size() > 3)
            raise(ErrorCode::ParseError, "bad inventory line: '" + raw + "'");
        PhonemeClass cls;
        if (tokens[1] == "vowel")
            cls = PhonemeClass::Vowel;
        else if (tokens[1] == "consonant")
            cls = PhonemeClass::Consonant;
        else
            raise(ErrorCode::ParseError, "unknown class token '" + tokens[1] + "'");
        phonemes.push_back({tokens[0], cls, tokens.size() == 3 ? tokens[2] : ""});
    }
    return PhonemeInventory(name, std::move(phonemes));
}

inline PhonemeInventory load_inventory(const std::filesystem::path& path) {
    return parse_inventory(read_file(path), path.stem().string());
}

/// Canonical form: `symbol class ipa`, one per line, declaration order.
inline std::string serialize_inventory(const PhonemeInventory& inv) {
    std::string out;
    for (const auto& p : inv) {
        out += p.symbol;
        out += ' ';
        out += phoneme_class_name(p.cls);
        if (!p.ipa.empty()) {
            out += ' ';
            out += p.ipa;
        }
        out += '\n';
    }
    return out;
}

}  // namespace visemap
