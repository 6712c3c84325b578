#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "visemap/error.hpp"
#include "visemap/inventory.hpp"
#include "visemap/viseme_map.hpp"

// Built-in data: the published consonant and vowel phoneme-to-viseme maps,
// the sixteen talker-dependent maps derived from AVL2 phoneme confusions,
// and the reconstructed AVL2 phoneme inventory. Encoding decisions (symbol
// deduplication, count mismatches against the published ratio table) are
// documented in data/FIXTURES.md.

namespace visemap {
namespace detail {

struct MapSpec {
    const char* id;
    const char* citation;
    Coverage coverage;
    const char* excluded;                  // space separated, may be empty
    std::vector<const char*> classes;      // one string of members per class
};

inline VisemeMap build_map(const MapSpec& spec) {
    VisemeMap map;
    map.id = spec.id;
    map.citation = spec.citation;
    map.coverage = spec.coverage;
    map.excluded = split_ws(spec.excluded);
    std::sort(map.excluded.begin(), map.excluded.end());
    int n = 0;
    for (const char* members : spec.classes) {
        char label[16];
        std::snprintf(label, sizeof(label), "V%02d", ++n);
        map.classes.push_back({label, split_ws(members)});
    }
    validate_map(map);
    return map;
}

inline std::vector<VisemeMap> make_builtin_maps() {
    const std::vector<MapSpec> specs = {
        // --- consonant maps ---
        {"binnie-consonants", "Binnie et al. (1976)", Coverage::Consonant, "",
         {"p b m", "f v", "th dh", "sh zh", "k g", "w", "r", "l n", "t d s z"}},
        {"bozkurt-consonants", "Bozkurt et al. (2007)", Coverage::Consonant,
         "axr el em en",
         {"g hh k ng", "l d n t", "s z", "ch sh jh zh", "r", "th dh", "f v", "p b m"}},
        {"disney-consonants", "Disney animation guides", Coverage::Consonant, "si",
         {"p b m", "w", "f v", "th", "l", "d t z s r n", "sh ch jh", "y g k ng"}},
        {"finn-consonants", "Finn & Montgomery (1988)", Coverage::Consonant, "",
         {"p b m", "th dh", "w s", "k hh g", "sh zh ch jh", "y", "z", "f", "v",
          "t d n l r"}},
        {"fisher-consonants", "Fisher (1968)", Coverage::Consonant, "",
         {"k g ng m", "p b", "f v", "sh zh jh ch", "t d n th dh z s r l"}},
        {"franks-consonants", "Franks & Kimble (1972)", Coverage::Consonant, "",
         {"p b m", "f", "r w", "sh jh ch"}},
        {"hazen-consonants", "Hazen et al. (2004)", Coverage::Consonant,
         "axr dcl em en epi gcl hh kcl tcl",
         {"l", "r", "y", "b p", "m", "s z", "ch jh sh zh", "ng", "f v",
          "t d th dh g k"}},
        {"heider-consonants", "Heider & Heider (1940)", Coverage::Consonant, "",
         {"p b m", "f v", "k g", "sh ch jh", "n t d", "l", "r", "th"}},
        {"jeffers-consonants", "Jeffers & Barley (1971)", Coverage::Consonant,
         "axr dx el em en eng nx ux",
         {"f v", "r q w", "p b m", "th dh", "ch jh sh zh", "g k ng", "s z",
          "d l n t"}},
        {"kricos-consonants", "Kricos & Lesner (1982)", Coverage::Consonant, "",
         {"p b m", "f v", "w r", "t d s z", "l", "th dh", "sh zh ch jh",
          "k n y hh ng g"}},
        {"lee-consonants", "Lee & Yook (2002)", Coverage::Consonant, "",
         {"d t s z th dh", "g k n ng l y hh", "f v", "r w", "jh ch sh zh", "p b m"}},
        {"neti-consonants", "Neti et al. (2000)", Coverage::Consonant, "",
         {"l r y", "s z", "t d n", "sh zh jh ch", "f v", "ng k g w", "p b m",
          "th dh"}},
        {"nichie-consonants", "Nichie (1912)", Coverage::Consonant, "",
         {"p b m", "f v", "wh w", "s z", "sh zh ch jh", "t d n", "y", "th", "l",
          "k g ng", "hh", "r"}},
        {"walden-consonants", "Walden et al. (1977)", Coverage::Consonant, "",
         {"p b m", "f v", "th dh", "sh zh", "w", "s z", "r", "t d n k g y", "l"}},
        {"woodward-consonants", "Woodward & Barber (1960)", Coverage::Consonant, "",
         {"t d n l th dh s z ch jh sh zh y k g hh", "p b m", "f v", "w r wh"}},

        // --- vowel maps ---
        {"bozkurt-vowels", "Bozkurt et al. (2007)", Coverage::Vowel, "axr el em en",
         {"ey ah", "eh ae", "er", "iy ih ax y", "uw uh w", "aw", "ao aa oy ow"}},
        {"disney-vowels", "Disney animation guides", Coverage::Vowel, "si",
         {"uh hh", "ea iy ay eh a", "uw", "ua ao oa"}},
        {"hazen-vowels", "Hazen et al. (2004)", Coverage::Vowel,
         "axr dcl em en epi gcl kcl tcl",
         {"aw uh uw ow ao w oy", "ah aa", "ae eh ay ey", "ax ih iy"}},
        {"jeffers-vowels", "Jeffers & Barley (1971)", Coverage::Vowel,
         "axr dx el em en eng nx ux",
         {"aa ae ah ay eh ey ih iy ao ax", "oy", "aw", "er ow uh uw"}},
        {"lee-vowels", "Lee & Yook (2002)", Coverage::Vowel, "",
         {"iy ih", "eh ey ae", "aa aw ay ah", "ao oy ow", "uh uw"}},
        {"montgomery-vowels", "Montgomery & Jackson (1983)", Coverage::Vowel, "",
         {"iy ih", "eh ae ey ay", "aa ao ah", "uh er ax", "oy", "ia hh", "aw ow",
          "uw ua"}},
        {"neti-vowels", "Neti et al. (2000)", Coverage::Vowel, "",
         {"uw uh ow", "ae eh ey ay", "ih iy ax", "ao ah aa er oy aw hh"}},
        {"nichie-vowels", "Nichie (1912)", Coverage::Vowel, "",
         {"uw", "uh ow", "aw", "iy ah ih", "ae", "eh ia", "ax ey"}},

        // --- talker-dependent maps derived from AVL2 phoneme confusions ---
        {"talker1-tight-mixed", "derived(avl2-talker1, tight, mixed)", Coverage::Full, "",
         {"ah ay iy n ow", "b eh ey y", "d s", "ch l", "t", "w", "f", "k", "ax v",
          "jh z", "aa uw"}},
        {"talker2-tight-mixed", "derived(avl2-talker2, tight, mixed)", Coverage::Full, "",
         {"ax ay ey iy s", "eh v w y", "l m n", "ah f", "z", "ch", "t", "aa",
          "ow uw", "jh k", "b d p"}},
        {"talker3-tight-mixed", "derived(avl2-talker3, tight, mixed)", Coverage::Full, "",
         {"ey f n", "d t p", "b s", "l m", "ax eh", "iy", "aa", "jh", "ow", "z",
          "y", "ch", "ay", "ah", "k w", "v", "uw"}},
        {"talker4-tight-mixed", "derived(avl2-talker4, tight, mixed)", Coverage::Full, "",
         {"ah ay iy ey", "m n", "ax eh p", "k w", "d s", "f", "v", "aa", "z", "ch",
          "b", "ow", "jh t", "l", "uw"}},
        {"talker1-tight-split", "derived(avl2-talker1, tight, split)", Coverage::Full, "",
         {"ah iy ow uw", "aa ey", "ax eh", "d s t", "ch l", "k", "z", "w", "f",
          "m n", "jh v", "b y"}},
        {"talker2-tight-split", "derived(avl2-talker2, tight, split)", Coverage::Full, "",
         {"ay ey iy uw", "ow", "ax", "eh", "ah", "aa", "v w", "k", "d b", "t", "ch",
          "l m n", "jh p y", "f s"}},
        {"talker3-tight-split", "derived(avl2-talker3, tight, split)", Coverage::Full, "",
         {"ey iy", "ay", "ax eh", "ah", "d p t", "l m", "k w", "ch", "ow", "y",
          "uw", "aa", "z", "b s", "v", "jh", "f n"}},
        {"talker4-tight-split", "derived(avl2-talker4, tight, split)", Coverage::Full, "",
         {"ah ay iy ey", "ax eh", "m n", "k l", "jh t", "b", "ow", "y", "uw", "aa",
          "w", "f", "v", "ch", "d s"}},
        {"talker1-loose-mixed", "derived(avl2-talker1, loose, mixed)", Coverage::Full, "",
         {"b eh ey p w y k", "ah ay f iy m n ow", "jh z", "aa uw", "d s t", "ch l",
          "ax v"}},
        {"talker2-loose-mixed", "derived(avl2-talker2, loose, mixed)", Coverage::Full, "",
         {"aa ax ay ey iy s ch", "eh t v w y", "l m n", "ah f", "z", "b d p",
          "ow uw", "jh k"}},
        {"talker3-loose-mixed", "derived(avl2-talker3, loose, mixed)", Coverage::Full, "",
         {"ah ay ey f iy n", "ax eh y ch", "b s v", "jh", "ow", "z", "l m uw",
          "d p t", "k w", "aa"}},
        {"talker4-loose-mixed", "derived(avl2-talker4, loose, mixed)", Coverage::Full, "",
         {"ah ay ch iy ey", "aa m uw n", "ax eh p v y", "jh t", "k l w", "ow",
          "d f s", "b"}},
        {"talker1-loose-split", "derived(avl2-talker1, loose, split)", Coverage::Full, "",
         {"ah iy ow uw", "aa ay", "ax eh ey", "b w y", "k", "z", "m", "l",
          "d f s t", "ch", "jh v"}},
        {"talker2-loose-split", "derived(avl2-talker2, loose, split)", Coverage::Full, "",
         {"aa ah ax ay ey iy ow uw", "k t v w", "f s", "ch l m n", "jh p y", "b d",
          "z"}},
        {"talker3-loose-split", "derived(avl2-talker3, loose, split)", Coverage::Full, "",
         {"ah ay iy ey", "ax eh", "b s v", "d p t", "y", "jh", "ow", "z", "uw",
          "l m", "k w", "f n", "aa", "ch"}},
        {"talker4-loose-split", "derived(avl2-talker4, loose, split)", Coverage::Full, "",
         {"ah ay iy ey", "ch k l w", "d f s v", "m n", "aa", "jh t", "ow", "uw",
          "y", "b"}},
    };

    std::vector<VisemeMap> maps;
    maps.reserve(specs.size());
    for (const auto& spec : specs) maps.push_back(build_map(spec));
    return maps;
}

}  // namespace detail

/// All built-in maps: 15 consonant, 8 vowel, 16 talker-dependent.
inline const std::vector<VisemeMap>& builtin_maps() {
    static const std::vector<VisemeMap> maps = detail::make_builtin_maps();
    return maps;
}

/// The AVL2 phoneme inventory (alphabet recitations, British English),
/// reconstructed to the reported 29 phonemes; see data/FIXTURES.md.
inline const PhonemeInventory& avl2_inventory() {
    static const PhonemeInventory inv = [] {
        auto vowel = [](const char* s, const char* ipa) {
            return Phoneme{s, PhonemeClass::Vowel, ipa};
        };
        auto cons = [](const char* s, const char* ipa) {
            return Phoneme{s, PhonemeClass::Consonant, ipa};
        };
        return PhonemeInventory(
            "avl2",
            {vowel("aa", "ɑː"), vowel("ae", "æ"), vowel("ah", "ʌ"), vowel("ax", "ə"),
             vowel("ay", "aɪ"), vowel("eh", "ɛ"), vowel("ey", "eɪ"), vowel("ih", "ɪ"),
             vowel("iy", "iː"), vowel("ow", "əʊ"), vowel("uw", "uː"), cons("b", "b"),
             cons("ch", "tʃ"), cons("d", "d"), cons("f", "f"), cons("g", "ɡ"),
             cons("jh", "dʒ"), cons("k", "k"), cons("l", "l"), cons("m", "m"),
             cons("n", "n"), cons("p", "p"), cons("r", "r"), cons("s", "s"),
             cons("t", "t"), cons("v", "v"), cons("w", "w"), cons("y", "j"),
             cons("z", "z")});
    }();
    return inv;
}

/// Built-ins plus any map files from `extra_dir` (every regular file is
/// parsed as a map file). Duplicate ids are an error.
inline std::vector<VisemeMap> load_catalog(const std::filesystem::path& extra_dir = {}) {
    std::vector<VisemeMap> maps = builtin_maps();
    if (extra_dir.empty()) return maps;
    std::set<std::string> ids;
    for (const auto& m : maps) ids.insert(m.id);
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(extra_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        auto map = load_map(path);
        if (!ids.insert(map.id).second)
            raise(ErrorCode::DuplicateMapId,
                  "catalog already contains a map with id '" + map.id + "' (" +
                      path.string() + ")");
        maps.push_back(std::move(map));
    }
    return maps;
}

/// Resolves an id against a catalog. A bare author name is accepted when it
/// matches exactly one map ("woodward"; "lee" is ambiguous).
inline const VisemeMap& find_map(const std::vector<VisemeMap>& catalog, const std::string& id) {
    const VisemeMap* prefix_hit = nullptr;
    int prefix_hits = 0;
    for (const auto& m : catalog) {
        if (m.id == id) return m;
        if (m.id.size() > id.size() && m.id.compare(0, id.size(), id) == 0 &&
            m.id[id.size()] == '-') {
            prefix_hit = &m;
            ++prefix_hits;
        }
    }
    if (prefix_hits == 1) return *prefix_hit;
    if (prefix_hits > 1)
        raise(ErrorCode::UnknownMap, "map id '" + id + "' is ambiguous");
    raise(ErrorCode::UnknownMap, "no map with id '" + id + "'");
}

}  // namespace visemap
