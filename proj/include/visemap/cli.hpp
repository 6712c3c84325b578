#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "visemap/catalog.hpp"
#include "visemap/confusion.hpp"
#include "visemap/derive.hpp"
#include "visemap/error.hpp"
#include "visemap/inventory.hpp"
#include "visemap/io.hpp"
#include "visemap/score.hpp"
#include "visemap/transcript.hpp"
#include "visemap/viseme_map.hpp"

// `visemap` command line tool. Exit codes: 0 success, 1 domain error
// (the error name is printed to stderr), 2 usage error. All file outputs are
// written atomically and all subcommands are deterministic: identical
// invocations on identical inputs produce identical bytes.

namespace visemap::cli {
namespace detail {

using visemap::detail::format_fixed;

inline std::vector<VisemeMap> catalog_from_env() {
    const char* dir = std::getenv("VISEMAP_CATALOG");
    return load_catalog(dir ? std::filesystem::path(dir) : std::filesystem::path{});
}

/// Resolves a map argument: catalog id (or unique author prefix) first,
/// otherwise a map file path.
inline VisemeMap resolve_map(const std::string& id_or_file) {
    auto catalog = catalog_from_env();
    try {
        return find_map(catalog, id_or_file);
    } catch (const Error&) {
        if (std::filesystem::exists(id_or_file)) return load_map(id_or_file);
        throw;
    }
}

inline void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << content;
    else
        write_file_atomic(out_path, content);
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

struct ListOptions {
    std::string coverage;
    std::string format = "text";
};

inline void run_list(const ListOptions& opt, std::ostream& out) {
    auto catalog = catalog_from_env();
    std::string body;
    if (opt.format == "csv") body += "id,coverage,classes,citation\n";
    for (const auto& map : catalog) {
        if (!opt.coverage.empty() && coverage_name(map.coverage) != opt.coverage) continue;
        auto classes = std::to_string(map.classes.size());
        if (opt.format == "csv")
            body += map.id + "," + coverage_name(map.coverage) + "," + classes + "," +
                    map.citation + "\n";
        else
            body += map.id + "\t" + coverage_name(map.coverage) + "\t" + classes + "\t" +
                    map.citation + "\n";
    }
    out << body;
}

inline void run_cf(const std::string& id_or_file, const std::string& format,
                   std::ostream& out) {
    auto map = resolve_map(id_or_file);
    auto report = confusion_factor(map);
    if (format == "csv")
        out << map.id << "," << report.viseme_count << "," << report.phoneme_count << ","
            << format_fixed(report.cf, 3) << "\n";
    else
        out << "V=" << report.viseme_count << " P=" << report.phoneme_count
            << " CF=" << format_fixed(report.cf, 3) << "\n";
}

struct CombineOptions {
    std::string consonants, vowels, inventory, output;
};

inline void run_combine(const CombineOptions& opt, std::ostream& out) {
    auto combined = combine(resolve_map(opt.consonants), resolve_map(opt.vowels),
                            load_inventory(opt.inventory));
    emit(serialize_map(combined), opt.output, out);
}

struct ApplyOptions {
    std::string map, input, output;
};

inline void run_apply(const ApplyOptions& opt, std::ostream& out) {
    auto map = resolve_map(opt.map);
    auto transcripts = load_transcripts(opt.input);
    for (auto& t : transcripts) t = apply_map(map, t);
    emit(serialize_transcripts(transcripts), opt.output, out);
}

inline void run_graph_stats(const std::string& confusions, std::ostream& out) {
    auto graph = to_graph(load_confusion(confusions));
    std::vector<std::string> isolated;
    for (size_t i = 0; i < graph.vertices.size(); ++i)
        if (graph.is_isolated(i)) isolated.push_back(graph.vertices[i]);
    out << "vertices=" << graph.vertices.size() << " edges=" << graph.edge_count()
        << " isolated=" << (isolated.empty() ? "-" : join(isolated, ",")) << "\n";
}

struct DeriveOptions {
    std::string confusions, inventory, stage, classes, output;
};

inline void run_derive(const DeriveOptions& opt, std::ostream& out) {
    auto matrix = load_confusion(opt.confusions);
    auto inventory = load_inventory(opt.inventory);
    DerivationConfig config;
    config.mixing = opt.classes == "split" ? ClassMixing::Split : ClassMixing::Mixed;
    auto map = derive_tight(matrix, inventory, config);
    if (opt.stage == "loose") map = derive_loose(map, matrix, inventory, config);
    auto stem = std::filesystem::path(opt.confusions).stem().string();
    map.id = stem + "-" + opt.stage + "-" + opt.classes;
    map.citation = "derived(" + opt.confusions + ", " + opt.stage + ", " + opt.classes + ")";
    emit(serialize_map(map), opt.output, out);
}

struct ScoreOptions {
    std::string ref, hyp;
    bool per_fold = false;
};

inline void run_score(const ScoreOptions& opt, std::ostream& out) {
    auto refs = load_transcripts(opt.ref);
    auto hyps = load_transcripts(opt.hyp);
    std::unordered_map<std::string, const Transcript*> by_id;
    for (const auto& h : hyps) by_id.emplace(h.utterance_id, &h);

    std::map<int, std::vector<AlignmentResult>> per_fold;
    std::vector<AlignmentResult> all;
    for (const auto& ref : refs) {
        auto it = by_id.find(ref.utterance_id);
        if (it == by_id.end())
            raise(ErrorCode::IdMismatch, "no hypothesis for utterance '" + ref.utterance_id + "'");
        auto result = align(ref, *it->second);
        per_fold[ref.fold].push_back(result);
        all.push_back(std::move(result));
    }

    auto line = [&](const std::vector<AlignmentResult>& results) {
        long long n = 0, d = 0, s = 0;
        for (const auto& r : results) {
            n += r.n_ref;
            d += r.deletions;
            s += r.substitutions;
        }
        double c = correctness(results);
        return "N=" + std::to_string(n) + " D=" + std::to_string(d) + " S=" +
               std::to_string(s) + " C=" + format_fixed(c, 3);
    };

    if (opt.per_fold) {
        std::map<int, double> fold_scores;
        for (const auto& [fold, results] : per_fold) {
            out << "fold=" << fold << " " << line(results) << "\n";
            fold_scores[fold] = correctness(results);
        }
        auto summary = aggregate(fold_scores);
        out << "mean=" << format_fixed(summary.mean, 3)
            << " std_error=" << format_fixed(summary.std_error, 3)
            << " folds=" << summary.fold_count << "\n";
    } else {
        out << line(all) << "\n";
    }
}

struct SweepOptions {
    std::string consonant_maps = "all";
    std::string vowel_maps = "all";
    std::string inventory, ref, hyp_dir, output;
};

inline std::vector<VisemeMap> select_maps(const std::vector<VisemeMap>& catalog,
                                          const std::string& selector, Coverage coverage) {
    std::vector<VisemeMap> out;
    if (selector == "all") {
        for (const auto& m : catalog)
            if (m.coverage == coverage) out.push_back(m);
    } else {
        for (const auto& id : visemap::detail::split_char(selector, ','))
            out.push_back(find_map(catalog, visemap::detail::trim(id)));
    }
    return out;
}

/// Pairs every selected consonant map with every selected vowel map, scores
/// each pairing on `<hyp-dir>/<map_id>.tsv`, and writes the ranked CSV.
inline void run_sweep(const SweepOptions& opt, std::ostream& out) {
    auto catalog = catalog_from_env();
    auto inventory = load_inventory(opt.inventory);
    auto consonants = select_maps(catalog, opt.consonant_maps, Coverage::Consonant);
    auto vowels = select_maps(catalog, opt.vowel_maps, Coverage::Vowel);
    auto refs = load_transcripts(opt.ref);

    std::vector<VisemeMap> maps;
    maps.reserve(consonants.size() * vowels.size());
    for (const auto& c : consonants)
        for (const auto& v : vowels) maps.push_back(combine(c, v, inventory));

    std::unordered_map<std::string, std::vector<Transcript>> hyps;
    for (const auto& map : maps) {
        auto path = std::filesystem::path(opt.hyp_dir) / (map.id + ".tsv");
        if (!std::filesystem::exists(path))
            raise(ErrorCode::IncompleteSweep, "missing hypothesis file " + path.string());
        hyps.emplace(map.id, load_transcripts(path));
    }

    auto rows = sweep(maps, refs, hyps);
    std::string csv = "map_id,mean_c,std_error,fold_count\n";
    for (const auto& row : rows)
        csv += row.map_id + "," + format_fixed(row.mean_c, 6) + "," +
               format_fixed(row.std_error, 6) + "," + std::to_string(row.fold_count) + "\n";
    emit(csv, opt.output, out);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"phoneme-to-viseme map toolkit"};
    app.name("visemap");
    app.require_subcommand(1);

    detail::ListOptions list_opt;
    auto* list = app.add_subcommand("list", "List the map catalog");
    list->add_option("--coverage", list_opt.coverage, "Filter by coverage")
        ->check(CLI::IsMember({"consonant", "vowel", "full"}));
    list->add_option("--format", list_opt.format)->check(CLI::IsMember({"text", "csv"}));
    list->callback([&] { detail::run_list(list_opt, out); });

    std::string show_id;
    auto* show = app.add_subcommand("show", "Print a map in map file format");
    show->add_option("id", show_id)->required();
    show->callback([&] { out << serialize_map(detail::resolve_map(show_id)); });

    std::string cf_id, cf_format = "text";
    auto* cf = app.add_subcommand("cf", "Confusion factor V/P of a map");
    cf->add_option("id", cf_id, "Map id or map file")->required();
    cf->add_option("--format", cf_format)->check(CLI::IsMember({"text", "csv"}));
    cf->callback([&] { detail::run_cf(cf_id, cf_format, out); });

    detail::CombineOptions combine_opt;
    auto* comb = app.add_subcommand("combine", "Pair a consonant map with a vowel map");
    comb->add_option("--consonants", combine_opt.consonants)->required();
    comb->add_option("--vowels", combine_opt.vowels)->required();
    comb->add_option("--inventory", combine_opt.inventory)->required();
    comb->add_option("-o,--output", combine_opt.output);
    comb->callback([&] { detail::run_combine(combine_opt, out); });

    detail::ApplyOptions apply_opt;
    auto* apply = app.add_subcommand("apply", "Convert a phoneme transcript to visemes");
    apply->add_option("--map", apply_opt.map)->required();
    apply->add_option("--in", apply_opt.input)->required();
    apply->add_option("--out", apply_opt.output)->required();
    apply->callback([&] { detail::run_apply(apply_opt, out); });

    std::string graph_confusions;
    bool graph_stats = false;
    auto* graph = app.add_subcommand("graph", "Confusion graph queries");
    graph->add_option("--confusions", graph_confusions)->required();
    graph->add_flag("--stats", graph_stats, "Print vertex/edge counts and isolated vertices");
    graph->callback([&] { detail::run_graph_stats(graph_confusions, out); });

    detail::DeriveOptions derive_opt;
    auto* derive = app.add_subcommand("derive", "Derive a map from a confusion matrix");
    derive->add_option("--confusions", derive_opt.confusions)->required();
    derive->add_option("--inventory", derive_opt.inventory)->required();
    derive->add_option("--stage", derive_opt.stage)
        ->required()
        ->check(CLI::IsMember({"tight", "loose"}));
    derive->add_option("--classes", derive_opt.classes)
        ->required()
        ->check(CLI::IsMember({"mixed", "split"}));
    derive->add_option("-o,--output", derive_opt.output);
    derive->callback([&] { detail::run_derive(derive_opt, out); });

    detail::ScoreOptions score_opt;
    auto* score = app.add_subcommand("score", "Score a hypothesis transcript");
    score->add_option("--ref", score_opt.ref)->required();
    score->add_option("--hyp", score_opt.hyp)->required();
    score->add_flag("--per-fold", score_opt.per_fold);
    score->callback([&] { detail::run_score(score_opt, out); });

    detail::SweepOptions sweep_opt;
    auto* sw = app.add_subcommand("sweep", "Score every consonant/vowel map pairing");
    sw->add_option("--consonant-maps", sweep_opt.consonant_maps, "'all' or comma-separated ids");
    sw->add_option("--vowel-maps", sweep_opt.vowel_maps, "'all' or comma-separated ids");
    sw->add_option("--inventory", sweep_opt.inventory)->required();
    sw->add_option("--ref", sweep_opt.ref)->required();
    sw->add_option("--hyp-dir", sweep_opt.hyp_dir)->required();
    sw->add_option("-o,--output", sweep_opt.output)->required();
    sw->callback([&] { detail::run_sweep(sweep_opt, out); });

    std::reverse(args.begin(), args.end());  // CLI11 consumes back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace visemap::cli
