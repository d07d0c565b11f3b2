#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oes/analysis.hpp"
#include "oes/corpus.hpp"
#include "oes/interpret.hpp"
#include "oes/notation.hpp"
#include "oes/report_format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStrictFindings = 3;

void print_parse_error(const std::string& text, const oes::NotationError& err) {
    std::cerr << "error: " << err.message << " ("
              << oes::notation_error_kind_name(err.kind) << " at offset " << err.position
              << " in \"" << text << "\")\n";
}

int cmd_parse(const std::string& text) {
    oes::ParseResult result = oes::parse_sign(text);
    if (const auto* err = std::get_if<oes::NotationError>(&result)) {
        print_parse_error(text, *err);
        return kExitDomainError;
    }
    const oes::Sign& sign = std::get<oes::Sign>(result);
    std::cout << "family: " << oes::family_name(oes::classify(sign)) << '\n';
    for (const oes::Atom& atom : sign.atoms) {
        std::cout << "  " << oes::family_name(oes::atom_family(atom));
        std::visit(
            [](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, oes::ScoreRow>)
                    std::cout << " count=" << a.count << " rows=" << a.rows;
                else if constexpr (std::is_same_v<T, oes::Comb>)
                    std::cout << " teeth=" << a.teeth;
                else if constexpr (std::is_same_v<T, oes::Pole>)
                    std::cout << " crossings=" << a.crossings;
                else if constexpr (std::is_same_v<T, oes::Divided>)
                    std::cout << " left=" << a.left << " right=" << a.right;
                else if constexpr (std::is_same_v<T, oes::LongShort>)
                    std::cout << " longs=" << a.longs << " shorts=" << a.shorts;
            },
            atom);
        std::cout << '\n';
    }
    for (const std::string& warning : oes::validation_warnings(sign))
        std::cerr << "warning: " << warning << '\n';
    return kExitOk;
}

int cmd_eval(const std::string& text, const std::string& hypothesis_name, bool trace) {
    const auto hypothesis = oes::hypothesis_by_name(hypothesis_name);
    if (!hypothesis) {
        std::cerr << "error: unknown hypothesis '" << hypothesis_name << "'\n";
        return kExitUsage;
    }
    oes::ParseResult result = oes::parse_sign(text);
    if (const auto* err = std::get_if<oes::NotationError>(&result)) {
        print_parse_error(text, *err);
        return kExitDomainError;
    }
    oes::Interpretation interp;
    try {
        interp = oes::evaluate(std::get<oes::Sign>(result), *hypothesis);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    bool first = true;
    for (const oes::Candidate& c : interp.candidates) {
        if (!first) std::cout << ' ';
        first = false;
        std::cout << c.value;
    }
    std::cout << '\n';
    if (interp.confidence == oes::Confidence::Tentative) std::cout << "confidence: tentative\n";
    if (trace) {
        for (const oes::Candidate& c : interp.candidates) {
            std::cout << c.value << ":\n";
            for (const oes::TraceStep& step : c.steps)
                std::cout << "  " << step.atom << " [" << step.rule << "] +" << step.contribution
                          << '\n';
        }
        if (interp.deduplicated)
            std::cout << "note: " << interp.combination_count
                      << " atom-reading combinations collapsed to " << interp.candidates.size()
                      << " distinct values\n";
    }
    return kExitOk;
}

bool load_or_report(const std::string& path, oes::Corpus& corpus) {
    oes::LoadResult loaded = oes::load_corpus_file(path);
    if (!loaded.ok()) {
        for (const oes::LoadError& err : loaded.errors)
            std::cerr << path << ':' << err.line << ": " << err.message << '\n';
        return false;
    }
    corpus = std::move(loaded.corpus);
    return true;
}

int cmd_stats(const std::string& path, oes::ReportFormat format) {
    oes::Corpus corpus;
    if (!load_or_report(path, corpus)) return kExitDomainError;
    std::cout << oes::format_prevalence(oes::prevalence(corpus), format);
    std::cout << oes::format_base_evidence(oes::infer_base(corpus), format);
    return kExitOk;
}

int cmd_infer_base(const std::string& path, oes::ReportFormat format) {
    oes::Corpus corpus;
    if (!load_or_report(path, corpus)) return kExitDomainError;
    std::cout << oes::format_base_evidence(oes::infer_base(corpus), format);
    return kExitOk;
}

int cmd_compare(const std::string& path, const std::string& hypothesis_list,
                oes::ReportFormat format) {
    std::vector<oes::Hypothesis> hypotheses;
    std::stringstream names(hypothesis_list);
    std::string name;
    while (std::getline(names, name, ',')) {
        const auto h = oes::hypothesis_by_name(name);
        if (!h) {
            std::cerr << "error: unknown hypothesis '" << name << "'\n";
            return kExitUsage;
        }
        hypotheses.push_back(*h);
    }
    if (hypotheses.empty()) {
        std::cerr << "error: empty hypothesis list\n";
        return kExitUsage;
    }
    oes::Corpus corpus;
    if (!load_or_report(path, corpus)) return kExitDomainError;
    std::cout << oes::format_comparison(oes::compare(corpus, hypotheses), format);
    return kExitOk;
}

int cmd_validate(const std::string& path, bool strict, oes::ReportFormat format) {
    oes::Corpus corpus;
    if (!load_or_report(path, corpus)) return kExitDomainError;
    const oes::ValidationReport report = oes::validate(corpus);
    std::cout << oes::format_validation(report, format);
    if (strict && report.has_mismatch()) return kExitStrictFindings;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decoder and catalog analysis for the numeric signs of the Old European Script"};
    app.require_subcommand(1);

    std::string notation;
    std::string hypothesis_name = "default";
    bool trace = false;
    std::string corpus_path;
    std::string format_name = "text";
    std::string hypothesis_list;
    bool strict = false;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a sign and dump its structure");
    parse_cmd->add_option("notation", notation, "Sign notation, e.g. D9,6")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a sign to candidate values");
    eval_cmd->add_option("notation", notation, "Sign notation")->required();
    eval_cmd->add_option("--hypothesis", hypothesis_name,
                         "Preset: default, comb-n, comb-n1, comb-nb:<B>, comb-b9");
    eval_cmd->add_flag("--trace", trace, "Show per-candidate derivations");

    auto* stats_cmd = app.add_subcommand("stats", "Prevalence and base-evidence reports");
    stats_cmd->add_option("corpus", corpus_path, "Corpus CSV file")->required();
    stats_cmd->add_option("--format", format_name, "text, csv or json");

    auto* infer_cmd = app.add_subcommand("infer-base", "Base-evidence report only");
    infer_cmd->add_option("corpus", corpus_path, "Corpus CSV file")->required();
    infer_cmd->add_option("--format", format_name, "text, csv or json");

    auto* compare_cmd = app.add_subcommand("compare", "Rank rival hypotheses");
    compare_cmd->add_option("corpus", corpus_path, "Corpus CSV file")->required();
    compare_cmd->add_option("--hypotheses", hypothesis_list, "Comma-separated preset names")
        ->required();
    compare_cmd->add_option("--format", format_name, "text, csv or json");

    auto* validate_cmd = app.add_subcommand("validate", "Check a corpus file");
    validate_cmd->add_option("corpus", corpus_path, "Corpus CSV file")->required();
    validate_cmd->add_flag("--strict", strict, "Exit 3 on claimed-value mismatches");
    validate_cmd->add_option("--format", format_name, "text, csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    oes::ReportFormat format = oes::ReportFormat::Text;
    if (!oes::parse_report_format(format_name, format)) {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return kExitUsage;
    }

    if (parse_cmd->parsed()) return cmd_parse(notation);
    if (eval_cmd->parsed()) return cmd_eval(notation, hypothesis_name, trace);
    if (stats_cmd->parsed()) return cmd_stats(corpus_path, format);
    if (infer_cmd->parsed()) return cmd_infer_base(corpus_path, format);
    if (compare_cmd->parsed()) return cmd_compare(corpus_path, hypothesis_list, format);
    if (validate_cmd->parsed()) return cmd_validate(corpus_path, strict, format);
    return kExitUsage;
}
