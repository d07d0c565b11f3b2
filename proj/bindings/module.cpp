#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oes/analysis.hpp"
#include "oes/corpus.hpp"
#include "oes/interpret.hpp"
#include "oes/notation.hpp"
#include "oes/report_format.hpp"

namespace py = pybind11;
using namespace oes;

namespace {

Sign parse_or_throw(const std::string& text) {
    ParseResult result = parse_sign(text);
    if (const auto* err = std::get_if<NotationError>(&result))
        throw py::value_error(err->message + " (" + notation_error_kind_name(err->kind) +
                              " at offset " + std::to_string(err->position) + ")");
    return std::get<Sign>(result);
}

Hypothesis hypothesis_or_throw(const std::string& name) {
    const auto h = hypothesis_by_name(name);
    if (!h) throw py::value_error("unknown hypothesis '" + name + "'");
    return *h;
}

Corpus load_or_throw(const std::string& path) {
    LoadResult result = load_corpus_file(path);
    if (!result.ok()) {
        std::string message = "corpus load failed:";
        for (const LoadError& err : result.errors)
            message += "\n  line " + std::to_string(err.line) + ": " + err.message;
        throw py::value_error(message);
    }
    return std::move(result.corpus);
}

py::dict evaluate_to_dict(const std::string& text, const std::string& hypothesis) {
    const Interpretation interp = evaluate(parse_or_throw(text), hypothesis_or_throw(hypothesis));
    py::dict out;
    py::list candidates;
    for (const Candidate& c : interp.candidates) {
        py::dict candidate;
        candidate["value"] = c.value;
        py::list steps;
        for (const TraceStep& s : c.steps) {
            py::dict step;
            step["atom"] = s.atom;
            step["rule"] = s.rule;
            step["contribution"] = s.contribution;
            steps.append(step);
        }
        candidate["trace"] = steps;
        candidates.append(candidate);
    }
    out["candidates"] = candidates;
    out["confidence"] = interp.confidence == Confidence::Tentative ? "tentative" : "asserted";
    out["combination_count"] = interp.combination_count;
    out["deduplicated"] = interp.deduplicated;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numeric-sign decoding and catalog analysis for the Old European Script";

    m.def("parse", [](const std::string& text) {
        const Sign sign = parse_or_throw(text);
        py::dict out;
        out["family"] = family_name(classify(sign));
        out["canonical"] = render_sign(sign);
        out["atom_count"] = sign.atoms.size();
        out["warnings"] = validation_warnings(sign);
        return out;
    }, py::arg("notation"), "Parse a sign and report its family and canonical form");

    m.def("render", [](const std::string& text) { return render_sign(parse_or_throw(text)); },
          py::arg("notation"), "Canonicalize a notation string");

    m.def("evaluate", &evaluate_to_dict, py::arg("notation"), py::arg("hypothesis") = "default",
          "Candidate values with derivation traces");

    m.def("expressible_values", [](const std::string& hypothesis, int max) {
        const std::set<int> values = expressible_values(hypothesis_or_throw(hypothesis), max);
        return std::vector<int>(values.begin(), values.end());
    }, py::arg("hypothesis") = "default", py::arg("max") = kCoverageCeiling);

    m.def("stats", [](const std::string& path) {
        const Corpus corpus = load_or_throw(path);
        py::dict out;
        out["prevalence"] = format_prevalence(prevalence(corpus), ReportFormat::Json);
        out["base_evidence"] = format_base_evidence(infer_base(corpus), ReportFormat::Json);
        return out;
    }, py::arg("path"), "Prevalence and base-evidence reports as JSON strings");

    m.def("compare", [](const std::string& path, const std::vector<std::string>& names) {
        const Corpus corpus = load_or_throw(path);
        std::vector<Hypothesis> hypotheses;
        for (const std::string& name : names) hypotheses.push_back(hypothesis_or_throw(name));
        return format_comparison(compare(corpus, hypotheses), ReportFormat::Json);
    }, py::arg("path"), py::arg("hypotheses"), "Ranked hypothesis comparison as a JSON string");

    m.def("validate", [](const std::string& path) {
        const Corpus corpus = load_or_throw(path);
        return format_validation(validate(corpus), ReportFormat::Json);
    }, py::arg("path"), "Validation findings as a JSON string");
}
