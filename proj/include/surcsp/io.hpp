#pragma once

#include "surcsp/core.hpp"
#include "surcsp/report.hpp"
#include "surcsp/templates.hpp"

#include <optional>
#include <string>

namespace surcsp::io {

struct ProblemMeta {
    std::optional<std::string> description;
    std::optional<std::string> origin;

    friend bool operator==(const ProblemMeta&, const ProblemMeta&) = default;
};

// A template/instance pair sharing one signature, as stored on disk.
struct Problem {
    Structure templ;
    Structure instance;
    std::optional<ProblemMeta> meta;

    friend bool operator==(const Problem&, const Problem&) = default;
};

// Parses the JSON problem format. Unknown fields are rejected; every
// diagnostic names the offending path (e.g. "instance.relations.R[3][1]").
Problem parse_problem(const std::string& text);

// Canonical emission: sorted object keys, signature entries and tuples
// sorted lexicographically, two-space indent, trailing newline. A fixed
// point of parse-then-emit.
std::string emit_problem(const Problem& problem);

// Gallery problems: template plus a small canonical instance.
// Names: c6, cycle:<n>, c4ref, no-rainbow, asym-cut, hard-ptas.
Problem gallery_problem(const std::string& name);
std::vector<std::string> gallery_names();

// Solve report / classification rendering for the CLI (2-space indent JSON).
std::string report_to_json(const SolveReport& report);
std::string classification_to_json(const Structure& templ, const templates::BooleanClass& cls);

}  // namespace surcsp::io
