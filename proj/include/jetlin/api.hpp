#pragma once

// Verb dispatch on parsed JSON: every operation the command-line tool and the
// Python module expose goes through run_verb(verb, args) -> report.  This
// layer never touches the filesystem; loading files into the `args` object is
// the caller's job (the CLI does it, the Python binding passes JSON text).
//
// Reports are versioned envelopes:
//   {"format_version": 1, "tool": "jetlin", "tool_version": "...",
//    "verb": "...", "inputs": <args as received>, "result": {...}}
//
// Mathematical negative verdicts (obstructed, not-linearizable,
// exceeded-bound, ...) are successful reports; only operational failures
// throw (and the CLI maps them to exit codes 1/2 via is_usage_error).

#include <string>
#include <vector>

#include "jetlin/germ_io.hpp"

namespace jetlin {

extern const char* const kToolName;
extern const char* const kToolVersion;

// The documented verb set, in display order.
const std::vector<std::string>& verb_names();

Json run_verb(const std::string& verb, const Json& args);

}  // namespace jetlin
