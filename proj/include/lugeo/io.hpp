// On-disk state format and the JSON reports emitted by the CLI.  The state
// schema is {"dims": [..], "amplitudes": [{"re":..,"im":..}, ..],
// "label": optional} with amplitudes in the library's row-major order.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lugeo/equivalence.hpp"
#include "lugeo/orbit.hpp"
#include "lugeo/types.hpp"

namespace lugeo {

struct StateFile {
    PureState state;
    std::optional<std::string> label;
};

// Throws ParseError on malformed JSON or inconsistent lengths; passes
// ZeroVector through.  Warns on stderr when the stored norm is off by more
// than 1e-6 (the state is renormalized either way).
StateFile read_state_file(const std::string& path);

nlohmann::json state_to_json(const PureState& state,
                             const std::optional<std::string>& label = {});
PureState state_from_json(const nlohmann::json& j);

void write_state_file(const std::string& path, const PureState& state,
                      const std::optional<std::string>& label = {});

// Spectra, moment-image norms, orbit report, and for square bipartite
// states the closed-form cross-check (with its sign note).
nlohmann::json analysis_report(const PureState& state, double tol,
                               double rank_tol);

nlohmann::json verdict_to_json(const EquivalenceVerdict& verdict);

nlohmann::json sorted_form_report(const SortedTraceForm& form);

}  // namespace lugeo
