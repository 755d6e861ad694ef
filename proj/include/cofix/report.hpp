#pragma once

#include <string>

#include <json.hpp>

#include "cofix/solver.hpp"
#include "cofix/uniqueness.hpp"

namespace cofix {

/// Exit-code contract of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesesFailed = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitInternal = 4;

/// A command result: the machine JSON and the rendered text derive from the
/// same underlying objects.
struct Report {
    nlohmann::json machine;
    std::string text;
    int exit_code = kExitOk;
};

nlohmann::json hypotheses_to_json(const HypothesisReport& rep);
std::string render_hypotheses(const HypothesisReport& rep);

nlohmann::json trace_to_json(const FiniteTrace& trace, const FiniteSpace& space);
nlohmann::json trace_to_json(const IntervalTrace& trace);
std::string render_trace_summary(const FiniteTrace& trace, const FiniteSpace& space);
std::string render_trace_summary(const IntervalTrace& trace);

nlohmann::json oracle_to_json(const OracleResult& oracle, const FiniteSpace& space);
nlohmann::json certificate_to_json(const UniquenessCertificate& cert, const FiniteSpace* space);

/// Maps a thrown Error to the documented exit code.
int exit_code_for(const Error& e);

}  // namespace cofix
