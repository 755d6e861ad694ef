#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cofix {

/// Outcome of a single decidable (or declared) predicate.
///  HOLDS   : decided true, exhaustively on finite spaces.
///  FAILS   : decided false; a concrete counterexample is attached.
///  ASSERTED: declared by the user for a continuous space, spot-checked only.
///  VACUOUS : true because the quantified index set is empty.
enum class Verdict { Holds, Fails, Asserted, Vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::Fails: return "FAILS";
        case Verdict::Asserted: return "ASSERTED";
        case Verdict::Vacuous: return "VACUOUS";
    }
    return "?";
}

/// A verdict "passes" a hypothesis gate unless it is FAILS.
inline bool passes(Verdict v) { return v != Verdict::Fails; }

struct HypothesisEntry {
    std::string id;
    Verdict verdict = Verdict::Holds;
    std::string witness;  // witness on HOLDS, counterexample on FAILS
    std::string note;
};

struct HypothesisReport {
    std::vector<HypothesisEntry> entries;

    void add(std::string id, Verdict v, std::string witness = "", std::string note = "") {
        entries.push_back({std::move(id), v, std::move(witness), std::move(note)});
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (!passes(e.verdict)) return false;
        return true;
    }
    std::vector<std::string> failing_ids() const {
        std::vector<std::string> out;
        for (const auto& e : entries)
            if (!passes(e.verdict)) out.push_back(e.id);
        return out;
    }
    const HypothesisEntry* find(const std::string& id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }
};

enum class Errc {
    // space validation
    BadShape,
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    MetricAsymmetric,
    MetricZeroOffDiagonal,
    TriangleViolated,
    // element / subset lookups
    UnknownElement,
    ElementOutsideSubset,
    // solver
    AlphaOutOfRange,
    NoComparableStart,
    PreimageNotFound,
    // uniqueness
    NotCoincidencePoints,
    NoChain,
    NotWeaklyCompatible,
    UniquenessNotCertified,
    PromotionFailed,
    ConditionMissing,
    OracleContradiction,
    // generation / io
    GenerationBudgetExceeded,
    ParseError,
    HypothesesFailed,
};

inline const char* to_string(Errc c) {
    switch (c) {
        case Errc::BadShape: return "BadShape";
        case Errc::NotReflexive: return "NotReflexive";
        case Errc::NotAntisymmetric: return "NotAntisymmetric";
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::MetricAsymmetric: return "MetricAsymmetric";
        case Errc::MetricZeroOffDiagonal: return "MetricZeroOffDiagonal";
        case Errc::TriangleViolated: return "TriangleViolated";
        case Errc::UnknownElement: return "UnknownElement";
        case Errc::ElementOutsideSubset: return "ElementOutsideSubset";
        case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
        case Errc::NoComparableStart: return "NoComparableStart";
        case Errc::PreimageNotFound: return "PreimageNotFound";
        case Errc::NotCoincidencePoints: return "NotCoincidencePoints";
        case Errc::NoChain: return "NoChain";
        case Errc::NotWeaklyCompatible: return "NotWeaklyCompatible";
        case Errc::UniquenessNotCertified: return "UniquenessNotCertified";
        case Errc::PromotionFailed: return "PromotionFailed";
        case Errc::ConditionMissing: return "ConditionMissing";
        case Errc::OracleContradiction: return "OracleContradiction";
        case Errc::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
        case Errc::ParseError: return "ParseError";
        case Errc::HypothesesFailed: return "HypothesesFailed";
    }
    return "?";
}

/// Domain error with a machine-readable code and (when applicable) the
/// witness element indices that exhibit the violation.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail, std::vector<int> witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          witness_(std::move(witness)) {}

    Errc code() const { return code_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    Errc code_;
    std::vector<int> witness_;
};

}  // namespace cofix
