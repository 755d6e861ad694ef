#include "cofix/report.hpp"

#include <iomanip>
#include <sstream>

namespace cofix {

using nlohmann::json;

json hypotheses_to_json(const HypothesisReport& rep) {
    json arr = json::array();
    for (const auto& e : rep.entries) {
        json entry;
        entry["id"] = e.id;
        entry["verdict"] = to_string(e.verdict);
        if (!e.witness.empty()) entry["witness"] = e.witness;
        if (!e.note.empty()) entry["note"] = e.note;
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::string render_hypotheses(const HypothesisReport& rep) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& e : rep.entries) width = std::max(width, e.id.size());
    for (const auto& e : rep.entries) {
        out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << e.id
            << std::setw(10) << to_string(e.verdict);
        if (!e.witness.empty()) out << " " << e.witness;
        if (!e.note.empty()) out << "  (" << e.note << ")";
        out << "\n";
    }
    return out.str();
}

json trace_to_json(const FiniteTrace& trace, const FiniteSpace& space) {
    json t;
    t["status"] = to_string(trace.status);
    if (!trace.broken_reason.empty()) t["broken_reason"] = trace.broken_reason;
    t["alpha"] = rat_str(trace.alpha_used);
    t["n_steps"] = trace.steps();
    json steps = json::array();
    for (std::size_t i = 0; i < trace.distances.size(); ++i) {
        json s;
        s["n"] = i;
        s["x"] = space.label(trace.iterates[i]);
        s["g_next"] = space.label(trace.g_value_ids[i + 1]);
        s["d"] = rat_str(trace.distances[i]);
        if (i > 0 && trace.distances[i - 1] != 0)
            s["ratio"] = rat_str(trace.distances[i] / trace.distances[i - 1]);
        steps.push_back(std::move(s));
    }
    t["steps"] = std::move(steps);
    if (!trace.distances.empty()) t["final_distance"] = rat_str(trace.distances.back());
    if (trace.coincidence_point) t["coincidence_point"] = space.label(*trace.coincidence_point);
    if (trace.point_of_coincidence)
        t["point_of_coincidence"] = space.label(*trace.point_of_coincidence);
    return t;
}

json trace_to_json(const IntervalTrace& trace) {
    json t;
    t["status"] = to_string(trace.status);
    if (!trace.broken_reason.empty()) t["broken_reason"] = trace.broken_reason;
    t["alpha"] = trace.alpha_used;
    t["n_steps"] = trace.steps();
    json steps = json::array();
    for (std::size_t i = 0; i < trace.distances.size(); ++i) {
        json s;
        s["n"] = i;
        s["x"] = trace.iterates[i];
        s["g_next"] = trace.g_values[i + 1];
        s["d"] = trace.distances[i];
        if (i > 0 && trace.distances[i - 1] != 0)
            s["ratio"] = trace.distances[i] / trace.distances[i - 1];
        if (trace.alpha_used < 1.0)
            s["tail_bound"] =
                a_priori_bound(trace.distances[0], trace.alpha_used, static_cast<int>(i));
        steps.push_back(std::move(s));
    }
    t["steps"] = std::move(steps);
    if (!trace.distances.empty()) t["final_distance"] = trace.distances.back();
    if (trace.fixed_value) t["fixed_value"] = *trace.fixed_value;
    return t;
}

std::string render_trace_summary(const FiniteTrace& trace, const FiniteSpace& space) {
    std::ostringstream out;
    out << "  status: " << to_string(trace.status);
    if (!trace.broken_reason.empty()) out << " [" << trace.broken_reason << "]";
    out << ", steps: " << trace.steps() << ", alpha: " << rat_str(trace.alpha_used);
    if (!trace.distances.empty()) out << ", final d: " << rat_str(trace.distances.back());
    out << "\n  iterates:";
    for (std::size_t i = 0; i < trace.iterates.size() && i < 24; ++i)
        out << " " << space.label(trace.iterates[i]);
    if (trace.iterates.size() > 24) out << " ...";
    out << "\n";
    if (trace.coincidence_point)
        out << "  coincidence point: " << space.label(*trace.coincidence_point)
            << ", point of coincidence: " << space.label(*trace.point_of_coincidence) << "\n";
    return out.str();
}

std::string render_trace_summary(const IntervalTrace& trace) {
    std::ostringstream out;
    out << "  status: " << to_string(trace.status);
    if (!trace.broken_reason.empty()) out << " [" << trace.broken_reason << "]";
    out << ", steps: " << trace.steps() << ", alpha: " << trace.alpha_used;
    if (!trace.distances.empty())
        out << ", final d: " << std::scientific << std::setprecision(3)
            << trace.distances.back();
    out << "\n  iterates:" << std::setprecision(12);
    for (std::size_t i = 0; i < trace.iterates.size() && i < 12; ++i)
        out << " " << trace.iterates[i];
    if (trace.iterates.size() > 12) out << " ...";
    out << "\n";
    if (trace.fixed_value)
        out << "  fixed value: " << std::scientific << std::setprecision(6) << *trace.fixed_value
            << "\n";
    return out.str();
}

json oracle_to_json(const OracleResult& oracle, const FiniteSpace& space) {
    json o;
    auto to_labels = [&](const std::vector<int>& ids) {
        json arr = json::array();
        for (int i : ids) arr.push_back(space.label(i));
        return arr;
    };
    o["coincidence_points"] = to_labels(oracle.coincidence_points);
    o["points_of_coincidence"] = to_labels(oracle.points_of_coincidence);
    o["common_fixed_points"] = to_labels(oracle.common_fixed_points);
    return o;
}

json certificate_to_json(const UniquenessCertificate& cert, const FiniteSpace* space) {
    json c;
    c["conclusion"] = to_string(cert.conclusion);
    json conds = json::array();
    for (auto cond : cert.conditions_used) conds.push_back(to_string(cond));
    c["conditions_used"] = std::move(conds);
    if (space && cert.unique_value >= 0) c["unique_value"] = space->label(cert.unique_value);
    if (space && cert.unique_point) c["unique_point"] = space->label(*cert.unique_point);
    if (!cert.note.empty()) c["note"] = cert.note;
    if (space) c["chain_witnesses"] = cert.chain_witnesses.size();
    return c;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::HypothesesFailed:
        case Errc::ConditionMissing:
        case Errc::NoComparableStart:
        case Errc::NotWeaklyCompatible:
        case Errc::UniquenessNotCertified:
            return kExitHypothesesFailed;
        case Errc::PromotionFailed:
        case Errc::OracleContradiction:
            return kExitInternal;
        default:
            return kExitValidation;
    }
}

}  // namespace cofix
