#include "cofix/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace cofix {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rat(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw Error(Errc::ParseError, where + ": " + e.what());
    }
    throw Error(Errc::ParseError, where + ": rationals must be \"p/q\" strings or integers");
}

const json& require_field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
    return *it;
}

FiniteInstance parse_finite(const json& doc, bool from_hasse) {
    const json& jelems = require_field(doc, "elements");
    if (!jelems.is_array() || jelems.empty())
        throw Error(Errc::ParseError, "\"elements\" must be a nonempty array of labels");
    std::vector<std::string> labels;
    for (const auto& e : jelems) {
        if (!e.is_string()) throw Error(Errc::ParseError, "element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    const int n = static_cast<int>(labels.size());
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    std::vector<std::uint8_t> leq(nn, 0);
    for (const auto& p : require_field(doc, "order")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            throw Error(Errc::ParseError, "order entries must be [i,j] index pairs");
        int i = p[0].get<int>(), j = p[1].get<int>();
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw Error(Errc::ParseError,
                        "order pair [" + std::to_string(i) + "," + std::to_string(j) +
                            "] out of range");
        leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
    if (from_hasse) {
        for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                if (!leq[static_cast<std::size_t>(i) * n + k]) continue;
                for (int j = 0; j < n; ++j)
                    if (leq[static_cast<std::size_t>(k) * n + j])
                        leq[static_cast<std::size_t>(i) * n + j] = 1;
            }
    }

    const json& jmetric = require_field(doc, "metric");
    if (!jmetric.is_array() || static_cast<int>(jmetric.size()) != n)
        throw Error(Errc::ParseError, "\"metric\" must be an n*n array");
    std::vector<Rat> dist(nn);
    for (int i = 0; i < n; ++i) {
        const auto& row = jmetric[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(Errc::ParseError, "metric row " + std::to_string(i) + " must have n entries");
        for (int j = 0; j < n; ++j)
            dist[static_cast<std::size_t>(i) * n + j] = rat_from_json(
                row[static_cast<std::size_t>(j)],
                "metric[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }

    auto parse_map = [&](const char* key) {
        const json& jm = require_field(doc, key);
        if (!jm.is_array() || static_cast<int>(jm.size()) != n)
            throw Error(Errc::ParseError, std::string("\"") + key + "\" must be a length-n index array");
        std::vector<int> m;
        for (const auto& v : jm) {
            if (!v.is_number_integer())
                throw Error(Errc::ParseError, std::string(key) + " entries must be indices");
            m.push_back(v.get<int>());
        }
        return m;
    };
    std::vector<int> f = parse_map("f"), g = parse_map("g");

    FiniteSpace space = FiniteSpace::validate(std::move(labels), std::move(leq), std::move(dist));
    FinitePair pair = FinitePair::validate(n, std::move(f), std::move(g));

    FiniteInstance inst{std::move(space), std::move(pair), std::nullopt, std::nullopt};
    if (doc.contains("Y")) {
        std::vector<int> Y;
        for (const auto& v : doc["Y"]) {
            if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n)
                throw Error(Errc::ParseError, "Y entries must be valid indices");
            Y.push_back(v.get<int>());
        }
        inst.Y = std::move(Y);
    }
    if (doc.contains("x0")) {
        if (!doc["x0"].is_number_integer() || doc["x0"].get<int>() < 0 || doc["x0"].get<int>() >= n)
            throw Error(Errc::ParseError, "x0 must be a valid index");
        inst.x0 = doc["x0"].get<int>();
    }
    return inst;
}

Declared parse_declared(const json& doc) {
    Declared d;
    if (!doc.contains("declared")) return d;
    const json& jd = doc["declared"];
    auto flag = [&](const char* key) -> std::optional<bool> {
        if (!jd.contains(key)) return std::nullopt;
        if (!jd[key].is_boolean())
            throw Error(Errc::ParseError, std::string("declared.") + key + " must be boolean");
        return jd[key].get<bool>();
    };
    d.f_continuous = flag("f_continuous");
    d.g_continuous = flag("g_continuous");
    d.f_g_continuous = flag("f_g_continuous");
    d.tcc = flag("tcc");
    d.g_tcc = flag("g_tcc");
    if (jd.contains("alpha")) d.alpha = rat_from_json(jd["alpha"], "declared.alpha");
    return d;
}

IntervalInstance parse_interval(const json& doc) {
    Rat lo = rat_from_json(require_field(doc, "lo"), "lo");
    Rat hi = rat_from_json(require_field(doc, "hi"), "hi");
    IntervalSpace space = IntervalSpace::make(std::move(lo), std::move(hi));

    BuiltinFn f = BuiltinFn::parse(require_field(doc, "f_name").get<std::string>());
    BuiltinFn g = BuiltinFn::parse(require_field(doc, "g_name").get<std::string>());
    if (!f.self_map_on(space))
        throw Error(Errc::ParseError, "f_name is not a self-map on the interval");
    if (!g.self_map_on(space))
        throw Error(Errc::ParseError, "g_name is not a self-map on the interval");

    IntervalInstance inst{std::move(space), IntervalPair{f, g, parse_declared(doc)},
                          std::nullopt, 1000};
    if (doc.contains("x0")) {
        inst.x0 = rat_from_json(doc["x0"], "x0");
        if (!inst.space.contains(*inst.x0))
            throw Error(Errc::ParseError, "x0 outside the interval");
    }
    if (doc.contains("grid")) {
        if (!doc["grid"].is_number_integer() || doc["grid"].get<int>() < 2)
            throw Error(Errc::ParseError, "grid must be an integer >= 2");
        inst.grid_n = doc["grid"].get<int>();
    }
    return inst;
}

}  // namespace

Instance parse_instance(const nlohmann::json& doc, bool from_hasse) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "instance document must be an object");
    std::string kind = doc.value("kind", std::string("finite"));
    if (kind == "finite") return parse_finite(doc, from_hasse);
    if (kind == "interval") return parse_interval(doc);
    throw Error(Errc::ParseError, "unknown kind: " + kind);
}

nlohmann::json instance_to_json(const Instance& inst) {
    using nlohmann::json;
    json doc;
    if (std::holds_alternative<FiniteInstance>(inst)) {
        const auto& fi = std::get<FiniteInstance>(inst);
        const int n = fi.space.size();
        doc["kind"] = "finite";
        doc["elements"] = fi.space.labels();
        json order = json::array();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (fi.space.leq(i, j)) order.push_back(json::array({i, j}));
        doc["order"] = std::move(order);
        json metric = json::array();
        for (int i = 0; i < n; ++i) {
            json row = json::array();
            for (int j = 0; j < n; ++j) row.push_back(rat_str(fi.space.dist(i, j)));
            metric.push_back(std::move(row));
        }
        doc["metric"] = std::move(metric);
        doc["f"] = fi.pair.f;
        doc["g"] = fi.pair.g;
        if (fi.Y) doc["Y"] = *fi.Y;
        if (fi.x0) doc["x0"] = *fi.x0;
    } else {
        const auto& ii = std::get<IntervalInstance>(inst);
        doc["kind"] = "interval";
        doc["lo"] = rat_str(ii.space.lo());
        doc["hi"] = rat_str(ii.space.hi());
        doc["f_name"] = ii.pair.f.name();
        doc["g_name"] = ii.pair.g.name();
        json jd = json::object();
        const Declared& d = ii.pair.declared;
        if (d.f_continuous) jd["f_continuous"] = *d.f_continuous;
        if (d.g_continuous) jd["g_continuous"] = *d.g_continuous;
        if (d.f_g_continuous) jd["f_g_continuous"] = *d.f_g_continuous;
        if (d.tcc) jd["tcc"] = *d.tcc;
        if (d.g_tcc) jd["g_tcc"] = *d.g_tcc;
        if (d.alpha) jd["alpha"] = rat_str(*d.alpha);
        if (!jd.empty()) doc["declared"] = std::move(jd);
        if (ii.x0) doc["x0"] = rat_str(*ii.x0);
        if (ii.grid_n != 1000) doc["grid"] = ii.grid_n;
    }
    return doc;
}

Instance load_instance(const std::string& path, bool from_hasse) {
    std::ifstream in(resolve_instance_path(path));
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return parse_instance(doc, from_hasse);
}

std::string resolve_instance_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("COFIX_DATA_DIR")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    return path;
}

}  // namespace cofix
