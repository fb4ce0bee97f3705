#include "lieinv/json_io.hpp"

#include <set>

#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"

namespace lieinv {

nlohmann::json parse_json_strict(const std::string& text) {
    using json = nlohmann::json;
    std::vector<std::set<std::string>> keys;
    std::string dup;
    json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::object_start) {
            keys.emplace_back();
        } else if (ev == json::parse_event_t::object_end) {
            if (!keys.empty()) keys.pop_back();
        } else if (ev == json::parse_event_t::key && !keys.empty()) {
            std::string k = parsed.get<std::string>();
            if (!keys.back().insert(k).second && dup.empty()) dup = k;
        }
        return true;
    };
    json j;
    try {
        j = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), "byte " + std::to_string(e.byte));
    }
    if (!dup.empty()) throw ParseError("duplicate key \"" + dup + "\"");
    return j;
}

Json to_json(const StepFunction& f) {
    Json j;
    j["format"] = 1;
    j["family"] = family_name(f.family());
    j["generic"] = f.generic();
    Json ex = Json::array();
    bool uses_tower = false;
    for (const auto& e : f.exceptional()) {
        Json o;
        if (e.branch.is_point()) {
            Scalar r = e.branch.root();
            uses_tower = uses_tower || !r.in_base();
            o["point"] = r.to_string();
        } else {
            for (const auto& c : e.branch.modulus().coeffs()) uses_tower = uses_tower || !c.in_base();
            o["minpoly"] = e.branch.modulus().to_string();
            o["distinct_roots"] = e.branch.degree();
        }
        o["value"] = e.value;
        ex.push_back(o);
    }
    j["exceptional"] = ex;
    if (uses_tower && f.tower()) {
        Json t;
        t["generator"] = f.tower()->generator();
        t["minpoly"] = f.tower()->minpoly_string();
        j["extension"] = t;
    }
    return j;
}

StepFunction step_function_from_json(const nlohmann::json& j) {
    auto need = [&](const nlohmann::json& o, const char* key, const std::string& where) -> const nlohmann::json& {
        if (!o.is_object() || !o.contains(key)) throw ParseError(std::string("missing \"") + key + "\"", where);
        return o.at(key);
    };
    if (j.contains("format") && j["format"] != 1) throw ParseError("unsupported format version", "format");
    const auto& fam = need(j, "family", "step function");
    if (!fam.is_string()) throw ParseError("family must be a string", "family");
    const auto& gen = need(j, "generic", "step function");
    if (!gen.is_number_integer()) throw ParseError("generic must be an integer", "generic");
    ExprContext ctx;
    if (j.contains("extension")) {
        const auto& e = j["extension"];
        const auto& g = need(e, "generator", "extension");
        const auto& m = need(e, "minpoly", "extension");
        if (!g.is_string() || !m.is_string()) throw ParseError("extension fields must be strings", "extension");
        ctx.tower = parse_tower(g.get<std::string>(), m.get<std::string>());
    }
    std::vector<StepFunction::Entry> entries;
    if (j.contains("exceptional")) {
        const auto& ex = j["exceptional"];
        if (!ex.is_array()) throw ParseError("exceptional must be an array", "exceptional");
        for (std::size_t k = 0; k < ex.size(); ++k) {
            std::string where = "exceptional[" + std::to_string(k) + "]";
            const auto& v = need(ex[k], "value", where);
            if (!v.is_number_integer()) throw ParseError("value must be an integer", where);
            if (ex[k].contains("point")) {
                Scalar p = parse_scalar(ex[k]["point"].get<std::string>(), ctx);
                entries.push_back({Branch::point(p), v.get<int>()});
            } else {
                ExprContext pc = ctx;
                pc.variable = "x";
                Poly m = parse_poly(need(ex[k], "minpoly", where).get<std::string>(), pc);
                Branch b(m);
                if (ex[k].contains("distinct_roots") && ex[k]["distinct_roots"] != b.degree())
                    throw ParseError("distinct_roots disagrees with the modulus degree", where);
                entries.push_back({b, v.get<int>()});
            }
        }
    }
    return StepFunction(parse_family(fam.get<std::string>()), gen.get<int>(), std::move(entries), ctx.tower);
}

Json to_json(const Params& p) {
    Json j = Json::object();
    for (const auto& [name, v] : p) j[name] = v.to_string();
    return j;
}

Json to_json(const Identification& id) {
    Json j;
    j["format"] = 1;
    j["label"] = id.label;
    if (!id.tag.empty()) j["tag"] = id.tag;
    j["params"] = to_json(id.params);
    Json ev = Json::object();
    for (const auto& [k, v] : id.evidence) ev[k] = v;
    j["evidence"] = ev;
    return j;
}

Json to_json(const CriterionResult& c) {
    Json j;
    j["name"] = c.name;
    j["description"] = c.description;
    j["pass"] = c.pass;
    j["witness_point"] = c.witness ? Json(point_to_string(*c.witness)) : Json(nullptr);
    j["value_L"] = c.value_L;
    j["value_L0"] = c.value_L0;
    return j;
}

Json to_json(const ContractionReport& r) {
    Json j;
    j["format"] = 1;
    Json cs = Json::array();
    for (const auto& c : r.criteria) cs.push_back(to_json(c));
    j["criteria"] = cs;
    j["verdict"] = r.verdict();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lieinv
