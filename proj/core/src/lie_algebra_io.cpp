#include <set>
#include <string>
#include <vector>

#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/json_io.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

namespace {

using json = nlohmann::json;

int parse_index(const std::string& s, int dim, const std::string& where) {
    if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed index \"" + s + "\"", where);
    int v = std::stoi(s);
    if (v < 1 || v > dim) throw ParseError("index " + s + " out of range 1.." + std::to_string(dim), where);
    return v;
}

Scalar literal(const json& v, const ExprContext& ctx, const std::string& where) {
    if (v.is_number_integer()) return Scalar(Rational(mpz_class(v.dump())));
    if (!v.is_string()) throw ParseError("structure constant must be a string literal or integer", where);
    try {
        return parse_scalar(v.get<std::string>(), ctx);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), where);
    } catch (const MathError& e) {
        throw ParseError(e.what(), where);
    }
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
    json j = parse_json_strict(text);
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::set<std::string> allowed{"format", "name", "dim", "extension", "brackets"};
        if (!allowed.count(it.key())) throw ParseError("unknown field \"" + it.key() + "\"");
    }
    if (j.contains("format") && j["format"] != 1) throw ParseError("unsupported format version", "format");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim < 0 || dim > 64) throw ParseError("dimension out of range", "dim");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name must be a string", "name");
        name = j["name"].get<std::string>();
    }
    ExprContext ctx;
    if (j.contains("extension")) {
        const json& e = j["extension"];
        if (!e.is_object() || !e.contains("generator") || !e.contains("minpoly") || !e["generator"].is_string() ||
            !e["minpoly"].is_string() || e.size() != 2)
            throw ParseError("extension needs string fields \"generator\" and \"minpoly\"", "extension");
        ctx.tower = parse_tower(e["generator"].get<std::string>(), e["minpoly"].get<std::string>());
    }
    LieAlgebra L(dim, name, ctx.tower);
    if (!j.contains("brackets")) return L;
    const json& br = j["brackets"];
    if (!br.is_object()) throw ParseError("brackets must be an object", "brackets");
    for (auto it = br.begin(); it != br.end(); ++it) {
        std::string where = "brackets[\"" + it.key() + "\"]";
        auto comma = it.key().find(',');
        if (comma == std::string::npos) throw ParseError("bracket key must look like \"i,j\"", where);
        int i = parse_index(it.key().substr(0, comma), dim, where);
        int jj = parse_index(it.key().substr(comma + 1), dim, where);
        if (i >= jj) throw ParseError("bracket keys must satisfy i<j", where);
        if (!it.value().is_object()) throw ParseError("bracket value must be an object", where);
        for (auto kt = it.value().begin(); kt != it.value().end(); ++kt) {
            std::string w2 = where + "[\"" + kt.key() + "\"]";
            int k = parse_index(kt.key(), dim, w2);
            Scalar v = literal(kt.value(), ctx, w2);
            if (!v.is_zero()) L.set_bracket(i - 1, jj - 1, k - 1, v);
        }
    }
    return L;
}

std::string serialize_algebra(const LieAlgebra& L) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["name"] = L.name();
    j["dim"] = L.dim();
    if (const FieldTower* t = L.tower()) {
        nlohmann::ordered_json e;
        e["generator"] = t->generator();
        e["minpoly"] = t->minpoly_string();
        j["extension"] = e;
    }
    nlohmann::ordered_json br = nlohmann::ordered_json::object();
    for (int i = 0; i < L.dim(); ++i)
        for (int k = i + 1; k < L.dim(); ++k) {
            nlohmann::ordered_json row = nlohmann::ordered_json::object();
            for (int s = 0; s < L.dim(); ++s)
                if (!L.c(i, k, s).is_zero()) row[std::to_string(s + 1)] = L.c(i, k, s).to_string();
            if (!row.empty()) br[std::to_string(i + 1) + "," + std::to_string(k + 1)] = row;
        }
    j["brackets"] = br;
    return j.dump(2) + "\n";
}

}  // namespace lieinv
