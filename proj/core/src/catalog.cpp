#include "lieinv/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"

namespace lieinv {

namespace {

using B = CatalogEntry::Bracket;
using T = CatalogEntry::Table;

std::vector<T> one(const char* table) { return {{"", table}}; }

CatalogEntry fixed(std::string label, std::string tag, int dim, std::vector<B> br, const char* psi,
                   const char* phi, const char* phi0) {
    CatalogEntry e;
    e.label = std::move(label);
    e.tag = std::move(tag);
    e.dim = dim;
    e.brackets = std::move(br);
    e.psi = one(psi);
    e.phi = one(phi);
    e.phi0 = one(phi0);
    return e;
}

CatalogEntry family(std::string label, std::string tag, int dim, std::vector<std::string> params,
                    std::string constraint, std::vector<std::string> nonzero, std::vector<B> br,
                    const char* psi, const char* phi, const char* phi0, std::vector<std::string> orbit,
                    std::vector<std::string> samples) {
    CatalogEntry e = fixed(std::move(label), std::move(tag), dim, std::move(br), psi, phi, phi0);
    e.params = std::move(params);
    e.constraint = std::move(constraint);
    e.nonzero = std::move(nonzero);
    e.orbit = std::move(orbit);
    e.samples = std::move(samples);
    return e;
}

CatalogEntry with_sqrt3(CatalogEntry e) {
    e.ext_generator = "s";
    e.ext_minpoly = "s^2-3";
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;

    // Two dimensions.
    v.push_back(fixed("2g1", "", 2, {}, "1:4 | 4", "| 2", "| 2"));
    v.push_back(fixed("g2.1", "", 2, {{1, 2, 1, "1"}}, "1:2; 0:3 | 2", "| 2", "2:1 | 0"));

    // Three dimensions.
    v.push_back(fixed("3g1", "", 3, {}, "1:9 | 9", "| 9", "| 9"));
    v.push_back(fixed("g2.1+g1", "", 3, {{1, 2, 2, "1"}}, "1:4; 0:6 | 4", "| 6", "1:2; 2:2 | 1"));
    v.push_back(fixed("g3.1", "", 3, {{2, 3, 1, "1"}}, "1:6 | 6", "0:9 | 8", "| 3"));
    v.push_back(fixed("g3.2", "", 3, {{1, 3, 1, "1"}, {2, 3, 1, "1"}, {2, 3, 2, "1"}}, "1:4 | 3", "| 6",
                      "2:2 | 0"));
    v.push_back(fixed("g3.3", "", 3, {{1, 3, 1, "1"}, {2, 3, 2, "1"}}, "1:6 | 3", "| 6", "2:6 | 0"));
    v.push_back(fixed("g3.4(-1)", "", 3, {{1, 3, 1, "1"}, {2, 3, 2, "-1"}}, "1:4; -1:5 | 3", "0:9 | 7",
                      "0:2; 2:2 | 0"));
    v.push_back(family("g3.4", "", 3, {"a"}, "a != 0, +-1", {"a", "a-1", "a+1"},
                       {{1, 3, 1, "1"}, {2, 3, 2, "a"}}, "1:4; a:4; 1/a:4 | 3", "| 6",
                       "2:2; 1+a:1; 1+1/a:1 | 0", {"a", "1/a"}, {"2", "3"}));
    v.push_back(fixed("sl2", "", 3, {{1, 2, 1, "1"}, {2, 3, 3, "1"}, {1, 3, 2, "2"}}, "1:3; -1:5; 2:1 | 0",
                      "0:9 | 6", "2:1 | 0"));

    // Four dimensions, (g-1) ... (g-34).
    v.push_back(fixed("4g1", "g-1", 4, {}, "1:16 | 16", "| 24", "| 24"));
    v.push_back(fixed("g2.1+2g1", "g-2", 4, {{1, 2, 1, "1"}}, "1:8; 0:11 | 8", "0:16 | 14", "1:8; 2:7 | 6"));
    v.push_back(fixed("g2.1+g2.1", "g-3", 4, {{1, 2, 1, "1"}, {3, 4, 3, "1"}}, "1:4; 0:6 | 4",
                      "0:12; 1:12 | 10", "1:2; 2:2 | 0"));
    v.push_back(fixed("g3.1+g1", "g-4", 4, {{2, 3, 1, "1"}}, "1:10; 0:11 | 10", "0:20 | 19", "1:11 | 8"));
    v.push_back(fixed("g3.2+g1", "g-5", 4, {{1, 3, 1, "1"}, {2, 3, 1, "1"}, {2, 3, 2, "1"}},
                      "1:6; 0:7 | 5", "1:13 | 12", "1:3; 2:3 | 1"));
    v.push_back(fixed("g3.3+g1", "g-6", 4, {{1, 3, 1, "1"}, {2, 3, 2, "1"}}, "1:8; 0:7 | 5", "1:15 | 12",
                      "1:3; 2:7 | 1"));
    v.push_back(fixed("g3.4(-1)+g1", "g-7", 4, {{1, 3, 1, "1"}, {2, 3, 2, "-1"}}, "1:6; 0:7; -1:7 | 5",
                      "1:15; 0:16; -1:16 | 14", "1:3; 2:3; 0:3 | 1"));
    v.push_back(family("g3.4+g1", "g-8", 4, {"a"}, "a != 0, +-1", {"a", "a-1", "a+1"},
                       {{1, 3, 1, "1"}, {2, 3, 2, "a"}}, "1:6; 0:7; a:6; 1/a:6 | 5",
                       "1:13; a:13; 1/a:13 | 12", "1:3; 2:3; 1+a:2; 1+1/a:2 | 1", {"a", "1/a"},
                       {"2", "3"}));
    v.push_back(fixed("sl2+g1", "g-9", 4, {{1, 2, 1, "1"}, {2, 3, 3, "1"}, {1, 3, 2, "2"}},
                      "1:4; 0:4; -1:6; 2:2 | 1", "1:12; 0:12; -1:14; 1/2:10 | 9", "2:1 | 0"));
    v.push_back(fixed("g4.1", "g-10", 4, {{2, 4, 1, "1"}, {3, 4, 2, "1"}}, "1:7 | 7", "-1:16; 0:16 | 15",
                      "| 3"));

    const std::vector<B> g42 = {{1, 4, 1, "a"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}};
    v.push_back(family("g4.2", "g-11", 4, {"a"}, "a != 0, +-1, -2", {"a", "a-1", "a+1", "a+2"}, g42,
                       "1:6; a:5; 1/a:5 | 4", "1+a:13; 2/a:13 | 12", "2:3; 1+a:1; 1+1/a:1 | 0", {"a"},
                       {"3", "2"}));
    v.push_back(fixed("g4.2(1)", "g-12", 4, {{1, 4, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:8 | 4", "2:15 | 12", "2:7 | 0"));
    v.push_back(fixed("g4.2(-2)", "g-13", 4,
                      {{1, 4, 1, "-2"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:6; -2:5; -1/2:5 | 4", "-1:15 | 12", "2:3; -1:1; 1/2:1 | 0"));
    v.push_back(fixed("g4.2(-1)", "g-14", 4,
                      {{1, 4, 1, "-1"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:6; -1:6 | 4", "-2:13; 0:16 | 12", "0:2; 2:3 | 0"));
    v.push_back(fixed("g4.3", "g-15", 4, {{1, 4, 1, "1"}, {3, 4, 2, "1"}}, "1:6; 0:7 | 6", "0:16 | 13",
                      "1:3; 2:3 | 2"));
    v.push_back(fixed("g4.4", "g-16", 4,
                      {{1, 4, 1, "1"}, {2, 4, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:6 | 4", "2:13 | 12", "1:0; 2:3 | 0"));

    const std::vector<B> g45 = {{1, 4, 1, "a"}, {2, 4, 2, "b"}, {3, 4, 3, "1"}};
    v.push_back(family("g4.5", "g-17", 4, {"a", "b"},
                       "a != 0, +-1, +-b, 1/b, b^2, -1-b; b != 0, +-1, +-a, 1/a, a^2, -1-a",
                       {"a", "a-1", "a+1", "b", "b-1", "b+1", "a-b", "a+b", "a*b-1", "a-b^2", "b-a^2",
                        "a+b+1"},
                       g45, "1:6; a:5; 1/a:5; b:5; 1/b:5; a/b:5; b/a:5 | 4",
                       "a+b:13; (1+a)/b:13; (1+b)/a:13 | 12",
                       "2:3; 1+a:1; 1+b:1; 1+1/a:1; 1+1/b:1; 1+a/b:1; 1+b/a:1 | 0",
                       {"a,b", "b,a", "1/a,b/a", "b/a,1/a", "1/b,a/b", "a/b,1/b"}, {"2,3", "3,5"}));
    v.push_back(family("g4.5(a,-1-a)", "g-18", 4, {"a"}, "a != 0, +-1, -2, -1/2, -1/2+-i*sqrt(3)/2",
                       {"a", "a-1", "a+1", "a+2", "2*a+1", "a^2+a+1"},
                       {{1, 4, 1, "a"}, {2, 4, 2, "-1-a"}, {3, 4, 3, "1"}},
                       "1:6; a:5; 1/a:5; -1-a:5; -1/(1+a):5; -a/(a+1):5; -(a+1)/a:5 | 4", "-1:15 | 12",
                       "2:3; 1+a:1; -a:1; 1+1/a:1; a/(a+1):1; 1/(a+1):1; -1/a:1 | 0",
                       {"a", "1/a", "-1-a", "-1/(1+a)", "-a/(a+1)", "-(a+1)/a"}, {"2", "3"}));
    v.push_back(family("g4.5(a,a^2)", "g-19", 4, {"a"}, "a != 0, +-1, +-i, -1/2+-i*sqrt(3)/2",
                       {"a", "a-1", "a+1", "a^2+1", "a^2+a+1"},
                       {{1, 4, 1, "a"}, {2, 4, 2, "a^2"}, {3, 4, 3, "1"}}, "1:6; a:6; 1/a:6; a^2:5; 1/a^2:5 | 4",
                       "a+a^2:13; (a+1)/a^2:13; (a^2+1)/a:13 | 12",
                       "2:3; 1+a:2; 1+a^2:1; 1+1/a:2; 1+1/a^2:1 | 0", {"a", "1/a"}, {"2", "3"}));
    v.push_back(family("g4.5(a,1)", "g-20", 4, {"a"}, "a != 0, +-1, -2", {"a", "a-1", "a+1", "a+2"},
                       {{1, 4, 1, "a"}, {2, 4, 2, "1"}, {3, 4, 3, "1"}}, "1:8; a:6; 1/a:6 | 4",
                       "1+a:15; 2/a:13 | 12", "2:7; 1+a:2; 1+1/a:2 | 0", {"a"}, {"2", "3"}));
    v.push_back(family("g4.5(a,-1)", "g-21", 4, {"a"}, "a != 0, +-1, +-i", {"a", "a-1", "a+1", "a^2+1"},
                       {{1, 4, 1, "a"}, {2, 4, 2, "-1"}, {3, 4, 3, "1"}},
                       "1:6; a:5; 1/a:5; -1:6; -a:5; -1/a:5 | 4", "-1+a:13; -1-a:13; 0:16 | 12",
                       "2:3; 1+a:1; 0:2; 1+1/a:1; 1-a:1; 1-1/a:1 | 0", {"a", "-a"}, {"2", "3"}));
    v.push_back(fixed("g4.5(1,1)", "g-22", 4, {{1, 4, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 3, "1"}}, "1:12 | 4",
                      "2:18 | 12", "2:18 | 0"));
    v.push_back(fixed("g4.5(-1,1)", "g-23", 4, {{1, 4, 1, "-1"}, {2, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:8; -1:8 | 4", "0:20; -2:13 | 12", "2:7; 0:4 | 0"));
    v.push_back(fixed("g4.5(-2,1)", "g-24", 4, {{1, 4, 1, "-2"}, {2, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:8; -2:6; -1/2:6 | 4", "-1:16 | 12", "2:7; -1:2; 1/2:2 | 0"));
    // w = -1/2 + (sqrt(3)/2) i, the second parameter is its conjugate -1-w.
    v.push_back(with_sqrt3(fixed("g4.5(w,-1-w)", "g-25", 4,
                                 {{1, 4, 1, "-1/2+s/2*i"}, {2, 4, 2, "-1/2-s/2*i"}, {3, 4, 3, "1"}},
                                 "1:6; -1/2+s/2*i:7; -1/2-s/2*i:7 | 4", "-1:15 | 12",
                                 "2:3; 1/2-s/2*i:3; 1/2+s/2*i:3 | 0")));
    v.push_back(fixed("g4.5(i,-1)", "g-26", 4, {{1, 4, 1, "i"}, {2, 4, 2, "-1"}, {3, 4, 3, "1"}},
                      "1:6; i:6; -i:6; -1:6 | 4", "-1+i:13; -1-i:13; 0:16 | 12", "2:3; 1+i:2; 0:2; 1-i:2 | 0"));
    v.push_back(fixed("g4.7", "g-27", 4,
                      {{2, 3, 1, "1"}, {1, 4, 1, "2"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:5; 2:4 | 3", "0:12; 1:12; 3:12 | 11", "3/2:1; 2:1 | 0"));
    v.push_back(family("g4.8", "g-28", 4, {"a"}, "a != 0, +-1, +-2, +-1/2, -1/2+-i*sqrt(3)/2",
                       {"a", "a-1", "a+1", "a-2", "a+2", "2*a-1", "2*a+1", "a^2+a+1"},
                       {{2, 3, 1, "1"}, {1, 4, 1, "1+a"}, {2, 4, 2, "1"}, {3, 4, 3, "a"}},
                       "1:5; 2:4; a:4; 1/a:4 | 3",
                       "0:12; 1:12; 1+2*a:12; 1+2/a:12; 5/3+2/3*(a+1/a):12 | 11",
                       "2:1; (1+2*a)/(1+a):1; (2+a)/(1+a):1 | 0", {"a", "1/a"}, {"3", "4"}));
    v.push_back(fixed("g4.8(1)", "g-29", 4, {{2, 3, 1, "1"}, {1, 4, 1, "2"}, {2, 4, 2, "1"}, {3, 4, 3, "1"}},
                      "1:7; 2:4 | 3", "0:12; 1:12; 3:14 | 11", "2:1; 3/2:2 | 0"));
    v.push_back(fixed("g4.8(2)", "g-30", 4, {{2, 3, 1, "1"}, {1, 4, 1, "3"}, {2, 4, 2, "1"}, {3, 4, 3, "2"}},
                      "1:5; 2:5; 1/2:4 | 3", "0:12; 1:12; 5:12; 2:12; 10/3:12 | 11",
                      "2:1; 5/3:1; 4/3:1 | 0"));
    v.push_back(fixed("g4.8(0)", "g-31", 4, {{2, 3, 1, "1"}, {1, 4, 1, "1"}, {2, 4, 2, "1"}}, "1:5; 0:6 | 4",
                      "0:12; 1:13 | 11", "1:2; 2:2 | 0"));
    v.push_back(fixed("g4.8(-1)", "g-32", 4, {{2, 3, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 3, "-1"}},
                      "1:5; -1:6 | 4", "1:13; -1:14 | 12", "2:1 | 0"));
    v.push_back(fixed("g4.8(-2)", "g-33", 4,
                      {{2, 3, 1, "1"}, {1, 4, 1, "-1"}, {2, 4, 2, "1"}, {3, 4, 3, "-2"}},
                      "1:5; 2:4; -2:4; -1/2:4 | 3", "0:16; 1:12; -3:12 | 11", "2:1; 3:1; 0:1 | 0"));
    v.push_back(with_sqrt3(fixed("g4.8(w)", "g-34", 4,
                                 {{2, 3, 1, "1"}, {1, 4, 1, "1/2+s/2*i"}, {2, 4, 2, "1"}, {3, 4, 3, "-1/2+s/2*i"}},
                                 "1:5; 2:4; -1/2+s/2*i:4; -1/2-s/2*i:4 | 3", "0:12; 1:12; s*i:12; -s*i:12 | 11",
                                 "2:1; 3/2+s/2*i:1; 3/2-s/2*i:1 | 0")));

    // Eight dimensions, basis (l01, l02, l10, l20, l11, l22, l12, l21).
    CatalogEntry l177 = family("L17.7", "", 8, {"a"}, "a != 0", {"a"},
                               {{1, 3, 5, "-a"},
                                {1, 4, 8, "1"},
                                {1, 5, 7, "1"},
                                {1, 6, 4, "1"},
                                {2, 3, 7, "1"},
                                {2, 6, 8, "1"},
                                {3, 5, 8, "1"}},
                               "0:20; 1:19 | 18", "", "", {"a"}, {"1", "-1", "1/3", "2", "1/4+s/4*i"});
    l177.phi = {{"a-1", "0:112; 1:83; -1:81 | 80"},
                {"a+1", "0:104; 1:83; -1:81 | 80"},
                {"3*a-1", "0:104; 1:83; -1/3:81 | 80"},
                {"2*a^2-a+1", "0:104; 1:82; -a:82 | 80"},
                {"", "0:104; 1:82; -a:81; -1/2+1/(2*a):81 | 80"}};
    l177.phi0.clear();
    l177.ext_generator = "s";
    l177.ext_minpoly = "s^2-7";
    v.push_back(std::move(l177));
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

const FieldTower* params_tower(const Params& p) {
    const FieldTower* t = nullptr;
    for (const auto& [name, v] : p) {
        if (!v.tower()) continue;
        if (t && t != v.tower()) throw MathError("parameters live in different extensions");
        t = v.tower();
    }
    return t;
}

ExprContext context(const CatalogEntry& e, const Params& p) {
    ExprContext ctx;
    ctx.tower = params_tower(p);
    if (const FieldTower* ext = e.extension()) {
        if (ctx.tower && ctx.tower != ext) throw MathError(e.label + ": parameters use a foreign extension");
        ctx.tower = ext;
    }
    ctx.params = p;
    return ctx;
}

Scalar eval(const std::string& expr, const ExprContext& ctx) { return parse_scalar(expr, ctx).lowered(); }

}  // namespace

const std::vector<CatalogEntry::Table>& CatalogEntry::tables(Family f) const {
    switch (f) {
        case Family::Psi: return psi;
        case Family::Phi: return phi;
        case Family::Phi0: return phi0;
    }
    return psi;
}

const FieldTower* CatalogEntry::extension() const {
    if (ext_generator.empty() || !params.empty()) return nullptr;
    return parse_tower(ext_generator, ext_minpoly);
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& find_entry(const std::string& label) {
    for (const auto& e : catalog_entries())
        if (e.label == label) return e;
    throw ConstraintViolation("unknown catalog label \"" + label + "\"");
}

std::vector<const CatalogEntry*> list_entries(std::optional<int> dim) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : catalog_entries())
        if (!dim || e.dim == *dim) out.push_back(&e);
    return out;
}

Params parse_params(const std::string& text, const FieldTower* tower) {
    Params out;
    if (trim(text).empty()) return out;
    ExprContext ctx;
    ctx.tower = tower;
    for (const auto& part : split(text, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError("expected name=value in \"" + part + "\"", "params");
        std::string name = trim(part.substr(0, eq));
        if (name.empty()) throw ParseError("empty parameter name", "params");
        if (out.count(name)) throw ParseError("parameter \"" + name + "\" given twice", "params");
        out[name] = eval(part.substr(eq + 1), ctx);
    }
    return out;
}

Params bind_params(const CatalogEntry& e, const std::string& tuple) {
    const FieldTower* t = e.ext_generator.empty() ? nullptr : parse_tower(e.ext_generator, e.ext_minpoly);
    ExprContext ctx;
    ctx.tower = t;
    auto parts = split(tuple, ',');
    if (parts.size() != e.params.size())
        throw ParseError("expected " + std::to_string(e.params.size()) + " values in \"" + tuple + "\"",
                         e.label);
    Params out;
    for (std::size_t k = 0; k < parts.size(); ++k) out[e.params[k]] = eval(parts[k], ctx);
    return out;
}

std::vector<Params> sample_params(const CatalogEntry& e) {
    if (!e.parametric()) return {Params{}};
    std::vector<Params> out;
    for (const auto& s : e.samples) out.push_back(bind_params(e, s));
    return out;
}

std::string params_to_string(const Params& p) {
    std::string out;
    for (const auto& [name, v] : p) {
        if (!out.empty()) out += ",";
        out += name + "=" + v.to_string();
    }
    return out;
}

void check_admissible(const CatalogEntry& e, const Params& p) {
    for (const auto& name : e.params)
        if (!p.count(name)) throw ConstraintViolation(e.label + ": missing parameter \"" + name + "\"");
    for (const auto& [name, v] : p)
        if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
            throw ConstraintViolation(e.label + ": unknown parameter \"" + name + "\"");
    ExprContext ctx = context(e, p);
    for (const auto& z : e.nonzero) {
        if (eval(z, ctx).is_zero())
            throw ConstraintViolation(e.label + ": excluded parameters " + params_to_string(p) + " (requires " +
                                      e.constraint + "; " + z + " vanishes)");
    }
}

LieAlgebra instantiate(const std::string& label, const Params& p) {
    const CatalogEntry& e = find_entry(label);
    check_admissible(e, p);
    ExprContext ctx = context(e, p);
    std::string name = e.label;
    if (!p.empty()) name += " [" + params_to_string(p) + "]";
    LieAlgebra L(e.dim, name, ctx.tower);
    for (const auto& b : e.brackets) {
        Scalar v = L.c(b.i - 1, b.j - 1, b.k - 1) + eval(b.expr, ctx);
        L.set_bracket(b.i - 1, b.j - 1, b.k - 1, v);
    }
    require_valid(L);
    return L;
}

StepFunction expected_table(const std::string& label, const Params& p, Family f) {
    const CatalogEntry& e = find_entry(label);
    check_admissible(e, p);
    ExprContext ctx = context(e, p);
    const CatalogEntry::Table* hit = nullptr;
    for (const auto& t : e.tables(f)) {
        if (t.condition.empty() || eval(t.condition, ctx).is_zero()) {
            hit = &t;
            break;
        }
    }
    if (!hit) throw NoFixture(e.label + ": no " + family_name(f) + " table");

    auto bar = hit->table.find('|');
    int generic = std::stoi(hit->table.substr(bar + 1));
    std::vector<StepFunction::Entry> entries;
    std::vector<Scalar> seen;
    for (const auto& item : split(hit->table.substr(0, bar), ';')) {
        if (trim(item).empty()) continue;
        auto colon = item.rfind(':');
        Scalar pt = eval(item.substr(0, colon), ctx);
        for (const auto& s : seen)
            if (s == pt)
                throw FixtureMismatch(e.label + ": tabulated points coincide at " + pt.to_string() + " for " +
                                      params_to_string(p));
        seen.push_back(pt);
        entries.push_back({Branch::point(pt), std::stoi(item.substr(colon + 1))});
    }
    return StepFunction(f, generic, std::move(entries), ctx.tower);
}

std::vector<Params> parameter_orbit(const CatalogEntry& e, const Params& p) {
    ExprContext ctx = context(e, p);
    std::vector<Params> out;
    for (const auto& tuple : e.orbit) {
        auto parts = split(tuple, ',');
        if (parts.size() != e.params.size()) throw MathError(e.label + ": malformed orbit tuple " + tuple);
        Params q;
        for (std::size_t k = 0; k < parts.size(); ++k) q[e.params[k]] = eval(parts[k], ctx);
        out.push_back(std::move(q));
    }
    if (out.empty()) out.push_back(p);
    return out;
}

}  // namespace lieinv
