#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lieinv/catalog.hpp"
#include "lieinv/classify.hpp"
#include "lieinv/contract.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/invariant.hpp"
#include "lieinv/json_io.hpp"

namespace lieinv::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string format = "table";
    std::string file, file2;
    std::string family = "psi";
    int q = 1;
    std::string kappa;
    std::string abg;
    std::string method = "psi";
    std::vector<std::string> extra_kappa;
    std::string g34 = "2";
    std::optional<int> dim;
    std::string label;
    std::string params;
    std::string generator = "s";
    std::string extension;
    bool family_given = false;
    bool check_fixtures = false;
    std::string out_dir;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file", path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

LieAlgebra load(const std::string& path, bool validate_it = true) {
    LieAlgebra L;
    try {
        L = parse_algebra(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), path);
    }
    if (validate_it) require_valid(L);
    return L;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file", path.string());
    out << text;
}

// Rows separated by ';', entries by ','; entries are polynomials in x.
KappaSpec parse_kappa(const std::string& spec, const FieldTower* tower) {
    KappaSpec k;
    std::stringstream rows(spec);
    std::string row;
    while (std::getline(rows, row, ';')) {
        k.k.emplace_back();
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) k.k.back().push_back(parse_poly(cell, {tower, {}, "x"}));
    }
    k.q = static_cast<int>(k.k.size()) - 1;
    try {
        k.check();
    } catch (const MathError& e) {
        throw ParseError(e.what(), "kappa \"" + spec + "\"");
    }
    return k;
}

const FieldTower* tower_option(const Options& o) {
    return o.extension.empty() ? nullptr : parse_tower(o.generator, o.extension);
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string point_label(const Branch& b) {
    if (b.is_point()) return b.root().to_string();
    return "roots of " + b.modulus().to_string() + " (" + std::to_string(b.degree()) + " points)";
}

void print_table(std::ostream& out, const std::string& title, const StepFunction& f) {
    out << title << "\n";
    std::size_t w = 9;
    for (const auto& e : f.exceptional()) w = std::max(w, point_label(e.branch).size() + 2);
    for (const auto& e : f.exceptional()) out << "  " << pad(point_label(e.branch), w) << e.value << "\n";
    out << "  " << pad("generic", w) << f.generic() << "\n";
    if (f.tower()) {
        bool used = false;
        for (const auto& e : f.exceptional())
            for (const auto& c : e.branch.modulus().coeffs()) used = used || !c.in_base();
        if (used) out << "  where " << f.tower()->minpoly_string() << " = 0\n";
    }
}

void print_identification(std::ostream& out, const Identification& id) {
    out << "label    " << id.label << "\n";
    if (!id.tag.empty()) out << "tag      " << id.tag << "\n";
    if (!id.params.empty()) out << "params   " << params_to_string(id.params) << "\n";
    for (const auto& [k, v] : id.evidence) out << pad(k, 9) << v << "\n";
}

void print_report(std::ostream& out, const ContractionReport& r) {
    for (const auto& c : r.criteria) {
        out << pad(c.name, 4) << (c.pass ? "pass  " : "FAIL  ") << c.description;
        if (c.witness)
            out << "  [at alpha = " << point_label(*c.witness) << ": " << c.value_L << " > " << c.value_L0 << "]";
        else
            out << "  [" << c.value_L << ", " << c.value_L0 << "]";
        out << "\n";
    }
    out << "verdict: " << r.verdict() << "\n";
}

Family family_option(const Options& o) { return parse_family(o.family); }

int cmd_validate(const Options& o, std::ostream& out) {
    LieAlgebra L = load(o.file, false);
    auto v = validate(L);
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        j["valid"] = !v.has_value();
        if (v) {
            Json w;
            w["kind"] = v->kind == Violation::Kind::Jacobi ? "jacobi" : "antisymmetry";
            w["index"] = v->index;
            w["residual"] = v->residual.to_string();
            w["message"] = v->describe();
            j["violation"] = w;
        }
        out << dump(j);
    } else {
        out << (v ? "invalid: " + v->describe() : "ok: " + std::to_string(L.dim()) + "-dimensional Lie algebra")
            << "\n";
    }
    return v ? kInvalidAlgebra : kOk;
}

int cmd_invariant(const Options& o, std::ostream& out) {
    Family f = family_option(o);
    StepFunction s = compute_invariant(load(o.file), f);
    if (json_out(o))
        out << dump(to_json(s));
    else
        print_table(out, family_name(f) + "(alpha)", s);
    return kOk;
}

int cmd_signature(const Options& o, std::ostream& out) {
    Family f = family_option(o);
    OccurrenceSignature sig = signature(compute_invariant(load(o.file), f));
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        j["family"] = family_name(f);
        j["signature"] = sig.to_string();
        j["generic"] = sig.generic;
        Json occ = Json::array();
        for (const auto& [value, count] : sig.occurrences) occ.push_back(Json{{"value", value}, {"count", count}});
        j["occurrences"] = occ;
        out << dump(j);
    } else {
        out << sig.to_string() << "\n";
    }
    return kOk;
}

int cmd_cocycle_dim(const Options& o, std::ostream& out) {
    LieAlgebra L = load(o.file);
    KappaSpec k = parse_kappa(o.kappa, L.tower());
    if (k.q != o.q)
        throw ParseError("kappa must be " + std::to_string(o.q + 1) + "x" + std::to_string(o.q + 1) + " for q = " +
                         std::to_string(o.q));
    bool constant = true;
    for (const auto& row : k.k)
        for (const auto& e : row) constant = constant && e.is_constant();
    if (constant) {
        int d = cocycle_dim(L, k);
        if (json_out(o)) {
            Json j;
            j["format"] = 1;
            j["q"] = k.q;
            j["dim"] = d;
            out << dump(j);
        } else {
            out << d << "\n";
        }
        return kOk;
    }
    KernelProfile prof = kernel_profile(build_general(L, k));
    StepFunction s = StepFunction::from_profile(Family::Psi, prof, L.tower());
    if (json_out(o)) {
        Json j = to_json(s);
        j.erase("family");
        Json r;
        r["format"] = 1;
        r["q"] = k.q;
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "format") r[it.key()] = it.value();
        out << dump(r);
    } else {
        print_table(out, "dim Z^" + std::to_string(k.q) + "(x)", s);
    }
    return kOk;
}

int cmd_der_dim(const Options& o, std::ostream& out) {
    LieAlgebra L = load(o.file);
    std::vector<Scalar> v;
    std::stringstream s(o.abg);
    std::string cell;
    while (std::getline(s, cell, ',')) v.push_back(parse_scalar(cell, {L.tower(), {}, {}}));
    if (v.size() != 3) throw ParseError("expected three comma-separated scalars", "--abg");
    int d = der_dim(L, v[0], v[1], v[2]);
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        j["alpha"] = v[0].to_string();
        j["beta"] = v[1].to_string();
        j["gamma"] = v[2].to_string();
        j["dim"] = d;
        out << dump(j);
    } else {
        out << d << "\n";
    }
    return kOk;
}

int emit_identification(const Options& o, const Identification& id, std::ostream& out) {
    if (json_out(o))
        out << dump(to_json(id));
    else
        print_identification(out, id);
    return kOk;
}

int cmd_identify4(const Options& o, std::ostream& out) { return emit_identification(o, identify4(load(o.file)), out); }

int cmd_classify3(const Options& o, std::ostream& out) {
    Method3 m;
    if (o.method == "psi")
        m = Method3::Psi;
    else if (o.method == "phi0")
        m = Method3::Phi0;
    else
        throw ParseError("unknown method \"" + o.method + "\" (expected psi or phi0)", "--method");
    return emit_identification(o, classify3(load(o.file), m), out);
}

int cmd_contract(const Options& o, std::ostream& out) {
    LieAlgebra L = load(o.file), L0 = load(o.file2);
    std::vector<KappaSpec> extra;
    for (const auto& s : o.extra_kappa) extra.push_back(parse_kappa(s, L.tower() ? L.tower() : L0.tower()));
    ContractionReport r = criteria_report(L, L0, extra);
    if (json_out(o))
        out << dump(to_json(r));
    else
        print_report(out, r);
    return kOk;
}

int cmd_graph3d(const Options& o, std::ostream& out) {
    std::vector<Scalar> samples;
    std::stringstream s(o.g34);
    std::string cell;
    while (std::getline(s, cell, ',')) samples.push_back(parse_scalar(cell));
    auto edges = contraction_graph3d(samples);
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        Json arr = Json::array();
        for (const auto& e : edges) arr.push_back(Json{{"from", e.from.name()}, {"to", e.to.name()}});
        j["edges"] = arr;
        out << dump(j);
    } else {
        for (const auto& e : edges) out << pad(e.from.name(), 10) << " -> " << e.to.name() << "\n";
    }
    return kOk;
}

Json entry_summary(const CatalogEntry& e) {
    Json j;
    j["label"] = e.label;
    if (!e.tag.empty()) j["tag"] = e.tag;
    j["dim"] = e.dim;
    j["params"] = e.params;
    if (!e.constraint.empty()) j["constraint"] = e.constraint;
    Json s = Json::array();
    for (const auto& p : sample_params(e)) s.push_back(params_to_string(p));
    j["samples"] = s;
    return j;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
    auto entries = list_entries(o.dim);
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        Json arr = Json::array();
        for (const auto* e : entries) arr.push_back(entry_summary(*e));
        j["entries"] = arr;
        out << dump(j);
        return kOk;
    }
    for (const auto* e : entries) {
        std::string params;
        for (const auto& p : e->params) params += (params.empty() ? "" : ",") + p;
        out << pad(e->tag.empty() ? "-" : e->tag, 6) << pad(e->label, 16) << "dim " << e->dim;
        if (!params.empty()) out << "  params " << params;
        if (!e->constraint.empty()) out << "  (" << e->constraint << ")";
        out << "\n";
    }
    return kOk;
}

// Parameters for an entry: the --params text, or the first sample when omitted.
Params entry_params(const CatalogEntry& e, const Options& o) {
    if (o.params.empty()) {
        if (e.parametric()) throw ConstraintViolation(e.label + " needs --params (e.g. " + e.samples.front() + ")");
        return {};
    }
    const FieldTower* t = tower_option(o);
    return parse_params(o.params, t ? t : e.extension());
}

int cmd_catalog_show(const Options& o, std::ostream& out, std::ostream& err) {
    const CatalogEntry& e = find_entry(o.label);
    Params p = entry_params(e, o);
    LieAlgebra L = instantiate(e.label, p);
    std::vector<Family> fams;
    if (o.family_given)
        fams.push_back(family_option(o));
    else
        fams = {Family::Psi, Family::Phi, Family::Phi0};
    std::vector<std::pair<Family, std::optional<StepFunction>>> tables;
    for (Family f : fams) {
        try {
            tables.push_back({f, expected_table(e.label, p, f)});
        } catch (const NoFixture&) {
            if (o.family_given) throw;
            tables.push_back({f, std::nullopt});
        }
    }
    std::vector<std::string> mismatches;
    if (o.check_fixtures)
        for (const auto& [f, t] : tables)
            if (t && !step_equal(compute_invariant(L, f), *t)) mismatches.push_back(family_name(f));
    if (json_out(o)) {
        Json j = entry_summary(e);
        j.erase("samples");
        j["format"] = 1;
        j["values"] = to_json(p);
        j["algebra"] = Json::parse(serialize_algebra(L));
        Json tj = Json::object();
        for (const auto& [f, t] : tables) tj[family_name(f)] = t ? to_json(*t) : Json(nullptr);
        j["tables"] = tj;
        if (o.check_fixtures) j["fixtures_match"] = mismatches.empty();
        out << dump(j);
    } else {
        out << e.label;
        if (!e.tag.empty()) out << " (" << e.tag << ")";
        if (!p.empty()) out << " at " << params_to_string(p);
        out << "\n";
        for (int i = 0; i < L.dim(); ++i)
            for (int k = i + 1; k < L.dim(); ++k) {
                std::string rhs;
                for (int s = 0; s < L.dim(); ++s) {
                    const Scalar& c = L.c(i, k, s);
                    if (c.is_zero()) continue;
                    rhs += (rhs.empty() ? "" : " + ") + (c.is_one() ? "" : "(" + c.to_string() + ")") + "e" +
                           std::to_string(s + 1);
                }
                if (!rhs.empty()) out << "  [e" << i + 1 << ",e" << k + 1 << "] = " << rhs << "\n";
            }
        for (const auto& [f, t] : tables) {
            if (t)
                print_table(out, family_name(f) + "(alpha)", *t);
            else
                out << family_name(f) << "(alpha)\n  not tabulated\n";
        }
        if (o.check_fixtures) out << (mismatches.empty() ? "fixtures match\n" : "fixtures DIFFER\n");
    }
    if (!mismatches.empty()) {
        for (const auto& m : mismatches) err << "computed " << m << " differs from the table\n";
        return kFixtureMismatch;
    }
    return kOk;
}

std::string file_stem(const CatalogEntry& e, const Params& p) {
    std::string s = e.label;
    if (!p.empty()) s += "_" + params_to_string(p);
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '+') c = '_';
    return s;
}

int cmd_catalog_export(const Options& o, std::ostream& out) {
    fs::path dir(o.out_dir);
    fs::create_directories(dir);
    int files = 0;
    for (const auto& e : catalog_entries())
        for (const auto& p : sample_params(e)) {
            LieAlgebra L = instantiate(e.label, p);
            std::string stem = file_stem(e, p);
            write_file(dir / (stem + ".algebra.json"), serialize_algebra(L));
            Json j;
            j["format"] = 1;
            j["label"] = e.label;
            if (!e.tag.empty()) j["tag"] = e.tag;
            j["values"] = to_json(p);
            j["algebra"] = stem + ".algebra.json";
            for (Family f : {Family::Psi, Family::Phi, Family::Phi0}) {
                try {
                    j[family_name(f)] = to_json(expected_table(e.label, p, f));
                } catch (const NoFixture&) {
                    j[family_name(f)] = nullptr;
                }
            }
            write_file(dir / (stem + ".fixture.json"), dump(j));
            files += 2;
        }
    if (json_out(o)) {
        Json j;
        j["format"] = 1;
        j["directory"] = dir.string();
        j["files"] = files;
        out << dump(j);
    } else {
        out << "wrote " << files << " files to " << dir.string() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Twisted-cocycle invariants of low-dimensional Lie algebras", "lieinv"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    auto file_arg = [&](CLI::App* c, std::string& target, const char* name = "FILE") {
        c->add_option(name, target, "Algebra file (JSON)")->required();
    };
    auto fam_opt = [&](CLI::App* c) {
        c->add_option("--family", o.family, "psi, phi or phi0")->check(CLI::IsMember({"psi", "phi", "phi0"}));
    };

    auto* validate_c = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
    file_arg(validate_c, o.file);
    auto* inv_c = app.add_subcommand("invariant", "Step function psi, phi or phi0");
    fam_opt(inv_c);
    file_arg(inv_c, o.file);
    auto* sig_c = app.add_subcommand("signature", "Occurrence signature of an invariant");
    fam_opt(sig_c);
    file_arg(sig_c, o.file);
    auto* coc_c = app.add_subcommand("cocycle-dim", "Dimension of the kappa-twisted q-cocycle space");
    coc_c->add_option("--q", o.q, "Cochain degree")->check(CLI::PositiveNumber);
    coc_c->add_option("--kappa", o.kappa, "Symmetric (q+1)x(q+1) matrix, rows split by ';', e.g. \"1,x;x,1\"")
        ->required();
    file_arg(coc_c, o.file);
    auto* der_c = app.add_subcommand("der-dim", "Dimension of the (alpha,beta,gamma)-derivations");
    der_c->add_option("--abg", o.abg, "Three scalars \"alpha,beta,gamma\"")->required();
    file_arg(der_c, o.file);
    auto* id4_c = app.add_subcommand("identify4", "Identify a four-dimensional algebra");
    file_arg(id4_c, o.file);
    auto* cl3_c = app.add_subcommand("classify3", "Identify a three-dimensional algebra");
    cl3_c->add_option("--method", o.method, "psi or phi0");
    file_arg(cl3_c, o.file);
    auto* con_c = app.add_subcommand("contract", "Necessary criteria for FILE2 to be a contraction of FILE1");
    con_c->add_option("--extra-kappa", o.extra_kappa, "Additional constant twist matrix (repeatable)");
    file_arg(con_c, o.file, "FILE1");
    file_arg(con_c, o.file2, "FILE2");
    auto* g3_c = app.add_subcommand("contract-graph3d", "Proper contractions among three-dimensional algebras");
    g3_c->add_option("--g34", o.g34, "Comma-separated values of a for g3.4(a)");

    auto* cat_c = app.add_subcommand("catalog", "The built-in algebra inventory");
    cat_c->require_subcommand(1);
    auto* list_c = cat_c->add_subcommand("list", "List entries");
    list_c->add_option("--dim", o.dim, "Only entries of this dimension");
    auto* show_c = cat_c->add_subcommand("show", "Brackets and tabulated invariants of one entry");
    show_c->add_option("LABEL", o.label, "Entry label, e.g. g4.5")->required();
    show_c->add_option("--params", o.params, "Parameter values, e.g. \"a=2,b=3\"");
    auto* show_fam = show_c->add_option("--family", o.family, "Only this family")
                         ->check(CLI::IsMember({"psi", "phi", "phi0"}));
    show_c->add_flag("--check-fixtures", o.check_fixtures, "Recompute the invariants and compare with the tables");
    show_c->add_option("--extension", o.extension, "Minimal polynomial of a generator used in --params, e.g. s^2-7");
    show_c->add_option("--generator", o.generator, "Name of that generator");
    auto* exp_c = cat_c->add_subcommand("export", "Write algebra and fixture files for every sample");
    exp_c->add_option("DIR", o.out_dir, "Output directory")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }
    o.family_given = show_fam->count() > 0;

    try {
        if (*validate_c) return cmd_validate(o, out);
        if (*inv_c) return cmd_invariant(o, out);
        if (*sig_c) return cmd_signature(o, out);
        if (*coc_c) return cmd_cocycle_dim(o, out);
        if (*der_c) return cmd_der_dim(o, out);
        if (*id4_c) return cmd_identify4(o, out);
        if (*cl3_c) return cmd_classify3(o, out);
        if (*con_c) return cmd_contract(o, out);
        if (*g3_c) return cmd_graph3d(o, out);
        if (*list_c) return cmd_catalog_list(o, out);
        if (*show_c) return cmd_catalog_show(o, out, err);
        if (*exp_c) return cmd_catalog_export(o, out);
    } catch (const InvalidAlgebra& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidAlgebra;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const FixtureMismatch& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kFixtureMismatch;
    } catch (const ConstraintViolation& e) {
        err << "refused: " << e.what() << "\n";
        return kConstraint;
    } catch (const MathError& e) {
        err << "refused: " << e.what() << "\n";
        return kConstraint;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

}  // namespace lieinv::cli
