#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "homnr/io.hpp"

namespace homnr::cli {

using io::json;

// One invocation: a command, its file arguments and options by flag name
// (without dashes), and switches.
struct JobSpec {
    std::string command;
    std::map<std::string, std::string> args;
    std::set<std::string> flags;
    std::size_t max_dim = 6;
};

struct Report {
    std::string command;
    std::string status = "ok";  // ok or fail
    json payload = json::object();
    int exit_code = 0;          // 0 ok, 1 internal error, 2 input error, 3 verification failure
};

inline std::size_t max_dim_from_env() {
    const char* v = std::getenv("HOMNR_MAX_DIM");
    if (v == nullptr || *v == '\0') return 6;
    try {
        std::size_t pos = 0;
        long n = std::stol(v, &pos);
        if (pos != std::string(v).size() || n < 1) throw std::invalid_argument(v);
        return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw InputError(std::string("HOMNR_MAX_DIM: expected a positive integer, got \"") + v + "\"");
    }
}

inline json to_json(const Report& r) {
    return {{"command", r.command},
            {"status", r.status},
            {"payload", r.payload},
            {"convention_ledger", io::convention_ledger_json()}};
}

namespace detail {

// Plain-text rendering of a JSON value, one scalar per line.
inline void render(std::string& out, const json& j, const std::string& indent) {
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || (v.is_array() && v.empty()) || (v.is_object() && v.empty())) {
                out += indent + k + ": " + (v.is_primitive() ? scalar(v) : v.dump()) + "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
                out += indent + k + ": " + v.dump() + "\n";
            } else {
                out += indent + k + ":\n";
                render(out, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive() || std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
                out += indent + "- " + (v.is_primitive() ? scalar(v) : v.dump()) + "\n";
            } else {
                out += indent + "-\n";
                render(out, v, indent + "  ");
            }
        }
    } else {
        out += indent + scalar(j) + "\n";
    }
}

}  // namespace detail

// The ledger is long; text output lists only its ids.
inline std::string to_text(const Report& r) {
    std::string out = "command: " + r.command + "\nstatus: " + r.status + "\n";
    detail::render(out, r.payload, "");
    out += "convention ledger:";
    for (const auto& e : convention_ledger()) out += " " + e.id;
    return out + "\n";
}

namespace detail {

inline const std::string& require(const JobSpec& job, const std::string& name) {
    auto it = job.args.find(name);
    if (it == job.args.end() || it->second.empty()) throw InputError("--" + name + ": required for " + job.command);
    return it->second;
}

inline std::optional<std::string> option(const JobSpec& job, const std::string& name) {
    auto it = job.args.find(name);
    if (it == job.args.end() || it->second.empty()) return std::nullopt;
    return it->second;
}

inline void guard_dim(const JobSpec& job, std::size_t dim, const std::string& what) {
    if (dim > job.max_dim)
        throw InputError(what + ": dimension " + std::to_string(dim) + " exceeds HOMNR_MAX_DIM = " +
                         std::to_string(job.max_dim));
}

inline HomAlgebra load_algebra(const JobSpec& job, const std::string& flag) {
    std::filesystem::path p = require(job, flag);
    io::Document d = io::read_document(p);
    HomAlgebra a;
    try {
        a = io::algebra_from_json(d.value);
    } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
    guard_dim(job, a.dim(), p.string());
    return a;
}

inline RepresentationData load_representation(const JobSpec& job, const std::string& flag) {
    std::filesystem::path p = require(job, flag);
    io::Document d = io::read_document(p);
    try {
        RepresentationData rep = io::representation_from_json(d.value, d.dir);
        guard_dim(job, rep.total_dim(), p.string());
        return rep;
    } catch (const InputError& e) {
        if (std::string(e.what()).rfind(p.string(), 0) == 0) throw;
        throw InputError(p.string() + ": " + e.what());
    }
}

// A file holding either the bare value or an object with the value under `key`.
inline json unwrap(const json& j, const std::string& key) {
    return j.is_object() && j.contains(key) && !j.contains("entries") ? j[key] : j;
}

// A standalone cochain file: {"dim", "labels"?, "arity", "entries"}, an
// endomorphism-valued cochain on the space it names.
struct StandaloneCochain {
    BasedSpace space;
    Cochain value;
};

inline StandaloneCochain load_cochain(const JobSpec& job, const std::string& flag) {
    std::filesystem::path p = require(job, flag);
    io::Document d = io::read_document(p);
    try {
        StandaloneCochain c;
        c.space = io::space_from_json(d.value, "");
        guard_dim(job, c.space.dim, "dim");
        c.value = io::cochain_from_json(d.value, "", c.space.dim, c.space);
        return c;
    } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

inline Matrix load_matrix(const JobSpec& job, const std::string& flag, const std::string& key, std::size_t rows,
                          std::size_t cols) {
    std::filesystem::path p = require(job, flag);
    io::Document d = io::read_document(p);
    try {
        return io::matrix_from_json(unwrap(d.value, key), key, rows, cols);
    } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

inline ExtensionAlgebra load_extension(const JobSpec& job, const std::string& flag, std::optional<Matrix> section,
                                       json* decomposition = nullptr) {
    std::filesystem::path p = require(job, flag);
    io::Document d = io::read_document(p);
    io::ExtensionInput in;
    try {
        in = io::extension_from_json(d.value, d.dir);
    } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
    if (in.standard) {
        guard_dim(job, in.standard->total.dim(), p.string());
        if (section) {
            Decomposition dec = decompose(*in.standard, section);
            if (decomposition) *decomposition = {{"section", io::to_json(dec.section)}, {"phi", io::to_json(dec.phi)}};
            return dec.standard;
        }
        return *in.standard;
    }
    const io::GeneralExtension& g = *in.general;
    guard_dim(job, g.total.dim(), p.string());
    Decomposition dec = decompose(g.total, g.inclusion, g.projection, section, g.l_name, g.v_name);
    if (decomposition) *decomposition = {{"section", io::to_json(dec.section)}, {"phi", io::to_json(dec.phi)}};
    return dec.standard;
}

inline json cochain_payload(const BasedSpace& s, const Cochain& c) {
    json j = io::cochain_to_json(c, s);
    j["dim"] = s.dim;
    j["labels"] = s.labels;
    return j;
}

inline void fail_unless(Report& r, bool ok) {
    if (!ok) {
        r.status = "fail";
        r.exit_code = 3;
    }
}

// ---------------------------------------------------------------------------
// Commands

inline void run_verify(const JobSpec& job, Report& r) {
    if (option(job, "rep")) {
        RepresentationData rep = load_representation(job, "rep");
        VerificationReport v = verify_representation(rep);
        VerificationReport direct = verify_representation_direct(rep);
        if (v.holds != direct.holds)
            throw InternalError("verify: bracket-based and elementwise representation checks disagree");
        HomAlgebra total = rep.total_algebra();
        r.payload = io::to_json(v, total.space);
        r.payload["kind"] = to_string(rep.kind());
        r.payload["labels"] = total.space.labels;
        fail_unless(r, v.holds);
        return;
    }
    HomAlgebra a = load_algebra(job, "algebra");
    StructureKind kind = a.kind;
    if (auto k = option(job, "kind")) kind = parse_structure_kind(*k);
    VerificationReport v = verify_structure(a, kind);
    VerificationReport direct = verify_identity_direct(a, kind);
    if (v.holds != direct.holds) throw InternalError("verify: bracket-based and elementwise checks disagree");
    r.payload = io::to_json(v, a.space);
    r.payload["algebra"] = a.name;
    r.payload["kind"] = to_string(kind);
    fail_unless(r, v.holds);
}

inline void run_bracket(const JobSpec& job, Report& r) {
    BracketKind kind = parse_bracket_kind(require(job, "kind"));
    StandaloneCochain f = load_cochain(job, "f");
    StandaloneCochain g = load_cochain(job, "g");
    if (g.space.dim != f.space.dim)
        throw InputError("--g: dimension " + std::to_string(g.space.dim) + " does not match --f dimension " +
                         std::to_string(f.space.dim));
    TwistMap beta = TwistMap::identity(f.space.dim);
    if (option(job, "beta")) beta = TwistMap(load_matrix(job, "beta", "beta", f.space.dim, f.space.dim));
    Cochain out = bracket(f.value, g.value, beta, kind);
    r.payload = {{"kind", to_string(kind)}, {"result", cochain_payload(f.space, out)}};
}

inline std::size_t parse_count(const std::string& flag, const std::string& text) {
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos == text.size() && v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError("--" + flag + ": expected a non-negative integer, got \"" + text + "\"");
}

inline void run_cohomology(const JobSpec& job, Report& r) {
    std::size_t k_max = parse_count("max-degree", option(job, "max-degree").value_or("2"));
    if (k_max < 1) throw InputError("--max-degree: must be at least 1");
    CochainComplex c;
    if (option(job, "rep")) {
        if (auto f = option(job, "flavor"); f && parse_complex_flavor(*f) != ComplexFlavor::representation)
            throw InputError("--flavor: a representation file takes the representation flavor");
        c = complex_build(load_representation(job, "rep"), k_max);
    } else {
        HomAlgebra a = load_algebra(job, "algebra");
        ComplexFlavor flavor = adjoint_flavor(a.kind);
        if (auto f = option(job, "flavor")) flavor = parse_complex_flavor(*f);
        if (flavor == ComplexFlavor::representation) throw InputError("--flavor: representation needs --rep");
        c = complex_build(a, flavor, k_max);
    }
    CohomologyReport dims = cohomology_dims(c);
    json degrees = json::object(), h = json::object();
    for (const auto& [k, d] : dims.degrees) {
        degrees[std::to_string(k)] = {{"Z", d.Z}, {"B", d.B}, {"H", d.H}};
        h[std::to_string(k)] = d.H;
    }
    r.payload = {{"flavor", to_string(c.flavor)}, {"max_degree", k_max}, {"degrees", degrees},
                 {"H", h},                        {"closed", c.closed},  {"notes", c.notes}};
}

inline void run_deform(const JobSpec& job, Report& r) {
    std::filesystem::path p = require(job, "file");
    io::Document doc = io::read_document(p);
    FormalDeformation def;
    try {
        def = io::deformation_from_json(doc.value, doc.dir);
    } catch (const InputError& e) {
        throw InputError(p.string() + ": " + e.what());
    }
    guard_dim(job, def.base.dim(), p.string());
    def.validate();
    DefectMode mode = parse_defect_mode(option(job, "mode").value_or("truncated"));
    const BasedSpace& s = def.base.space;

    std::vector<OrderReport> orders = obstruction_report(def, mode);
    bool deformation = true;
    json per_order = json::array();
    for (const auto& o : orders) {
        bool vanishes = o.defect.is_zero();
        deformation = deformation && vanishes;
        json w = json::array();
        for (const auto& [t, v] : o.defect.entries()) w.push_back(io::index_to_json(t));
        json item = {{"order", o.order},
                     {"vanishes", vanishes},
                     {"defect", io::cochain_to_json(o.defect, s)},
                     {"witnesses", std::move(w)},
                     {"is_cocycle", o.is_cocycle},
                     {"is_coboundary", o.is_coboundary}};
        per_order.push_back(std::move(item));
    }
    r.payload = {{"mode", to_string(mode)},
                 {"order", def.order()},
                 {"kind", to_string(def.base.kind)},
                 {"is_deformation", deformation},
                 {"orders", std::move(per_order)}};
    if (!job.flags.count("extend")) {
        fail_unless(r, deformation);
        return;
    }
    json ext = json::object();
    if (!is_deformation(def, DefectMode::truncated)) {
        ext = {{"possible", false}, {"reason", "not a deformation modulo t^(N+1)"}};
        fail_unless(r, false);
    } else {
        OrderExtension e = extend_order(def);
        ext = {{"possible", e.next.has_value()}, {"rank", e.rank}, {"augmented_rank", e.augmented_rank}};
        if (e.next) {
            FormalDeformation longer = def;
            longer.coeffs.push_back(*e.next);
            ext["next"] = io::cochain_to_json(*e.next, s);
            ext["deformation"] = io::to_json(longer);
        }
        fail_unless(r, e.next.has_value());
    }
    r.payload["extension"] = std::move(ext);
}

inline void run_extend(const JobSpec& job, Report& r) {
    RepresentationData rep = load_representation(job, "rep");
    Cochain theta(rep.n(), rep.m(), 2);
    if (option(job, "theta")) {
        std::filesystem::path p = require(job, "theta");
        io::Document d = io::read_document(p);
        try {
            theta = io::theta_from_json(unwrap(d.value, "theta"), "theta", rep);
        } catch (const InputError& e) {
            throw InputError(p.string() + ": " + e.what());
        }
    }
    const BasedSpace total_space = rep.total_algebra().space;
    VerificationReport vr = verify_representation(rep);
    VerificationReport vc = verify_cocycle(rep, theta);
    r.payload = {{"representation", io::to_json(vr, total_space)},
                 {"cocycle", io::to_json(vc, total_space)},
                 {"labels", total_space.labels}};
    if (job.flags.count("check-only") || !vr.holds || !vc.holds) {
        fail_unless(r, vr.holds && vc.holds);
        return;
    }
    ExtensionAlgebra e = build_extension(rep, theta);
    r.payload["extension"] = io::to_json(e);
    r.payload["total"] = io::to_json(e.total);
}

inline json classify_payload(const ClassifyReport& c) {
    json j = {{"trivial", c.trivial},       {"central", c.central},
              {"abelian", c.abelian},       {"semidirect", c.semidirect},
              {"central_direct", c.central_direct}, {"notes", c.notes}};
    j["trivial_by_ideal"] = c.trivial_by_ideal ? json(*c.trivial_by_ideal) : json("undecided");
    if (c.ideal_section) j["ideal_section"] = io::to_json(*c.ideal_section);
    return j;
}

inline void require_valid(const ExtensionAlgebra& e, const std::string& what) {
    VerificationReport v = verify_structure(e.total);
    if (!v.holds)
        throw VerificationError(what + ": total algebra is not " + to_string(e.total.kind) + " (" +
                                v.failing_witnesses.front().condition + ")");
}

inline void run_classify(const JobSpec& job, Report& r) {
    json dec;
    ExtensionAlgebra e = load_extension(job, "extension", std::nullopt, &dec);
    require_valid(e, require(job, "extension"));
    r.payload = classify_payload(classify(e));
    if (!dec.is_null()) r.payload["decomposition"] = dec;
}

inline void run_decompose(const JobSpec& job, Report& r) {
    std::filesystem::path p = require(job, "extension");
    io::Document d = io::read_document(p);
    std::size_t N = 0, n = 0;
    {
        io::ExtensionInput in = io::extension_from_json(d.value, d.dir);
        N = in.standard ? in.standard->total.dim() : in.general->total.dim();
        n = in.standard ? in.standard->n() : in.general->projection.rows();
    }
    std::optional<Matrix> section;
    if (option(job, "section")) section = load_matrix(job, "section", "section", N, n);
    json dec;
    ExtensionAlgebra e = load_extension(job, "extension", section, &dec);
    if (dec.is_null()) {
        Decomposition again = decompose(e);
        dec = {{"section", io::to_json(again.section)}, {"phi", io::to_json(again.phi)}};
    }
    require_valid(e, p.string());
    r.payload = {{"extension", io::to_json(e)}, {"section", dec["section"]}, {"phi", dec["phi"]}};
}

inline void run_equiv(const JobSpec& job, Report& r) {
    ExtensionAlgebra e1 = load_extension(job, "e1", std::nullopt);
    ExtensionAlgebra e2 = load_extension(job, "e2", std::nullopt);
    require_valid(e1, require(job, "e1"));
    require_valid(e2, require(job, "e2"));
    if (e1.n() != e2.n() || e1.m() != e2.m()) throw InputError("--e2: dimensions differ from --e1");
    Matrix psi = Matrix::identity(e1.n()), phi = Matrix::identity(e1.m());
    if (option(job, "psi")) psi = load_matrix(job, "psi", "psi", e1.n(), e1.n());
    if (option(job, "phi")) phi = load_matrix(job, "phi", "phi", e1.m(), e1.m());
    AbelianEquivalence eq = equivalent_abelian(e1, e2, psi, phi);
    r.payload = {{"equivalent", eq.h.has_value()}, {"rank", eq.rank}, {"augmented_rank", eq.augmented_rank}};
    if (eq.h) r.payload["h"] = io::to_json(*eq.h);
    fail_unless(r, eq.h.has_value());
}

inline void run_emit_fixtures(const JobSpec& job, Report& r) {
    std::filesystem::path dir = require(job, "dir");
    json files = json::array();
    for (const auto& p : io::emit_fixtures(dir)) files.push_back(p.filename().string());
    r.payload = {{"dir", dir.string()}, {"files", files}};
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"verify", "bracket", "cohomology", "deform",  "extend",
                                            "classify", "decompose", "equiv",   "emit-fixtures"};
    return c;
}

// Dispatches a job. Errors never escape: they become a fail report whose
// payload carries the message and whose exit code names the error class.
inline Report run(const JobSpec& job) {
    Report r;
    r.command = job.command;
    auto error = [&r](const std::string& kind, const std::string& message, int code) {
        r.status = "fail";
        r.exit_code = code;
        r.payload = {{"error", {{"kind", kind}, {"message", message}}}};
    };
    try {
        if (job.command == "verify") detail::run_verify(job, r);
        else if (job.command == "bracket") detail::run_bracket(job, r);
        else if (job.command == "cohomology") detail::run_cohomology(job, r);
        else if (job.command == "deform") detail::run_deform(job, r);
        else if (job.command == "extend") detail::run_extend(job, r);
        else if (job.command == "classify") detail::run_classify(job, r);
        else if (job.command == "decompose") detail::run_decompose(job, r);
        else if (job.command == "equiv") detail::run_equiv(job, r);
        else if (job.command == "emit-fixtures") detail::run_emit_fixtures(job, r);
        else throw InputError("command: unknown command \"" + job.command + "\"");
    } catch (const InputError& e) {
        error("input", e.what(), 2);
    } catch (const VerificationError& e) {
        error("verification", e.what(), 3);
    } catch (const InternalError& e) {
        error("internal", e.what(), 1);
    } catch (const std::domain_error& e) {
        error("input", e.what(), 2);
    } catch (const std::runtime_error& e) {
        error("io", e.what(), 2);
    }
    return r;
}

}  // namespace homnr::cli
