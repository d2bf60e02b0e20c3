#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homnr/conventions.hpp"
#include "homnr/deformation.hpp"
#include "homnr/extension.hpp"
#include "homnr/fixtures.hpp"

// JSON formats. Indices are 1-based, rationals are strings "p" or "p/q",
// cochain values are objects keyed by codomain basis labels. Object keys come
// out sorted, so identical values always serialize to identical bytes.
namespace homnr::io {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& field, const std::string& what) { throw InputError(field + ": " + what); }

inline const json& member(const json& j, const std::string& field, const std::string& key) {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
    return *it;
}

inline std::string join(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
inline std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

inline std::size_t positive(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 1) fail(field, "expected a positive integer");
    return j.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars and matrices

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) detail::fail(field, "expected a rational string such as \"3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
        detail::fail(field, e.what());
    }
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Dense row-major matrix of rational strings, of the given shape.
inline Matrix matrix_from_json(const json& j, const std::string& field, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        detail::fail(field, "expected " + std::to_string(rows) + " rows of " + std::to_string(cols) + " entries");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            detail::fail(detail::at(field, r), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c], detail::at(detail::at(field, r), c));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Cochains

inline json vector_to_json(const Vector& v, const BasedSpace& codomain) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[codomain.labels[i]] = to_json(v[i]);
    return out;
}

inline Vector vector_from_json(const json& j, const std::string& field, const BasedSpace& codomain) {
    if (!j.is_object()) detail::fail(field, "expected an object keyed by basis labels");
    Vector v(codomain.dim);
    for (const auto& [label, value] : j.items()) {
        std::size_t i = 0;
        try {
            i = codomain.index_of(label);
        } catch (const InputError&) {
            detail::fail(detail::join(field, label), "unknown basis label");
        }
        v[i] += rational_from_json(value, detail::join(field, label));
    }
    return v;
}

inline json index_to_json(const Index& t, std::size_t offset = 0) {
    json out = json::array();
    for (auto i : t) out.push_back(i + 1 - offset);
    return out;
}

// Entries in lexicographic tuple order; `offsets` maps the stored 0-based
// index at each position to the 1-based index of the file (used for actions,
// whose V arguments are numbered within V).
inline json cochain_to_json(const Cochain& c, const BasedSpace& codomain, std::size_t value_offset = 0,
                            const std::vector<std::size_t>& offsets = {}) {
    json entries = json::array();
    for (const auto& [t, v] : c.entries()) {
        json in = json::array();
        for (std::size_t p = 0; p < t.size(); ++p) in.push_back(t[p] + 1 - (offsets.empty() ? 0 : offsets[p]));
        Vector w(v.begin() + static_cast<std::ptrdiff_t>(value_offset), v.end());
        entries.push_back({{"in", std::move(in)}, {"out", vector_to_json(w, codomain)}});
    }
    return {{"arity", c.arity()}, {"entries", std::move(entries)}};
}

inline Cochain cochain_from_json(const json& j, const std::string& field, std::size_t domain_dim, const BasedSpace& codomain,
                                 std::optional<std::size_t> arity = std::nullopt) {
    std::size_t k = detail::positive(detail::member(j, field, "arity"), detail::join(field, "arity"));
    if (arity && k != *arity)
        detail::fail(detail::join(field, "arity"), "expected " + std::to_string(*arity) + ", got " + std::to_string(k));
    const json& entries = detail::member(j, field, "entries");
    const std::string ef = detail::join(field, "entries");
    if (!entries.is_array()) detail::fail(ef, "expected an array");
    Cochain c(domain_dim, codomain.dim, k);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string f = detail::at(ef, e);
        const json& in = detail::member(entries[e], f, "in");
        if (!in.is_array() || in.size() != k) detail::fail(detail::join(f, "in"), "expected " + std::to_string(k) + " indices");
        Index t;
        for (std::size_t p = 0; p < k; ++p) {
            const std::string pf = detail::at(detail::join(f, "in"), p);
            std::size_t i = detail::positive(in[p], pf);
            if (i > domain_dim) detail::fail(pf, "index " + std::to_string(i) + " exceeds dimension " + std::to_string(domain_dim));
            t.push_back(i - 1);
        }
        Vector v = vector_from_json(detail::member(entries[e], f, "out"), detail::join(f, "out"), codomain);
        c.set(t, c.value(t) + v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Algebras

inline json to_json(const HomAlgebra& a) {
    return {{"name", a.name},
            {"dim", a.dim()},
            {"labels", a.space.labels},
            {"kind", to_string(a.kind)},
            {"beta", to_json(a.twist.matrix())},
            {"product", cochain_to_json(a.product, a.space)["entries"]}};
}

inline BasedSpace space_from_json(const json& j, const std::string& field) {
    BasedSpace s;
    s.dim = detail::positive(detail::member(j, field, "dim"), detail::join(field, "dim"));
    auto it = j.find("labels");
    if (it == j.end()) return BasedSpace::standard(s.dim);
    if (!it->is_array()) detail::fail(detail::join(field, "labels"), "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
        if (!(*it)[i].is_string()) detail::fail(detail::at(detail::join(field, "labels"), i), "expected a string");
        s.labels.push_back((*it)[i].get<std::string>());
    }
    try {
        s.validate();
    } catch (const InputError& e) {
        detail::fail(detail::join(field, "labels"), e.what());
    }
    return s;
}

inline HomAlgebra algebra_from_json(const json& j, const std::string& field = "") {
    if (!j.is_object()) detail::fail(field.empty() ? "algebra" : field, "expected an object");
    HomAlgebra a;
    a.space = space_from_json(j, field);
    auto name = j.find("name");
    if (name != j.end() && !name->is_string()) detail::fail(detail::join(field, "name"), "expected a string");
    a.name = name == j.end() ? "algebra" : name->get<std::string>();
    const json& kind = detail::member(j, field, "kind");
    if (!kind.is_string()) detail::fail(detail::join(field, "kind"), "expected a string");
    try {
        a.kind = parse_structure_kind(kind.get<std::string>());
    } catch (const InputError& e) {
        detail::fail(detail::join(field, "kind"), e.what());
    }
    auto beta = j.find("beta");
    a.twist = beta == j.end() ? TwistMap::identity(a.dim())
                              : TwistMap(matrix_from_json(*beta, detail::join(field, "beta"), a.dim(), a.dim()));
    json product = {{"arity", 2}, {"entries", detail::member(j, field, "product")}};
    a.product = cochain_from_json(product, detail::join(field, "product"), a.dim(), a.space, 2);
    a.validate();
    return a;
}

// ---------------------------------------------------------------------------
// Files. A nested algebra may be given inline or as a path relative to the
// file that mentions it.

struct Document {
    json value;
    std::filesystem::path dir;
};

inline Document read_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot read file");
    std::stringstream buf;
    buf << in.rdbuf();
    Document d;
    d.dir = path.parent_path();
    try {
        d.value = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": malformed JSON (" + e.what() + ")");
    }
    return d;
}

inline HomAlgebra algebra_ref(const json& j, const std::string& field, const std::filesystem::path& dir) {
    if (j.is_string()) {
        std::filesystem::path p = dir / j.get<std::string>();
        Document d = read_document(p);
        try {
            return algebra_from_json(d.value);
        } catch (const InputError& e) {
            detail::fail(field, std::string(e.what()) + " (in " + p.string() + ")");
        }
    }
    return algebra_from_json(j, field);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot write file");
    out << text;
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

// ---------------------------------------------------------------------------
// Deformations: {"base": algebra, "coeffs": [cochain, ...]}

inline json to_json(const FormalDeformation& d) {
    json coeffs = json::array();
    for (const auto& c : d.coeffs) coeffs.push_back(cochain_to_json(c, d.base.space));
    return {{"base", to_json(d.base)}, {"coeffs", std::move(coeffs)}};
}

// Unvalidated: the caller decides whether the base must verify.
inline FormalDeformation deformation_from_json(const json& j, const std::filesystem::path& dir = {}) {
    FormalDeformation d;
    d.base = algebra_ref(detail::member(j, "", "base"), "base", dir);
    const json& coeffs = detail::member(j, "", "coeffs");
    if (!coeffs.is_array()) detail::fail("coeffs", "expected an array of cochains");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        d.coeffs.push_back(cochain_from_json(coeffs[i], detail::at("coeffs", i), d.base.dim(), d.base.space, 2));
    return d;
}

// ---------------------------------------------------------------------------
// Representations: {"L", "V", "lambda_l", "lambda_r"}. lambda_l entries have
// "in": [x, v], lambda_r entries "in": [v, x], x numbered in L and v in V;
// values are keyed by V labels.

inline json to_json(const RepresentationData& rep) {
    const std::size_t n = rep.n();
    return {{"L", to_json(rep.L)},
            {"V", to_json(rep.V)},
            {"lambda_l", cochain_to_json(rep.lambda_l, rep.V.space, n, {0, n})},
            {"lambda_r", cochain_to_json(rep.lambda_r, rep.V.space, n, {n, 0})}};
}

namespace detail {

inline void read_action(RepresentationData& rep, const json& j, const std::string& field, bool left) {
    if (j.is_null()) return;
    const std::size_t n = rep.n(), m = rep.m();
    const json& entries = member(j, field, "entries");
    if (j.contains("arity") && j["arity"] != 2) fail(join(field, "arity"), "expected 2");
    if (!entries.is_array()) fail(join(field, "entries"), "expected an array");
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string f = at(join(field, "entries"), e);
        const json& in = member(entries[e], f, "in");
        if (!in.is_array() || in.size() != 2) fail(join(f, "in"), "expected 2 indices");
        std::size_t x = positive(in[left ? 0 : 1], at(join(f, "in"), left ? 0 : 1));
        std::size_t v = positive(in[left ? 1 : 0], at(join(f, "in"), left ? 1 : 0));
        if (x > n) fail(at(join(f, "in"), left ? 0 : 1), "index exceeds dim L = " + std::to_string(n));
        if (v > m) fail(at(join(f, "in"), left ? 1 : 0), "index exceeds dim V = " + std::to_string(m));
        Vector value = vector_from_json(member(entries[e], f, "out"), join(f, "out"), rep.V.space);
        if (left)
            rep.set_left(x - 1, v - 1, rep.left(x - 1, v - 1) + value);
        else
            rep.set_right(v - 1, x - 1, rep.right(v - 1, x - 1) + value);
    }
}

}  // namespace detail

inline RepresentationData representation_from_json(const json& j, const std::filesystem::path& dir = {}) {
    HomAlgebra L = algebra_ref(detail::member(j, "", "L"), "L", dir);
    HomAlgebra V = algebra_ref(detail::member(j, "", "V"), "V", dir);
    if (L.kind != V.kind) detail::fail("V.kind", "is " + to_string(V.kind) + " but L.kind is " + to_string(L.kind));
    RepresentationData rep = RepresentationData::make(std::move(L), std::move(V));
    detail::read_action(rep, j.value("lambda_l", json()), "lambda_l", true);
    detail::read_action(rep, j.value("lambda_r", json()), "lambda_r", false);
    rep.validate();
    return rep;
}

// theta: L x L -> V, numbered in L, values keyed by V labels.
inline Cochain theta_from_json(const json& j, const std::string& field, const RepresentationData& rep) {
    return cochain_from_json(j, field, rep.n(), rep.V.space, 2);
}

// ---------------------------------------------------------------------------
// Extensions. Standard form: the representation fields plus "theta".
// General form: {"total": algebra, "inclusion": N x m, "projection": n x N,
// optional "L_name", "V_name"}, normalized through a section on use.

struct GeneralExtension {
    HomAlgebra total;
    Matrix inclusion;
    Matrix projection;
    std::string l_name = "L", v_name = "V";
};

struct ExtensionInput {
    std::optional<ExtensionAlgebra> standard;
    std::optional<GeneralExtension> general;
};

inline json to_json(const ExtensionAlgebra& e) {
    json out = to_json(e.rep);
    out["theta"] = cochain_to_json(e.theta, e.rep.V.space);
    return out;
}

inline ExtensionInput extension_from_json(const json& j, const std::filesystem::path& dir = {}) {
    ExtensionInput in;
    if (!j.is_object()) detail::fail("extension", "expected an object");
    if (j.contains("total")) {
        GeneralExtension g;
        g.total = algebra_ref(j["total"], "total", dir);
        const std::size_t N = g.total.dim();
        const json& inc = detail::member(j, "", "inclusion");
        if (!inc.is_array() || inc.empty() || !inc[0].is_array()) detail::fail("inclusion", "expected an N x m matrix");
        const std::size_t m = inc[0].size();
        if (m == 0 || m >= N) detail::fail("inclusion", "expected between 1 and N - 1 columns");
        g.inclusion = matrix_from_json(inc, "inclusion", N, m);
        g.projection = matrix_from_json(detail::member(j, "", "projection"), "projection", N - m, N);
        g.l_name = j.value("L_name", "L");
        g.v_name = j.value("V_name", "V");
        in.general = std::move(g);
        return in;
    }
    RepresentationData rep = representation_from_json(j, dir);
    Cochain theta = j.contains("theta") ? theta_from_json(j["theta"], "theta", rep) : Cochain(rep.n(), rep.m(), 2);
    in.standard = ExtensionAlgebra::standard(std::move(rep), std::move(theta));
    return in;
}

// ---------------------------------------------------------------------------
// Reports

inline json witness_to_json(const Witness& w, const BasedSpace& codomain) {
    return {{"condition", w.condition}, {"tuple", index_to_json(w.tuple)}, {"defect", vector_to_json(w.defect, codomain)}};
}

inline json to_json(const VerificationReport& r, const BasedSpace& codomain) {
    json ws = json::array();
    for (const auto& w : r.failing_witnesses) ws.push_back(witness_to_json(w, codomain));
    return {{"holds", r.holds}, {"multiplicative", r.multiplicative}, {"failing_witnesses", std::move(ws)}};
}

inline json convention_ledger_json() {
    json out = json::array();
    for (const auto& e : convention_ledger())
        out.push_back({{"id", e.id}, {"location", e.location}, {"printed", e.printed}, {"adopted", e.adopted},
                       {"evidence", e.evidence}});
    return out;
}

// ---------------------------------------------------------------------------
// Fixture files

inline std::string fixture_file_name(const HomAlgebra& a) { return a.name + ".json"; }

inline std::vector<std::filesystem::path> emit_fixtures(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error(dir.string() + ": cannot create directory (" + ec.message() + ")");
    std::vector<std::filesystem::path> written;
    for (const auto& a : all_fixtures()) {
        std::filesystem::path p = dir / fixture_file_name(a);
        write_file(p, dump(to_json(a)));
        written.push_back(p);
    }
    return written;
}

}  // namespace homnr::io
