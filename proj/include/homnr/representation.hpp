#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homnr/algebra.hpp"
#include "homnr/bracket.hpp"
#include "homnr/cochain.hpp"
#include "homnr/cochain_spaces.hpp"
#include "homnr/errors.hpp"

namespace homnr {

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

// Integer power of a square matrix; negative exponents need an invertible matrix.
inline std::optional<Matrix> matrix_power(const Matrix& m, int e) {
    if (e >= 0) return m.power(static_cast<unsigned>(e));
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return inv->power(static_cast<unsigned>(-e));
}

// Re-indexes a cochain into a larger ambient space: argument basis index i
// goes to in_offset + i, output coordinate o to out_offset + o.
inline Cochain embed_cochain(const Cochain& c, std::size_t dom, std::size_t cod, std::size_t in_offset, std::size_t out_offset) {
    Cochain out(dom, cod, c.arity());
    for (const auto& [t, v] : c.entries()) {
        Index u = t;
        for (auto& x : u) x += in_offset;
        Vector w(cod);
        for (std::size_t o = 0; o < v.size(); ++o) w[out_offset + o] = v[o];
        out.set(u, std::move(w));
    }
    return out;
}

// (L, delta, alpha) acting on (V, mu, alpha_V). The actions are stored as
// products on M = L + V (L basis first) supported on L x V and V x L with
// values in V.
struct RepresentationData {
    HomAlgebra L;
    HomAlgebra V;
    Cochain lambda_l;
    Cochain lambda_r;

    std::size_t n() const { return L.dim(); }
    std::size_t m() const { return V.dim(); }
    std::size_t total_dim() const { return n() + m(); }
    StructureKind kind() const { return L.kind; }

    static RepresentationData make(HomAlgebra L, HomAlgebra V) {
        const std::size_t N = L.dim() + V.dim();
        RepresentationData r{std::move(L), std::move(V), Cochain(N, N, 2), Cochain(N, N, 2)};
        r.validate();
        return r;
    }
    static RepresentationData make(HomAlgebra L, HomAlgebra V, Cochain lambda_l, Cochain lambda_r) {
        RepresentationData r{std::move(L), std::move(V), std::move(lambda_l), std::move(lambda_r)};
        r.validate();
        return r;
    }

    void validate() const {
        L.validate();
        V.validate();
        if (L.kind != V.kind)
            throw InputError("representation: L is " + to_string(L.kind) + " but V is " + to_string(V.kind));
        if (L.kind == StructureKind::plain) throw InputError("representation: a structure kind is required");
        const std::size_t N = total_dim();
        auto check = [&](const Cochain& c, const char* name, bool left) {
            if (c.arity() != 2 || c.domain_dim() != N || c.codomain_dim() != N)
                throw InputError(std::string(name) + ": expected a bilinear map on L + V");
            for (const auto& [t, v] : c.entries()) {
                bool ok = left ? (t[0] < n() && t[1] >= n()) : (t[0] >= n() && t[1] < n());
                for (std::size_t o = 0; o < n() && ok; ++o) ok = v[o].is_zero();
                if (!ok) throw InputError(std::string(name) + ": entry outside " + (left ? "L x V -> V" : "V x L -> V"));
            }
        };
        check(lambda_l, "lambda_l", true);
        check(lambda_r, "lambda_r", false);
    }

    // x: L basis index, v: V basis index, value: coordinates in V.
    void set_left(std::size_t x, std::size_t v, const Vector& value) {
        lambda_l.set({x, n() + v}, lift_value(value));
    }
    void set_right(std::size_t v, std::size_t x, const Vector& value) {
        lambda_r.set({n() + v, x}, lift_value(value));
    }
    Vector left(std::size_t x, std::size_t v) const { return project_value(lambda_l.value({x, n() + v})); }
    Vector right(std::size_t v, std::size_t x) const { return project_value(lambda_r.value({n() + v, x})); }

    Matrix twist() const { return block_diagonal(L.twist.matrix(), V.twist.matrix()); }
    Cochain delta_total() const { return embed_cochain(L.product, total_dim(), total_dim(), 0, 0); }
    Cochain mu_total() const { return embed_cochain(V.product, total_dim(), total_dim(), n(), n()); }
    // Arity-k cochain L^k -> V viewed on M, zero on any V argument.
    Cochain lift(const Cochain& f) const {
        if (f.domain_dim() != n() || f.codomain_dim() != m())
            throw InputError("cochain with values in V: expected " + std::to_string(n()) + " -> " + std::to_string(m()));
        return embed_cochain(f, total_dim(), total_dim(), 0, n());
    }
    // Restriction of a cochain on M to L arguments, V component.
    Cochain restrict_to_lv(const Cochain& F) const {
        Cochain out(n(), m(), F.arity());
        for (const auto& [t, v] : F.entries()) {
            bool in_l = true;
            for (auto x : t) in_l = in_l && x < n();
            if (in_l) out.set(t, project_value(v));
        }
        return out;
    }

    // delta + lambda_l + lambda_r + mu, plus theta when given (L x L -> V).
    Cochain total_product(const Cochain* theta = nullptr) const {
        Cochain d = delta_total() + lambda_l + lambda_r + mu_total();
        if (theta) d += lift(*theta);
        return d;
    }
    HomAlgebra total_algebra(const Cochain* theta = nullptr) const {
        BasedSpace s;
        s.dim = total_dim();
        s.labels = L.space.labels;
        for (const auto& l : V.space.labels) s.labels.push_back(l);
        if (s.labels.size() != std::set<std::string>(s.labels.begin(), s.labels.end()).size())
            s = BasedSpace::standard(total_dim());
        return HomAlgebra::make(L.name + "+" + V.name, std::move(s), total_product(theta), TwistMap(twist()), kind());
    }

    Vector lift_value(const Vector& v) const {
        if (v.size() != m()) throw InputError("action value must have dimension of V");
        Vector w(total_dim());
        for (std::size_t i = 0; i < m(); ++i) w[n() + i] = v[i];
        return w;
    }
    Vector project_value(const Vector& w) const { return Vector(w.begin() + static_cast<std::ptrdiff_t>(n()), w.end()); }

    friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

// V = L with lambda_l(x,v) = delta(x,v), lambda_r(v,x) = delta(v,x); mu = delta
// or, when with_product is false, mu = 0.
inline RepresentationData adjoint_representation(const HomAlgebra& L, bool with_product = true) {
    HomAlgebra V = L;
    V.name = L.name + "'";
    V.space = BasedSpace::standard(L.dim(), "v");
    if (!with_product) V.product = Cochain(L.dim(), L.dim(), 2);
    RepresentationData r = RepresentationData::make(L, V);
    for (const auto& [t, v] : L.product.entries()) {
        r.set_left(t[0], t[1], v);
        r.set_right(t[0], t[1], v);
    }
    return r;
}

inline Vector embed_value(const Vector& v, std::size_t dim, std::size_t offset) {
    Vector w(dim);
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
}

inline std::size_t count_v_arguments(const Index& t, std::size_t n) {
    std::size_t c = 0;
    for (auto x : t) c += x >= n ? 1 : 0;
    return c;
}

// Condition names used when a defect on L + V is split by how many
// arguments come from V.
struct ComponentNames {
    std::string none, one, two, three;
    const std::string& operator[](std::size_t k) const {
        return k == 0 ? none : k == 1 ? one : k == 2 ? two : three;
    }
};

namespace detail {

inline void collect_by_component(VerificationReport& r, const ComponentNames& names, const Cochain& c, std::size_t n) {
    for (const auto& [t, v] : c.entries()) r.fail(names[count_v_arguments(t, n)], t, v);
}

inline Cochain twist_defect(const Cochain& c, const Matrix& a) {
    std::vector<Matrix> maps(c.arity(), a);
    return postcompose(a, c) - precompose(c, maps);
}

inline const ComponentNames& leibniz_components() {
    static const ComponentNames names{"structure of L", "L4", "L6", "structure of V"};
    return names;
}

}  // namespace detail

// L1, L2 and the components of half[d,d] for d = delta + lambda + mu, split by
// the number of V arguments: none (L itself), one (L4 with theta = 0), two
// (L6), three (V itself). Symmetric adds the pair conditions (SS list for the
// mixed part); hom-lie adds skew symmetry, whose mixed part is
// lambda_l(x,v) = -lambda_r(v,x).
inline VerificationReport verify_representation(const RepresentationData& rep) {
    rep.validate();
    VerificationReport r;
    const std::size_t n = rep.n();
    const Matrix a = rep.twist();
    const TwistMap tw(a);
    const Cochain d = rep.total_product();
    r.multiplicative = is_beta_cochain(d, tw);
    detail::collect_nonzero(r, "L1", detail::twist_defect(rep.lambda_r, a));
    detail::collect_nonzero(r, "L2", detail::twist_defect(rep.lambda_l, a));
    const StructureKind kind = rep.kind();
    BracketKind bk = kind == StructureKind::right_leibniz ? BracketKind::right : BracketKind::left;
    detail::collect_by_component(r, detail::leibniz_components(), square_half(d, tw, bk), n);
    if (kind == StructureKind::symmetric_leibniz)
        detail::collect_by_component(r, {"pair condition of L", "SS", "SS", "pair condition of V"},
                                     detail::self_pair_defect(d, tw), n);
    if (kind == StructureKind::hom_lie)
        detail::collect_by_component(r, {"skew symmetry of L", "lie action relation", "skew symmetry of V", ""},
                                     detail::skew_defect(d), n);
    r.finish();
    return r;
}

// Elementwise oracle: the printed left-case axioms on one-V triples, the
// Leibniz identity on two-V triples, the printed SS list and the skew
// relation; the right kind uses its identity on every mixed triple.
inline VerificationReport verify_representation_direct(const RepresentationData& rep) {
    rep.validate();
    VerificationReport r;
    const std::size_t n = rep.n(), N = rep.total_dim();
    const Matrix a = rep.twist();
    const TwistMap tw(a);
    const Cochain d = rep.total_product(), delta = rep.delta_total(), mu = rep.mu_total();
    r.multiplicative = is_beta_cochain(d, tw);
    auto e = [N](std::size_t i) { return unit_vector(N, i); };
    auto al = [&](const Vector& x) { return a * x; };
    auto ev = [](const Cochain& c, const Vector& x, const Vector& y) { return c.evaluate(std::vector<Vector>{x, y}); };
    auto ll = [&](const Vector& x, const Vector& v) { return ev(rep.lambda_l, x, v); };
    auto lr = [&](const Vector& v, const Vector& x) { return ev(rep.lambda_r, v, x); };
    auto dl = [&](const Vector& x, const Vector& y) { return ev(delta, x, y); };
    auto mm = [&](const Vector& u, const Vector& v) { return ev(mu, u, v); };
    auto dd = [&](const Vector& x, const Vector& y) { return ev(d, x, y); };
    auto report = [&](const std::string& name, const Index& t, const Vector& defect) {
        if (!is_zero(defect)) r.fail(name, t, defect);
    };

    // L1, L2 on basis pairs
    for_each_tuple(N, 2, [&](const Index& t) {
        Vector x = e(t[0]), y = e(t[1]);
        if (t[0] >= n && t[1] < n) report("L1", t, al(lr(x, y)) - lr(al(x), al(y)));
        if (t[0] < n && t[1] >= n) report("L2", t, al(ll(x, y)) - ll(al(x), al(y)));
    });

    const StructureKind kind = rep.kind();
    auto shift = [n](Index t, std::size_t by) {
        for (auto& x : t) x += by;
        return t;
    };
    for (const auto& w : verify_identity_direct(rep.L, kind).failing_witnesses)
        r.fail(w.condition == "Hom-Jacobi" || w.condition == "skew symmetry" ? w.condition + " of L" : "structure of L",
               w.tuple, embed_value(w.defect, N, 0));
    for (const auto& w : verify_identity_direct(rep.V, kind).failing_witnesses)
        r.fail(w.condition == "Hom-Jacobi" || w.condition == "skew symmetry" ? w.condition + " of V" : "structure of V",
               shift(w.tuple, n), embed_value(w.defect, N, n));

    for_each_tuple(N, 3, [&](const Index& t) {
        const std::size_t nv = count_v_arguments(t, n);
        if (nv == 0 || nv == 3) return;
        Vector p = e(t[0]), q = e(t[1]), s = e(t[2]);
        if (kind == StructureKind::right_leibniz) {
            // d(a(x), d(y,z)) = d(d(x,y), a(z)) - d(d(x,z), a(y))
            report(nv == 1 ? "L4" : "L6", t, dd(dd(p, q), al(s)) - dd(dd(p, s), al(q)) - dd(al(p), dd(q, s)));
            return;
        }
        if (nv == 1) {
            if (t[2] >= n) {  // (x, y, v)
                Vector x = p, y = q, v = s;
                report("L4", t, ll(dl(x, y), al(v)) + ll(al(y), ll(x, v)) - ll(al(x), ll(y, v)));
            } else if (t[1] >= n) {  // (x, v, y)
                Vector x = p, v = q, y = s;
                report("L4", t, lr(ll(x, v), al(y)) + lr(al(v), dl(x, y)) - ll(al(x), lr(v, y)));
            } else {  // (v, x, y)
                Vector v = p, x = q, y = s;
                report("L4", t, lr(lr(v, x), al(y)) + ll(al(x), lr(v, y)) - lr(al(v), dl(x, y)));
            }
        } else {
            report("L6", t, dd(dd(p, q), al(s)) + dd(al(q), dd(p, s)) - dd(al(p), dd(q, s)));
        }
        if (kind == StructureKind::symmetric_leibniz) {
            Vector g;
            if (t[0] < n && t[1] < n) {  // s1 / s2 shapes with x first: (x, y, v)
                g = ll(al(p), ll(q, s)) + lr(ll(q, s), al(p));
            } else if (t[0] < n && t[2] < n) {  // (x, v, y)
                g = ll(al(p), lr(q, s)) + lr(lr(q, s), al(p));
            } else if (t[0] >= n && nv == 1) {  // (v, x, y)
                g = lr(al(p), dl(q, s)) + ll(dl(q, s), al(p));
            } else if (t[0] >= n && t[1] >= n) {  // (u, v, x)
                g = mm(al(p), lr(q, s)) + mm(lr(q, s), al(p));
            } else if (t[0] >= n) {  // (u, x, v)
                g = mm(al(p), ll(q, s)) + mm(ll(q, s), al(p));
            } else {  // (x, u, v)
                g = ll(al(p), mm(q, s)) + lr(mm(q, s), al(p));
            }
            report("SS", t, g);
        }
    });
    if (kind == StructureKind::hom_lie)
        for_each_tuple(N, 2, [&](const Index& t) {
            if (count_v_arguments(t, n) != 1) return;
            Vector x = e(t[0]), y = e(t[1]);
            Vector g = t[0] < n ? ll(x, y) + lr(y, x) : lr(x, y) + ll(y, x);
            report("lie action relation", t, g);
        });
    r.finish();
    return r;
}

// Cochains L^k -> V of a representation complex: (alpha, alpha_V)-equivariant,
// alternating for hom-lie.
inline CochainSpaceSpec representation_spec(const RepresentationData& rep) {
    CochainFlavor f = rep.kind() == StructureKind::hom_lie ? CochainFlavor::alternating : CochainFlavor::beta_equivariant;
    return {rep.n(), rep.m(), rep.L.twist.matrix(), rep.V.twist.matrix(), f, std::nullopt};
}

inline BracketKind representation_bracket(const RepresentationData& rep) { return bracket_kind_for(rep.kind()); }

namespace detail {

inline const std::vector<std::size_t>& first_indices(std::size_t n) {
    thread_local std::vector<std::size_t> idx;
    idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
}

// Degree 0: v in V (alpha_V v = v) maps to x -> lambda_r(v, alpha^(r-1) x), or
// lambda_l(alpha^(r-1) x, v) for the right kind.
inline std::optional<Cochain> rep_degree_zero(const RepresentationData& rep, const Cochain& f, int r) {
    auto p = matrix_power(rep.L.twist.matrix(), r - 1);
    if (!p) return std::nullopt;
    const std::size_t n = rep.n(), m = rep.m();
    Vector v = f.value({});
    Cochain out(n, m, 1);
    for (std::size_t j = 0; j < n; ++j) {
        Vector x = embed_value(p->column(j), rep.total_dim(), 0), w = embed_value(v, rep.total_dim(), n);
        Vector y = rep.kind() == StructureKind::right_leibniz ? rep.lambda_l.evaluate(std::vector<Vector>{x, w})
                                                              : rep.lambda_r.evaluate(std::vector<Vector>{w, x});
        out.set({j}, rep.project_value(y));
    }
    return out;
}

// [d, f] on M restricted to L arguments and the V component, with
// d = delta + lambda + mu.
inline Cochain rep_coboundary_unchecked(const RepresentationData& rep, const Cochain& d, const Cochain& f, int r = 0) {
    if (f.arity() == 0) {
        auto out = rep_degree_zero(rep, f, r);
        if (!out) throw InputError("degree-0 coboundary needs an invertible twist on L");
        return *out;
    }
    const TwistMap tw(rep.twist());
    return rep.restrict_to_lv(bracket(d, rep.lift(f), tw, representation_bracket(rep), &first_indices(rep.n())));
}

}  // namespace detail

// The values-in-V coboundary. Twist powers on the remaining arguments are
// alpha^(k-1), as produced by the bracket engine. For k = 0, f is a constant
// (arity-0 cochain) and r selects the twist power alpha^(r-1).
inline Cochain rep_coboundary(const RepresentationData& rep, const Cochain& f, int r = 0) {
    VerificationReport vr = verify_representation(rep);
    if (!vr.holds) throw VerificationError("rep_coboundary: representation fails " + vr.failing_witnesses.front().condition);
    if (f.domain_dim() != rep.n() || f.codomain_dim() != rep.m())
        throw InputError("rep_coboundary: cochain must map L^k to V");
    if (f.arity() > 0)
        if (auto bad = violated_constraint(representation_spec(rep), f))
            throw InputError("rep_coboundary: cochain violates " + *bad);
    return detail::rep_coboundary_unchecked(rep, rep.total_product(), f, r);
}

// L3 (theta o alpha = alpha_V o theta) and L5 ([delta + lambda, theta] = 0),
// plus what a nonzero theta adds to the other conditions: the [mu, theta]
// part of L4, skew symmetry for hom-lie, the pair condition for symmetric.
inline VerificationReport verify_cocycle(const RepresentationData& rep, const Cochain& theta) {
    rep.validate();
    if (theta.arity() != 2 || theta.domain_dim() != rep.n() || theta.codomain_dim() != rep.m())
        throw InputError("theta: expected a bilinear map L x L -> V");
    VerificationReport r;
    const std::size_t n = rep.n();
    const TwistMap tw(rep.twist());
    const Cochain d = rep.total_product();
    const Cochain dt = rep.total_product(&theta);
    const Cochain th = rep.lift(theta);
    r.multiplicative = is_beta_cochain(dt, tw);
    detail::collect_nonzero(r, "L3", detail::twist_defect(th, rep.twist()));
    BracketKind bk = rep.kind() == StructureKind::right_leibniz ? BracketKind::right : BracketKind::left;
    Cochain extra = square_half(dt, tw, bk) - square_half(d, tw, bk);
    Cochain extra_l5 = rep.lift(rep.restrict_to_lv(extra));
    detail::collect_nonzero(r, "L5", extra_l5);
    detail::collect_by_component(r, {"", "L4", "L6", "structure of V"}, extra - extra_l5, n);
    if (rep.kind() == StructureKind::hom_lie) detail::collect_nonzero(r, "theta skew symmetry", detail::skew_defect(th));
    if (rep.kind() == StructureKind::symmetric_leibniz)
        detail::collect_nonzero(r, "theta pair condition", detail::self_pair_defect(dt, tw) - detail::self_pair_defect(d, tw));
    r.finish();
    return r;
}

// Elementwise oracle for L3 and L5: the printed left-case cocycle identity
// (left, symmetric, hom-lie) or the right identity on the extension restricted
// to L x L x L with values in V.
inline VerificationReport verify_cocycle_direct(const RepresentationData& rep, const Cochain& theta) {
    rep.validate();
    VerificationReport r;
    const std::size_t n = rep.n(), N = rep.total_dim();
    const Matrix a = rep.twist();
    const Cochain th = rep.lift(theta), delta = rep.delta_total(), dt = rep.total_product(&theta);
    auto e = [N](std::size_t i) { return unit_vector(N, i); };
    auto al = [&](const Vector& x) { return a * x; };
    auto ev = [](const Cochain& c, const Vector& x, const Vector& y) { return c.evaluate(std::vector<Vector>{x, y}); };
    auto report = [&](const std::string& name, const Index& t, const Vector& defect) {
        if (!is_zero(defect)) r.fail(name, t, defect);
    };
    for_each_tuple(n, 2, [&](const Index& t) {
        Vector x = e(t[0]), y = e(t[1]);
        report("L3", t, al(ev(th, x, y)) - ev(th, al(x), al(y)));
    });
    for_each_tuple(n, 3, [&](const Index& t) {
        Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
        Vector g;
        if (rep.kind() == StructureKind::right_leibniz) {
            auto dd = [&](const Vector& p, const Vector& q) { return ev(dt, p, q); };
            g = dd(dd(x, y), al(z)) - dd(dd(x, z), al(y)) - dd(al(x), dd(y, z));
            for (std::size_t o = 0; o < n; ++o) g[o] = 0;
        } else {
            auto tt = [&](const Vector& p, const Vector& q) { return ev(th, p, q); };
            auto dl = [&](const Vector& p, const Vector& q) { return ev(delta, p, q); };
            auto ll = [&](const Vector& p, const Vector& q) { return ev(rep.lambda_l, p, q); };
            auto lr = [&](const Vector& p, const Vector& q) { return ev(rep.lambda_r, p, q); };
            g = tt(dl(x, y), al(z)) + tt(al(y), dl(x, z)) - tt(al(x), dl(y, z)) + lr(tt(x, y), al(z)) +
                ll(al(y), tt(x, z)) - ll(al(x), tt(y, z));
        }
        report("L5", t, g);
    });
    r.finish();
    return r;
}

// Pieces of a product on L + V (L basis first): delta, lambda_l, lambda_r, mu
// and theta = the V part of d(L, L). Requires a block-diagonal twist and
// V to be an ideal; violations are input errors naming the witness pair.
struct SplitComponents {
    RepresentationData rep;
    Cochain theta;  // L x L -> V
};

inline SplitComponents split_components(const HomAlgebra& total, std::size_t n, StructureKind kind,
                                        const std::string& l_name = "L", const std::string& v_name = "V") {
    total.validate();
    const std::size_t N = total.dim();
    if (n == 0 || n >= N) throw InputError("split: L must be a proper nonzero block");
    const std::size_t m = N - n;
    const Matrix& t = total.twist.matrix();
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if ((r < n) != (c < n) && !t(r, c).is_zero())
                throw InputError("split: twist map is not block diagonal (entry " + std::to_string(r + 1) + "," +
                                 std::to_string(c + 1) + ")");
    Matrix a(n, n), av(m, m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = t(r, c);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) av(r, c) = t(n + r, n + c);
    Cochain delta(n, n, 2), mu(m, m, 2), theta(n, m, 2), ll(N, N, 2), lr(N, N, 2);
    auto label = [&](std::size_t i) { return total.space.labels[i]; };
    for (const auto& [tu, v] : total.product.entries()) {
        const std::size_t nv = count_v_arguments(tu, n);
        Vector lpart(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
        Vector vpart(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
        if (nv > 0 && !is_zero(lpart))
            throw InputError("split: V is not an ideal, d(" + label(tu[0]) + "," + label(tu[1]) + ") has a component in L");
        if (nv == 0) {
            delta.set(tu, lpart);
            theta.set(tu, vpart);
        } else if (nv == 2) {
            mu.set({tu[0] - n, tu[1] - n}, vpart);
        } else if (tu[0] < n) {
            ll.set(tu, v);
        } else {
            lr.set(tu, v);
        }
    }
    BasedSpace ls, vs;
    ls.dim = n;
    vs.dim = m;
    for (std::size_t i = 0; i < N; ++i) (i < n ? ls : vs).labels.push_back(label(i));
    HomAlgebra L{l_name, ls, delta, TwistMap(a), kind};
    HomAlgebra V{v_name, vs, mu, TwistMap(av), kind};
    return {RepresentationData::make(L, V, ll, lr), theta};
}

}  // namespace homnr
