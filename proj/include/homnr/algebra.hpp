#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "homnr/bracket.hpp"
#include "homnr/cochain.hpp"
#include "homnr/cochain_spaces.hpp"
#include "homnr/errors.hpp"

namespace homnr {

enum class StructureKind { plain, left_leibniz, right_leibniz, symmetric_leibniz, hom_lie };

inline std::string to_string(StructureKind k) {
    switch (k) {
        case StructureKind::plain: return "plain";
        case StructureKind::left_leibniz: return "left-leibniz";
        case StructureKind::right_leibniz: return "right-leibniz";
        case StructureKind::symmetric_leibniz: return "symmetric-leibniz";
        case StructureKind::hom_lie: return "hom-lie";
    }
    return "?";
}

inline StructureKind parse_structure_kind(const std::string& s) {
    for (auto k : {StructureKind::plain, StructureKind::left_leibniz, StructureKind::right_leibniz,
                   StructureKind::symmetric_leibniz, StructureKind::hom_lie})
        if (to_string(k) == s) return k;
    throw InputError("kind: unknown structure kind \"" + s +
                     "\" (expected plain, left-leibniz, right-leibniz, symmetric-leibniz or hom-lie)");
}

// The bracket whose square-zero elements are structures of this kind.
inline BracketKind bracket_kind_for(StructureKind k) {
    switch (k) {
        case StructureKind::right_leibniz: return BracketKind::right;
        case StructureKind::hom_lie: return BracketKind::lie;
        default: return BracketKind::left;
    }
}

struct HomAlgebra {
    std::string name;
    BasedSpace space;
    Cochain product;
    TwistMap twist;
    StructureKind kind = StructureKind::plain;

    std::size_t dim() const { return space.dim; }

    static HomAlgebra make(std::string name, BasedSpace space, Cochain product, TwistMap twist, StructureKind kind) {
        HomAlgebra a{std::move(name), std::move(space), std::move(product), std::move(twist), kind};
        a.validate();
        return a;
    }

    void validate() const {
        space.validate();
        if (product.arity() != 2) throw InputError("product: arity must be 2");
        if (product.domain_dim() != space.dim || product.codomain_dim() != space.dim)
            throw InputError("product: dimension does not match the space");
        if (twist.dim() != space.dim) throw InputError("beta: dimension does not match the space");
    }

    Vector mul(const Vector& x, const Vector& y) const { return product.evaluate(std::vector<Vector>{x, y}); }

    friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

struct Witness {
    std::string condition;
    Index tuple;  // 0-based basis indices
    Vector defect;

    friend bool operator==(const Witness&, const Witness&) = default;
    friend bool operator<(const Witness& a, const Witness& b) {
        return a.tuple != b.tuple ? a.tuple < b.tuple : a.condition < b.condition;
    }
};

struct VerificationReport {
    bool holds = true;
    std::vector<Witness> failing_witnesses;
    bool multiplicative = true;  // reported, never required

    void fail(std::string condition, Index tuple, Vector defect) {
        holds = false;
        failing_witnesses.push_back({std::move(condition), std::move(tuple), std::move(defect)});
    }
    void absorb(const VerificationReport& o) {
        for (const auto& w : o.failing_witnesses) fail(w.condition, w.tuple, w.defect);
    }
    void finish() { std::sort(failing_witnesses.begin(), failing_witnesses.end()); }

    std::vector<Index> witness_tuples() const {
        std::vector<Index> t;
        for (const auto& w : failing_witnesses) t.push_back(w.tuple);
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        return t;
    }
};

inline bool is_multiplicative(const HomAlgebra& a) { return is_beta_cochain(a.product, a.twist); }

namespace detail {

inline void collect_nonzero(VerificationReport& r, const std::string& condition, const Cochain& c) {
    for (const auto& [t, v] : c.entries()) r.fail(condition, t, v);
}

inline Cochain skew_defect(const Cochain& d) {
    Cochain s(d.domain_dim(), d.codomain_dim(), 2);
    for_each_tuple(d.domain_dim(), 2, [&](const Index& t) { s.set(t, d.value(t) + d.value({t[1], t[0]})); });
    return s;
}

// Pair condition of d with itself, as a 3-cochain: d(d(b,c), beta a) + d(beta a, d(b,c))
// at tuple (a, b, c).
inline Cochain self_pair_defect(const Cochain& d, const TwistMap& beta) {
    const std::size_t n = d.domain_dim();
    Cochain out(n, n, 3);
    for_each_tuple(n, 3, [&](const Index& t) {
        Vector g = d.value({t[1], t[2]});
        Vector ba = beta.apply(unit_vector(n, t[0]));
        out.set(t, d.evaluate(std::vector<Vector>{g, ba}) + d.evaluate(std::vector<Vector>{ba, g}));
    });
    return out;
}

}  // namespace detail

// Bracket-based check: left: half[d,d]_l = 0; right: half[d,d]_r = 0;
// symmetric: (d,d) pair condition and half[d,d]_l = 0; hom-lie: skew and
// half[d,d]_l = 0. Plain always holds.
inline VerificationReport verify_structure(const HomAlgebra& a, StructureKind kind) {
    a.validate();
    VerificationReport r;
    r.multiplicative = is_multiplicative(a);
    switch (kind) {
        case StructureKind::plain: break;
        case StructureKind::left_leibniz:
            detail::collect_nonzero(r, "left Leibniz", square_half(a.product, a.twist, BracketKind::left));
            break;
        case StructureKind::right_leibniz:
            detail::collect_nonzero(r, "right Leibniz", square_half(a.product, a.twist, BracketKind::right));
            break;
        case StructureKind::symmetric_leibniz:
            detail::collect_nonzero(r, "pair condition", detail::self_pair_defect(a.product, a.twist));
            detail::collect_nonzero(r, "left Leibniz", square_half(a.product, a.twist, BracketKind::left));
            break;
        case StructureKind::hom_lie:
            detail::collect_nonzero(r, "skew symmetry", detail::skew_defect(a.product));
            detail::collect_nonzero(r, "left Leibniz", square_half(a.product, a.twist, BracketKind::left));
            break;
    }
    r.finish();
    return r;
}

inline VerificationReport verify_structure(const HomAlgebra& a) { return verify_structure(a, a.kind); }

// Elementwise check of the printed identities on basis triples. Defects are
// written RHS - LHS so that they coincide with the bracket-based defects.
inline VerificationReport verify_identity_direct(const HomAlgebra& a, StructureKind kind) {
    a.validate();
    VerificationReport r;
    r.multiplicative = is_multiplicative(a);
    const std::size_t n = a.dim();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto b = [&a](const Vector& x) { return a.twist.apply(x); };
    auto m = [&a](const Vector& x, const Vector& y) { return a.mul(x, y); };

    // [a(x),[y,z]] = [[x,y],a(z)] + [a(y),[x,z]]
    auto left = [&](const Index& t) {
        Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
        return m(m(x, y), b(z)) + m(b(y), m(x, z)) - m(b(x), m(y, z));
    };
    // [a(x),[y,z]] = [[x,y],a(z)] - [[x,z],a(y)]
    auto right = [&](const Index& t) {
        Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
        return m(m(x, y), b(z)) - m(m(x, z), b(y)) - m(b(x), m(y, z));
    };
    auto add_triples = [&](const std::string& name, auto&& defect) {
        for_each_tuple(n, 3, [&](const Index& t) {
            Vector v = defect(t);
            if (!is_zero(v)) r.fail(name, t, v);
        });
    };

    switch (kind) {
        case StructureKind::plain: break;
        case StructureKind::left_leibniz: add_triples("left Leibniz", left); break;
        case StructureKind::right_leibniz: add_triples("right Leibniz", right); break;
        case StructureKind::symmetric_leibniz:
            // a(x)[y,z] = -[[y,z],a(x)] together with the left identity
            add_triples("pair condition", [&](const Index& t) {
                Vector yz = m(e(t[1]), e(t[2]));
                return m(b(e(t[0])), yz) + m(yz, b(e(t[0])));
            });
            add_triples("left Leibniz", left);
            break;
        case StructureKind::hom_lie: {
            for_each_tuple(n, 2, [&](const Index& t) {
                Vector v = m(e(t[0]), e(t[1])) + m(e(t[1]), e(t[0]));
                if (!is_zero(v)) r.fail("skew symmetry", t, v);
            });
            // Cyclic Hom-Jacobi sum; for a skew product it is minus the left defect.
            add_triples("Hom-Jacobi", [&](const Index& t) {
                Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
                Vector cyc = m(b(x), m(y, z)) + m(b(y), m(z, x)) + m(b(z), m(x, y));
                return Rational(-1) * cyc;
            });
            break;
        }
    }
    r.finish();
    return r;
}

inline VerificationReport verify_identity_direct(const HomAlgebra& a) { return verify_identity_direct(a, a.kind); }

// f o alpha = alpha' o f and f[x,y] = [f x, f y]' on basis elements.
inline bool is_morphism(const Matrix& f, const HomAlgebra& a, const HomAlgebra& b) {
    if (f.rows() != b.dim() || f.cols() != a.dim()) throw InputError("is_morphism: map dimension mismatch");
    if (f * a.twist.matrix() != b.twist.matrix() * f) return false;
    Cochain lhs = postcompose(f, a.product);
    std::vector<Matrix> maps{f, f};
    Cochain rhs = precompose(b.product, maps);
    return lhs == rhs;
}

}  // namespace homnr
