#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homnr/algebra.hpp"
#include "homnr/bracket.hpp"
#include "homnr/cochain_spaces.hpp"
#include "homnr/representation.hpp"

namespace homnr {

enum class ComplexFlavor { adjoint_left, adjoint_right, adjoint_symmetric, adjoint_lie, representation };

inline std::string to_string(ComplexFlavor f) {
    switch (f) {
        case ComplexFlavor::adjoint_left: return "adjoint-left";
        case ComplexFlavor::adjoint_right: return "adjoint-right";
        case ComplexFlavor::adjoint_symmetric: return "adjoint-symmetric";
        case ComplexFlavor::adjoint_lie: return "adjoint-lie";
        case ComplexFlavor::representation: return "representation";
    }
    return "?";
}

inline ComplexFlavor parse_complex_flavor(const std::string& s) {
    for (auto f : {ComplexFlavor::adjoint_left, ComplexFlavor::adjoint_right, ComplexFlavor::adjoint_symmetric,
                   ComplexFlavor::adjoint_lie, ComplexFlavor::representation})
        if (to_string(f) == s) return f;
    throw InputError("flavor: unknown complex flavor \"" + s +
                     "\" (expected adjoint-left, adjoint-right, adjoint-symmetric, adjoint-lie or representation)");
}

inline StructureKind required_kind(ComplexFlavor f) {
    switch (f) {
        case ComplexFlavor::adjoint_right: return StructureKind::right_leibniz;
        case ComplexFlavor::adjoint_symmetric: return StructureKind::symmetric_leibniz;
        case ComplexFlavor::adjoint_lie: return StructureKind::hom_lie;
        default: return StructureKind::left_leibniz;
    }
}

inline ComplexFlavor adjoint_flavor(StructureKind k) {
    switch (k) {
        case StructureKind::right_leibniz: return ComplexFlavor::adjoint_right;
        case StructureKind::symmetric_leibniz: return ComplexFlavor::adjoint_symmetric;
        case StructureKind::hom_lie: return ComplexFlavor::adjoint_lie;
        default: return ComplexFlavor::adjoint_left;
    }
}

inline BracketKind flavor_bracket(ComplexFlavor f) { return bracket_kind_for(required_kind(f)); }

inline CochainSpaceSpec adjoint_space(const HomAlgebra& a, ComplexFlavor f) {
    switch (f) {
        case ComplexFlavor::adjoint_symmetric:
            return CochainSpaceSpec::adjoint(a.twist, CochainFlavor::symmetric_leibniz, a.product);
        case ComplexFlavor::adjoint_lie: return CochainSpaceSpec::adjoint(a.twist, CochainFlavor::alternating);
        case ComplexFlavor::representation: throw InputError("adjoint_space: representation flavor has no adjoint space");
        default: return CochainSpaceSpec::adjoint(a.twist, CochainFlavor::beta_equivariant);
    }
}

namespace detail {

// Degree 0: x (beta x = x) maps to a -> d(x, beta^(r-1) a), or d(beta^(r-1) a, x)
// for the right kind.
inline std::optional<Cochain> adjoint_degree_zero(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor, int r) {
    auto p = matrix_power(a.twist.matrix(), r - 1);
    if (!p) return std::nullopt;
    const std::size_t n = a.dim();
    Vector x = f.value({});
    Cochain out(n, n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        Vector b = p->column(j);
        out.set({j}, flavor == ComplexFlavor::adjoint_right ? a.mul(b, x) : a.mul(x, b));
    }
    return out;
}

inline Cochain adjoint_coboundary_unchecked(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor, int r = 0) {
    if (f.arity() == 0) {
        auto out = adjoint_degree_zero(a, f, flavor, r);
        if (!out) throw InputError("degree-0 coboundary needs an invertible twist map");
        return *out;
    }
    return bracket(a.product, f, a.twist, flavor_bracket(flavor));
}

}  // namespace detail

// D(f) = [d, f] with the bracket of the flavor.
inline Cochain coboundary(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor, int r = 0) {
    a.validate();
    if (flavor == ComplexFlavor::representation) throw InputError("coboundary: use rep_coboundary for the representation flavor");
    if (f.domain_dim() != a.dim() || f.codomain_dim() != a.dim()) throw InputError("coboundary: cochain dimension mismatch");
    if (f.arity() > 0)
        if (auto bad = violated_constraint(adjoint_space(a, flavor), f))
            throw InputError("coboundary: cochain violates " + *bad);
    return detail::adjoint_coboundary_unchecked(a, f, flavor, r);
}

inline Cochain coboundary(const HomAlgebra& a, const Cochain& f) { return coboundary(a, f, adjoint_flavor(a.kind)); }

// ---------------------------------------------------------------------------
// Printed expansions

enum class SignConvention { printed, engine };

namespace detail {

inline Vector twisted_basis(const Matrix& p, std::size_t j) { return p.column(j); }

}  // namespace detail

// The expanded coboundary, term by term, on every basis tuple. With
// SignConvention::printed the signs are as displayed; with ::engine each
// group of terms carries the correction that makes it equal to [d,f]:
//   left: first sum (-1)^k, middle term 1, double sum (-1)^(k+s-1);
//   lie: all terms (-1)^(k-1);
//   symmetric: the left corrections, with the last term of the first sum
//   written as d(f(a_1..a_k), beta^(k-1) a_(k+1)).
// The right kind has no printed expansion; its oracle is (-1)^(k+1) times the
// corrected left expansion for the opposite product d(y,x), with arguments of
// f and of the result reversed.
inline Cochain explicit_coboundary_oracle(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor,
                                          SignConvention conv = SignConvention::engine);

namespace detail {

inline Cochain reversed(const Cochain& f) {
    Cochain out(f.domain_dim(), f.codomain_dim(), f.arity());
    for (const auto& [t, v] : f.entries()) out.set(Index(t.rbegin(), t.rend()), v);
    return out;
}

inline Cochain explicit_left_family(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor, SignConvention conv) {
    const std::size_t n = a.dim(), k = f.arity();
    const Matrix bk = a.twist.matrix().power(static_cast<unsigned>(k - 1));
    const Matrix b1 = a.twist.matrix();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto fv = [&f](const std::vector<Vector>& args) { return f.evaluate(args); };
    const bool engine = conv == SignConvention::engine;
    auto sgn = [](long e) { return Rational(e % 2 == 0 ? 1 : -1); };
    Cochain out(n, n, k + 1);
    for_each_tuple(n, k + 1, [&](const Index& t) {
        std::vector<Vector> x;
        for (auto i : t) x.push_back(e(i));
        auto omit = [&](std::size_t s) {
            std::vector<Vector> r;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (j != s) r.push_back(x[j]);
            return r;
        };
        Vector acc(n);
        if (flavor == ComplexFlavor::adjoint_lie) {
            // sum_s (-1)^(s+1) d(beta^(k-1) a_s, f(..^s..)) + sum_{s<t} (-1)^(s+t) f(d(a_s,a_t), beta a_..)
            for (std::size_t s = 1; s <= k + 1; ++s)
                add_scaled(acc, sgn(static_cast<long>(s + 1)), a.mul(bk * x[s - 1], fv(omit(s - 1))));
            for (std::size_t s = 1; s <= k + 1; ++s)
                for (std::size_t u = s + 1; u <= k + 1; ++u) {
                    std::vector<Vector> args{a.mul(x[s - 1], x[u - 1])};
                    for (std::size_t j = 1; j <= k + 1; ++j)
                        if (j != s && j != u) args.push_back(b1 * x[j - 1]);
                    add_scaled(acc, sgn(static_cast<long>(s + u)), fv(args));
                }
            if (engine) acc = sgn(static_cast<long>(k - 1)) * acc;
            out.set(t, std::move(acc));
            return;
        }
        const bool sym = flavor == ComplexFlavor::adjoint_symmetric;
        // first sum
        const std::size_t last = sym ? k + 1 : k;
        for (std::size_t s = 1; s <= last; ++s) {
            Rational c = sym ? sgn(static_cast<long>(k + 2 - s)) : sgn(static_cast<long>(s));  // (-1)^(k-s) or (-1)^s
            if (engine && !sym) c = c * sgn(static_cast<long>(k));
            if (engine && sym && s == k + 1) continue;  // replaced by the middle term below
            add_scaled(acc, c, a.mul(bk * x[s - 1], fv(omit(s - 1))));
        }
        if (!sym || engine) {
            std::vector<Vector> head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
            add_scaled(acc, Rational(1), a.mul(fv(head), bk * x[k]));
        }
        // double sum: f(beta a_1 .. ^s .. d(a_s,a_t) at t .. beta a_(k+1))
        for (std::size_t s = 1; s <= k + 1; ++s)
            for (std::size_t u = s + 1; u <= k + 1; ++u) {
                std::vector<Vector> args;
                for (std::size_t j = 1; j <= k + 1; ++j) {
                    if (j == s) continue;
                    args.push_back(j == u ? a.mul(x[s - 1], x[u - 1]) : b1 * x[j - 1]);
                }
                Rational c = engine ? sgn(static_cast<long>(k + s - 1)) : Rational(1);
                add_scaled(acc, c, fv(args));
            }
        out.set(t, std::move(acc));
    });
    return out;
}

}  // namespace detail

inline Cochain explicit_coboundary_oracle(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor, SignConvention conv) {
    a.validate();
    if (flavor == ComplexFlavor::representation) throw InputError("explicit_coboundary_oracle: adjoint flavors only");
    if (f.domain_dim() != a.dim() || f.codomain_dim() != a.dim() || f.arity() == 0)
        throw InputError("explicit_coboundary_oracle: cochain shape mismatch");
    if (auto bad = violated_constraint(adjoint_space(a, flavor), f))
        throw InputError("explicit_coboundary_oracle: cochain violates " + *bad);
    if (flavor != ComplexFlavor::adjoint_right) return detail::explicit_left_family(a, f, flavor, conv);
    HomAlgebra op = a;
    op.product = detail::reversed(a.product);
    const std::size_t k = f.arity();
    Cochain left = detail::explicit_left_family(op, detail::reversed(f), ComplexFlavor::adjoint_left, SignConvention::engine);
    Rational c = k % 2 == 1 ? 1 : -1;  // (-1)^(k+1)
    return c * detail::reversed(left);
}

struct OracleComparison {
    bool engine_matches = false;          // engine == oracle with corrected signs
    std::optional<int> printed_sign;      // s with engine == s * printed, when one exists
};

inline OracleComparison compare_with_oracle(const HomAlgebra& a, const Cochain& f, ComplexFlavor flavor) {
    Cochain engine = coboundary(a, f, flavor);
    OracleComparison c;
    c.engine_matches = engine == explicit_coboundary_oracle(a, f, flavor, SignConvention::engine);
    if (flavor != ComplexFlavor::adjoint_right) {
        Cochain printed = explicit_coboundary_oracle(a, f, flavor, SignConvention::printed);
        if (engine == printed)
            c.printed_sign = 1;
        else if (engine == -printed)
            c.printed_sign = -1;
    }
    return c;
}

// Printed values-in-V coboundary: sum_{s<t} (-1)^(k+s-1) g(alpha x.., delta(x_s,x_t) at t, ..)
// + sum_{s<=k} (-1)^(k-s) lambda_l(alpha^p x_s, g(..^s..)) + lambda_r(g(x_1..x_k), alpha^p x_(k+1)),
// with p = 1 as printed or p = k-1 as the engine produces.
enum class TwistPower { printed_alpha, alpha_k_minus_1 };

inline Cochain explicit_rep_coboundary_oracle(const RepresentationData& rep, const Cochain& g,
                                              TwistPower power = TwistPower::alpha_k_minus_1) {
    rep.validate();
    const std::size_t n = rep.n(), m = rep.m(), N = rep.total_dim(), k = g.arity();
    if (g.domain_dim() != n || g.codomain_dim() != m || k == 0)
        throw InputError("explicit_rep_coboundary_oracle: cochain must map L^k to V, k >= 1");
    const Matrix al = rep.L.twist.matrix();
    const Matrix ap = power == TwistPower::printed_alpha ? al : al.power(static_cast<unsigned>(k - 1));
    auto sgn = [](std::size_t e) { return Rational(e % 2 == 0 ? 1 : -1); };
    auto ev2 = [](const Cochain& c, const Vector& x, const Vector& y) { return c.evaluate(std::vector<Vector>{x, y}); };
    Cochain out(n, m, k + 1);
    for_each_tuple(n, k + 1, [&](const Index& t) {
        std::vector<Vector> x;
        for (auto i : t) x.push_back(unit_vector(n, i));
        Vector acc(m);
        for (std::size_t s = 1; s <= k + 1; ++s)
            for (std::size_t u = s + 1; u <= k + 1; ++u) {
                std::vector<Vector> args;
                for (std::size_t j = 1; j <= k + 1; ++j) {
                    if (j == s) continue;
                    args.push_back(j == u ? rep.L.mul(x[s - 1], x[u - 1]) : al * x[j - 1]);
                }
                add_scaled(acc, sgn(k + s - 1), g.evaluate(args));
            }
        for (std::size_t s = 1; s <= k; ++s) {
            std::vector<Vector> rest;
            for (std::size_t j = 1; j <= k + 1; ++j)
                if (j != s) rest.push_back(x[j - 1]);
            Vector w = ev2(rep.lambda_l, embed_value(ap * x[s - 1], N, 0), embed_value(g.evaluate(rest), N, n));
            add_scaled(acc, sgn(k + 2 - s), rep.project_value(w));
        }
        std::vector<Vector> head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        Vector w = ev2(rep.lambda_r, embed_value(g.evaluate(head), N, n), embed_value(ap * x[k], N, 0));
        add_scaled(acc, Rational(1), rep.project_value(w));
        out.set(t, std::move(acc));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Complexes

struct CochainComplex {
    HomAlgebra algebra;
    ComplexFlavor flavor = ComplexFlavor::adjoint_left;
    std::optional<RepresentationData> rep;
    std::size_t k_min = 1;  // lowest reported degree
    std::size_t k_max = 0;
    bool degree_zero = false;  // degree 0 built (supplies B^1)
    int degree_zero_power = 0;
    std::map<std::size_t, CochainBasis> spaces;  // flavor cochain space S^k, k = 1..k_max+1
    std::map<std::size_t, CochainBasis> bases;   // largest subcomplex K^k = {f in S^k : Df in S^(k+1)}
    std::map<std::size_t, Matrix> matrices;      // D_k : K^k -> K^(k+1) (S^(k_max+1) at the top)
    bool closed = true;                          // K^k = S^k for every k
    std::vector<std::string> notes;

    std::size_t lowest_degree() const { return degree_zero ? 0 : 1; }

    Cochain apply(const Cochain& f) const {
        if (rep) return detail::rep_coboundary_unchecked(*rep, rep->total_product(), f, degree_zero_power);
        return detail::adjoint_coboundary_unchecked(algebra, f, flavor, degree_zero_power);
    }
    CochainSpaceSpec space_spec() const { return rep ? representation_spec(*rep) : adjoint_space(algebra, flavor); }
    const Matrix& twist_out() const { return rep ? rep->V.twist.matrix() : algebra.twist.matrix(); }
    std::size_t domain_dim() const { return rep ? rep->n() : algebra.dim(); }
    std::size_t codomain_dim() const { return rep ? rep->m() : algebra.dim(); }
};

namespace detail {

inline Vector coordinates_in(const CochainBasis& b, const Cochain& f, const char* what) {
    Vector flat = f.flatten();
    if (!b.space.contains(flat)) throw InternalError(std::string("complex: ") + what + " left its cochain space");
    return b.space.coordinates(flat);
}

inline void assemble(CochainComplex& c, std::size_t k_max) {
    const CochainSpaceSpec spec = c.space_spec();
    const std::size_t dom = c.domain_dim(), cod = c.codomain_dim();
    for (std::size_t k = 1; k <= k_max + 1; ++k) c.spaces.emplace(k, cochain_basis(spec, k));

    for (std::size_t k = 1; k <= k_max; ++k) {
        const CochainBasis& s = c.spaces.at(k);
        const CochainBasis& next = c.spaces.at(k + 1);
        std::vector<Vector> residuals;
        for (const auto& b : s.members) residuals.push_back(next.space.residual(c.apply(b).flatten()));
        Matrix r = Matrix::from_columns(residuals, next.space.ambient_dim());
        std::vector<Vector> members;
        const Subspace kernel = kernel_basis(r);
        for (const auto& coeff : kernel.basis()) members.push_back(s.space.combine(coeff));
        CochainBasis kb = CochainBasis::from_subspace(Subspace::span(members, s.space.ambient_dim()), dom, cod, k, s.flavor);
        if (kb.dim() != s.dim()) {
            c.closed = false;
            c.notes.push_back("degree " + std::to_string(k) + ": largest subcomplex has dimension " +
                              std::to_string(kb.dim()) + " of " + std::to_string(s.dim()));
        }
        c.bases.emplace(k, std::move(kb));
    }

    // Degree 0: vectors fixed by the twist on the values.
    {
        const Matrix& t = c.twist_out();
        Subspace fixed = kernel_basis(t - Matrix::identity(t.rows()));
        CochainBasis zero = CochainBasis::from_subspace(fixed, dom, cod, 0, spec.flavor);
        bool ok = true;
        std::string why;
        std::vector<Cochain> images;
        for (const auto& x : zero.members) {
            Cochain y;
            try {
                y = c.apply(x);
            } catch (const InputError&) {
                ok = false;
                why = "twist map is not invertible";
                break;
            }
            if (!c.bases.count(1) || !c.bases.at(1).contains(y)) {
                ok = false;
                why = "image leaves the degree-1 cochains";
                break;
            }
            if (!c.apply(y).is_zero()) {
                ok = false;
                why = "D1 o D0 is not zero";
                break;
            }
            images.push_back(std::move(y));
        }
        if (ok && k_max >= 1) {
            c.degree_zero = true;
            std::vector<Vector> cols;
            for (const auto& y : images) cols.push_back(coordinates_in(c.bases.at(1), y, "degree-0 image"));
            c.matrices.emplace(0, Matrix::from_columns(cols, c.bases.at(1).dim()));
            c.bases.emplace(0, std::move(zero));
        } else if (!ok) {
            c.notes.push_back("degree 0 omitted (" + why + "); B^1 is taken to be 0");
        }
    }

    for (std::size_t k = 1; k <= k_max; ++k) {
        const CochainBasis& src = c.bases.at(k);
        const CochainBasis& dst = k < k_max ? c.bases.at(k + 1) : c.spaces.at(k + 1);
        std::vector<Vector> cols;
        for (const auto& b : src.members) cols.push_back(coordinates_in(dst, c.apply(b), "coboundary"));
        c.matrices.emplace(k, Matrix::from_columns(cols, dst.dim()));
    }
    for (const auto& [k, m] : c.matrices) {
        auto it = c.matrices.find(k + 1);
        if (it != c.matrices.end() && !(it->second * m).is_zero())
            throw InternalError("complex: D_" + std::to_string(k + 1) + " D_" + std::to_string(k) + " is not zero");
    }
}

}  // namespace detail

// Requires the algebra to verify for the flavor's kind and to be multiplicative.
inline CochainComplex complex_build(const HomAlgebra& a, ComplexFlavor flavor, std::size_t k_max, int degree_zero_power = 0) {
    a.validate();
    if (flavor == ComplexFlavor::representation) throw InputError("complex_build: pass a representation for that flavor");
    if (k_max == 0) throw InputError("complex_build: max degree must be at least 1");
    VerificationReport vr = verify_structure(a, required_kind(flavor));
    if (!vr.holds)
        throw VerificationError("complex_build: " + a.name + " is not " + to_string(required_kind(flavor)) + " (" +
                                vr.failing_witnesses.front().condition + ")");
    if (!vr.multiplicative) throw VerificationError("complex_build: " + a.name + " is not multiplicative");
    CochainComplex c;
    c.algebra = a;
    c.flavor = flavor;
    c.k_max = k_max;
    c.degree_zero_power = degree_zero_power;
    detail::assemble(c, k_max);
    c.k_min = 1;
    return c;
}

inline CochainComplex complex_build(const RepresentationData& rep, std::size_t k_max, int degree_zero_power = 0) {
    if (k_max == 0) throw InputError("complex_build: max degree must be at least 1");
    VerificationReport vr = verify_representation(rep);
    if (!vr.holds) throw VerificationError("complex_build: representation fails " + vr.failing_witnesses.front().condition);
    if (!vr.multiplicative) throw VerificationError("complex_build: the representation's product on L + V is not multiplicative");
    CochainComplex c;
    c.algebra = rep.L;
    c.flavor = ComplexFlavor::representation;
    c.rep = rep;
    c.k_max = k_max;
    c.degree_zero_power = degree_zero_power;
    detail::assemble(c, k_max);
    c.k_min = c.degree_zero ? 0 : 1;
    return c;
}

struct CohomologyDims {
    std::size_t Z = 0, B = 0, H = 0;
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

struct CohomologyReport {
    std::map<std::size_t, CohomologyDims> degrees;
};

inline CohomologyReport cohomology_dims(const CochainComplex& c) {
    CohomologyReport r;
    for (std::size_t k = c.k_min; k <= c.k_max; ++k) {
        CohomologyDims d;
        d.Z = c.bases.at(k).dim() - rank(c.matrices.at(k));
        if (k > 0 && c.matrices.count(k - 1)) d.B = rank(c.matrices.at(k - 1));
        if (d.B > d.Z) throw InternalError("cohomology: B exceeds Z");
        d.H = d.Z - d.B;
        r.degrees.emplace(k, d);
    }
    return r;
}

namespace detail {

inline void require_in_space(const CochainComplex& c, const Cochain& f, const char* op) {
    if (f.domain_dim() != c.domain_dim() || f.codomain_dim() != c.codomain_dim())
        throw InputError(std::string(op) + ": cochain dimension mismatch");
    if (f.arity() > c.k_max + 1 || (f.arity() == 0 && !c.degree_zero))
        throw InputError(std::string(op) + ": degree " + std::to_string(f.arity()) + " outside the complex");
    if (f.arity() > 0)
        if (auto bad = violated_constraint(c.space_spec(), f)) throw InputError(std::string(op) + ": cochain violates " + *bad);
    if (f.arity() == 0 && !c.bases.at(0).contains(f)) throw InputError(std::string(op) + ": constant is not fixed by the twist");
}

}  // namespace detail

inline bool is_cocycle(const CochainComplex& c, const Cochain& f) {
    detail::require_in_space(c, f, "is_cocycle");
    return c.apply(f).is_zero();
}

// g with D(g) = f, when f is a coboundary. B^(k_min) is 0.
inline std::optional<Cochain> coboundary_preimage(const CochainComplex& c, const Cochain& f) {
    detail::require_in_space(c, f, "is_coboundary");
    const std::size_t k = f.arity();
    if (f.is_zero()) return Cochain(c.domain_dim(), c.codomain_dim(), k == 0 ? 0 : k - 1);
    if (k == 0 || !c.matrices.count(k - 1)) return std::nullopt;
    const CochainBasis& target = k - 1 < c.k_max ? c.bases.at(k) : c.spaces.at(k);
    Vector flat = f.flatten();
    if (!target.space.contains(flat)) return std::nullopt;
    auto x = solve_linear(c.matrices.at(k - 1), target.space.coordinates(flat));
    if (!x) return std::nullopt;
    const CochainBasis& src = c.bases.at(k - 1);
    Cochain g = Cochain::from_flat(c.domain_dim(), c.codomain_dim(), k - 1, src.space.combine(*x));
    if (c.apply(g) != f) throw InternalError("coboundary preimage failed substitution");
    return g;
}

inline bool is_coboundary(const CochainComplex& c, const Cochain& f) { return coboundary_preimage(c, f).has_value(); }

}  // namespace homnr
