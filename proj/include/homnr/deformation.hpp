#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnr/cohomology.hpp"

namespace homnr {

enum class DefectMode { truncated, exact };

inline std::string to_string(DefectMode m) { return m == DefectMode::truncated ? "truncated" : "exact"; }

inline DefectMode parse_defect_mode(const std::string& s) {
    if (s == "truncated") return DefectMode::truncated;
    if (s == "exact") return DefectMode::exact;
    throw InputError("mode: unknown defect mode \"" + s + "\" (expected truncated or exact)");
}

// d_t = d_0 + t d_1 + ... + t^N d_N with d_0 and beta taken from the base.
// Coefficients live in the cochain space of the base's kind (for the
// symmetric kind: the pair condition with d_0).
struct FormalDeformation {
    HomAlgebra base;
    std::vector<Cochain> coeffs;  // d_1 .. d_N

    std::size_t order() const { return coeffs.size(); }
    ComplexFlavor flavor() const { return adjoint_flavor(base.kind); }
    BracketKind bracket_kind() const { return flavor_bracket(flavor()); }

    // d_i, zero beyond the order.
    Cochain coefficient(std::size_t i) const {
        if (i == 0) return base.product;
        if (i <= coeffs.size()) return coeffs[i - 1];
        return Cochain(base.dim(), base.dim(), 2);
    }

    static FormalDeformation make(HomAlgebra base, std::vector<Cochain> coeffs) {
        FormalDeformation d{std::move(base), std::move(coeffs)};
        d.validate();
        return d;
    }

    void validate() const {
        base.validate();
        if (base.kind == StructureKind::plain) throw InputError("deformation: base needs a structure kind other than plain");
        VerificationReport vr = verify_structure(base);
        if (!vr.holds)
            throw VerificationError("deformation: base " + base.name + " is not " + to_string(base.kind) + " (" +
                                    vr.failing_witnesses.front().condition + ")");
        const CochainSpaceSpec spec = adjoint_space(base, flavor());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Cochain& c = coeffs[i];
            const std::string which = "d_" + std::to_string(i + 1);
            if (c.arity() != 2 || c.domain_dim() != base.dim() || c.codomain_dim() != base.dim())
                throw InputError("deformation: " + which + " must be a bilinear map on the base space");
            if (auto bad = violated_constraint(spec, c)) throw InputError("deformation: " + which + " violates " + *bad);
        }
    }
};

namespace detail {

inline Cochain def_bracket(const FormalDeformation& def, const Cochain& f, const Cochain& g) {
    return bracket(f, g, def.base.twist, def.bracket_kind());
}

// sum_{i=lo}^{s-lo} [d_i, d_{s-i}]
inline Cochain bracket_sum(const FormalDeformation& def, std::size_t s, std::size_t lo) {
    Cochain out(def.base.dim(), def.base.dim(), 3);
    for (std::size_t i = lo; i + lo <= s; ++i) {
        Cochain di = def.coefficient(i), dj = def.coefficient(s - i);
        if (di.is_zero() || dj.is_zero()) continue;
        out += def_bracket(def, di, dj);
    }
    return out;
}

// x in the coefficient space with 2[d_0, x] = rhs, with the rank certificate.
struct CoefficientSolve {
    std::optional<Cochain> x;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
};

inline CoefficientSolve solve_twice_coboundary(const FormalDeformation& def, const Cochain& rhs) {
    const std::size_t n = def.base.dim();
    CoefficientSolve out;
    if (rhs.is_zero()) {
        out.x = Cochain(n, n, 2);
        return out;
    }
    CochainBasis s2 = cochain_basis(adjoint_space(def.base, def.flavor()), 2);
    std::vector<Vector> cols;
    for (const auto& b : s2.members) cols.push_back((Rational(2) * def_bracket(def, def.base.product, b)).flatten());
    LinearSolution sol = solve_certified(Matrix::from_columns(cols, rhs.flat_size()), rhs.flatten());
    out.rank = sol.rank;
    out.augmented_rank = sol.augmented_rank;
    if (sol.x) out.x = Cochain::from_flat(n, n, 2, s2.space.combine(*sol.x));
    return out;
}

}  // namespace detail

// a_s = sum_{i+j=s} [d_i, d_j] for s = 0..N (truncated) or 0..2N (exact).
inline std::vector<Cochain> deformation_defect(const FormalDeformation& def, DefectMode mode) {
    def.validate();
    const std::size_t top = mode == DefectMode::truncated ? def.order() : 2 * def.order();
    std::vector<Cochain> out;
    for (std::size_t s = 0; s <= top; ++s) out.push_back(detail::bracket_sum(def, s, 0));
    return out;
}

inline bool is_deformation(const FormalDeformation& def, DefectMode mode) {
    for (const auto& a : deformation_defect(def, mode))
        if (!a.is_zero()) return false;
    return true;
}

struct ObstructionResult {
    Cochain psi;             // sum_{i=1}^{s-1} [d_i, d_{s-i}]
    bool is_cocycle = false;  // [d_0, psi] = 0
    bool is_coboundary = false;
    std::optional<Cochain> witness;  // d_s with 2[d_0, d_s] = -psi
};

inline ObstructionResult obstruction(const FormalDeformation& def, std::size_t s) {
    def.validate();
    if (s < 2 || s > def.order() + 1)
        throw InputError("obstruction: order " + std::to_string(s) + " outside 2.." + std::to_string(def.order() + 1));
    ObstructionResult r;
    r.psi = detail::bracket_sum(def, s, 1);
    r.is_cocycle = detail::def_bracket(def, def.base.product, r.psi).is_zero();
    r.witness = detail::solve_twice_coboundary(def, -r.psi).x;
    r.is_coboundary = r.witness.has_value();
    return r;
}

struct OrderReport {
    std::size_t order = 0;
    Cochain defect;
    bool is_cocycle = false;
    bool is_coboundary = false;
    std::optional<Cochain> extension_witness;  // replacement d_s that zeroes a_s
};

// Per order s >= 1: the defect, whether it is a cocycle and whether some
// replacement of d_s cancels it.
inline std::vector<OrderReport> obstruction_report(const FormalDeformation& def, DefectMode mode) {
    std::vector<Cochain> defects = deformation_defect(def, mode);
    std::vector<OrderReport> out;
    for (std::size_t s = 1; s < defects.size(); ++s) {
        OrderReport r;
        r.order = s;
        r.defect = defects[s];
        r.is_cocycle = detail::def_bracket(def, def.base.product, r.defect).is_zero();
        if (auto x = detail::solve_twice_coboundary(def, -r.defect).x) {
            r.is_coboundary = true;
            r.extension_witness = def.coefficient(s) + *x;
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct OrderExtension {
    std::optional<Cochain> next;  // d_(N+1)
    std::size_t rank = 0;          // on failure augmented_rank > rank
    std::size_t augmented_rank = 0;
};

inline OrderExtension extend_order(const FormalDeformation& def) {
    if (!is_deformation(def, DefectMode::truncated)) throw InputError("extend_order: not a truncated deformation");
    const std::size_t s = def.order() + 1;
    detail::CoefficientSolve sol = detail::solve_twice_coboundary(def, -detail::bracket_sum(def, s, 1));
    OrderExtension out{sol.x, sol.rank, sol.augmented_rank};
    if (out.next) {
        FormalDeformation longer = def;
        longer.coeffs.push_back(*out.next);
        if (!deformation_defect(longer, DefectMode::truncated).back().is_zero())
            throw InternalError("extend_order: solution does not cancel the defect");
    }
    return out;
}

// exp(t phi) truncated at order N: the coefficients phi^i / i!.
struct FormalAutomorphism {
    Matrix generator;
    std::size_t order = 0;

    std::vector<Matrix> series() const {
        std::vector<Matrix> out{Matrix::identity(generator.rows())};
        for (std::size_t i = 1; i <= order; ++i) out.push_back(Rational(1, static_cast<long>(i)) * (out.back() * generator));
        return out;
    }
    FormalAutomorphism inverse() const { return {Rational(-1) * generator, order}; }
};

struct EquivalenceReport {
    bool equivalent = false;
    bool product_identity = false;  // phi_t o d_t = d'_t * phi_t mod t^(N+1)
    bool twist_identity = false;    // phi_t o beta = beta o phi_t
    std::optional<std::size_t> failing_order;

    explicit operator bool() const { return equivalent; }
};

namespace detail {

inline Cochain on_both(const Cochain& d, const Matrix& p, const Matrix& q) {
    std::vector<Matrix> maps{p, q};
    return precompose(d, maps);
}

}  // namespace detail

// Checks phi_t o d_t = d'_t * phi_t and phi_t o beta = beta o phi_t, where
// (d' * phi_t)(a,b) collects d'_i(phi_j a, phi_k b) t^(i+j+k).
inline EquivalenceReport check_equivalence(const FormalDeformation& def1, const FormalDeformation& def2, const Matrix& phi) {
    def1.validate();
    def2.validate();
    const std::size_t n = def1.base.dim(), N = def1.order();
    if (def2.base.dim() != n) throw InputError("check_equivalence: bases have different dimensions");
    if (def2.order() != N) throw InputError("check_equivalence: deformations have different orders");
    if (def1.base.twist != def2.base.twist) throw InputError("check_equivalence: both deformations must share the twist map");
    if (phi.rows() != n || phi.cols() != n) throw InputError("check_equivalence: generator has the wrong dimension");

    EquivalenceReport r;
    const std::vector<Matrix> c = FormalAutomorphism{phi, N}.series();
    const Matrix& beta = def1.base.twist.matrix();
    r.twist_identity = true;
    for (const auto& ci : c)
        if (ci * beta != beta * ci) r.twist_identity = false;

    r.product_identity = true;
    for (std::size_t s = 0; s <= N && r.product_identity; ++s) {
        Cochain lhs(n, n, 2), rhs(n, n, 2);
        for (std::size_t i = 0; i <= s; ++i) lhs += postcompose(c[i], def1.coefficient(s - i));
        for (std::size_t i = 0; i <= s; ++i)
            for (std::size_t j = 0; i + j <= s; ++j) rhs += detail::on_both(def2.coefficient(i), c[j], c[s - i - j]);
        if (lhs != rhs) {
            r.product_identity = false;
            r.failing_order = s;
        }
    }
    r.equivalent = r.product_identity && r.twist_identity;
    return r;
}

// d'_t = phi_t o d_t * phi_t^(-1) modulo t^(N+1).
inline FormalDeformation transport(const FormalDeformation& def, const Matrix& phi) {
    def.validate();
    const std::size_t n = def.base.dim(), N = def.order();
    const FormalAutomorphism a{phi, N};
    const std::vector<Matrix> c = a.series(), ci = a.inverse().series();
    std::vector<Cochain> coeffs(N + 1, Cochain(n, n, 2));
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j) {
            Cochain dj = def.coefficient(j);
            if (dj.is_zero()) continue;
            for (std::size_t k = 0; i + j + k <= N; ++k)
                for (std::size_t l = 0; i + j + k + l <= N; ++l)
                    coeffs[i + j + k + l] += postcompose(c[i], detail::on_both(dj, ci[k], ci[l]));
        }
    HomAlgebra base = def.base;
    base.product = coeffs[0];
    coeffs.erase(coeffs.begin());
    return FormalDeformation::make(std::move(base), std::move(coeffs));
}

struct InfinitesimalClass {
    bool is_cocycle = false;
    bool is_trivial = false;  // d_1 is a coboundary
};

inline InfinitesimalClass infinitesimal_class(const FormalDeformation& def) {
    def.validate();
    if (def.order() == 0) throw InputError("infinitesimal_class: needs order at least 1");
    InfinitesimalClass r;
    const Cochain& d1 = def.coeffs[0];
    r.is_cocycle = coboundary(def.base, d1, def.flavor()).is_zero();
    if (r.is_cocycle) r.is_trivial = is_coboundary(complex_build(def.base, def.flavor(), 2), d1);
    return r;
}

// Decidable order-one test: d'_1 - d_1 = -[d_0, phi] for some phi commuting
// with beta. Returns such a phi.
inline std::optional<Matrix> order_one_equivalence(const FormalDeformation& def1, const FormalDeformation& def2) {
    def1.validate();
    def2.validate();
    if (def1.order() == 0 || def2.order() == 0) throw InputError("order_one_equivalence: needs order at least 1");
    if (def1.base.product != def2.base.product || def1.base.twist != def2.base.twist)
        throw InputError("order_one_equivalence: deformations must share d_0 and the twist map");
    CochainComplex c = complex_build(def1.base, def1.flavor(), 2);
    auto pre = coboundary_preimage(c, def1.coeffs[0] - def2.coeffs[0]);
    if (!pre) return std::nullopt;
    return as_matrix(*pre);
}

}  // namespace homnr
