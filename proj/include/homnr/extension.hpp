#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnr/cohomology.hpp"
#include "homnr/representation.hpp"

namespace homnr {

// A split extension in standard form on M = L + V (L basis first): the total
// algebra, its components and the standard inclusion V -> M and projection
// M -> L.
struct ExtensionAlgebra {
    RepresentationData rep;
    Cochain theta;  // L x L -> V
    HomAlgebra total;
    Matrix inclusion;   // N x m
    Matrix projection;  // n x N
    std::vector<std::string> notes;

    std::size_t n() const { return rep.n(); }
    std::size_t m() const { return rep.m(); }

    // No verification: callers decide what must hold.
    static ExtensionAlgebra standard(RepresentationData rep, Cochain theta) {
        ExtensionAlgebra e;
        const std::size_t n = rep.n(), m = rep.m();
        e.total = rep.total_algebra(&theta);
        e.inclusion = Matrix(n + m, m);
        e.projection = Matrix(n, n + m);
        for (std::size_t j = 0; j < m; ++j) e.inclusion(n + j, j) = 1;
        for (std::size_t j = 0; j < n; ++j) e.projection(j, j) = 1;
        e.rep = std::move(rep);
        e.theta = std::move(theta);
        return e;
    }
};

inline ExtensionAlgebra build_extension(const RepresentationData& rep, const Cochain& theta) {
    VerificationReport vr = verify_representation(rep);
    if (!vr.holds) throw VerificationError("build_extension: representation fails " + vr.failing_witnesses.front().condition);
    VerificationReport vc = verify_cocycle(rep, theta);
    if (!vc.holds) throw VerificationError("build_extension: theta fails " + vc.failing_witnesses.front().condition);
    ExtensionAlgebra e = ExtensionAlgebra::standard(rep, theta);
    VerificationReport vt = verify_structure(e.total);
    if (!vt.holds)
        throw InternalError("build_extension: assembled algebra fails " + vt.failing_witnesses.front().condition);
    HomAlgebra L = rep.L, V = rep.V;
    if (!is_morphism(e.inclusion, V, e.total) || !is_morphism(e.projection, e.total, L))
        throw InternalError("build_extension: standard inclusion or projection is not a morphism");
    return e;
}

// M -> M pulled back along phi: phi^-1 d(phi a, phi b), phi^-1 alpha phi.
inline HomAlgebra pull_back(const HomAlgebra& a, const Matrix& phi, BasedSpace labels) {
    auto inv = inverse(phi);
    if (!inv) throw InputError("pull_back: change of basis is not invertible");
    std::vector<Matrix> maps{phi, phi};
    Cochain d = postcompose(*inv, precompose(a.product, maps));
    return HomAlgebra::make(a.name, std::move(labels), std::move(d), TwistMap(*inv * a.twist.matrix() * phi), a.kind);
}

struct Decomposition {
    ExtensionAlgebra standard;
    Matrix section;  // N x n, pi o s = id, s o alpha_L = alpha_M o s
    Matrix phi;      // [s | i]: standard form -> given algebra, an isomorphism
};

namespace detail {

// X with a * X = b, column by column; nullopt when some column has no solution.
inline std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& b) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto x = solve_linear(a, b.column(j));
        if (!x) return std::nullopt;
        cols.push_back(*x);
    }
    return Matrix::from_columns(cols, a.cols());
}

// Solves the affine system r0 + sum_j x_j r_j = 0 where residual(e_j) - residual(0) = r_j.
template <class Residual>
LinearSolution solve_affine(std::size_t unknowns, Residual&& residual) {
    Vector r0 = residual(Vector(unknowns));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < unknowns; ++j) cols.push_back(residual(unit_vector(unknowns, j)) - r0);
    return solve_certified(Matrix::from_columns(cols, r0.size()), Rational(-1) * r0);
}

inline Matrix reshape(const Vector& x, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = x[r * cols + c];
    return m;
}

}  // namespace detail

// Normalizes an extension (M, i, pi) to standard form through a section s.
// Without a section one is solved for; if none exists the extension is not
// split and an input error says so.
inline Decomposition decompose(const HomAlgebra& total, const Matrix& inclusion, const Matrix& projection,
                               const std::optional<Matrix>& section = std::nullopt, const std::string& l_name = "L",
                               const std::string& v_name = "V") {
    total.validate();
    const std::size_t N = total.dim(), m = inclusion.cols(), n = projection.rows();
    if (inclusion.rows() != N || projection.cols() != N || n + m != N)
        throw InputError("decompose: inclusion must be N x m and projection n x N with n + m = N");
    if (!(projection * inclusion).is_zero()) throw InputError("decompose: projection o inclusion is not zero");
    if (rank(inclusion) != m) throw InputError("decompose: inclusion is not injective");
    if (rank(projection) != n) throw InputError("decompose: projection is not surjective");
    const Matrix& aM = total.twist.matrix();

    auto aV = detail::solve_columns(inclusion, aM * inclusion);
    if (!aV) throw InputError("decompose: the twist map does not preserve the image of the inclusion");
    auto right_inv = detail::solve_columns(projection, Matrix::identity(n));
    const Matrix aL = projection * aM * *right_inv;

    auto label = [&](std::size_t i) { return total.space.labels[i]; };
    for (std::size_t j = 0; j < m; ++j) {
        Vector iv = inclusion.column(j);
        for (std::size_t a = 0; a < N; ++a) {
            Vector e = unit_vector(N, a);
            if (!is_zero(projection * total.mul(e, iv)))
                throw InputError("decompose: kernel of the projection is not an ideal, d(" + label(a) + ", i(v" +
                                 std::to_string(j + 1) + ")) leaves it");
            if (!is_zero(projection * total.mul(iv, e)))
                throw InputError("decompose: kernel of the projection is not an ideal, d(i(v" + std::to_string(j + 1) +
                                 "), " + label(a) + ") leaves it");
        }
    }

    Matrix s;
    if (section) {
        s = *section;
        if (s.rows() != N || s.cols() != n) throw InputError("decompose: section must be N x n");
        Matrix ps = projection * s;
        for (std::size_t j = 0; j < n; ++j)
            if (ps.column(j) != unit_vector(n, j))
                throw InputError("decompose: section fails projection o s = id at column " + std::to_string(j + 1));
        Matrix diff = s * aL - aM * s;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(diff.column(j)))
                throw InputError("decompose: section does not commute with the twist maps at column " + std::to_string(j + 1));
    } else {
        // unknowns s(r, c) at r * n + c
        LinearSolution sol = detail::solve_affine(N * n, [&](const Vector& x) {
            Matrix t = detail::reshape(x, N, n);
            Matrix a = projection * t - Matrix::identity(n), b = t * aL - aM * t;
            Vector out;
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) out.push_back(a(r, c));
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) out.push_back(b(r, c));
            return out;
        });
        if (!sol) throw InputError("decompose: extension is not split (no section commutes with the twist maps)");
        s = detail::reshape(*sol.x, N, n);
    }

    std::vector<Vector> cols = basis_images(s);
    for (const auto& c : basis_images(inclusion)) cols.push_back(c);
    Matrix phi = Matrix::from_columns(cols, N);
    BasedSpace labels = total.space;
    if (!phi.is_identity()) {
        labels.labels.clear();
        for (std::size_t j = 0; j < n; ++j) labels.labels.push_back("l" + std::to_string(j + 1));
        for (std::size_t j = 0; j < m; ++j) labels.labels.push_back("v" + std::to_string(j + 1));
    }
    HomAlgebra std_total = pull_back(total, phi, labels);
    SplitComponents parts = split_components(std_total, n, total.kind, l_name, v_name);
    ExtensionAlgebra e = ExtensionAlgebra::standard(parts.rep, parts.theta);
    e.total.name = total.name;
    if (e.total.product != std_total.product || e.total.twist != std_total.twist)
        throw InternalError("decompose: components do not reassemble the product");
    if (!is_morphism(phi, e.total, total)) throw InternalError("decompose: [s | i] is not an isomorphism");
    return {std::move(e), std::move(s), std::move(phi)};
}

inline Decomposition decompose(const ExtensionAlgebra& e, const std::optional<Matrix>& section = std::nullopt) {
    return decompose(e.total, e.inclusion, e.projection, section, e.rep.L.name, e.rep.V.name);
}

struct ClassifyReport {
    bool trivial = false;     // lambda = theta = 0
    bool central = false;     // lambda = mu = 0
    bool abelian = false;     // mu = 0
    bool semidirect = false;  // theta = 0
    bool central_direct = false;  // d(i(V), M) = d(M, i(V)) = 0
    // Some section has an ideal as image. Decided only for mu = 0, where the
    // condition is linear in the section.
    std::optional<bool> trivial_by_ideal;
    std::optional<Matrix> ideal_section;  // h with s(x) = x + h(x)
    std::vector<std::string> notes;
};

inline ClassifyReport classify(const ExtensionAlgebra& e) {
    ClassifyReport r;
    const RepresentationData& rep = e.rep;
    const bool no_lambda = rep.lambda_l.is_zero() && rep.lambda_r.is_zero();
    const bool no_mu = rep.V.product.is_zero();
    r.abelian = no_mu;
    r.semidirect = e.theta.is_zero();
    r.trivial = no_lambda && r.semidirect;
    r.central = no_lambda && no_mu;

    const std::size_t N = e.total.dim();
    r.central_direct = true;
    for (std::size_t j = 0; j < e.m() && r.central_direct; ++j)
        for (std::size_t a = 0; a < N; ++a) {
            Vector iv = e.inclusion.column(j), x = unit_vector(N, a);
            if (!is_zero(e.total.mul(iv, x)) || !is_zero(e.total.mul(x, iv))) {
                r.central_direct = false;
                break;
            }
        }
    if (r.central != r.central_direct) throw InternalError("classify: component and direct central tests disagree");

    if (!no_mu) {
        r.notes.push_back("trivial by ideal undecided: the ideal condition is quadratic in the section when mu != 0");
    } else if (!no_lambda) {
        r.trivial_by_ideal = false;
    } else {
        // theta = h o delta with h alpha = alpha_V h
        const std::size_t n = e.n(), m = e.m();
        const Matrix& a = rep.L.twist.matrix();
        const Matrix& av = rep.V.twist.matrix();
        LinearSolution sol = detail::solve_affine(m * n, [&](const Vector& x) {
            Matrix h = detail::reshape(x, m, n);
            Vector out = (postcompose(h, rep.L.product) - e.theta).flatten();
            Matrix c = h * a - av * h;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) out.push_back(c(i, j));
            return out;
        });
        r.trivial_by_ideal = sol.x.has_value();
        if (sol.x) r.ideal_section = detail::reshape(*sol.x, m, n);
    }
    if (r.trivial_by_ideal && *r.trivial_by_ideal != r.trivial)
        r.notes.push_back(std::string("trivial by ideal (") + (*r.trivial_by_ideal ? "yes" : "no") +
                          ") differs from trivial by components (" + (r.trivial ? "yes" : "no") +
                          "); the component test depends on the section");
    return r;
}

struct PerturbResult {
    ExtensionAlgebra extension;  // d' = d + [d, h]
    Matrix phi;                  // x + v -> x + h(x) + v
    bool identity_holds = false;  // phi o d' = d(phi, phi)
    bool diagram_commutes = false;
    std::vector<Witness> failing_witnesses;
};

inline PerturbResult coboundary_perturb(const ExtensionAlgebra& e, const Matrix& h) {
    const std::size_t n = e.n(), m = e.m(), N = n + m;
    if (h.rows() != m || h.cols() != n) throw InputError("coboundary_perturb: h must map L to V");
    if (h * e.rep.L.twist.matrix() != e.rep.V.twist.matrix() * h)
        throw InputError("coboundary_perturb: h does not commute with the twist maps");
    Matrix H(N, N);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) H(n + i, j) = h(i, j);
    const Cochain& d = e.total.product;
    Cochain dp = d + bracket(d, linear_cochain(H), e.total.twist, bracket_kind_for(e.total.kind));

    PerturbResult r;
    r.phi = Matrix::identity(N) + H;
    std::vector<Matrix> maps{r.phi, r.phi};
    Cochain defect = precompose(d, maps) - postcompose(r.phi, dp);
    for (const auto& [t, v] : defect.entries()) r.failing_witnesses.push_back({"Phi o d' = d(Phi, Phi)", t, v});
    r.identity_holds = defect.is_zero();
    r.diagram_commutes = r.phi * e.inclusion == e.inclusion && e.projection * r.phi == e.projection;

    HomAlgebra total = e.total;
    total.product = dp;
    SplitComponents parts = split_components(total, n, total.kind, e.rep.L.name, e.rep.V.name);
    r.extension = ExtensionAlgebra::standard(parts.rep, parts.theta);
    r.extension.total.name = e.total.name;
    return r;
}

struct AbelianEquivalence {
    std::optional<Matrix> h;  // Phi = [[psi, 0], [h, phi]]
    std::size_t rank = 0;     // on failure augmented_rank > rank
    std::size_t augmented_rank = 0;
};

// Morphism Phi = [[psi, 0], [h, phi]] from e1 to e2, solved linearly for h.
inline AbelianEquivalence equivalent_abelian(const ExtensionAlgebra& e1, const ExtensionAlgebra& e2, const Matrix& psi,
                                             const Matrix& phi) {
    if (!e1.rep.V.product.is_zero() || !e2.rep.V.product.is_zero())
        throw InputError("equivalent_abelian: both extensions must be abelian (mu = 0)");
    const std::size_t n = e1.n(), m = e1.m();
    if (e2.n() != n || e2.m() != m) throw InputError("equivalent_abelian: extensions have different dimensions");
    if (psi.rows() != n || psi.cols() != n || phi.rows() != m || phi.cols() != m)
        throw InputError("equivalent_abelian: psi must be n x n and phi m x m");
    if (!inverse(psi) || !is_morphism(psi, e1.rep.L, e2.rep.L))
        throw InputError("equivalent_abelian: psi is not an isomorphism of the base algebras");
    if (!inverse(phi) || !is_morphism(phi, e1.rep.V, e2.rep.V))
        throw InputError("equivalent_abelian: phi is not an isomorphism of the modules");

    const std::size_t N = n + m;
    auto assemble = [&](const Matrix& h) {
        Matrix P(N, N);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P(i, j) = psi(i, j);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) P(n + i, j) = h(i, j);
            for (std::size_t j = 0; j < m; ++j) P(n + i, n + j) = phi(i, j);
        }
        return P;
    };
    auto residual = [&](const Matrix& h) {
        Matrix P = assemble(h);
        std::vector<Matrix> maps{P, P};
        Vector out = (precompose(e2.total.product, maps) - postcompose(P, e1.total.product)).flatten();
        Matrix c = P * e1.total.twist.matrix() - e2.total.twist.matrix() * P;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) out.push_back(c(i, j));
        return out;
    };
    LinearSolution sol = detail::solve_affine(m * n, [&](const Vector& x) { return residual(detail::reshape(x, m, n)); });
    AbelianEquivalence r{std::nullopt, sol.rank, sol.augmented_rank};
    if (sol.x) {
        Matrix h = detail::reshape(*sol.x, m, n);
        if (!is_zero(residual(h))) throw InternalError("equivalent_abelian: solution fails substitution");
        r.h = std::move(h);
    }
    return r;
}

inline AbelianEquivalence equivalent_abelian(const ExtensionAlgebra& e1, const ExtensionAlgebra& e2) {
    return equivalent_abelian(e1, e2, Matrix::identity(e1.n()), Matrix::identity(e1.m()));
}

// Z^2, B^2, H^2 of the representation complex.
inline CohomologyDims ext_group_dims(const RepresentationData& rep) {
    return cohomology_dims(complex_build(rep, 2)).degrees.at(2);
}

// d' with mu(d a, beta^k b) + mu(beta^k a, d b) = d'(mu(a, b)), if any.
inline std::optional<Matrix> is_quasiderivation(const HomAlgebra& V, const Matrix& d, unsigned k) {
    V.validate();
    const std::size_t m = V.dim();
    if (d.rows() != m || d.cols() != m) throw InputError("is_quasiderivation: map must be an endomorphism of V");
    const Matrix bk = V.twist.matrix().power(k);
    std::vector<Matrix> left{d, bk}, right{bk, d};
    const Cochain lhs = precompose(V.product, left) + precompose(V.product, right);
    LinearSolution sol = detail::solve_affine(m * m, [&](const Vector& x) {
        return (postcompose(detail::reshape(x, m, m), V.product) - lhs).flatten();
    });
    if (!sol.x) return std::nullopt;
    Matrix dp = detail::reshape(*sol.x, m, m);
    if (postcompose(dp, V.product) != lhs) throw InternalError("is_quasiderivation: solution fails substitution");
    return dp;
}

// Semidirect sum of hom-Lie algebras: lambda_l(x, w) = lambda(x) w and
// lambda_r(v, y) = -lambda(y) v, theta = 0.
inline ExtensionAlgebra semidirect_lie(const HomAlgebra& L, const HomAlgebra& V, const std::vector<Matrix>& lambda) {
    if (L.kind != StructureKind::hom_lie || V.kind != StructureKind::hom_lie)
        throw InputError("semidirect_lie: both algebras must be hom-lie");
    const std::size_t n = L.dim(), m = V.dim();
    if (lambda.size() != n) throw InputError("semidirect_lie: need one action matrix per basis vector of L");
    RepresentationData rep = RepresentationData::make(L, V);
    for (std::size_t x = 0; x < n; ++x) {
        if (lambda[x].rows() != m || lambda[x].cols() != m)
            throw InputError("semidirect_lie: action matrices must be endomorphisms of V");
        for (std::size_t v = 0; v < m; ++v) {
            rep.set_left(x, v, lambda[x].column(v));
            rep.set_right(v, x, Rational(-1) * lambda[x].column(v));
        }
    }
    VerificationReport vr = verify_representation(rep);
    if (!vr.holds) {
        const Witness& w = vr.failing_witnesses.front();
        std::string t;
        for (std::size_t i = 0; i < w.tuple.size(); ++i) t += (i ? "," : "") + std::to_string(w.tuple[i] + 1);
        throw VerificationError("semidirect_lie: representation fails " + w.condition + " at (" + t + ")");
    }
    ExtensionAlgebra e = build_extension(rep, Cochain(n, m, 2));
    for (std::size_t x = 0; x < n; ++x)
        if (!is_quasiderivation(V, lambda[x], 1))
            e.notes.push_back("lambda(" + L.space.labels[x] + ") is not a twist quasiderivation of V");
    return e;
}

}  // namespace homnr
