#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homnr/algebra.hpp"
#include "homnr/fixtures.hpp"
#include "support/builders.hpp"
#include "support/random.hpp"

namespace homnr::gen {

// A multiplicative algebra with identity twist plus a family of diagonal
// algebra endomorphisms usable as Yau twists.
struct BaseAlgebra {
    std::string name;
    std::size_t dim;
    Cochain product;
    StructureKind kind;  // strongest kind it satisfies
    std::function<Vector(Rng&)> endomorphism;
};

inline Rational small_scalar(Rng& rng) {
    static const long choices[] = {1, 1, 2, -1, 3, -2};
    return Rational(choices[rng() % 6]);
}

inline Cochain opposite(const Cochain& d) {
    Cochain op(d.domain_dim(), d.codomain_dim(), 2);
    for (const auto& [t, v] : d.entries()) op.set({t[1], t[0]}, v);
    return op;
}

inline std::vector<BaseAlgebra> base_algebras() {
    using detail::product_from;
    std::vector<BaseAlgebra> out;
    auto any_diag = [](std::size_t n) {
        return [n](Rng& rng) {
            Vector v(n);
            for (auto& x : v) x = small_scalar(rng);
            return v;
        };
    };
    out.push_back({"abelian2", 2, Cochain(2, 2, 2), StructureKind::hom_lie, any_diag(2)});
    out.push_back({"abelian3", 3, Cochain(3, 3, 2), StructureKind::hom_lie, any_diag(3)});
    out.push_back({"r2", 2, product_from(2, {{1, 2, 2, 1}, {2, 1, 2, -1}}), StructureKind::hom_lie,
                   [](Rng& rng) { return Vector{1, small_scalar(rng)}; }});
    out.push_back({"heis", 3, fixture_heis().product, StructureKind::hom_lie, [](Rng& rng) {
                       Rational a = small_scalar(rng), b = small_scalar(rng);
                       return Vector{a, b, a * b};
                   }});
    out.push_back({"sl2", 3, sl2().product, StructureKind::hom_lie, [](Rng& rng) {
                       Rational a = small_scalar(rng);
                       return Vector{a, Rational(1) / a, 1};
                   }});
    out.push_back({"so3", 3, product_from(3, {{1, 2, 3, 1}, {2, 1, 3, -1}, {2, 3, 1, 1}, {3, 2, 1, -1}, {3, 1, 2, 1}, {1, 3, 2, -1}}),
                   StructureKind::hom_lie, [](Rng&) { return Vector{1, 1, 1}; }});
    out.push_back({"lz2", 2, fixture_lz2().product, StructureKind::symmetric_leibniz, [](Rng& rng) {
                       Rational a = small_scalar(rng);
                       return Vector{a * a, a};
                   }});
    out.push_back({"central3", 3, product_from(3, {{1, 1, 3, 1}, {1, 2, 3, 2}, {2, 1, 3, -1}, {2, 2, 3, 1}}),
                   StructureKind::symmetric_leibniz, [](Rng& rng) {
                       Rational a = small_scalar(rng);
                       return Vector{a, a, a * a};
                   }});
    out.push_back({"lambda2", 2, product_from(2, {{1, 2, 2, 1}}), StructureKind::left_leibniz,
                   [](Rng& rng) { return Vector{1, small_scalar(rng)}; }});
    out.push_back({"lambda2+1", 3, product_from(3, {{1, 2, 2, 1}}), StructureKind::left_leibniz,
                   [](Rng& rng) { return Vector{1, small_scalar(rng), small_scalar(rng)}; }});
    return out;
}

inline bool satisfies(StructureKind strongest, StructureKind wanted) {
    if (wanted == StructureKind::plain || strongest == wanted) return true;
    switch (strongest) {
        case StructureKind::hom_lie: return true;
        case StructureKind::symmetric_leibniz:
            return wanted == StructureKind::left_leibniz || wanted == StructureKind::right_leibniz;
        default: return false;
    }
}

// d'(x,y) = P d(P^-1 x, P^-1 y), beta' = P beta P^-1.
inline HomAlgebra change_basis(const HomAlgebra& a, const Matrix& p) {
    Matrix pinv = *inverse(p);
    std::vector<Matrix> maps{pinv, pinv};
    HomAlgebra b = a;
    b.product = postcompose(p, precompose(a.product, maps));
    b.twist = TwistMap(p * a.twist.matrix() * pinv);
    return b;
}

// Random multiplicative algebra of the requested kind and dimension: a base
// algebra, Yau-twisted by a diagonal endomorphism, in a random basis.
inline HomAlgebra random_algebra(Rng& rng, StructureKind kind, std::size_t dim, bool change_of_basis = true) {
    std::vector<BaseAlgebra> pool;
    for (auto& b : base_algebras()) {
        StructureKind strongest = b.kind;
        Cochain d = b.product;
        if (kind == StructureKind::right_leibniz && b.kind == StructureKind::left_leibniz) {
            d = opposite(d);
            strongest = StructureKind::right_leibniz;
        }
        if (b.dim == dim && satisfies(strongest, kind)) {
            b.product = d;
            b.kind = strongest;
            pool.push_back(b);
        }
    }
    const BaseAlgebra& base = pool[rng() % pool.size()];
    Matrix beta = Matrix::diagonal(base.endomorphism(rng));
    HomAlgebra a = HomAlgebra::make(base.name, BasedSpace::standard(dim), postcompose(beta, base.product), TwistMap(beta), kind);
    if (change_of_basis) a = change_basis(a, random_invertible(rng, dim, 4));
    return a;
}

// The same algebra with a random sparse change to the product.
inline HomAlgebra perturb(Rng& rng, const HomAlgebra& a) {
    HomAlgebra b = a;
    Cochain delta(a.dim(), a.dim(), 2);
    Index t{rng() % a.dim(), rng() % a.dim()};
    delta.set(t, random_vector(rng, a.dim()));
    b.product += delta;
    return b;
}

}  // namespace homnr::gen
