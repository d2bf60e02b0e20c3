#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homnr/bracket.hpp"
#include "homnr/cochain.hpp"
#include "homnr/linalg.hpp"

namespace homnr {

enum class CochainFlavor { beta_equivariant, alternating, symmetric_leibniz };

inline std::string to_string(CochainFlavor f) {
    switch (f) {
        case CochainFlavor::beta_equivariant: return "beta-equivariant";
        case CochainFlavor::alternating: return "alternating";
        case CochainFlavor::symmetric_leibniz: return "symmetric-leibniz";
    }
    return "?";
}

// Which k-cochains Q^dom x ... -> Q^cod belong to a cochain space:
// out o f == f * in, plus alternation or the pair condition with `pair_with`.
struct CochainSpaceSpec {
    std::size_t dom = 0;
    std::size_t cod = 0;
    Matrix in;   // twist on arguments (dom x dom)
    Matrix out;  // twist on values (cod x cod)
    CochainFlavor flavor = CochainFlavor::beta_equivariant;
    std::optional<Cochain> pair_with;  // arity-n product on the argument space, symmetric flavor only

    static CochainSpaceSpec adjoint(const TwistMap& beta, CochainFlavor flavor, std::optional<Cochain> d = std::nullopt) {
        return {beta.dim(), beta.dim(), beta.matrix(), beta.matrix(), flavor, std::move(d)};
    }
};

struct CochainBasis {
    std::size_t arity = 0;
    CochainFlavor flavor = CochainFlavor::beta_equivariant;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    Subspace space;  // in flattened coordinates
    std::vector<Cochain> members;

    std::size_t dim() const { return members.size(); }
    bool contains(const Cochain& f) const { return space.contains(f.flatten()); }

    static CochainBasis from_subspace(Subspace s, std::size_t dom, std::size_t cod, std::size_t arity, CochainFlavor flavor) {
        CochainBasis b;
        b.arity = arity;
        b.flavor = flavor;
        b.domain_dim = dom;
        b.codomain_dim = cod;
        for (const auto& v : s.basis()) b.members.push_back(Cochain::from_flat(dom, cod, arity, v));
        b.space = std::move(s);
        return b;
    }
};

namespace detail {

inline std::size_t coord(const Index& t, std::size_t o, std::size_t dom, std::size_t cod) {
    return tuple_rank(t, dom) * cod + o;
}

// Row of the functional f |-> f(args)[o], with args given sparsely.
inline void evaluation_row(std::map<std::size_t, Rational>& row, const Rational& scale,
                           const std::vector<const SparseVec*>& args, std::size_t o, std::size_t dom, std::size_t cod) {
    for (const auto* a : args)
        if (a->empty()) return;
    const std::size_t k = args.size();
    std::vector<std::size_t> pos(k, 0);
    Index t(k);
    while (true) {
        Rational c = scale;
        for (std::size_t s = 0; s < k; ++s) {
            t[s] = (*args[s])[pos[s]].first;
            c *= (*args[s])[pos[s]].second;
        }
        row[coord(t, o, dom, cod)] += c;
        std::size_t s = k;
        bool done = true;
        while (s > 0) {
            --s;
            if (++pos[s] < args[s]->size()) {
                done = false;
                break;
            }
            pos[s] = 0;
        }
        if (done) return;
    }
}

inline SparseRow finish_row(const std::map<std::size_t, Rational>& row) {
    SparseRow out;
    for (const auto& [c, x] : row)
        if (!x.is_zero()) out.emplace_back(c, x);
    return out;
}

inline void add_equivariance_rows(RowEchelon& sys, const CochainSpaceSpec& spec, std::size_t k) {
    std::vector<SparseVec> in_cols(spec.dom);
    for (std::size_t j = 0; j < spec.dom; ++j) in_cols[j] = sparse_of(spec.in.column(j));
    for_each_tuple(spec.dom, k, [&](const Index& t) {
        std::vector<const SparseVec*> args;
        for (std::size_t x : t) args.push_back(&in_cols[x]);
        for (std::size_t o = 0; o < spec.cod; ++o) {
            std::map<std::size_t, Rational> row;
            for (std::size_t o2 = 0; o2 < spec.cod; ++o2)
                if (!spec.out(o, o2).is_zero()) row[coord(t, o2, spec.dom, spec.cod)] += spec.out(o, o2);
            evaluation_row(row, Rational(-1), args, o, spec.dom, spec.cod);
            sys.add_row(finish_row(row));
        }
    });
}

inline void add_alternation_rows(RowEchelon& sys, const CochainSpaceSpec& spec, std::size_t k) {
    if (k < 2) return;
    for_each_tuple(spec.dom, k, [&](const Index& t) {
        for (std::size_t s = 0; s + 1 < k; ++s) {
            Index u = t;
            std::swap(u[s], u[s + 1]);
            if (u < t) continue;  // each unordered pair once; u == t gives 2f = 0
            for (std::size_t o = 0; o < spec.cod; ++o) {
                std::map<std::size_t, Rational> row;
                row[coord(t, o, spec.dom, spec.cod)] += 1;
                row[coord(u, o, spec.dom, spec.cod)] += 1;
                sys.add_row(finish_row(row));
            }
        }
    });
}

// f(.., G at slot i, ..) + f(.., G at slot j, ..) = 0 where G = g(basis tuple)
// and the remaining arguments are beta^(n-1) of basis vectors, in order.
inline void add_pair_rows(RowEchelon& sys, const CochainSpaceSpec& spec, std::size_t k) {
    if (k < 2 || !spec.pair_with) return;
    const Cochain& g = *spec.pair_with;
    const std::size_t n = g.arity();
    const Matrix twist = spec.in.power(static_cast<unsigned>(n - 1));
    std::vector<SparseVec> tw(spec.dom);
    for (std::size_t j = 0; j < spec.dom; ++j) tw[j] = sparse_of(twist.column(j));
    for (const auto& [u, gv] : g.entries()) {
        SparseVec gs = sparse_of(gv);
        for_each_tuple(spec.dom, k - 1, [&](const Index& w) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    auto args_with = [&](std::size_t slot) {
                        std::vector<const SparseVec*> args(k);
                        std::size_t r = 0;
                        for (std::size_t s = 0; s < k; ++s) args[s] = s == slot ? &gs : &tw[w[r++]];
                        return args;
                    };
                    auto ai = args_with(i), aj = args_with(j);
                    for (std::size_t o = 0; o < spec.cod; ++o) {
                        std::map<std::size_t, Rational> row;
                        evaluation_row(row, Rational(1), ai, o, spec.dom, spec.cod);
                        evaluation_row(row, Rational(1), aj, o, spec.dom, spec.cod);
                        sys.add_row(finish_row(row));
                    }
                }
        });
    }
}

}  // namespace detail

// Subspace of k-cochains (flattened coordinates) cut out by the constraints of a CochainSpaceSpec.
inline Subspace cochain_subspace(const CochainSpaceSpec& spec, std::size_t k) {
    const std::size_t n = ipow(spec.dom, k) * spec.cod;
    RowEchelon sys(n);
    detail::add_equivariance_rows(sys, spec, k);
    if (spec.flavor == CochainFlavor::alternating) detail::add_alternation_rows(sys, spec, k);
    if (spec.flavor == CochainFlavor::symmetric_leibniz) detail::add_pair_rows(sys, spec, k);
    return Subspace::span(sys.null_space(), n);
}

inline CochainBasis cochain_basis(const CochainSpaceSpec& spec, std::size_t k) {
    return CochainBasis::from_subspace(cochain_subspace(spec, k), spec.dom, spec.cod, k, spec.flavor);
}

inline CochainBasis beta_cochain_basis(const BasedSpace& space, const TwistMap& beta, std::size_t k) {
    if (beta.dim() != space.dim) throw InputError("twist map dimension does not match space");
    if (k == 0) throw InputError("cochain arity must be at least 1");
    return cochain_basis(CochainSpaceSpec::adjoint(beta, CochainFlavor::beta_equivariant), k);
}

inline CochainBasis alternating_basis(const BasedSpace& space, const TwistMap& beta, std::size_t k) {
    if (beta.dim() != space.dim) throw InputError("twist map dimension does not match space");
    if (k == 0) throw InputError("cochain arity must be at least 1");
    return cochain_basis(CochainSpaceSpec::adjoint(beta, CochainFlavor::alternating), k);
}

inline CochainBasis symmetric_leibniz_basis(const BasedSpace& space, const TwistMap& beta, std::size_t k, const Cochain& d) {
    if (beta.dim() != space.dim) throw InputError("twist map dimension does not match space");
    if (k == 0) throw InputError("cochain arity must be at least 1");
    if (d.arity() != 2) throw InputError("symmetric_leibniz_basis: product must have arity 2");
    return cochain_basis(CochainSpaceSpec::adjoint(beta, CochainFlavor::symmetric_leibniz, d), k);
}

inline bool is_alternating(const Cochain& f) {
    bool ok = true;
    for_each_tuple(f.domain_dim(), f.arity(), [&](const Index& t) {
        if (!ok) return;
        for (std::size_t s = 0; s + 1 < t.size(); ++s) {
            Index u = t;
            std::swap(u[s], u[s + 1]);
            if (f.value(u) != Rational(-1) * f.value(t)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

// Inserting g(basis tuple) at slot i versus slot j of f flips the sign, with
// beta^(n-1) on the other arguments. Checked on basis tuples.
inline bool is_pair_cochain(const Cochain& f, const Cochain& g, const TwistMap& beta) {
    if (f.arity() == 0 || g.arity() == 0) throw InputError("is_pair_cochain: arities must be at least 1");
    if (g.codomain_dim() != f.domain_dim() || g.domain_dim() != beta.dim() || f.domain_dim() != beta.dim())
        throw InputError("is_pair_cochain: dimension mismatch");
    const std::size_t k = f.arity(), dim = beta.dim();
    if (k < 2) return true;
    const Matrix twist = beta.matrix().power(static_cast<unsigned>(g.arity() - 1));
    bool ok = true;
    for (const auto& [u, gv] : g.entries()) {
        for_each_tuple(dim, k - 1, [&](const Index& w) {
            if (!ok) return;
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j) {
                    auto args_with = [&](std::size_t slot) {
                        std::vector<Vector> args;
                        std::size_t r = 0;
                        for (std::size_t s = 0; s < k; ++s) args.push_back(s == slot ? gv : twist.column(w[r++]));
                        return args;
                    };
                    if (!is_zero(f.evaluate(args_with(i)) + f.evaluate(args_with(j)))) ok = false;
                }
        });
        if (!ok) break;
    }
    return ok;
}

// Name of the first constraint of `spec` that f violates, if any.
inline std::optional<std::string> violated_constraint(const CochainSpaceSpec& spec, const Cochain& f) {
    if (f.domain_dim() != spec.dom || f.codomain_dim() != spec.cod) return "dimension";
    std::vector<Matrix> ins(f.arity(), spec.in);
    if (postcompose(spec.out, f) != precompose(f, ins)) return "twist equivariance (out o f = f * in)";
    if (spec.flavor == CochainFlavor::alternating && !is_alternating(f)) return "alternation";
    if (spec.flavor == CochainFlavor::symmetric_leibniz && spec.pair_with &&
        !is_pair_cochain(f, *spec.pair_with, TwistMap(spec.in)))
        return "pair condition with the product";
    return std::nullopt;
}

}  // namespace homnr
