#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homnr/cochain.hpp"
#include "homnr/errors.hpp"

namespace homnr {

enum class BracketKind { left, right, lie };

inline std::string to_string(BracketKind k) {
    switch (k) {
        case BracketKind::left: return "left";
        case BracketKind::right: return "right";
        case BracketKind::lie: return "lie";
    }
    return "?";
}

inline BracketKind parse_bracket_kind(const std::string& s) {
    if (s == "left") return BracketKind::left;
    if (s == "right") return BracketKind::right;
    if (s == "lie") return BracketKind::lie;
    throw InputError("kind: unknown bracket kind \"" + s + "\" (expected left, right or lie)");
}

// A (p,q)-unshuffle: perm[0..p) and perm[p..p+q) are increasing. Values are
// 1-based positions. sign is the parity of the permutation.
struct Shuffle {
    std::vector<std::size_t> perm;
    int sign = 1;

    friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

inline int permutation_sign(const std::vector<std::size_t>& perm) {
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

// All C(p+q, p) shuffles, ordered lexicographically by their head run.
inline std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    std::vector<Shuffle> out;
    std::vector<std::size_t> head(p);
    for (std::size_t i = 0; i < p; ++i) head[i] = i + 1;
    while (true) {
        Shuffle s;
        std::vector<bool> used(n + 1, false);
        for (std::size_t h : head) {
            s.perm.push_back(h);
            used[h] = true;
        }
        for (std::size_t v = 1; v <= n; ++v)
            if (!used[v]) s.perm.push_back(v);
        s.sign = permutation_sign(s.perm);
        out.push_back(std::move(s));
        // next p-subset in lexicographic order
        std::size_t i = p;
        while (i > 0 && head[i - 1] == n - p + i) --i;
        if (i == 0) break;
        ++head[i - 1];
        for (std::size_t j = i; j < p; ++j) head[j] = head[j - 1] + 1;
    }
    return out;
}

// Slot (1-based) of f that receives g's value: the rank at which sigma(p)
// (left) or sigma(1) (right) merges into the increasing tail.
inline std::size_t insertion_rank(const Shuffle& s, std::size_t p, BracketKind kind) {
    if (kind == BracketKind::lie) throw InputError("insertion_rank: the lie product always inserts at slot 1");
    if (p == 0 || p > s.perm.size()) throw InputError("insertion_rank: head length out of range");
    const std::size_t key = kind == BracketKind::left ? s.perm[p - 1] : s.perm[0];
    std::size_t i = 1;
    for (std::size_t j = p; j < s.perm.size(); ++j)
        if (s.perm[j] < key) ++i;
    return i;
}

namespace detail {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVec sparse_of(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

// f on sparse arguments: expand the product of supports when it is smaller
// than the number of stored entries, otherwise scan the entries.
inline void accumulate_eval(Vector& out, const Rational& coeff, const Cochain& f, const std::vector<const SparseVec*>& args) {
    std::size_t product = 1;
    for (const auto* a : args) {
        if (a->empty()) return;
        product *= a->size();
    }
    if (product <= f.entries().size()) {
        Index t(args.size());
        std::vector<std::size_t> pos(args.size(), 0);
        while (true) {
            Rational c = coeff;
            for (std::size_t s = 0; s < args.size(); ++s) {
                t[s] = (*args[s])[pos[s]].first;
                c *= (*args[s])[pos[s]].second;
            }
            if (const Vector* v = f.find(t)) add_scaled(out, c, *v);
            std::size_t s = args.size();
            while (s > 0) {
                --s;
                if (++pos[s] < args[s]->size()) break;
                pos[s] = 0;
                if (s == 0) return;
            }
            if (args.empty()) return;
        }
    }
    for (const auto& [t, v] : f.entries()) {
        Rational c = coeff;
        for (std::size_t s = 0; s < args.size() && !c.is_zero(); ++s) {
            Rational x;
            for (const auto& [i, a] : *args[s])
                if (i == t[s]) {
                    x = a;
                    break;
                }
            c *= x;
        }
        if (!c.is_zero()) add_scaled(out, c, v);
    }
}

inline void require_engine_shapes(const Cochain& f, const Cochain& g, const TwistMap& beta) {
    if (f.arity() == 0 || g.arity() == 0) throw InputError("bracket engine requires arity >= 1");
    const std::size_t n = beta.dim();
    if (f.domain_dim() != n || g.domain_dim() != n || g.codomain_dim() != n)
        throw InputError("bracket engine: cochains and twist map must share one space");
}

}  // namespace detail

// Restricts which basis indices may appear in result tuples. Null means all.
using IndexFilter = const std::vector<std::size_t>*;

// f o g. For left/right: sum over Sh(n, m-1) of (-1)^(i-1) eps(sigma) f(...)
// with g's value in slot i = insertion_rank and beta^(n-1) on every other
// argument in tail order. For lie: g always in slot 1 with coefficient eps.
inline Cochain circle(const Cochain& f, const Cochain& g, const TwistMap& beta, BracketKind kind,
                      IndexFilter allowed = nullptr) {
    detail::require_engine_shapes(f, g, beta);
    const std::size_t m = f.arity(), n = g.arity(), dim = beta.dim();
    const std::size_t total = m + n - 1;
    Cochain out(dim, f.codomain_dim(), total);
    if (f.is_zero() || g.is_zero()) return out;

    struct Term {
        std::vector<std::size_t> head;  // 0-based positions feeding g
        std::vector<std::size_t> tail;  // 0-based positions of the other arguments
        std::size_t slot;               // 0-based slot of f receiving g
        int sign;
    };
    std::vector<Term> terms;
    for (const auto& s : shuffles(n, m - 1)) {
        Term t;
        for (std::size_t j = 0; j < n; ++j) t.head.push_back(s.perm[j] - 1);
        for (std::size_t j = n; j < total; ++j) t.tail.push_back(s.perm[j] - 1);
        if (kind == BracketKind::lie) {
            t.slot = 0;
            t.sign = s.sign;
        } else {
            std::size_t i = insertion_rank(s, n, kind);
            t.slot = i - 1;
            t.sign = (i - 1) % 2 == 0 ? s.sign : -s.sign;
        }
        terms.push_back(std::move(t));
    }

    const Matrix twist = beta.matrix().power(static_cast<unsigned>(n - 1));
    std::vector<detail::SparseVec> twisted(dim);
    for (std::size_t j = 0; j < dim; ++j) twisted[j] = detail::sparse_of(twist.column(j));

    std::vector<std::size_t> all;
    if (allowed == nullptr) {
        for (std::size_t j = 0; j < dim; ++j) all.push_back(j);
        allowed = &all;
    }
    const std::size_t na = allowed->size();
    Index gidx(n);
    std::vector<const detail::SparseVec*> args(m);
    for_each_tuple(na, total, [&](const Index& pos) {
        Index a(total);
        for (std::size_t j = 0; j < total; ++j) a[j] = (*allowed)[pos[j]];
        Vector acc(f.codomain_dim());
        for (const auto& term : terms) {
            for (std::size_t j = 0; j < n; ++j) gidx[j] = a[term.head[j]];
            const Vector* gv = g.find(gidx);
            if (gv == nullptr) continue;
            detail::SparseVec gs = detail::sparse_of(*gv);
            std::size_t ti = 0;
            for (std::size_t slot = 0; slot < m; ++slot)
                args[slot] = slot == term.slot ? &gs : &twisted[a[term.tail[ti++]]];
            detail::accumulate_eval(acc, Rational(term.sign), f, args);
        }
        out.set(a, std::move(acc));
    });
    return out;
}

inline int graded_sign(std::size_t m, std::size_t n) { return ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1; }

// [f,g] = f o g - (-1)^((m-1)(n-1)) g o f
inline Cochain bracket(const Cochain& f, const Cochain& g, const TwistMap& beta, BracketKind kind,
                       IndexFilter allowed = nullptr) {
    detail::require_engine_shapes(f, g, beta);
    detail::require_engine_shapes(g, f, beta);
    Cochain fg = circle(f, g, beta, kind, allowed);
    Cochain gf = circle(g, f, beta, kind, allowed);
    return fg - Rational(graded_sign(f.arity(), g.arity())) * gf;
}

// The printed three-term expansion of half of [d,d], evaluated on every basis triple.
inline Cochain square_half_direct(const Cochain& d, const TwistMap& beta, BracketKind kind) {
    if (d.arity() != 2) throw InputError("square_half: product must have arity 2");
    if (kind == BracketKind::lie) throw InputError("square_half: defined for left and right kinds");
    const std::size_t n = beta.dim();
    if (d.domain_dim() != n || d.codomain_dim() != n) throw InputError("square_half: dimension mismatch");
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto dd = [&d](const Vector& x, const Vector& y) { return d.evaluate(std::vector<Vector>{x, y}); };
    Cochain out(n, n, 3);
    for_each_tuple(n, 3, [&](const Index& t) {
        Vector a = e(t[0]), b = e(t[1]), c = e(t[2]);
        Vector ba = beta.apply(a), bb = beta.apply(b), bc = beta.apply(c);
        Vector v = dd(dd(a, b), bc);
        if (kind == BracketKind::left)
            v = v + dd(bb, dd(a, c)) - dd(ba, dd(b, c));
        else
            v = v - dd(dd(a, c), bb) - dd(ba, dd(b, c));
        out.set(t, std::move(v));
    });
    return out;
}

// Half of [d,d]: d o d through the engine, cross-checked against the
// three-term expansion.
inline Cochain square_half(const Cochain& d, const TwistMap& beta, BracketKind kind) {
    Cochain direct = square_half_direct(d, beta, kind);
    Cochain engine = circle(d, d, beta, kind);
    if (engine != direct) throw InternalError("square_half: engine and direct expansion disagree");
    return engine;
}

}  // namespace homnr
