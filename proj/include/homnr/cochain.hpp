#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homnr/errors.hpp"
#include "homnr/linalg.hpp"

namespace homnr {

// 0-based basis indices of the arguments of a multilinear map.
using Index = std::vector<std::size_t>;

inline std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Visits all k-tuples over {0..n-1} in lexicographic order.
template <class F>
void for_each_tuple(std::size_t n, std::size_t k, F&& visit) {
    Index t(k, 0);
    if (k > 0 && n == 0) return;
    while (true) {
        visit(static_cast<const Index&>(t));
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++t[pos] < n) break;
            t[pos] = 0;
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

// Position of a tuple in lexicographic order.
inline std::size_t tuple_rank(const Index& t, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t x : t) r = r * n + x;
    return r;
}

struct BasedSpace {
    std::size_t dim = 0;
    std::vector<std::string> labels;

    static BasedSpace standard(std::size_t n, const std::string& prefix = "e") {
        BasedSpace s;
        s.dim = n;
        for (std::size_t i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i + 1));
        return s;
    }

    void validate() const {
        if (dim == 0) throw InputError("space dimension must be at least 1");
        if (labels.size() != dim)
            throw InputError("labels: expected " + std::to_string(dim) + " labels, got " +
                             std::to_string(labels.size()));
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty()) throw InputError("labels: empty label");
            if (!seen.insert(l).second) throw InputError("labels: duplicate label \"" + l + "\"");
        }
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw InputError("unknown basis label \"" + label + "\"");
    }

    friend bool operator==(const BasedSpace&, const BasedSpace&) = default;
};

// Linear endomorphism acting on coordinate column vectors.
class TwistMap {
public:
    TwistMap() = default;
    explicit TwistMap(Matrix m) : m_(std::move(m)) {
        if (!m_.is_square()) throw InputError("twist map must be square");
    }
    static TwistMap identity(std::size_t n) { return TwistMap(Matrix::identity(n)); }

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Vector apply(const Vector& v) const { return m_ * v; }
    TwistMap power(unsigned e) const { return TwistMap(m_.power(e)); }
    bool is_identity() const { return m_.is_identity(); }

    friend bool operator==(const TwistMap& a, const TwistMap& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

// A k-linear map Q^domain x ... x Q^domain -> Q^codomain given by structure
// constants on basis tuples. Zero values are never stored. Arity 0 is allowed
// only as a carrier for constants (degree-0 cochains); the bracket engine
// rejects it.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t domain_dim, std::size_t codomain_dim, std::size_t arity)
        : dom_(domain_dim), cod_(codomain_dim), arity_(arity) {}

    std::size_t domain_dim() const { return dom_; }
    std::size_t codomain_dim() const { return cod_; }
    std::size_t arity() const { return arity_; }
    const std::map<Index, Vector>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    // Structure constant at a basis tuple (zero vector when absent).
    Vector value(const Index& t) const {
        auto it = entries_.find(t);
        return it == entries_.end() ? Vector(cod_) : it->second;
    }
    const Vector* find(const Index& t) const {
        auto it = entries_.find(t);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void set(const Index& t, Vector v) {
        check_index(t);
        if (v.size() != cod_) throw InputError("cochain value has wrong codomain dimension");
        if (homnr::is_zero(v))
            entries_.erase(t);
        else
            entries_[t] = std::move(v);
    }
    void add(const Index& t, const Vector& v) { add_scaled(t, Rational(1), v); }
    void add_scaled(const Index& t, const Rational& c, const Vector& v) {
        if (c.is_zero() || homnr::is_zero(v)) return;
        auto it = entries_.find(t);
        if (it == entries_.end()) {
            check_index(t);
            entries_.emplace(t, c * v);
            return;
        }
        homnr::add_scaled(it->second, c, v);
        if (homnr::is_zero(it->second)) entries_.erase(it);
    }
    void add_component(const Index& t, std::size_t out, const Rational& c) {
        if (c.is_zero()) return;
        Vector v(cod_);
        v[out] = c;
        add(t, v);
    }

    Vector evaluate(std::span<const Vector> args) const {
        if (args.size() != arity_)
            throw InputError("evaluate: expected " + std::to_string(arity_) + " arguments, got " +
                             std::to_string(args.size()));
        for (const auto& a : args)
            if (a.size() != dom_) throw InputError("evaluate: argument has wrong dimension");
        Vector out(cod_);
        for (const auto& [t, val] : entries_) {
            Rational c(1);
            for (std::size_t s = 0; s < arity_ && !c.is_zero(); ++s) {
                if (args[s][t[s]].is_zero())
                    c = 0;
                else
                    c *= args[s][t[s]];
            }
            if (!c.is_zero()) homnr::add_scaled(out, c, val);
        }
        return out;
    }

    std::size_t flat_size() const { return ipow(dom_, arity_) * cod_; }

    // Coordinates in lexicographic tuple order, codomain index fastest.
    Vector flatten() const {
        Vector v(flat_size());
        for (const auto& [t, val] : entries_) {
            std::size_t base = tuple_rank(t, dom_) * cod_;
            for (std::size_t o = 0; o < cod_; ++o) v[base + o] = val[o];
        }
        return v;
    }

    static Cochain from_flat(std::size_t dom, std::size_t cod, std::size_t arity, const Vector& flat) {
        Cochain c(dom, cod, arity);
        if (flat.size() != c.flat_size()) throw InputError("flat coordinate vector has wrong length");
        std::size_t r = 0;
        for_each_tuple(dom, arity, [&](const Index& t) {
            Vector v(flat.begin() + static_cast<std::ptrdiff_t>(r * cod),
                     flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * cod));
            if (!homnr::is_zero(v)) c.entries_.emplace(t, std::move(v));
            ++r;
        });
        return c;
    }

    bool same_shape(const Cochain& o) const { return dom_ == o.dom_ && cod_ == o.cod_ && arity_ == o.arity_; }

    Cochain& operator+=(const Cochain& o) {
        require_shape(o);
        for (const auto& [t, v] : o.entries_) add(t, v);
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        require_shape(o);
        for (const auto& [t, v] : o.entries_) add_scaled(t, Rational(-1), v);
        return *this;
    }
    Cochain& operator*=(const Rational& c) {
        if (c.is_zero()) {
            entries_.clear();
            return *this;
        }
        for (auto& [t, v] : entries_)
            for (auto& x : v) x *= c;
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
    friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.same_shape(b) && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    void check_index(const Index& t) const {
        if (t.size() != arity_) throw InputError("cochain index has wrong arity");
        for (std::size_t x : t)
            if (x >= dom_) throw InputError("cochain index out of range");
    }
    void require_shape(const Cochain& o) const {
        if (!same_shape(o)) throw InputError("cochain shapes differ (domain, codomain or arity)");
    }

    std::size_t dom_ = 0;
    std::size_t cod_ = 0;
    std::size_t arity_ = 0;
    std::map<Index, Vector> entries_;
};

inline Vector evaluate(const Cochain& f, std::span<const Vector> args) { return f.evaluate(args); }

// Arity-1 cochain with the matrix as its action on coordinates.
inline Cochain linear_cochain(const Matrix& m) {
    Cochain c(m.cols(), m.rows(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j) c.set({j}, m.column(j));
    return c;
}

inline Matrix as_matrix(const Cochain& c) {
    if (c.arity() != 1) throw InputError("expected an arity-1 cochain");
    Matrix m(c.codomain_dim(), c.domain_dim());
    for (const auto& [t, v] : c.entries())
        for (std::size_t o = 0; o < v.size(); ++o) m(o, t[0]) = v[o];
    return m;
}

// f precomposed slotwise: (a_1..a_k) -> f(u_1 a_1, ..., u_k a_k).
inline Cochain precompose(const Cochain& f, std::span<const Matrix> maps) {
    if (maps.size() != f.arity()) throw InputError("precompose: need one map per slot");
    std::size_t dom = maps.empty() ? f.domain_dim() : maps[0].cols();
    for (const auto& m : maps)
        if (m.rows() != f.domain_dim() || m.cols() != dom) throw InputError("precompose: dimension mismatch");
    Cochain out(dom, f.codomain_dim(), f.arity());
    for_each_tuple(dom, f.arity(), [&](const Index& t) {
        std::vector<Vector> args;
        args.reserve(t.size());
        for (std::size_t s = 0; s < t.size(); ++s) args.push_back(maps[s].column(t[s]));
        out.set(t, f.evaluate(args));
    });
    return out;
}

// f * beta: the same map in every slot.
inline Cochain twist_compose(const Cochain& f, const TwistMap& beta) {
    if (beta.dim() != f.domain_dim()) throw InputError("twist map dimension does not match cochain domain");
    std::vector<Matrix> maps(f.arity(), beta.matrix());
    return precompose(f, maps);
}

// m o f
inline Cochain postcompose(const Matrix& m, const Cochain& f) {
    if (m.cols() != f.codomain_dim()) throw InputError("postcompose: dimension mismatch");
    Cochain out(f.domain_dim(), m.rows(), f.arity());
    for (const auto& [t, v] : f.entries()) out.set(t, m * v);
    return out;
}

// out o f == f * in, coefficientwise.
inline bool is_equivariant(const Cochain& f, const Matrix& in, const Matrix& out) {
    std::vector<Matrix> maps(f.arity(), in);
    return postcompose(out, f) == precompose(f, maps);
}

inline bool is_beta_cochain(const Cochain& f, const TwistMap& beta) {
    if (beta.dim() != f.domain_dim() || beta.dim() != f.codomain_dim())
        throw InputError("is_beta_cochain: twist map dimension mismatch");
    return is_equivariant(f, beta.matrix(), beta.matrix());
}

// Images of the basis vectors under m.
inline std::vector<Vector> basis_images(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
}

}  // namespace homnr
