#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "homnr/errors.hpp"

namespace homnr {

// Exact rational number. Always canonical (lowest terms, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) {
        if (d == 0) throw InputError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with q != 0. Whitespace is not allowed.
    static Rational parse(std::string_view s) {
        auto digits = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        std::string_view body = s;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
            throw InputError("malformed rational \"" + std::string(s) + "\"");
        std::string text(s.front() == '+' ? s.substr(1) : s);
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw InputError("malformed rational \"" + std::string(s) + "\"");
        if (q.get_den() == 0) throw InputError("rational with zero denominator \"" + std::string(s) + "\"");
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

}  // namespace homnr
