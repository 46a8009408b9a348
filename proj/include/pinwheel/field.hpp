#pragma once

// Exact scalar fields: GMP rationals and the quadratic extension Q(sqrt d).

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pinwheel {

using Integer = mpz_class;
using Rational = mpq_class;

struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScalarParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }

// Anything usable as a coordinate field: exact arithmetic, total order, exact sign.
template <typename F>
concept ordered_field = requires(F a, F b) {
    { F(0) } -> std::convertible_to<F>;
    { F(1) } -> std::convertible_to<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    { sign(a) } -> std::convertible_to<int>;
    { to_double(a) } -> std::convertible_to<double>;
};

inline Rational make_rational(const Integer& p, const Integer& q = 1) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q", "-p/q" and plain decimals such as "1.25".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ScalarParseError("empty scalar");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
            whole.find_first_not_of("0123456789") != std::string::npos)
            throw ScalarParseError("bad decimal '" + s + "'");
        Integer num(whole + frac, 10), den(1);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational r = make_rational(num, den);
        return neg ? Rational(-r) : r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw ScalarParseError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw ScalarParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_squarefree(long d) {
    if (d < 2) return false;
    for (long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

// a + b*sqrt(d). A value with b == 0 is compatible with every d; mixing two
// genuinely irrational values over different d throws FieldMismatch.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int v) : a_(v) {}
    QuadExt(long v) : a_(v) {}
    QuadExt(const Rational& v) : a_(v) {}
    QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ != 0 && !is_squarefree(d_)) throw FieldMismatch("radicand must be square-free and > 1");
        if (b_ == 0) d_ = 0;
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long d = common(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long d = common(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long d = common(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        long d = common(x, y);
        Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (n == 0) throw std::domain_error("division by zero");
        QuadExt conj(y.a_ / n, -y.b_ / n, d);
        return x * conj;
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
        int s = sign(x - y);
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // sign(a + b sqrt d) from the signs of a, b and a^2 - b^2 d.
    friend int sign(const QuadExt& x) {
        int sa = sgn(x.a_), sb = sgn(x.b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational n = x.a_ * x.a_ - x.b_ * x.b_ * x.d_;
        return sgn(n) * sa;
    }

    friend double to_double(const QuadExt& x) {
        return x.a_.get_d() + x.b_.get_d() * std::sqrt(static_cast<double>(x.d_));
    }

private:
    static long common(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
        throw FieldMismatch("mixing Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                            std::to_string(y.d_) + ")");
    }

    Rational a_{0}, b_{0};
    long d_ = 0;
};

// Exact rational part extraction; throws if the value is irrational.
inline Rational to_rational(const QuadExt& x) {
    if (!x.is_rational()) throw FieldMismatch("irrational value where a rational is required");
    return x.a();
}
inline Rational to_rational(const Rational& x) { return x; }

template <typename F>
F abs_value(const F& x) { return sign(x) < 0 ? F(-x) : x; }

template <typename F>
F min_value(const F& x, const F& y) { return y < x ? y : x; }

template <typename F>
F max_value(const F& x, const F& y) { return x < y ? y : x; }

inline Integer floor_value(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Start from floor(a) + floor(b sqrt d) and correct by exact comparison.
inline Integer floor_value(const QuadExt& x) {
    if (x.is_rational()) return floor_value(x.a());
    Rational r = x.b() * x.b() * x.d();
    Integer root = sqrt(floor_value(r));
    Integer g = floor_value(x.a()) + (sgn(x.b()) > 0 ? root : Integer(-root - 1));
    while (x < QuadExt(Rational(g))) --g;
    while (!(x < QuadExt(Rational(g + 1)))) ++g;
    return g;
}

template <typename F>
Integer ceil_value(const F& x) { return -floor_value(F(-x)); }

static_assert(ordered_field<Rational>);
static_assert(ordered_field<QuadExt>);

}  // namespace pinwheel
