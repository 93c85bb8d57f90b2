#include "capelli/rational.hpp"

#include <stdexcept>

namespace capelli {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= __int128(INT64_MIN) + 1 && v <= __int128(INT64_MAX);
}

mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(std::uint64_t(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(std::uint64_t(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        num_ = c.get_num().get_si();
        den_ = c.get_den().get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(c));
    }
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
        n /= __int128(g);
        d /= __int128(g);
    }
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
    } else {
        r.big_ = std::make_shared<const mpq_class>(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return r;
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return Rational::from_wide(__int128(a.num_) + b.num_, a.den_);
        return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                                   __int128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            __int128 p = __int128(a.num_) * b.num_;
            if (fits64(p)) {
                Rational r;
                r.num_ = std::int64_t(p);
                return r;
            }
        }
        return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (bool(a.big_) != bool(b.big_)) return false;
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = __int128(a.num_) * b.den_;
        __int128 r = __int128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

} // namespace capelli
