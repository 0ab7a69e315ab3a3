#pragma once

// Exact rational with an int64 fast path.  Values are kept in lowest terms
// with a positive denominator; as long as numerator and denominator fit in
// int64 no GMP object exists, otherwise the value lives in an mpq_class.
// Matrix entries in this project are almost always tiny, and an mpq per
// zero entry made allocation the dominant cost.

#include <climits>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace repdim {

class Rational {
public:
    Rational() = default;
    Rational(long v)
    {
        if (v == LONG_MIN)
            assign128(v, 1);
        else
            num_ = v;
    }
    Rational(std::int64_t n, std::int64_t d) { assign128(n, d); }
    explicit Rational(const mpq_class& q) { assign_big(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_)
    {
        if (o.big_)
            big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool is_zero() const { return !big_ && num_ == 0; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    mpq_class to_mpq() const
    {
        if (big_)
            return *big_;
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), num_);
        mpz_set_si(q.get_den_mpz_t(), den_);
        return q;
    }

    std::string str() const
    {
        if (big_)
            return big_->get_str();
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_)
            return *a.big_ == *b.big_;
        return false; // normalized: a value that fits is never stored big
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (b.num_ == 0)
                return a;
            if (a.num_ == 0)
                return b;
            if (a.den_ == 1 && b.den_ == 1)
                return from128(static_cast<__int128>(a.num_) + b.num_, 1);
            return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                           static_cast<__int128>(a.den_) * b.den_);
        }
        return Rational(a.to_mpq() + b.to_mpq());
    }
    friend Rational operator-(const Rational& a) { return a.big_ ? Rational(-*a.big_) : from128(-static_cast<__int128>(a.num_), a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0)
                return Rational();
            return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
        }
        return Rational(a.to_mpq() * b.to_mpq());
    }
    // Caller guarantees a != 0.
    Rational inverse() const
    {
        if (big_)
            return Rational(mpq_class(1) / *big_);
        return from128(den_, num_);
    }

    // Numerator and denominator; only for small values.
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

private:
    static __int128 gcd128(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from128(__int128 n, __int128 d)
    {
        Rational r;
        r.assign128(n, d);
        return r;
    }

    void assign128(__int128 n, __int128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        if (d != 1) {
            const __int128 g = gcd128(n, d);
            if (g != 1) {
                n /= g;
                d /= g;
            }
        }
        constexpr __int128 lim = INT64_MAX;
        if (n <= lim && n >= -lim && d <= lim) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        // Build the mpq from the 128-bit parts.
        auto to_mpz = [](__int128 v, mpz_class& z) {
            const bool negative = v < 0;
            unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
            const auto hi = static_cast<std::uint64_t>(u >> 64), lo = static_cast<std::uint64_t>(u);
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
            z <<= 64;
            mpz_class low;
            mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
            z += low;
            if (negative)
                z = -z;
        };
        mpq_class q;
        to_mpz(n, q.get_num());
        to_mpz(d, q.get_den());
        big_ = std::make_unique<mpq_class>(std::move(q));
    }

    void assign_big(mpq_class q)
    {
        q.canonicalize();
        if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
            const long n = mpz_get_si(q.get_num_mpz_t());
            const long d = mpz_get_si(q.get_den_mpz_t());
            if (n != LONG_MIN) {
                num_ = n;
                den_ = d;
                big_.reset();
                return;
            }
        }
        big_ = std::make_unique<mpq_class>(std::move(q));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace repdim
