#pragma once

// Exact ground fields.  A field is a small value object; every matrix and
// module carries a copy, so one run can only mix objects built over equal
// fields.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "repdim/linalg/rational.hpp"

namespace repdim {

class Rationals {
public:
    using Element = Rational;

    Element zero() const { return Element(); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_one(const Element& a) const { return a == Element(1); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const
    {
        if (is_zero(a))
            throw std::domain_error("division by zero");
        return a.inverse();
    }

    // a -= f * b
    void submul(Element& a, const Element& f, const Element& b) const
    {
        if (!f.is_zero() && !b.is_zero())
            a = a - f * b;
    }
    // a += f * b
    void addmul(Element& a, const Element& f, const Element& b) const
    {
        if (!f.is_zero() && !b.is_zero())
            a = a + f * b;
    }

    // Random coefficients for isomorphism search.  Small integers suffice:
    // a nonvanishing determinant polynomial of degree d is zero on at most
    // a d/201 fraction of these points.
    Element random(std::mt19937_64& rng) const
    {
        std::uniform_int_distribution<long> dist(-100, 100);
        return Element(dist(rng));
    }

    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "q"; }
    std::string to_string(const Element& a) const { return a.str(); }

    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime");
    }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const
    {
        long r = v % static_cast<long>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t(a) + p_ - b); }
    Element mul(Element a, Element b) const { return static_cast<Element>(std::uint64_t(a) * b % p_); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const
    {
        if (a == 0)
            throw std::domain_error("division by zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Element>(result);
    }
    void submul(Element& a, Element f, Element b) const { a = sub(a, mul(f, b)); }
    void addmul(Element& a, Element f, Element b) const { a = add(a, mul(f, b)); }

    Element random(std::mt19937_64& rng) const
    {
        std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
        return dist(rng);
    }

    std::uint64_t characteristic() const { return p_; }
    std::string name() const { return p_ == 2 ? "f2" : "fp:" + std::to_string(p_); }
    std::string to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint32_t p)
    {
        if (p < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

private:
    std::uint32_t p_;
};

// Run-wide field choice as given on the command line: "q", "f2" or "fp:P".
struct FieldSpec {
    std::uint32_t prime = 0; // 0 means the rationals

    bool is_rational() const { return prime == 0; }
    std::string name() const { return prime == 0 ? "q" : PrimeField(prime).name(); }

    static FieldSpec parse(const std::string& text);
};

inline FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "q" || text == "Q")
        return {};
    if (text == "f2" || text == "F2")
        return {2};
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed prime in field '" + text + "'");
        const unsigned long long p = std::stoull(digits);
        if (p >= (1ull << 31) || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
            throw std::invalid_argument("field '" + text + "': modulus must be a prime below 2^31");
        return {static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected q, f2 or fp:P)");
}

// Calls fn(field) with the concrete field type selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_rational())
        return fn(Rationals{});
    return fn(PrimeField(spec.prime));
}

} // namespace repdim
