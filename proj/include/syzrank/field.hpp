#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace syzrank {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact rational numbers backed by GMP. All elements are kept canonical
// (coprime numerator/denominator, positive denominator).
class RationalField {
public:
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }

    Element from_int(long n) const { return Element(n); }
    Element from_integer(const Integer& n) const { return Element(n); }
    Element from_rational(const Rational& q) const { return q; }

    Element make(const Integer& num, const Integer& den) const {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Element q(num, den);
        q.canonicalize();
        return q;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }

    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const { return true; }
};

// Z/p for a prime modulus p (p < 2^31 so products fit in 64 bits and
// signed conversions stay safe). The modulus lives in the field object,
// not in the elements.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31) || !probable_prime(p))
            throw std::invalid_argument("modulus must be a prime below 2^31");
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return p_ == 2 ? 1 % p_ : 1; }

    Element from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Element>(r);
    }
    Element from_integer(const Integer& n) const {
        Integer r = n % Integer(static_cast<unsigned long>(p_));
        if (r < 0) r += Integer(static_cast<unsigned long>(p_));
        return r.get_ui();
    }
    // Image of a rational: fails if p divides the denominator.
    Element from_rational(const Rational& q) const {
        Element den = from_integer(q.get_den());
        if (den == 0) throw std::domain_error("denominator divisible by modulus");
        return mul(from_integer(q.get_num()), inv(den));
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == one(); }
    bool equal(Element a, Element b) const { return a == b; }

    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool probable_prime(std::uint64_t p) {
        Integer n(static_cast<unsigned long>(p));
        return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
    }

    std::uint64_t p_;
};

}  // namespace syzrank
