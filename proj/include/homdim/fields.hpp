#pragma once

/* Exact scalar arithmetic: arbitrary-precision rationals (GMP-backed) and
 * prime fields F_p with runtime modulus.  Everything downstream is templated
 * on one of these two scalar types; no floating point anywhere. */

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace homdim {

using Rat = boost::multiprecision::mpq_rational;

inline bool isPrime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    long long p = 0;  // modulus when kind == PrimeField, else 0

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(long long p) {
        if (!isPrime(p))
            throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
        return FieldSpec{Kind::PrimeField, p};
    }
    bool operator==(const FieldSpec&) const = default;
};

/* Prime-field element carrying its modulus.  Modulus 0 marks an integer
 * literal not yet attached to a field (Scalar(0), Scalar(1) from generic
 * code); arithmetic adopts the modulus of the other operand. */
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(int n) : v_(n), p_(0) {}
    Fp(long long n) : v_(n), p_(0) {}
    Fp(long long n, long long p) : v_(reduce(n, p)), p_(p) {}

    long long value() const { return v_; }
    long long modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = commonModulus(a, b);
        return make(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long p = commonModulus(a, b);
        return make(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = commonModulus(a, b);
        return make(a.v_ * b.v_, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        long long p = commonModulus(a, b);
        if (p == 0) {
            // two bare literals: only division by a unit is meaningful
            if (b.v_ == 1)
                return a;
            if (b.v_ == -1)
                return Fp(-a.v_);
            throw std::domain_error("Fp: division of literals without a modulus");
        }
        long long bv = reduce(b.v_, p);
        if (bv == 0)
            throw std::domain_error("Fp: division by zero");
        return make(reduce(a.v_, p) * inverse(bv, p), p);
    }
    Fp operator-() const { return p_ ? Fp(p_ - v_, p_) : Fp(-v_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        long long p = commonModulus(a, b);
        return p == 0 ? a.v_ == b.v_ : reduce(a.v_, p) == reduce(b.v_, p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
        return os << x.v_;
    }

  private:
    static long long reduce(long long n, long long p) {
        if (p == 0)
            return n;
        long long r = n % p;
        return r < 0 ? r + p : r;
    }
    static long long commonModulus(const Fp& a, const Fp& b) {
        if (a.p_ == 0)
            return b.p_;
        if (b.p_ != 0 && a.p_ != b.p_)
            throw std::domain_error("Fp: mixed moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
        return a.p_;
    }
    static Fp make(long long n, long long p) { return p ? Fp(n, p) : Fp(n); }
    static long long inverse(long long a, long long p) {
        // extended Euclid; a in (0, p)
        long long t = 0, newT = 1, r = p, newR = a;
        while (newR != 0) {
            long long q = r / newR;
            long long tmp = t - q * newT;
            t = newT;
            newT = tmp;
            tmp = r - q * newR;
            r = newR;
            newR = tmp;
        }
        if (r != 1)
            throw std::domain_error("Fp: modulus not prime");
        return t < 0 ? t + p : t;
    }

    long long v_;
    long long p_;
};

template <class K>
K scalarFromInt(const FieldSpec& field, long long n);

template <>
inline Rat scalarFromInt<Rat>(const FieldSpec&, long long n) {
    return Rat(n);
}

template <>
inline Fp scalarFromInt<Fp>(const FieldSpec& field, long long n) {
    if (field.kind != FieldSpec::Kind::PrimeField)
        throw std::invalid_argument("Fp scalar requested from a non-prime field spec");
    return Fp(n, field.p);
}

template <class K>
K parseScalar(const FieldSpec& field, const std::string& text);

template <>
inline Rat parseScalar<Rat>(const FieldSpec&, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::mpz_int(text));
        boost::multiprecision::mpz_int num(text.substr(0, slash));
        boost::multiprecision::mpz_int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num) / Rat(den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational scalar '" + text + "'");
    }
}

template <>
inline Fp parseScalar<Fp>(const FieldSpec& field, const std::string& text) {
    if (field.kind != FieldSpec::Kind::PrimeField)
        throw std::invalid_argument("Fp scalar requested from a non-prime field spec");
    try {
        size_t pos = 0;
        long long n = std::stoll(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("trailing characters");
        return Fp(n, field.p);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad prime-field scalar '" + text + "'");
    }
}

/* Canonical text forms: rationals as "p/q" (gcd(|p|,q)=1, q>0, "/1" omitted),
 * prime-field elements as the representative in [0, p). */
inline std::string formatScalar(const Rat& x) {
    return x.str();
}
inline std::string formatScalar(const Fp& x) {
    return std::to_string(x.value());
}

}  // namespace homdim

namespace Eigen {
template <>
struct NumTraits<homdim::Fp> : GenericNumTraits<homdim::Fp> {
    typedef homdim::Fp Real;
    typedef homdim::Fp NonInteger;
    typedef homdim::Fp Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 6,
    };
    static inline Real epsilon() { return homdim::Fp(0); }
    static inline Real dummy_precision() { return homdim::Fp(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
