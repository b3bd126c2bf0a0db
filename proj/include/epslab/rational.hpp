#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace epslab {

typedef mpz_class BigInt;
typedef mpq_class Rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational: bad literal '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline BigInt pow_bigint(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("rational: 0 to negative power");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    BigInt num = pow_bigint(base.get_num(), a);
    BigInt den = pow_bigint(base.get_den(), a);
    return exp < 0 ? make_rational(den, num) : make_rational(num, den);
}

/// Exact p-adic valuation of a nonzero integer.
inline long int_valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (p < 2) throw std::domain_error("valuation: modulus must be >= 2");
    BigInt r = n, q, rem;
    long v = 0;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) return v;
        r = q;
        ++v;
    }
}

/// Exact p-adic valuation of a nonzero rational.
inline long rat_valuation(const Rational& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    if (x.get_num() % p == 0) v += int_valuation(x.get_num(), p);
    if (x.get_den() % p == 0) v -= int_valuation(x.get_den(), p);
    return v;
}

inline bool is_p_integral(const Rational& x, const BigInt& p) {
    return x == 0 || rat_valuation(x, p) >= 0;
}

inline bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm of zero");
    return a / gcd_ul(a, b) * b;
}

/// a^k mod m for machine words, m > 0.
inline unsigned long powmod_ul(unsigned long a, unsigned long k, unsigned long m) {
    BigInt out, base(static_cast<unsigned long>(a));
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), k, BigInt(m).get_mpz_t());
    return out.get_ui();
}

inline unsigned long euler_phi_ul(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace epslab
