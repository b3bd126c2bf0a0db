#pragma once

#include "epslab/float128.hpp"
#include "epslab/rational.hpp"

#include <memory>
#include <vector>

namespace epslab {

/**
 * Element of the cyclotomic field Q(zeta_n), stored as coordinates of length
 * phi(n) in the power basis 1, zeta, ..., zeta^{phi(n)-1} with zeta = zeta_n
 * a fixed primitive n-th root of unity. Arithmetic reduces modulo the n-th
 * cyclotomic polynomial; mixed-order operands are promoted to the lcm order.
 * Values are immutable once constructed and safe to share across threads.
 */
class CyclotomicNumber {
public:
    CyclotomicNumber() : _order(1), _coords(1, Rational(0)) {}
    explicit CyclotomicNumber(const Rational& r) : _order(1), _coords(1, r) {}
    explicit CyclotomicNumber(long n) : _order(1), _coords(1, Rational(n)) {}

    /// zeta_n^power. Throws std::domain_error above the configured order cap.
    static CyclotomicNumber zeta(unsigned long n, long power = 1);
    static CyclotomicNumber from_coords(unsigned long n, std::vector<Rational> coords);

    unsigned long order() const { return _order; }
    const std::vector<Rational>& coords() const { return _coords; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    Rational rational_value() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber&) const;
    CyclotomicNumber operator-(const CyclotomicNumber&) const;
    CyclotomicNumber operator*(const CyclotomicNumber&) const;
    CyclotomicNumber operator/(const CyclotomicNumber&) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
    bool operator==(const CyclotomicNumber&) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long k) const;

    /// Field automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
    CyclotomicNumber galois(long k) const;

    /// Rewrite in Q(zeta_m) for any multiple m of the order.
    CyclotomicNumber to_order(unsigned long m) const;

    /// Complex embedding zeta_n -> exp(2*pi*i*k/n); requires gcd(k, n) = 1.
    /// Guarantees `precision` significand bits, at most 113.
    Cplx embed(long k = 1, unsigned precision = 113) const;

    /// Characteristic polynomial of multiplication by this element on the
    /// power basis, monic, coefficients c[0..phi(n)] with c[phi(n)] = 1.
    std::vector<Rational> mult_char_poly() const;

    /// True iff the element and its inverse are both integral at p: every
    /// characteristic polynomial coefficient is p-integral and the constant
    /// term is a p-unit. Zero is not a unit.
    bool p_unit(const BigInt& p) const;

    static unsigned long max_order();
    static void set_max_order(unsigned long n);

private:
    CyclotomicNumber(unsigned long n, std::vector<Rational> c) : _order(n), _coords(std::move(c)) {}

    unsigned long _order;
    std::vector<Rational> _coords;
};

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& x);

/// Shared reduction data for Q(zeta_n): the cyclotomic polynomial and the
/// rewrite rows x^k mod Phi_n for k in [phi(n), max(2 phi(n) - 2, n - 1)].
struct CycloReduction {
    unsigned long n = 1, phi = 1;
    std::vector<BigInt> poly;
    std::vector<std::vector<BigInt>> rows;
};

std::shared_ptr<const CycloReduction> cyclo_reduction(unsigned long n);

}  // namespace epslab
