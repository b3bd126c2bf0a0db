#pragma once

#include "epslab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace epslab {

/// Raised when a computation cannot be certified at the working precision;
/// the caller must retry with more digits.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Element of Q_p under the capped relative precision model: a nonzero value
 * is p^val * (unit + O(p^prec)) with unit in [0, p^prec) not divisible by p.
 * A cancellation that consumes every digit produces the distinct
 * zero-at-precision state O(p^k), which remembers only its absolute
 * precision k. Values are immutable.
 */
class PadicNumber {
public:
    static PadicNumber from_rational(const Rational& r, unsigned long p, unsigned prec);
    static PadicNumber from_integer(const BigInt& n, unsigned long p, unsigned prec);
    static PadicNumber one(unsigned long p, unsigned prec);
    static PadicNumber p_power(unsigned long p, long k, unsigned prec);
    static PadicNumber zero_at(unsigned long p, long abs_prec);
    /// Additive neutral: zero known up to the precision cap, so it never
    /// lowers the absolute precision of a sum it participates in.
    static PadicNumber zero(unsigned long p);

    unsigned long p() const { return _p; }
    bool is_zero_at_precision() const { return _zero; }
    /// Valuation of a certified-nonzero value; throws PrecisionExhausted on
    /// the zero-at-precision state.
    long valuation() const;
    /// Absolute precision: the value is known modulo p^abs_precision().
    long abs_precision() const { return _zero ? _val : _val + static_cast<long>(_prec); }
    unsigned precision() const { return _prec; }
    const BigInt& unit_part() const;
    bool is_unit() const { return !_zero && _val == 0; }

    /// Base-p digits of the unit part, length precision(); empty for the
    /// zero-at-precision state.
    std::vector<unsigned long> digits() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber&) const;
    PadicNumber operator-(const PadicNumber&) const;
    PadicNumber operator*(const PadicNumber&) const;
    PadicNumber operator/(const PadicNumber&) const;
    PadicNumber inverse() const;
    PadicNumber pow(long k) const;

    /// Structural equality (same p, state, valuation, unit, precision).
    bool operator==(const PadicNumber&) const = default;
    /// Same value modulo p^(smaller absolute precision).
    bool congruent(const PadicNumber&) const;

    std::string to_string() const;

private:
    PadicNumber() = default;

    unsigned long _p = 0;
    long _val = 0;       // valuation, or absolute precision when _zero
    BigInt _unit = 0;    // unit part in [0, p^_prec); 0 when _zero
    unsigned _prec = 0;  // relative precision digits; 0 when _zero
    bool _zero = true;
};

/// Dense matrix over Q_p, all entries sharing one p.
class PadicMatrix {
public:
    PadicMatrix(std::size_t rows, std::size_t cols, const PadicNumber& fill);
    static PadicMatrix identity(std::size_t n, unsigned long p, unsigned prec);

    std::size_t rows() const { return _rows; }
    std::size_t cols() const { return _cols; }
    PadicNumber& at(std::size_t i, std::size_t j) { return _a[i * _cols + j]; }
    const PadicNumber& at(std::size_t i, std::size_t j) const { return _a[i * _cols + j]; }

    PadicMatrix operator*(const PadicMatrix&) const;

    /// Determinant by Gaussian elimination with minimal-valuation pivoting.
    /// Throws PrecisionExhausted when singularity cannot be excluded.
    PadicNumber det() const;

    /// Entrywise congruence at the shared absolute precision.
    bool congruent(const PadicMatrix&) const;

private:
    std::size_t _rows, _cols;
    std::vector<PadicNumber> _a;
};

/**
 * Smith normal form over Z_p: P * M * Q = diag(p^a_1, ..., p^a_r) with
 * nondecreasing exponents and unimodular P, Q. Inverse transforms are
 * carried so the factorization can be checked against M directly.
 */
struct SmithResult {
    std::vector<long> exponents;
    PadicMatrix diagonal;             // P * M * Q at working precision
    PadicMatrix left, right;          // P, Q
    PadicMatrix left_inv, right_inv;  // P^{-1}, Q^{-1}
};

/// Pivots on a minimal-valuation entry, ties broken row-major. Throws
/// PrecisionExhausted when a pivot candidate cannot be certified nonzero.
SmithResult smith_normal_form(const PadicMatrix& m);

}  // namespace epslab
