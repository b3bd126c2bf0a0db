#pragma once

#include "epslab/cyclotomic.hpp"

#include <memory>
#include <vector>

namespace epslab {

/**
 * The field with p^k elements, realized as F_p[x] modulo a fixed primitive
 * polynomial. Elements are indices in [0, p^k): the polynomial sum c_i x^i
 * is the index sum c_i p^i, so 0 and 1 are the field's zero and one and the
 * first p indices are the prime subfield.
 *
 * The modulus is deterministic: the lexicographically smallest monic
 * polynomial (ordered by flattened coefficient index) whose root x has
 * multiplicative order exactly p^k - 1, which certifies in one stroke that
 * the quotient is a field and that x generates its unit group. For k = 1
 * the generator is the smallest primitive root instead. Discrete-log and
 * power tables are built once; all queries are read-only afterwards.
 */
class FiniteField {
public:
    FiniteField(unsigned long p, unsigned k);

    unsigned long p() const { return _p; }
    unsigned degree() const { return _k; }
    unsigned long size() const { return _q; }
    /// Monic modulus coefficients c_0 .. c_k (c_k = 1); degree-one x - g
    /// for the prime field itself.
    const std::vector<unsigned long>& modulus() const { return _modulus; }

    unsigned long generator() const { return _gen; }

    unsigned long add(unsigned long a, unsigned long b) const;
    unsigned long sub(unsigned long a, unsigned long b) const;
    unsigned long neg(unsigned long a) const;
    unsigned long mul(unsigned long a, unsigned long b) const;
    unsigned long inv(unsigned long a) const;
    unsigned long pow(unsigned long a, long e) const;

    /// Exponent of the fixed generator: a = generator()^dlog(a). Throws on 0.
    unsigned long dlog(unsigned long a) const;
    /// generator()^e for any integer e.
    unsigned long gen_power(long e) const;

    /// Trace to the prime field, returned as a residue in [0, p).
    unsigned long trace(unsigned long a) const;

private:
    void check(unsigned long a) const;

    unsigned long _p;
    unsigned _k;
    unsigned long _q;
    unsigned long _gen;
    std::vector<unsigned long> _modulus;
    std::vector<unsigned long> _pow;   // g^j for j in [0, q-1)
    std::vector<unsigned long> _dlog;  // inverse of _pow; _dlog[0] is a sentinel
};

/// Shared, cached field instances (table construction is the costly part).
std::shared_ptr<const FiniteField> finite_field(unsigned long p, unsigned k);

/**
 * Image table of `base` inside `lift` (same p, degree of base dividing
 * degree of lift): table[a] is the image of a under the embedding that
 * sends the base generator to the smallest root of the base modulus in the
 * lift field. A ring homomorphism by construction.
 */
std::vector<unsigned long> subfield_embedding(const FiniteField& base, const FiniteField& lift);

/**
 * Multiplicative character of F_q^x of the given order (a divisor of q-1):
 * x maps to zeta_{q-1} raised to (q-1)/order * index * dlog(x). The index,
 * coprime to the order, selects among the characters of that order; index 1
 * is the canonical one.
 */
class ResidueMultChar {
public:
    ResidueMultChar(std::shared_ptr<const FiniteField> field, unsigned long order,
                    unsigned long index = 1);

    const FiniteField& field() const { return *_field; }
    std::shared_ptr<const FiniteField> field_ptr() const { return _field; }
    unsigned long order() const { return _order; }
    unsigned long index() const { return _index; }
    bool is_trivial() const { return _order == 1; }
    /// Conductor exponent of the associated tame character: 0 or 1.
    unsigned long conductor_exponent() const { return is_trivial() ? 0 : 1; }

    /// Value on a nonzero field element, a root of unity of the stated order.
    CyclotomicNumber value(unsigned long x) const;
    ResidueMultChar inverse() const;

private:
    std::shared_ptr<const FiniteField> _field;
    unsigned long _order, _index;
};

}  // namespace epslab
