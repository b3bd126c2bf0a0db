#pragma once

#include "epslab/cyclotomic.hpp"
#include "epslab/padic.hpp"

#include <vector>

namespace epslab {

/**
 * Element of Q_p(zeta_n) at working precision: power-basis coordinates with
 * PadicNumber entries, reduced modulo the integer cyclotomic polynomial.
 * A commutative ring (no division), as needed by division-free determinants.
 */
class PadicCyclo {
public:
    PadicCyclo(unsigned long order, std::vector<PadicNumber> coords);
    static PadicCyclo zero(unsigned long order, unsigned long p);
    static PadicCyclo one(unsigned long order, unsigned long p, unsigned prec);
    static PadicCyclo from_cyclo(const CyclotomicNumber& x, unsigned long p, unsigned prec);
    static PadicCyclo from_scalar(const PadicNumber& x, unsigned long order);

    unsigned long order() const { return _order; }
    unsigned long p() const { return _coords[0].p(); }
    const std::vector<PadicNumber>& coords() const { return _coords; }

    PadicCyclo operator+(const PadicCyclo&) const;
    PadicCyclo operator-(const PadicCyclo&) const;
    PadicCyclo operator*(const PadicCyclo&) const;
    PadicCyclo scaled(const PadicNumber& c) const;
    PadicCyclo pow(unsigned long k, unsigned prec) const;

    /// Entrywise congruence at shared absolute precision.
    bool congruent(const PadicCyclo&) const;
    /// True when every coordinate is zero-at-precision.
    bool is_zero_at_precision() const;
    /// The constant coordinate, after certifying every higher power-basis
    /// coordinate vanishes at working precision; throws otherwise.
    PadicNumber scalar_value() const;

private:
    unsigned long _order;
    std::vector<PadicNumber> _coords;  // length phi(order)
};

}  // namespace epslab
