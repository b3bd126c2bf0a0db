#pragma once

#include "epslab/character.hpp"
#include "epslab/cyclotomic.hpp"

#include <string>
#include <vector>

namespace epslab {

/**
 * Gaussian-period normal basis of the degree-e subfield of the p-th
 * cyclotomic field: period i sums zeta_p^x over the coset g^i H of the
 * index-e subgroup H of F_p^x (g the fixed primitive root). The cyclic
 * Galois group shifts the periods, and period 0 generates a normal basis;
 * construction certifies normality by checking the period circulant is
 * nonsingular.
 */
struct NormalBasisSpec {
    unsigned long p = 0;
    unsigned long e = 0;
    std::vector<CyclotomicNumber> periods;
};

NormalBasisSpec gaussian_periods(unsigned long p, unsigned long e);

/**
 * Norm resolvent of the period basis against a linear character of the
 * cyclic Galois group C_e: the sum of g(b) chi(g)^{-1} over the group, an
 * element of Q(zeta_{pe}). The base field here is Q_p itself, so there is a
 * single embedding factor.
 */
CyclotomicNumber norm_resolvent(const NormalBasisSpec& basis, const Character& chi);

/**
 * A Z_p-basis of a ring of integers presented inside a global cyclotomic
 * model: the basis elements live in Q(zeta_{model_order}) and each embedding
 * is a Galois exponent (applied through the cyclotomic Galois action).
 */
struct EmbeddedBasisSpec {
    unsigned long model_order = 1;
    std::vector<CyclotomicNumber> basis;
    std::vector<long> embeddings;
};

/**
 * Square root of the discriminant attached to an embedded basis: the
 * determinant of the embedding-by-basis value grid. Its square equals the
 * determinant of the trace-form Gram matrix on the same data. A singular
 * grid means the data was not a basis.
 */
CyclotomicNumber delta_K(const EmbeddedBasisSpec& spec);

/// theta = delta^{chi(1)} times the norm resolvent.
CyclotomicNumber theta(const Character& chi, const NormalBasisSpec& basis,
                       const CyclotomicNumber& delta);

struct TaylorUnitEntry {
    std::string chi_label;
    CyclotomicNumber resolvent;
    CyclotomicNumber tau;
    CyclotomicNumber ratio;
    bool unit = false;
};

struct TaylorUnitReport {
    unsigned long p = 0;
    unsigned long e = 0;
    std::string lift_choice;  // embedding lift convention recorded for the record
    std::vector<TaylorUnitEntry> entries;
    bool all_unit = false;
};

/**
 * For every character of C_e acting on the degree-e subfield of the p-th
 * cyclotomic field: form the ratio of the norm resolvent of the Gaussian
 * period basis by the normalized Galois-Gauss element of the matching tame
 * character, and test that the ratio is a p-unit. Failures are recorded in
 * the report, not thrown.
 */
TaylorUnitReport taylor_unit_check(unsigned long p, unsigned long e);

}  // namespace epslab
