#pragma once

#include "epslab/cyclotomic.hpp"
#include "epslab/finite_field.hpp"
#include "epslab/local_field.hpp"
#include "epslab/padic_cyclo.hpp"

#include <map>
#include <optional>

namespace epslab {

/**
 * Additive character data for a p-adic field K, recorded by its conductor
 * exponent n: the character kills the n-th fractional ideal and is nontrivial
 * one step below. The standard character of Q_p has n = 0; its pullback
 * through the trace to a tame K has n equal to the different exponent
 * e_K - 1.
 */
struct AdditiveCharDescriptor {
    long conductor_n = 0;
};

/**
 * Character of K^x for a tame local field K (the p / e_K / f_K part of the
 * descriptor), split by the unit decomposition: a multiplicative character of
 * the residue field (trivial when unramified) together with the value on the
 * fixed uniformizer. Geometric-Frobenius normalization throughout: for an
 * unramified character the uniformizer value is the value on geometric
 * Frobenius.
 */
struct TameLocalCharacter {
    TameExtensionDescriptor base;
    std::optional<ResidueMultChar> ramified_part;  // empty or trivial = unramified
    CyclotomicNumber uniformizer_value;

    bool is_ramified() const { return ramified_part && !ramified_part->is_trivial(); }
    /// Artin conductor exponent: 0 unramified, 1 tame ramified.
    unsigned long conductor_exponent() const { return is_ramified() ? 1 : 0; }
};

TameLocalCharacter unramified_character(const TameExtensionDescriptor& base,
                                        const CyclotomicNumber& uniformizer_value);
TameLocalCharacter ramified_character(const TameExtensionDescriptor& base,
                                      const ResidueMultChar& residue_char,
                                      const CyclotomicNumber& uniformizer_value);

/**
 * Gauss sum over the residue field: the sum of chi(x) zeta_p^{Tr(c x)} over
 * nonzero x, an element of Q(zeta_{p(q-1)}). The twist c must be a nonzero
 * field element. For the trivial character the sum collapses to -1.
 */
CyclotomicNumber gauss_sum(const ResidueMultChar& chi, unsigned long twist = 1);

/**
 * Epsilon factor of a tame character at the given additive conductor n:
 *   unramified: chi(pi)^n q_K^n,
 *   ramified:   chi(pi)^{n+1} q_K^n gauss_sum(residue-inverse).
 * The residue character must live over the residue field of the base, else
 * the input is outside the tame range and a domain_error is thrown.
 */
CyclotomicNumber tame_epsilon(const TameLocalCharacter& chi, const AdditiveCharDescriptor& psi);

/**
 * Normalized Galois-Gauss element tau(chi) = epsilon at the trace-pullback
 * conductor, divided by the absolute discriminant p^m of the base field.
 * The descriptor must carry the same base-field data as the character.
 * Its complex absolute value squared is the conductor f(chi).
 */
CyclotomicNumber galois_gauss_sum_tau(const TameLocalCharacter& chi,
                                      const TameExtensionDescriptor& d);

/// Regularized Gamma value at an integer: (j-1)! for j > 0 and
/// (-1)^j / (-j)! otherwise.
Rational gamma_star(long j);

/**
 * Product of regularized Gamma values prescribed by a Hodge multiset
 * h: the factor is the product over j of gamma_star(j)^{-h(-j)}.
 */
Rational gamma_factor(const std::map<long, long>& hodge);

/**
 * Epsilon factor of an unramified twist: scaling by u raised to
 * a_W + dim_W * n_psi, where u is the twist's value on geometric Frobenius.
 * Exact and p-adic scalar variants.
 */
CyclotomicNumber unramified_twist_epsilon(const CyclotomicNumber& base_eps, unsigned long a_W,
                                          unsigned long dim_W, long n_psi, const Rational& u);
PadicCyclo unramified_twist_epsilon(const CyclotomicNumber& base_eps, unsigned long a_W,
                                    unsigned long dim_W, long n_psi, const PadicNumber& u);

/**
 * Checks the norm-lift identity for Gauss sums: composing a nontrivial
 * character with the norm from the degree-f extension of its field negates
 * and powers the Gauss sum, -G(chi o N) = (-G(chi))^f, verified exactly in
 * the big cyclotomic field. The lifted sum is computed honestly: the base
 * field is embedded in the extension through a root of its modulus and the
 * norm is pulled back through that embedding.
 */
bool hasse_davenport_check(const ResidueMultChar& chi, unsigned f);

}  // namespace epslab
