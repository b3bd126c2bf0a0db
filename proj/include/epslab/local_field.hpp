#pragma once

#include "epslab/character.hpp"
#include "epslab/group.hpp"
#include "epslab/padic.hpp"

#include <optional>
#include <vector>

namespace epslab {

/**
 * Towers L/K/Q_p of local fields with L/K tamely ramified Galois: p prime,
 * (e_K, f_K) the ramification and residue data of K over Q_p, (e, f) those
 * of L over K, and c the metacyclic twist of the Galois presentation
 * (tau^f = sigma^c). Plain data; consumers validate through the accessors.
 */
struct TameExtensionDescriptor {
    unsigned long p = 0;
    unsigned long e_K = 1, f_K = 1;
    unsigned long e = 1, f = 1;
    unsigned long c = 0;
    /// Valuation of the base-field discriminant when K/Q_p is not tame; the
    /// tame formula f_K (e_K - 1) is used when absent.
    std::optional<unsigned long> discriminant_exponent_override;

    /// Residue field size of K, q_K = p^{f_K}.
    BigInt residue_size() const;
    /// residue_size() as a machine word; throws when it does not fit.
    unsigned long residue_size_ul() const;
    /// v_p of the discriminant of K/Q_p (tame formula or override).
    unsigned long discriminant_exponent() const;
    /// Residue degree of L over Q_p: f_K * f.
    unsigned long residue_degree_total() const { return f_K * f; }
    /// Ramification index of L over Q_p: e_K * e.
    unsigned long ramification_total() const { return e_K * e; }
    /// [L : Q_p] = e_K * e * f_K * f.
    unsigned long degree_total() const { return e_K * e * f_K * f; }
};

/// Field and positivity checks plus tameness of L/K (p does not divide e).
void validate_descriptor(const TameExtensionDescriptor& d);

/**
 * The unramified character datum: its value u on the arithmetic Frobenius of
 * the base field, a p-adic unit at working precision.
 */
class UnramifiedCharacterData {
public:
    explicit UnramifiedCharacterData(PadicNumber frobenius_value);
    static UnramifiedCharacterData from_rational(const Rational& u, unsigned long p,
                                                 unsigned prec);

    const PadicNumber& u() const { return _u; }
    unsigned long p() const { return _u.p(); }
    unsigned precision() const { return _u.precision(); }

private:
    PadicNumber _u;
};

/**
 * Galois group of L/K as a metacyclic presentation: sigma generates inertia,
 * tau lifts the residue Frobenius, tau sigma tau^{-1} = sigma^{q_K}. Throws
 * a domain error when no consistent extension exists (q_K^f != 1 mod e, or
 * the twist c is incompatible).
 */
MetacyclicGroup galois_group(const TameExtensionDescriptor& d);

/// Artin conductor exponent a(chi) = chi(1) - dim V^I for the inertia
/// subgroup; chi must be a character of galois_group(d).
unsigned long artin_conductor(const Character& chi, const TameExtensionDescriptor& d);

/// v_p of the conductor of the induction of chi from K to the base:
/// f_K * a(chi) + m * chi(1) with m the discriminant exponent of K.
unsigned long induced_conductor_exponent(const Character& chi, const TameExtensionDescriptor& d);

/**
 * Cohomological bookkeeping of the unramified twist over L: H^0 vanishes,
 * H^1 has rank [L : Q_p], and H^2 is cyclic of order p^omega with
 * omega = v_p(1 - u^{f_L}). divisor_exponents are the elementary divisor
 * exponents of 1 - u^{-f_K} * (cyclic shift) acting on a free module of
 * rank f, and always come out as (0, ..., 0, omega).
 */
struct CohomologyProfile {
    unsigned long h0 = 0;
    unsigned long h1_rank = 0;
    long h2_order_exponent = 0;
    std::vector<long> divisor_exponents;
};

CohomologyProfile cohomology_profile(const TameExtensionDescriptor& d,
                                     const UnramifiedCharacterData& uc);

}  // namespace epslab
