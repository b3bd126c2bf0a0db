#pragma once

#include "epslab/float128.hpp"
#include "epslab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace epslab {

/// Requested analytic accuracy cannot be met at the working precision.
struct AnalyticPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed complex quantity together with its error bound and the binary
/// precision it was computed at.
struct ComplexValue {
    Cplx value;
    double error_bound = 0.0;
    unsigned precision_bits = 113;
};

/**
 * Character of (Z/N)^x, stored as exact rational phases on a fixed generator
 * decomposition of the unit group. Values come out as exact roots of unity
 * rendered to floating complex numbers on demand. The conductor is found by
 * search at construction, so primitivity is a stored fact.
 */
class DirichletCharacter {
public:
    unsigned long modulus() const { return _modulus; }
    unsigned long conductor() const { return _conductor; }
    bool is_primitive() const { return _conductor == _modulus; }
    bool is_principal() const;
    /// 0 if even (value 1 at -1), 1 if odd.
    unsigned parity() const;
    /// Multiplicative order in the character group.
    unsigned long order() const;

    /// Exact phase t in [0,1) with value(n) = e^{2 pi i t}; n must be coprime
    /// to the modulus.
    Rational phase(unsigned long n) const;
    /// Floating value; zero when n shares a factor with the modulus.
    Cplx value(unsigned long n) const;

    DirichletCharacter conjugate() const;
    std::string label() const;

    bool operator==(const DirichletCharacter& o) const {
        return _modulus == o._modulus && _exponents == o._exponents;
    }

private:
    friend std::vector<DirichletCharacter> characters_mod(unsigned long N);
    struct Component {
        unsigned long prime_power;  // the factor of N this component lives at
        unsigned long generator;    // generator of (a cyclic factor of) its units
        unsigned long order;
    };

    unsigned long _modulus = 1;
    unsigned long _conductor = 1;
    std::vector<Component> _components;
    std::vector<unsigned long> _exponents;  // value on generator i: e^{2 pi i exp_i/order_i}
};

/// All phi(N) characters mod N, in a deterministic enumeration order;
/// index 0 is the principal character.
std::vector<DirichletCharacter> characters_mod(unsigned long N);

/**
 * Hurwitz zeta by Euler-Maclaurin: truncated sum over n < M of (n+x)^{-s}
 * plus the integral and Bernoulli corrections at M, with M chosen from the
 * requested error. Deterministic for fixed (s, x, target).
 */
ComplexValue hurwitz_zeta(const Cplx& s, const Float128& x, double target_error);

/// Gamma on the complex plane (Spouge series, reflection on Re z < 1/2).
Cplx complex_gamma(const Cplx& z);

/// tau(chi) = sum over residues of chi(nu) e^{2 pi i nu / N}.
ComplexValue dirichlet_gauss_sum(const DirichletCharacter& chi);

/**
 * L(chi, s) through the Hurwitz decomposition N^{-s} sum_a chi(a)
 * zeta_H(s, a/N); at s = 1 (nonprincipal chi) the digamma formula
 * -(1/N) sum_a chi(a) psi(a/N) is used instead. The principal character at
 * s = 1 is a pole.
 */
ComplexValue l_value(const DirichletCharacter& chi, const Cplx& s, double target_error);

/**
 * Deviation from the completed functional equation: with
 * Lambda(chi, s) = (N/pi)^{s/2} Gamma((s + parity)/2) L(chi, s), returns
 * |Lambda(chi,s) - (tau(chi) / (i^parity sqrt(N))) Lambda(conj chi, 1-s)|.
 * Requires a primitive character.
 */
Float128 functional_equation_residual(const DirichletCharacter& chi, const Cplx& s);

/// Analytic class number check for the Gaussian rationals:
/// (4 * sqrt(4) / (2 pi)) * L(chi mod 4, 1) compared with 1.
struct ClassNumberReport {
    ComplexValue l_at_one;
    Float128 h;
    double deviation = 0.0;
    bool pass = false;
};
ClassNumberReport class_number_check_qi();

}  // namespace epslab
