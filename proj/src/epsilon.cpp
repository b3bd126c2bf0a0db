#include "epslab/epsilon.hpp"

#include <stdexcept>
#include <vector>

namespace epslab {

namespace {

// Tame base field: p must not divide the ramification index over Q_p.
void require_tame_base(const TameExtensionDescriptor& d, const char* what) {
    validate_descriptor(d);
    if (d.e_K % d.p == 0)
        throw std::domain_error(std::string(what) + ": base field is wildly ramified, unsupported");
}

void require_matching_residue_field(const TameLocalCharacter& chi) {
    if (!chi.ramified_part) return;
    const FiniteField& F = chi.ramified_part->field();
    if (F.p() != chi.base.p || F.size() != chi.base.residue_size_ul())
        throw std::domain_error(
            "epsilon factor: residue character does not live on the base residue field, "
            "unsupported");
}

Rational factorial(unsigned long n) {
    BigInt acc = 1;
    for (unsigned long i = 2; i <= n; ++i) acc *= static_cast<long>(i);
    return Rational(acc);
}

}  // namespace

TameLocalCharacter unramified_character(const TameExtensionDescriptor& base,
                                        const CyclotomicNumber& uniformizer_value) {
    if (uniformizer_value.is_zero())
        throw std::invalid_argument("local character: uniformizer value must be nonzero");
    TameLocalCharacter chi{base, std::nullopt, uniformizer_value};
    require_tame_base(chi.base, "local character");
    return chi;
}

TameLocalCharacter ramified_character(const TameExtensionDescriptor& base,
                                      const ResidueMultChar& residue_char,
                                      const CyclotomicNumber& uniformizer_value) {
    if (uniformizer_value.is_zero())
        throw std::invalid_argument("local character: uniformizer value must be nonzero");
    TameLocalCharacter chi{base, residue_char, uniformizer_value};
    require_tame_base(chi.base, "local character");
    require_matching_residue_field(chi);
    return chi;
}

CyclotomicNumber gauss_sum(const ResidueMultChar& chi, unsigned long twist) {
    const FiniteField& F = chi.field();
    unsigned long q = F.size(), p = F.p(), qm1 = q - 1;
    if (twist == 0 || twist >= q)
        throw std::invalid_argument("gauss sum: twist must be a nonzero field element");

    // Bucket the q-1 terms by (multiplicative exponent, additive exponent);
    // each bucket contributes count * zeta_{q-1}^a * zeta_p^t.
    std::vector<long> counts(qm1 * p, 0);
    for (unsigned long j = 0; j < qm1; ++j) {
        unsigned long x = F.gen_power(static_cast<long>(j));
        unsigned long a = (qm1 == 1 || chi.is_trivial())
                              ? 0
                              : ((qm1 / chi.order()) * ((chi.index() * j) % qm1)) % qm1;
        unsigned long t = F.trace(F.mul(twist, x));
        counts[a * p + t] += 1;
    }
    CyclotomicNumber sum(0L);
    for (unsigned long a = 0; a < qm1; ++a) {
        for (unsigned long t = 0; t < p; ++t) {
            long c = counts[a * p + t];
            if (c == 0) continue;
            CyclotomicNumber term = CyclotomicNumber::zeta(qm1, static_cast<long>(a)) *
                                    CyclotomicNumber::zeta(p, static_cast<long>(t));
            sum = sum + Rational(c) * term;
        }
    }
    return sum;
}

CyclotomicNumber tame_epsilon(const TameLocalCharacter& chi, const AdditiveCharDescriptor& psi) {
    require_tame_base(chi.base, "epsilon factor");
    require_matching_residue_field(chi);
    if (chi.uniformizer_value.is_zero())
        throw std::invalid_argument("epsilon factor: uniformizer value must be nonzero");

    unsigned long q_K = chi.base.residue_size_ul();
    long n = psi.conductor_n;
    Rational qn = pow_rational(Rational(static_cast<long>(q_K)), n);
    if (!chi.is_ramified()) {
        return qn * chi.uniformizer_value.pow(n);
    }
    CyclotomicNumber g = gauss_sum(chi.ramified_part->inverse());
    return qn * (chi.uniformizer_value.pow(n + 1) * g);
}

CyclotomicNumber galois_gauss_sum_tau(const TameLocalCharacter& chi,
                                      const TameExtensionDescriptor& d) {
    if (d.p != chi.base.p || d.e_K != chi.base.e_K || d.f_K != chi.base.f_K)
        throw std::invalid_argument("galois gauss sum: descriptor does not match the character");
    require_tame_base(d, "galois gauss sum");
    unsigned long m = d.discriminant_exponent();
    if (m != d.f_K * (d.e_K - 1))
        throw std::domain_error("galois gauss sum: base discriminant is not tame, unsupported");

    AdditiveCharDescriptor psi{static_cast<long>(d.e_K) - 1};
    CyclotomicNumber eps = tame_epsilon(chi, psi);
    return pow_rational(Rational(static_cast<long>(d.p)), -static_cast<long>(m)) * eps;
}

Rational gamma_star(long j) {
    if (j > 0) return factorial(static_cast<unsigned long>(j - 1));
    Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    return sign / factorial(static_cast<unsigned long>(-j));
}

Rational gamma_factor(const std::map<long, long>& hodge) {
    Rational out(1);
    for (const auto& [degree, mult] : hodge) {
        if (mult == 0) continue;
        out *= pow_rational(gamma_star(-degree), -mult);
    }
    return out;
}

CyclotomicNumber unramified_twist_epsilon(const CyclotomicNumber& base_eps, unsigned long a_W,
                                          unsigned long dim_W, long n_psi, const Rational& u) {
    if (u == 0) throw std::invalid_argument("unramified twist: u must be nonzero");
    long e = static_cast<long>(a_W) + static_cast<long>(dim_W) * n_psi;
    return pow_rational(u, e) * base_eps;
}

PadicCyclo unramified_twist_epsilon(const CyclotomicNumber& base_eps, unsigned long a_W,
                                    unsigned long dim_W, long n_psi, const PadicNumber& u) {
    if (!u.is_unit()) throw std::domain_error("unramified twist: u must be a p-adic unit");
    long e = static_cast<long>(a_W) + static_cast<long>(dim_W) * n_psi;
    PadicCyclo base = PadicCyclo::from_cyclo(base_eps, u.p(), u.precision());
    return base.scaled(u.pow(e));
}

bool hasse_davenport_check(const ResidueMultChar& chi, unsigned f) {
    if (chi.is_trivial())
        throw std::invalid_argument("norm-lift check: character must be nontrivial");
    if (f == 0) throw std::invalid_argument("norm-lift check: extension degree must be positive");

    const FiniteField& base = chi.field();
    unsigned long p = base.p(), q = base.size(), qm1 = q - 1;
    auto lift = finite_field(p, base.degree() * f);
    unsigned long Q = lift->size();

    std::vector<unsigned long> iota = subfield_embedding(base, *lift);
    std::vector<unsigned long> down(Q, Q);  // inverse of iota on its image
    for (unsigned long a = 0; a < q; ++a) down[iota[a]] = a;

    // Lifted sum: over nonzero y, chi(norm of y) times zeta_p^{trace of y},
    // with the norm computed in the lift field and pulled back through iota.
    long norm_exp = static_cast<long>((Q - 1) / qm1);
    std::vector<long> counts(qm1 * p, 0);
    for (unsigned long j = 0; j + 1 < Q; ++j) {
        unsigned long y = lift->gen_power(static_cast<long>(j));
        unsigned long ny = lift->pow(y, norm_exp);
        unsigned long a = down[ny];
        if (a == Q) throw std::logic_error("norm-lift check: norm value escaped the subfield");
        unsigned long mult_exp = ((qm1 / chi.order()) * ((chi.index() * base.dlog(a)) % qm1)) % qm1;
        counts[mult_exp * p + lift->trace(y)] += 1;
    }
    CyclotomicNumber lifted(0L);
    for (unsigned long a = 0; a < qm1; ++a) {
        for (unsigned long t = 0; t < p; ++t) {
            long c = counts[a * p + t];
            if (c == 0) continue;
            lifted = lifted + Rational(c) * (CyclotomicNumber::zeta(qm1, static_cast<long>(a)) *
                                             CyclotomicNumber::zeta(p, static_cast<long>(t)));
        }
    }

    CyclotomicNumber lhs = -lifted;
    CyclotomicNumber rhs = (-gauss_sum(chi)).pow(static_cast<long>(f));
    return lhs == rhs;
}

}  // namespace epslab
