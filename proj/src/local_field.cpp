#include "epslab/local_field.hpp"

#include <stdexcept>
#include <string>

namespace epslab {

namespace {

// q_K reduced mod e, kept exact even when q_K itself is huge.
unsigned long residue_mod(const TameExtensionDescriptor& d) {
    BigInt q = d.residue_size(), r;
    mpz_mod(r.get_mpz_t(), q.get_mpz_t(), BigInt(d.e).get_mpz_t());
    return r.get_ui();
}

}  // namespace

BigInt TameExtensionDescriptor::residue_size() const { return pow_bigint(BigInt(p), f_K); }

unsigned long TameExtensionDescriptor::residue_size_ul() const {
    BigInt q = residue_size();
    if (!q.fits_ulong_p())
        throw std::domain_error("local field: residue field size exceeds machine range");
    return q.get_ui();
}

unsigned long TameExtensionDescriptor::discriminant_exponent() const {
    if (discriminant_exponent_override) return *discriminant_exponent_override;
    if (e_K % p == 0)
        throw std::domain_error(
            "local field: base field is wildly ramified; supply the discriminant exponent");
    return f_K * (e_K - 1);
}

void validate_descriptor(const TameExtensionDescriptor& d) {
    if (d.p < 2 || !is_prime(BigInt(d.p)))
        throw std::domain_error("local field: p must be prime");
    if (d.e_K == 0 || d.f_K == 0 || d.e == 0 || d.f == 0)
        throw std::domain_error("local field: degrees must be positive");
    if (d.e % d.p == 0)
        throw std::domain_error("local field: extension is wildly ramified (p divides e)");
}

UnramifiedCharacterData::UnramifiedCharacterData(PadicNumber frobenius_value)
    : _u(std::move(frobenius_value)) {
    if (_u.is_zero_at_precision() || _u.valuation() != 0)
        throw std::domain_error("unramified character: the Frobenius value must be a p-unit");
}

UnramifiedCharacterData UnramifiedCharacterData::from_rational(const Rational& u, unsigned long p,
                                                               unsigned prec) {
    return UnramifiedCharacterData(PadicNumber::from_rational(u, p, prec));
}

MetacyclicGroup galois_group(const TameExtensionDescriptor& d) {
    validate_descriptor(d);
    unsigned long q_mod = residue_mod(d);
    try {
        return MetacyclicGroup(d.e, d.f, q_mod, d.c);
    } catch (const std::domain_error& err) {
        throw std::domain_error(std::string("local field: no tame extension with this data (") +
                                err.what() + ")");
    }
}

unsigned long artin_conductor(const Character& chi, const TameExtensionDescriptor& d) {
    MetacyclicGroup g = galois_group(d);
    if (!(chi.group() == g))
        throw std::invalid_argument("local field: character belongs to a different group");
    unsigned long fixed = fixed_space_dim(chi, g.inertia_subgroup());
    return chi.degree() - fixed;
}

unsigned long induced_conductor_exponent(const Character& chi,
                                         const TameExtensionDescriptor& d) {
    return d.f_K * artin_conductor(chi, d) + d.discriminant_exponent() * chi.degree();
}

CohomologyProfile cohomology_profile(const TameExtensionDescriptor& d,
                                     const UnramifiedCharacterData& uc) {
    validate_descriptor(d);
    if (uc.p() != d.p)
        throw std::invalid_argument("local field: character datum for a different prime");
    const unsigned long fL = d.residue_degree_total();
    PadicNumber one = PadicNumber::one(d.p, uc.precision());
    PadicNumber body = one - uc.u().pow(static_cast<long>(fL));
    // Throws PrecisionExhausted when the difference is zero at precision,
    // i.e. the character datum fails to separate L.
    long omega = body.valuation();

    PadicMatrix op = PadicMatrix::identity(d.f, d.p, uc.precision());
    PadicNumber w = uc.u().pow(-static_cast<long>(d.f_K));
    for (unsigned long i = 0; i < d.f; ++i) {
        std::size_t row = (i + 1) % d.f;
        op.at(row, i) = op.at(row, i) - w;
    }
    SmithResult snf = smith_normal_form(op);

    CohomologyProfile out;
    out.h0 = 0;
    out.h1_rank = d.degree_total();
    out.h2_order_exponent = omega;
    out.divisor_exponents = snf.exponents;
    for (std::size_t i = 0; i + 1 < out.divisor_exponents.size(); ++i)
        if (out.divisor_exponents[i] != 0)
            throw std::logic_error("local field: unexpected nonzero early elementary divisor");
    if (out.divisor_exponents.empty() || out.divisor_exponents.back() != omega)
        throw std::logic_error("local field: elementary divisors disagree with the H^2 order");
    return out;
}

}  // namespace epslab
