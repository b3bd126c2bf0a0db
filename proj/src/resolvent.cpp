#include "epslab/resolvent.hpp"

#include "epslab/epsilon.hpp"
#include "epslab/finite_field.hpp"
#include "epslab/linalg.hpp"
#include "epslab/local_field.hpp"

#include <stdexcept>

namespace epslab {

namespace {

void require_period_data(const NormalBasisSpec& basis) {
    if (!is_prime(basis.p)) throw std::invalid_argument("normal basis: p must be prime");
    if (basis.e < 2 || (basis.p - 1) % basis.e != 0)
        throw std::domain_error("normal basis: e must be a divisor of p-1 greater than 1");
    if (basis.periods.size() != basis.e)
        throw std::invalid_argument("normal basis: expected one period per coset");
}

// The periods are a normal basis exactly when their circulant (the grid of
// all Galois shifts) is nonsingular.
bool periods_are_normal(const NormalBasisSpec& basis) {
    unsigned long e = basis.e;
    CycloMatrix grid(e, e);
    for (unsigned long j = 0; j < e; ++j)
        for (unsigned long i = 0; i < e; ++i) grid.at(j, i) = basis.periods[(i + j) % e];
    return !grid.det().is_zero();
}

void require_linear_character(const Character& chi, unsigned long e) {
    if (chi.degree() != 1)
        throw std::invalid_argument("norm resolvent: character must be linear");
    const MetacyclicGroup& g = chi.group();
    if (g.order() != e || g.e() != e)
        throw std::invalid_argument("norm resolvent: character group must be C_e");
}

// Exponent m with chi(sigma) = zeta_e^m.
unsigned long character_exponent(const Character& chi, unsigned long e) {
    CyclotomicNumber v = chi.value(chi.group().sigma());
    for (unsigned long m = 0; m < e; ++m) {
        if (v == CyclotomicNumber::zeta(e, static_cast<long>(m))) return m;
    }
    throw std::logic_error("norm resolvent: character value is not an e-th root of unity");
}

}  // namespace

NormalBasisSpec gaussian_periods(unsigned long p, unsigned long e) {
    NormalBasisSpec out;
    out.p = p;
    out.e = e;
    if (!is_prime(p)) throw std::invalid_argument("gaussian periods: p must be prime");
    if (e < 2 || (p - 1) % e != 0)
        throw std::domain_error("gaussian periods: e must be a divisor of p-1 greater than 1");

    auto F = finite_field(p, 1);
    unsigned long m = (p - 1) / e;  // coset size
    out.periods.reserve(e);
    for (unsigned long i = 0; i < e; ++i) {
        CyclotomicNumber eta(0L);
        for (unsigned long j = 0; j < m; ++j) {
            unsigned long x = F->gen_power(static_cast<long>(i + e * j));
            eta = eta + CyclotomicNumber::zeta(p, static_cast<long>(x));
        }
        out.periods.push_back(eta);
    }
    if (!periods_are_normal(out))
        throw std::logic_error("gaussian periods: period circulant is singular");
    return out;
}

CyclotomicNumber norm_resolvent(const NormalBasisSpec& basis, const Character& chi) {
    require_period_data(basis);
    require_linear_character(chi, basis.e);
    if (!periods_are_normal(basis))
        throw std::invalid_argument("norm resolvent: periods do not form a normal basis");

    const MetacyclicGroup& g = chi.group();
    CyclotomicNumber sum(0L);
    for (unsigned long j = 0; j < basis.e; ++j) {
        GroupElem pw = g.pow(g.sigma(), static_cast<long>(j));
        sum = sum + basis.periods[j] * chi.value(pw).inverse();
    }
    return sum;
}

CyclotomicNumber delta_K(const EmbeddedBasisSpec& spec) {
    size_t d = spec.basis.size();
    if (d == 0 || spec.embeddings.size() != d)
        throw std::invalid_argument("delta: need equally many basis elements and embeddings");
    CycloMatrix grid(d, d);
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) grid.at(j, i) = spec.basis[i].galois(spec.embeddings[j]);
    }
    CyclotomicNumber det = grid.det();
    if (det.is_zero()) throw std::invalid_argument("delta: embedding grid is singular, not a basis");
    return det;
}

CyclotomicNumber theta(const Character& chi, const NormalBasisSpec& basis,
                       const CyclotomicNumber& delta) {
    return delta.pow(static_cast<long>(chi.degree())) * norm_resolvent(basis, chi);
}

TaylorUnitReport taylor_unit_check(unsigned long p, unsigned long e) {
    TaylorUnitReport report;
    report.p = p;
    report.e = e;
    report.lift_choice = "single embedding (base Q_p), identity lift";

    NormalBasisSpec basis = gaussian_periods(p, e);
    MetacyclicGroup ce(e, 1, 1 % e, 0);
    auto F = finite_field(p, 1);

    TameExtensionDescriptor K;
    K.p = p;
    K.e_K = 1;
    K.f_K = 1;
    K.e = 1;
    K.f = 1;

    report.all_unit = true;
    for (const Character& chi : irr_table(ce)) {
        TaylorUnitEntry entry;
        entry.chi_label = chi.label();
        entry.resolvent = norm_resolvent(basis, chi);

        // The residue character matched to chi under the coset identification:
        // chi(sigma^j) on the Galois side equals the residue value on g^j.
        unsigned long m = character_exponent(chi, e);
        TameLocalCharacter local =
            m == 0 ? unramified_character(K, CyclotomicNumber(1L))
                   : ramified_character(
                         K, ResidueMultChar(F, e / gcd_ul(e, m), (m / gcd_ul(e, m))),
                         CyclotomicNumber(1L));
        entry.tau = galois_gauss_sum_tau(local, K);
        entry.ratio = entry.resolvent / entry.tau;
        entry.unit = entry.ratio.p_unit(BigInt(static_cast<long>(p)));
        report.all_unit = report.all_unit && entry.unit;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace epslab
