#include "epslab/lfun.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <numeric>

namespace epslab {

namespace {

// Real-base complex power b^w for b > 0.
Cplx rpow(const Float128& b, const Cplx& w) {
    using boost::multiprecision::log;
    return exp(w * Cplx(log(b)));
}

unsigned long unit_order(unsigned long a, unsigned long m) {
    unsigned long cur = a % m, n = 1;
    while (cur != 1) {
        cur = cur * a % m;
        ++n;
    }
    return n;
}

Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational normalized_fraction(Rational t) {
    // Reduce mod 1 into [0, 1).
    BigInt num = t.get_num(), den = t.get_den();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational out(r, den);
    out.canonicalize();
    return out;
}

}  // namespace

bool DirichletCharacter::is_principal() const {
    return std::all_of(_exponents.begin(), _exponents.end(),
                       [](unsigned long e) { return e == 0; });
}

Rational DirichletCharacter::phase(unsigned long n) const {
    n %= _modulus;
    if (_modulus > 1 && gcd_ul(n, _modulus) != 1)
        throw std::domain_error("dirichlet character: phase of a non-unit");
    Rational total(0);
    for (size_t i = 0; i < _components.size(); ++i) {
        const Component& comp = _components[i];
        unsigned long pp = comp.prime_power;
        unsigned long a = n % pp;
        if (pp % 2 == 0 && pp >= 8 && comp.generator == pp - 1) {
            // Paired decomposition a = (-1)^beta 5^alpha for the 2-power part;
            // the companion component (generator 5) is next in the list.
            const Component& five = _components[i + 1];
            unsigned long alpha = 0, beta = 0;
            bool found = false;
            unsigned long cur = 1;
            for (alpha = 0; alpha < five.order && !found; cur = cur * 5 % pp, ++alpha) {
                if (cur == a) {
                    beta = 0;
                    found = true;
                    break;
                }
                if (pp - cur == a) {
                    beta = 1;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("dirichlet character: 2-power decomposition failed");
            total += frac(static_cast<long>(_exponents[i] * beta), static_cast<long>(comp.order));
            total += frac(static_cast<long>(_exponents[i + 1]) * static_cast<long>(alpha),
                          static_cast<long>(five.order));
            ++i;  // companion already consumed
            continue;
        }
        unsigned long alpha = 0, cur = 1 % pp;
        while (cur != a) {
            cur = cur * comp.generator % pp;
            if (++alpha > comp.order)
                throw std::logic_error("dirichlet character: unit outside the generator span");
        }
        total += frac(static_cast<long>(_exponents[i]) * static_cast<long>(alpha),
                      static_cast<long>(comp.order));
    }
    return normalized_fraction(total);
}

Cplx DirichletCharacter::value(unsigned long n) const {
    n %= _modulus;
    if (_modulus > 1 && gcd_ul(n, _modulus) != 1) return Cplx(Float128(0));
    Rational t = phase(n);
    return unit_phase(t.get_num().get_si(), t.get_den().get_si());
}

unsigned DirichletCharacter::parity() const {
    return phase(_modulus - 1 == 0 ? 0 : _modulus - 1) == 0 ? 0 : 1;
}

unsigned long DirichletCharacter::order() const {
    unsigned long n = 1;
    for (size_t i = 0; i < _components.size(); ++i) {
        unsigned long o = _components[i].order / gcd_ul(_components[i].order, _exponents[i]);
        if (_exponents[i] == 0) o = 1;
        n = lcm_ul(n, o);
    }
    return n;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter out = *this;
    for (size_t i = 0; i < out._exponents.size(); ++i) {
        if (out._exponents[i] != 0)
            out._exponents[i] = out._components[i].order - out._exponents[i];
    }
    return out;
}

std::string DirichletCharacter::label() const {
    std::string s = "chi" + std::to_string(_modulus) + ".";
    for (size_t i = 0; i < _exponents.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(_exponents[i]);
    }
    if (_exponents.empty()) s += "0";
    return s;
}

std::vector<DirichletCharacter> characters_mod(unsigned long N) {
    if (N == 0) throw std::invalid_argument("dirichlet characters: modulus must be positive");
    if (N > 10000) throw std::invalid_argument("dirichlet characters: modulus too large");

    // Generator decomposition of the unit group, factor by factor.
    std::vector<DirichletCharacter::Component> comps;
    unsigned long rest = N;
    for (unsigned long p = 2; p * p <= rest || rest > 1;) {
        if (rest % p != 0) {
            ++p;
            if (p * p > rest && rest > 1) p = rest;
            continue;
        }
        unsigned long pp = 1;
        while (rest % p == 0) {
            rest /= p;
            pp *= p;
        }
        if (p == 2) {
            if (pp == 4) comps.push_back({pp, 3, 2});
            if (pp >= 8) {
                comps.push_back({pp, pp - 1, 2});
                comps.push_back({pp, 5, pp / 4});
            }
            // pp == 2 contributes the trivial group
        } else {
            unsigned long target = pp / p * (p - 1);  // phi(pp)
            unsigned long g = 0;
            for (unsigned long cand = 2; cand < pp && g == 0; ++cand) {
                if (cand % p == 0) continue;
                if (unit_order(cand, pp) == target) g = cand;
            }
            if (g == 0) throw std::logic_error("dirichlet characters: no generator found");
            comps.push_back({pp, g, target});
        }
        p = 2;
    }

    unsigned long count = 1;
    for (const auto& c : comps) count *= c.order;

    std::vector<DirichletCharacter> out;
    out.reserve(count);
    for (unsigned long idx = 0; idx < count; ++idx) {
        DirichletCharacter chi;
        chi._modulus = N;
        chi._components = comps;
        chi._exponents.resize(comps.size(), 0);
        unsigned long r = idx;
        for (size_t i = 0; i < comps.size(); ++i) {
            chi._exponents[i] = r % comps[i].order;
            r /= comps[i].order;
        }
        // Conductor search: the smallest divisor f with chi trivial on units
        // congruent to 1 mod f.
        for (unsigned long f = 1; f <= N; ++f) {
            if (N % f != 0) continue;
            bool trivial = true;
            for (unsigned long a = 1 % N; a < N && trivial; a += f) {
                if (a == 0 || gcd_ul(a, N) != 1) continue;
                if (chi.phase(a) != 0) trivial = false;
            }
            if (trivial) {
                chi._conductor = f;
                break;
            }
        }
        out.push_back(std::move(chi));
    }
    return out;
}

ComplexValue hurwitz_zeta(const Cplx& s, const Float128& x, double target_error) {
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    if (s.re == 1 && s.im == 0)
        throw std::domain_error("hurwitz zeta: pole at s = 1");
    if (x <= 0) throw std::invalid_argument("hurwitz zeta: offset must be positive");
    if (target_error < 5e-33)
        throw AnalyticPrecision("hurwitz zeta: target below 128-bit working precision");

    constexpr unsigned J = 12;  // Bernoulli correction order
    Float128 sigma = s.re;
    if (sigma <= -(Float128(2 * J) - 1))
        throw AnalyticPrecision("hurwitz zeta: real part too negative for the expansion order");

    // Choose the cutoff M from the standard remainder bound.
    unsigned long M = 16;
    Float128 tail_bound;
    for (;; M *= 2) {
        Float128 mx = Float128(M) + x;
        Cplx poch(Float128(1));
        for (unsigned j = 0; j < 2 * J + 2; ++j) poch *= s + Cplx(Float128(j));
        Float128 b = boost::math::bernoulli_b2n<Float128>(J + 1);
        Float128 fact(1);
        for (unsigned j = 2; j <= 2 * J + 2; ++j) fact *= j;
        tail_bound = abs(b) / fact * epslab::abs(poch) * pow(mx, -sigma - (2 * J + 1)) /
                     (sigma + 2 * J + 1);
        if (tail_bound < Float128(target_error) / 2) break;
        if (M > (1UL << 22))
            throw AnalyticPrecision("hurwitz zeta: cutoff exploded before meeting the target");
    }

    Float128 mx = Float128(M) + x;
    Cplx sum(Float128(0));
    for (unsigned long n = 0; n < M; ++n) sum += rpow(Float128(n) + x, -s);

    Cplx m_to_minus_s = rpow(mx, -s);
    sum += m_to_minus_s * Cplx(mx) / (s - Cplx(Float128(1)));  // mx^{1-s}/(s-1)
    sum += m_to_minus_s * Cplx(Float128(0.5));

    Cplx poch = s;                                  // (s)_1
    Cplx tail_pow = m_to_minus_s / Cplx(mx);        // mx^{-s-1}
    Float128 fact(2);                               // (2j)! at j = 1
    Float128 inv_mx2 = 1 / (mx * mx);
    for (unsigned j = 1; j <= J; ++j) {
        Float128 b = boost::math::bernoulli_b2n<Float128>(j);
        sum += Cplx(b / fact) * poch * tail_pow;
        // advance to j+1
        poch *= (s + Cplx(Float128(2 * j - 1))) * (s + Cplx(Float128(2 * j)));
        tail_pow *= Cplx(inv_mx2);
        fact *= (2 * j + 1) * (2 * j + 2);
    }

    ComplexValue out;
    out.value = sum;
    double rounding = static_cast<double>((Float128(M + 40) * 4e-34) * (epslab::abs(sum) + 1));
    out.error_bound = static_cast<double>(tail_bound) + rounding;
    if (out.error_bound > target_error)
        throw AnalyticPrecision("hurwitz zeta: rounding floor exceeds the requested target");
    return out;
}

Cplx complex_gamma(const Cplx& z) {
    using boost::multiprecision::log;
    if (z.re < Float128(0.5)) {
        // Reflection through the sine product.
        Cplx pz = Cplx(pi128()) * z;
        return Cplx(pi128()) / (sin(pz) * complex_gamma(Cplx(Float128(1)) - z));
    }

    // Shift the argument up by the recurrence until the Stirling series
    // converges fast, then divide the accumulated factors back out.
    const Float128 kShiftTo = 32;
    Cplx w = z;
    Cplx shift(Float128(1));
    while (w.re < kShiftTo) {
        shift *= w;
        w += Cplx(Float128(1));
    }

    constexpr unsigned J = 15;  // last Bernoulli index used: 2J = 30
    Cplx lw = log(w);
    Cplx lng = (w - Cplx(Float128(0.5))) * lw - w + Cplx(log(2 * pi128()) / 2);
    Cplx winv = Cplx(Float128(1)) / w;
    Cplx winv2 = winv * winv;
    Cplx wpow = winv;  // w^{-(2j-1)} at j = 1
    for (unsigned j = 1; j <= J; ++j) {
        Float128 b = boost::math::bernoulli_b2n<Float128>(j);
        lng += Cplx(b / Float128(2 * j * (2 * j - 1))) * wpow;
        wpow *= winv2;
    }
    return exp(lng) / shift;
}

ComplexValue dirichlet_gauss_sum(const DirichletCharacter& chi) {
    unsigned long N = chi.modulus();
    Cplx sum(Float128(0));
    for (unsigned long nu = 0; nu < N; ++nu) {
        if (N > 1 && gcd_ul(nu, N) != 1) continue;
        sum += chi.value(nu) * unit_phase(static_cast<long>(nu), static_cast<long>(N));
    }
    ComplexValue out;
    out.value = sum;
    out.error_bound = static_cast<double>(Float128(N) * 4e-34 * (epslab::abs(sum) + 1));
    return out;
}

ComplexValue l_value(const DirichletCharacter& chi, const Cplx& s, double target_error) {
    unsigned long N = chi.modulus();
    if (s.re == 1 && s.im == 0) {
        if (chi.is_principal())
            throw std::domain_error("l-function: pole at s = 1 for the principal character");
        Cplx acc(Float128(0));
        for (unsigned long a = 1; a < N; ++a) {
            if (gcd_ul(a, N) != 1) continue;
            acc += chi.value(a) * Cplx(boost::math::digamma(Float128(a) / Float128(N)));
        }
        ComplexValue out;
        out.value = -acc / Cplx(Float128(N));
        out.error_bound = static_cast<double>(Float128(N) * 6e-33 * (epslab::abs(out.value) + 1));
        if (out.error_bound > target_error)
            throw AnalyticPrecision("l-function: digamma route cannot meet the target");
        return out;
    }

    if (target_error < 1e-30)
        throw AnalyticPrecision("l-function: target below 128-bit working precision");
    double per_term = target_error / (2.0 * static_cast<double>(N));
    Cplx acc(Float128(0));
    Float128 errs(0);
    for (unsigned long a = 1; a <= N; ++a) {
        if (N > 1 && gcd_ul(a, N) != 1) continue;
        ComplexValue hz = hurwitz_zeta(s, Float128(a) / Float128(N), per_term);
        acc += chi.value(a % N) * hz.value;
        errs += Float128(hz.error_bound);
    }
    Cplx scale = rpow(Float128(N), -s);
    ComplexValue out;
    out.value = scale * acc;
    out.error_bound = static_cast<double>(errs * epslab::abs(scale) +
                                          Float128(N) * 4e-34 * (epslab::abs(out.value) + 1));
    if (out.error_bound > target_error)
        throw AnalyticPrecision("l-function: accumulated bound exceeds the requested target");
    return out;
}

Float128 functional_equation_residual(const DirichletCharacter& chi, const Cplx& s) {
    using boost::multiprecision::sqrt;
    if (!chi.is_primitive())
        throw std::invalid_argument("functional equation: character must be primitive");
    unsigned long N = chi.modulus();
    unsigned k = chi.parity();

    auto completed = [&](const DirichletCharacter& c, const Cplx& sv) {
        Cplx L = l_value(c, sv, 1e-24).value;
        Cplx gam = complex_gamma((sv + Cplx(Float128(k))) * Cplx(Float128(0.5)));
        Cplx pref = rpow(Float128(N) / pi128(), sv * Cplx(Float128(0.5)));
        return pref * gam * L;
    };

    Cplx tau = dirichlet_gauss_sum(chi).value;
    Cplx ik = k == 1 ? Cplx(Float128(0), Float128(1)) : Cplx(Float128(1));
    Cplx eps = tau / (ik * Cplx(sqrt(Float128(N))));
    Cplx lhs = completed(chi, s);
    Cplx rhs = eps * completed(chi.conjugate(), Cplx(Float128(1)) - s);
    return epslab::abs(lhs - rhs);
}

ClassNumberReport class_number_check_qi() {
    std::vector<DirichletCharacter> chars = characters_mod(4);
    const DirichletCharacter* odd = nullptr;
    for (const DirichletCharacter& chi : chars) {
        if (!chi.is_principal()) odd = &chi;
    }
    if (!odd) throw std::logic_error("class number: missing odd character mod 4");

    ClassNumberReport report;
    report.l_at_one = l_value(*odd, Cplx(Float128(1)), 1e-12);
    // #mu = 4 roots of unity, sqrt(disc) = 2, normalized by 2 pi.
    report.h = Float128(4) * Float128(2) / (2 * pi128()) * report.l_at_one.value.re;
    using boost::multiprecision::abs;
    report.deviation = static_cast<double>(abs(report.h - 1));
    report.pass = report.deviation <= 1e-6 &&
                  abs(report.l_at_one.value.im) < Float128(1e-10);
    return report;
}

}  // namespace epslab
