#include "epslab/cyclotomic.hpp"

#include "epslab/berkowitz.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace epslab {

namespace {

std::atomic<unsigned long> g_max_order{256};

// Dense integer polynomials, lowest degree first, no trailing zeros.
typedef std::vector<BigInt> ZPoly;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division by a monic divisor; throws if a remainder survives.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("zdiv_exact: divisor not monic");
    ztrim(num);
    if (num.size() < den.size()) throw std::logic_error("zdiv_exact: degree underflow");
    ZPoly q(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = num[k + den.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return q;
}

int mobius(unsigned long n) {
    int m = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

ZPoly x_pow_minus_one(unsigned long d) {
    ZPoly p(d + 1, BigInt(0));
    p[0] = -1;
    p[d] = 1;
    return p;
}

// Phi_n as the Moebius product prod_{d|n} (x^d - 1)^{mu(n/d)}.
ZPoly cyclotomic_poly(unsigned long n) {
    ZPoly num{BigInt(1)}, den{BigInt(1)};
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) num = zmul(num, x_pow_minus_one(d));
        if (mu == -1) den = zmul(den, x_pow_minus_one(d));
    }
    return zdiv_exact(std::move(num), den);
}

// Reduce a raw coefficient vector (degree may exceed phi-1) to power-basis
// coordinates of length phi.
std::vector<Rational> reduce_raw(const CycloReduction& ctx, std::vector<Rational> raw) {
    const unsigned long phi = ctx.phi;
    if (raw.size() < phi) raw.resize(phi, Rational(0));
    for (std::size_t k = raw.size(); k-- > phi;) {
        if (raw[k] == 0) continue;
        const std::vector<BigInt>& row = ctx.rows.at(k - phi);
        for (unsigned long i = 0; i < phi; ++i)
            if (row[i] != 0) raw[i] += raw[k] * Rational(row[i]);
        raw[k] = 0;
    }
    raw.resize(phi);
    return raw;
}

// Rational dense polynomials for the inverse computation.
typedef std::vector<Rational> QPoly;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// r0 - q*r1 in place; returns quotient-free remainder pair step of Euclid.
QPoly qmod(QPoly r0, const QPoly& r1, QPoly& s0, const QPoly& s1) {
    while (r0.size() >= r1.size() && !r0.empty()) {
        Rational c = r0.back() / r1.back();
        std::size_t shift = r0.size() - r1.size();
        for (std::size_t j = 0; j < r1.size(); ++j) r0[j + shift] -= c * r1[j];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rational(0));
        for (std::size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= c * s1[j];
        qtrim(r0);
        if (r0.empty()) break;
    }
    return r0;
}

}  // namespace

std::shared_ptr<const CycloReduction> cyclo_reduction(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, std::shared_ptr<const CycloReduction>> cache;
    if (n == 0) throw std::domain_error("cyclotomic: order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<CycloReduction>();
    ctx->n = n;
    ctx->poly = cyclotomic_poly(n);
    ctx->phi = ctx->poly.size() - 1;
    if (ctx->phi != euler_phi_ul(n)) throw std::logic_error("cyclotomic: degree mismatch");
    const unsigned long phi = ctx->phi;
    unsigned long kmax = std::max(2 * phi > 1 ? 2 * phi - 2 : 0, n > 0 ? n - 1 : 0);
    if (kmax >= phi) {
        ctx->rows.reserve(kmax - phi + 1);
        ZPoly row(ctx->poly.begin(), ctx->poly.end() - 1);  // x^phi = -row
        for (auto& c : row) c = -c;
        ctx->rows.push_back(row);
        for (unsigned long k = phi + 1; k <= kmax; ++k) {
            const ZPoly& prev = ctx->rows.back();
            ZPoly nxt(phi, BigInt(0));
            for (unsigned long i = 0; i + 1 < phi; ++i) nxt[i + 1] = prev[i];
            const BigInt& lead = prev[phi - 1];
            if (lead != 0)
                for (unsigned long i = 0; i < phi; ++i) nxt[i] += lead * ctx->rows[0][i];
            ctx->rows.push_back(std::move(nxt));
        }
    }
    cache.emplace(n, ctx);
    return ctx;
}

namespace {
auto context(unsigned long n) { return cyclo_reduction(n); }
}  // namespace

unsigned long CyclotomicNumber::max_order() { return g_max_order.load(); }

void CyclotomicNumber::set_max_order(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic: order cap must be positive");
    g_max_order.store(n);
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned long n, long power) {
    if (n == 0) throw std::domain_error("cyclotomic: order must be positive");
    if (n > max_order())
        throw std::domain_error("cyclotomic: order " + std::to_string(n) +
                                " exceeds configured cap " + std::to_string(max_order()));
    auto ctx = context(n);
    long e = power % static_cast<long>(n);
    if (e < 0) e += static_cast<long>(n);
    std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
    raw[static_cast<std::size_t>(e)] = 1;
    return CyclotomicNumber(n, reduce_raw(*ctx, std::move(raw)));
}

CyclotomicNumber CyclotomicNumber::from_coords(unsigned long n, std::vector<Rational> coords) {
    if (n == 0) throw std::domain_error("cyclotomic: order must be positive");
    if (n > max_order())
        throw std::domain_error("cyclotomic: order " + std::to_string(n) +
                                " exceeds configured cap " + std::to_string(max_order()));
    auto ctx = context(n);
    if (coords.size() != ctx->phi)
        throw std::invalid_argument("cyclotomic: expected " + std::to_string(ctx->phi) +
                                    " coordinates for order " + std::to_string(n));
    return CyclotomicNumber(n, std::move(coords));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : _coords)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < _coords.size(); ++i)
        if (_coords[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational");
    return _coords[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> c(_coords);
    for (auto& x : c) x = -x;
    return CyclotomicNumber(_order, std::move(c));
}

CyclotomicNumber CyclotomicNumber::to_order(unsigned long m) const {
    if (m == _order) return *this;
    if (m % _order != 0)
        throw std::domain_error("cyclotomic: cannot rewrite order " + std::to_string(_order) +
                                " element in order " + std::to_string(m));
    auto ctx = context(m);
    unsigned long stride = m / _order;
    std::vector<Rational> raw((_coords.size() - 1) * stride + 1, Rational(0));
    for (std::size_t i = 0; i < _coords.size(); ++i) raw[i * stride] = _coords[i];
    return CyclotomicNumber(m, reduce_raw(*ctx, std::move(raw)));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (_order != o._order) {
        unsigned long m = lcm_ul(_order, o._order);
        return to_order(m) + o.to_order(m);
    }
    std::vector<Rational> c(_coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o._coords[i];
    return CyclotomicNumber(_order, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (_order != o._order) {
        unsigned long m = lcm_ul(_order, o._order);
        return to_order(m) * o.to_order(m);
    }
    auto ctx = context(_order);
    std::vector<Rational> raw(2 * _coords.size() - 1, Rational(0));
    for (std::size_t i = 0; i < _coords.size(); ++i) {
        if (_coords[i] == 0) continue;
        for (std::size_t j = 0; j < o._coords.size(); ++j)
            if (o._coords[j] != 0) raw[i + j] += _coords[i] * o._coords[j];
    }
    return CyclotomicNumber(_order, reduce_raw(*ctx, std::move(raw)));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    auto ctx = context(_order);
    // Extended Euclid against Phi_n, tracking s with r_i == s_i * this
    // (mod Phi_n). Phi_n is irreducible over Q, so the gcd is a nonzero
    // constant c and s1 / c is the inverse.
    QPoly r0(ctx->poly.size());
    for (std::size_t i = 0; i < ctx->poly.size(); ++i) r0[i] = Rational(ctx->poly[i]);
    QPoly r1(_coords);
    qtrim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly rem = qmod(std::move(r0), r1, s0, s1);  // s0 becomes s_rem
        r0 = std::move(r1);
        r1 = std::move(rem);
        std::swap(s0, s1);  // s0 = old s1, s1 = s_rem
    }
    if (r1.empty()) throw std::logic_error("cyclotomic: inverse hit zero gcd");
    Rational c = r1[0];
    std::vector<Rational> inv(s1.begin(), s1.end());
    for (auto& x : inv) x /= c;
    return CyclotomicNumber(_order, reduce_raw(*ctx, std::move(inv)));
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const {
    if (_order != o._order) {
        unsigned long m = lcm_ul(_order, o._order);
        return to_order(m) / o.to_order(m);
    }
    return *this * o.inverse();
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    if (_order == o._order) return _coords == o._coords;
    unsigned long m = lcm_ul(_order, o._order);
    return to_order(m)._coords == o.to_order(m)._coords;
}

CyclotomicNumber CyclotomicNumber::pow(long k) const {
    if (k == 0) return CyclotomicNumber(Rational(1)).to_order(_order);
    CyclotomicNumber base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    CyclotomicNumber acc = CyclotomicNumber(Rational(1)).to_order(_order);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
    long kk = k % static_cast<long>(_order);
    if (kk < 0) kk += static_cast<long>(_order);
    if (gcd_ul(static_cast<unsigned long>(kk), _order) != 1)
        throw std::domain_error("cyclotomic: galois exponent not coprime to order");
    auto ctx = context(_order);
    std::vector<Rational> raw(_order, Rational(0));
    for (std::size_t i = 0; i < _coords.size(); ++i)
        raw[(i * static_cast<unsigned long>(kk)) % _order] += _coords[i];
    return CyclotomicNumber(_order, reduce_raw(*ctx, std::move(raw)));
}

Cplx CyclotomicNumber::embed(long k, unsigned precision) const {
    if (precision > 113)
        throw std::domain_error("cyclotomic: embedding supports at most 113 bits");
    long kk = k % static_cast<long>(_order);
    if (kk < 0) kk += static_cast<long>(_order);
    if (gcd_ul(static_cast<unsigned long>(kk), _order) != 1)
        throw std::domain_error("cyclotomic: embedding exponent not coprime to order");
    Cplx acc;
    for (std::size_t i = 0; i < _coords.size(); ++i) {
        if (_coords[i] == 0) continue;
        Float128 num(_coords[i].get_num().get_str());
        Float128 den(_coords[i].get_den().get_str());
        long e = static_cast<long>((i * static_cast<unsigned long>(kk)) % _order);
        acc += Cplx(num / den) * unit_phase(e, static_cast<long>(_order));
    }
    return acc;
}

std::vector<Rational> CyclotomicNumber::mult_char_poly() const {
    auto ctx = context(_order);
    const unsigned long phi = ctx->phi;
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, Rational(0)));
    for (unsigned long j = 0; j < phi; ++j) {
        std::vector<Rational> raw(_coords.size() + j, Rational(0));
        for (std::size_t i = 0; i < _coords.size(); ++i) raw[i + j] = _coords[i];
        std::vector<Rational> col = reduce_raw(*ctx, std::move(raw));
        for (unsigned long i = 0; i < phi; ++i) m[i][j] = col[i];
    }
    return berkowitz_char_poly(m, Rational(0), Rational(1));
}

bool CyclotomicNumber::p_unit(const BigInt& p) const {
    if (!is_prime(p)) throw std::domain_error("p_unit: modulus must be prime");
    if (is_zero()) return false;
    std::vector<Rational> cp = mult_char_poly();
    for (const auto& c : cp)
        if (!is_p_integral(c, p)) return false;
    return cp[0] != 0 && rat_valuation(cp[0], p) == 0;
}

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& x) {
    return CyclotomicNumber(a) * x;
}

}  // namespace epslab
