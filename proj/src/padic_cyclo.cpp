#include "epslab/padic_cyclo.hpp"

#include <stdexcept>
#include <utility>

namespace epslab {

namespace {

// Integer scalar times a p-adic value, the integer converted at a relative
// precision that cannot truncate the other factor.
PadicNumber int_scale(const BigInt& c, const PadicNumber& x) {
    unsigned prec = x.is_zero_at_precision() ? 1 : x.precision();
    return PadicNumber::from_integer(c, x.p(), prec) * x;
}

}  // namespace

PadicCyclo::PadicCyclo(unsigned long order, std::vector<PadicNumber> coords)
    : _order(order), _coords(std::move(coords)) {
    auto ctx = cyclo_reduction(order);
    if (_coords.size() != ctx->phi)
        throw std::invalid_argument("padic cyclotomic: coordinate count must equal phi(order)");
    for (const auto& x : _coords)
        if (x.p() != _coords[0].p())
            throw std::invalid_argument("padic cyclotomic: mixed primes in coordinates");
}

PadicCyclo PadicCyclo::zero(unsigned long order, unsigned long p) {
    auto ctx = cyclo_reduction(order);
    return PadicCyclo(order, std::vector<PadicNumber>(ctx->phi, PadicNumber::zero(p)));
}

PadicCyclo PadicCyclo::one(unsigned long order, unsigned long p, unsigned prec) {
    PadicCyclo x = zero(order, p);
    x._coords[0] = PadicNumber::one(p, prec);
    return x;
}

PadicCyclo PadicCyclo::from_cyclo(const CyclotomicNumber& x, unsigned long p, unsigned prec) {
    const auto& c = x.coords();
    std::vector<PadicNumber> out;
    out.reserve(c.size());
    for (const auto& r : c)
        out.push_back(r == 0 ? PadicNumber::zero(p) : PadicNumber::from_rational(r, p, prec));
    return PadicCyclo(x.order(), std::move(out));
}

PadicCyclo PadicCyclo::from_scalar(const PadicNumber& x, unsigned long order) {
    PadicCyclo out = zero(order, x.p());
    out._coords[0] = x;
    return out;
}

PadicCyclo PadicCyclo::operator+(const PadicCyclo& o) const {
    if (_order != o._order) throw std::invalid_argument("padic cyclotomic: mixed orders");
    std::vector<PadicNumber> out;
    out.reserve(_coords.size());
    for (std::size_t i = 0; i < _coords.size(); ++i) out.push_back(_coords[i] + o._coords[i]);
    return PadicCyclo(_order, std::move(out));
}

PadicCyclo PadicCyclo::operator-(const PadicCyclo& o) const {
    if (_order != o._order) throw std::invalid_argument("padic cyclotomic: mixed orders");
    std::vector<PadicNumber> out;
    out.reserve(_coords.size());
    for (std::size_t i = 0; i < _coords.size(); ++i) out.push_back(_coords[i] - o._coords[i]);
    return PadicCyclo(_order, std::move(out));
}

PadicCyclo PadicCyclo::operator*(const PadicCyclo& o) const {
    if (_order != o._order) throw std::invalid_argument("padic cyclotomic: mixed orders");
    auto ctx = cyclo_reduction(_order);
    const unsigned long phi = ctx->phi;
    const unsigned long p = this->p();
    std::vector<PadicNumber> raw(2 * phi > 0 ? 2 * phi - 1 : 1, PadicNumber::zero(p));
    for (std::size_t i = 0; i < phi; ++i)
        for (std::size_t j = 0; j < phi; ++j)
            raw[i + j] = raw[i + j] + _coords[i] * o._coords[j];
    for (std::size_t k = raw.size(); k-- > phi;) {
        const std::vector<BigInt>& row = ctx->rows.at(k - phi);
        for (unsigned long i = 0; i < phi; ++i)
            if (row[i] != 0) raw[i] = raw[i] + int_scale(row[i], raw[k]);
    }
    raw.resize(phi, PadicNumber::zero(p));
    return PadicCyclo(_order, std::move(raw));
}

PadicCyclo PadicCyclo::scaled(const PadicNumber& c) const {
    std::vector<PadicNumber> out;
    out.reserve(_coords.size());
    for (const auto& x : _coords) out.push_back(c * x);
    return PadicCyclo(_order, std::move(out));
}

PadicCyclo PadicCyclo::pow(unsigned long k, unsigned prec) const {
    PadicCyclo acc = one(_order, p(), prec);
    PadicCyclo base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool PadicCyclo::congruent(const PadicCyclo& o) const {
    if (_order != o._order) throw std::invalid_argument("padic cyclotomic: mixed orders");
    for (std::size_t i = 0; i < _coords.size(); ++i)
        if (!_coords[i].congruent(o._coords[i])) return false;
    return true;
}

bool PadicCyclo::is_zero_at_precision() const {
    for (const auto& x : _coords)
        if (!x.is_zero_at_precision()) return false;
    return true;
}

PadicNumber PadicCyclo::scalar_value() const {
    for (std::size_t i = 1; i < _coords.size(); ++i)
        if (!_coords[i].is_zero_at_precision())
            throw PrecisionExhausted(
                "padic cyclotomic: value not certified rational at working precision");
    return _coords[0];
}

}  // namespace epslab
