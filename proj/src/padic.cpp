#include "epslab/padic.hpp"

#include <algorithm>
#include <limits>

namespace epslab {

namespace {

const long kMaxAbsPrecision = 1L << 40;

BigInt ppow(unsigned long p, unsigned long k) { return pow_bigint(BigInt(p), k); }

BigInt mod_into(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // result in [0, m)
    return r;
}

BigInt inv_mod(const BigInt& u, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("padic: unit inversion failed");
    return r;
}

long clamp_abs(long a) { return std::min(a, kMaxAbsPrecision); }

}  // namespace

PadicNumber PadicNumber::zero_at(unsigned long p, long abs_prec) {
    PadicNumber x;
    x._p = p;
    x._val = clamp_abs(abs_prec);
    x._zero = true;
    return x;
}

PadicNumber PadicNumber::zero(unsigned long p) { return zero_at(p, kMaxAbsPrecision); }

PadicNumber PadicNumber::from_rational(const Rational& r, unsigned long p, unsigned prec) {
    if (p < 2 || !is_prime(BigInt(p))) throw std::domain_error("padic: p must be prime");
    if (prec == 0) throw std::domain_error("padic: precision must be positive");
    if (r == 0) return zero_at(p, prec);
    long v = rat_valuation(r, p);
    BigInt pk = ppow(p, prec);
    BigInt num = r.get_num(), den = r.get_den(), q;
    long vn = v > 0 ? v : 0, vd = v < 0 ? -v : 0;
    if (vn) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), ppow(p, vn).get_mpz_t());
    if (vd) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), ppow(p, vd).get_mpz_t());
    PadicNumber x;
    x._p = p;
    x._val = v;
    x._prec = prec;
    x._unit = mod_into(num * inv_mod(mod_into(den, pk), pk), pk);
    x._zero = false;
    return x;
}

PadicNumber PadicNumber::from_integer(const BigInt& n, unsigned long p, unsigned prec) {
    return from_rational(Rational(n), p, prec);
}

PadicNumber PadicNumber::one(unsigned long p, unsigned prec) {
    return from_rational(Rational(1), p, prec);
}

PadicNumber PadicNumber::p_power(unsigned long p, long k, unsigned prec) {
    PadicNumber x = one(p, prec);
    x._val = k;
    return x;
}

long PadicNumber::valuation() const {
    if (_zero)
        throw PrecisionExhausted("padic: valuation of a zero-at-precision value (O(p^" +
                                 std::to_string(_val) + "))");
    return _val;
}

const BigInt& PadicNumber::unit_part() const {
    if (_zero) throw PrecisionExhausted("padic: unit part of a zero-at-precision value");
    return _unit;
}

std::vector<unsigned long> PadicNumber::digits() const {
    std::vector<unsigned long> d;
    if (_zero) return d;
    BigInt u = _unit, q, r;
    BigInt p(_p);
    for (unsigned i = 0; i < _prec; ++i) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        d.push_back(r.get_ui());
        u = q;
    }
    return d;
}

PadicNumber PadicNumber::operator-() const {
    if (_zero) return *this;
    PadicNumber x = *this;
    x._unit = ppow(_p, _prec) - _unit;
    return x;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (_p != o._p) throw std::invalid_argument("padic: mixed primes");
    if (_zero && o._zero) return zero_at(_p, std::min(_val, o._val));
    if (_zero || o._zero) {
        const PadicNumber& x = _zero ? o : *this;
        long a = _zero ? _val : o._val;
        long cap = std::min(a, x.abs_precision());
        if (x._val >= cap) return zero_at(_p, cap);
        PadicNumber r = x;
        r._prec = static_cast<unsigned>(cap - x._val);
        r._unit = mod_into(x._unit, ppow(_p, r._prec));
        return r;
    }
    long v = std::min(_val, o._val);
    long cap = std::min(abs_precision(), o.abs_precision());
    BigInt m = ppow(_p, static_cast<unsigned long>(cap - v));
    BigInt s = mod_into(_unit * ppow(_p, static_cast<unsigned long>(_val - v)) +
                            o._unit * ppow(_p, static_cast<unsigned long>(o._val - v)),
                        m);
    if (s == 0) return zero_at(_p, cap);
    long w = int_valuation(s, BigInt(_p));
    PadicNumber r;
    r._p = _p;
    r._zero = false;
    r._val = v + w;
    r._prec = static_cast<unsigned>(cap - r._val);
    if (w) mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), ppow(_p, w).get_mpz_t());
    r._unit = mod_into(s, ppow(_p, r._prec));
    return r;
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (_p != o._p) throw std::invalid_argument("padic: mixed primes");
    if (_zero && o._zero) return zero_at(_p, _val + o._val);
    if (_zero) return zero_at(_p, _val + o._val);
    if (o._zero) return zero_at(_p, o._val + _val);
    PadicNumber r;
    r._p = _p;
    r._zero = false;
    r._val = _val + o._val;
    r._prec = std::min(_prec, o._prec);
    r._unit = mod_into(_unit * o._unit, ppow(_p, r._prec));
    return r;
}

PadicNumber PadicNumber::inverse() const {
    if (_zero)
        throw PrecisionExhausted("padic: cannot invert a value that is zero at precision O(p^" +
                                 std::to_string(_val) + ")");
    PadicNumber r = *this;
    r._val = -_val;
    r._unit = inv_mod(_unit, ppow(_p, _prec));
    return r;
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const { return *this * o.inverse(); }

PadicNumber PadicNumber::pow(long k) const {
    if (k == 0) return one(_p, _zero ? 1 : _prec);
    if (_zero) {
        if (k < 0) throw PrecisionExhausted("padic: negative power of zero-at-precision value");
        return zero_at(_p, _val * k);
    }
    PadicNumber base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    PadicNumber acc = one(_p, _prec);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool PadicNumber::congruent(const PadicNumber& o) const {
    if (_p != o._p) throw std::invalid_argument("padic: mixed primes");
    return (*this - o).is_zero_at_precision();
}

std::string PadicNumber::to_string() const {
    std::string ps = std::to_string(_p);
    if (_zero) return "O(" + ps + "^" + std::to_string(_val) + ")";
    return ps + "^" + std::to_string(_val) + "*" + _unit.get_str() + " + O(" + ps + "^" +
           std::to_string(abs_precision()) + ")";
}

PadicMatrix::PadicMatrix(std::size_t rows, std::size_t cols, const PadicNumber& fill)
    : _rows(rows), _cols(cols), _a(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("padic matrix: empty dimension");
}

PadicMatrix PadicMatrix::identity(std::size_t n, unsigned long p, unsigned prec) {
    PadicMatrix m(n, n, PadicNumber::zero_at(p, prec));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PadicNumber::one(p, prec);
    return m;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
    if (_cols != o._rows) throw std::invalid_argument("padic matrix: shape mismatch");
    PadicMatrix r(_rows, o._cols, PadicNumber::zero_at(at(0, 0).p(), kMaxAbsPrecision));
    for (std::size_t i = 0; i < _rows; ++i)
        for (std::size_t j = 0; j < o._cols; ++j) {
            PadicNumber acc = PadicNumber::zero_at(at(0, 0).p(), kMaxAbsPrecision);
            for (std::size_t k = 0; k < _cols; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool PadicMatrix::congruent(const PadicMatrix& o) const {
    if (_rows != o._rows || _cols != o._cols) return false;
    for (std::size_t i = 0; i < _a.size(); ++i)
        if (!_a[i].congruent(o._a[i])) return false;
    return true;
}

namespace {

// Minimal-valuation pivot in the trailing submatrix, ties row-major.
// Returns false when every candidate is zero-at-precision.
bool find_pivot(const PadicMatrix& a, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    long best = 0;
    for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
            const PadicNumber& x = a.at(i, j);
            if (x.is_zero_at_precision()) continue;
            if (!found || x.valuation() < best) {
                found = true;
                best = x.valuation();
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

PadicNumber PadicMatrix::det() const {
    if (_rows != _cols) throw std::invalid_argument("padic matrix: determinant of non-square");
    PadicMatrix a = *this;
    const unsigned long p = at(0, 0).p();
    int sign = 1;
    std::vector<PadicNumber> pivots;
    for (std::size_t k = 0; k < _rows; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(a, k, pi, pj))
            throw PrecisionExhausted(
                "padic matrix: determinant not certified nonzero at working precision");
        if (pi != k) {
            for (std::size_t j = 0; j < _cols; ++j) std::swap(a.at(pi, j), a.at(k, j));
            sign = -sign;
        }
        if (pj != k) {
            for (std::size_t i = 0; i < _rows; ++i) std::swap(a.at(i, pj), a.at(i, k));
            sign = -sign;
        }
        const PadicNumber pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < _rows; ++i) {
            if (a.at(i, k).is_zero_at_precision()) continue;
            PadicNumber f = a.at(i, k) / pivot;
            for (std::size_t j = k; j < _cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
        pivots.push_back(pivot);
    }
    PadicNumber d = PadicNumber::one(p, pivots.empty() ? 1 : pivots[0].precision());
    for (const auto& x : pivots) d = d * x;
    return sign < 0 ? -d : d;
}

SmithResult smith_normal_form(const PadicMatrix& m) {
    const unsigned long p = m.at(0, 0).p();
    const std::size_t r = m.rows(), c = m.cols(), steps = std::min(r, c);
    // Transform precision: enough to carry every unit arithmetic the
    // elimination performs alongside the working matrix.
    unsigned tprec = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const PadicNumber& x = m.at(i, j);
            if (!x.is_zero_at_precision()) tprec = std::max(tprec, x.precision());
        }
    PadicMatrix a = m;
    PadicMatrix left = PadicMatrix::identity(r, p, tprec);
    PadicMatrix left_inv = left;
    PadicMatrix right = PadicMatrix::identity(c, p, tprec);
    PadicMatrix right_inv = right;
    std::vector<long> exponents;

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < c; ++j) std::swap(a.at(i, j), a.at(k, j));
        for (std::size_t j = 0; j < r; ++j) std::swap(left.at(i, j), left.at(k, j));
        for (std::size_t j = 0; j < r; ++j) std::swap(left_inv.at(j, i), left_inv.at(j, k));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < r; ++i) std::swap(a.at(i, j), a.at(i, k));
        for (std::size_t i = 0; i < c; ++i) std::swap(right.at(i, j), right.at(i, k));
        for (std::size_t i = 0; i < c; ++i) std::swap(right_inv.at(j, i), right_inv.at(k, i));
    };
    // row_i -= f * row_k
    auto row_op = [&](std::size_t i, std::size_t k, const PadicNumber& f) {
        for (std::size_t j = 0; j < c; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        for (std::size_t j = 0; j < r; ++j) left.at(i, j) = left.at(i, j) - f * left.at(k, j);
        for (std::size_t j = 0; j < r; ++j)
            left_inv.at(j, k) = left_inv.at(j, k) + f * left_inv.at(j, i);
    };
    // col_j -= f * col_k
    auto col_op = [&](std::size_t j, std::size_t k, const PadicNumber& f) {
        for (std::size_t i = 0; i < r; ++i) a.at(i, j) = a.at(i, j) - f * a.at(i, k);
        for (std::size_t i = 0; i < c; ++i) right.at(i, j) = right.at(i, j) - f * right.at(i, k);
        for (std::size_t i = 0; i < c; ++i)
            right_inv.at(k, i) = right_inv.at(k, i) + f * right_inv.at(j, i);
    };

    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(a, k, pi, pj)) {
            bool any = false;
            for (std::size_t i = k; i < r && !any; ++i)
                for (std::size_t j = k; j < c && !any; ++j)
                    if (a.at(i, j).abs_precision() < kMaxAbsPrecision) any = true;
            throw PrecisionExhausted(
                "smith normal form: remaining block is zero at working precision; raise precision");
        }
        if (pi != k) swap_rows(pi, k);
        if (pj != k) swap_cols(pj, k);
        PadicNumber pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < r; ++i)
            if (!a.at(i, k).is_zero_at_precision()) row_op(i, k, a.at(i, k) / pivot);
        for (std::size_t j = k + 1; j < c; ++j)
            if (!a.at(k, j).is_zero_at_precision()) col_op(j, k, a.at(k, j) / pivot);
        // Normalize the pivot to an exact p-power: scale row k by the unit
        // inverse (a unimodular operation over Z_p).
        long e = pivot.valuation();
        PadicNumber unit = pivot * PadicNumber::p_power(p, -e, pivot.precision());
        PadicNumber uinv = unit.inverse();
        for (std::size_t j = 0; j < c; ++j) a.at(k, j) = a.at(k, j) * uinv;
        for (std::size_t j = 0; j < r; ++j) left.at(k, j) = left.at(k, j) * uinv;
        for (std::size_t j = 0; j < r; ++j) left_inv.at(j, k) = left_inv.at(j, k) * unit;
        exponents.push_back(e);
    }
    return SmithResult{std::move(exponents), std::move(a),        std::move(left),
                       std::move(right),     std::move(left_inv), std::move(right_inv)};
}

}  // namespace epslab
