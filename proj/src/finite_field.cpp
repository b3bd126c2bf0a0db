#include "epslab/finite_field.hpp"

#include "epslab/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace epslab {

namespace {

constexpr unsigned long kMaxFieldSize = 1UL << 20;

// Multiplicative order of x in F_p[x]/(modulus), or 0 if the walk hits a
// non-unit situation (never exceeds `bound` steps). On success fills `powers`
// with x^0, x^1, ..., x^{order-1} encoded as indices.
unsigned long order_of_x(unsigned long p, const std::vector<unsigned long>& modulus,
                         unsigned long bound, std::vector<unsigned long>* powers) {
    unsigned k = static_cast<unsigned>(modulus.size()) - 1;
    std::vector<unsigned long> cur(k, 0);
    cur[0] = 1;  // the constant 1
    if (powers) {
        powers->clear();
        powers->push_back(1);
    }
    for (unsigned long step = 1; step <= bound; ++step) {
        // cur *= x, then reduce the overflow coefficient via the monic modulus.
        unsigned long top = cur[k - 1];
        for (unsigned j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0) {
            for (unsigned j = 0; j < k; ++j) {
                unsigned long t = (top * (p - modulus[j] % p)) % p;
                cur[j] = (cur[j] + t) % p;
            }
        }
        unsigned long index = 0, base = 1;
        bool is_one = true;
        for (unsigned j = 0; j < k; ++j) {
            index += cur[j] * base;
            base *= p;
            if (cur[j] != (j == 0 ? 1UL : 0UL)) is_one = false;
        }
        if (is_one) return step;
        if (index == 0) return 0;  // x is a zero divisor here
        if (powers) powers->push_back(index);
    }
    return 0;
}

}  // namespace

FiniteField::FiniteField(unsigned long p, unsigned k) : _p(p), _k(k) {
    if (!is_prime(p)) throw std::invalid_argument("finite field: p must be prime");
    if (k == 0) throw std::invalid_argument("finite field: degree must be positive");
    unsigned long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kMaxFieldSize / p) throw std::invalid_argument("finite field: size too large");
        q *= p;
    }
    _q = q;

    std::vector<unsigned long> powers;
    if (k == 1) {
        // The prime field itself: pick the smallest primitive root.
        unsigned long g = 0;
        for (unsigned long cand = 1; cand < p && g == 0; ++cand) {
            unsigned long cur = cand % p, order = 1;
            while (cur != 1) {
                cur = (cur * cand) % p;
                ++order;
            }
            if (order == p - 1) g = cand;
        }
        if (g == 0) throw std::logic_error("finite field: no primitive root found");
        _gen = g;
        _modulus = {(p - g % p) % p, 1};
        powers.reserve(p - 1);
        unsigned long cur = 1;
        for (unsigned long j = 0; j + 1 < p; ++j) {
            powers.push_back(cur);
            cur = (cur * g) % p;
        }
    } else {
        // Scan monic candidates in lexicographic index order; the first whose
        // root x has full multiplicative order q-1 is the modulus. Reaching
        // order q-1 forces irreducibility, so no separate factor test is
        // needed.
        bool found = false;
        for (unsigned long n = 1; n < q && !found; ++n) {
            if (n % p == 0) continue;  // constant term 0: x would not be a unit
            std::vector<unsigned long> cand(k + 1, 0);
            unsigned long rest = n;
            for (unsigned j = 0; j < k; ++j) {
                cand[j] = rest % p;
                rest /= p;
            }
            cand[k] = 1;
            std::vector<unsigned long> tab;
            if (order_of_x(p, cand, q - 1, &tab) == q - 1) {
                _modulus = cand;
                powers = std::move(tab);
                found = true;
            }
        }
        if (!found) throw std::logic_error("finite field: no primitive polynomial found");
        _gen = p;  // the element x
    }

    _pow = std::move(powers);
    _dlog.assign(_q, _q);  // _q is the "undefined" sentinel
    for (unsigned long j = 0; j < _pow.size(); ++j) _dlog[_pow[j]] = j;
}

void FiniteField::check(unsigned long a) const {
    if (a >= _q) throw std::out_of_range("finite field: element index out of range");
}

unsigned long FiniteField::add(unsigned long a, unsigned long b) const {
    check(a);
    check(b);
    unsigned long out = 0, base = 1;
    for (unsigned j = 0; j < _k; ++j) {
        out += ((a % _p + b % _p) % _p) * base;
        a /= _p;
        b /= _p;
        base *= _p;
    }
    return out;
}

unsigned long FiniteField::neg(unsigned long a) const {
    check(a);
    unsigned long out = 0, base = 1;
    for (unsigned j = 0; j < _k; ++j) {
        out += ((_p - a % _p) % _p) * base;
        a /= _p;
        base *= _p;
    }
    return out;
}

unsigned long FiniteField::sub(unsigned long a, unsigned long b) const { return add(a, neg(b)); }

unsigned long FiniteField::mul(unsigned long a, unsigned long b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return _pow[(_dlog[a] + _dlog[b]) % (_q - 1)];
}

unsigned long FiniteField::inv(unsigned long a) const {
    check(a);
    if (a == 0) throw std::domain_error("finite field: inverse of zero");
    return _pow[(_q - 1 - _dlog[a]) % (_q - 1)];
}

unsigned long FiniteField::dlog(unsigned long a) const {
    check(a);
    if (a == 0) throw std::domain_error("finite field: dlog of zero");
    return _dlog[a];
}

unsigned long FiniteField::gen_power(long e) const {
    long m = static_cast<long>(_q - 1);
    long r = e % m;
    if (r < 0) r += m;
    return _pow[static_cast<unsigned long>(r)];
}

unsigned long FiniteField::pow(unsigned long a, long e) const {
    check(a);
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("finite field: negative power of zero");
    }
    // Exponent arithmetic on discrete logs, reduced mod q-1.
    long m = static_cast<long>(_q - 1);
    unsigned long em = static_cast<unsigned long>(((e % m) + m) % m);
    return _pow[(_dlog[a] * em) % static_cast<unsigned long>(m)];
}

unsigned long FiniteField::trace(unsigned long a) const {
    check(a);
    if (a == 0) return 0;
    unsigned long acc = 0, cur = a;
    for (unsigned i = 0; i < _k; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, static_cast<long>(_p));
    }
    if (acc >= _p) throw std::logic_error("finite field: trace left the prime subfield");
    return acc;
}

std::shared_ptr<const FiniteField> finite_field(unsigned long p, unsigned k) {
    static std::mutex lock;
    static std::map<std::pair<unsigned long, unsigned>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto made = std::make_shared<const FiniteField>(p, k);
    cache.emplace(key, made);
    return made;
}

std::vector<unsigned long> subfield_embedding(const FiniteField& base, const FiniteField& lift) {
    if (base.p() != lift.p())
        throw std::invalid_argument("subfield embedding: fields have different characteristic");
    if (lift.degree() % base.degree() != 0)
        throw std::invalid_argument("subfield embedding: base degree does not divide lift degree");

    unsigned long root = lift.size();  // sentinel
    if (base.degree() == 1) {
        root = base.generator() % lift.p();  // prime subfield sits at the constant indices
    } else {
        const auto& f = base.modulus();
        for (unsigned long z = 0; z < lift.size(); ++z) {
            // Horner evaluation of the base modulus at z inside the lift field.
            unsigned long acc = 0;
            for (size_t j = f.size(); j-- > 0;) {
                acc = lift.add(lift.mul(acc, z), f[j] % lift.p());
            }
            if (acc == 0) {
                root = z;
                break;
            }
        }
        if (root == lift.size())
            throw std::logic_error("subfield embedding: base modulus has no root in lift field");
    }

    // The embedding sends the base generator to `root`; every base element is
    // a polynomial in the generator with prime-field coefficients.
    std::vector<unsigned long> table(base.size(), 0);
    for (unsigned long a = 0; a < base.size(); ++a) {
        unsigned long rest = a, image = 0, power = 1;
        for (unsigned j = 0; j < base.degree(); ++j) {
            unsigned long digit = rest % base.p();
            rest /= base.p();
            // digit * root^j, with digit in the prime subfield of the lift.
            unsigned long term = 0;
            for (unsigned long i = 0; i < digit; ++i) term = lift.add(term, power);
            image = lift.add(image, term);
            power = lift.mul(power, root);
        }
        table[a] = image;
    }
    return table;
}

ResidueMultChar::ResidueMultChar(std::shared_ptr<const FiniteField> field, unsigned long order,
                                 unsigned long index)
    : _field(std::move(field)), _order(order), _index(index % (order == 0 ? 1 : order)) {
    if (!_field) throw std::invalid_argument("residue character: null field");
    if (_order == 0 || (_field->size() - 1) % _order != 0)
        throw std::invalid_argument("residue character: order must divide q-1");
    if (_order == 1) {
        _index = 0;
    } else {
        if (_index == 0 || gcd_ul(_index, _order) != 1)
            throw std::invalid_argument("residue character: index must be coprime to the order");
    }
}

CyclotomicNumber ResidueMultChar::value(unsigned long x) const {
    if (x == 0) throw std::domain_error("residue character: value at zero");
    unsigned long qm1 = _field->size() - 1;
    if (qm1 == 1) return CyclotomicNumber(Rational(1));
    unsigned long e = ((qm1 / _order) % qm1) * ((_index * _field->dlog(x)) % qm1) % qm1;
    return CyclotomicNumber::zeta(qm1, static_cast<long>(e));
}

ResidueMultChar ResidueMultChar::inverse() const {
    if (is_trivial()) return *this;
    return ResidueMultChar(_field, _order, _order - _index);
}

}  // namespace epslab
