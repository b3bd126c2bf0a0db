#include "epslab/group.hpp"

#include "epslab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace epslab {

MetacyclicGroup::MetacyclicGroup(unsigned long e, unsigned long f, unsigned long q,
                                 unsigned long c)
    : _e(e), _f(f), _q(q % (e ? e : 1)), _c(c % (e ? e : 1)) {
    if (e == 0 || f == 0) throw std::domain_error("metacyclic: e and f must be positive");
    if (gcd_ul(_q, _e) != 1)
        throw std::domain_error("metacyclic: q must be invertible mod e");
    if (powmod_ul(_q, _f, _e) != 1 % _e)
        throw std::domain_error("metacyclic: inconsistent extension, q^f != 1 (mod e)");
    unsigned long qm1 = (_q + _e - 1) % _e;
    if ((_c * qm1) % _e != 0)
        throw std::domain_error("metacyclic: inconsistent extension, c(q-1) != 0 (mod e)");
}

GroupElem MetacyclicGroup::mul(const GroupElem& x, const GroupElem& y) const {
    unsigned long t = x.b + y.b;
    unsigned long wrap = t / _f;
    unsigned long a = (x.a + y.a * powmod_ul(_q, x.b, _e) + _c * wrap) % _e;
    return {a, t % _f};
}

GroupElem MetacyclicGroup::inv(const GroupElem& g) const {
    if (g.b == 0) return {(_e - g.a % _e) % _e, 0};
    unsigned long y = _f - g.b;
    unsigned long qinv = powmod_ul(_q, _f - 1, _e);  // q^{-1} mod e
    unsigned long rhs = (_e - (g.a + _c) % _e) % _e;
    unsigned long x = (rhs * powmod_ul(qinv, g.b, _e)) % _e;
    return {x, y % _f};
}

GroupElem MetacyclicGroup::pow(GroupElem g, long k) const {
    if (k < 0) {
        g = inv(g);
        k = -k;
    }
    GroupElem acc = identity(), base = g;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

GroupElem MetacyclicGroup::conj(const GroupElem& g, const GroupElem& by) const {
    return mul(mul(by, g), inv(by));
}

GroupElem MetacyclicGroup::element(std::size_t index) const {
    if (index >= order()) throw std::out_of_range("metacyclic: element index");
    return {static_cast<unsigned long>(index) / _f, static_cast<unsigned long>(index) % _f};
}

std::vector<GroupElem> MetacyclicGroup::elements() const {
    std::vector<GroupElem> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back(element(i));
    return out;
}

std::vector<GroupElem> MetacyclicGroup::inertia_subgroup() const {
    std::vector<GroupElem> out;
    out.reserve(_e);
    for (unsigned long a = 0; a < _e; ++a) out.push_back({a, 0});
    return out;
}

std::vector<GroupElem> MetacyclicGroup::subgroup_closure(
    const std::vector<GroupElem>& generators) const {
    std::vector<bool> seen(order(), false);
    seen[index(identity())] = true;
    std::vector<GroupElem> out{identity()}, frontier{identity()};
    std::vector<GroupElem> gens;
    for (const auto& g : generators) {
        if (g.a >= _e || g.b >= _f) throw std::invalid_argument("metacyclic: element out of range");
        gens.push_back(g);
        gens.push_back(inv(g));
    }
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElem y = mul(x, g);
                if (!seen[index(y)]) {
                    seen[index(y)] = true;
                    out.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [&](const GroupElem& x, const GroupElem& y) { return index(x) < index(y); });
    return out;
}

const std::vector<std::vector<GroupElem>>& MetacyclicGroup::conjugacy_classes() const {
    if (!_classes.empty()) return _classes;
    _class_of.assign(order(), order());
    for (std::size_t i = 0; i < order(); ++i) {
        if (_class_of[i] != order()) continue;
        std::size_t cls = _classes.size();
        std::vector<GroupElem> members;
        GroupElem g = element(i);
        for (std::size_t j = 0; j < order(); ++j) {
            GroupElem h = conj(g, element(j));
            if (_class_of[index(h)] == order()) {
                _class_of[index(h)] = cls;
                members.push_back(h);
            }
        }
        std::sort(members.begin(), members.end(),
                  [&](const GroupElem& x, const GroupElem& y) { return index(x) < index(y); });
        _classes.push_back(std::move(members));
    }
    return _classes;
}

std::size_t MetacyclicGroup::class_of(const GroupElem& g) const {
    conjugacy_classes();
    return _class_of[index(g)];
}

std::string MetacyclicGroup::describe() const {
    return "G(e=" + std::to_string(_e) + ",f=" + std::to_string(_f) + ",q=" + std::to_string(_q) +
           ",c=" + std::to_string(_c) + ")";
}

}  // namespace epslab
