#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace epslab {

/// Element sigma^a tau^b in canonical form, 0 <= a < e, 0 <= b < f.
struct GroupElem {
    unsigned long a = 0, b = 0;
    bool operator==(const GroupElem&) const = default;
};

/**
 * Metacyclic group G(e, f, q, c) on generators sigma, tau with relations
 * sigma^e = 1, tau^f = sigma^c, tau sigma tau^{-1} = sigma^q. Requires
 * gcd(q, e) = 1, q^f = 1 (mod e) and c(q - 1) = 0 (mod e); the constructor
 * rejects inconsistent data.
 */
class MetacyclicGroup {
public:
    MetacyclicGroup(unsigned long e, unsigned long f, unsigned long q, unsigned long c);

    unsigned long e() const { return _e; }
    unsigned long f() const { return _f; }
    unsigned long q() const { return _q; }
    unsigned long c() const { return _c; }
    unsigned long order() const { return _e * _f; }
    bool is_abelian() const { return _q % _e == 1 % _e; }

    GroupElem identity() const { return {0, 0}; }
    GroupElem sigma() const { return {1 % _e, 0}; }
    GroupElem tau() const { return {0, 1 % _f}; }

    GroupElem mul(const GroupElem&, const GroupElem&) const;
    GroupElem inv(const GroupElem&) const;
    GroupElem pow(GroupElem g, long k) const;
    GroupElem conj(const GroupElem& g, const GroupElem& by) const;  // by g by^{-1}

    std::size_t index(const GroupElem& g) const { return g.a * _f + g.b; }
    GroupElem element(std::size_t index) const;
    std::vector<GroupElem> elements() const;

    /// The distinguished cyclic normal subgroup <sigma>.
    std::vector<GroupElem> inertia_subgroup() const;
    std::vector<GroupElem> subgroup_closure(const std::vector<GroupElem>& generators) const;

    const std::vector<std::vector<GroupElem>>& conjugacy_classes() const;
    std::size_t class_of(const GroupElem& g) const;

    std::string describe() const;
    bool operator==(const MetacyclicGroup& o) const {
        return _e == o._e && _f == o._f && _q == o._q && _c == o._c;
    }

private:
    unsigned long _e, _f, _q, _c;
    mutable std::vector<std::vector<GroupElem>> _classes;  // built lazily
    mutable std::vector<std::size_t> _class_of;
};

}  // namespace epslab
