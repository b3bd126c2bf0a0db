#pragma once

#include "epslab/character.hpp"
#include "epslab/group.hpp"
#include "epslab/linalg.hpp"
#include "epslab/padic.hpp"
#include "epslab/padic_cyclo.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace epslab {

/**
 * Element of the group algebra S[G] for a metacyclic G, stored densely by
 * element index. The scalar domain supplies no default constructor, so every
 * element carries the zero scalar it was built with (for the p-adic domain
 * this fixes the prime). Immutable value semantics apart from coeff().
 */
template <class S>
class GroupRingElement {
public:
    GroupRingElement(MetacyclicGroup g, const S& zero_scalar)
        : _group(std::move(g)), _zero(zero_scalar), _coeffs(_group.order(), zero_scalar) {}

    static GroupRingElement unit(const MetacyclicGroup& g, const S& one_scalar,
                                 const S& zero_scalar) {
        GroupRingElement x(g, zero_scalar);
        x.coeff(g.identity()) = one_scalar;
        return x;
    }

    const MetacyclicGroup& group() const { return _group; }
    const S& zero_scalar() const { return _zero; }
    const std::vector<S>& coefficients() const { return _coeffs; }
    const S& coeff(const GroupElem& g) const { return _coeffs[_group.index(g)]; }
    S& coeff(const GroupElem& g) { return _coeffs[_group.index(g)]; }

    GroupRingElement operator+(const GroupRingElement& o) const {
        require_same_group(o);
        GroupRingElement r(_group, _zero);
        for (std::size_t i = 0; i < _coeffs.size(); ++i) r._coeffs[i] = _coeffs[i] + o._coeffs[i];
        return r;
    }

    GroupRingElement operator-(const GroupRingElement& o) const {
        require_same_group(o);
        GroupRingElement r(_group, _zero);
        for (std::size_t i = 0; i < _coeffs.size(); ++i) r._coeffs[i] = _coeffs[i] - o._coeffs[i];
        return r;
    }

    /// Convolution product of the group algebra.
    GroupRingElement operator*(const GroupRingElement& o) const {
        require_same_group(o);
        GroupRingElement r(_group, _zero);
        const auto elems = _group.elements();
        for (const GroupElem& g : elems)
            for (const GroupElem& h : elems) {
                std::size_t k = _group.index(_group.mul(g, h));
                r._coeffs[k] = r._coeffs[k] + coeff(g) * o.coeff(h);
            }
        return r;
    }

    GroupRingElement scaled(const S& c) const {
        GroupRingElement r(_group, _zero);
        for (std::size_t i = 0; i < _coeffs.size(); ++i) r._coeffs[i] = c * _coeffs[i];
        return r;
    }

    /// k-th power, k >= 1 (the identity needs a one scalar; use unit()).
    GroupRingElement pow(unsigned long k) const {
        if (k == 0) throw std::invalid_argument("group ring: pow requires a positive exponent");
        GroupRingElement r = *this;
        for (unsigned long i = 1; i < k; ++i) r = r * *this;
        return r;
    }

private:
    void require_same_group(const GroupRingElement& o) const {
        if (!(_group == o._group)) throw std::invalid_argument("group ring: mixed groups");
    }

    MetacyclicGroup _group;
    S _zero;
    std::vector<S> _coeffs;
};

using CycloGroupRing = GroupRingElement<CyclotomicNumber>;
using PadicGroupRing = GroupRingElement<PadicNumber>;

/// One scalar per irreducible character, aligned with a shared character
/// table (the image domain of the reduced norm).
template <class S>
struct CenterVector {
    std::shared_ptr<const std::vector<Character>> table;
    std::vector<S> values;
};

template <class S>
CenterVector<S> make_center_vector(std::shared_ptr<const std::vector<Character>> table,
                                   std::vector<S> values) {
    if (!table || table->size() != values.size())
        throw std::invalid_argument("center vector: one component per irreducible character");
    return CenterVector<S>{std::move(table), std::move(values)};
}

/// Componentwise replacement of zero components by one; other components are
/// untouched. Idempotent.
CenterVector<CyclotomicNumber> sharp(const CenterVector<CyclotomicNumber>& v);
/// p-adic variant: a component is replaced when it is zero at its stated
/// precision; the inserted one carries the working precision of the vector.
CenterVector<PadicNumber> sharp(const CenterVector<PadicNumber>& v);

/// e_I = (1/|I|) sum of the subgroup elements; requires the element list to
/// be a subgroup. Central when the subgroup is normal.
CycloGroupRing idempotent_inertia(const MetacyclicGroup& g, const std::vector<GroupElem>& subgroup);
/// p-adic coefficients; |I| must be a p-unit (the tame hypothesis), else a
/// domain error.
PadicGroupRing idempotent_inertia_padic(const MetacyclicGroup& g,
                                        const std::vector<GroupElem>& subgroup, unsigned long p,
                                        unsigned prec);

/// det of the image of x under the matrix representation with character chi.
CyclotomicNumber det_chi(const Character& chi, const CycloGroupRing& x);
/// p-adic coefficients: the determinant lives in Q_p with the roots of unity
/// of the representation adjoined; division-free evaluation.
PadicCyclo det_chi(const Character& chi, const PadicGroupRing& x);

/// Reduced norm vector Nr(x) = (det_chi(chi, x))_chi over the given table.
CenterVector<CyclotomicNumber> norm_map(std::shared_ptr<const std::vector<Character>> table,
                                        const CycloGroupRing& x);

/// Matrix of left multiplication by x on the group algebra, basis = group
/// elements in index order.
CycloMatrix regular_representation(const CycloGroupRing& x);
PadicMatrix regular_representation(const PadicGroupRing& x);

/// True iff x is invertible in Z_p[G]: the regular representation has unit
/// determinant at working precision. Rejects non-integral x; throws
/// PrecisionExhausted when the determinant is zero at precision.
bool is_unit_padic(const PadicGroupRing& x);

/**
 * Dual computation of the reduced norm of an invertible element of F[G],
 * F cyclotomic: per character, (1) the determinant of the matrix
 * representation, and (2) the determinant of right multiplication acting on
 * the homomorphism space Hom(V, A e_chi) inside the isotypic decomposition.
 * Character-level data (idempotents, isotypic bases, homomorphism bases) is
 * built once per group and reused across checks.
 */
class ReducedNormChecker {
public:
    explicit ReducedNormChecker(const MetacyclicGroup& g);

    const std::shared_ptr<const std::vector<Character>>& table() const { return _table; }

    /// Route 1: componentwise det_chi.
    CenterVector<CyclotomicNumber> matrix_route(const CycloGroupRing& a) const;
    /// Route 2: per character, the action on Hom(V, A e_chi).
    CenterVector<CyclotomicNumber> module_route(const CycloGroupRing& a) const;
    /// True iff the two routes agree on every component. Throws
    /// std::domain_error when a is singular (some det_chi vanishes).
    bool diagram_commutes(const CycloGroupRing& a) const;

private:
    struct CharData {
        std::vector<CycloMatrix> hom_basis;  // |G| x d matrices, basis of Hom(V, A e_chi)
        std::vector<std::size_t> pivot_rows;  // rows making the flattened basis invertible
        CycloMatrix pivot_inverse;            // inverse of the pivot submatrix
        CharData() : pivot_inverse(1, 1) {}
    };

    MetacyclicGroup _group;
    std::shared_ptr<const std::vector<Character>> _table;
    std::vector<CharData> _data;
};

/// One-shot convenience over a per-group checker cache.
bool reduced_norm_diagram_check(const CycloGroupRing& a);

}  // namespace epslab
