#pragma once

#include "epslab/group.hpp"
#include "epslab/linalg.hpp"

#include <vector>

namespace epslab {

/**
 * Irreducible character of a metacyclic group, carried together with an
 * explicit monomial matrix representation (one matrix per group element,
 * entries in a cyclotomic field). Immutable after construction.
 */
class Character {
public:
    const MetacyclicGroup& group() const { return _group; }
    unsigned long degree() const { return _degree; }
    bool is_trivial() const;

    const CyclotomicNumber& value(const GroupElem& g) const { return _values[_group.index(g)]; }
    const CycloMatrix& rep(const GroupElem& g) const { return _reps[_group.index(g)]; }

    /// Construction parameters: orbit representative on Z/e and extension index.
    unsigned long orbit_rep() const { return _m; }
    unsigned long ext_index() const { return _t; }
    std::string label() const;

private:
    friend std::vector<Character> irr_table(const MetacyclicGroup&);
    Character(MetacyclicGroup g, unsigned long m, unsigned long t, std::vector<CycloMatrix> reps);

    MetacyclicGroup _group;
    unsigned long _m, _t, _degree;
    std::vector<CycloMatrix> _reps;
    std::vector<CyclotomicNumber> _values;
};

/**
 * Full irreducible character table. Characters of the inertia generator
 * sigma are induced from their stabilizer, so each induction is already
 * irreducible; the table is ordered by ascending degree, then by orbit
 * representative and extension index. Vanishes-nowhere check: the sum of
 * squared degrees must equal |G|.
 */
std::vector<Character> irr_table(const MetacyclicGroup& g);

/// dim V^H = (1/|H|) sum_{h in H} chi(h) for the subgroup generated by the
/// given elements. Always a nonnegative integer.
unsigned long fixed_space_dim(const Character& chi, const std::vector<GroupElem>& generators);

}  // namespace epslab
