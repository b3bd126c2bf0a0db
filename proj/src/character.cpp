#include "epslab/character.hpp"

#include "epslab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace epslab {

Character::Character(MetacyclicGroup g, unsigned long m, unsigned long t,
                     std::vector<CycloMatrix> reps)
    : _group(std::move(g)), _m(m), _t(t), _degree(reps.empty() ? 0 : reps[0].rows()),
      _reps(std::move(reps)) {
    _values.reserve(_reps.size());
    for (const auto& r : _reps) _values.push_back(r.trace());
}

bool Character::is_trivial() const {
    for (const auto& v : _values)
        if (v != CyclotomicNumber(1)) return false;
    return true;
}

std::string Character::label() const {
    return "chi[m=" + std::to_string(_m) + ",t=" + std::to_string(_t) +
           ",deg=" + std::to_string(_degree) + "]";
}

std::vector<Character> irr_table(const MetacyclicGroup& g) {
    const unsigned long e = g.e(), f = g.f(), q = g.q(), c = g.c();
    std::vector<Character> table;
    std::vector<bool> seen(e, false);
    for (unsigned long m = 0; m < e; ++m) {
        if (seen[m]) continue;
        // Orbit of m under multiplication by q on Z/e; its size d is the
        // degree of every character induced from this orbit.
        std::vector<unsigned long> orbit;
        unsigned long x = m;
        do {
            seen[x] = true;
            orbit.push_back(x);
            x = (x * q) % e;
        } while (x != m);
        const unsigned long d = orbit.size();
        if (f % d != 0) throw std::logic_error("irr_table: orbit size does not divide f");
        const unsigned long fd = f / d;

        // Stabilizer H = <sigma, tau^d>; the linear character psi~ on H is
        // psi~(sigma^a tau^{d b'}) = zeta_e^{m a} * x_t^{b'} where
        // x_t = zeta_{e f / d}^{m c} * zeta_{f/d}^t satisfies
        // x_t^{f/d} = zeta_e^{m c} = psi~(tau^f).
        for (unsigned long t = 0; t < fd; ++t) {
            CyclotomicNumber xt = CyclotomicNumber::zeta(e * fd, static_cast<long>(m * c)) *
                                  CyclotomicNumber::zeta(fd, static_cast<long>(t));
            auto psi = [&](const GroupElem& h) {
                return CyclotomicNumber::zeta(e, static_cast<long>(m * h.a)) *
                       xt.pow(static_cast<long>(h.b / d));
            };
            std::vector<CycloMatrix> reps;
            reps.reserve(g.order());
            for (std::size_t idx = 0; idx < g.order(); ++idx) {
                GroupElem el = g.element(idx);
                CycloMatrix rho(d, d);
                for (unsigned long i = 0; i < d; ++i) {
                    GroupElem left = g.inv(GroupElem{0, i});
                    for (unsigned long j = 0; j < d; ++j) {
                        GroupElem h = g.mul(g.mul(left, el), GroupElem{0, j});
                        if (h.b % d == 0) rho.at(i, j) = psi(h);
                    }
                }
                reps.push_back(std::move(rho));
            }
            table.push_back(Character(g, m, t, std::move(reps)));
        }
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const Character& a, const Character& b) { return a.degree() < b.degree(); });
    unsigned long sq = 0;
    for (const auto& chi : table) sq += chi.degree() * chi.degree();
    if (sq != g.order()) throw std::logic_error("irr_table: degree census failed");
    if (table.size() != g.conjugacy_classes().size())
        throw std::logic_error("irr_table: class count mismatch");
    return table;
}

unsigned long fixed_space_dim(const Character& chi, const std::vector<GroupElem>& generators) {
    const MetacyclicGroup& g = chi.group();
    std::vector<GroupElem> h = g.subgroup_closure(generators);
    CyclotomicNumber sum;
    for (const auto& el : h) sum += chi.value(el);
    CyclotomicNumber dim = CyclotomicNumber(make_rational(1, static_cast<long>(h.size()))) * sum;
    if (!dim.is_rational()) throw std::logic_error("fixed_space_dim: non-rational projector trace");
    Rational r = dim.rational_value();
    if (r.get_den() != 1 || r < 0) throw std::logic_error("fixed_space_dim: not a nonnegative integer");
    return static_cast<unsigned long>(r.get_num().get_ui());
}

}  // namespace epslab
