#include "epslab/group_ring.hpp"

#include "epslab/berkowitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace epslab {

namespace {

// Columns of the result form a basis of the column space of m.
CycloMatrix column_space_basis(const CycloMatrix& m) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    std::vector<std::vector<CyclotomicNumber>> rows(ncols,
                                                    std::vector<CyclotomicNumber>(nrows));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < nrows; ++i) rows[j][i] = m.at(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nrows && rank < ncols; ++col) {
        std::size_t r = rank;
        while (r < ncols && rows[r][col].is_zero()) ++r;
        if (r == ncols) continue;
        std::swap(rows[rank], rows[r]);
        CyclotomicNumber pinv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x *= pinv;
        for (std::size_t i = 0; i < ncols; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            CyclotomicNumber fct = rows[i][col];
            for (std::size_t j2 = 0; j2 < nrows; ++j2) rows[i][j2] -= fct * rows[rank][j2];
        }
        ++rank;
    }
    CycloMatrix b(nrows, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < nrows; ++i) b.at(i, j) = rows[j][i];
    return b;
}

CycloMatrix inverse_of(const CycloMatrix& a) {
    const std::size_t n = a.rows();
    CycloMatrix w = a;
    CycloMatrix inv = CycloMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w.at(piv, k).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("cyclo matrix: inverse of a singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        CyclotomicNumber pinv = w.at(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(k, j) *= pinv;
            inv.at(k, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            CyclotomicNumber fct = w.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= fct * w.at(k, j);
                inv.at(i, j) -= fct * inv.at(k, j);
            }
        }
    }
    return inv;
}

void require_subgroup(const MetacyclicGroup& g, const std::vector<GroupElem>& subgroup) {
    if (subgroup.empty()) throw std::invalid_argument("group ring: empty subgroup");
    std::vector<GroupElem> closure = g.subgroup_closure(subgroup);
    std::vector<std::size_t> given;
    given.reserve(subgroup.size());
    for (const auto& h : subgroup) given.push_back(g.index(h));
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given.size() != closure.size())
        throw std::invalid_argument("group ring: element list is not a subgroup");
}

}  // namespace

CenterVector<CyclotomicNumber> sharp(const CenterVector<CyclotomicNumber>& v) {
    CenterVector<CyclotomicNumber> out = v;
    for (auto& x : out.values)
        if (x.is_zero()) x = CyclotomicNumber(1);
    return out;
}

CenterVector<PadicNumber> sharp(const CenterVector<PadicNumber>& v) {
    unsigned prec = 1;
    unsigned long p = 0;
    for (const auto& x : v.values) {
        p = x.p();
        if (!x.is_zero_at_precision()) prec = std::max(prec, x.precision());
    }
    CenterVector<PadicNumber> out = v;
    for (auto& x : out.values)
        if (x.is_zero_at_precision()) x = PadicNumber::one(p, prec);
    return out;
}

CycloGroupRing idempotent_inertia(const MetacyclicGroup& g,
                                  const std::vector<GroupElem>& subgroup) {
    require_subgroup(g, subgroup);
    CycloGroupRing e(g, CyclotomicNumber(0));
    CyclotomicNumber w(Rational(1, static_cast<long>(subgroup.size())));
    for (const auto& h : subgroup) e.coeff(h) = w;
    return e;
}

PadicGroupRing idempotent_inertia_padic(const MetacyclicGroup& g,
                                        const std::vector<GroupElem>& subgroup, unsigned long p,
                                        unsigned prec) {
    require_subgroup(g, subgroup);
    if (subgroup.size() % p == 0)
        throw std::domain_error(
            "group ring: subgroup order is divisible by p, idempotent not p-integral");
    PadicGroupRing e(g, PadicNumber::zero(p));
    PadicNumber w = PadicNumber::from_rational(
        Rational(1, static_cast<long>(subgroup.size())), p, prec);
    for (const auto& h : subgroup) e.coeff(h) = w;
    return e;
}

CyclotomicNumber det_chi(const Character& chi, const CycloGroupRing& x) {
    if (!(chi.group() == x.group()))
        throw std::invalid_argument("group ring: character belongs to a different group");
    const std::size_t d = chi.degree();
    CycloMatrix m(d, d);
    for (const GroupElem& g : x.group().elements()) {
        const CyclotomicNumber& c = x.coeff(g);
        if (c.is_zero()) continue;
        m = m + scale(c, chi.rep(g));
    }
    return m.det();
}

PadicCyclo det_chi(const Character& chi, const PadicGroupRing& x) {
    if (!(chi.group() == x.group()))
        throw std::invalid_argument("group ring: character belongs to a different group");
    const unsigned long p = x.zero_scalar().p();
    const std::size_t d = chi.degree();
    unsigned long order = 1;
    unsigned prec = 1;
    const auto elems = x.group().elements();
    for (const GroupElem& g : elems) {
        const CycloMatrix& r = chi.rep(g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) order = lcm_ul(order, r.at(i, j).order());
        const PadicNumber& c = x.coeff(g);
        if (!c.is_zero_at_precision()) prec = std::max(prec, c.precision());
    }
    std::vector<std::vector<PadicCyclo>> m(d,
                                           std::vector<PadicCyclo>(d, PadicCyclo::zero(order, p)));
    for (const GroupElem& g : elems) {
        const PadicNumber& c = x.coeff(g);
        const CycloMatrix& r = chi.rep(g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (r.at(i, j).is_zero()) continue;
                PadicCyclo entry =
                    PadicCyclo::from_cyclo(r.at(i, j).to_order(order), p, prec).scaled(c);
                m[i][j] = m[i][j] + entry;
            }
    }
    return berkowitz_det(m, PadicCyclo::zero(order, p), PadicCyclo::one(order, p, prec));
}

CenterVector<CyclotomicNumber> norm_map(std::shared_ptr<const std::vector<Character>> table,
                                        const CycloGroupRing& x) {
    if (!table) throw std::invalid_argument("group ring: missing character table");
    std::vector<CyclotomicNumber> values;
    values.reserve(table->size());
    for (const Character& chi : *table) values.push_back(det_chi(chi, x));
    return make_center_vector(std::move(table), std::move(values));
}

CycloMatrix regular_representation(const CycloGroupRing& x) {
    const MetacyclicGroup& g = x.group();
    const std::size_t n = g.order();
    CycloMatrix m(n, n);
    const auto elems = g.elements();
    for (const GroupElem& a : elems)
        for (const GroupElem& h : elems) m.at(g.index(g.mul(a, h)), g.index(h)) = x.coeff(a);
    return m;
}

PadicMatrix regular_representation(const PadicGroupRing& x) {
    const MetacyclicGroup& g = x.group();
    const std::size_t n = g.order();
    PadicMatrix m(n, n, x.zero_scalar());
    const auto elems = g.elements();
    for (const GroupElem& a : elems)
        for (const GroupElem& h : elems) m.at(g.index(g.mul(a, h)), g.index(h)) = x.coeff(a);
    return m;
}

bool is_unit_padic(const PadicGroupRing& x) {
    for (const PadicNumber& c : x.coefficients()) {
        if (c.is_zero_at_precision()) {
            if (c.abs_precision() <= 0)
                throw PrecisionExhausted(
                    "group ring: coefficient integrality not certified at working precision");
        } else if (c.valuation() < 0) {
            throw std::domain_error("group ring: element is not p-integral");
        }
    }
    PadicNumber d = regular_representation(x).det();
    return d.valuation() == 0;
}

ReducedNormChecker::ReducedNormChecker(const MetacyclicGroup& g)
    : _group(g), _table(std::make_shared<const std::vector<Character>>(irr_table(g))) {
    const std::size_t n = _group.order();
    const auto elems = _group.elements();
    for (const Character& chi : *_table) {
        const std::size_t d = chi.degree();
        // Central primitive idempotent e_chi = (d/|G|) sum chi(g^{-1}) g.
        std::vector<CyclotomicNumber> e(n);
        for (const GroupElem& a : elems)
            e[_group.index(a)] =
                Rational(static_cast<long>(d), static_cast<long>(n)) * chi.value(_group.inv(a));
        // Isotypic left ideal A e_chi, spanned by the columns g * e_chi.
        CycloMatrix span(n, n);
        for (const GroupElem& a : elems)
            for (const GroupElem& h : elems)
                span.at(_group.index(h), _group.index(a)) =
                    e[_group.index(_group.mul(_group.inv(a), h))];
        CycloMatrix basis = column_space_basis(span);
        const std::size_t k = basis.cols();
        if (k != d * d)
            throw std::logic_error("reduced norm: isotypic component has unexpected dimension");
        // Homomorphisms V -> A e_chi: matrices Phi = basis * X with
        // L_s Phi = Phi rho(s) for the generators s.
        const GroupElem gens[2] = {_group.sigma(), _group.tau()};
        CycloMatrix constraints(2 * n * d, k * d);
        for (int si = 0; si < 2; ++si) {
            const GroupElem& s = gens[si];
            const CycloMatrix& rho = chi.rep(s);
            // Left translation of each basis column by s.
            CycloMatrix lb(n, k);
            for (const GroupElem& h : elems)
                for (std::size_t j = 0; j < k; ++j)
                    lb.at(_group.index(_group.mul(s, h)), j) = basis.at(_group.index(h), j);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < d; ++t) {
                    const std::size_t row = static_cast<std::size_t>(si) * n * d + r * d + t;
                    for (std::size_t kk = 0; kk < k; ++kk)
                        for (std::size_t u = 0; u < d; ++u) {
                            CyclotomicNumber coef = -(basis.at(r, kk) * rho.at(u, t));
                            if (u == t) coef += lb.at(r, kk);
                            constraints.at(row, kk * d + u) = coef;
                        }
                }
        }
        std::vector<std::vector<CyclotomicNumber>> sols = nullspace(constraints);
        if (sols.size() != d)
            throw std::logic_error("reduced norm: homomorphism space has unexpected dimension");
        CharData data;
        for (const auto& sol : sols) {
            CycloMatrix phi(n, d);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < d; ++t) {
                    CyclotomicNumber acc;
                    for (std::size_t kk = 0; kk < k; ++kk)
                        acc += basis.at(r, kk) * sol[kk * d + t];
                    phi.at(r, t) = acc;
                }
            data.hom_basis.push_back(std::move(phi));
        }
        // Rows of the flattened basis that form an invertible d x d block.
        CycloMatrix flat(n * d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < d; ++t)
                    flat.at(r * d + t, i) = data.hom_basis[i].at(r, t);
        std::vector<std::size_t> chosen;
        for (std::size_t row = 0; row < n * d && chosen.size() < d; ++row) {
            // Keep the row only if it stays linearly independent of the
            // rows already chosen.
            CycloMatrix test(d, chosen.size() + 1);
            for (std::size_t rr = 0; rr < chosen.size(); ++rr)
                for (std::size_t i = 0; i < d; ++i) test.at(i, rr) = flat.at(chosen[rr], i);
            for (std::size_t i = 0; i < d; ++i) test.at(i, chosen.size()) = flat.at(row, i);
            if (nullspace(test).empty()) chosen.push_back(row);
        }
        if (chosen.size() != d)
            throw std::logic_error("reduced norm: homomorphism basis is degenerate");
        CycloMatrix pivot(d, d);
        for (std::size_t rr = 0; rr < d; ++rr)
            for (std::size_t i = 0; i < d; ++i) pivot.at(rr, i) = flat.at(chosen[rr], i);
        data.pivot_rows = std::move(chosen);
        data.pivot_inverse = inverse_of(pivot);
        _data.push_back(std::move(data));
    }
}

CenterVector<CyclotomicNumber> ReducedNormChecker::matrix_route(const CycloGroupRing& a) const {
    return norm_map(_table, a);
}

CenterVector<CyclotomicNumber> ReducedNormChecker::module_route(const CycloGroupRing& a) const {
    if (!(a.group() == _group))
        throw std::invalid_argument("reduced norm: element belongs to a different group");
    const std::size_t n = _group.order();
    const auto elems = _group.elements();
    std::vector<CyclotomicNumber> values;
    values.reserve(_table->size());
    for (std::size_t ci = 0; ci < _table->size(); ++ci) {
        const CharData& data = _data[ci];
        const std::size_t d = (*_table)[ci].degree();
        CycloMatrix act(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            // Image of the j-th basis homomorphism under phi -> phi . a,
            // right multiplication on values in A.
            CycloMatrix image(n, d);
            for (const GroupElem& h : elems) {
                const std::size_t hr = _group.index(h);
                for (std::size_t t = 0; t < d; ++t) {
                    CyclotomicNumber acc;
                    for (const GroupElem& g : elems) {
                        const CyclotomicNumber& ph = data.hom_basis[j].at(_group.index(g), t);
                        if (ph.is_zero()) continue;
                        const CyclotomicNumber& av = a.coeff(_group.mul(_group.inv(g), h));
                        if (!av.is_zero()) acc += ph * av;
                    }
                    image.at(hr, t) = acc;
                }
            }
            // Coordinates in the homomorphism basis, from the pivot rows.
            std::vector<CyclotomicNumber> rhs(d);
            for (std::size_t rr = 0; rr < d; ++rr) {
                const std::size_t row = data.pivot_rows[rr];
                rhs[rr] = image.at(row / d, row % d);
            }
            std::vector<CyclotomicNumber> y(d);
            for (std::size_t i = 0; i < d; ++i) {
                CyclotomicNumber acc;
                for (std::size_t rr = 0; rr < d; ++rr)
                    acc += data.pivot_inverse.at(i, rr) * rhs[rr];
                y[i] = acc;
            }
            // The image must lie in the homomorphism space; verify fully.
            CycloMatrix recon(n, d);
            for (std::size_t i = 0; i < d; ++i) {
                if (y[i].is_zero()) continue;
                recon = recon + scale(y[i], data.hom_basis[i]);
            }
            if (!(recon == image))
                throw std::logic_error("reduced norm: image left the homomorphism space");
            for (std::size_t i = 0; i < d; ++i) act.at(i, j) = y[i];
        }
        values.push_back(act.det());
    }
    return make_center_vector(_table, std::move(values));
}

bool ReducedNormChecker::diagram_commutes(const CycloGroupRing& a) const {
    CenterVector<CyclotomicNumber> nr1 = matrix_route(a);
    for (const auto& v : nr1.values)
        if (v.is_zero())
            throw std::domain_error("reduced norm: element is singular on some character");
    CenterVector<CyclotomicNumber> nr2 = module_route(a);
    for (std::size_t i = 0; i < nr1.values.size(); ++i)
        if (nr1.values[i] != nr2.values[i]) return false;
    return true;
}

bool reduced_norm_diagram_check(const CycloGroupRing& a) {
    using Key = std::tuple<unsigned long, unsigned long, unsigned long, unsigned long>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const ReducedNormChecker>> cache;
    const MetacyclicGroup& g = a.group();
    Key key{g.e(), g.f(), g.q(), g.c()};
    std::shared_ptr<const ReducedNormChecker> checker;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it == cache.end()) {
            checker = std::make_shared<const ReducedNormChecker>(g);
            cache.emplace(key, checker);
        } else {
            checker = it->second;
        }
    }
    return checker->diagram_commutes(a);
}

}  // namespace epslab
