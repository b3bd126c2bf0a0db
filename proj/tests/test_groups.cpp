#include "epslab/character.hpp"
#include "epslab/group.hpp"

#include <doctest.h>

#include <random>

using namespace epslab;

namespace {

// Hermitian inner product (1/|G|) sum_g chi(g) conj(psi(g)); conjugation is
// the galois twist k = -1 on root-of-unity values.
CyclotomicNumber char_inner(const MetacyclicGroup& g, const Character& x, const Character& y) {
    CyclotomicNumber acc;
    for (const auto& el : g.elements()) acc += x.value(el) * y.value(el).galois(-1);
    return CyclotomicNumber(make_rational(1, static_cast<long>(g.order()))) * acc;
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("cyclic group of order 2") {
    MetacyclicGroup c2(2, 1, 1, 0);
    CHECK(c2.order() == 2);
    CHECK(c2.is_abelian());
    auto table = irr_table(c2);
    REQUIRE(table.size() == 2);
    CHECK(table[0].is_trivial());
    CHECK(table[0].value(c2.sigma()) == CyclotomicNumber(1));
    CHECK(table[1].value(c2.sigma()) == CyclotomicNumber(-1));
    CHECK(table[1].value(c2.identity()) == CyclotomicNumber(1));
}

TEST_CASE("group law and inverses across presentations") {
    std::mt19937 rng(5);
    for (auto [e, f, q, c] : std::vector<std::array<unsigned long, 4>>{
             {3, 2, 2, 0}, {4, 2, 3, 2}, {8, 2, 3, 0}, {6, 1, 1, 0}, {5, 4, 2, 0}, {1, 4, 1, 0}}) {
        MetacyclicGroup g(e, f, q, c);
        auto els = g.elements();
        REQUIRE(els.size() == e * f);
        for (int t = 0; t < 40; ++t) {
            GroupElem x = els[rng() % els.size()], y = els[rng() % els.size()],
                      z = els[rng() % els.size()];
            CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
            CHECK(g.mul(x, g.inv(x)) == g.identity());
            CHECK(g.mul(g.inv(x), x) == g.identity());
        }
        // Defining relations.
        CHECK(g.pow(g.sigma(), static_cast<long>(e)) == g.identity());
        CHECK(g.pow(g.tau(), static_cast<long>(f)) == g.pow(g.sigma(), static_cast<long>(c)));
        CHECK(g.conj(g.sigma(), g.tau()) == g.pow(g.sigma(), static_cast<long>(q)));
    }
}

TEST_CASE("inconsistent presentations are rejected") {
    CHECK_THROWS_AS(MetacyclicGroup(4, 1, 3, 0), std::domain_error);  // 3^1 != 1 mod 4
    CHECK_THROWS_AS(MetacyclicGroup(4, 2, 2, 0), std::domain_error);  // gcd(q, e) != 1
    CHECK_THROWS_AS(MetacyclicGroup(5, 4, 2, 1), std::domain_error);  // c(q-1) != 0 mod 5
    CHECK_THROWS_AS(MetacyclicGroup(0, 1, 1, 0), std::domain_error);
}

TEST_CASE("symmetric group S3 as G(3,2,2,0)") {
    MetacyclicGroup s3(3, 2, 2, 0);
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.conjugacy_classes().size() == 3);
    auto table = irr_table(s3);
    REQUIRE(table.size() == 3);
    CHECK(table[0].degree() == 1);
    CHECK(table[1].degree() == 1);
    CHECK(table[2].degree() == 2);
    CHECK(table[0].is_trivial());
    // Sign character: -1 on reflections.
    CHECK(table[1].value(s3.tau()) == CyclotomicNumber(-1));
    CHECK(table[1].value(s3.sigma()) == CyclotomicNumber(1));
    // Standard representation: trace -1 on 3-cycles, 0 on reflections.
    CHECK(table[2].value(s3.sigma()) == CyclotomicNumber(-1));
    CHECK(table[2].value(s3.tau()) == CyclotomicNumber(0));
    CHECK(table[2].value(s3.identity()) == CyclotomicNumber(2));
}

TEST_CASE("quaternion group Q8 as G(4,2,3,2)") {
    MetacyclicGroup q8(4, 2, 3, 2);
    auto table = irr_table(q8);
    REQUIRE(table.size() == 5);
    unsigned long linear = 0, deg2 = 0;
    for (const auto& chi : table) (chi.degree() == 1 ? linear : deg2)++;
    CHECK(linear == 4);
    CHECK(deg2 == 1);
    // tau^2 = sigma^2 = -1 in the 2-dimensional representation.
    const Character& spin = table[4];
    CHECK(spin.value(q8.pow(q8.tau(), 2)) == CyclotomicNumber(-2));
    CHECK(spin.value(q8.sigma()) == CyclotomicNumber(0));
}

TEST_CASE("character tables are orthonormal") {
    for (auto [e, f, q, c] : std::vector<std::array<unsigned long, 4>>{
             {3, 2, 2, 0}, {4, 2, 3, 2}, {8, 2, 3, 0}, {6, 1, 1, 0}, {4, 2, 3, 0}, {7, 3, 2, 0}}) {
        MetacyclicGroup g(e, f, q, c);
        auto table = irr_table(g);
        REQUIRE(table.size() == g.conjugacy_classes().size());
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = 0; j < table.size(); ++j) {
                CyclotomicNumber ip = char_inner(g, table[i], table[j]);
                CHECK(ip == CyclotomicNumber(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("matrix representations are homomorphisms") {
    std::mt19937 rng(17);
    for (auto [e, f, q, c] : std::vector<std::array<unsigned long, 4>>{{3, 2, 2, 0}, {4, 2, 3, 2}, {7, 3, 2, 0}}) {
        MetacyclicGroup g(e, f, q, c);
        auto table = irr_table(g);
        auto els = g.elements();
        for (const auto& chi : table) {
            CHECK(chi.rep(g.identity()) == CycloMatrix::identity(chi.degree()));
            for (int t = 0; t < 12; ++t) {
                GroupElem x = els[rng() % els.size()], y = els[rng() % els.size()];
                CHECK(chi.rep(g.mul(x, y)) == chi.rep(x) * chi.rep(y));
            }
        }
    }
}

TEST_CASE("values on conjugacy classes are constant") {
    MetacyclicGroup g(7, 3, 2, 0);
    auto table = irr_table(g);
    for (const auto& cls : g.conjugacy_classes())
        for (const auto& chi : table)
            for (const auto& el : cls) CHECK(chi.value(el) == chi.value(cls[0]));
}

TEST_CASE("fixed subspace dimensions") {
    MetacyclicGroup s3(3, 2, 2, 0);
    auto table = irr_table(s3);
    std::vector<GroupElem> sigma_gen{s3.sigma()}, tau_gen{s3.tau()},
        all{s3.sigma(), s3.tau()};
    // Trivial character: everything is fixed.
    CHECK(fixed_space_dim(table[0], sigma_gen) == 1);
    CHECK(fixed_space_dim(table[0], all) == 1);
    // Sign character: fixed by the rotation subgroup only.
    CHECK(fixed_space_dim(table[1], sigma_gen) == 1);
    CHECK(fixed_space_dim(table[1], tau_gen) == 0);
    // Standard representation: no invariants under <sigma>, a line under <tau>.
    CHECK(fixed_space_dim(table[2], sigma_gen) == 0);
    CHECK(fixed_space_dim(table[2], tau_gen) == 1);
    CHECK(fixed_space_dim(table[2], all) == 0);
    // Trivial subgroup fixes the whole space.
    CHECK(fixed_space_dim(table[2], {s3.identity()}) == 2);

    // Sum over irreducibles of chi(1) * dim V^H = [G : H] (permutation character).
    for (auto gens : {sigma_gen, tau_gen}) {
        unsigned long total = 0;
        auto h = s3.subgroup_closure(gens);
        for (const auto& chi : table) total += chi.degree() * fixed_space_dim(chi, gens);
        CHECK(total == s3.order() / h.size());
    }
}

TEST_CASE("subgroup closure") {
    MetacyclicGroup q8(4, 2, 3, 2);
    CHECK(q8.subgroup_closure({q8.sigma()}).size() == 4);
    CHECK(q8.subgroup_closure({q8.tau()}).size() == 4);  // tau^2 = sigma^2
    CHECK(q8.subgroup_closure({q8.identity()}).size() == 1);
    CHECK(q8.subgroup_closure({q8.sigma(), q8.tau()}).size() == 8);
    CHECK(q8.inertia_subgroup().size() == 4);
}

}  // TEST_SUITE
