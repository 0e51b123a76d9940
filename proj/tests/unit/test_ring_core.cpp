#include <doctest.h>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"

using namespace pruefer;

namespace {

std::vector<std::uint32_t> digits(Elem e, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k);
    for (auto& x : d) {
        x = e % p;
        e /= p;
    }
    return d;
}

Elem undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Elem e = 0;
    for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
    return e;
}

}  // namespace

TEST_CASE("zmod tables are residue arithmetic") {
    for (std::uint64_t n = 2; n <= 24; ++n) {
        RingPtr r = make_zmod(n);
        REQUIRE(r->order() == n);
        CHECK(r->one() == 1);
        for (Elem a = 0; a < n; ++a) {
            CHECK(r->neg(a) == (n - a) % n);
            for (Elem b = 0; b < n; ++b) {
                CHECK(r->add(a, b) == (a + b) % n);
                CHECK(r->mul(a, b) == (a * b) % n);
            }
        }
    }
    CHECK_THROWS_AS(make_zmod(1), ArgumentError);
    CHECK_THROWS_AS(make_zmod(0), ArgumentError);
}

TEST_CASE("gf multiplication matches polynomial arithmetic mod the defining polynomial") {
    for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {2u, 5u}}) {
        auto m = first_irreducible(p, k);
        REQUIRE(m.size() == k + 1);
        CHECK(m.back() == 1);
        RingPtr r = make_gf(p, k, m);
        REQUIRE(r->order() == std::size_t(std::pow(p, k)));
        for (Elem a = 0; a < r->order(); ++a) {
            if (a != 0) CHECK(oracle::is_unit(*r, a));
            for (Elem b = 0; b < r->order(); ++b) {
                CHECK(r->mul(a, b) == undigits(oracle::gf_mul(digits(a, p, k), digits(b, p, k), m, p), p));
            }
        }
    }
}

TEST_CASE("gf rejects bad parameters") {
    CHECK_THROWS_AS(make_gf(4, 1, std::vector<std::uint32_t>{0, 1}), ArgumentError);
    // x^2 + 1 = (x + 1)^2 over F2
    CHECK_THROWS_AS(make_gf(2, 2, std::vector<std::uint32_t>{1, 0, 1}), ArgumentError);
    CHECK_THROWS_AS(make_gf(2, 2, std::vector<std::uint32_t>{1, 1}), ArgumentError);
    CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 1, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p(std::vector<std::uint32_t>{0, 1, 1}, 2));
}

TEST_CASE("product rings act componentwise") {
    RingPtr a = make_zmod(4), b = make_zmod(6);
    RingPtr r = make_product(a, b);
    REQUIRE(r->order() == 24);
    for (Elem x = 0; x < 24; ++x) {
        for (Elem y = 0; y < 24; ++y) {
            const Elem sum = r->add(x, y), prod = r->mul(x, y);
            CHECK(sum / 6 == a->add(x / 6, y / 6));
            CHECK(sum % 6 == b->add(x % 6, y % 6));
            CHECK(prod / 6 == a->mul(x / 6, y / 6));
            CHECK(prod % 6 == b->mul(x % 6, y % 6));
        }
    }
    CHECK(r->format(1 * 6 + 5) == "(1,5)");
    auto maps = product_projections(r);
    CHECK_FALSE(maps.to_left.find_violation());
    CHECK_FALSE(maps.to_right.find_violation());
    CHECK_THROWS_AS(product_projections(a), ArgumentError);
}

TEST_CASE("trivial extension follows the idealization law") {
    RingPtr r = fixture::z4_z2();
    const auto& prov = r->provenance();
    REQUIRE(prov.kind == RingKind::trivial_ext);
    const FiniteRing& a = *prov.left;
    const FiniteModule& e = *prov.module;
    REQUIRE(r->order() == 8);
    const std::size_t w = e.order();
    for (Elem x = 0; x < r->order(); ++x) {
        for (Elem y = 0; y < r->order(); ++y) {
            const Elem a1 = x / w, e1 = x % w, a2 = y / w, e2 = y % w;
            const Elem want = a.mul(a1, a2) * w + e.add(e.act(a1, e2), e.act(a2, e1));
            CHECK(r->mul(x, y) == want);
        }
    }
    // (0,1)^2 = 0 and (2,0)(0,1) = 0 since 2 acts as zero on A/M
    CHECK(r->mul(r->parse("(0,1)"), r->parse("(0,1)")) == 0);
    CHECK(r->mul(r->parse("(2,0)"), r->parse("(0,1)")) == 0);
    auto maps = trivial_extension_maps(r);
    CHECK_FALSE(maps.embedding.find_violation());
    CHECK_FALSE(maps.projection.find_violation());
    CHECK(compose(maps.projection, maps.embedding).map() == RingHom::identity(prov.left).map());
}

TEST_CASE("quotients pick smallest representatives") {
    RingPtr z12 = make_zmod(12);
    auto q = make_quotient(z12, principal_ideal(z12, 4));
    REQUIRE(q.ring->order() == 4);
    CHECK_FALSE(q.projection.find_violation());
    CHECK(find_isomorphism(q.ring, make_zmod(4)).has_value());
    for (Elem x = 0; x < 12; ++x) CHECK(q.ring->format(q.projection(x)) == std::to_string(x % 4));
    CHECK_THROWS_AS(make_quotient(z12, unit_ideal(z12)), ArgumentError);
    auto same = make_quotient(z12, zero_ideal(z12));
    CHECK(same.ring->order() == 12);
}

TEST_CASE("residue spaces are annihilated by the maximal ideal") {
    RingPtr a = make_zmod(9);
    ModulePtr e = make_residue_space(a, 2);
    REQUIRE(e->order() == 9);
    for (Elem m : {Elem{3}, Elem{6}}) {
        for (Elem v = 0; v < e->order(); ++v) CHECK(e->act(m, v) == 0);
    }
    CHECK_FALSE(find_module_axiom_violation(*e));
    CHECK_THROWS_AS(make_residue_space(make_zmod(6), 1), ArgumentError);
    CHECK_THROWS_AS(make_residue_space(a, 0), ArgumentError);
}

TEST_CASE("element kinds agree with brute force") {
    for (const auto& m : fixture::zoo(32)) {
        const FiniteRing& r = *m.ring;
        ElementTable t = classify_elements(r);
        for (Elem a = 0; a < r.order(); ++a) {
            const bool unit = oracle::is_unit(r, a);
            CHECK(t.is_unit(a) == unit);
            if (unit) CHECK(r.mul(a, t.partner[a]) == r.one());
            else CHECK(r.mul(a, t.partner[a]) == 0);
            CHECK(is_regular_element(r, a) == unit);
        }
        // local iff the non-units are additively closed
        bool closed = true;
        for (Elem a = 0; a < r.order(); ++a) {
            for (Elem b = 0; b < r.order(); ++b) {
                if (!t.is_unit(a) && !t.is_unit(b) && t.is_unit(r.add(a, b))) closed = false;
            }
        }
        CHECK(is_local(m.ring).has_value() == closed);
    }
}

TEST_CASE("axioms hold for constructed rings and modules") {
    for (const auto& m : fixture::zoo(32)) {
        INFO(m.name);
        CHECK_FALSE(find_ring_axiom_violation(*m.ring));
        if (m.ring->kind() == RingKind::trivial_ext) CHECK_FALSE(find_module_axiom_violation(*m.ring->provenance().module));
    }
}

TEST_CASE("isomorphism search") {
    CHECK(find_isomorphism(make_zmod(6), make_product(make_zmod(2), make_zmod(3))).has_value());
    CHECK(find_isomorphism(make_product(make_zmod(3), make_zmod(2)), make_product(make_zmod(2), make_zmod(3))));
    CHECK_FALSE(find_isomorphism(make_zmod(4), make_product(make_zmod(2), make_zmod(2))));
    CHECK_FALSE(find_isomorphism(make_gf(2, 2, first_irreducible(2, 2)), make_product(make_zmod(2), make_zmod(2))));
    CHECK_FALSE(find_isomorphism(make_zmod(4), fixture::f2_f2()));
    CHECK_FALSE(find_isomorphism(fixture::z4_z2(), make_zmod(8)));
    auto iso = find_isomorphism(fixture::f2_f2sq(), fixture::f2_f2sq());
    REQUIRE(iso);
    CHECK_FALSE(iso->find_violation());
    CHECK(iso->is_injective());
}

TEST_CASE("homomorphism checks catch broken maps") {
    RingPtr z4 = make_zmod(4), z2 = make_zmod(2);
    CHECK_FALSE(RingHom(z4, z2, {0, 1, 0, 1}).find_violation());
    CHECK(RingHom(z4, z2, {0, 1, 1, 1}).find_violation());
    CHECK(RingHom(z2, z4, {0, 1}).find_violation());  // 1 + 1 = 0 but 1 + 1 != 0 in Z4
    CHECK_THROWS_AS(RingHom(z4, z2, {0, 1, 0}), ArgumentError);
    CHECK_THROWS_AS(RingHom(z4, z2, {0, 1, 0, 2}), ArgumentError);
    RingHom h(z4, z2, {0, 1, 0, 1});
    CHECK(oracle::count(oracle::from_bits(h.kernel())) == 2);
    CHECK(h.is_surjective());
    CHECK_FALSE(h.is_injective());
}

TEST_CASE("random compositions of projections stay homomorphisms") {
    std::mt19937_64 rng(7);
    auto zoo = fixture::zoo(36);
    std::vector<RingPtr> products;
    for (const auto& m : zoo) {
        if (m.family == Family::product) products.push_back(m.ring);
    }
    REQUIRE(!products.empty());
    for (int trial = 0; trial < 20; ++trial) {
        RingPtr r = products[rng() % products.size()];
        auto maps = product_projections(r);
        RingPtr back = make_product(r->provenance().left, r->provenance().right);
        std::vector<Elem> map(r->order());
        for (Elem x = 0; x < r->order(); ++x) {
            map[x] = maps.to_left(x) * static_cast<Elem>(r->provenance().right->order()) + maps.to_right(x);
        }
        RingHom h(r, back, map);
        CHECK_FALSE(h.find_violation());
        CHECK(h.is_injective());
    }
}

TEST_CASE("literals") {
    CHECK(to_string(parse_literal("((1,0), 2)")) == "((1,0),2)");
    CHECK(parse_literal_list("[1, (2,3)]").size() == 2);
    CHECK_THROWS_AS(parse_literal("(1,"), ParseError);
    CHECK_THROWS_AS(parse_literal("1 2"), ParseError);
    RingPtr r = fixture::z4_z2();
    for (Elem e = 0; e < r->order(); ++e) CHECK(r->parse(r->format(e)) == e);
    CHECK_THROWS_AS(r->parse("(1,0,0)"), ArgumentError);
    CHECK_THROWS_AS(r->parse("3"), ArgumentError);
    CHECK(make_zmod(5)->parse("-1") == 4);
}
