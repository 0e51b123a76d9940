#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/poly_content.hpp"

using namespace pruefer;

TEST_CASE("polynomial arithmetic matches schoolbook products") {
    std::mt19937_64 rng(11);
    for (const auto& m : fixture::zoo(16)) {
        const FiniteRing& r = *m.ring;
        for (int i = 0; i < 40; ++i) {
            auto f = oracle::random_coeffs(rng, r.order(), 4);
            auto g = oracle::random_coeffs(rng, r.order(), 4);
            RingPoly pf(m.ring, f), pg(m.ring, g);
            CHECK(poly_mul(pf, pg) == RingPoly(m.ring, oracle::poly_mul(r, f, g)));
            std::vector<Elem> sum(std::max(f.size(), g.size()), 0);
            for (std::size_t k = 0; k < sum.size(); ++k) {
                sum[k] = r.add(k < f.size() ? f[k] : 0, k < g.size() ? g[k] : 0);
            }
            CHECK(poly_add(pf, pg) == RingPoly(m.ring, sum));
            CHECK(oracle::from_bits(content(pf).members()) == oracle::generated(r, f));
            const Elem a = static_cast<Elem>(rng() % r.order());
            CHECK(poly_scale(pf, a) == poly_mul(pf, RingPoly(m.ring, {a})));
        }
    }
}

TEST_CASE("trimming and printing") {
    RingPtr z4 = make_zmod(4);
    RingPoly f(z4, {1, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK(RingPoly(z4, {0, 0}).is_zero());
    CHECK(RingPoly(z4).degree() == -1);
    CHECK(f.to_string() == "[1, 2]");
    RingPtr r = fixture::z4_z2();
    RingPoly g = parse_poly(r, parse_literal_list("[(2,0), (0,1)]"));
    CHECK(g.degree() == 1);
    CHECK(g.to_string() == "[(2,0), (0,1)]");
    CHECK(poly_mul(g, g).is_zero());
}

TEST_CASE("odometer walks vectors in numeric order") {
    PolyOdometer odo(3, 2);
    std::vector<std::vector<Elem>> seen{odo.coeffs()};
    while (odo.next()) seen.push_back(odo.coeffs());
    CHECK(seen == oracle::all_polys(3, 2));
    CHECK(search_space(4, 2) == 64);
    CHECK(search_space(1000, 10) == UINT64_MAX);
}

TEST_CASE("witness search agrees with brute force at degree one") {
    for (const auto& m : fixture::zoo(12)) {
        INFO(m.name);
        const FiniteRing& r = *m.ring;
        GaussianContext ctx(m.ring);
        for (const auto& f : oracle::all_polys(r.order(), 2)) {
            bool brute = true;
            for (const auto& g : oracle::all_polys(r.order(), 2)) brute &= oracle::content_multiplicative(r, f, g);
            auto w = gaussian_witness_search(ctx, RingPoly(m.ring, f), 1);
            CHECK(w.has_value() == !brute);
            if (w) CHECK_FALSE(oracle::content_multiplicative(r, f, w->coeffs()));
        }
    }
}

TEST_CASE("structural certificates") {
    RingPtr r = fixture::z4_z2();
    GaussianContext ctx(r);
    CHECK(ctx.square_zero_maximal());
    auto v = certify_gaussian(ctx, parse_poly(r, parse_literal_list("[(2,0), (0,1)]")));
    CHECK(v.status == GaussianStatus::certified);
    CHECK(v.reason == GaussianReason::local_square_zero_maximal);

    RingPtr z8 = make_zmod(8);
    GaussianContext c8(z8);
    CHECK_FALSE(c8.square_zero_maximal());
    auto unit = certify_gaussian(c8, RingPoly(z8, {2, 3}));
    CHECK(unit.reason == GaussianReason::unit_content);
    c8.set_ring_certified(true);
    CHECK(certify_gaussian(c8, RingPoly(z8, {2, 4})).reason == GaussianReason::ring_certified_gaussian);
}

TEST_CASE("refutation in the trivial extension of Z/4 by itself") {
    RingPtr r = fixture::z4_z4();
    GaussianContext ctx(r);
    RingPoly f = parse_poly(r, parse_literal_list("[(2,0), (0,1)]"));
    auto v = certify_gaussian(ctx, f, SearchLimits{1, 1'000'000});
    REQUIRE(v.status == GaussianStatus::refuted);
    REQUIRE(v.witness);
    CHECK_FALSE(ctx.multiplicative(f, *v.witness));
    CHECK_FALSE(oracle::content_multiplicative(*r, f.coeffs(), v.witness->coeffs()));
}

TEST_CASE("bounded verdicts and caps") {
    RingPtr r = fixture::z4_z4();
    GaussianContext ctx(r);
    RingPoly f = parse_poly(r, parse_literal_list("[(2,0), (2,0)]"));
    CHECK_THROWS_AS(gaussian_witness_search(ctx, f, 3, 1000), BoundError);
    auto v = certify_gaussian(ctx, RingPoly(r, {r->parse("(0,1)")}), SearchLimits{3, 300});
    // 16^3 > 300, so the bound is lowered to 1 (16^2 = 256)
    if (v.status == GaussianStatus::bounded) {
        CHECK(v.capped);
        CHECK(v.bound == 1u);
    }
}

TEST_CASE("Dedekind-Mertens on random pairs") {
    std::mt19937_64 rng(2024);
    for (const auto& m : fixture::zoo(16)) {
        INFO(m.name);
        GaussianContext ctx(m.ring);
        for (int i = 0; i < 300; ++i) {
            RingPoly f(m.ring, oracle::random_coeffs(rng, m.ring->order(), 4));
            RingPoly g(m.ring, oracle::random_coeffs(rng, m.ring->order(), 4));
            CHECK(dedekind_mertens_check(ctx, f, g));
            if (i % 10 == 0) CHECK(dedekind_mertens_check(f, g));
            // c(fg) ⊆ c(f)c(g) always
            auto cfg = oracle::generated(*m.ring, poly_mul(f, g).coeffs());
            auto cfcg = oracle::product(*m.ring, oracle::generated(*m.ring, f.coeffs()),
                                        oracle::generated(*m.ring, g.coeffs()));
            CHECK(oracle::subset(cfg, cfcg));
        }
    }
}
