#include <doctest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice.hpp"

using namespace pruefer;

namespace {

std::vector<CorpusMember> small_rings() { return fixture::zoo(16); }

oracle::Set set_of(const Ideal& i) { return oracle::from_bits(i.members()); }

}  // namespace

TEST_CASE("lattice holds exactly the ideals found by subset enumeration") {
    for (const auto& m : small_rings()) {
        INFO(m.name);
        IdealLattice lattice = enumerate_ideals(m.ring);
        auto brute = oracle::all_ideals(*m.ring);
        REQUIRE(lattice.size() == brute.size());
        std::vector<oracle::Set> mine;
        for (const auto& i : lattice.ideals()) mine.push_back(set_of(i));
        for (const auto& s : brute) CHECK(std::find(mine.begin(), mine.end(), s) != mine.end());
        for (std::size_t i = 1; i < lattice.size(); ++i) CHECK(lattice[i - 1].size() <= lattice[i].size());
        CHECK(lattice[lattice.zero_id()].is_zero());
        CHECK(lattice[lattice.unit_id()].is_unit());
    }
}

TEST_CASE("sum, product and intersection tables match closure") {
    for (const auto& m : small_rings()) {
        INFO(m.name);
        IdealLattice lattice = enumerate_ideals(m.ring);
        const FiniteRing& r = *m.ring;
        for (IdealId a = 0; a < lattice.size(); ++a) {
            for (IdealId b = 0; b < lattice.size(); ++b) {
                const auto sa = set_of(lattice[a]), sb = set_of(lattice[b]);
                CHECK(set_of(lattice[lattice.sum(a, b)]) == oracle::join(r, sa, sb));
                CHECK(set_of(lattice[lattice.product(a, b)]) == oracle::product(r, sa, sb));
                CHECK(set_of(lattice[lattice.intersection(a, b)]) == oracle::meet(sa, sb));
                CHECK(lattice.contains(a, b) == oracle::subset(sb, sa));
                CHECK(set_of(ideal_product(lattice[a], lattice[b])) == oracle::product(r, sa, sb));
                CHECK(set_of(ideal_sum(lattice[a], lattice[b])) == oracle::join(r, sa, sb));
            }
        }
    }
}

TEST_CASE("covers, coatoms and atoms") {
    for (const auto& m : small_rings()) {
        INFO(m.name);
        IdealLattice lattice = enumerate_ideals(m.ring);
        const std::size_t n = lattice.size();
        auto strictly_below = [&](IdealId a, IdealId b) { return a != b && lattice.contains(b, a); };
        std::vector<IdealId> coatoms, atoms;
        for (IdealId a = 0; a < n; ++a) {
            std::vector<IdealId> covers;
            for (IdealId b = 0; b < n; ++b) {
                if (!strictly_below(a, b)) continue;
                bool between = false;
                for (IdealId c = 0; c < n; ++c) between |= strictly_below(a, c) && strictly_below(c, b);
                if (!between) covers.push_back(b);
            }
            auto upper = lattice.upper_covers(a);
            std::sort(upper.begin(), upper.end());
            CHECK(upper == covers);
            if (std::find(covers.begin(), covers.end(), lattice.unit_id()) != covers.end()) coatoms.push_back(a);
            if (a != lattice.unit_id() && a != 0 && std::find(lattice.lower_covers(a).begin(), lattice.lower_covers(a).end(),
                                                             IdealId{0}) != lattice.lower_covers(a).end()) {
                atoms.push_back(a);
            }
        }
        auto maximal = lattice.maximal();
        std::sort(maximal.begin(), maximal.end());
        CHECK(maximal == coatoms);
        auto lat_atoms = lattice.atoms();
        std::sort(lat_atoms.begin(), lat_atoms.end());
        CHECK(lat_atoms == atoms);
        CHECK(minimal_nonzero_ideals(lattice).size() == atoms.size());
    }
}

TEST_CASE("principal generators and greedy generating sets") {
    for (const auto& m : small_rings()) {
        INFO(m.name);
        const FiniteRing& r = *m.ring;
        IdealLattice lattice = enumerate_ideals(m.ring);
        for (IdealId id = 0; id < lattice.size(); ++id) {
            const auto target = set_of(lattice[id]);
            std::optional<Elem> brute;
            for (Elem a = 0; a < r.order() && !brute; ++a) {
                if (oracle::generated(r, {a}) == target) brute = a;
            }
            CHECK(lattice.principal_generator(id).has_value() == brute.has_value());
            if (auto g = lattice.principal_generator(id)) CHECK(oracle::generated(r, {*g}) == target);
            const auto& gens = lattice[id].generators();
            CHECK(oracle::generated(r, gens) == target);
            for (std::size_t k = 1; k < gens.size(); ++k) {
                std::vector<Elem> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(k));
                CHECK_FALSE(oracle::generated(r, prefix)[gens[k]]);
            }
            CHECK(lattice.id_of(lattice[id]) == id);
        }
    }
}

TEST_CASE("quotients and annihilators") {
    for (const auto& m : small_rings()) {
        const FiniteRing& r = *m.ring;
        IdealLattice lattice = enumerate_ideals(m.ring);
        for (IdealId a = 0; a < lattice.size(); ++a) {
            for (IdealId b = 0; b < lattice.size(); ++b) {
                oracle::Set want(r.order());
                for (Elem x = 0; x < r.order(); ++x) {
                    bool inside = true;
                    for (Elem y : oracle::members(set_of(lattice[b]))) inside &= lattice[a].contains(r.mul(x, y));
                    want[x] = inside;
                }
                CHECK(set_of(ideal_quotient(lattice[a], lattice[b])) == want);
            }
            CHECK(annihilator(lattice[a]) == ideal_quotient(zero_ideal(m.ring), lattice[a]));
        }
    }
}

TEST_CASE("ideal_from_members rejects non-ideals") {
    RingPtr z6 = make_zmod(6);
    ElementSet s(6);
    s.set(0);
    s.set(1);
    CHECK_THROWS_AS(ideal_from_members(z6, s), ArgumentError);
    s.reset(1);
    s.set(3);
    CHECK(ideal_from_members(z6, s) == principal_ideal(z6, 3));
}

TEST_CASE("fixture lattices") {
    CHECK(enumerate_ideals(make_zmod(6)).size() == 4);
    IdealLattice a = enumerate_ideals(fixture::z4_z2());
    CHECK(a.size() == 6);
    CHECK(a.atoms().size() == 3);
    CHECK(a.maximal().size() == 1);
    IdealLattice b = enumerate_ideals(fixture::f2_f2sq());
    CHECK(b.size() == 6);
    CHECK(b.atoms().size() == 3);
    CHECK_THROWS_AS(enumerate_ideals(make_zmod(64), LatticeOptions{32}), BoundError);
}

TEST_CASE("localization examples") {
    RingPtr z6 = make_zmod(6);
    Localization at2 = localize_at(z6, principal_ideal(z6, 2));
    CHECK(at2.ring->order() == 2);
    CHECK(oracle::members(oracle::from_bits(at2.kernel)) == std::vector<Elem>{0, 2, 4});

    RingPtr z4 = make_zmod(4);
    Localization local = localize_at(z4, principal_ideal(z4, 2));
    CHECK(local.ring->order() == 4);
    CHECK(local.kernel.count() == 1);

    RingPtr p = make_product(make_zmod(2), make_zmod(3));
    Localization at = localize_at(p, principal_ideal(p, p->parse("(0,1)")));
    CHECK(at.ring->order() == 2);

    CHECK_THROWS_AS(localize_at(z6, zero_ideal(z6)), ArgumentError);
}

TEST_CASE("localization kernels match the definition and preserve order") {
    for (const auto& m : fixture::zoo(24)) {
        INFO(m.name);
        const FiniteRing& r = *m.ring;
        IdealLattice lattice = enumerate_ideals(m.ring);
        for (IdealId mid : lattice.maximal()) {
            const Ideal& max = lattice[mid];
            Localization loc = localize_at(m.ring, max);
            for (Elem x = 0; x < r.order(); ++x) {
                bool killed = false;
                for (Elem s = 0; s < r.order(); ++s) killed |= !max.contains(s) && r.mul(s, x) == 0;
                CHECK(loc.kernel.test(x) == killed);
            }
            CHECK_FALSE(loc.projection.find_violation());
            CHECK(is_local(loc.ring).has_value());
            for (IdealId a = 0; a < lattice.size(); ++a) {
                for (IdealId b = 0; b < lattice.size(); ++b) {
                    if (lattice.contains(b, a)) CHECK(loc.push(lattice[a]).is_subset_of(loc.push(lattice[b])));
                }
            }
        }
    }
}

TEST_CASE("local principality") {
    RingPtr z6 = make_zmod(6);
    IdealLattice lattice = enumerate_ideals(z6);
    for (const auto& i : lattice.ideals()) CHECK(is_locally_principal(i));
    RingPtr r = fixture::z4_z2();
    Ideal c = ideal_generated_by(r, std::vector<Elem>{r->parse("(2,0)"), r->parse("(0,1)")});
    CHECK(c.size() == 4);
    CHECK_FALSE(is_locally_principal(c));
    CHECK(is_locally_principal(unit_ideal(r)));
}

TEST_CASE("irreducibility of the zero ideal") {
    CHECK(zero_ideal_locally_irreducible(make_zmod(4)));
    CHECK(zero_ideal_locally_irreducible(make_zmod(12)));
    CHECK_FALSE(zero_ideal_locally_irreducible(fixture::z4_z2()));
    CHECK_FALSE(zero_ideal_locally_irreducible(fixture::f2_f2sq()));
    IdealLattice a = enumerate_ideals(fixture::z4_z2());
    auto pair = reducing_pair(a, a.zero_id());
    REQUIRE(pair);
    CHECK(a.intersection(pair->first, pair->second) == a.zero_id());

    for (const auto& m : small_rings()) {
        IdealLattice lattice = enumerate_ideals(m.ring);
        for (IdealId id = 0; id < lattice.size(); ++id) {
            bool brute = true;
            for (IdealId j = 0; j < lattice.size(); ++j) {
                for (IdealId k = 0; k < lattice.size(); ++k) {
                    if (j != id && k != id && oracle::meet(set_of(lattice[j]), set_of(lattice[k])) == set_of(lattice[id])) {
                        brute = false;
                    }
                }
            }
            CHECK(is_irreducible(lattice, id) == brute);
        }
        if (is_local(m.ring)) CHECK(is_irreducible(lattice, 0) == (lattice.atoms().size() <= 1));
    }
}

TEST_CASE("only the unit ideal is invertible or regular") {
    for (const auto& m : fixture::zoo(32)) {
        INFO(m.name);
        IdealLattice lattice = enumerate_ideals(m.ring);
        ElementTable elements = classify_elements(*m.ring);
        for (IdealId id = 0; id < lattice.size(); ++id) {
            const bool unit = id == lattice.unit_id();
            CHECK(is_invertible(lattice, id, elements) == unit);
            CHECK(is_regular_ideal(lattice[id], elements) == unit);
            CHECK(inverse_partner(lattice, id, elements).has_value() == unit);
        }
    }
}

TEST_CASE("analysis reuses the lattice for local rings") {
    RingAnalysis analysis(fixture::z4_z2());
    CHECK(analysis.is_local());
    CHECK_FALSE(analysis.is_field());
    REQUIRE(analysis.localizations().size() == 1);
    CHECK(analysis.localizations()[0].lattice.get() == analysis.lattice_ptr().get());
    RingAnalysis z6(make_zmod(6));
    CHECK(z6.localizations().size() == 2);
    for (IdealId id = 0; id < z6.lattice().size(); ++id) CHECK(z6.is_locally_principal(id));
}
