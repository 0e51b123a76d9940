#include <doctest.h>

#include <algorithm>
#include <atomic>

#include "support/fixtures.hpp"
#include "pruefer/classifier.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/harness.hpp"

using namespace pruefer;

namespace {

const CorpusEntry* find(const CorpusReport& report, std::string_view name) {
    for (const auto& e : report.entries) {
        if (e.member.name == name) return &e;
    }
    return nullptr;
}

const ConjectureRow* find(const ConjectureReport& report, std::string_view name) {
    for (const auto& r : report.rows) {
        if (r.ring == name) return &r;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("family lists") {
    CHECK(parse_families("zmod, gf").size() == 2);
    CHECK(parse_families("").empty());
    CHECK(parse_families("trivext,trivext").size() == 1);
    CHECK_THROWS_AS(parse_families("zmod,rings"), ArgumentError);
}

TEST_CASE("config validation") {
    CorpusConfig c;
    CHECK_NOTHROW(c.validate());
    c.degree_bound = 0;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = {};
    c.max_order = 100000;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
}

TEST_CASE("order four corpus of residues and fields") {
    CorpusConfig c;
    c.max_order = 4;
    c.families = {Family::zmod, Family::gf};
    CorpusReport report = run_corpus(c);
    std::vector<std::string> names;
    for (const auto& e : report.entries) names.push_back(e.member.name);
    CHECK(names == std::vector<std::string>{"Z2", "Z3", "Z4", "F4"});
    std::size_t irregular = 0;
    for (const auto& e : report.entries) irregular += !(*e.report)[Condition::von_neumann_regular].holds();
    CHECK(irregular == 1);
    CHECK(report.ok());
}

TEST_CASE("empty family list gives an empty report") {
    CorpusConfig c;
    c.families = {};
    CorpusReport report = run_corpus(c);
    CHECK(report.entries.empty());
    CHECK(report.ok());
    CHECK(to_json(report)["rings"].empty());
}

TEST_CASE("members carry their provenance") {
    auto members = fixture::zoo(64);
    CHECK(members.size() >= 30);
    for (const auto& m : members) {
        INFO(m.name);
        CHECK(m.ring->order() <= 64);
        REQUIRE(m.spec);
        CHECK(m.ring->spec() == m.spec);
        switch (m.family) {
            case Family::zmod: CHECK(m.ring->kind() == RingKind::zmod); break;
            case Family::gf: CHECK(m.ring->kind() == RingKind::gf); break;
            case Family::product: CHECK(m.ring->kind() == RingKind::product); break;
            case Family::trivext: CHECK(m.ring->kind() == RingKind::trivial_ext); break;
        }
    }
    auto ids = std::vector<std::size_t>{};
    for (const auto& m : members) ids.push_back(m.id);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("default corpus is clean") {
    CorpusReport report = run_corpus(CorpusConfig{});
    CHECK(report.entries.size() >= 30);
    for (const auto& e : report.entries) {
        INFO(e.member.name);
        for (const auto& f : e.failures) MESSAGE(f);
        CHECK(e.ok());
    }
    std::size_t total = 0;
    for (const auto& [combo, n] : report.combinations) total += n;
    CHECK(total == report.entries.size());

    ConjectureReport rows = conjecture_rows(report);
    CHECK(rows.ok());
    CHECK(rows.count(Agreement::disagree) == 0);
    CHECK(rows.count(Agreement::undecided) * 5 <= rows.rows.size());
    const auto* z4 = find(rows, "Z4");
    REQUIRE(z4);
    CHECK(z4->pseudo_arithmetical == Verdict::yes);
    CHECK(z4->zero_locally_irreducible);
    CHECK(z4->agreement == Agreement::agree);
    const auto* z4k = find(rows, "Z4_k1");
    REQUIRE(z4k);
    CHECK(z4k->pseudo_arithmetical == Verdict::no);
    CHECK_FALSE(z4k->zero_locally_irreducible);
    CHECK(z4k->agreement == Agreement::agree);
    const auto* f2k2 = find(rows, "Z2_k2");
    REQUIRE(f2k2);
    CHECK(f2k2->pseudo_arithmetical == Verdict::no);
    CHECK(f2k2->agreement == Agreement::agree);
    CHECK(find(report, "Z4_self") != nullptr);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    CorpusConfig c;
    c.max_order = 32;
    c.jobs = 1;
    const std::string a = to_json(run_corpus(c)).dump();
    c.jobs = 3;
    const std::string b = to_json(run_corpus(c)).dump();
    CHECK(a == b);
    CHECK(render_markdown(run_corpus(c)) == render_markdown(run_corpus(c)));
    c.seed = 99;
    CHECK(to_json(run_corpus(c))["config"]["seed"] == 99);
}

TEST_CASE("parallel_for covers every index and propagates errors") {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.load() == 1; }));
    CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) { if (i == 7) throw BoundError("x"); }), BoundError);
}

TEST_CASE("residue extension checks") {
    auto z9 = check_residue_extension(make_zmod(9), 1);
    CHECK(z9.passed());
    auto f3 = check_residue_extension(make_zmod(3), 1);
    CHECK(f3.passed());
    RingPtr z3 = make_zmod(3);
    ClassificationReport r = classify(make_trivial_extension(z3, make_residue_space(z3, 1)).ring);
    CHECK(r[Condition::arithmetical].holds());
    auto z4 = check_residue_extension(make_zmod(4), 2);
    CHECK(z4.passed());
    RingPtr z4r = make_zmod(4);
    RingPtr ext = make_trivial_extension(z4r, make_residue_space(z4r, 2)).ring;
    CHECK(ext->order() == 16);
    ClassificationReport e = classify(ext);
    CHECK_FALSE(e[Condition::arithmetical].holds());
    CHECK(e[Condition::gaussian].verdict == Verdict::yes);
    CHECK(e.weak_dimension() == WeakDimension::infinite);
    CHECK_THROWS_AS(check_residue_extension(make_zmod(6), 1), ArgumentError);
}

TEST_CASE("factor descent checks") {
    auto f2 = check_factor_descent(fixture::f2_f2());
    CHECK(f2.passed());
    auto z4 = check_factor_descent(fixture::z4_z4());
    CHECK(z4.passed());
    CHECK_THROWS_AS(check_factor_descent(make_zmod(4)), ArgumentError);
}

TEST_CASE("theorem run over a small configuration") {
    CorpusConfig c;
    c.zmod_limit = 9;
    c.gf_limit = 4;
    c.max_order = 32;
    TheoremReport report = run_theorems(c);
    CHECK(report.ok());
    // bases Z2 Z3 Z4 Z5 Z7 Z8 Z9 F4, each with n = 1, 2
    CHECK(report.residue_extensions.size() == 16);
    CHECK(!report.factor_descents.empty());
    CHECK(to_json(report)["failure_count"] == 0);
}
