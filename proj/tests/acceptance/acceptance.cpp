// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "pruefer/classifier.hpp"
#include "pruefer/harness.hpp"
#include "pruefer/ideal_lattice.hpp"
#include "pruefer/poly_content.hpp"

using namespace pruefer;

namespace {

// Pinned limits.
constexpr double kFixtureSeconds = 1.0;
constexpr double kTheoremSeconds = 300.0;
constexpr double kUndecidedShare = 0.20;
constexpr std::size_t kMinCorpus = 30;
constexpr std::size_t kOracleOrder = 16;
constexpr unsigned kOracleDegree = 2;
constexpr std::size_t kMertensPairs = 10'000;
constexpr std::size_t kAxiomOrder = 64;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Elem> coeffs_of(const RingPtr& ring, const nlohmann::json& j) {
    std::vector<Elem> out;
    for (const auto& c : j) out.push_back(ring->parse(c.get<std::string>()));
    return out;
}

Outcome fixture_z4() {
    auto start = std::chrono::steady_clock::now();
    ClassificationReport r = classify(fixture::z4());
    Outcome o;
    o.require(r[Condition::arithmetical].verdict == Verdict::yes, "arithmetical");
    o.require(r[Condition::reduced].verdict == Verdict::no, "reduced");
    o.require(r.weak_dimension() == WeakDimension::infinite, "weak dimension");
    o.require(r[Condition::gaussian].verdict == Verdict::yes, "gaussian");
    o.require(r[Condition::pseudo_arithmetical].verdict == Verdict::yes, "pseudo-arithmetical");
    o.require(r[Condition::zero_locally_irreducible].verdict == Verdict::yes, "zero locally irreducible");
    o.require(r[Condition::semihereditary].verdict == Verdict::no, "semihereditary");
    const double t = seconds_since(start);
    o.require(t < kFixtureSeconds, "took " + std::to_string(t) + " s");
    return o;
}

Outcome fixture_z4_z2() {
    auto start = std::chrono::steady_clock::now();
    RingPtr ring = fixture::z4_z2();
    ClassificationReport r = classify(ring);
    Outcome o;
    o.require(r[Condition::total_quotient_ring].holds(), "total quotient");
    o.require(r[Condition::pruefer].holds(), "pruefer");
    o.require(r[Condition::gaussian].verdict == Verdict::yes &&
                  r[Condition::gaussian].certificate.kind == CertificateKind::structural,
              "gaussian exact by rule");
    o.require(r[Condition::arithmetical].verdict == Verdict::no && r[Condition::arithmetical].witness.has_value(),
              "arithmetical with witness");
    o.require(r.weak_dimension() == WeakDimension::infinite, "weak dimension");
    const auto& pa = r[Condition::pseudo_arithmetical];
    o.require(pa.verdict == Verdict::no && pa.witness.has_value(), "pseudo-arithmetical with witness");
    if (pa.witness) {
        o.require((*pa.witness)["f"] == nlohmann::json::array({"(2,0)", "(0,1)"}), "witness polynomial");
        Ideal c = ideal_generated_by(ring, coeffs_of(ring, (*pa.witness)["f"]));
        o.require(c.size() == 4 && !is_principal(c), "content of order 4, non-principal");
    }
    o.require(r[Condition::zero_locally_irreducible].verdict == Verdict::no, "zero locally irreducible");
    const double t = seconds_since(start);
    o.require(t < kFixtureSeconds, "took " + std::to_string(t) + " s");
    return o;
}

Outcome fixture_f2_f2sq() {
    auto start = std::chrono::steady_clock::now();
    RingPtr ring = fixture::f2_f2sq();
    ClassificationReport r = classify(ring);
    IdealLattice lattice = enumerate_ideals(ring);
    Outcome o;
    o.require(r[Condition::gaussian].verdict == Verdict::yes, "gaussian");
    o.require(r[Condition::arithmetical].verdict == Verdict::no, "arithmetical");
    o.require(r[Condition::pseudo_arithmetical].verdict == Verdict::no, "pseudo-arithmetical");
    o.require(r[Condition::zero_locally_irreducible].verdict == Verdict::no, "zero locally irreducible");
    o.require(lattice.size() == 6, "ideal count " + std::to_string(lattice.size()));
    o.require(lattice.atoms().size() == 3, "atom count " + std::to_string(lattice.atoms().size()));
    const double t = seconds_since(start);
    o.require(t < kFixtureSeconds, "took " + std::to_string(t) + " s");
    return o;
}

Outcome fixture_f2_f2() {
    Outcome o;
    o.require(classify(fixture::f2_f2())[Condition::arithmetical].verdict == Verdict::yes, "arithmetical");
    return o;
}

Outcome theorem_harness() {
    auto start = std::chrono::steady_clock::now();
    TheoremReport report = run_theorems(CorpusConfig{});
    Outcome o;
    o.require(report.ok(), std::to_string(report.failure_count()) + " failures");
    o.require(!report.residue_extensions.empty() && !report.factor_descents.empty(), "nothing checked");
    const double t = seconds_since(start);
    o.require(t < kTheoremSeconds, "took " + std::to_string(t) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(report.residue_extensions.size()) + " residue, " +
                std::to_string(report.factor_descents.size()) + " descent instances";
    return o;
}

Outcome implication_chain(const CorpusReport& corpus) {
    Outcome o;
    o.require(corpus.entries.size() >= kMinCorpus, "corpus has " + std::to_string(corpus.entries.size()) + " rings");
    std::size_t violations = 0;
    for (const auto& e : corpus.entries) {
        if (!e.report) {
            ++violations;
            continue;
        }
        const auto& r = *e.report;
        auto yes = [&](Condition c) { return r[c].verdict == Verdict::yes; };
        auto no = [&](Condition c) { return r[c].verdict == Verdict::no; };
        violations += yes(Condition::semihereditary) && no(Condition::weak_dimension_zero);
        violations += yes(Condition::weak_dimension_zero) && no(Condition::arithmetical);
        violations += yes(Condition::arithmetical) && no(Condition::gaussian);
        violations += yes(Condition::gaussian) && no(Condition::pruefer);
        violations += yes(Condition::weak_dimension_zero) != (yes(Condition::arithmetical) && yes(Condition::reduced));
        const auto wd = to_json(r)["weak_dimension"]["verdict"];
        violations += wd != "0" && wd != "infinite";
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.require(corpus.ok(), std::to_string(corpus.failure_count()) + " corpus invariant failures");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(corpus.entries.size()) + " rings";
    return o;
}

Outcome conjecture(const CorpusReport& corpus) {
    ConjectureReport rows = conjecture_rows(corpus);
    Outcome o;
    const std::size_t undecided = rows.count(Agreement::undecided);
    o.require(rows.ok(), "a disagreement failed replay");
    for (const auto& r : rows.rows) {
        o.require(r.agreement != Agreement::disagree, "disagreement at " + r.ring);
    }
    o.require(undecided <= kUndecidedShare * static_cast<double>(corpus.entries.size()),
              std::to_string(undecided) + " undecided rows");
    for (const char* name : {"Z4", "Z4_k1", "Z2_k1", "Z2_k2"}) {
        bool found = false;
        for (const auto& r : rows.rows) found |= r.ring == name && r.agreement == Agreement::agree;
        o.require(found, std::string("fixture ring ") + name + " not an agreeing row");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(rows.count(Agreement::agree)) + " agree, " +
                std::to_string(undecided) + " undecided of " + std::to_string(rows.rows.size());
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(45);
    std::size_t rings = 0, polys = 0, exact = 0;
    for (const auto& m : fixture::zoo(kOracleOrder)) {
        ++rings;
        RingAnalysis analysis(m.ring);
        ClassificationReport report = classify(analysis);
        GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
        ctx.set_ring_certified(report[Condition::gaussian].holds());
        const std::size_t n = m.ring->order();
        const SearchLimits limits{kOracleDegree, UINT64_MAX};
        PolyOdometer odo(n, kOracleDegree + 1);
        do {
            RingPoly f(m.ring, odo.coeffs());
            ++polys;
            GaussianVerdict v = certify_gaussian(ctx, f, limits);
            if (v.status == GaussianStatus::bounded) continue;
            ++exact;
            auto w = gaussian_witness_search(ctx, f, kOracleDegree, UINT64_MAX);
            const bool certified = v.status == GaussianStatus::certified;
            o.require(certified == !w.has_value(), m.name + ": verdict for " + f.to_string() + " disagrees with search");
            if (v.witness) o.require(!ctx.multiplicative(f, *v.witness), m.name + ": bogus witness");
        } while (odo.next());

        for (std::size_t i = 0; i < kMertensPairs; ++i) {
            std::vector<Elem> a(1 + rng() % 4), b(1 + rng() % 4);
            for (auto& c : a) c = static_cast<Elem>(rng() % n);
            for (auto& c : b) c = static_cast<Elem>(rng() % n);
            o.require(dedekind_mertens_check(ctx, RingPoly(m.ring, a), RingPoly(m.ring, b)),
                      m.name + ": Dedekind-Mertens fails");
        }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(rings) + " rings, " + std::to_string(exact) + "/" +
                std::to_string(polys) + " exact verdicts compared";
    return o;
}

Outcome axioms() {
    Outcome o;
    std::size_t objects = 0;
    auto check_hom = [&](const RingHom& h, const std::string& what) {
        ++objects;
        o.require(!h.find_violation(), what);
    };
    for (const auto& m : fixture::zoo(kAxiomOrder)) {
        ++objects;
        if (auto v = find_ring_axiom_violation(*m.ring)) o.require(false, m.name + ": " + *v);
        const auto& prov = m.ring->provenance();
        if (prov.kind == RingKind::trivial_ext) {
            ++objects;
            if (auto v = find_module_axiom_violation(*prov.module)) o.require(false, m.name + " module: " + *v);
            auto maps = trivial_extension_maps(m.ring);
            check_hom(maps.embedding, m.name + " embedding");
            check_hom(maps.projection, m.name + " projection");
        }
        if (prov.kind == RingKind::product) {
            auto maps = product_projections(m.ring);
            check_hom(maps.to_left, m.name + " left projection");
            check_hom(maps.to_right, m.name + " right projection");
        }
        IdealLattice lattice = enumerate_ideals(m.ring);
        for (IdealId id : lattice.maximal()) {
            Localization loc = localize_at(m.ring, lattice[id]);
            ++objects;
            if (auto v = find_ring_axiom_violation(*loc.ring)) o.require(false, m.name + " localization: " + *v);
            check_hom(loc.projection, m.name + " localization map");
        }
        for (IdealId id = 1; id + 1 < lattice.size(); id += 3) {
            QuotientRing q = make_quotient(m.ring, lattice[id]);
            ++objects;
            if (auto v = find_ring_axiom_violation(*q.ring)) o.require(false, m.name + " quotient: " + *v);
            check_hom(q.projection, m.name + " quotient map");
        }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(objects) + " objects";
    return o;
}

}  // namespace

int main() {
    CorpusReport corpus = run_corpus(CorpusConfig{});
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 fixture Z/4", fixture_z4},
        {"2 fixture Z/4 x| Z/2", fixture_z4_z2},
        {"3 fixture F2 x| F2^2", fixture_f2_f2sq},
        {"4 fixture F2 x| F2", fixture_f2_f2},
        {"5 theorem harness", theorem_harness},
        {"6 implication chain", [&] { return implication_chain(corpus); }},
        {"7 conjecture rows", [&] { return conjecture(corpus); }},
        {"8 oracle equivalence", oracle_equivalence},
        {"9 axiom suite", axioms},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(start),
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
