#include "pruefer/harness/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pruefer/classifier/classify.hpp"
#include "pruefer/classifier/replay.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/harness/pool.hpp"
#include "pruefer/ideal_lattice/localization.hpp"
#include "pruefer/poly_content/gaussian.hpp"
#include "pruefer/ring_core/constructions.hpp"
#include "pruefer/ring_core/elements.hpp"

namespace pruefer {

const char* to_string(Family family) noexcept {
    switch (family) {
        case Family::zmod: return "zmod";
        case Family::gf: return "gf";
        case Family::product: return "product";
        case Family::trivext: return "trivext";
    }
    return "?";
}

std::vector<Family> parse_families(std::string_view list) {
    std::vector<Family> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t end = list.find(',', start);
        if (end == std::string_view::npos) end = list.size();
        std::string_view item = list.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            std::optional<Family> f;
            for (Family c : {Family::zmod, Family::gf, Family::product, Family::trivext}) {
                if (item == to_string(c)) f = c;
            }
            if (!f) throw ArgumentError("unknown family '" + std::string(item) + "'");
            if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
        }
        start = end + 1;
    }
    return out;
}

bool CorpusConfig::has(Family f) const { return std::find(families.begin(), families.end(), f) != families.end(); }

void CorpusConfig::validate() const {
    if (max_order > FiniteRing::kDenseLimit) {
        throw ArgumentError("max_order must be at most " + std::to_string(FiniteRing::kDenseLimit));
    }
    if (degree_bound < 1) throw ArgumentError("degree bound must be at least 1");
    if (search_cap < 1) throw ArgumentError("search cap must be positive");
    if (harness_order_limit > kMaxOrder) {
        throw ArgumentError("harness order limit must be at most " + std::to_string(kMaxOrder));
    }
}

ClassifierConfig CorpusConfig::classifier(std::size_t lattice_limit) const {
    ClassifierConfig c;
    c.limits.degree_bound = degree_bound;
    c.limits.cap = search_cap;
    c.lattice.max_order = lattice_limit;
    return c;
}

// ---------------------------------------------------------------------------
// Generation

namespace {

RingSpecPtr ring_node(std::string name, decltype(RingSpec::params) params) {
    return std::make_shared<const RingSpec>(RingSpec{std::move(name), std::move(params)});
}

std::uint64_t prime_power_base(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? p : 0;
    }
    return n;  // n itself is prime
}

struct Pending {
    std::string name;
    Family family;
    RingSpecPtr spec;
    std::size_t order;
    bool local;
    bool field;
};

std::vector<Pending> local_and_base_rings(std::size_t zmod_limit, std::size_t gf_limit) {
    std::vector<Pending> out;
    for (std::uint64_t n = 2; n <= zmod_limit; ++n) {
        const bool local = prime_power_base(n) != 0;
        std::string name = "Z" + std::to_string(n);
        out.push_back({name, Family::zmod, ring_node(name, ZmodParams{n}), n, local, is_prime(n)});
    }
    for (std::uint64_t q = 4; q <= gf_limit; ++q) {
        const std::uint64_t p = prime_power_base(q);
        if (p == 0 || p == q) continue;
        std::uint32_t k = 0;
        for (std::uint64_t m = q; m > 1; m /= p) ++k;
        GfParams params{static_cast<std::uint32_t>(p), k, first_irreducible(static_cast<std::uint32_t>(p), k)};
        std::string name = "F" + std::to_string(q);
        out.push_back({name, Family::gf, ring_node(name, params), q, true, true});
    }
    return out;
}

}  // namespace

std::vector<CorpusMember> generate_corpus(const CorpusConfig& config) {
    config.validate();
    std::vector<Pending> pending;

    // Bases are built even when their family is off, since trivial extensions sit on them.
    const std::vector<Pending> bases = local_and_base_rings(std::min(config.zmod_limit, config.max_order),
                                                            std::min(config.gf_limit, config.max_order));
    for (const auto& b : bases) {
        if (config.has(b.family)) pending.push_back(b);
    }

    if (config.has(Family::trivext)) {
        RingBuilder builder;
        for (const auto& b : bases) {
            if (!b.local) continue;
            RingPtr a = builder.build(b.spec);
            const Ideal maximal = *is_local(a);
            const std::size_t residue = a->order() / maximal.size();
            std::vector<Literal> gens;
            for (Elem g : maximal.generators()) gens.push_back(a->notation().format(g));
            auto k = std::make_shared<const ModuleSpec>(ModuleSpec{"K", QuotModuleParams{b.spec, gens}});
            for (std::size_t n = 1; n <= 2; ++n) {
                std::size_t width = n == 1 ? residue : residue * residue;
                if (b.order * width > config.max_order) break;
                ModuleSpecPtr e = k;
                if (n == 2) e = std::make_shared<const ModuleSpec>(ModuleSpec{"K2", SumParams{{k, k}}});
                std::string name = b.name + "_k" + std::to_string(n);
                pending.push_back({name, Family::trivext, ring_node(name, TrivextParams{b.spec, e}), b.order * width,
                                   true, false});
            }
            if (!b.field && b.order * b.order <= config.max_order) {
                auto free = std::make_shared<const ModuleSpec>(ModuleSpec{"E", FreeParams{b.spec, 1}});
                std::string name = b.name + "_self";
                pending.push_back(
                    {name, Family::trivext, ring_node(name, TrivextParams{b.spec, free}), b.order * b.order, true, false});
            }
        }
    }

    if (config.has(Family::product)) {
        const std::vector<Pending> factors = pending;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = i; j < factors.size(); ++j) {
                if (factors[i].order * factors[j].order > config.max_order) continue;
                std::string name = factors[i].name + "_x_" + factors[j].name;
                pending.push_back({name, Family::product,
                                   ring_node(name, ProductParams{factors[i].spec, factors[j].spec}),
                                   factors[i].order * factors[j].order, false, false});
            }
        }
    }

    RingBuilder builder;
    std::vector<CorpusMember> out;
    out.reserve(pending.size());
    for (auto& p : pending) {
        RingPtr ring = builder.build(p.spec);
        out.push_back({out.size(), p.name, p.family, p.spec, std::move(ring)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

int exit_class(const std::exception& e) {
    if (dynamic_cast<const BoundError*>(&e)) return 2;
    if (dynamic_cast<const ConsistencyError*>(&e)) return 3;
    return 1;
}

void check_chain_and_jensen(const ClassificationReport& r, std::vector<std::string>& failures) {
    try {
        check_implication_chain(r);
    } catch (const ConsistencyError& e) {
        failures.push_back(std::string("implication chain: ") + e.what());
    }
    const bool wd_zero = r[Condition::weak_dimension_zero].holds();
    const bool arith_reduced = r[Condition::arithmetical].holds() && r[Condition::reduced].holds();
    if (wd_zero != arith_reduced) failures.push_back("weak dimension 0 disagrees with arithmetical and reduced");
    if (wd_zero != r[Condition::von_neumann_regular].holds()) {
        failures.push_back("weak dimension 0 disagrees with von Neumann regularity");
    }
    const auto wd = to_json(r)["weak_dimension"]["verdict"];
    if (wd != "0" && wd != "infinite") failures.push_back("weak dimension reported as " + wd.dump());
    if (!r[Condition::total_quotient_ring].holds()) failures.push_back("not a total ring of quotients");
    if (!r[Condition::pruefer].holds()) failures.push_back("not Pruefer");
}

void check_lattice(const RingAnalysis& analysis, std::vector<std::string>& failures) {
    const IdealLattice& lattice = analysis.lattice();
    const std::size_t n = lattice.size();
    for (IdealId a = 0; a < n; ++a) {
        for (IdealId b = a; b < n; ++b) {
            if (!lattice.contains(lattice.intersection(a, b), lattice.product(a, b))) {
                failures.push_back("product not inside intersection for " + lattice[a].to_string() + ", " +
                                   lattice[b].to_string());
                return;
            }
        }
    }
    for (IdealId id = 0; id < n; ++id) {
        const bool unit = id == lattice.unit_id();
        const bool regular = is_regular_ideal(lattice[id], analysis.elements());
        bool invertible = false;
        try {
            invertible = is_invertible(lattice, id, analysis.elements());
        } catch (const ConsistencyError& e) {
            failures.push_back(e.what());
            return;
        }
        if (invertible != unit || regular != unit) {
            failures.push_back("invertible/regular/unit disagree at " + lattice[id].to_string());
            return;
        }
    }
    if (analysis.is_local()) {
        const auto& local = analysis.localizations().front();
        if (local.localization.kernel.count() != 1) failures.push_back("localization of a local ring has nonzero kernel");
        const bool irreducible = is_irreducible(lattice, lattice.zero_id());
        if (irreducible != (lattice.atoms().size() <= 1)) {
            failures.push_back("irreducibility of 0 disagrees with the atom count");
        }
    }
}

RingPoly random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree) {
    std::vector<Elem> c(1 + rng() % (max_degree + 1));
    for (Elem& e : c) e = static_cast<Elem>(rng() % ring->order());
    return RingPoly(ring, std::move(c));
}

void check_contents(const RingAnalysis& analysis, const ClassificationReport& report, const CorpusConfig& config,
                    std::uint64_t stream, std::vector<std::string>& failures) {
    GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
    const IdealLattice& lattice = ctx.lattice();
    const bool gaussian = report[Condition::gaussian].holds();
    std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ULL + stream);
    for (std::size_t i = 0; i < config.audit_pairs; ++i) {
        RingPoly f = random_poly(analysis.ring_ptr(), rng, 2);
        RingPoly g = random_poly(analysis.ring_ptr(), rng, 2);
        const IdealId cfg = ctx.content_id(poly_mul(f, g));
        const IdealId cfcg = lattice.product(ctx.content_id(f), ctx.content_id(g));
        std::string where = " for f = " + f.to_string() + ", g = " + g.to_string();
        if (!lattice.contains(cfcg, cfg)) failures.push_back("c(fg) not inside c(f)c(g)" + where);
        if (gaussian && cfg != cfcg) failures.push_back("Gaussian ring with c(fg) != c(f)c(g)" + where);
        if (!dedekind_mertens_check(ctx, f, g)) failures.push_back("Dedekind-Mertens fails" + where);
        if (failures.size() > 8) return;
    }
}

std::string combination(const ClassificationReport& r) {
    std::string out;
    for (Condition c : {Condition::semihereditary, Condition::weak_dimension_zero, Condition::arithmetical,
                        Condition::gaussian, Condition::pruefer}) {
        if (!out.empty()) out += ", ";
        out += std::string(key(c)) + "=" + verdict_text(c, r[c]);
    }
    return out;
}

}  // namespace

std::size_t CorpusReport::failure_count() const {
    std::size_t count = 0;
    for (const auto& e : entries) count += e.failures.size() + (e.error.empty() ? 0 : 1);
    return count;
}

CorpusReport run_corpus(const CorpusConfig& config) {
    CorpusReport out;
    out.config = config;
    std::vector<CorpusMember> members = generate_corpus(config);
    out.entries.resize(members.size());
    const ClassifierConfig classifier = config.classifier();

    parallel_for(members.size(), config.jobs, [&](std::size_t i) {
        CorpusEntry& entry = out.entries[i];
        entry.member = members[i];
        try {
            RingAnalysis analysis(entry.member.ring, classifier.lattice);
            ClassificationReport report = classify(analysis, classifier);
            check_chain_and_jensen(report, entry.failures);
            ReplayResult replay = replay_report(entry.member.ring, report);
            for (auto& f : replay.failures) entry.failures.push_back("replay: " + f);
            check_lattice(analysis, entry.failures);
            check_contents(analysis, report, config, i, entry.failures);
            entry.report = std::move(report);
        } catch (const std::exception& e) {
            entry.error = e.what();
            entry.error_code = exit_class(e);
        }
    });

    for (const auto& e : out.entries) {
        if (e.report) ++out.combinations[combination(*e.report)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture rows

const char* to_string(Agreement agreement) noexcept {
    switch (agreement) {
        case Agreement::agree: return "agree";
        case Agreement::disagree: return "DISAGREE";
        case Agreement::undecided: return "undecided";
    }
    return "?";
}

std::size_t ConjectureReport::count(Agreement a) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [a](const auto& r) { return r.agreement == a; }));
}

bool ConjectureReport::ok() const {
    if (!failures.empty()) return false;
    return std::all_of(rows.begin(), rows.end(),
                       [](const auto& r) { return r.agreement != Agreement::disagree || r.replayed; });
}

ConjectureReport conjecture_rows(const CorpusReport& corpus) {
    ConjectureReport out;
    for (const auto& entry : corpus.entries) {
        if (!entry.report) {
            out.failures.push_back(entry.member.name + ": " + entry.error);
            continue;
        }
        const ClassificationReport& r = *entry.report;
        ConjectureRow row;
        row.ring = entry.member.name;
        row.spec = r.spec;
        row.pseudo_arithmetical = r[Condition::pseudo_arithmetical].verdict;
        row.zero_locally_irreducible = r[Condition::zero_locally_irreducible].holds();
        if (row.pseudo_arithmetical == Verdict::bounded_yes) {
            row.agreement = Agreement::undecided;
        } else if ((row.pseudo_arithmetical == Verdict::yes) == row.zero_locally_irreducible) {
            row.agreement = Agreement::agree;
        } else {
            row.agreement = Agreement::disagree;
            ReplayResult a = replay_certificate(entry.member.ring, Condition::pseudo_arithmetical,
                                                r[Condition::pseudo_arithmetical]);
            ReplayResult b = replay_certificate(entry.member.ring, Condition::zero_locally_irreducible,
                                                r[Condition::zero_locally_irreducible]);
            row.replayed = a.ok() && b.ok();
            if (!row.replayed) out.failures.push_back(row.ring + ": disagreement does not survive replay");
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem checks

std::size_t TheoremReport::failure_count() const {
    std::size_t count = errors.size();
    for (const auto* list : {&residue_extensions, &factor_descents}) {
        for (const auto& r : *list) count += r.passed() ? 0 : 1;
    }
    return count;
}

TheoremReport run_theorems(const CorpusConfig& config) {
    config.validate();
    TheoremReport out;
    const ClassifierConfig classifier = config.classifier(config.harness_order_limit);

    RingBuilder builder;
    std::vector<RingPtr> bases;
    for (const auto& b : local_and_base_rings(config.zmod_limit, config.gf_limit)) {
        if (b.local) bases.push_back(builder.build(b.spec));
    }

    struct Job {
        RingPtr base;
        std::size_t n;
    };
    std::vector<Job> jobs;
    for (const auto& b : bases) {
        for (std::size_t n = 1; n <= 2; ++n) {
            const std::size_t residue = b->order() / is_local(b)->size();
            if (b->order() * residue * (n == 1 ? 1 : residue) <= config.harness_order_limit) jobs.push_back({b, n});
        }
    }
    std::vector<std::optional<HarnessResult>> residue(jobs.size());
    std::vector<std::string> residue_errors(jobs.size());
    parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
        try {
            residue[i] = check_residue_extension(jobs[i].base, jobs[i].n, classifier);
        } catch (const std::exception& e) {
            residue_errors[i] = jobs[i].base->name() + " n=" + std::to_string(jobs[i].n) + ": " + e.what();
        }
    });

    CorpusConfig trivexts = config;
    trivexts.families = {Family::trivext};
    std::vector<CorpusMember> members = generate_corpus(trivexts);
    std::vector<std::optional<HarnessResult>> descent(members.size());
    std::vector<std::string> descent_errors(members.size());
    parallel_for(members.size(), config.jobs, [&](std::size_t i) {
        try {
            descent[i] = check_factor_descent(members[i].ring, classifier);
            descent[i]->instance = members[i].name;
        } catch (const std::exception& e) {
            descent_errors[i] = members[i].name + ": " + e.what();
        }
    });

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (residue[i]) out.residue_extensions.push_back(std::move(*residue[i]));
        if (!residue_errors[i].empty()) out.errors.push_back(residue_errors[i]);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (descent[i]) out.factor_descents.push_back(std::move(*descent[i]));
        if (!descent_errors[i].empty()) out.errors.push_back(descent_errors[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

nlohmann::json config_json(const CorpusConfig& c) {
    nlohmann::json families = nlohmann::json::array();
    for (Family f : c.families) families.push_back(to_string(f));
    return {{"families", families},     {"max_order", c.max_order},       {"zmod_limit", c.zmod_limit},
            {"gf_limit", c.gf_limit},   {"degree_bound", c.degree_bound}, {"search_cap", c.search_cap},
            {"seed", c.seed},           {"audit_pairs", c.audit_pairs}};
}

std::string cell(std::string text) {
    std::string out;
    for (char ch : text) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += ' ';
        else out += ch;
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const CorpusReport& report) {
    nlohmann::json rings = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json j = {{"id", e.member.id},
                            {"name", e.member.name},
                            {"family", to_string(e.member.family)},
                            {"order", e.member.ring->order()},
                            {"failures", e.failures}};
        if (e.report) j["report"] = to_json(*e.report);
        if (!e.error.empty()) j["error"] = e.error;
        rings.push_back(std::move(j));
    }
    return {{"config", config_json(report.config)},
            {"rings", rings},
            {"combinations", report.combinations},
            {"failure_count", report.failure_count()}};
}

std::string render_markdown(const CorpusReport& report) {
    static constexpr std::array columns = {
        Condition::semihereditary, Condition::weak_dimension_zero, Condition::arithmetical,
        Condition::gaussian,       Condition::pruefer,             Condition::total_quotient_ring,
        Condition::pseudo_arithmetical, Condition::zero_locally_irreducible, Condition::reduced,
        Condition::von_neumann_regular,
    };
    std::ostringstream os;
    os << "# Corpus\n\n" << report.entries.size() << " rings, " << report.failure_count() << " failures.\n\n";
    os << "| id | ring | order |";
    for (Condition c : columns) os << ' ' << key(c) << " |";
    os << " status |\n|---|---|---|";
    for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
    os << "---|\n";
    for (const auto& e : report.entries) {
        os << "| " << e.member.id << " | " << e.member.name << " | " << e.member.ring->order() << " |";
        for (Condition c : columns) os << ' ' << (e.report ? verdict_text(c, (*e.report)[c]) : "-") << " |";
        os << ' ' << (e.ok() ? "ok" : "FAIL") << " |\n";
    }
    os << "\n## Combinations\n\n| semihereditary, weak dimension, arithmetical, Gaussian, Pruefer | rings |\n|---|---|\n";
    for (const auto& [combo, count] : report.combinations) os << "| " << cell(combo) << " | " << count << " |\n";
    if (report.failure_count() > 0) {
        os << "\n## Failures\n\n";
        for (const auto& e : report.entries) {
            for (const auto& f : e.failures) os << "- " << e.member.name << ": " << cell(f) << '\n';
            if (!e.error.empty()) os << "- " << e.member.name << ": " << cell(e.error) << '\n';
        }
    }
    return os.str();
}

nlohmann::json to_json(const ConjectureReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json j = {{"ring", r.ring},
                            {"pseudo_arithmetical", to_string(r.pseudo_arithmetical)},
                            {"zero_locally_irreducible", r.zero_locally_irreducible},
                            {"agreement", to_string(r.agreement)}};
        if (r.agreement == Agreement::disagree) {
            j["replayed"] = r.replayed;
            j["spec"] = r.spec;
        }
        rows.push_back(std::move(j));
    }
    return {{"rows", rows},
            {"agree", report.count(Agreement::agree)},
            {"disagree", report.count(Agreement::disagree)},
            {"undecided", report.count(Agreement::undecided)},
            {"failures", report.failures}};
}

std::string render_markdown(const ConjectureReport& report) {
    std::ostringstream os;
    os << "# Pseudo-arithmetical vs. zero ideal locally irreducible\n\n"
       << report.count(Agreement::agree) << " agree, " << report.count(Agreement::disagree) << " disagree, "
       << report.count(Agreement::undecided) << " undecided.\n\n";
    if (report.count(Agreement::disagree) > 0) {
        os << "## Disagreements\n\n";
        for (const auto& r : report.rows) {
            if (r.agreement != Agreement::disagree) continue;
            os << "### " << r.ring << (r.replayed ? " (replayed)" : " (REPLAY FAILED)") << "\n\n```\n" << r.spec
               << "```\n\n";
        }
    }
    os << "| ring | pseudo_arithmetical | zero_locally_irreducible | agreement |\n|---|---|---|---|\n";
    for (const auto& r : report.rows) {
        os << "| " << r.ring << " | " << to_string(r.pseudo_arithmetical) << " | "
           << (r.zero_locally_irreducible ? "yes" : "no") << " | " << to_string(r.agreement) << " |\n";
    }
    if (!report.failures.empty()) {
        os << "\n## Failures\n\n";
        for (const auto& f : report.failures) os << "- " << cell(f) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const TheoremReport& report) {
    nlohmann::json residue = nlohmann::json::array();
    nlohmann::json descent = nlohmann::json::array();
    for (const auto& r : report.residue_extensions) residue.push_back(to_json(r));
    for (const auto& r : report.factor_descents) descent.push_back(to_json(r));
    return {{"residue_extensions", residue},
            {"factor_descents", descent},
            {"errors", report.errors},
            {"failure_count", report.failure_count()}};
}

std::string render_markdown(const TheoremReport& report) {
    std::ostringstream os;
    os << "# Theorem checks\n\n" << report.residue_extensions.size() << " residue extensions, "
       << report.factor_descents.size() << " factor descents, " << report.failure_count() << " failures.\n";
    auto table = [&](const char* title, const std::vector<HarnessResult>& results) {
        os << "\n## " << title << "\n\n| instance | check | status | detail |\n|---|---|---|---|\n";
        for (const auto& r : results) {
            for (const auto& a : r.assertions) {
                os << "| " << cell(r.instance) << " | " << a.name << " | "
                   << (a.skipped ? "skipped" : (a.passed ? "pass" : "FAIL")) << " | " << cell(a.detail) << " |\n";
            }
        }
    };
    table("Residue extensions", report.residue_extensions);
    table("Factor descents", report.factor_descents);
    if (!report.errors.empty()) {
        os << "\n## Errors\n\n";
        for (const auto& e : report.errors) os << "- " << cell(e) << '\n';
    }
    return os.str();
}

}  // namespace pruefer
