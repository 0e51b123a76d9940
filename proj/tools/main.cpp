// pruefer: classify finite commutative rings and run the corpus harnesses.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 size/search bound exceeded,
// 3 internal consistency failure (including failed corpus or theorem checks).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pruefer/classifier.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/harness.hpp"
#include "pruefer/ring_core.hpp"

namespace {

using namespace pruefer;

enum Exit { kOk = 0, kUsage = 1, kBound = 2, kConsistency = 3 };

struct Output {
    std::string format = "json";
    std::string path;
};

struct ClassifyArgs {
    std::string spec_path;
    std::string ring;
    unsigned degree_bound = SearchLimits{}.degree_bound;
    bool timings = false;
    Output out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw ArgumentError("cannot write " + out.path);
    file << text;
}

void emit(const Output& out, const nlohmann::json& json, const std::string& markdown) {
    emit(out, out.format == "md" ? markdown : json.dump(2) + "\n");
}

std::uint64_t search_cap_from_env() {
    const char* value = std::getenv("PRUEFER_SEARCH_CAP");
    if (value == nullptr || *value == '\0') return SearchLimits{}.cap;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(value, &end, 10);
    if (*end != '\0' || cap == 0) throw ArgumentError("PRUEFER_SEARCH_CAP must be a positive integer");
    return cap;
}

nlohmann::json poly_verdict_json(const GaussianVerdict& v) {
    nlohmann::json j = {{"status", to_string(v.status)}};
    if (v.reason) j["reason"] = to_string(*v.reason);
    if (v.witness) j["witness"] = poly_json(*v.witness);
    if (v.bound) j["bound"] = *v.bound;
    if (v.capped) j["capped"] = true;
    return j;
}

int cmd_classify(const ClassifyArgs& args) {
    SpecDocument doc = parse_spec_document(read_file(args.spec_path));
    RingSpecPtr spec = doc.target(args.ring);
    RingBuilder builder;
    RingPtr ring = builder.build(spec);

    ClassifierConfig config;
    config.limits.degree_bound = args.degree_bound;
    config.limits.cap = search_cap_from_env();
    RingAnalysis analysis(ring, config.lattice);
    ClassificationReport report = classify(analysis, config);

    ReportOptions options{args.timings};
    nlohmann::json json = to_json(report, options);
    std::string markdown = render_markdown(report, options);

    // Polynomials declared in the file are certified over the classified ring.
    if (!doc.polys.empty() && doc.target() == spec) {
        GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
        ctx.set_ring_certified(report[Condition::gaussian].holds());
        nlohmann::json polys = nlohmann::json::array();
        markdown += "\n| polynomial | coefficients | Gaussian |\n|---|---|---|\n";
        for (const auto& p : doc.polys) {
            RingPoly f = parse_poly(ring, p.coeffs);
            GaussianVerdict v = certify_gaussian(ctx, f, config.limits);
            nlohmann::json j = poly_verdict_json(v);
            j["name"] = p.name;
            j["coefficients"] = poly_json(f);
            polys.push_back(j);
            markdown += "| " + p.name + " | " + f.to_string() + " | " + to_string(v.status) + " |\n";
        }
        json["polynomials"] = polys;
    }
    emit(args.out, json, markdown);
    return kOk;
}

int cmd_lattice(const ClassifyArgs& args) {
    RingPtr ring = build_ring(parse_spec_document(read_file(args.spec_path)).target(args.ring));
    IdealLattice lattice = enumerate_ideals(ring);
    nlohmann::json ideals = nlohmann::json::array();
    std::string markdown = "| id | generators | size |\n|---|---|---|\n";
    for (IdealId id = 0; id < lattice.size(); ++id) {
        nlohmann::json members = nlohmann::json::array();
        const auto& set = lattice[id].members();
        for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) members.push_back(i);
        ideals.push_back({{"id", id}, {"members", members}, {"generators", ideal_json(lattice[id])["generators"]}});
        markdown += "| " + std::to_string(id) + " | " + lattice[id].to_string() + " | " +
                    std::to_string(lattice[id].size()) + " |\n";
    }
    nlohmann::json json = {{"ring", ring->name()},
                           {"order", ring->order()},
                           {"ideals", ideals},
                           {"maximal", lattice.maximal()},
                           {"atoms", lattice.atoms()}};
    emit(args.out, json, markdown);
    return kOk;
}

struct CorpusArgs {
    CorpusConfig config;
    std::string families = "zmod,gf,product,trivext";
    Output out;

    CorpusConfig resolved() const {
        CorpusConfig c = config;
        c.families = parse_families(families);
        c.search_cap = search_cap_from_env();
        c.validate();
        return c;
    }
};

int corpus_exit(const CorpusReport& report) {
    if (report.ok()) return kOk;
    bool only_bounds = true;
    for (const auto& e : report.entries) {
        if (!e.failures.empty() || (!e.error.empty() && e.error_code != kBound)) only_bounds = false;
    }
    return only_bounds ? kBound : kConsistency;
}

int cmd_corpus(const CorpusArgs& args) {
    CorpusReport report = run_corpus(args.resolved());
    emit(args.out, to_json(report), render_markdown(report));
    if (!report.ok()) std::cerr << report.failure_count() << " corpus check(s) failed\n";
    return corpus_exit(report);
}

int cmd_conjecture(const CorpusArgs& args) {
    CorpusReport corpus = run_corpus(args.resolved());
    ConjectureReport report = conjecture_rows(corpus);
    emit(args.out, to_json(report), render_markdown(report));
    for (const auto& row : report.rows) {
        if (row.agreement == Agreement::disagree) {
            std::cerr << "DISAGREEMENT at " << row.ring << (row.replayed ? " (replayed)" : " (replay failed)") << '\n';
        }
    }
    if (!report.ok()) return kConsistency;
    return corpus_exit(corpus) == kOk ? kOk : kConsistency;
}

int cmd_theorems(const CorpusArgs& args) {
    TheoremReport report = run_theorems(args.resolved());
    emit(args.out, to_json(report), render_markdown(report));
    if (report.ok()) return kOk;
    for (const auto* list : {&report.residue_extensions, &report.factor_descents}) {
        for (const auto& r : *list) {
            if (!r.passed()) std::cerr << to_json(r).dump() << '\n';
        }
    }
    for (const auto& e : report.errors) std::cerr << e << '\n';
    return kConsistency;
}

void add_output(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--out", out.path, "Write the report here instead of stdout");
}

void add_corpus_flags(CLI::App* cmd, CorpusArgs& args) {
    auto& c = args.config;
    cmd->add_option("--max-order", c.max_order, "Largest ring order in the corpus");
    cmd->add_option("--families", args.families, "Comma-separated subset of zmod,gf,product,trivext");
    cmd->add_option("--degree-bound", c.degree_bound, "Polynomial degree bound for Gaussian searches")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--zmod-limit", c.zmod_limit, "Largest n for zmod(n)");
    cmd->add_option("--gf-limit", c.gf_limit, "Largest q for GF(q)");
    cmd->add_option("--seed", c.seed, "Seed for random content checks");
    cmd->add_option("--audit-pairs", c.audit_pairs, "Random polynomial pairs checked per ring");
    cmd->add_option("--jobs", c.jobs, "Worker threads (0 = hardware concurrency)");
    add_output(cmd, args.out);
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return kBound;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide Pruefer-type conditions for finite commutative rings"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Classify the last (or named) ring of a spec file");
    classify_cmd->add_option("--spec", classify_args.spec_path, "Spec file")->required()->check(CLI::ExistingFile);
    classify_cmd->add_option("--ring", classify_args.ring, "Ring to classify (default: last declared)");
    classify_cmd->add_option("--degree-bound", classify_args.degree_bound, "Polynomial degree bound")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--timings", classify_args.timings, "Include per-condition timings");
    add_output(classify_cmd, classify_args.out);

    ClassifyArgs lattice_args;
    auto* lattice_cmd = app.add_subcommand("lattice", "Dump the ideal lattice of a ring");
    lattice_cmd->add_option("--spec", lattice_args.spec_path, "Spec file")->required()->check(CLI::ExistingFile);
    lattice_cmd->add_option("--ring", lattice_args.ring, "Ring to use (default: last declared)");
    add_output(lattice_cmd, lattice_args.out);

    CorpusArgs corpus_args, conjecture_args, theorem_args;
    auto* corpus_cmd = app.add_subcommand("corpus", "Classify a generated corpus and check invariants");
    add_corpus_flags(corpus_cmd, corpus_args);
    auto* conjecture_cmd =
        app.add_subcommand("conjecture45", "Compare pseudo-arithmetical with local irreducibility of zero");
    add_corpus_flags(conjecture_cmd, conjecture_args);
    auto* theorem_cmd = app.add_subcommand("theorems", "Residue-extension and factor-descent checks");
    add_corpus_flags(theorem_cmd, theorem_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*classify_cmd) return guarded([&] { return cmd_classify(classify_args); });
    if (*lattice_cmd) return guarded([&] { return cmd_lattice(lattice_args); });
    if (*corpus_cmd) return guarded([&] { return cmd_corpus(corpus_args); });
    if (*conjecture_cmd) return guarded([&] { return cmd_conjecture(conjecture_args); });
    return guarded([&] { return cmd_theorems(theorem_args); });
}
