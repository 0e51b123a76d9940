#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pruefer/classifier/report.hpp"
#include "pruefer/classifier/theorem_checks.hpp"
#include "pruefer/ring_core/spec.hpp"

namespace pruefer {

enum class Family { zmod, gf, product, trivext };

const char* to_string(Family family) noexcept;
/// Comma-separated family names; an empty string gives no families.
std::vector<Family> parse_families(std::string_view list);

struct CorpusConfig {
    std::vector<Family> families{Family::zmod, Family::gf, Family::product, Family::trivext};
    std::size_t max_order = 64;
    std::size_t zmod_limit = 32;  ///< zmod(n) for n up to this (and max_order)
    std::size_t gf_limit = 16;    ///< gf(p,k), k ≥ 2, with p^k up to this (and max_order)
    unsigned degree_bound = 3;
    std::uint64_t search_cap = 2'000'000;
    std::uint64_t seed = 1;
    unsigned jobs = 0;
    /// Order limit for rings built by the theorem harness, which exceed max_order.
    std::size_t harness_order_limit = 32768;
    std::size_t audit_pairs = 100;  ///< random (f, g) content checks per ring

    bool has(Family f) const;
    /// Throws ArgumentError on out-of-range settings.
    void validate() const;
    ClassifierConfig classifier(std::size_t lattice_limit = 4096) const;
};

struct CorpusMember {
    std::size_t id = 0;
    std::string name;
    Family family = Family::zmod;
    RingSpecPtr spec;
    RingPtr ring;
};

/// zmod and gf members, then trivial extensions A ∝ (A/M)ⁿ (n = 1, 2) and A ∝ A
/// over the local ones, then products of two earlier members; all capped at max_order.
std::vector<CorpusMember> generate_corpus(const CorpusConfig& config);

struct CorpusEntry {
    CorpusMember member;
    std::optional<ClassificationReport> report;
    std::vector<std::string> failures;  ///< invariant or replay failures
    std::string error;                  ///< exception text when classification itself failed
    int error_code = 0;                 ///< CLI exit code class of `error`

    bool ok() const { return failures.empty() && error.empty(); }
};

struct CorpusReport {
    CorpusConfig config;
    std::vector<CorpusEntry> entries;
    /// Ring counts per verdict combination along the implication chain.
    std::map<std::string, std::size_t> combinations;

    std::size_t failure_count() const;
    bool ok() const { return failure_count() == 0; }
};

/// Classifies every member and runs the invariant suite: implication chain,
/// weak dimension 0 ⇔ arithmetical ∧ reduced, weak dimension in {0, ∞},
/// total quotient and Prüfer, certificate replay, lattice invariants and
/// seeded random content checks.
CorpusReport run_corpus(const CorpusConfig& config);

nlohmann::json to_json(const CorpusReport& report);
std::string render_markdown(const CorpusReport& report);

enum class Agreement { agree, disagree, undecided };

const char* to_string(Agreement agreement) noexcept;

/// Pseudo-arithmetical against "zero ideal locally irreducible" for one ring.
struct ConjectureRow {
    std::string ring;
    std::string spec;
    Verdict pseudo_arithmetical = Verdict::no;
    bool zero_locally_irreducible = false;
    Agreement agreement = Agreement::undecided;
    bool replayed = false;  ///< disagreements only: certificates re-verified
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
    std::vector<std::string> failures;

    std::size_t count(Agreement a) const;
    /// A disagreement is a result, not an error, as long as it survives replay.
    bool ok() const;
};

ConjectureReport conjecture_rows(const CorpusReport& corpus);
nlohmann::json to_json(const ConjectureReport& report);
std::string render_markdown(const ConjectureReport& report);

struct TheoremReport {
    std::vector<HarnessResult> residue_extensions;
    std::vector<HarnessResult> factor_descents;
    std::vector<std::string> errors;

    std::size_t failure_count() const;
    bool ok() const { return failure_count() == 0; }
};

/// Residue-extension checks over every local zmod(p^k) ≤ zmod_limit and gf(p,k) ≤ gf_limit
/// with n ∈ {1, 2}, and factor-descent checks over every corpus trivial extension.
TheoremReport run_theorems(const CorpusConfig& config);

nlohmann::json to_json(const TheoremReport& report);
std::string render_markdown(const TheoremReport& report);

}  // namespace pruefer
