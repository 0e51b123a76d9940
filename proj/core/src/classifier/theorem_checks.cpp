#include "pruefer/classifier/theorem_checks.hpp"

#include "pruefer/classifier/classify.hpp"
#include "pruefer/errors.hpp"
#include "pruefer/ring_core/axioms.hpp"
#include "pruefer/ring_core/constructions.hpp"
#include "pruefer/ring_core/spec.hpp"

namespace pruefer {

bool HarnessResult::passed() const {
    for (const auto& a : assertions) {
        if (!a.passed) return false;
    }
    return true;
}

nlohmann::json to_json(const HarnessResult& result) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& a : result.assertions) {
        checks.push_back({{"name", a.name},
                          {"status", a.skipped ? "skipped" : (a.passed ? "pass" : "fail")},
                          {"detail", a.detail}});
    }
    return {{"instance", result.instance}, {"spec", result.spec}, {"passed", result.passed()}, {"checks", checks}};
}

namespace {

std::string spec_of(const FiniteRing& ring) { return ring.spec() ? render_spec(ring.spec()) : std::string(); }

std::string describe(Condition c, const ConditionResult& r) { return std::string(key(c)) + "=" + verdict_text(c, r); }

}  // namespace

HarnessResult check_residue_extension(const RingPtr& base, std::size_t n, const ClassifierConfig& config) {
    auto maximal = is_local(base);
    if (!maximal) throw ArgumentError(base->name() + " is not local");
    if (n == 0) throw ArgumentError("residue extension needs n >= 1");
    ModulePtr e = make_residue_space(base, n);
    RingPtr ring = make_trivial_extension(base, e, Label{base->name() + " x| k^" + std::to_string(n), nullptr, nullptr}).ring;

    HarnessResult out;
    out.instance = ring->name();
    out.spec = spec_of(*base);
    ClassificationReport a = classify(base, config);
    ClassificationReport r = classify(ring, config);
    const bool field = is_field(*base, classify_elements(*base));

    out.assertions.push_back({"total_quotient_and_pruefer",
                              r[Condition::total_quotient_ring].holds() && r[Condition::pruefer].holds(),
                              false,
                              describe(Condition::total_quotient_ring, r[Condition::total_quotient_ring]) + ", " +
                                  describe(Condition::pruefer, r[Condition::pruefer])});

    HarnessAssertion gaussian{"gaussian_iff_base_gaussian", true, false,
                              "R " + describe(Condition::gaussian, r[Condition::gaussian]) + ", A " +
                                  describe(Condition::gaussian, a[Condition::gaussian])};
    if (r[Condition::gaussian].exact() && a[Condition::gaussian].exact()) {
        gaussian.passed = r[Condition::gaussian].holds() == a[Condition::gaussian].holds();
    } else {
        gaussian.skipped = true;
    }
    out.assertions.push_back(gaussian);

    const bool expected = field && n == 1;
    out.assertions.push_back({"arithmetical_iff_field_and_rank_one", r[Condition::arithmetical].holds() == expected, false,
                              describe(Condition::arithmetical, r[Condition::arithmetical]) +
                                  ", A field=" + (field ? "true" : "false") + ", n=" + std::to_string(n)});

    out.assertions.push_back({"weak_dimension_infinite", r.weak_dimension() == WeakDimension::infinite, false,
                              describe(Condition::weak_dimension_zero, r[Condition::weak_dimension_zero])});
    return out;
}

HarnessResult check_factor_descent(const RingPtr& extension, const ClassifierConfig& config) {
    trivial_extension_maps(extension);  // throws unless built as A ∝ E
    const RingPtr& base = extension->provenance().left;
    const std::size_t width = extension->provenance().module->order();

    // 0 ∝ E is exactly the indices a·|E| + e with a = 0.
    ElementSet members = extension->empty_set();
    for (Elem e = 0; e < width; ++e) members.set(e);
    QuotientRing q = make_quotient(extension, ideal_from_members(extension, members));

    HarnessResult out;
    out.instance = extension->name();
    out.spec = spec_of(*extension);

    auto iso = find_isomorphism(q.ring, base);
    out.assertions.push_back({"quotient_isomorphic_to_base", iso.has_value() && !iso->find_violation(), false,
                              q.ring->name() + " vs " + base->name()});

    ClassificationReport r = classify(extension, config);
    ClassificationReport a = classify(q.ring, config);

    HarnessAssertion gaussian{"gaussian_descends", true, false,
                              "R " + describe(Condition::gaussian, r[Condition::gaussian]) + ", R/(0 x| E) " +
                                  describe(Condition::gaussian, a[Condition::gaussian])};
    if (r[Condition::gaussian].holds()) {
        if (a[Condition::gaussian].exact()) {
            gaussian.passed = a[Condition::gaussian].holds();
        } else {
            gaussian.skipped = true;
        }
    }
    out.assertions.push_back(gaussian);

    out.assertions.push_back({"arithmetical_descends",
                              !r[Condition::arithmetical].holds() || a[Condition::arithmetical].holds(), false,
                              "R " + describe(Condition::arithmetical, r[Condition::arithmetical]) + ", R/(0 x| E) " +
                                  describe(Condition::arithmetical, a[Condition::arithmetical])});
    return out;
}

}  // namespace pruefer
