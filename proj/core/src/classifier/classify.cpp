#include "pruefer/classifier/classify.hpp"

#include <algorithm>
#include <chrono>

#include "pruefer/errors.hpp"
#include "pruefer/ring_core/spec.hpp"

namespace pruefer {

using nlohmann::json;

json element_json(const FiniteRing& ring, Elem e) { return ring.format(e); }

json ideal_json(const Ideal& ideal) {
    json gens = json::array();
    for (Elem g : ideal.generators()) gens.push_back(ideal.ring()->format(g));
    return json{{"generators", gens}, {"order", ideal.size()}};
}

json poly_json(const RingPoly& poly) {
    json out = json::array();
    for (Elem c : poly.coeffs()) out.push_back(poly.ring()->format(c));
    return out;
}

namespace {

ConditionResult structural(bool holds, std::string rule, json payload = json::object()) {
    ConditionResult r;
    r.verdict = holds ? Verdict::yes : Verdict::no;
    r.certificate = Certificate{CertificateKind::structural, std::move(rule), std::move(payload)};
    return r;
}

ConditionResult refuted(std::string rule, json witness) {
    ConditionResult r;
    r.verdict = Verdict::no;
    r.certificate = Certificate{CertificateKind::witness, std::move(rule), witness};
    r.witness = std::move(witness);
    return r;
}

ConditionResult bounded(std::string rule, unsigned bound, json payload) {
    ConditionResult r;
    r.verdict = Verdict::bounded_yes;
    r.certificate = Certificate{CertificateKind::bounded, std::move(rule), std::move(payload)};
    r.bound = bound;
    return r;
}

json maximal_ideals_json(const RingAnalysis& analysis) {
    json out = json::array();
    for (const auto& local : analysis.localizations()) out.push_back(ideal_json(local.localization.maximal));
    return out;
}

Ideal preimage_ideal(const RingPtr& ring, const RingHom& projection, const ElementSet& members) {
    ElementSet pre = projection.preimage(members);
    auto gens = detail::greedy_generators(*ring, pre);
    return Ideal(ring, std::move(pre), std::move(gens));
}

json pair_witness(const RingPoly& f, const RingPoly& g) { return json{{"f", poly_json(f)}, {"g", poly_json(g)}}; }

// Lifts a coefficient list through an injective element map.
RingPoly lift(const RingPtr& ring, const RingPoly& p, const std::vector<Elem>& map) {
    std::vector<Elem> c;
    for (Elem x : p.coeffs()) c.push_back(map[x]);
    return RingPoly(ring, std::move(c));
}

std::vector<Elem> parse_literal_poly(const FiniteRing& ring, const json& coeffs) {
    std::vector<Elem> out;
    for (const auto& c : coeffs) out.push_back(ring.parse(c.get<std::string>()));
    return out;
}

// Bounded search for a non-Gaussian pair over a local ring. Polynomials with
// a unit coefficient have unit content and are Gaussian, so both f and g range
// over polynomials with coefficients in the maximal ideal.
ConditionResult gaussian_pair_search(const RingAnalysis& analysis, const ClassifierConfig& config) {
    GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
    const IdealLattice& lat = analysis.lattice();
    const std::vector<Elem> m = members_of(lat[lat.maximal().front()].members());
    const std::size_t q = m.size();

    std::vector<std::vector<std::vector<Elem>>> levels(1);  // levels[d]: degree exactly d
    std::vector<std::vector<IdealId>> contents(1);
    std::uint64_t tested = 0;
    unsigned completed = 0;
    bool capped = false;
    std::vector<Elem> scratch;
    for (unsigned d = 1; d <= config.limits.degree_bound; ++d) {
        const std::uint64_t top = search_space(q, d - 1) * (q - 1);
        std::uint64_t below = 0;
        for (unsigned k = 1; k < d; ++k) below += levels[k].size();
        if (top > config.limits.cap) {
            capped = true;
            break;
        }
        const std::uint64_t pairs = top * below + top * (top + 1) / 2;
        if (tested + pairs > config.limits.cap) {
            capped = true;
            break;
        }
        auto& level = levels.emplace_back();
        auto& level_content = contents.emplace_back();
        level.reserve(top);
        PolyOdometer odo(q, d + 1);
        do {
            if (odo.coeffs().back() == 0) continue;
            std::vector<Elem> c(d + 1);
            for (unsigned i = 0; i <= d; ++i) c[i] = m[odo.coeffs()[i]];
            level_content.push_back(ctx.content_id(c));
            level.push_back(std::move(c));
        } while (odo.next());

        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& f = level[i];
            const IdealId cf = level_content[i];
            for (unsigned k = 1; k <= d; ++k) {
                const std::size_t start = k == d ? i : 0;
                for (std::size_t j = start; j < levels[k].size(); ++j) {
                    if (!ctx.multiplicative(f, cf, levels[k][j], scratch)) {
                        RingPoly pf(analysis.ring_ptr(), f), pg(analysis.ring_ptr(), levels[k][j]);
                        return refuted("content_not_multiplicative", pair_witness(pf, pg));
                    }
                }
            }
        }
        tested += pairs;
        completed = d;
    }
    return bounded("bounded_pair_search", completed,
                   json{{"degree_bound", completed},
                        {"requested_degree_bound", config.limits.degree_bound},
                        {"pairs_tested", tested},
                        {"cap", config.limits.cap},
                        {"capped", capped}});
}

ConditionResult gaussian_of(const RingPtr& ring, const ClassifierConfig& config) {
    RingAnalysis sub(ring, config.lattice);
    return decide_gaussian(sub, decide_arithmetical(sub), config);
}

// Combines verdicts of local factors. `maps[i]` sends factor i into the ring.
ConditionResult combine_factors(const RingAnalysis& analysis, const std::vector<RingPtr>& factors,
                                const std::vector<std::vector<Elem>>& maps, std::string via, json extra,
                                const ClassifierConfig& config) {
    json parts = json::array();
    std::optional<unsigned> bound;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        ConditionResult r = gaussian_of(factors[i], config);
        if (r.verdict == Verdict::no) {
            const RingPtr& factor = factors[i];
            RingPoly f(factor, parse_literal_poly(*factor, r.witness->at("f")));
            RingPoly g(factor, parse_literal_poly(*factor, r.witness->at("g")));
            RingPoly lf = lift(analysis.ring_ptr(), f, maps[i]);
            RingPoly lg = lift(analysis.ring_ptr(), g, maps[i]);
            GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
            if (ctx.multiplicative(lf, lg)) {
                throw ConsistencyError("lifted non-Gaussian pair from " + factor->name() + " is multiplicative in " +
                                       analysis.ring().name());
            }
            return refuted("content_not_multiplicative", pair_witness(lf, lg));
        }
        if (r.verdict == Verdict::bounded_yes) bound = std::min(bound.value_or(*r.bound), *r.bound);
        parts.push_back(json{{"ring", factors[i]->name()}, {"certificate", to_json(r.certificate)}});
    }
    json payload{{"via", std::move(via)}, {"factors", std::move(parts)}};
    payload.update(extra);
    if (bound) return bounded("decomposition", *bound, std::move(payload));
    return structural(true, "decomposition", std::move(payload));
}

ConditionResult gaussian_decomposition(const RingAnalysis& analysis, const ClassifierConfig& config) {
    const FiniteRing& ring = analysis.ring();
    if (ring.kind() == RingKind::product) {
        const RingProvenance& p = ring.provenance();
        const Elem width = static_cast<Elem>(p.right->order());
        std::vector<Elem> left(p.left->order()), right(p.right->order());
        for (Elem a = 0; a < left.size(); ++a) left[a] = a * width;
        for (Elem b = 0; b < right.size(); ++b) right[b] = b;
        return combine_factors(analysis, {p.left, p.right}, {left, right}, "product", json::object(), config);
    }
    // R ≅ ∏ R_m: lift x ∈ R_m to the element that is x at m and 0 elsewhere.
    const auto& locals = analysis.localizations();
    std::vector<RingPtr> factors;
    std::vector<std::vector<Elem>> maps;
    for (std::size_t i = 0; i < locals.size(); ++i) {
        const auto& loc = locals[i].localization;
        factors.push_back(loc.ring);
        std::vector<Elem> map(loc.ring->order(), 0);
        std::vector<bool> seen(loc.ring->order(), false);
        for (Elem r = 0; r < ring.order(); ++r) {
            bool elsewhere_zero = true;
            for (std::size_t j = 0; j < locals.size() && elsewhere_zero; ++j) {
                if (j != i && locals[j].localization.projection(r) != 0) elsewhere_zero = false;
            }
            if (!elsewhere_zero) continue;
            Elem x = loc.projection(r);
            if (!seen[x]) {
                seen[x] = true;
                map[x] = r;
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw ConsistencyError(ring.name() + " is not the product of its localizations");
        }
        maps.push_back(std::move(map));
    }
    return combine_factors(analysis, factors, maps, "localization", json{{"maximal_ideals", maximal_ideals_json(analysis)}},
                           config);
}

std::optional<ConditionResult> gaussian_trivial_extension(const RingAnalysis& analysis, const ClassifierConfig& config) {
    const FiniteRing& ring = analysis.ring();
    if (ring.kind() != RingKind::trivial_ext) return std::nullopt;
    const RingPtr& base = ring.provenance().left;
    const ModulePtr& module = ring.provenance().module;
    if (module->order() < 2) return std::nullopt;
    auto maximal = is_local(base);
    if (!maximal) return std::nullopt;
    for (auto m = maximal->members().find_first(); m != ElementSet::npos; m = maximal->members().find_next(m)) {
        for (Elem e = 0; e < module->order(); ++e) {
            if (module->act(static_cast<Elem>(m), e) != 0) return std::nullopt;
        }
    }
    ConditionResult base_result = gaussian_of(base, config);
    if (!base_result.holds()) return std::nullopt;
    return structural(true, "trivial_extension",
                      json{{"base", base->name()},
                           {"base_maximal", ideal_json(*maximal)},
                           {"module_order", module->order()},
                           {"base_certificate", to_json(base_result.certificate)}});
}

// First non-locally-principal ideal in lattice order.
std::optional<IdealId> first_non_lp(const RingAnalysis& analysis) {
    for (IdealId id = 0; id < analysis.lattice().size(); ++id) {
        if (!analysis.is_locally_principal(id)) return id;
    }
    return std::nullopt;
}

std::uint64_t numeric_value(const std::vector<Elem>& coeffs, std::size_t n) {
    std::uint64_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * n + coeffs[i];
    return v;
}

// Orderings of a generator list as coefficient sequences, smallest numeric value first.
std::vector<std::vector<Elem>> generator_layouts(std::vector<Elem> gens, std::size_t n) {
    std::vector<std::vector<Elem>> out;
    std::sort(gens.begin(), gens.end());
    if (gens.size() <= 6) {
        do out.push_back(gens);
        while (std::next_permutation(gens.begin(), gens.end()));
    } else {
        out.push_back(gens);
        out.emplace_back(gens.rbegin(), gens.rend());
    }
    std::sort(out.begin(), out.end(), [n](const auto& a, const auto& b) { return numeric_value(a, n) < numeric_value(b, n); });
    return out;
}

template <class F>
ConditionResult timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    ConditionResult r = f();
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

ConditionResult decide_reduced(const RingAnalysis& analysis) {
    const FiniteRing& r = analysis.ring();
    for (Elem a = 1; a < r.order(); ++a) {
        if (r.mul(a, a) == 0) return refuted("nonzero_nilpotent", json{{"element", r.format(a)}, {"exponent", 2}});
    }
    return structural(true, "no_nonzero_nilpotent");
}

ConditionResult decide_von_neumann_regular(const RingAnalysis& analysis) {
    const FiniteRing& r = analysis.ring();
    const ElementTable& el = analysis.elements();
    for (Elem a = 0; a < r.order(); ++a) {
        if (el.is_unit(a)) continue;
        const Elem sq = r.mul(a, a);
        bool found = false;
        for (Elem x = 0; x < r.order() && !found; ++x) found = r.mul(sq, x) == a;
        if (!found) return refuted("no_quasi_inverse", json{{"element", r.format(a)}});
    }
    return structural(true, "quasi_inverses_exist");
}

ConditionResult decide_weak_dimension(const RingAnalysis&, const ConditionResult& vn_regular) {
    return structural(vn_regular.holds(), "artinian_dichotomy",
                      json{{"von_neumann_regular", vn_regular.holds()},
                           {"note", "a finite ring is Artinian; its weak dimension is 0 when it is von Neumann "
                                    "regular and infinite otherwise"}});
}

ConditionResult decide_semihereditary(const RingAnalysis& analysis, const ConditionResult& vn_regular) {
    std::optional<std::size_t> non_field;
    for (std::size_t i = 0; i < analysis.localizations().size() && !non_field; ++i) {
        if (analysis.localizations()[i].lattice->size() != 2) non_field = i;
    }
    if (vn_regular.holds() == non_field.has_value()) {
        throw ConsistencyError("von Neumann regularity of " + analysis.ring().name() +
                               " disagrees with its localizations being fields");
    }
    if (non_field) {
        return refuted("localization_not_field",
                       json{{"maximal", ideal_json(analysis.localizations()[*non_field].localization.maximal)}});
    }
    return structural(true, "localizations_are_fields", json{{"maximal_ideals", maximal_ideals_json(analysis)}});
}

ConditionResult decide_arithmetical(const RingAnalysis& analysis) {
    if (auto id = first_non_lp(analysis)) {
        const auto& local = analysis.localizations()[*analysis.non_principal_at(*id)];
        return refuted("not_locally_principal",
                       json{{"ideal", ideal_json(analysis.lattice()[*id])}, {"maximal", ideal_json(local.localization.maximal)}});
    }
    return structural(true, "all_ideals_locally_principal",
                      json{{"ideal_count", analysis.lattice().size()}, {"maximal_ideals", maximal_ideals_json(analysis)}});
}

ConditionResult decide_gaussian(const RingAnalysis& analysis, const ConditionResult& arithmetical,
                                const ClassifierConfig& config) {
    if (arithmetical.holds()) {
        return structural(true, "arithmetical", json{{"arithmetical", to_json(arithmetical.certificate)}});
    }
    if (!analysis.is_local()) return gaussian_decomposition(analysis, config);
    const IdealLattice& lat = analysis.lattice();
    const IdealId m = lat.maximal().front();
    if (lat.product(m, m) == lat.zero_id()) return structural(true, "square_zero_maximal", json{{"maximal", ideal_json(lat[m])}});
    if (auto r = gaussian_trivial_extension(analysis, config)) return *r;
    return gaussian_pair_search(analysis, config);
}

ConditionResult decide_pruefer(const RingAnalysis& analysis) {
    const IdealLattice& lat = analysis.lattice();
    json regular = json::array();
    for (IdealId id = 0; id < lat.size(); ++id) {
        if (!is_regular_ideal(lat[id], analysis.elements())) continue;
        auto partner = inverse_partner(lat, id, analysis.elements());
        if (!partner) return refuted("regular_ideal_not_invertible", json{{"ideal", ideal_json(lat[id])}});
        is_invertible(lat, id, analysis.elements());
        regular.push_back(json{{"ideal", ideal_json(lat[id])}, {"inverse", ideal_json(lat[*partner])}});
    }
    return structural(true, "regular_ideals_invertible", json{{"regular_ideals", std::move(regular)}});
}

ConditionResult decide_total_quotient_ring(const RingAnalysis& analysis) {
    const FiniteRing& r = analysis.ring();
    const ElementTable& el = analysis.elements();
    std::size_t units = 0, zerodivisors = 0;
    for (Elem a = 0; a < r.order(); ++a) {
        const Elem p = el.partner[a];
        if (el.is_unit(a) && r.mul(a, p) == r.one()) {
            ++units;
        } else if (!el.is_unit(a) && p != 0 && r.mul(a, p) == 0) {
            ++zerodivisors;
        } else {
            return refuted("neither_unit_nor_zerodivisor", json{{"element", r.format(a)}});
        }
    }
    return structural(true, "unit_or_zerodivisor", json{{"units", units}, {"zerodivisors", zerodivisors}});
}

ConditionResult decide_pseudo_arithmetical(const RingAnalysis& analysis, const ConditionResult& arithmetical,
                                           const ConditionResult& gaussian, const ClassifierConfig& config) {
    if (arithmetical.holds()) {
        return structural(true, "all_ideals_locally_principal", json{{"arithmetical", to_json(arithmetical.certificate)}});
    }
    GaussianContext ctx(analysis.lattice_ptr(), analysis.elements_ptr());
    ctx.set_ring_certified(gaussian.holds());
    const IdealLattice& lat = analysis.lattice();
    const std::size_t n = analysis.ring().order();
    std::size_t non_lp = 0, candidates = 0, refuted_count = 0, bounded_count = 0;
    std::optional<unsigned> bound;
    for (IdealId id = 0; id < lat.size(); ++id) {
        auto where = analysis.non_principal_at(id);
        if (!where) continue;
        ++non_lp;
        for (auto& layout : generator_layouts(lat[id].generators(), n)) {
            ++candidates;
            RingPoly f(analysis.ring_ptr(), layout);
            GaussianVerdict v = certify_gaussian(ctx, f, config.limits);
            if (v.status == GaussianStatus::certified) {
                json why{{"reason", to_string(*v.reason)}};
                if (*v.reason == GaussianReason::ring_certified_gaussian) why["ring"] = to_json(gaussian.certificate);
                if (*v.reason == GaussianReason::local_square_zero_maximal) why["maximal"] = ideal_json(lat[lat.maximal().front()]);
                const auto& local = analysis.localizations()[*where];
                json w{{"f", poly_json(f)},
                       {"content", ideal_json(lat[id])},
                       {"maximal", ideal_json(local.localization.maximal)},
                       {"gaussian", std::move(why)}};
                ConditionResult r = refuted("gaussian_polynomial_with_non_locally_principal_content", w);
                return r;
            }
            if (v.status == GaussianStatus::refuted) {
                ++refuted_count;
            } else {
                ++bounded_count;
                bound = std::min(bound.value_or(*v.bound), v.bound.value_or(0));
            }
        }
    }
    if (non_lp == 0) throw ConsistencyError("non-arithmetical ring " + analysis.ring().name() + " with all ideals locally principal");
    const unsigned b = bound.value_or(config.limits.degree_bound);
    return bounded("bounded_candidate_search", b,
                   json{{"non_locally_principal_ideals", non_lp},
                        {"candidates", candidates},
                        {"refuted", refuted_count},
                        {"undecided", bounded_count},
                        {"degree_bound", b}});
}

ConditionResult decide_zero_locally_irreducible(const RingAnalysis& analysis) {
    json atoms = json::array();
    for (const auto& local : analysis.localizations()) {
        const IdealLattice& lat = *local.lattice;
        if (auto pair = reducing_pair(lat, lat.zero_id())) {
            const RingHom& proj = local.localization.projection;
            return refuted("reducible_zero_in_localization",
                           json{{"maximal", ideal_json(local.localization.maximal)},
                                {"left", ideal_json(preimage_ideal(analysis.ring_ptr(), proj, lat[pair->first].members()))},
                                {"right", ideal_json(preimage_ideal(analysis.ring_ptr(), proj, lat[pair->second].members()))}});
        }
        atoms.push_back(lat.atoms().size());
    }
    return structural(true, "unique_minimal_ideal_in_each_localization",
                      json{{"maximal_ideals", maximal_ideals_json(analysis)}, {"atoms", std::move(atoms)}});
}

void check_implication_chain(const ClassificationReport& report) {
    auto fail = [&](const char* what) {
        throw ConsistencyError("implication " + std::string(what) + " fails for " + report.ring_name);
    };
    auto yes = [&](Condition c) { return report[c].verdict == Verdict::yes; };
    auto no = [&](Condition c) { return report[c].verdict == Verdict::no; };
    if (yes(Condition::semihereditary) && no(Condition::weak_dimension_zero)) fail("semihereditary => weak dimension 0");
    if (yes(Condition::weak_dimension_zero) && no(Condition::arithmetical)) fail("weak dimension 0 => arithmetical");
    if (yes(Condition::arithmetical) && !yes(Condition::gaussian)) fail("arithmetical => Gaussian");
    if (yes(Condition::gaussian) && no(Condition::pruefer)) fail("Gaussian => Pruefer");
    if (yes(Condition::arithmetical) && !yes(Condition::pseudo_arithmetical)) fail("arithmetical => pseudo-arithmetical");
}

ClassificationReport classify(const RingPtr& ring, const ClassifierConfig& config) {
    return classify(RingAnalysis(ring, config.lattice), config);
}

ClassificationReport classify(const RingAnalysis& analysis, const ClassifierConfig& config) {
    ClassificationReport report;
    const FiniteRing& ring = analysis.ring();
    report.ring_name = ring.name();
    report.order = ring.order();
    if (ring.spec()) report.spec = render_spec(ring.spec());

    report[Condition::reduced] = timed([&] { return decide_reduced(analysis); });
    report[Condition::von_neumann_regular] = timed([&] { return decide_von_neumann_regular(analysis); });
    const ConditionResult& vn = report[Condition::von_neumann_regular];
    report[Condition::weak_dimension_zero] = timed([&] { return decide_weak_dimension(analysis, vn); });
    report[Condition::semihereditary] = timed([&] { return decide_semihereditary(analysis, vn); });
    report[Condition::arithmetical] = timed([&] { return decide_arithmetical(analysis); });
    const ConditionResult& ar = report[Condition::arithmetical];
    report[Condition::gaussian] = timed([&] { return decide_gaussian(analysis, ar, config); });
    report[Condition::pruefer] = timed([&] { return decide_pruefer(analysis); });
    report[Condition::total_quotient_ring] = timed([&] { return decide_total_quotient_ring(analysis); });
    report[Condition::pseudo_arithmetical] =
        timed([&] { return decide_pseudo_arithmetical(analysis, ar, report[Condition::gaussian], config); });
    report[Condition::zero_locally_irreducible] = timed([&] { return decide_zero_locally_irreducible(analysis); });
    check_implication_chain(report);
    return report;
}

bool is_reduced(const RingPtr& ring) { return decide_reduced(RingAnalysis(ring)).holds(); }

bool is_vn_regular(const RingPtr& ring) { return decide_von_neumann_regular(RingAnalysis(ring)).holds(); }

WeakDimension weak_dim_class(const RingPtr& ring) {
    return is_vn_regular(ring) ? WeakDimension::zero : WeakDimension::infinite;
}

bool is_semihereditary(const RingPtr& ring) {
    RingAnalysis a(ring);
    return decide_semihereditary(a, decide_von_neumann_regular(a)).holds();
}

bool is_arithmetical(const RingPtr& ring) { return decide_arithmetical(RingAnalysis(ring)).holds(); }

bool is_pruefer_ring(const RingPtr& ring) { return decide_pruefer(RingAnalysis(ring)).holds(); }

bool is_total_quotient_ring(const RingPtr& ring) { return decide_total_quotient_ring(RingAnalysis(ring)).holds(); }

ConditionResult is_gaussian_ring(const RingPtr& ring, const ClassifierConfig& config) {
    RingAnalysis a(ring, config.lattice);
    return decide_gaussian(a, decide_arithmetical(a), config);
}

ConditionResult is_pseudo_arithmetical(const RingPtr& ring, const ClassifierConfig& config) {
    RingAnalysis a(ring, config.lattice);
    ConditionResult ar = decide_arithmetical(a);
    return decide_pseudo_arithmetical(a, ar, decide_gaussian(a, ar, config), config);
}

}  // namespace pruefer
