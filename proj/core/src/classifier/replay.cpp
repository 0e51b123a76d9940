#include "pruefer/classifier/replay.hpp"

#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ring_core/constructions.hpp"

namespace pruefer {

using nlohmann::json;

namespace {

using Set = std::vector<bool>;

struct Checker {
    RingPtr ring;
    ReplayOptions options;
    ReplayResult& out;

    const FiniteRing& r() const { return *ring; }
    std::size_t n() const { return ring->order(); }
    bool small() const { return n() <= options.exhaustive_limit; }

    void expect(bool ok, const std::string& what) {
        ++out.checked;
        if (!ok) out.failures.push_back(ring->name() + ": " + what);
    }
    void skip() { ++out.skipped; }

    Elem parse(const json& literal) { return r().parse(literal.get<std::string>()); }

    // Ideal generated by `gens`: all multiples, then sums until nothing changes.
    Set closure(const std::vector<Elem>& gens, const Set* base = nullptr) {
        Set in(n(), false);
        std::vector<Elem> list;
        auto add = [&](Elem x) {
            if (!in[x]) {
                in[x] = true;
                list.push_back(x);
            }
        };
        add(0);
        if (base) {
            for (Elem x = 0; x < n(); ++x) {
                if ((*base)[x]) add(x);
            }
        }
        for (Elem g : gens) {
            for (Elem s = 0; s < n(); ++s) add(r().mul(s, g));
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) add(r().add(list[i], list[j]));
        }
        return in;
    }

    Set ideal_of(const json& ideal) {
        std::vector<Elem> gens;
        for (const auto& g : ideal.at("generators")) gens.push_back(parse(g));
        Set s = closure(gens);
        std::size_t size = 0;
        for (bool b : s) size += b;
        expect(size == ideal.at("order").get<std::size_t>(), "ideal " + ideal.at("generators").dump() + " has the stated order");
        return s;
    }

    static bool subset(const Set& a, const Set& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] && !b[i]) return false;
        }
        return true;
    }

    bool is_unit(Elem a) {
        for (Elem x = 0; x < n(); ++x) {
            if (r().mul(a, x) == r().one()) return true;
        }
        return false;
    }

    bool is_full(const Set& s) {
        for (bool b : s) {
            if (!b) return false;
        }
        return true;
    }

    bool maximal(const Set& m) {
        if (is_full(m)) return false;
        for (Elem x = 0; x < n(); ++x) {
            if (!m[x] && !is_full(closure({x}, &m))) return false;
        }
        return true;
    }

    // {r : s·r = 0 for some s outside m}
    Set kernel(const Set& m) {
        Set k(n(), false);
        for (Elem x = 0; x < n(); ++x) {
            for (Elem s = 0; s < n() && !k[x]; ++s) {
                if (!m[s] && r().mul(s, x) == 0) k[x] = true;
            }
        }
        return k;
    }

    Set checked_maximal(const json& ideal) {
        Set m = ideal_of(ideal);
        expect(maximal(m), "ideal " + ideal.at("generators").dump() + " is maximal");
        return m;
    }

    // Listed maximal ideals are maximal and cover every non-unit; by prime
    // avoidance no maximal ideal is then missing.
    std::vector<Set> maximal_list(const json& list) {
        std::vector<Set> out;
        for (const auto& m : list) out.push_back(checked_maximal(m));
        Set covered(n(), false);
        for (const auto& m : out) {
            for (Elem x = 0; x < n(); ++x) covered[x] = covered[x] || m[x];
        }
        bool complete = true;
        for (Elem x = 0; x < n() && complete; ++x) complete = covered[x] || is_unit(x);
        expect(complete, "maximal ideals cover every non-unit");
        return out;
    }

    // Whether (I + K)/K is principal in R/K.
    bool principal_mod(const Set& ideal, const Set& k) {
        Set target = ideal;
        for (Elem x = 0; x < n(); ++x) target[x] = target[x] || k[x];
        target = closure({}, &target);
        for (Elem c = 0; c < n(); ++c) {
            if (ideal[c] && closure({c}, &k) == target) return true;
        }
        return false;
    }

    Set content(const std::vector<Elem>& f) { return closure(f); }

    std::vector<Elem> poly(const json& coeffs) {
        std::vector<Elem> out;
        for (const auto& c : coeffs) out.push_back(parse(c));
        return out;
    }

    std::vector<Elem> product_gens(const Set& a, const Set& b) {
        std::vector<Elem> gens;
        for (Elem x = 0; x < n(); ++x) {
            if (!a[x]) continue;
            for (Elem y = 0; y < n(); ++y) {
                if (b[y]) gens.push_back(r().mul(x, y));
            }
        }
        return gens;
    }

    void local_square_zero(const json& maximal) {
        Set m = checked_maximal(maximal);
        bool local = true, square_zero = true;
        for (Elem x = 0; x < n(); ++x) local = local && (m[x] || is_unit(x));
        for (Elem x = 0; x < n() && square_zero; ++x) {
            for (Elem y = 0; y < n() && square_zero; ++y) {
                if (m[x] && m[y]) square_zero = r().mul(x, y) == 0;
            }
        }
        expect(local, "ring is local");
        expect(square_zero, "maximal ideal squares to zero");
    }

    void not_multiplicative(const json& w) {
        auto f = poly(w.at("f"));
        auto g = poly(w.at("g"));
        std::vector<Elem> fg(f.empty() || g.empty() ? 0 : f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) fg[i + j] = r().add(fg[i + j], r().mul(f[i], g[j]));
        }
        Set cf = content(f), cg = content(g);
        expect(content(fg) != closure(product_gens(cf, cg)), "c(fg) differs from c(f)c(g)");
    }

    void not_locally_principal(const json& w) {
        Set ideal = ideal_of(w.at("ideal"));
        Set m = checked_maximal(w.at("maximal"));
        expect(!principal_mod(ideal, kernel(m)), "ideal is not principal in the localization");
    }

    void replay(Condition c, const ConditionResult& res);
    void gaussian_yes(const Certificate& cert);
};

void Checker::gaussian_yes(const Certificate& cert) {
    const json& p = cert.payload;
    if (cert.rule == "arithmetical") {
        ConditionResult a;
        a.verdict = Verdict::yes;
        a.certificate = certificate_from_json(p.at("arithmetical"));
        replay(Condition::arithmetical, a);
    } else if (cert.rule == "square_zero_maximal") {
        local_square_zero(p.at("maximal"));
    } else if (cert.rule == "trivial_extension") {
        expect(r().kind() == RingKind::trivial_ext, "ring was built as a trivial extension");
        if (r().kind() != RingKind::trivial_ext) return;
        const RingPtr& base = r().provenance().left;
        const ModulePtr& module = r().provenance().module;
        Checker sub{base, options, out};
        Set m = sub.checked_maximal(p.at("base_maximal"));
        bool local = true, annihilated = true;
        for (Elem x = 0; x < base->order(); ++x) local = local && (m[x] || sub.is_unit(x));
        for (Elem x = 0; x < base->order(); ++x) {
            for (Elem e = 0; e < module->order() && m[x]; ++e) annihilated = annihilated && module->act(x, e) == 0;
        }
        sub.expect(local, "base ring is local");
        expect(module->order() > 1, "module is nonzero");
        expect(annihilated, "maximal ideal of the base annihilates the module");
        ConditionResult g;
        g.verdict = Verdict::yes;
        g.certificate = certificate_from_json(p.at("base_certificate"));
        sub.replay(Condition::gaussian, g);
    } else if (cert.rule == "decomposition") {
        std::vector<RingPtr> factors;
        if (p.at("via") == "product") {
            expect(r().kind() == RingKind::product, "ring was built as a product");
            if (r().kind() != RingKind::product) return;
            factors = {r().provenance().left, r().provenance().right};
        } else {
            auto maximals = maximal_list(p.at("maximal_ideals"));
            if (!small()) return skip();
            for (const auto& m : maximals) {
                Set k = kernel(m);
                ElementSet bits(n());
                for (Elem x = 0; x < n(); ++x) {
                    if (k[x]) bits.set(x);
                }
                factors.push_back(make_quotient(ring, ideal_from_members(ring, bits)).ring);
            }
        }
        const json& parts = p.at("factors");
        expect(parts.size() == factors.size(), "one certificate per factor");
        std::size_t total = 1;
        for (const auto& f : factors) total *= f->order();
        expect(total == n(), "factor orders multiply to the ring order");
        for (std::size_t i = 0; i < factors.size() && i < parts.size(); ++i) {
            Certificate fc = certificate_from_json(parts[i].at("certificate"));
            if (fc.kind == CertificateKind::bounded) continue;
            ConditionResult g;
            g.verdict = Verdict::yes;
            g.certificate = fc;
            Checker{factors[i], options, out}.replay(Condition::gaussian, g);
        }
    } else {
        expect(false, "unknown Gaussian rule " + cert.rule);
    }
}

void Checker::replay(Condition c, const ConditionResult& res) {
    const Certificate& cert = res.certificate;
    const json& p = cert.payload;
    if (res.verdict == Verdict::bounded_yes) {
        expect(cert.kind == CertificateKind::bounded && res.bound.has_value(), "bounded verdict carries its bound");
        if (p.contains("pairs_tested")) {
            expect(p["pairs_tested"].get<std::uint64_t>() <= p["cap"].get<std::uint64_t>(), "search stayed under the cap");
        }
        return;
    }
    if (res.verdict == Verdict::no) {
        expect(res.witness.has_value() || c == Condition::weak_dimension_zero, "negative verdict carries a witness");
    }
    switch (c) {
        case Condition::reduced:
            if (res.holds()) {
                if (!small()) return skip();
                bool ok = true;
                for (Elem a = 1; a < n() && ok; ++a) ok = r().mul(a, a) != 0;
                expect(ok, "no nonzero element squares to zero");
            } else {
                Elem a = parse(p.at("element"));
                expect(a != 0 && r().pow(a, p.at("exponent").get<unsigned>()) == 0, "witness is a nonzero nilpotent");
            }
            break;
        case Condition::von_neumann_regular:
            if (res.holds()) {
                if (!small()) return skip();
                bool ok = true;
                for (Elem a = 0; a < n() && ok; ++a) {
                    bool found = false;
                    for (Elem x = 0; x < n() && !found; ++x) found = r().mul(r().mul(a, a), x) == a;
                    ok = found;
                }
                expect(ok, "every element has a quasi-inverse");
            } else {
                Elem a = parse(p.at("element"));
                bool none = true;
                for (Elem x = 0; x < n() && none; ++x) none = r().mul(r().mul(a, a), x) != a;
                expect(none, "witness has no quasi-inverse");
            }
            break;
        case Condition::weak_dimension_zero:
            expect(cert.rule == "artinian_dichotomy" && p.at("von_neumann_regular").get<bool>() == res.holds(),
                   "weak dimension follows von Neumann regularity");
            break;
        case Condition::semihereditary:
            if (res.holds()) {
                if (!small()) return skip();
                for (const auto& m : maximal_list(p.at("maximal_ideals"))) expect(kernel(m) == m, "localization is a field");
            } else {
                Set m = checked_maximal(p.at("maximal"));
                expect(kernel(m) != m, "localization is not a field");
            }
            break;
        case Condition::arithmetical:
            if (res.holds()) {
                if (!small()) return skip();
                // Local rings: (a, b) is principal iff one generator divides the other.
                for (const auto& m : maximal_list(p.at("maximal_ideals"))) {
                    Set k = kernel(m);
                    std::vector<Set> multiples(n());
                    for (Elem a = 0; a < n(); ++a) multiples[a] = closure({a}, &k);
                    bool ok = true;
                    for (Elem a = 0; a < n() && ok; ++a) {
                        for (Elem b = a + 1; b < n() && ok; ++b) ok = multiples[b][a] || multiples[a][b];
                    }
                    expect(ok, "every two-generated ideal is locally principal");
                }
            } else {
                not_locally_principal(p);
            }
            break;
        case Condition::gaussian:
            if (res.holds()) {
                gaussian_yes(cert);
            } else {
                not_multiplicative(*res.witness);
            }
            break;
        case Condition::pruefer:
            if (res.holds()) {
                if (!small()) return skip();
                // A regular ideal contains a unit, so it is R and R·R = R.
                bool unit_listed = false;
                for (const auto& entry : p.at("regular_ideals")) {
                    Set i = ideal_of(entry.at("ideal"));
                    Set j = ideal_of(entry.at("inverse"));
                    Set prod = closure(product_gens(i, j));
                    bool has_unit = false;
                    for (Elem x = 0; x < n() && !has_unit; ++x) has_unit = prod[x] && is_unit(x);
                    expect(has_unit, "I times its inverse contains a regular element");
                    unit_listed = unit_listed || is_full(i);
                }
                expect(unit_listed, "the unit ideal is among the regular ideals");
            } else {
                Set i = ideal_of(p.at("ideal"));
                expect(false, "finite ring reported with a non-invertible regular ideal");
            }
            break;
        case Condition::total_quotient_ring:
            if (res.holds()) {
                if (!small()) return skip();
                std::size_t units = 0, zd = 0;
                for (Elem a = 0; a < n(); ++a) {
                    bool unit = false, zero_div = false;
                    for (Elem x = 0; x < n(); ++x) {
                        unit = unit || r().mul(a, x) == r().one();
                        zero_div = zero_div || (x != 0 && r().mul(a, x) == 0);
                    }
                    units += unit;
                    zd += zero_div && !unit;
                }
                expect(units == p.at("units").get<std::size_t>() && zd == p.at("zerodivisors").get<std::size_t>() &&
                           units + zd == n(),
                       "every element is a unit or a zerodivisor");
            } else {
                expect(false, "finite ring reported with an element that is neither unit nor zerodivisor");
            }
            break;
        case Condition::pseudo_arithmetical:
            if (res.holds()) {
                ConditionResult a;
                a.verdict = Verdict::yes;
                a.certificate = certificate_from_json(p.at("arithmetical"));
                replay(Condition::arithmetical, a);
            } else {
                const json& w = *res.witness;
                auto f = poly(w.at("f"));
                Set content_set = ideal_of(w.at("content"));
                expect(content(f) == content_set, "content of f is the stated ideal");
                Set m = checked_maximal(w.at("maximal"));
                expect(!principal_mod(content_set, kernel(m)), "content is not locally principal");
                const json& why = w.at("gaussian");
                const std::string reason = why.at("reason");
                if (reason == "unit_content") {
                    expect(is_full(content_set), "f has unit content");
                } else if (reason == "local_square_zero_maximal") {
                    local_square_zero(why.at("maximal"));
                } else {
                    ConditionResult g;
                    g.verdict = Verdict::yes;
                    g.certificate = certificate_from_json(why.at("ring"));
                    replay(Condition::gaussian, g);
                }
            }
            break;
        case Condition::zero_locally_irreducible:
            if (res.holds()) {
                if (!small()) return skip();
                for (const auto& m : maximal_list(p.at("maximal_ideals"))) {
                    Set k = kernel(m);
                    // Minimal ideals strictly above the kernel are of the form Ra + K.
                    std::vector<Set> candidates;
                    for (Elem a = 0; a < n(); ++a) {
                        if (!k[a]) candidates.push_back(closure({a}, &k));
                    }
                    std::vector<Set> minimal;
                    for (const auto& c : candidates) {
                        bool is_min = true;
                        for (const auto& d : candidates) {
                            if (d != c && subset(d, c)) {
                                is_min = false;
                                break;
                            }
                        }
                        bool seen = false;
                        for (const auto& x : minimal) seen = seen || x == c;
                        if (is_min && !seen) minimal.push_back(c);
                    }
                    // A field has one candidate, the whole ring, which is not a proper ideal.
                    const bool field = kernel(m) == m;
                    expect(field || minimal.size() == 1, "localization has a unique minimal nonzero ideal");
                }
            } else {
                Set m = checked_maximal(p.at("maximal"));
                Set k = kernel(m);
                Set left = ideal_of(p.at("left"));
                Set right = ideal_of(p.at("right"));
                Set meet(n(), false);
                for (Elem x = 0; x < n(); ++x) meet[x] = left[x] && right[x];
                expect(subset(k, left) && subset(k, right) && left != k && right != k && meet == k,
                       "two ideals strictly above zero meet in zero in the localization");
            }
            break;
    }
}

}  // namespace

ReplayResult replay_certificate(const RingPtr& ring, Condition condition, const ConditionResult& result,
                                ReplayOptions options) {
    ReplayResult out;
    try {
        Checker{ring, options, out}.replay(condition, result);
    } catch (const std::exception& e) {
        out.failures.push_back(ring->name() + ": " + key(condition) + " certificate is malformed: " + e.what());
    }
    return out;
}

ReplayResult replay_report(const RingPtr& ring, const ClassificationReport& report, ReplayOptions options) {
    ReplayResult out;
    for (Condition c : kConditions) {
        ReplayResult one = replay_certificate(ring, c, report[c], options);
        for (auto& f : one.failures) out.failures.push_back(std::string(key(c)) + ": " + f);
        out.checked += one.checked;
        out.skipped += one.skipped;
    }
    auto cross = [&](bool ok, const char* what) {
        ++out.checked;
        if (!ok) out.failures.push_back(ring->name() + ": " + what);
    };
    cross(report[Condition::weak_dimension_zero].verdict == report[Condition::von_neumann_regular].verdict,
          "weak dimension 0 agrees with von Neumann regularity");
    cross(report[Condition::semihereditary].verdict == report[Condition::von_neumann_regular].verdict,
          "semihereditary agrees with von Neumann regularity");
    cross(report.order == ring->order(), "report order matches the ring");
    return out;
}

}  // namespace pruefer
