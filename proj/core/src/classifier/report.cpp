#include "pruefer/classifier/report.hpp"

#include <cstdio>

#include "pruefer/errors.hpp"

namespace pruefer {

using nlohmann::json;

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "bounded_yes";
    }
}

const char* to_string(CertificateKind kind) noexcept {
    switch (kind) {
        case CertificateKind::structural: return "structural";
        case CertificateKind::witness: return "witness";
        default: return "bounded";
    }
}

const char* key(Condition condition) noexcept {
    switch (condition) {
        case Condition::semihereditary: return "semihereditary";
        case Condition::weak_dimension_zero: return "weak_dimension";
        case Condition::arithmetical: return "arithmetical";
        case Condition::gaussian: return "gaussian";
        case Condition::pruefer: return "pruefer";
        case Condition::total_quotient_ring: return "total_quotient_ring";
        case Condition::pseudo_arithmetical: return "pseudo_arithmetical";
        case Condition::zero_locally_irreducible: return "zero_locally_irreducible";
        case Condition::reduced: return "reduced";
        default: return "von_neumann_regular";
    }
}

std::optional<Condition> condition_from_key(std::string_view k) noexcept {
    for (Condition c : kConditions) {
        if (k == key(c)) return c;
    }
    return std::nullopt;
}

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "yes" || s == "0") return Verdict::yes;
    if (s == "no" || s == "infinite") return Verdict::no;
    if (s == "bounded_yes") return Verdict::bounded_yes;
    throw ArgumentError("unknown verdict '" + s + "'");
}

CertificateKind kind_from_string(const std::string& s) {
    if (s == "structural") return CertificateKind::structural;
    if (s == "witness") return CertificateKind::witness;
    if (s == "bounded") return CertificateKind::bounded;
    throw ArgumentError("unknown certificate kind '" + s + "'");
}

std::string short_witness(const json& w) {
    if (w.contains("f") && w.contains("g")) return "f = " + w["f"].dump() + ", g = " + w["g"].dump();
    if (w.contains("f")) return "f = " + w["f"].dump();
    if (w.contains("ideal")) return "ideal " + w["ideal"]["generators"].dump();
    if (w.contains("element")) return "element " + w["element"].get<std::string>();
    if (w.contains("left")) return "zero = " + w["left"]["generators"].dump() + " meet " + w["right"]["generators"].dump();
    if (w.contains("maximal")) return "at " + w["maximal"]["generators"].dump();
    return w.dump();
}

}  // namespace

std::string verdict_text(Condition condition, const ConditionResult& result) {
    if (condition == Condition::weak_dimension_zero) return result.holds() ? "0" : "infinite";
    return to_string(result.verdict);
}

json to_json(const Certificate& c) {
    return json{{"kind", to_string(c.kind)}, {"rule", c.rule}, {"payload", c.payload}};
}

Certificate certificate_from_json(const json& j) {
    return Certificate{kind_from_string(j.at("kind").get<std::string>()), j.at("rule").get<std::string>(),
                       j.value("payload", json::object())};
}

json to_json(const ClassificationReport& report, ReportOptions options) {
    json out;
    out["ring"] = json{{"name", report.ring_name}, {"order", report.order}, {"spec", report.spec}};
    for (Condition c : kConditions) {
        const ConditionResult& r = report[c];
        json entry{{"verdict", verdict_text(c, r)}, {"certificate", to_json(r.certificate)}};
        if (r.witness) entry["witness"] = *r.witness;
        if (r.bound) entry["bound"] = *r.bound;
        if (options.timings) entry["millis"] = r.millis;
        out[key(c)] = std::move(entry);
    }
    return out;
}

ClassificationReport report_from_json(const json& j) {
    ClassificationReport report;
    const json& ring = j.at("ring");
    report.ring_name = ring.at("name").get<std::string>();
    report.order = ring.at("order").get<std::size_t>();
    report.spec = ring.value("spec", std::string());
    for (Condition c : kConditions) {
        const json& e = j.at(key(c));
        ConditionResult& r = report[c];
        r.verdict = verdict_from_string(e.at("verdict").get<std::string>());
        r.certificate = certificate_from_json(e.at("certificate"));
        if (e.contains("witness")) r.witness = e["witness"];
        if (e.contains("bound")) r.bound = e["bound"].get<unsigned>();
        r.millis = e.value("millis", 0.0);
    }
    return report;
}

std::string render_markdown(const ClassificationReport& report, ReportOptions options) {
    std::string out = "## " + report.ring_name + " (order " + std::to_string(report.order) + ")\n\n";
    out += options.timings ? "| condition | verdict | rule | witness / bound | ms |\n|---|---|---|---|---|\n"
                           : "| condition | verdict | rule | witness / bound |\n|---|---|---|---|\n";
    for (Condition c : kConditions) {
        const ConditionResult& r = report[c];
        std::string detail;
        if (r.witness) detail = short_witness(*r.witness);
        if (r.bound) detail = "D = " + std::to_string(*r.bound);
        for (char& ch : detail) {
            if (ch == '|') ch = '/';
        }
        out += "| " + std::string(key(c)) + " | " + verdict_text(c, r) + " | " + r.certificate.rule + " | " + detail + " |";
        if (options.timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.1f |", r.millis);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace pruefer
