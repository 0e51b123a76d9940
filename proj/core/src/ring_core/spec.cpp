#include "pruefer/ring_core/spec.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ring_core/constructions.hpp"

namespace pruefer {

RingKind RingSpec::kind() const noexcept {
    switch (params.index()) {
        case 0: return RingKind::zmod;
        case 1: return RingKind::gf;
        case 2: return RingKind::product;
        case 3: return RingKind::quotient;
        default: return RingKind::trivial_ext;
    }
}

const RingSpecPtr& ModuleSpec::ring() const {
    if (const auto* f = std::get_if<FreeParams>(&params)) return f->ring;
    if (const auto* q = std::get_if<QuotModuleParams>(&params)) return q->ring;
    return std::get<SumParams>(params).summands.front()->ring();
}

RingSpecPtr SpecDocument::target(std::string_view name) const {
    if (name.empty()) {
        if (ring_order.empty()) throw ArgumentError("spec declares no ring");
        return rings.find(ring_order.back())->second;
    }
    auto it = rings.find(name);
    if (it == rings.end()) throw ArgumentError("no ring named '" + std::string(name) + "'");
    return it->second;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    SpecDocument run() {
        for (;;) {
            skip_blank(true);
            if (at_end()) break;
            if (peek() == ';') {
                ++pos_;
                continue;
            }
            statement();
            skip_blank(false);
            if (at_end()) break;
            if (peek() == ';' || peek() == '\n') {
                ++pos_;
                continue;
            }
            fail("expected end of statement");
        }
        return std::move(doc_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    // Spaces and comments; newlines only when inside parentheses or when asked.
    void skip_blank(bool newlines) {
        while (!at_end()) {
            char c = text_[pos_];
            if (c == '#') {
                while (!at_end() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || (c == '\n' && (newlines || depth_ > 0))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(message, line, col);
    }

    void expect(char c) {
        skip_blank(false);
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
        if (c == '(') ++depth_;
        if (c == ')') --depth_;
    }

    bool accept(char c) {
        skip_blank(false);
        if (peek() != c) return false;
        expect(c);
        return true;
    }

    std::string identifier() {
        skip_blank(false);
        if (!is_ident_start(peek())) fail("expected identifier");
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t integer() {
        skip_blank(false);
        std::size_t start = pos_;
        if (peek() == '-') fail("expected non-negative integer");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        if (ec != std::errc()) fail("expected integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        (void)start;
        return value;
    }

    void keyword_arg(std::string_view key) {
        std::size_t at = (skip_blank(false), pos_);
        if (identifier() != key) fail_at("expected '" + std::string(key) + "='", at);
        expect('=');
    }

    std::vector<Literal> literal_list() {
        skip_blank(false);
        std::size_t start = pos_;
        if (peek() != '[') fail("expected '['");
        int nesting = 0;
        while (!at_end()) {
            char c = text_[pos_++];
            if (c == '[' || c == '(') ++nesting;
            if (c == ']' || c == ')') --nesting;
            if (nesting == 0) break;
            if (c == '#' || (c == '\n' && depth_ == 0)) fail_at("unterminated list", start);
        }
        if (nesting != 0) fail_at("unterminated list", start);
        try {
            return parse_literal_list(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            fail_at(std::string("bad element literal: ") + e.what(), start);
        }
    }

    void statement() {
        std::size_t at = pos_;
        std::string kind = identifier();
        std::string name = identifier();
        expect('=');
        if (kind == "ring") {
            declare(at, name);
            auto spec = ring_expr(name);
            doc_.rings.emplace(name, spec);
            doc_.ring_order.push_back(name);
        } else if (kind == "module") {
            declare(at, name);
            doc_.modules.emplace(name, module_expr(name));
        } else if (kind == "poly") {
            doc_.polys.push_back(PolySpec{name, literal_list()});
        } else {
            fail_at("unknown statement '" + kind + "'", at);
        }
    }

    void declare(std::size_t at, const std::string& name) {
        if (doc_.rings.count(name) || doc_.modules.count(name)) fail_at("'" + name + "' is already declared", at);
    }

    RingSpecPtr ring_ref() {
        skip_blank(false);
        std::size_t at = pos_;
        std::string id = identifier();
        skip_blank(false);
        if (peek() == '(') {
            pos_ = at;
            return ring_expr({});
        }
        auto it = doc_.rings.find(id);
        if (it == doc_.rings.end()) fail_at("unknown ring '" + id + "'", at);
        return it->second;
    }

    ModuleSpecPtr module_ref() {
        skip_blank(false);
        std::size_t at = pos_;
        std::string id = identifier();
        skip_blank(false);
        if (peek() == '(') {
            pos_ = at;
            return module_expr({});
        }
        auto it = doc_.modules.find(id);
        if (it == doc_.modules.end()) fail_at("unknown module '" + id + "'", at);
        return it->second;
    }

    RingSpecPtr ring_expr(std::string name) {
        skip_blank(false);
        std::size_t at = pos_;
        std::string kind = identifier();
        auto spec = std::make_shared<RingSpec>();
        spec->name = std::move(name);
        expect('(');
        if (kind == "zmod") {
            std::size_t arg = (skip_blank(false), pos_);
            std::uint64_t n = integer();
            if (n < 2) fail_at("zmod modulus must be at least 2", arg);
            if (n > kMaxOrder) fail_at("zmod modulus exceeds the supported order", arg);
            spec->params = ZmodParams{n};
        } else if (kind == "gf") {
            std::size_t arg = (skip_blank(false), pos_);
            std::uint64_t p = integer();
            if (!is_prime(p)) fail_at("gf characteristic " + std::to_string(p) + " is not prime", arg);
            if (p > 4096) fail_at("gf characteristic exceeds the supported order", arg);
            expect(',');
            std::size_t karg = (skip_blank(false), pos_);
            std::uint64_t k = integer();
            if (k < 1 || k > 12) fail_at("gf degree must be between 1 and 12", karg);
            GfParams gf{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), {}};
            if (accept(',')) {
                keyword_arg("poly");
                std::size_t parg = (skip_blank(false), pos_);
                for (const Literal& c : literal_list()) {
                    if (!c.is_integer() || c.integer() < 0 || static_cast<std::uint64_t>(c.integer()) >= p) {
                        fail_at("gf polynomial coefficients must lie in 0.." + std::to_string(p - 1), parg);
                    }
                    gf.poly.push_back(static_cast<std::uint32_t>(c.integer()));
                }
                if (gf.poly.size() != k + 1 || gf.poly.back() == 0) {
                    fail_at("gf polynomial must have exactly " + std::to_string(k + 1) +
                                " coefficients with nonzero leading term",
                            parg);
                }
                if (!is_irreducible_mod_p(gf.poly, gf.prime)) fail_at("gf polynomial is reducible", parg);
            } else {
                gf.poly = first_irreducible(gf.prime, gf.degree);
            }
            spec->params = std::move(gf);
        } else if (kind == "product") {
            ProductParams pp;
            pp.left = ring_ref();
            expect(',');
            pp.right = ring_ref();
            spec->params = std::move(pp);
        } else if (kind == "quotient") {
            QuotientParams qp;
            qp.base = ring_ref();
            expect(',');
            keyword_arg("gens");
            qp.gens = literal_list();
            spec->params = std::move(qp);
        } else if (kind == "trivext") {
            TrivextParams tp;
            tp.base = ring_ref();
            expect(',');
            std::size_t marg = (skip_blank(false), pos_);
            tp.module = module_ref();
            if (tp.module->ring() != tp.base) fail_at("module is not over the base ring", marg);
            spec->params = std::move(tp);
        } else {
            fail_at("unknown ring kind '" + kind + "'", at);
        }
        expect(')');
        return spec;
    }

    ModuleSpecPtr module_expr(std::string name) {
        skip_blank(false);
        std::size_t at = pos_;
        std::string kind = identifier();
        auto spec = std::make_shared<ModuleSpec>();
        spec->name = std::move(name);
        expect('(');
        if (kind == "free") {
            FreeParams fp;
            fp.ring = ring_ref();
            expect(',');
            std::size_t arg = (skip_blank(false), pos_);
            fp.rank = integer();
            if (fp.rank < 1) fail_at("free module rank must be positive", arg);
            spec->params = std::move(fp);
        } else if (kind == "quot_module") {
            QuotModuleParams qp;
            qp.ring = ring_ref();
            expect(',');
            keyword_arg("gens");
            qp.gens = literal_list();
            spec->params = std::move(qp);
        } else if (kind == "sum") {
            SumParams sp;
            do {
                std::size_t arg = (skip_blank(false), pos_);
                sp.summands.push_back(module_ref());
                if (sp.summands.back()->ring() != sp.summands.front()->ring()) {
                    fail_at("summands are over different rings", arg);
                }
            } while (accept(','));
            spec->params = std::move(sp);
        } else {
            fail_at("unknown module kind '" + kind + "'", at);
        }
        expect(')');
        return spec;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    SpecDocument doc_;
};

std::string render_literals(const std::vector<Literal>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += to_string(items[i]);
    }
    return out + "]";
}

class SpecRenderer {
public:
    std::string render(const RingSpecPtr& root) {
        collect_names(root);
        ring(root);
        return out_;
    }

private:
    void collect_names(const RingSpecPtr& spec) {
        if (!spec->name.empty()) used_.insert(spec->name);
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, ProductParams>) {
                    collect_names(p.left);
                    collect_names(p.right);
                } else if constexpr (std::is_same_v<T, QuotientParams>) {
                    collect_names(p.base);
                } else if constexpr (std::is_same_v<T, TrivextParams>) {
                    collect_names(p.base);
                    collect_module_names(p.module);
                }
            },
            spec->params);
    }

    void collect_module_names(const ModuleSpecPtr& spec) {
        if (!spec->name.empty()) used_.insert(spec->name);
        if (const auto* s = std::get_if<SumParams>(&spec->params)) {
            for (const auto& m : s->summands) collect_module_names(m);
        } else {
            collect_names(spec->ring());
        }
    }

    std::string fresh(char prefix) {
        for (;;) {
            std::string candidate = std::string(1, prefix) + std::to_string(++counter_);
            if (used_.insert(candidate).second) return candidate;
        }
    }

    // Distinct nodes may share a name; later ones get a fresh one.
    std::string claim(const std::string& wanted, const void* node, char prefix) {
        if (!wanted.empty()) {
            auto [it, inserted] = owner_.emplace(wanted, node);
            if (inserted || it->second == node) return wanted;
        }
        return fresh(prefix);
    }

    std::string ring(const RingSpecPtr& spec) {
        if (auto it = ring_names_.find(spec.get()); it != ring_names_.end()) return it->second;
        std::string body = std::visit(
            [&](const auto& p) -> std::string {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, ZmodParams>) {
                    return "zmod(" + std::to_string(p.modulus) + ")";
                } else if constexpr (std::is_same_v<T, GfParams>) {
                    std::vector<Literal> coeffs(p.poly.begin(), p.poly.end());
                    return "gf(" + std::to_string(p.prime) + ", " + std::to_string(p.degree) +
                           ", poly=" + render_literals(coeffs) + ")";
                } else if constexpr (std::is_same_v<T, ProductParams>) {
                    std::string l = ring(p.left);
                    std::string r = ring(p.right);
                    return "product(" + l + ", " + r + ")";
                } else if constexpr (std::is_same_v<T, QuotientParams>) {
                    return "quotient(" + ring(p.base) + ", gens=" + render_literals(p.gens) + ")";
                } else {
                    std::string b = ring(p.base);
                    std::string m = module(p.module);
                    return "trivext(" + b + ", " + m + ")";
                }
            },
            spec->params);
        std::string name = claim(spec->name, spec.get(), 'R');
        out_ += "ring " + name + " = " + body + "\n";
        ring_names_.emplace(spec.get(), name);
        return name;
    }

    std::string module(const ModuleSpecPtr& spec) {
        if (auto it = module_names_.find(spec.get()); it != module_names_.end()) return it->second;
        std::string body;
        if (const auto* f = std::get_if<FreeParams>(&spec->params)) {
            body = "free(" + ring(f->ring) + ", " + std::to_string(f->rank) + ")";
        } else if (const auto* q = std::get_if<QuotModuleParams>(&spec->params)) {
            body = "quot_module(" + ring(q->ring) + ", gens=" + render_literals(q->gens) + ")";
        } else {
            const auto& s = std::get<SumParams>(spec->params);
            std::vector<std::string> names;
            for (const auto& m : s.summands) names.push_back(module(m));
            body = "sum(";
            for (std::size_t i = 0; i < names.size(); ++i) body += (i ? ", " : "") + names[i];
            body += ")";
        }
        std::string name = claim(spec->name, spec.get(), 'M');
        out_ += "module " + name + " = " + body + "\n";
        module_names_.emplace(spec.get(), name);
        return name;
    }

    std::string out_;
    std::set<std::string> used_;
    std::map<const RingSpec*, std::string> ring_names_;
    std::map<const ModuleSpec*, std::string> module_names_;
    std::map<std::string, const void*> owner_;
    int counter_ = 0;
};

std::vector<Elem> parse_gens(const FiniteRing& ring, const std::vector<Literal>& gens) {
    std::vector<Elem> out;
    out.reserve(gens.size());
    for (const Literal& g : gens) out.push_back(ring.parse(g));
    return out;
}

}  // namespace

SpecDocument parse_spec_document(std::string_view text) { return SpecParser(text).run(); }

RingSpecPtr parse_ring_spec(std::string_view text) {
    SpecDocument doc = parse_spec_document(text);
    if (doc.ring_order.empty()) throw ParseError("spec declares no ring");
    return doc.target();
}

std::string render_spec(const RingSpecPtr& spec) { return SpecRenderer().render(spec); }

RingPtr RingBuilder::build(const RingSpecPtr& spec) {
    if (auto it = rings_.find(spec.get()); it != rings_.end()) return it->second;
    Label label{spec->name, spec, nullptr};
    RingPtr ring = std::visit(
        [&](const auto& p) -> RingPtr {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ZmodParams>) {
                return make_zmod(p.modulus, label);
            } else if constexpr (std::is_same_v<T, GfParams>) {
                return make_gf(p.prime, p.degree, p.poly, label);
            } else if constexpr (std::is_same_v<T, ProductParams>) {
                return make_product(build(p.left), build(p.right), label);
            } else if constexpr (std::is_same_v<T, QuotientParams>) {
                RingPtr base = build(p.base);
                auto gens = parse_gens(*base, p.gens);
                return make_quotient(base, ideal_generated_by(base, gens), label).ring;
            } else {
                RingPtr base = build(p.base);
                return make_trivial_extension(base, build(p.module), label).ring;
            }
        },
        spec->params);
    rings_.emplace(spec.get(), ring);
    return ring;
}

ModulePtr RingBuilder::build(const ModuleSpecPtr& spec) {
    if (auto it = modules_.find(spec.get()); it != modules_.end()) return it->second;
    Label label{spec->name, nullptr, spec};
    ModulePtr module;
    if (const auto* f = std::get_if<FreeParams>(&spec->params)) {
        module = make_free_module(build(f->ring), f->rank, label);
    } else if (const auto* q = std::get_if<QuotModuleParams>(&spec->params)) {
        RingPtr ring = build(q->ring);
        auto gens = parse_gens(*ring, q->gens);
        module = make_quotient_module(ring, ideal_generated_by(ring, gens), label);
    } else {
        std::vector<ModulePtr> parts;
        for (const auto& m : std::get<SumParams>(spec->params).summands) parts.push_back(build(m));
        module = make_direct_sum(parts, label);
    }
    modules_.emplace(spec.get(), module);
    return module;
}

RingPtr build_ring(const RingSpecPtr& spec) { return RingBuilder().build(spec); }

}  // namespace pruefer
