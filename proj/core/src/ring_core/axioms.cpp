#include "pruefer/ring_core/axioms.hpp"

#include <algorithm>
#include <tuple>

#include "pruefer/ring_core/elements.hpp"

namespace pruefer {

std::optional<std::string> find_ring_axiom_violation(const FiniteRing& r) {
    const Elem n = static_cast<Elem>(r.order());
    auto at = [&](const char* law, Elem a, Elem b, Elem c) {
        return std::string(law) + " fails at (" + r.format(a) + ", " + r.format(b) + ", " + r.format(c) + ")";
    };
    if (n >= 2 && r.one() == r.zero()) return std::string("one equals zero");
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, 0) != a) return at("additive identity", a, 0, 0);
        if (r.mul(a, r.one()) != a) return at("multiplicative identity", a, r.one(), 0);
        if (r.add(a, r.neg(a)) != 0) return at("additive inverse", a, r.neg(a), 0);
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return at("additive commutativity", a, b, 0);
            if (r.mul(a, b) != r.mul(b, a)) return at("multiplicative commutativity", a, b, 0);
            const Elem ab_sum = r.add(a, b);
            const Elem ab_mul = r.mul(a, b);
            for (Elem c = 0; c < n; ++c) {
                if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return at("additive associativity", a, b, c);
                if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c))) return at("multiplicative associativity", a, b, c);
                if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))) return at("distributivity", a, b, c);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> find_module_axiom_violation(const FiniteModule& m) {
    const FiniteRing& r = *m.base();
    const Elem n = static_cast<Elem>(m.order());
    const Elem na = static_cast<Elem>(r.order());
    auto at = [&](const char* law, const std::string& where) { return std::string(law) + " fails at " + where; };
    for (Elem e = 0; e < n; ++e) {
        if (m.add(e, 0) != e) return at("additive identity", m.format(e));
        if (m.add(e, m.neg(e)) != 0) return at("additive inverse", m.format(e));
        if (m.act(r.one(), e) != e) return at("unital action", m.format(e));
        for (Elem f = 0; f < n; ++f) {
            if (m.add(e, f) != m.add(f, e)) return at("commutativity", m.format(e) + ", " + m.format(f));
            for (Elem g = 0; g < n; ++g) {
                if (m.add(m.add(e, f), g) != m.add(e, m.add(f, g))) {
                    return at("associativity", m.format(e) + ", " + m.format(f) + ", " + m.format(g));
                }
            }
            for (Elem a = 0; a < na; ++a) {
                if (m.act(a, m.add(e, f)) != m.add(m.act(a, e), m.act(a, f))) {
                    return at("a(e+f) = ae + af", r.format(a) + ", " + m.format(e) + ", " + m.format(f));
                }
            }
        }
        for (Elem a = 0; a < na; ++a) {
            for (Elem b = 0; b < na; ++b) {
                if (m.act(r.add(a, b), e) != m.add(m.act(a, e), m.act(b, e))) {
                    return at("(a+b)e = ae + be", r.format(a) + ", " + r.format(b) + ", " + m.format(e));
                }
                if (m.act(r.mul(a, b), e) != m.act(a, m.act(b, e))) {
                    return at("(ab)e = a(be)", r.format(a) + ", " + r.format(b) + ", " + m.format(e));
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Per-element data preserved by every isomorphism.
using Signature = std::tuple<std::size_t, bool, bool, bool, bool>;

std::vector<Signature> signatures(const FiniteRing& r) {
    const ElementTable kinds = classify_elements(r);
    std::vector<Signature> out(r.order());
    for (Elem a = 0; a < r.order(); ++a) {
        std::size_t additive_order = 1;
        for (Elem x = a; x != 0; x = r.add(x, a)) ++additive_order;
        Elem sq = r.mul(a, a);
        bool nilpotent = r.pow(a, r.order()) == 0;
        out[a] = {additive_order, kinds.is_unit(a), nilpotent, sq == a, sq == 0};
    }
    return out;
}

class IsoSearch {
public:
    IsoSearch(const RingPtr& s, const RingPtr& t) : s_(s), t_(t), sig_s_(signatures(*s)), sig_t_(signatures(*t)) {}

    std::optional<RingHom> run() {
        choose_generators();
        map_.assign(s_->order(), kNone);
        return assign(0);
    }

private:
    static constexpr Elem kNone = ~Elem{0};

    // Closure of the known part of the map under + and ·. False on conflict.
    bool close(std::vector<Elem>& map, std::vector<Elem>& known) const {
        for (std::size_t i = 0; i < known.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const Elem a = known[i], b = known[j];
                const Elem pairs[2][2] = {{s_->add(a, b), t_->add(map[a], map[b])},
                                          {s_->mul(a, b), t_->mul(map[a], map[b])}};
                for (const auto& pr : pairs) {
                    if (map[pr[0]] == kNone) {
                        map[pr[0]] = pr[1];
                        known.push_back(pr[0]);
                    } else if (map[pr[0]] != pr[1]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void choose_generators() {
        std::vector<Elem> map(s_->order(), kNone);
        // Track closure in the source only, using a dummy identity target.
        ElementSet reached(s_->order());
        auto closure = [&](const std::vector<Elem>& seeds) {
            ElementSet seen(s_->order());
            std::vector<Elem> list;
            for (Elem g : seeds) {
                if (!seen.test(g)) {
                    seen.set(g);
                    list.push_back(g);
                }
            }
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = 0; j <= i; ++j) {
                    for (Elem c : {s_->add(list[i], list[j]), s_->mul(list[i], list[j])}) {
                        if (!seen.test(c)) {
                            seen.set(c);
                            list.push_back(c);
                        }
                    }
                }
            }
            return seen;
        };
        std::vector<Elem> seeds{0, s_->one()};
        reached = closure(seeds);
        while (!reached.all()) {
            Elem g = static_cast<Elem>((~reached).find_first());
            gens_.push_back(g);
            seeds.push_back(g);
            reached = closure(seeds);
        }
    }

    std::optional<RingHom> assign(std::size_t depth) {
        if (depth == gens_.size()) {
            std::vector<Elem> map(s_->order(), kNone);
            std::vector<Elem> known;
            auto seed = [&](Elem a, Elem b) {
                if (map[a] == kNone) {
                    map[a] = b;
                    known.push_back(a);
                }
            };
            seed(0, 0);
            seed(s_->one(), t_->one());
            for (std::size_t i = 0; i < gens_.size(); ++i) seed(gens_[i], images_[i]);
            if (!close(map, known) || known.size() != s_->order()) return std::nullopt;
            ElementSet hit(t_->order());
            for (Elem v : map) hit.set(v);
            if (!hit.all()) return std::nullopt;
            return RingHom(s_, t_, std::move(map));
        }
        for (Elem y = 0; y < t_->order(); ++y) {
            if (sig_t_[y] != sig_s_[gens_[depth]]) continue;
            images_.push_back(y);
            if (partial_consistent()) {
                if (auto found = assign(depth + 1)) return found;
            }
            images_.pop_back();
        }
        return std::nullopt;
    }

    bool partial_consistent() const {
        std::vector<Elem> map(s_->order(), kNone);
        std::vector<Elem> known;
        auto seed = [&](Elem a, Elem b) {
            if (map[a] == kNone) {
                map[a] = b;
                known.push_back(a);
                return true;
            }
            return map[a] == b;
        };
        if (!seed(0, 0) || !seed(s_->one(), t_->one())) return false;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (!seed(gens_[i], images_[i])) return false;
        }
        if (!close(map, known)) return false;
        // injective on the generated part
        ElementSet hit(t_->order());
        for (Elem a : known) {
            if (hit.test(map[a])) return false;
            hit.set(map[a]);
        }
        return true;
    }

    RingPtr s_, t_;
    std::vector<Signature> sig_s_, sig_t_;
    std::vector<Elem> gens_;
    std::vector<Elem> images_;
    std::vector<Elem> map_;
};

}  // namespace

std::optional<RingHom> find_isomorphism(const RingPtr& source, const RingPtr& target) {
    if (source->order() != target->order()) return std::nullopt;
    auto ss = signatures(*source), st = signatures(*target);
    std::sort(ss.begin(), ss.end());
    std::sort(st.begin(), st.end());
    if (ss != st) return std::nullopt;
    return IsoSearch(source, target).run();
}

}  // namespace pruefer
