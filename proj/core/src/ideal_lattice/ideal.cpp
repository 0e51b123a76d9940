#include "pruefer/ideal_lattice/ideal.hpp"

#include "pruefer/errors.hpp"

namespace pruefer {

namespace detail {

void join_cyclic(const FiniteRing& ring, ElementSet& base, Elem x) {
    if (base.test(x)) return;
    const std::vector<Elem> snapshot = members_of(base);
    for (Elem y = x; !base.test(y); y = ring.add(y, x)) {
        for (Elem b : snapshot) base.set(ring.add(b, y));
    }
}

ElementSet principal_members(const FiniteRing& ring, Elem a) {
    ElementSet out(ring.order());
    for (Elem r = 0; r < ring.order(); ++r) out.set(ring.mul(r, a));
    return out;
}

ElementSet join_members(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
    if (a.is_subset_of(b)) return b;
    ElementSet out = a;
    for (auto i = b.find_first(); i != ElementSet::npos; i = b.find_next(i)) {
        if (!out.test(i)) join_cyclic(ring, out, static_cast<Elem>(i));
    }
    return out;
}

std::vector<Elem> greedy_generators(const FiniteRing& ring, const ElementSet& members) {
    if (members.all()) return {ring.one()};
    std::vector<Elem> gens;
    ElementSet reached(ring.order());
    reached.set(0);
    for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
        if (reached.test(i)) continue;
        gens.push_back(static_cast<Elem>(i));
        reached = detail::join_members(ring, reached, detail::principal_members(ring, static_cast<Elem>(i)));
        if (reached == members) break;
    }
    return gens;
}

}  // namespace detail

namespace {

using detail::greedy_generators;

void require_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring().get() != b.ring().get()) throw ArgumentError("ideals belong to different rings");
}

}  // namespace

Ideal::Ideal(RingPtr ring, ElementSet members, std::vector<Elem> gens)
    : ring_(std::move(ring)), members_(std::move(members)), gens_(std::move(gens)) {}

std::string Ideal::to_string() const {
    if (gens_.empty()) return "(" + ring_->format(0) + ")";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += ring_->format(gens_[i]);
    }
    return out + ")";
}

std::vector<std::string> Ideal::member_literals() const {
    std::vector<std::string> out;
    for_each_member(members_, [&](Elem e) { out.push_back(ring_->format(e)); });
    return out;
}

Ideal zero_ideal(const RingPtr& ring) {
    ElementSet m = ring->empty_set();
    m.set(0);
    return Ideal(ring, std::move(m), {});
}

Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, ring->full_set(), {ring->one()}); }

Ideal principal_ideal(const RingPtr& ring, Elem a) {
    if (a == 0) return zero_ideal(ring);
    return Ideal(ring, detail::principal_members(*ring, a), {a});
}

Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> gens) {
    ElementSet members = ring->empty_set();
    members.set(0);
    std::vector<Elem> kept;
    for (Elem g : gens) {
        if (g >= ring->order()) throw ArgumentError("generator index out of range");
        if (members.test(g)) continue;
        kept.push_back(g);
        members = detail::join_members(*ring, members, detail::principal_members(*ring, g));
    }
    return Ideal(ring, std::move(members), std::move(kept));
}

bool is_ideal(const FiniteRing& ring, const ElementSet& members) {
    if (members.size() != ring.order() || !members.test(0)) return false;
    const std::vector<Elem> list = members_of(members);
    for (Elem a : list) {
        for (Elem b : list) {
            if (!members.test(ring.add(a, b))) return false;
        }
        for (Elem r = 0; r < ring.order(); ++r) {
            if (!members.test(ring.mul(r, a))) return false;
        }
    }
    return true;
}

Ideal ideal_from_members(const RingPtr& ring, const ElementSet& members) {
    if (!is_ideal(*ring, members)) throw ArgumentError("element set is not an ideal of " + ring->name());
    return Ideal(ring, members, greedy_generators(*ring, members));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Elem> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return ideal_generated_by(a.ring(), gens);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    const FiniteRing& ring = *a.ring();
    std::vector<Elem> gens;
    for (Elem x : a.generators()) {
        for (Elem y : b.generators()) gens.push_back(ring.mul(x, y));
    }
    return ideal_generated_by(a.ring(), gens);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    ElementSet m = a.members() & b.members();
    auto gens = greedy_generators(*a.ring(), m);
    return Ideal(a.ring(), std::move(m), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    const FiniteRing& ring = *a.ring();
    ElementSet m = ring.empty_set();
    for (Elem r = 0; r < ring.order(); ++r) {
        bool inside = true;
        for (Elem g : b.generators()) {
            if (!a.contains(ring.mul(r, g))) {
                inside = false;
                break;
            }
        }
        if (inside) m.set(r);
    }
    auto gens = greedy_generators(ring, m);
    return Ideal(a.ring(), std::move(m), std::move(gens));
}

Ideal annihilator(const Ideal& a) { return ideal_quotient(zero_ideal(a.ring()), a); }

Ideal ideal_power(const Ideal& a, unsigned k) {
    Ideal out = unit_ideal(a.ring());
    for (unsigned i = 0; i < k; ++i) out = ideal_product(out, a);
    return out;
}

std::optional<Elem> principal_generator(const Ideal& ideal) {
    const FiniteRing& ring = *ideal.ring();
    if (ideal.is_zero()) return Elem{0};
    const std::size_t size = ideal.size();
    for (auto i = ideal.members().find_first(); i != ElementSet::npos; i = ideal.members().find_next(i)) {
        if (detail::principal_members(ring, static_cast<Elem>(i)).count() == size) return static_cast<Elem>(i);
    }
    return std::nullopt;
}

bool is_regular_ideal(const Ideal& ideal) {
    const FiniteRing& ring = *ideal.ring();
    for (auto i = ideal.members().find_first(); i != ElementSet::npos; i = ideal.members().find_next(i)) {
        if (is_regular_element(ring, static_cast<Elem>(i))) return true;
    }
    return false;
}

bool is_regular_ideal(const Ideal& ideal, const ElementTable& elements) {
    return ideal.members().intersects(elements.units);
}

}  // namespace pruefer
