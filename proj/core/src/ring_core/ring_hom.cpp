#include "pruefer/ring_core/ring_hom.hpp"

#include "pruefer/errors.hpp"

namespace pruefer {

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_->order()) throw ArgumentError("ring map is not total on its source");
    for (Elem v : map_) {
        if (v >= target_->order()) throw ArgumentError("ring map leaves its target");
    }
}

RingHom RingHom::identity(const RingPtr& ring) {
    std::vector<Elem> map(ring->order());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
    return RingHom(ring, ring, std::move(map));
}

ElementSet RingHom::image(const ElementSet& subset) const {
    ElementSet out(target_->order());
    for_each_member(subset, [&](Elem e) { out.set(map_[e]); });
    return out;
}

ElementSet RingHom::preimage(const ElementSet& subset) const {
    ElementSet out(source_->order());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (subset.test(map_[i])) out.set(i);
    }
    return out;
}

ElementSet RingHom::kernel() const {
    ElementSet zero(target_->order());
    zero.set(target_->zero());
    return preimage(zero);
}

bool RingHom::is_surjective() const {
    ElementSet all(source_->order());
    all.set();
    return image(all).all();
}

bool RingHom::is_injective() const { return kernel().count() == 1; }

std::optional<std::string> RingHom::find_violation() const {
    const FiniteRing& s = *source_;
    const FiniteRing& t = *target_;
    if (map_[s.zero()] != t.zero()) return "zero not preserved";
    if (map_[s.one()] != t.one()) return "one not preserved";
    for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = a; b < s.order(); ++b) {
            if (map_[s.add(a, b)] != t.add(map_[a], map_[b])) {
                return "addition not preserved at (" + s.format(a) + ", " + s.format(b) + ")";
            }
            if (map_[s.mul(a, b)] != t.mul(map_[a], map_[b])) {
                return "multiplication not preserved at (" + s.format(a) + ", " + s.format(b) + ")";
            }
        }
    }
    return std::nullopt;
}

RingHom compose(const RingHom& second, const RingHom& first) {
    if (first.target().get() != second.source().get()) throw ArgumentError("compose: maps do not chain");
    std::vector<Elem> map(first.map().size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = second(first(static_cast<Elem>(i)));
    return RingHom(first.source(), second.target(), std::move(map));
}

}  // namespace pruefer
