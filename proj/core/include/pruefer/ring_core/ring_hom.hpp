#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pruefer/ring_core/finite_ring.hpp"

namespace pruefer {

/// A map of element indices between two rings. Construction does not verify
/// the homomorphism laws; `find_violation` does, exhaustively.
class RingHom {
public:
    RingHom(RingPtr source, RingPtr target, std::vector<Elem> map);

    static RingHom identity(const RingPtr& ring);

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }
    const std::vector<Elem>& map() const noexcept { return map_; }
    Elem operator()(Elem a) const { return map_[a]; }

    /// Image of a subset of the source.
    ElementSet image(const ElementSet& subset) const;
    /// Preimage of a subset of the target.
    ElementSet preimage(const ElementSet& subset) const;
    ElementSet kernel() const;
    bool is_surjective() const;
    bool is_injective() const;

    /// First failure of 0, 1, + or · preservation, or nullopt. O(|source|²).
    std::optional<std::string> find_violation() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Elem> map_;
};

RingHom compose(const RingHom& second, const RingHom& first);

}  // namespace pruefer
