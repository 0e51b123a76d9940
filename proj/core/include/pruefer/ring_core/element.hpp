#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pruefer {

/// Index of a ring or module element. Zero is always index 0.
using Elem = std::uint32_t;

/// Membership set over element indices.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Hard ceiling on the order of any constructed ring or module.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

template <class F>
void for_each_member(const ElementSet& set, F&& f) {
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
        f(static_cast<Elem>(i));
    }
}

inline std::vector<Elem> members_of(const ElementSet& set) {
    std::vector<Elem> out;
    out.reserve(set.count());
    for_each_member(set, [&](Elem e) { out.push_back(e); });
    return out;
}

}  // namespace pruefer
