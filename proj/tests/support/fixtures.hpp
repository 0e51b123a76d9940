#pragma once

#include <string_view>

#include "pruefer/harness/corpus.hpp"
#include "pruefer/ring_core.hpp"

namespace fixture {

inline pruefer::RingPtr ring(std::string_view spec) { return pruefer::build_ring(pruefer::parse_ring_spec(spec)); }

inline pruefer::RingPtr z4() { return ring("ring Z4 = zmod(4)"); }

inline pruefer::RingPtr z4_z2() {
    return ring("ring A = zmod(4); module E = quot_module(A, gens=[2]); ring R = trivext(A, E)");
}

inline pruefer::RingPtr f2_f2() { return ring("ring K = zmod(2); module E = free(K, 1); ring R = trivext(K, E)"); }

inline pruefer::RingPtr f2_f2sq() {
    return ring("ring K = zmod(2); module E = free(K, 2); ring R = trivext(K, E)");
}

inline pruefer::RingPtr z4_z4() { return ring("ring A = zmod(4); module E = free(A, 1); ring R = trivext(A, E)"); }

/// Every corpus ring up to `max_order`: residues, fields, trivial extensions and products.
inline std::vector<pruefer::CorpusMember> zoo(std::size_t max_order) {
    pruefer::CorpusConfig config;
    config.max_order = max_order;
    return pruefer::generate_corpus(config);
}

}  // namespace fixture
