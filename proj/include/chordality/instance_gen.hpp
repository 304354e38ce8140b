#pragma once

#include <cstdint>

#include "chordality/graph.hpp"
#include "chordality/separator.hpp"
#include "chordality/vco.hpp"

namespace chordality {

struct GeneratedSck {
    Graph graph;
    Vco trace; // a valid vertex cycle ordering of graph (construction reversed)
};

// Builds an SC_k instance from K1 or C_k (coin flip) by `ops` random legal
// construction operations (pendant vertex, pendant cycles, and for even k
// parallel-path attachments).  Deterministic per (k, ops, seed).
GeneratedSck gen_sck(int k, int ops, uint64_t seed);

// Builds a connected graph of the requested subclass near n_target vertices,
// per the class structure; verified by classify_subclass before returning.
// Throws std::runtime_error if the retry cap is exhausted.
Graph gen_2k2_subclass(SubclassTag tag, int n_target, uint64_t seed);

} // namespace chordality
