#pragma once

#include <cstdint>
#include <string>

#include "chordality/graph.hpp"
#include "chordality/problem.hpp"

namespace chordality {

enum class UnitKind {
    PendantVertex,
    ZeroPendantCycle,
    OnePendantCycle,
    TwoPendantCycle,
    HalfPlusOnePendantCycle,
};

std::string unit_kind_name(UnitKind k);

struct VcoUnit {
    UnitKind kind;
    VertexSet vertices;   // full unit label: the vertex itself, or the whole C_k
    VertexSet attachment; // vertices shared with the rest of the graph (see invariants)
    VertexSet removed;    // vertices deleted from the working graph at peel time
    // cycle kinds only: the unit's C_k in cyclic order, starting at an
    // attachment vertex.  Derived convenience for the solvers; empty for
    // pendant vertices.  validate_vco checks it against the graph.
    std::vector<Vertex> cycle_order;
};

struct Vco {
    int k = 0;
    std::vector<VcoUnit> units; // units[0] is peeled first
    VertexSet core;             // induces K1 or a single C_k
};

enum class WitnessKind { WrongLengthCycle, UnpeelableResidual };

struct RejectionWitness {
    WitnessKind kind = WitnessKind::UnpeelableResidual;
    std::vector<Vertex> cycle; // WrongLengthCycle: a chordless cycle, len != k, cyclic order
    VertexSet residual;        // UnpeelableResidual: the stuck residual vertex set
};

struct RecognitionResult {
    bool accepted = false;
    Vco vco;                 // valid iff accepted
    RejectionWitness witness; // valid iff !accepted
};

// Peels g into a Vco, or rejects with a verifiable witness.  g must be
// connected, k >= 5.  tie_seed = 0 gives the deterministic peel order
// (pendants first, then the unit with the lowest removed-vertex id);
// any other seed picks uniformly among all currently peelable units.
RecognitionResult compute_vco(const Graph& g, int k, uint64_t tie_seed = 0);

// True iff replaying vco's units in reverse, under the construction rules,
// rebuilds exactly g (including the zero-/one-pendant labels).
bool validate_vco(const Graph& g, const Vco& vco);

// Checks a rejection witness against g: a chordless cycle of length != k, or
// a residual on which no unit is peelable and that is neither K1 nor a C_k.
bool verify_rejection(const Graph& g, int k, const RejectionWitness& w);

struct CageOccurrence {
    Vertex w = -1, z = -1;                  // hub vertices, w < z, both degree >= 3
    std::vector<std::vector<Vertex>> paths; // internal vertices of each parallel path, in w->z order
};

// All hub pairs joined by >= 2 parallel paths of exactly k/2-1 internal
// degree-2 vertices.  k must be even.
std::vector<CageOccurrence> detect_cage(const Graph& g, int k);

std::string vco_to_text(const Vco& vco); // 1-indexed, line oriented

} // namespace chordality
