#pragma once

#include <cstdint>

#include "coalp/program.hpp"

namespace coalp {

/// Seeded generator of ground Datalog programs for the benchmark harness.
/// Predicates are layered: layer 0 holds facts, each later layer's rules
/// reference only earlier layers, so groundTp reaches a fixpoint quickly
/// and every generated goal is decidable.
struct DatalogSpec {
    uint64_t seed = 1;
    int layers = 4;
    int predsPerLayer = 3;
    int constants = 8;
    int factsPerPred = 6;
    int rulesPerPred = 4;
    int bodyAtoms = 3;
};

struct DatalogInstance {
    Program program;
    Atom goal;  // a head derivable from the generated clauses
};

/// Deterministic per spec: the same spec always yields the same instance.
DatalogInstance generateDatalog(const DatalogSpec& spec);

}  // namespace coalp
