#pragma once

#include "revguard/circuit.hpp"
#include "revguard/defense.hpp"
#include "revguard/embedding.hpp"

namespace revguard {

// Deterministic transformation-based synthesis: processes codes 0..2^n-1
// in order and appends Toffoli gates that set wrong output bits right,
// controlling only on bits of already-fixed codes. The result uses
// positive-control Toffoli gates only and satisfies
// permutation(synthesize(spec)) == spec.
Circuit synthesize(const Permutation& spec);

// Builds the level's scrambled specification and synthesizes it. Line
// metadata marks ancillary inputs and garbage outputs; constant values are
// recorded only for constant-vector levels (baseline/Lv1).
Circuit resynthesize_for_level(const EmbeddingResult& e, ScramblingLevel level,
                               std::uint64_t seed = 0);
Circuit resynthesize(const EmbeddingResult& e,
                     const ScramblingAssignment& assignment);

}  // namespace revguard
