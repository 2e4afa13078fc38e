#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

struct CorpusEntry {
    std::string name;
    std::vector<std::vector<VertexId>> maximal_simplices;
    std::optional<std::vector<std::size_t>> betti_gf2;  // known values, when recorded
};

/// Full simplices up to dimension 4, their boundaries, the hollow triangle,
/// a 6-vertex projective plane, a 7-vertex torus and seeded random 2-complexes.
const std::vector<CorpusEntry>& builtin_corpus();

std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

/// Random 2-complex on `vertices` vertices: each triangle kept with
/// probability 1/3, plus a few stray edges. Deterministic in `seed`.
std::vector<std::vector<VertexId>> random_2_complex(std::size_t vertices, std::uint64_t seed);

}  // namespace dmt
