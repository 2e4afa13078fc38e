#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmt/delta_morse.hpp"

namespace dmt {

/// The part of a subdivided gradient path that runs through one base
/// simplex: from the entrance label to the exit label.
struct PathSegment {
    Simplex host;
    std::vector<Label> cells;

    const Label& entrance() const { return cells.front(); }
    const Label& exit() const { return cells.back(); }
};

/// First cell of a path through the coface `beta` of an F-pair with free
/// vertex `v`, given the last cell before the path leaves `beta`. The exit
/// label must hold {v} as one of its blocks.
Label entrance_from_exit(const Label& exit, const Simplex& beta, VertexId v);

/// The forced run through the coface of a non-critical pair: append {v},
/// then move {v} one block to the left per pair step until the coface's
/// boundary facet equals `exit`. Throws InvalidInput when `exit` is not
/// reachable from `entrance`.
PathSegment segment_through_noncritical(const Label& entrance, const NoncriticalContext& ctx,
                                        const Label& exit);

/// The unique path inside a critical simplex from its designated cell to
/// the boundary cell `exit`.
PathSegment segment_from_critical(const CriticalOrdering& ord, const Label& exit);

/// Carrier sequence of a subdivided gradient path with repeats collapsed.
/// Throws ConstructionError if the result is not a gradient path of `f`.
GradientPath project_path(const SubdividedComplex& s, const DiscreteVectorField& f,
                          const GradientPath& delta_path);

/// Builds the subdivided gradient path of a base gradient path, host by
/// host from the target backwards. Throws ConstructionError if a step
/// disagrees with `df.field`.
GradientPath lift_path(const SubdividedComplex& s, const DiscreteVectorField& f,
                       const DeltaMorse& df, const GradientPath& base_path);

struct EndpointTally {
    int dimension = 0;
    CellId source = 0;  // base ids
    CellId target = 0;
    std::size_t base_paths = 0;
    std::size_t delta_paths = 0;
    bool round_trips_ok = true;
};

struct BijectionReport {
    bool success = false;
    std::size_t base_total = 0;
    std::size_t delta_total = 0;
    std::vector<EndpointTally> tallies;
    std::vector<std::string> failures;
    /// Cell-by-cell spelling of the first path that failed a check.
    std::vector<std::string> first_offending_path;
};

/// Enumerates both path sets and checks that lift and projection are mutually
/// inverse, respect the critical-cell bijection, and give equal counts per
/// endpoint pair. Failures are recorded, not thrown.
BijectionReport verify_bijection(const SubdividedComplex& s, const DiscreteVectorField& f,
                                 const DeltaMorse& df, EnumerationOptions options = {});

}  // namespace dmt
