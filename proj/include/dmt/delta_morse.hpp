#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dmt/morse.hpp"
#include "dmt/subdivision.hpp"

namespace dmt {

class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The chosen vertex order of a critical simplex. Its singleton label is
/// the one subdivided cell left critical inside the simplex.
class CriticalOrdering {
public:
    /// Throws InvalidInput unless `order` is a permutation of the simplex's vertices.
    CriticalOrdering(Simplex simplex, std::vector<VertexId> order);

    const Simplex& simplex() const noexcept { return simplex_; }
    const std::vector<VertexId>& order() const noexcept { return order_; }
    Label designated_label() const { return singleton_label(order_); }

    friend bool operator==(const CriticalOrdering&, const CriticalOrdering&) = default;

private:
    Simplex simplex_;
    std::vector<VertexId> order_;
};

/// An F-pair (face, coface) and its free vertex coface \ face.
struct NoncriticalContext {
    Simplex face;
    Simplex coface;
    VertexId free_vertex;

    /// Throws InvalidInput unless `face` is a facet of `coface`.
    static NoncriticalContext from_pair(Simplex face, Simplex coface);
};

enum class NoncriticalCase : int {
    kAppend = 1,  // free vertex absent: add {v} at the end
    kDelete = 2,  // {v} is the last block: remove it
    kMerge = 3,   // {v} is a singleton before another block: merge with it
    kSplit = 4,   // v sits in a larger block: split {v} off to the left
};

struct NoncriticalMove {
    Label partner;
    NoncriticalCase kind;
};

NoncriticalMove pair_noncritical(const Label& label, VertexId free_vertex);
/// As above, additionally rejecting labels that are not partitions of the
/// context's face or coface.
NoncriticalMove pair_noncritical(const Label& label, const NoncriticalContext& ctx);

struct CriticalMove {
    std::optional<Label> partner;  // nullopt: the label is the designated critical cell
    std::size_t suffix_length;
};

/// Pairing inside a critical simplex, governed by the longest common
/// block suffix with the designated label.
CriticalMove pair_critical(const Label& label, const CriticalOrdering& ord);

/// One ordering per critical simplex, vertices in descending order.
std::vector<CriticalOrdering> default_orderings(const DiscreteVectorField& f);

/// Critical base id -> ordering. Throws InvalidInput on a missing or duplicated
/// entry or on an entry for a non-critical simplex. With `fill_missing`,
/// absent entries get the default ordering instead.
std::map<CellId, CriticalOrdering> resolve_orderings(const DiscreteVectorField& f,
                                                     std::span<const CriticalOrdering> orderings,
                                                     bool fill_missing = false);

struct DeltaMorse {
    DiscreteVectorField field;                     // on the subdivision
    std::map<CellId, CriticalOrdering> orderings;  // keyed by critical base id
    std::map<CellId, CellId> designated;           // critical base id -> subdivided cell
};

/// Builds the field on the subdivision from a Morse field on the base and
/// the orderings, then re-verifies validity, acyclicity and the critical
/// cells. Throws InvalidInput for bad orderings or a non-Morse input and
/// ConstructionError if a verification fails.
DeltaMorse build_delta_morse(const SubdividedComplex& s, const DiscreteVectorField& f,
                             std::span<const CriticalOrdering> orderings);

/// Partner label of a subdivided cell under the construction, or nullopt for
/// a designated critical cell. Throws InvalidInput when the orderings table
/// has no entry for a critical carrier.
std::optional<Label> delta_partner(const SubdividedComplex& s, const DiscreteVectorField& f,
                                   const std::map<CellId, CriticalOrdering>& orderings,
                                   CellId cell);

}  // namespace dmt
