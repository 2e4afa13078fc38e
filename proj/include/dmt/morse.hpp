#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

class InvalidField : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A pair (face, coface) of a discrete vector field, face a facet of coface.
struct CellPair {
    CellId face;
    CellId coface;
    friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// A matching of simplices with cofacets. Construct through validate_field.
class DiscreteVectorField {
public:
    const SimplicialComplex& complex() const noexcept { return *complex_; }
    const ComplexPtr& complex_ptr() const noexcept { return complex_; }

    /// Sorted by face id.
    std::span<const CellPair> pairs() const noexcept { return pairs_; }

    std::optional<CellId> partner(CellId id) const;
    /// Partner of `id` when it is the face of its pair.
    std::optional<CellId> up_partner(CellId id) const;
    /// Partner of `id` when it is the coface of its pair.
    std::optional<CellId> down_partner(CellId id) const;
    bool is_critical(CellId id) const { return !partner(id).has_value(); }

    friend DiscreteVectorField validate_field(ComplexPtr c, std::vector<CellPair> pairs);

private:
    DiscreteVectorField(ComplexPtr c, std::vector<CellPair> pairs, std::vector<CellId> partner);

    ComplexPtr complex_;
    std::vector<CellPair> pairs_;
    std::vector<CellId> partner_;
};

/// Throws InvalidField naming the offending pair or simplex.
DiscreteVectorField validate_field(ComplexPtr c, std::vector<CellPair> pairs);
DiscreteVectorField validate_field(ComplexPtr c,
                                   const std::vector<std::pair<Simplex, Simplex>>& pairs);

bool is_morse(const DiscreteVectorField& f);

/// A closed V-path witness as a list of face ids, the first repeated at the
/// end, or nullopt when acyclic.
std::optional<std::vector<CellId>> find_closed_path(const DiscreteVectorField& f);

struct CriticalSet {
    std::vector<std::vector<CellId>> by_dimension;

    std::size_t total() const;
    std::size_t count(int dim) const;
    std::vector<CellId> all() const;
};

CriticalSet critical_cells(const DiscreteVectorField& f);

/// beta_0, alpha_1, beta_1, ..., alpha_m, beta_m, alpha_{m+1}.
struct GradientPath {
    int dimension = 0;  // dimension of the beta cells
    std::vector<CellId> cells;

    CellId source() const { return cells.front(); }
    CellId target() const { return cells.back(); }
    friend auto operator<=>(const GradientPath&, const GradientPath&) = default;
};

/// Why `path` is not a gradient path of `f`, or nullopt if it is one.
std::optional<std::string> check_gradient_path(const DiscreteVectorField& f,
                                               const GradientPath& path);

struct EnumerationOptions {
    bool parallel = false;
};

/// Every gradient path of a Morse field. Sources are visited in canonical
/// order, branches in ascending facet id, so the result does not depend on
/// `options.parallel`. Throws InvalidField on a non-Morse field.
std::vector<GradientPath> gradient_paths(const DiscreteVectorField& f,
                                         EnumerationOptions options = {});

/// Greedy acyclic matching over seed-shuffled incidences.
DiscreteVectorField random_morse(ComplexPtr c, std::uint64_t seed);

std::string describe_cells(const SimplicialComplex& c, std::span<const CellId> cells);

}  // namespace dmt
