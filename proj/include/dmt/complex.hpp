#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmt {

using VertexId = std::uint32_t;

// Index of a simplex inside one complex. Ids follow the canonical order
// (dimension first, then lexicographic on the sorted vertex list).
using CellId = std::size_t;

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A nonempty set of vertices, kept sorted.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    /// The facet obtained by deleting `v`. Throws if `v` is absent or this is a vertex.
    Simplex without(VertexId v) const;

    std::string to_string() const;

    // Canonical order: dimension first, then lexicographic.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) = default;

private:
    std::vector<VertexId> vertices_;
};

/// Finite abstract simplicial complex with facet/cofacet incidence.
/// Immutable once built.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(dim_offsets_.size()) - 2; }

    const Simplex& simplex(CellId id) const { return simplices_.at(id); }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }

    std::optional<CellId> find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }
    /// Throws InvalidInput if `s` is not a member.
    CellId id_of(const Simplex& s) const;

    /// Facet ids in vertex-deletion order: entry i drops the i-th vertex.
    std::span<const CellId> facet_ids(CellId id) const { return facets_.at(id); }
    /// Cofacet ids in ascending order.
    std::span<const CellId> cofacet_ids(CellId id) const { return cofacets_.at(id); }

    int dimension_of(CellId id) const { return simplices_.at(id).dimension(); }
    std::size_t count(int dim) const;
    /// Ids of all `dim`-simplices form the half-open range [first, last).
    CellId first_of_dimension(int dim) const;
    CellId end_of_dimension(int dim) const;

    std::vector<Simplex> maximal_simplices() const;

    friend SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal);

private:
    explicit SimplicialComplex(std::vector<Simplex> closed_sorted);

    std::vector<Simplex> simplices_;
    std::map<Simplex, CellId> index_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    std::vector<CellId> dim_offsets_;  // dim_offsets_[d] = first id of dimension d
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Downward closure of the given vertex sets. Inputs need not be sorted;
/// duplicate and dominated inputs are absorbed.
SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal);

ComplexPtr make_complex(const std::vector<std::vector<VertexId>>& maximal);

/// Codimension-1 faces of `s`, in vertex-deletion order.
std::vector<Simplex> facets(const SimplicialComplex& c, const Simplex& s);

long euler_characteristic(const SimplicialComplex& c);

}  // namespace dmt
