#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

/// A strictly increasing sequence of simplices, each a proper face of the next.
using Chain = std::vector<Simplex>;

/// One block of a label, kept sorted.
using Block = std::vector<VertexId>;

/// Ordered partition of a simplex's vertex set. Block j is s_j \ s_{j-1}
/// for the chain s_1 < s_2 < ... it encodes.
class Label {
public:
    Label() = default;
    /// Sorts each block; throws InvalidInput on empty or overlapping blocks.
    explicit Label(std::vector<Block> blocks);
    Label(std::initializer_list<std::initializer_list<VertexId>> blocks);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }
    /// Dimension of the subdivided cell: number of blocks minus one.
    int dimension() const noexcept { return static_cast<int>(blocks_.size()) - 1; }

    /// Union of all blocks.
    Simplex support() const;
    /// Index of the block containing `v`, if any.
    std::optional<std::size_t> block_of(VertexId v) const;
    bool all_singletons() const;

    Label without_last() const;
    Label with_appended(Block b) const;

    std::string to_string() const;

    // Block count first, then lexicographic on the block sequence.
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);
    friend bool operator==(const Label& a, const Label& b) = default;

private:
    std::vector<Block> blocks_;
};

/// Label of singletons in the given vertex order.
Label singleton_label(std::span<const VertexId> order);

Label label_from_chain(const Chain& chain);
Chain chain_from_label(const Label& label);

/// The barycentric subdivision of a complex together with the chain/label
/// dictionary. Vertex v of the subdivision is the base simplex with id v.
class SubdividedComplex {
public:
    const SimplicialComplex& base() const noexcept { return *base_; }
    const SimplicialComplex& delta() const noexcept { return *delta_; }
    const ComplexPtr& base_ptr() const noexcept { return base_; }
    const ComplexPtr& delta_ptr() const noexcept { return delta_; }

    /// Base-simplex ids of the chain of a subdivided cell, in chain order.
    const std::vector<CellId>& chain_ids(CellId cell) const { return chains_.at(cell); }
    Chain chain_of(CellId cell) const;
    const Label& label(CellId cell) const { return labels_.at(cell); }
    /// Base id of the last chain element.
    CellId carrier(CellId cell) const { return chains_.at(cell).back(); }

    std::optional<CellId> find(const Label& label) const;
    /// Throws InvalidInput when the label is not a cell of the subdivision.
    CellId id_of(const Label& label) const;

    /// Subdivided cells interior to the given base simplex, ascending.
    const std::vector<CellId>& interior(CellId base_cell) const { return interior_.at(base_cell); }

    friend SubdividedComplex barycentric_subdivide(ComplexPtr c);

private:
    ComplexPtr base_;
    ComplexPtr delta_;
    std::vector<std::vector<CellId>> chains_;
    std::vector<Label> labels_;
    std::map<Label, CellId> by_label_;
    std::vector<std::vector<CellId>> interior_;
};

SubdividedComplex barycentric_subdivide(ComplexPtr c);

/// Label of a subdivided cell given by its vertex set (base-simplex ids).
Label label_of(const SubdividedComplex& s, const Simplex& delta_simplex);

/// All face labels, the label itself included, via subchains.
std::vector<Label> faces_of_label(const Label& label);

/// The base simplex in whose interior the cell lies.
Simplex carrier(const SubdividedComplex& s, const Simplex& delta_simplex);

}  // namespace dmt
