#include "dmt/homology.hpp"

#include <cstdint>
#include <set>

namespace dmt {
namespace {

// Rows of a GF(2) matrix packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0)
    {
    }

    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= 1ULL << (c % 64); }
    bool get(std::size_t r, std::size_t c) const
    {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1ULL;
    }

    std::size_t rank()
    {
        const std::size_t rows = words_ ? bits_.size() / words_ : 0;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows; ++c) {
            std::size_t pivot = r;
            while (pivot < rows && !get(pivot, c))
                ++pivot;
            if (pivot == rows)
                continue;
            swap_rows(pivot, r);
            for (std::size_t i = 0; i < rows; ++i)
                if (i != r && get(i, c))
                    add_row(r, i);
            ++r;
        }
        return r;
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
    }
    void add_row(std::size_t from, std::size_t to)
    {
        for (std::size_t w = 0; w < words_; ++w)
            bits_[to * words_ + w] ^= bits_[from * words_ + w];
    }

    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

std::vector<std::size_t> betti_gf2(const SimplicialComplex& c)
{
    const int top = c.dimension();
    if (top < 0)
        return {};
    // rank[d] = rank of the boundary map from d-chains to (d-1)-chains.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) {
        const CellId lo = c.first_of_dimension(d - 1);
        BitMatrix m(c.count(d), c.count(d - 1));
        for (CellId s = c.first_of_dimension(d); s < c.end_of_dimension(d); ++s)
            for (CellId f : c.facet_ids(s))
                m.set(s - c.first_of_dimension(d), f - lo);
        rank[static_cast<std::size_t>(d)] = m.rank();
    }
    std::vector<std::size_t> betti;
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        betti.push_back(c.count(d) - rank[ud] - rank[ud + 1]);
    }
    return betti;
}

std::vector<std::size_t> count_chains(const SimplicialComplex& c)
{
    // ending[s][k]: chains of k+1 elements whose top is s.
    std::vector<std::vector<std::size_t>> ending(c.size());
    std::vector<std::size_t> total;
    for (CellId s = 0; s < c.size(); ++s) {
        const auto len = static_cast<std::size_t>(c.dimension_of(s)) + 1;
        auto& mine = ending[s];
        mine.assign(len, 0);
        mine[0] = 1;
        // Every proper face of s, reached through repeated facets.
        std::set<CellId> below;
        std::vector<CellId> stack(c.facet_ids(s).begin(), c.facet_ids(s).end());
        while (!stack.empty()) {
            CellId f = stack.back();
            stack.pop_back();
            if (below.insert(f).second)
                stack.insert(stack.end(), c.facet_ids(f).begin(), c.facet_ids(f).end());
        }
        for (CellId f : below)
            for (std::size_t k = 0; k < ending[f].size(); ++k)
                mine[k + 1] += ending[f][k];
        if (total.size() < len)
            total.resize(len, 0);
        for (std::size_t k = 0; k < len; ++k)
            total[k] += mine[k];
    }
    return total;
}

}  // namespace dmt
