#include "dmt/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dmt {

Label::Label(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    std::set<VertexId> seen;
    for (Block& b : blocks_) {
        if (b.empty())
            throw InvalidInput("label blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (VertexId v : b)
            if (!seen.insert(v).second)
                throw InvalidInput("vertex " + std::to_string(v) + " occurs in two label blocks");
    }
}

Label::Label(std::initializer_list<std::initializer_list<VertexId>> blocks)
    : Label([&] {
          std::vector<Block> bs;
          for (auto b : blocks)
              bs.emplace_back(b);
          return bs;
      }())
{
}

Simplex Label::support() const
{
    std::vector<VertexId> all;
    for (const Block& b : blocks_)
        all.insert(all.end(), b.begin(), b.end());
    return Simplex(std::move(all));
}

std::optional<std::size_t> Label::block_of(VertexId v) const
{
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v))
            return i;
    return std::nullopt;
}

bool Label::all_singletons() const
{
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.size() == 1; });
}

Label Label::without_last() const
{
    if (blocks_.size() < 2)
        throw InvalidInput("cannot drop the only block of " + to_string());
    return Label(std::vector<Block>(blocks_.begin(), blocks_.end() - 1));
}

Label Label::with_appended(Block b) const
{
    auto bs = blocks_;
    bs.push_back(std::move(b));
    return Label(std::move(bs));
}

std::string Label::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            os << ' ';
        os << '{';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j)
                os << ',';
            os << blocks_[i][j];
        }
        os << '}';
    }
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const Label& a, const Label& b)
{
    if (auto c = a.blocks_.size() <=> b.blocks_.size(); c != 0)
        return c;
    return a.blocks_ <=> b.blocks_;
}

Label singleton_label(std::span<const VertexId> order)
{
    std::vector<Block> bs;
    for (VertexId v : order)
        bs.push_back({v});
    return Label(std::move(bs));
}

Label label_from_chain(const Chain& chain)
{
    std::vector<Block> bs;
    const Simplex* prev = nullptr;
    for (const Simplex& s : chain) {
        Block b;
        if (prev) {
            if (s.dimension() <= prev->dimension() || !prev->is_face_of(s))
                throw InvalidInput(prev->to_string() + " is not a proper face of " + s.to_string());
            std::set_difference(s.vertices().begin(), s.vertices().end(),
                                prev->vertices().begin(), prev->vertices().end(),
                                std::back_inserter(b));
        } else {
            b = s.vertices();
        }
        bs.push_back(std::move(b));
        prev = &s;
    }
    return Label(std::move(bs));
}

Chain chain_from_label(const Label& label)
{
    Chain chain;
    std::vector<VertexId> acc;
    for (const Block& b : label.blocks()) {
        acc.insert(acc.end(), b.begin(), b.end());
        chain.emplace_back(acc);
    }
    return chain;
}

Chain SubdividedComplex::chain_of(CellId cell) const
{
    Chain out;
    for (CellId id : chains_.at(cell))
        out.push_back(base_->simplex(id));
    return out;
}

std::optional<CellId> SubdividedComplex::find(const Label& label) const
{
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

CellId SubdividedComplex::id_of(const Label& label) const
{
    if (auto id = find(label))
        return *id;
    throw InvalidInput("label " + label.to_string() + " is not a cell of the subdivision");
}

SubdividedComplex barycentric_subdivide(ComplexPtr c)
{
    const SimplicialComplex& base = *c;
    // chains_ending[s]: every chain whose last element is s.
    std::vector<std::vector<std::vector<VertexId>>> chains_ending(base.size());
    for (CellId s = 0; s < base.size(); ++s) {
        std::set<CellId> proper;
        std::vector<CellId> stack(base.facet_ids(s).begin(), base.facet_ids(s).end());
        while (!stack.empty()) {
            CellId f = stack.back();
            stack.pop_back();
            if (!proper.insert(f).second)
                continue;
            for (CellId g : base.facet_ids(f))
                stack.push_back(g);
        }
        auto& mine = chains_ending[s];
        mine.push_back({static_cast<VertexId>(s)});
        for (CellId f : proper)
            for (const auto& ch : chains_ending[f]) {
                auto ext = ch;
                ext.push_back(static_cast<VertexId>(s));
                mine.push_back(std::move(ext));
            }
    }
    std::vector<std::vector<VertexId>> all;
    for (auto& per : chains_ending)
        for (auto& ch : per)
            all.push_back(std::move(ch));

    SubdividedComplex out;
    out.base_ = c;
    out.delta_ = std::make_shared<const SimplicialComplex>(build_complex(all));
    const SimplicialComplex& delta = *out.delta_;
    out.chains_.resize(delta.size());
    out.labels_.resize(delta.size());
    out.interior_.resize(base.size());
    for (CellId d = 0; d < delta.size(); ++d) {
        // Ids grow with dimension, so sorted vertex ids are already in chain order.
        auto& ids = out.chains_[d];
        for (VertexId v : delta.simplex(d).vertices())
            ids.push_back(v);
        out.labels_[d] = label_from_chain(out.chain_of(d));
        out.by_label_.emplace(out.labels_[d], d);
        out.interior_[ids.back()].push_back(d);
    }
    return out;
}

Label label_of(const SubdividedComplex& s, const Simplex& delta_simplex)
{
    return s.label(s.delta().id_of(delta_simplex));
}

std::vector<Label> faces_of_label(const Label& label)
{
    const Chain chain = chain_from_label(label);
    const std::size_t n = chain.size();
    std::vector<Label> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        Chain sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1UL << i))
                sub.push_back(chain[i]);
        out.push_back(label_from_chain(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Simplex carrier(const SubdividedComplex& s, const Simplex& delta_simplex)
{
    return s.label(s.delta().id_of(delta_simplex)).support();
}

}  // namespace dmt
