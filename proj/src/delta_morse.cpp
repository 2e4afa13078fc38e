#include "dmt/delta_morse.hpp"

#include <algorithm>
#include <set>

namespace dmt {

CriticalOrdering::CriticalOrdering(Simplex simplex, std::vector<VertexId> order)
    : simplex_(std::move(simplex)), order_(std::move(order))
{
    auto sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != simplex_.vertices())
        throw InvalidInput("ordering of " + simplex_.to_string() +
                           " is not a permutation of its vertices");
}

NoncriticalContext NoncriticalContext::from_pair(Simplex face, Simplex coface)
{
    if (face.dimension() + 1 != coface.dimension() || !face.is_face_of(coface))
        throw InvalidInput(face.to_string() + " is not a facet of " + coface.to_string());
    VertexId v = 0;
    for (VertexId u : coface.vertices())
        if (!face.contains(u))
            v = u;
    return {std::move(face), std::move(coface), v};
}

NoncriticalMove pair_noncritical(const Label& label, VertexId free_vertex)
{
    auto blocks = label.blocks();
    auto pos = label.block_of(free_vertex);
    if (!pos)
        return {label.with_appended({free_vertex}), NoncriticalCase::kAppend};
    const std::size_t i = *pos;
    if (blocks[i].size() == 1) {
        if (i + 1 == blocks.size()) {
            blocks.pop_back();
            return {Label(std::move(blocks)), NoncriticalCase::kDelete};
        }
        blocks[i + 1].push_back(free_vertex);
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
        return {Label(std::move(blocks)), NoncriticalCase::kMerge};
    }
    std::erase(blocks[i], free_vertex);
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(i), Block{free_vertex});
    return {Label(std::move(blocks)), NoncriticalCase::kSplit};
}

NoncriticalMove pair_noncritical(const Label& label, const NoncriticalContext& ctx)
{
    Simplex support = label.support();
    if (support != ctx.face && support != ctx.coface)
        throw InvalidInput("label " + label.to_string() + " does not partition " +
                           ctx.face.to_string() + " or " + ctx.coface.to_string());
    return pair_noncritical(label, ctx.free_vertex);
}

CriticalMove pair_critical(const Label& label, const CriticalOrdering& ord)
{
    if (label.support() != ord.simplex())
        throw InvalidInput("label " + label.to_string() + " does not partition " +
                           ord.simplex().to_string());
    const auto& order = ord.order();
    const auto& blocks = label.blocks();
    const std::size_t m = order.size();

    std::size_t suffix = 0;
    while (suffix < m && suffix < blocks.size()) {
        const Block& b = blocks[blocks.size() - 1 - suffix];
        if (b.size() != 1 || b[0] != order[m - 1 - suffix])
            break;
        ++suffix;
    }
    if (suffix == m)
        return {std::nullopt, suffix};

    // Next vertex the designated label expects in front of the matched suffix.
    const VertexId w = order[m - 1 - suffix];
    auto out = blocks;
    const std::size_t i = *label.block_of(w);
    if (out[i].size() == 1) {
        if (i + 1 >= out.size())
            throw ConstructionError("singleton {" + std::to_string(w) + "} has no following block in " +
                                    label.to_string());
        out[i + 1].push_back(w);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
        std::erase(out[i], w);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), Block{w});
    }
    return {Label(std::move(out)), suffix};
}

std::vector<CriticalOrdering> default_orderings(const DiscreteVectorField& f)
{
    std::vector<CriticalOrdering> out;
    for (CellId id : critical_cells(f).all()) {
        const Simplex& s = f.complex().simplex(id);
        std::vector<VertexId> order(s.vertices().rbegin(), s.vertices().rend());
        out.emplace_back(s, std::move(order));
    }
    return out;
}

std::map<CellId, CriticalOrdering> resolve_orderings(const DiscreteVectorField& f,
                                                     std::span<const CriticalOrdering> orderings,
                                                     bool fill_missing)
{
    const auto& c = f.complex();
    std::map<CellId, CriticalOrdering> table;
    for (const CriticalOrdering& o : orderings) {
        auto id = c.find(o.simplex());
        if (!id)
            throw InvalidInput("ordering given for " + o.simplex().to_string() +
                               ", which is not in the complex");
        if (!f.is_critical(*id))
            throw InvalidInput("ordering given for non-critical simplex " + o.simplex().to_string());
        if (!table.emplace(*id, o).second)
            throw InvalidInput("duplicate ordering for " + o.simplex().to_string());
    }
    for (const CriticalOrdering& d : default_orderings(f)) {
        CellId id = c.id_of(d.simplex());
        if (table.contains(id))
            continue;
        if (!fill_missing)
            throw InvalidInput("no ordering given for critical simplex " + d.simplex().to_string());
        table.emplace(id, d);
    }
    return table;
}

std::optional<Label> delta_partner(const SubdividedComplex& s, const DiscreteVectorField& f,
                                   const std::map<CellId, CriticalOrdering>& orderings,
                                   CellId cell)
{
    const CellId host = s.carrier(cell);
    const Label& label = s.label(cell);
    if (auto up = f.up_partner(host)) {
        auto ctx = NoncriticalContext::from_pair(s.base().simplex(host), s.base().simplex(*up));
        return pair_noncritical(label, ctx).partner;
    }
    if (auto down = f.down_partner(host)) {
        auto ctx = NoncriticalContext::from_pair(s.base().simplex(*down), s.base().simplex(host));
        return pair_noncritical(label, ctx).partner;
    }
    auto it = orderings.find(host);
    if (it == orderings.end())
        throw InvalidInput("no ordering for critical simplex " + s.base().simplex(host).to_string());
    return pair_critical(label, it->second).partner;
}

DeltaMorse build_delta_morse(const SubdividedComplex& s, const DiscreteVectorField& f,
                             std::span<const CriticalOrdering> orderings)
{
    if (f.complex_ptr() != s.base_ptr() && f.complex().simplices() != s.base().simplices())
        throw InvalidInput("the field lives on a different complex than the subdivision");
    if (auto cycle = find_closed_path(f))
        throw InvalidInput("input field is not Morse: closed path " +
                           describe_cells(f.complex(), *cycle));
    auto table = resolve_orderings(f, orderings);

    std::vector<CellPair> pairs;
    std::map<CellId, CellId> designated;
    const SimplicialComplex& delta = s.delta();
    for (CellId cell = 0; cell < delta.size(); ++cell) {
        auto partner = delta_partner(s, f, table, cell);
        if (!partner) {
            designated.emplace(s.carrier(cell), cell);
            continue;
        }
        CellId other = s.id_of(*partner);
        auto back = delta_partner(s, f, table, other);
        if (back != s.label(cell))
            throw ConstructionError("pairing is not an involution at " + s.label(cell).to_string());
        if (delta.dimension_of(other) > delta.dimension_of(cell))
            pairs.push_back({cell, other});
    }

    DiscreteVectorField field = [&] {
        try {
            return validate_field(s.delta_ptr(), std::move(pairs));
        } catch (const InvalidField& e) {
            throw ConstructionError(std::string("constructed pairing is invalid: ") + e.what());
        }
    }();
    if (auto cycle = find_closed_path(field))
        throw ConstructionError("constructed pairing has a closed path " +
                                describe_cells(delta, *cycle));

    std::set<CellId> expected;
    for (const auto& [host, ord] : table) {
        auto it = designated.find(host);
        if (it == designated.end() || s.label(it->second) != ord.designated_label())
            throw ConstructionError("critical simplex " + s.base().simplex(host).to_string() +
                                    " does not contain its designated cell");
        expected.insert(it->second);
    }
    auto crit = critical_cells(field).all();
    if (std::set<CellId>(crit.begin(), crit.end()) != expected)
        throw ConstructionError("critical cells differ from the designated cells");

    return {std::move(field), std::move(table), std::move(designated)};
}

}  // namespace dmt
