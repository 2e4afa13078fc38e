#include "dmt/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace dmt {
namespace {

Label merge_adjacent(const Label& label, std::size_t left)
{
    auto blocks = label.blocks();
    blocks[left].insert(blocks[left].end(), blocks[left + 1].begin(), blocks[left + 1].end());
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(left) + 1);
    return Label(std::move(blocks));
}

class CriticalSearch {
public:
    CriticalSearch(const CriticalOrdering& ord, Label target_top, Label exit)
        : ord_(ord), target_top_(std::move(target_top)), exit_(std::move(exit))
    {
    }

    std::vector<std::vector<Label>> run()
    {
        Label start = ord_.designated_label();
        path_.assign(1, start);
        visit(start, std::nullopt);
        return found_;
    }

private:
    void visit(const Label& top, const std::optional<Label>& came_from)
    {
        if (top == target_top_) {
            path_.push_back(exit_);
            found_.push_back(path_);
            path_.pop_back();
        }
        for (std::size_t q = 0; q + 1 < top.size(); ++q) {
            Label facet = merge_adjacent(top, q);
            if (came_from && facet == *came_from)
                continue;
            auto move = pair_critical(facet, ord_);
            if (!move.partner || move.partner->size() < facet.size())
                continue;
            path_.push_back(facet);
            path_.push_back(*move.partner);
            visit(*move.partner, facet);
            path_.pop_back();
            path_.pop_back();
        }
    }

    const CriticalOrdering& ord_;
    Label target_top_;
    Label exit_;
    std::vector<Label> path_;
    std::vector<std::vector<Label>> found_;
};

std::vector<std::string> spell(const SimplicialComplex& c, const GradientPath& p)
{
    std::vector<std::string> out;
    for (CellId id : p.cells)
        out.push_back(c.simplex(id).to_string());
    return out;
}

std::vector<std::string> spell(const SubdividedComplex& s, const GradientPath& p)
{
    std::vector<std::string> out;
    for (CellId id : p.cells)
        out.push_back(s.label(id).to_string());
    return out;
}

}  // namespace

Label entrance_from_exit(const Label& exit, const Simplex& beta, VertexId v)
{
    const Simplex support = exit.support();
    if (!support.is_face_of(beta) || support == beta)
        throw InvalidInput("exit " + exit.to_string() + " is not on the boundary of " +
                           beta.to_string());
    auto j = exit.block_of(v);
    if (!j || exit.blocks()[*j].size() != 1)
        throw InvalidInput("free vertex " + std::to_string(v) + " is not a singleton block of " +
                           exit.to_string());
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < exit.size(); ++i)
        if (i != *j)
            blocks.push_back(exit.blocks()[i]);
    Block rest;
    std::set_difference(beta.vertices().begin(), beta.vertices().end(),
                        support.vertices().begin(), support.vertices().end(),
                        std::back_inserter(rest));
    blocks.push_back(std::move(rest));
    return Label(std::move(blocks));
}

PathSegment segment_through_noncritical(const Label& entrance, const NoncriticalContext& ctx,
                                        const Label& exit)
{
    if (entrance.support() != ctx.face || !entrance.all_singletons())
        throw InvalidInput("entrance " + entrance.to_string() +
                           " is not a top-dimensional cell inside " + ctx.face.to_string());
    PathSegment seg{ctx.coface, {entrance}};
    auto first = pair_noncritical(entrance, ctx);
    Label top = first.partner;
    seg.cells.push_back(top);
    for (;;) {
        if (top.without_last() == exit) {
            seg.cells.push_back(exit);
            return seg;
        }
        const std::size_t p = *top.block_of(ctx.free_vertex);
        if (p == 0)
            throw InvalidInput("exit " + exit.to_string() + " is not reachable from entrance " +
                               entrance.to_string());
        Label facet = merge_adjacent(top, p - 1);
        auto move = pair_noncritical(facet, ctx);
        if (move.kind != NoncriticalCase::kSplit || move.partner == top)
            throw ConstructionError("no continuation through " + facet.to_string());
        seg.cells.push_back(facet);
        seg.cells.push_back(move.partner);
        top = move.partner;
    }
}

PathSegment segment_from_critical(const CriticalOrdering& ord, const Label& exit)
{
    const Simplex& alpha = ord.simplex();
    if (alpha.dimension() == 0)
        throw InvalidInput("a critical vertex has no boundary to exit through");
    const Simplex support = exit.support();
    if (support.dimension() + 1 != alpha.dimension() || !support.is_face_of(alpha) ||
        !exit.all_singletons())
        throw InvalidInput("exit " + exit.to_string() + " is not a top cell of a facet of " +
                           alpha.to_string());
    Block missing;
    std::set_difference(alpha.vertices().begin(), alpha.vertices().end(),
                        support.vertices().begin(), support.vertices().end(),
                        std::back_inserter(missing));
    CriticalSearch search(ord, exit.with_appended(missing), exit);
    auto found = search.run();
    if (found.size() != 1)
        throw ConstructionError(std::to_string(found.size()) + " paths lead from " +
                                ord.designated_label().to_string() + " to exit " +
                                exit.to_string());
    return {alpha, std::move(found.front())};
}

GradientPath project_path(const SubdividedComplex& s, const DiscreteVectorField& f,
                          const GradientPath& delta_path)
{
    GradientPath out;
    for (CellId cell : delta_path.cells) {
        CellId host = s.carrier(cell);
        if (out.cells.empty() || out.cells.back() != host)
            out.cells.push_back(host);
    }
    if (out.cells.empty())
        throw ConstructionError("cannot project an empty path");
    out.dimension = s.base().dimension_of(out.cells.front());
    if (auto why = check_gradient_path(f, out))
        throw ConstructionError("projection is not a gradient path: " + *why);
    return out;
}

GradientPath lift_path(const SubdividedComplex& s, const DiscreteVectorField& f,
                       const DeltaMorse& df, const GradientPath& base_path)
{
    if (auto why = check_gradient_path(f, base_path))
        throw InvalidInput("not a gradient path of the base field: " + *why);
    const auto& base = s.base();
    const auto& cells = base_path.cells;
    auto ordering_of = [&](CellId id) -> const CriticalOrdering& {
        auto it = df.orderings.find(id);
        if (it == df.orderings.end())
            throw InvalidInput("no ordering for critical simplex " + base.simplex(id).to_string());
        return it->second;
    };

    const std::size_t k = cells.size() / 2 - 1;  // number of pair steps
    std::vector<PathSegment> segments(k + 1);
    Label exit = ordering_of(cells.back()).designated_label();
    for (std::size_t i = k; i >= 1; --i) {
        auto ctx = NoncriticalContext::from_pair(base.simplex(cells[2 * i - 1]),
                                                 base.simplex(cells[2 * i]));
        Label entrance = entrance_from_exit(exit, ctx.coface, ctx.free_vertex);
        segments[i] = segment_through_noncritical(entrance, ctx, exit);
        exit = entrance;
    }
    segments[0] = segment_from_critical(ordering_of(cells.front()), exit);

    GradientPath out{base_path.dimension, {}};
    for (std::size_t i = 0; i <= k; ++i) {
        const auto& labels = segments[i].cells;
        for (std::size_t j = (i == 0 ? 0 : 1); j < labels.size(); ++j) {
            auto id = s.find(labels[j]);
            if (!id)
                throw ConstructionError("lifted cell " + labels[j].to_string() +
                                        " is not in the subdivision");
            out.cells.push_back(*id);
        }
    }
    if (auto why = check_gradient_path(df.field, out))
        throw ConstructionError("lifted path disagrees with the subdivided field: " + *why);
    return out;
}

BijectionReport verify_bijection(const SubdividedComplex& s, const DiscreteVectorField& f,
                                 const DeltaMorse& df, EnumerationOptions options)
{
    BijectionReport report;
    auto fail = [&](std::string msg, std::vector<std::string> path = {}) {
        if (report.first_offending_path.empty() && !path.empty())
            report.first_offending_path = std::move(path);
        report.failures.push_back(std::move(msg));
    };

    // Critical cells of the subdivided field must be exactly the designated labels.
    std::map<CellId, CellId> to_delta;
    std::map<CellId, CellId> to_base;
    for (const auto& [host, ord] : df.orderings) {
        auto id = s.find(ord.designated_label());
        if (!id) {
            fail("designated label " + ord.designated_label().to_string() + " is not a cell");
            continue;
        }
        to_delta.emplace(host, *id);
        to_base.emplace(*id, host);
        if (!df.field.is_critical(*id))
            fail("designated cell " + s.label(*id).to_string() + " of " +
                 s.base().simplex(host).to_string() + " is not critical");
    }
    for (CellId id : critical_cells(f).all())
        if (!df.orderings.contains(id))
            fail("critical simplex " + s.base().simplex(id).to_string() + " has no ordering");
    for (CellId id : critical_cells(df.field).all())
        if (!to_base.contains(id))
            fail("cell " + s.label(id).to_string() + " is critical but not designated");

    if (auto cycle = find_closed_path(df.field)) {
        std::vector<std::string> spelled;
        for (CellId id : *cycle)
            spelled.push_back(s.label(id).to_string());
        fail("subdivided field has a closed path", spelled);
        return report;
    }

    const auto base_paths = gradient_paths(f, options);
    const auto delta_paths = gradient_paths(df.field, options);
    report.base_total = base_paths.size();
    report.delta_total = delta_paths.size();
    const std::set<GradientPath> base_set(base_paths.begin(), base_paths.end());
    const std::set<GradientPath> delta_set(delta_paths.begin(), delta_paths.end());

    using Key = std::tuple<int, CellId, CellId>;
    std::map<Key, EndpointTally> tallies;
    auto tally = [&](int dim, CellId src, CellId tgt) -> EndpointTally& {
        auto [it, fresh] = tallies.try_emplace(Key{dim, src, tgt});
        if (fresh)
            it->second = EndpointTally{dim, src, tgt};
        return it->second;
    };

    for (const GradientPath& p : base_paths) {
        EndpointTally& t = tally(p.dimension, p.source(), p.target());
        ++t.base_paths;
        try {
            GradientPath lifted = lift_path(s, f, df, p);
            if (!delta_set.contains(lifted)) {
                t.round_trips_ok = false;
                fail("lift is not an enumerated gradient path", spell(s, lifted));
            }
            if (lifted.source() != to_delta.at(p.source()) ||
                lifted.target() != to_delta.at(p.target())) {
                t.round_trips_ok = false;
                fail("lift does not join the designated cells", spell(s, lifted));
            }
            if (project_path(s, f, lifted) != p) {
                t.round_trips_ok = false;
                fail("projecting the lift does not return the path", spell(s.base(), p));
            }
        } catch (const std::exception& e) {
            t.round_trips_ok = false;
            fail(std::string("lift failed: ") + e.what(), spell(s.base(), p));
        }
    }

    for (const GradientPath& p : delta_paths) {
        auto src = to_base.find(p.source());
        auto tgt = to_base.find(p.target());
        if (src == to_base.end() || tgt == to_base.end()) {
            fail("path endpoints are not designated cells", spell(s, p));
            continue;
        }
        EndpointTally& t = tally(p.dimension, src->second, tgt->second);
        ++t.delta_paths;
        for (std::size_t i = 0; i < p.cells.size(); i += 2) {
            if (s.base().dimension_of(s.carrier(p.cells[i])) != p.dimension) {
                t.round_trips_ok = false;
                fail("cell " + s.label(p.cells[i]).to_string() +
                         " lies inside a simplex of another dimension",
                     spell(s, p));
                break;
            }
        }
        try {
            GradientPath projected = project_path(s, f, p);
            if (!base_set.contains(projected)) {
                t.round_trips_ok = false;
                fail("projection is not an enumerated gradient path", spell(s, p));
            } else if (lift_path(s, f, df, projected) != p) {
                t.round_trips_ok = false;
                fail("lifting the projection does not return the path", spell(s, p));
            }
        } catch (const std::exception& e) {
            t.round_trips_ok = false;
            fail(std::string("projection failed: ") + e.what(), spell(s, p));
        }
    }

    for (auto& [key, t] : tallies) {
        if (t.base_paths != t.delta_paths)
            fail(std::to_string(t.base_paths) + " base paths but " + std::to_string(t.delta_paths) +
                 " subdivided paths from " + s.base().simplex(t.source).to_string() + " to " +
                 s.base().simplex(t.target).to_string());
        report.tallies.push_back(t);
    }
    report.success = report.failures.empty();
    return report;
}

}  // namespace dmt
