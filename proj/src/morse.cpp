#include "dmt/morse.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <sstream>

namespace dmt {
namespace {

constexpr CellId kUnmatched = std::numeric_limits<CellId>::max();

bool is_facet_id(const SimplicialComplex& c, CellId face, CellId coface)
{
    auto fs = c.facet_ids(coface);
    return std::find(fs.begin(), fs.end(), face) != fs.end();
}

// Successors of a face `a` matched upward: the other facets of its partner
// that are themselves matched upward.
template <typename Fn>
void for_each_successor(const SimplicialComplex& c, std::span<const CellId> partner, CellId a,
                        Fn&& fn)
{
    CellId b = partner[a];
    for (CellId next : c.facet_ids(b)) {
        if (next == a)
            continue;
        CellId p = partner[next];
        if (p != kUnmatched && c.dimension_of(p) > c.dimension_of(next))
            fn(next);
    }
}

bool matched_up(const SimplicialComplex& c, std::span<const CellId> partner, CellId a)
{
    return partner[a] != kUnmatched && c.dimension_of(partner[a]) > c.dimension_of(a);
}

std::optional<std::vector<CellId>> closed_path(const SimplicialComplex& c,
                                               std::span<const CellId> partner)
{
    enum : unsigned char { kWhite, kGrey, kBlack };
    std::vector<unsigned char> color(c.size(), kWhite);

    struct Frame {
        CellId node;
        std::vector<CellId> succ;
        std::size_t next = 0;
    };
    auto successors = [&](CellId a) {
        std::vector<CellId> out;
        for_each_successor(c, partner, a, [&](CellId n) { out.push_back(n); });
        return out;
    };

    for (CellId root = 0; root < c.size(); ++root) {
        if (color[root] != kWhite || !matched_up(c, partner, root))
            continue;
        std::vector<Frame> stack;
        stack.push_back({root, successors(root)});
        color[root] = kGrey;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == top.succ.size()) {
                color[top.node] = kBlack;
                stack.pop_back();
                continue;
            }
            CellId n = top.succ[top.next++];
            if (color[n] == kGrey) {
                std::vector<CellId> cycle;
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [&](const Frame& fr) { return fr.node == n; });
                for (; it != stack.end(); ++it)
                    cycle.push_back(it->node);
                cycle.push_back(n);
                return cycle;
            }
            if (color[n] == kWhite) {
                color[n] = kGrey;
                stack.push_back({n, successors(n)});
            }
        }
    }
    return std::nullopt;
}

// True if adding the pair (a, b) to `partner` would close a V-path through a.
bool closes_cycle(const SimplicialComplex& c, std::vector<CellId>& partner, CellId a, CellId b)
{
    partner[a] = b;
    partner[b] = a;
    std::vector<CellId> stack;
    std::vector<bool> seen(c.size(), false);
    for_each_successor(c, partner, a, [&](CellId n) {
        if (!seen[n]) {
            seen[n] = true;
            stack.push_back(n);
        }
    });
    bool cycle = false;
    while (!stack.empty() && !cycle) {
        CellId x = stack.back();
        stack.pop_back();
        if (x == a) {
            cycle = true;
            break;
        }
        for_each_successor(c, partner, x, [&](CellId n) {
            if (!seen[n]) {
                seen[n] = true;
                stack.push_back(n);
            }
        });
    }
    partner[a] = kUnmatched;
    partner[b] = kUnmatched;
    return cycle;
}

class PathEnumerator {
public:
    PathEnumerator(const DiscreteVectorField& f) : f_(f), cap_(f.complex().size() + 1) {}

    std::vector<GradientPath> from_source(CellId source)
    {
        out_.clear();
        path_.assign(1, source);
        dimension_ = f_.complex().dimension_of(source);
        extend(source, kUnmatched);
        return std::move(out_);
    }

private:
    void extend(CellId beta, CellId previous_alpha)
    {
        if (path_.size() > cap_)
            throw InvalidField("gradient path exceeds " + std::to_string(cap_) + " cells");
        const auto& c = f_.complex();
        std::vector<CellId> fs(c.facet_ids(beta).begin(), c.facet_ids(beta).end());
        std::sort(fs.begin(), fs.end());
        for (CellId alpha : fs) {
            if (alpha == previous_alpha)
                continue;
            if (f_.is_critical(alpha)) {
                path_.push_back(alpha);
                out_.push_back({dimension_, path_});
                path_.pop_back();
            } else if (auto next = f_.up_partner(alpha)) {
                path_.push_back(alpha);
                path_.push_back(*next);
                extend(*next, alpha);
                path_.pop_back();
                path_.pop_back();
            }
        }
    }

    const DiscreteVectorField& f_;
    std::size_t cap_;
    int dimension_ = 0;
    std::vector<CellId> path_;
    std::vector<GradientPath> out_;
};

}  // namespace

DiscreteVectorField::DiscreteVectorField(ComplexPtr c, std::vector<CellPair> pairs,
                                         std::vector<CellId> partner)
    : complex_(std::move(c)), pairs_(std::move(pairs)), partner_(std::move(partner))
{
}

std::optional<CellId> DiscreteVectorField::partner(CellId id) const
{
    CellId p = partner_.at(id);
    if (p == kUnmatched)
        return std::nullopt;
    return p;
}

std::optional<CellId> DiscreteVectorField::up_partner(CellId id) const
{
    auto p = partner(id);
    if (p && complex_->dimension_of(*p) > complex_->dimension_of(id))
        return p;
    return std::nullopt;
}

std::optional<CellId> DiscreteVectorField::down_partner(CellId id) const
{
    auto p = partner(id);
    if (p && complex_->dimension_of(*p) < complex_->dimension_of(id))
        return p;
    return std::nullopt;
}

DiscreteVectorField validate_field(ComplexPtr c, std::vector<CellPair> pairs)
{
    if (!c)
        throw InvalidField("vector field needs a complex");
    std::vector<CellId> partner(c->size(), kUnmatched);
    auto name = [&](CellPair p) {
        auto show = [&](CellId id) {
            return id < c->size() ? c->simplex(id).to_string() : "#" + std::to_string(id);
        };
        return "(" + show(p.face) + ", " + show(p.coface) + ")";
    };
    for (const CellPair& p : pairs) {
        if (p.face >= c->size() || p.coface >= c->size())
            throw InvalidField("pair " + name(p) + " refers to a simplex outside the complex");
        if (!is_facet_id(*c, p.face, p.coface))
            throw InvalidField("pair " + name(p) + ": " + c->simplex(p.face).to_string() +
                               " is not a facet of " + c->simplex(p.coface).to_string());
        for (CellId id : {p.face, p.coface}) {
            if (partner[id] != kUnmatched)
                throw InvalidField("simplex " + c->simplex(id).to_string() +
                                   " is matched more than once");
        }
        partner[p.face] = p.coface;
        partner[p.coface] = p.face;
    }
    std::sort(pairs.begin(), pairs.end());
    return DiscreteVectorField(std::move(c), std::move(pairs), std::move(partner));
}

DiscreteVectorField validate_field(ComplexPtr c,
                                   const std::vector<std::pair<Simplex, Simplex>>& pairs)
{
    if (!c)
        throw InvalidField("vector field needs a complex");
    std::vector<CellPair> ids;
    ids.reserve(pairs.size());
    for (const auto& [face, coface] : pairs) {
        auto a = c->find(face);
        auto b = c->find(coface);
        if (!a || !b)
            throw InvalidField("pair (" + face.to_string() + ", " + coface.to_string() +
                               ") refers to a simplex outside the complex");
        ids.push_back({*a, *b});
    }
    return validate_field(std::move(c), std::move(ids));
}

std::optional<std::vector<CellId>> find_closed_path(const DiscreteVectorField& f)
{
    std::vector<CellId> partner(f.complex().size(), kUnmatched);
    for (const CellPair& p : f.pairs()) {
        partner[p.face] = p.coface;
        partner[p.coface] = p.face;
    }
    return closed_path(f.complex(), partner);
}

bool is_morse(const DiscreteVectorField& f)
{
    return !find_closed_path(f).has_value();
}

std::size_t CriticalSet::total() const
{
    std::size_t n = 0;
    for (const auto& d : by_dimension)
        n += d.size();
    return n;
}

std::size_t CriticalSet::count(int dim) const
{
    if (dim < 0 || static_cast<std::size_t>(dim) >= by_dimension.size())
        return 0;
    return by_dimension[static_cast<std::size_t>(dim)].size();
}

std::vector<CellId> CriticalSet::all() const
{
    std::vector<CellId> out;
    for (const auto& d : by_dimension)
        out.insert(out.end(), d.begin(), d.end());
    return out;
}

CriticalSet critical_cells(const DiscreteVectorField& f)
{
    const auto& c = f.complex();
    CriticalSet out;
    out.by_dimension.resize(static_cast<std::size_t>(c.dimension() + 1));
    for (CellId id = 0; id < c.size(); ++id)
        if (f.is_critical(id))
            out.by_dimension[static_cast<std::size_t>(c.dimension_of(id))].push_back(id);
    return out;
}

std::optional<std::string> check_gradient_path(const DiscreteVectorField& f,
                                               const GradientPath& path)
{
    const auto& c = f.complex();
    const auto& cells = path.cells;
    if (cells.size() < 2 || cells.size() % 2 != 0)
        return "a gradient path has an even number of cells, at least two";
    for (CellId id : cells)
        if (id >= c.size())
            return "cell #" + std::to_string(id) + " is not in the complex";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int want = i % 2 == 0 ? path.dimension : path.dimension - 1;
        if (c.dimension_of(cells[i]) != want)
            return "cell " + c.simplex(cells[i]).to_string() + " at position " +
                   std::to_string(i) + " has the wrong dimension";
    }
    if (!f.is_critical(cells.front()))
        return "source " + c.simplex(cells.front()).to_string() + " is not critical";
    if (!f.is_critical(cells.back()))
        return "target " + c.simplex(cells.back()).to_string() + " is not critical";
    for (std::size_t i = 0; i + 1 < cells.size(); i += 2) {
        if (!is_facet_id(c, cells[i + 1], cells[i]))
            return c.simplex(cells[i + 1]).to_string() + " is not a facet of " +
                   c.simplex(cells[i]).to_string();
    }
    for (std::size_t i = 1; i + 1 < cells.size(); i += 2) {
        if (f.up_partner(cells[i]) != cells[i + 1])
            return "(" + c.simplex(cells[i]).to_string() + ", " +
                   c.simplex(cells[i + 1]).to_string() + ") is not a pair of the field";
        if (cells[i] == cells[i + 2])
            return "face " + c.simplex(cells[i]).to_string() + " repeats across a pair step";
    }
    return std::nullopt;
}

std::vector<GradientPath> gradient_paths(const DiscreteVectorField& f,
                                         EnumerationOptions options)
{
    if (auto cycle = find_closed_path(f))
        throw InvalidField("field has a closed path through " +
                           describe_cells(f.complex(), *cycle));
    std::vector<CellId> sources;
    for (CellId id = 0; id < f.complex().size(); ++id)
        if (f.complex().dimension_of(id) > 0 && f.is_critical(id))
            sources.push_back(id);

    std::vector<GradientPath> out;
    if (!options.parallel) {
        PathEnumerator e(f);
        for (CellId s : sources) {
            auto part = e.from_source(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    std::vector<std::future<std::vector<GradientPath>>> jobs;
    jobs.reserve(sources.size());
    for (CellId s : sources)
        jobs.push_back(std::async(std::launch::async, [&f, s] {
            PathEnumerator e(f);
            return e.from_source(s);
        }));
    for (auto& j : jobs) {
        auto part = j.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

DiscreteVectorField random_morse(ComplexPtr c, std::uint64_t seed)
{
    std::vector<CellPair> candidates;
    for (CellId b = 0; b < c->size(); ++b)
        for (CellId a : c->facet_ids(b))
            candidates.push_back({a, b});
    std::sort(candidates.begin(), candidates.end());

    // Fisher-Yates driven directly by the engine output, so the order is the
    // same for every standard library.
    std::mt19937_64 rng(seed);
    for (std::size_t i = candidates.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(candidates[i - 1], candidates[j]);
    }

    std::vector<CellId> partner(c->size(), kUnmatched);
    std::vector<CellPair> accepted;
    for (const CellPair& p : candidates) {
        if (partner[p.face] != kUnmatched || partner[p.coface] != kUnmatched)
            continue;
        if (closes_cycle(*c, partner, p.face, p.coface))
            continue;
        partner[p.face] = p.coface;
        partner[p.coface] = p.face;
        accepted.push_back(p);
    }
    return validate_field(std::move(c), std::move(accepted));
}

std::string describe_cells(const SimplicialComplex& c, std::span<const CellId> cells)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            os << " -> ";
        os << c.simplex(cells[i]).to_string();
    }
    return os.str();
}

}  // namespace dmt
