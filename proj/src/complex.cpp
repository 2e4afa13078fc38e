#include "dmt/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dmt {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw InvalidInput("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
        throw InvalidInput("simplex lists vertex " + std::to_string(*dup) + " twice");
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices))
{
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

Simplex Simplex::without(VertexId v) const
{
    if (!contains(v))
        throw InvalidInput("vertex " + std::to_string(v) + " is not in " + to_string());
    if (vertices_.size() == 1)
        throw InvalidInput("a vertex has no facets");
    std::vector<VertexId> rest;
    rest.reserve(vertices_.size() - 1);
    for (VertexId u : vertices_)
        if (u != v)
            rest.push_back(u);
    return Simplex(std::move(rest));
}

std::string Simplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i)
            os << ',';
        os << vertices_[i];
    }
    os << '}';
    return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return a.vertices_ <=> b.vertices_;
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> closed_sorted)
    : simplices_(std::move(closed_sorted))
{
    const std::size_t n = simplices_.size();
    for (CellId id = 0; id < n; ++id) {
        index_.emplace(simplices_[id], id);
        const auto dim = static_cast<std::size_t>(simplices_[id].dimension());
        while (dim_offsets_.size() <= dim)
            dim_offsets_.push_back(id);
    }
    dim_offsets_.push_back(n);

    facets_.resize(n);
    cofacets_.resize(n);
    for (CellId id = 0; id < n; ++id) {
        const Simplex& s = simplices_[id];
        if (s.dimension() == 0)
            continue;
        for (VertexId v : s.vertices()) {
            CellId f = index_.at(s.without(v));
            facets_[id].push_back(f);
            cofacets_[f].push_back(id);
        }
    }
    for (auto& cof : cofacets_)
        std::sort(cof.begin(), cof.end());
}

std::optional<CellId> SimplicialComplex::find(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

CellId SimplicialComplex::id_of(const Simplex& s) const
{
    if (auto id = find(s))
        return *id;
    throw InvalidInput("simplex " + s.to_string() + " is not in the complex");
}

std::size_t SimplicialComplex::count(int dim) const
{
    return end_of_dimension(dim) - first_of_dimension(dim);
}

CellId SimplicialComplex::first_of_dimension(int dim) const
{
    if (dim < 0)
        return 0;
    if (dim > dimension())
        return size();
    return dim_offsets_[static_cast<std::size_t>(dim)];
}

CellId SimplicialComplex::end_of_dimension(int dim) const
{
    if (dim < 0)
        return 0;
    if (dim > dimension())
        return size();
    return dim_offsets_[static_cast<std::size_t>(dim) + 1];
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    std::vector<Simplex> out;
    for (CellId id = 0; id < size(); ++id)
        if (cofacets_[id].empty())
            out.push_back(simplices_[id]);
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal)
{
    std::set<Simplex> closed;
    std::vector<Simplex> stack;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        if (maximal[i].empty())
            throw InvalidInput("input simplex #" + std::to_string(i) + " is empty");
        stack.emplace_back(maximal[i]);
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(s).second)
            continue;
        if (s.dimension() > 0)
            for (VertexId v : s.vertices())
                stack.push_back(s.without(v));
    }
    return SimplicialComplex(std::vector<Simplex>(closed.begin(), closed.end()));
}

ComplexPtr make_complex(const std::vector<std::vector<VertexId>>& maximal)
{
    return std::make_shared<const SimplicialComplex>(build_complex(maximal));
}

std::vector<Simplex> facets(const SimplicialComplex& c, const Simplex& s)
{
    std::vector<Simplex> out;
    for (CellId f : c.facet_ids(c.id_of(s)))
        out.push_back(c.simplex(f));
    return out;
}

long euler_characteristic(const SimplicialComplex& c)
{
    long chi = 0;
    for (int d = 0; d <= c.dimension(); ++d)
        chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(c.count(d));
    return chi;
}

}  // namespace dmt
