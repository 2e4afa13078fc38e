#include "dmt/corpus.hpp"

#include <random>

namespace dmt {
namespace {

std::vector<std::vector<VertexId>> full_simplex(VertexId n)
{
    std::vector<VertexId> all;
    for (VertexId v = 1; v <= n + 1; ++v)
        all.push_back(v);
    return {all};
}

std::vector<std::vector<VertexId>> simplex_boundary(VertexId n)
{
    std::vector<std::vector<VertexId>> out;
    for (VertexId skip = 1; skip <= n + 1; ++skip) {
        std::vector<VertexId> f;
        for (VertexId v = 1; v <= n + 1; ++v)
            if (v != skip)
                f.push_back(v);
        out.push_back(f);
    }
    return out;
}

std::vector<CorpusEntry> make_corpus()
{
    std::vector<CorpusEntry> c;
    for (VertexId n = 0; n <= 4; ++n) {
        std::vector<std::size_t> b(n + 1, 0);
        b[0] = 1;
        c.push_back({"simplex" + std::to_string(n), full_simplex(n), b});
    }
    for (VertexId n = 1; n <= 4; ++n) {
        std::vector<std::size_t> b(n, 0);
        if (n == 1) {
            b[0] = 2;
        } else {
            b[0] = 1;
            b[n - 1] = 1;
        }
        c.push_back({"sphere" + std::to_string(n - 1), simplex_boundary(n), b});
    }
    c.push_back({"hollow_triangle", {{1, 2}, {2, 3}, {1, 3}}, std::vector<std::size_t>{1, 1}});
    c.push_back({"projective_plane",
                 {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                  {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}},
                 std::vector<std::size_t>{1, 1, 1}});
    std::vector<std::vector<VertexId>> torus;
    for (VertexId i = 0; i < 7; ++i) {
        torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    c.push_back({"torus", torus, std::vector<std::size_t>{1, 2, 1}});
    for (std::uint64_t seed : {11u, 23u, 47u})
        c.push_back({"random2_" + std::to_string(seed), random_2_complex(6, seed), std::nullopt});
    return c;
}

}  // namespace

std::vector<std::vector<VertexId>> random_2_complex(std::size_t vertices, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<VertexId>> out;
    const auto n = static_cast<VertexId>(vertices);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                if (rng() % 3 == 0)
                    out.push_back({a, b, c});
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (rng() % 6 == 0)
                out.push_back({a, b});
    for (VertexId v = 0; v < n; ++v)
        out.push_back({v});
    return out;
}

const std::vector<CorpusEntry>& builtin_corpus()
{
    static const std::vector<CorpusEntry> corpus = make_corpus();
    return corpus;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name)
{
    for (const auto& e : builtin_corpus())
        if (e.name == name)
            return e;
    return std::nullopt;
}

}  // namespace dmt
