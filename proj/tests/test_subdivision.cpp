#include <doctest.h>

#include <set>

#include "dmt/corpus.hpp"
#include "dmt/homology.hpp"
#include "dmt/subdivision.hpp"
#include "oracles.hpp"
#include "support.hpp"

using dmt::Label;
using dmt::Simplex;

namespace {

// Letters of the alphabet as vertex ids.
constexpr dmt::VertexId a = 1, d = 4, f = 6, t = 20;

std::vector<std::size_t> delta_counts(const dmt::SubdividedComplex& s)
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= s.delta().dimension(); ++k)
        out.push_back(s.delta().count(k));
    return out;
}

std::set<oracle::VertexSet> as_sets(const dmt::SimplicialComplex& c)
{
    std::set<oracle::VertexSet> out;
    for (const auto& s : c.simplices())
        out.insert(s.vertices());
    return out;
}

}  // namespace

TEST_CASE("subdivision counts")
{
    auto s = dmt::barycentric_subdivide(dmt::make_complex({{1, 2, 3}}));
    CHECK(delta_counts(s) == std::vector<std::size_t>{7, 12, 6});
    CHECK(delta_counts(s) == oracle::chain_counts(oracle::subset_closure({{1, 2, 3}})));

    auto v = dmt::barycentric_subdivide(dmt::make_complex({{5}}));
    CHECK(delta_counts(v) == std::vector<std::size_t>{1});

    auto e = dmt::barycentric_subdivide(dmt::make_complex({{1, 2}}));
    CHECK(delta_counts(e) == std::vector<std::size_t>{3, 2});
}

TEST_CASE("labels of chains")
{
    dmt::Chain chain{{a, f}, {a, d, f}, {a, d, f, t}};
    CHECK(dmt::label_from_chain(chain) == Label{{a, f}, {d}, {t}});
    CHECK(dmt::chain_from_label(Label{{a, f}, {d}, {t}}) == chain);
    CHECK(dmt::label_from_chain({{1}}) == Label{{1}});
    CHECK(dmt::label_from_chain({{2}, {1, 2}, {1, 2, 3}}) == Label{{2}, {1}, {3}});
    CHECK(Label{{3, 4}, {1}}.to_string() == "({3,4} {1})");
    CHECK_THROWS_AS(Label({{1, 2}, {2}}), dmt::InvalidInput);
    CHECK_THROWS_AS(Label(std::vector<dmt::Block>{{1}, {}}), dmt::InvalidInput);
    CHECK_THROWS_AS(dmt::label_from_chain({{1, 2}, {1}}), dmt::InvalidInput);
}

TEST_CASE("faces of a labelled triangle")
{
    auto faces = dmt::faces_of_label(Label{{a, f}, {d}, {t}});
    std::set<Label> edges, vertices;
    for (const auto& l : faces) {
        if (l.dimension() == 1)
            edges.insert(l);
        if (l.dimension() == 0)
            vertices.insert(l);
    }
    CHECK(edges == std::set<Label>{Label{{a, f}, {d, t}}, Label{{a, f, d}, {t}},
                                   Label{{a, f}, {d}}});
    CHECK(vertices == std::set<Label>{Label{{a, f, d, t}}, Label{{a, f, d}}, Label{{a, f}}});
    CHECK(faces.size() == 7);

    auto small = dmt::faces_of_label(Label{{1}, {2}});
    CHECK(std::set<Label>(small.begin(), small.end()) ==
          std::set<Label>{Label{{1}, {2}}, Label{{1, 2}}, Label{{1}}});
}

TEST_CASE("carriers")
{
    auto s = dmt::barycentric_subdivide(dmt::make_complex({{1, 2, 3}}));
    const auto& base = s.base();
    auto vid = [&](Simplex x) { return static_cast<dmt::VertexId>(base.id_of(x)); };

    CHECK(dmt::carrier(s, Simplex{vid({1}), vid({1, 2}), vid({1, 2, 3})}) == Simplex{1, 2, 3});
    CHECK(dmt::carrier(s, Simplex{vid({1, 2})}) == Simplex{1, 2});
    CHECK(dmt::carrier(s, Simplex{vid({1}), vid({1, 3})}) == Simplex{1, 3});
    CHECK(dmt::label_of(s, Simplex{vid({1}), vid({1, 3})}) == Label{{1}, {3}});
    CHECK_THROWS_AS(dmt::label_of(s, Simplex{vid({1}), vid({2})}), dmt::InvalidInput);
}

TEST_CASE("subdivision invariants over the corpus")
{
    std::vector<std::vector<std::vector<dmt::VertexId>>> inputs;
    for (const auto& e : dmt::builtin_corpus())
        if (e.name != "simplex4" && e.name != "sphere3")
            inputs.push_back(e.maximal_simplices);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        inputs.push_back(dmt::random_2_complex(5, seed));

    for (const auto& input : inputs) {
        auto base = dmt::make_complex(input);
        auto s = dmt::barycentric_subdivide(base);
        const auto& delta = s.delta();

        // Counts against brute-force chain enumeration, and the DP counter.
        auto chains = oracle::chain_counts(oracle::subset_closure(input));
        CHECK(delta_counts(s) == chains);
        CHECK(dmt::count_chains(*base) == chains);

        CHECK(dmt::euler_characteristic(delta) == dmt::euler_characteristic(*base));
        CHECK(dmt::betti_gf2(delta) == dmt::betti_gf2(*base));

        std::vector<std::size_t> seen(delta.size(), 0);
        for (dmt::CellId b = 0; b < base->size(); ++b)
            for (dmt::CellId cell : s.interior(b)) {
                CHECK(s.carrier(cell) == b);
                ++seen[cell];
            }
        for (auto n : seen)
            CHECK(n == 1);

        for (dmt::CellId cell = 0; cell < delta.size(); ++cell) {
            const Label& l = s.label(cell);
            CHECK(dmt::label_from_chain(dmt::chain_from_label(l)) == l);
            CHECK(s.id_of(l) == cell);
            CHECK(dmt::label_of(s, delta.simplex(cell)) == l);
            CHECK(l.support() == base->simplex(s.carrier(cell)));
        }
    }
}

TEST_CASE("three descriptions of the face relation agree")
{
    for (const char* name : {"simplex2", "hollow_triangle", "simplex3"}) {
        CAPTURE(name);
        auto s = dmt::barycentric_subdivide(testing::corpus_complex(name));
        const auto& delta = s.delta();
        for (dmt::CellId cell = 0; cell < delta.size(); ++cell) {
            const Label& l = s.label(cell);
            auto listed = dmt::faces_of_label(l);
            std::set<Label> by_list(listed.begin(), listed.end());
            for (dmt::CellId other = 0; other < delta.size(); ++other) {
                const Label& m = s.label(other);
                bool geometric = delta.simplex(other).is_face_of(delta.simplex(cell));
                CHECK(geometric == by_list.contains(m));
                CHECK(geometric == oracle::is_face_by_refinement(m, l));
            }
        }
        CHECK(as_sets(delta).size() == delta.size());
    }
}
