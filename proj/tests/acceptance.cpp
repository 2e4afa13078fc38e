// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dmt/commands.hpp"
#include "dmt/corpus.hpp"
#include "dmt/homology.hpp"
#include "dmt/io.hpp"
#include "dmt/paths.hpp"
#include "oracles.hpp"
#include "support.hpp"

using dmt::CriticalOrdering;
using dmt::Label;
using dmt::Simplex;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSeeds = 100;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why)
    {
        if (!cond)
            fail(why);
    }
};

std::string show(const std::vector<Label>& labels)
{
    std::string out;
    for (const auto& l : labels)
        out += (out.empty() ? "" : " ") + l.to_string();
    return out;
}

Outcome faces_example()
{
    constexpr dmt::VertexId a = 1, d = 4, f = 6, t = 20;
    Outcome o;
    auto faces = dmt::faces_of_label(Label{{a, f}, {d}, {t}});
    std::set<Label> edges, vertices;
    for (const auto& l : faces)
        (l.dimension() == 1 ? edges : vertices).insert(l);
    vertices.erase(Label{{a, f}, {d}, {t}});
    o.expect(edges == std::set<Label>{Label{{a, f}, {d, t}}, Label{{a, f, d}, {t}},
                                      Label{{a, f}, {d}}},
             "edges differ");
    o.expect(vertices == std::set<Label>{Label{{a, f, d, t}}, Label{{a, f, d}}, Label{{a, f}}},
             "vertices differ");
    o.detail = o.ok ? "3 edges, 3 vertices" : o.detail;
    return o;
}

Outcome noncritical_example()
{
    Outcome o;
    auto m1 = dmt::pair_noncritical(Label{{1}, {3, 4}, {2, 5}}, 5);
    o.expect(m1.partner == Label{{1}, {3, 4}, {5}, {2}} && m1.kind == dmt::NoncriticalCase::kSplit,
             "split pair: got " + m1.partner.to_string());
    auto m2 = dmt::pair_noncritical(Label{{1}, {3, 4}, {2}}, 5);
    o.expect(m2.partner == Label{{1}, {3, 4}, {2}, {5}} && m2.kind == dmt::NoncriticalCase::kAppend,
             "append pair: got " + m2.partner.to_string());
    return o;
}

Outcome forced_segment_example()
{
    const std::vector<Label> expected{
        Label{{1}, {3}, {4}, {2}},      Label{{1}, {3}, {4}, {2}, {5}},
        Label{{1}, {3}, {4}, {2, 5}},   Label{{1}, {3}, {4}, {5}, {2}},
        Label{{1}, {3}, {4, 5}, {2}},   Label{{1}, {3}, {5}, {4}, {2}},
        Label{{1}, {3}, {5}, {4}},
    };
    Outcome o;
    auto ctx = dmt::NoncriticalContext::from_pair(Simplex{1, 2, 3, 4}, Simplex{1, 2, 3, 4, 5});
    auto seg = dmt::segment_through_noncritical(expected.front(), ctx, expected.back());
    o.expect(seg.cells == expected, "got " + show(seg.cells));
    return o;
}

Outcome critical_pairs_example()
{
    Outcome o;
    CriticalOrdering ord(Simplex{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1});
    auto m1 = dmt::pair_critical(Label{{1, 2}, {3}, {4, 5}}, ord);
    o.expect(m1.partner == Label{{1}, {2}, {3}, {4, 5}} && m1.suffix_length == 0,
             "first pair differs");
    auto m2 = dmt::pair_critical(Label{{4, 5}, {3}, {2}, {1}}, ord);
    o.expect(m2.partner == Label{{4}, {5}, {3}, {2}, {1}} && m2.suffix_length == 3,
             "second pair differs");
    return o;
}

Outcome critical_segment_example()
{
    const std::vector<Label> expected{
        Label{{5}, {4}, {3}, {2}, {1}}, Label{{4, 5}, {3}, {2}, {1}},
        Label{{4}, {5}, {3}, {2}, {1}}, Label{{4}, {5}, {2, 3}, {1}},
        Label{{4}, {5}, {2}, {3}, {1}}, Label{{4}, {2, 5}, {3}, {1}},
        Label{{4}, {2}, {5}, {3}, {1}}, Label{{2, 4}, {5}, {3}, {1}},
        Label{{2}, {4}, {5}, {3}, {1}}, Label{{2}, {4}, {5}, {1, 3}},
        Label{{2}, {4}, {5}, {1}, {3}}, Label{{2}, {4}, {5}, {1}},
    };
    Outcome o;
    CriticalOrdering ord(Simplex{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1});
    auto seg = dmt::segment_from_critical(ord, expected.back());
    o.expect(seg.cells == expected, "got " + show(seg.cells));
    return o;
}

Outcome entrance_example()
{
    Outcome o;
    auto in = dmt::entrance_from_exit(Label{{1}, {3}, {5}, {4}}, Simplex{1, 2, 3, 4, 5}, 5);
    o.expect(in == Label{{1}, {3}, {4}, {2}}, "got " + in.to_string());
    return o;
}

// Criteria 7-9 share one sweep over the corpus.
struct Sweep {
    Outcome critical_match;
    Outcome path_match;
    Outcome structural;
    std::size_t runs = 0;
    std::size_t base_paths = 0;
};

Sweep run_sweep()
{
    Sweep sw;
    for (const auto& entry : dmt::builtin_corpus()) {
        auto c = dmt::make_complex(entry.maximal_simplices);
        auto s = dmt::barycentric_subdivide(c);
        auto betti = dmt::betti_gf2(*c);
        const std::string where = entry.name;

        std::vector<std::size_t> counts;
        for (int k = 0; k <= s.delta().dimension(); ++k)
            counts.push_back(s.delta().count(k));
        sw.structural.expect(counts == oracle::chain_counts(oracle::subset_closure(
                                           entry.maximal_simplices)),
                             where + ": subdivision counts differ from chain enumeration");
        sw.structural.expect(dmt::euler_characteristic(s.delta()) == dmt::euler_characteristic(*c),
                             where + ": euler characteristic changed");

        for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
            const std::string tag = where + " seed " + std::to_string(seed);
            auto f = dmt::random_morse(c, seed);
            auto crit = dmt::critical_cells(f);
            long alternating = 0;
            for (int d = 0; d <= c->dimension(); ++d) {
                alternating += (d % 2 ? -1L : 1L) * static_cast<long>(crit.count(d));
                sw.structural.expect(crit.count(d) >= betti[static_cast<std::size_t>(d)],
                                     tag + ": weak Morse inequality fails in dimension " +
                                         std::to_string(d));
            }
            sw.structural.expect(alternating == dmt::euler_characteristic(*c),
                                 tag + ": alternating critical count differs from euler");

            std::optional<dmt::DeltaMorse> df;
            try {
                df = dmt::build_delta_morse(s, f, dmt::default_orderings(f));
            } catch (const std::exception& e) {
                // Nothing downstream can be checked without the construction.
                sw.critical_match.fail(tag + ": " + e.what());
                sw.path_match.fail(tag + ": no subdivided field to compare against");
                sw.structural.fail(tag + ": no subdivided field to count");
                continue;
            }
            ++sw.runs;
            sw.critical_match.expect(dmt::is_morse(df->field), tag + ": closed path");
            auto dcrit = dmt::critical_cells(df->field);
            std::set<dmt::CellId> designated;
            for (const auto& [host, cell] : df->designated) {
                designated.insert(cell);
                sw.critical_match.expect(
                    s.label(cell) == df->orderings.at(host).designated_label(),
                    tag + ": designated cell has the wrong label");
            }
            auto all = dcrit.all();
            sw.critical_match.expect(std::set<dmt::CellId>(all.begin(), all.end()) == designated,
                                       tag + ": critical cells differ from the designated ones");
            for (int d = 0; d <= c->dimension(); ++d)
                sw.critical_match.expect(crit.count(d) == dcrit.count(d),
                                           tag + ": critical counts differ in dimension " +
                                               std::to_string(d));

            auto report = dmt::verify_bijection(s, f, *df);
            sw.base_paths += report.base_total;
            std::string why = report.failures.empty() ? "" : ": " + report.failures.front();
            sw.path_match.expect(report.success, tag + why);
            for (const auto& t : report.tallies)
                sw.path_match.expect(t.base_paths == t.delta_paths && t.round_trips_ok,
                                        tag + ": endpoint pair mismatch");

            long delta_alternating = 0;
            for (int d = 0; d <= c->dimension(); ++d)
                delta_alternating += (d % 2 ? -1L : 1L) * static_cast<long>(dcrit.count(d));
            sw.structural.expect(delta_alternating == dmt::euler_characteristic(s.delta()),
                                 tag + ": subdivided critical count differs from euler");
        }
    }
    return sw;
}

struct Verdict {
    int code;
    std::string summary;
};

Verdict verify(dmt::RunConfig cfg)
{
    cfg.command = "verify";
    std::ostringstream out, err;
    int code = dmt::run_command(cfg, out, err);
    return {code, err.str()};
}

// A failure counts only with a nonzero status and a named cell or simplex.
bool named_failure(const Verdict& v, const std::string& check)
{
    return v.code == dmt::kExitVerificationFailed &&
           v.summary.find(check + ": ") != std::string::npos &&
           (v.summary.find("({") != std::string::npos || v.summary.find(" {") != std::string::npos);
}

Outcome negative_controls(std::size_t& mutations)
{
    Outcome o;
    testing::TempDir dir;
    for (const auto& entry : dmt::builtin_corpus()) {
        auto c = dmt::make_complex(entry.maximal_simplices);
        auto s = dmt::barycentric_subdivide(c);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const std::string tag = entry.name + " seed " + std::to_string(seed);
            auto f = dmt::random_morse(c, seed);
            auto table = dmt::resolve_orderings(f, dmt::default_orderings(f));
            auto df = dmt::build_delta_morse(s, f, dmt::default_orderings(f));

            dmt::RunConfig base;
            base.complex = dir.write("complex.json", dmt::format_complex(*c));
            base.matching = dir.write("matching.json", dmt::format_matching(f));
            base.orderings = dir.write("orderings.json", dmt::format_orderings(table));
            base.delta = dir.write("delta.json", dmt::format_delta_field(s, df.field));
            if (verify(base).code != dmt::kExitOk) {
                o.fail(tag + ": unmutated inputs do not verify");
                continue;
            }
            json delta = json::parse(testing::slurp(*base.delta));

            // Remove one pair of the subdivided field: first, middle, last.
            const std::size_t n = delta["pairs"].size();
            for (std::size_t at : {std::size_t{0}, n / 2, n - 1}) {
                if (n == 0)
                    break;
                json mutated = delta;
                mutated["pairs"].erase(at);
                auto cfg = base;
                cfg.delta = dir.write("mutated.json", mutated.dump());
                ++mutations;
                o.expect(named_failure(verify(cfg), "delta_field_matches_construction"),
                         tag + ": removing pair " + std::to_string(at) + " went unnoticed");
            }

            // Swap two entries of one ordering, keeping the subdivided field.
            for (const auto& [host, ord] : table) {
                if (ord.order().size() < 2)
                    continue;
                auto swapped = ord.order();
                std::swap(swapped[0], swapped[1]);
                auto mutated_table = table;
                mutated_table.insert_or_assign(host, CriticalOrdering(ord.simplex(), swapped));
                auto cfg = base;
                cfg.orderings = dir.write("mutated.json", dmt::format_orderings(mutated_table));
                ++mutations;
                o.expect(named_failure(verify(cfg), "delta_field_matches_construction"),
                         tag + ": swapped ordering of " + ord.simplex().to_string() +
                             " went unnoticed");
                break;
            }

            // Add a pair whose face is not a facet of its coface, in the
            // subdivided field and in the base matching.
            const auto& dc = s.delta();
            auto bad_pair = [](const dmt::SimplicialComplex& k) -> std::optional<dmt::CellPair> {
                for (dmt::CellId hi = k.first_of_dimension(1); hi < k.size(); ++hi)
                    for (dmt::CellId lo = k.first_of_dimension(k.dimension_of(hi) - 1);
                         lo < k.end_of_dimension(k.dimension_of(hi) - 1); ++lo)
                        if (!k.simplex(lo).is_face_of(k.simplex(hi)))
                            return dmt::CellPair{lo, hi};
                return std::nullopt;
            };
            if (auto p = bad_pair(dc)) {
                json mutated = delta;
                mutated["pairs"].push_back(
                    json::array({dc.simplex(p->face).vertices(), dc.simplex(p->coface).vertices()}));
                auto cfg = base;
                cfg.delta = dir.write("mutated.json", mutated.dump());
                ++mutations;
                o.expect(named_failure(verify(cfg), "delta_field_valid"),
                         tag + ": facet-violating subdivided pair went unnoticed");
            }
            if (auto p = bad_pair(*c)) {
                json matching = json::parse(testing::slurp(*base.matching));
                matching["pairs"].push_back(
                    json::array({c->simplex(p->face).vertices(), c->simplex(p->coface).vertices()}));
                auto cfg = base;
                cfg.matching = dir.write("mutated.json", matching.dump());
                ++mutations;
                o.expect(named_failure(verify(cfg), "base_field_valid"),
                         tag + ": facet-violating base pair went unnoticed");
            }
        }
    }
    return o;
}

}  // namespace

int main()
{
    int failed = 0;
    auto report = [&](int n, const std::string& what, const Outcome& o, double seconds) {
        std::printf("[%s] %d: %s (%s; %.2fs)\n", o.ok ? "PASS" : "FAIL", n, what.c_str(),
                    o.ok ? (o.detail.empty() ? "exact" : o.detail.c_str()) : o.detail.c_str(),
                    seconds);
        std::fflush(stdout);
        if (!o.ok)
            ++failed;
    };
    auto timed = [&](int n, const std::string& what, const std::function<Outcome()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        report(n, what, o, dt.count());
    };

    timed(1, "faces of ({a,f} {d} {t})", faces_example);
    timed(2, "non-critical pairs", noncritical_example);
    timed(3, "forced segment from ({1} {3} {4} {2})", forced_segment_example);
    timed(4, "critical pairs and suffix lengths", critical_pairs_example);
    timed(5, "critical segment to ({2} {4} {5} {1})", critical_segment_example);
    timed(6, "entrance of exit ({1} {3} {5} {4})", entrance_example);

    auto t0 = std::chrono::steady_clock::now();
    Sweep sw;
    try {
        sw = run_sweep();
    } catch (const std::exception& e) {
        sw.critical_match.fail(std::string("exception: ") + e.what());
        sw.path_match.fail(sw.critical_match.detail);
        sw.structural.fail(sw.critical_match.detail);
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    const std::string scale = std::to_string(dmt::builtin_corpus().size()) + " complexes x " +
                              std::to_string(kSeeds) + " seeds";
    if (sw.critical_match.ok)
        sw.critical_match.detail = std::to_string(sw.runs) + " constructions";
    if (sw.path_match.ok)
        sw.path_match.detail = std::to_string(sw.base_paths) + " base paths matched";
    report(7, "critical cells of the subdivided field, " + scale, sw.critical_match, dt.count());
    report(8, "gradient path bijection, " + scale, sw.path_match, dt.count());
    report(9, "chain counts, euler characteristic, weak Morse inequalities", sw.structural,
           dt.count());

    std::size_t mutations = 0;
    timed(10, "negative controls", [&] {
        auto o = negative_controls(mutations);
        if (o.ok)
            o.detail = std::to_string(mutations) + " mutations rejected";
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", failed ? "FAILED" : "PASSED", failed);
    return failed ? 1 : 0;
}
