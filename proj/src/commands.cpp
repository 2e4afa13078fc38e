#include "dmt/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <set>

#include "dmt/corpus.hpp"
#include "dmt/graph_export.hpp"
#include "dmt/homology.hpp"
#include "dmt/io.hpp"

namespace dmt {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool debug_logging()
{
    const char* level = std::getenv("DMT_LOG");
    return level && std::string(level) == "debug";
}

const std::string& require(const std::optional<std::string>& v, const char* flag)
{
    if (!v)
        throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

ComplexPtr load_complex(const RunConfig& cfg)
{
    const std::string& src = require(cfg.complex, "--complex");
    const std::string prefix = "corpus:";
    if (src.rfind(prefix, 0) == 0) {
        auto e = find_corpus_entry(src.substr(prefix.size()));
        if (!e)
            throw UsageError("unknown corpus entry " + src);
        return make_complex(e->maximal_simplices);
    }
    return make_complex(parse_complex(read_text(src), src));
}

DiscreteVectorField load_matching(const RunConfig& cfg, const ComplexPtr& c)
{
    if (!cfg.matching)
        return validate_field(c, std::vector<CellPair>{});
    const std::string& src = *cfg.matching;
    return validate_field(c, parse_matching(read_text(src), src));
}

std::vector<CriticalOrdering> load_orderings(const RunConfig& cfg, const DiscreteVectorField& f)
{
    if (!cfg.orderings)
        return default_orderings(f);
    auto given = parse_orderings(read_text(*cfg.orderings), *cfg.orderings);
    auto table = resolve_orderings(f, given, cfg.fill_orderings);
    std::vector<CriticalOrdering> out;
    for (auto& [id, o] : table)
        out.push_back(o);
    return out;
}

std::string counts_line(const SimplicialComplex& c)
{
    std::string s;
    for (int d = 0; d <= c.dimension(); ++d)
        s += (d ? "/" : "") + std::to_string(c.count(d));
    return s.empty() ? "0" : s;
}

std::string critical_line(const CriticalSet& cs)
{
    std::string s;
    for (std::size_t d = 0; d < cs.by_dimension.size(); ++d)
        s += (d ? "/" : "") + std::to_string(cs.by_dimension[d].size());
    return s.empty() ? "0" : s;
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err)
        : cfg_(cfg), out_(out), err_(err)
    {
    }
    void document(const std::string& text)
    {
        if (cfg_.out)
            write_text(*cfg_.out, text);
        else
            out_ << text;
    }
    std::ostream& summary() { return cfg_.out ? out_ : err_; }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

int cmd_subdivide(const RunConfig& cfg, Emitter& em)
{
    auto c = load_complex(cfg);
    auto s = barycentric_subdivide(c);
    em.document(format_subdivision(s));
    em.summary() << "base counts: " << counts_line(*c) << "\n"
                 << "subdivision counts: " << counts_line(s.delta()) << "\n"
                 << "euler characteristic: " << euler_characteristic(s.delta()) << "\n";
    return kExitOk;
}

int cmd_random_morse(const RunConfig& cfg, Emitter& em)
{
    if (!cfg.seed)
        throw UsageError("random-morse needs --seed");
    auto c = load_complex(cfg);
    auto f = random_morse(c, *cfg.seed);
    em.document(format_matching(f));
    em.summary() << "pairs: " << f.pairs().size() << "\n"
                 << "critical: " << critical_line(critical_cells(f)) << "\n";
    return kExitOk;
}

int cmd_delta_morse(const RunConfig& cfg, Emitter& em)
{
    auto c = load_complex(cfg);
    auto f = load_matching(cfg, c);
    if (auto cycle = find_closed_path(f))
        throw InvalidInput("input field is not Morse: closed path " + describe_cells(*c, *cycle));
    auto s = barycentric_subdivide(c);
    auto df = build_delta_morse(s, f, load_orderings(cfg, f));
    em.document(format_delta_field(s, df.field));
    em.summary() << "valid: yes\nacyclic: yes\n"
                 << "pairs: " << df.field.pairs().size() << "\n"
                 << "critical F: " << critical_line(critical_cells(f)) << "\n"
                 << "critical delta(F): " << critical_line(critical_cells(df.field)) << "\n";
    return kExitOk;
}

int cmd_paths(const RunConfig& cfg, Emitter& em)
{
    auto c = load_complex(cfg);
    auto f = load_matching(cfg, c);
    auto s = barycentric_subdivide(c);
    auto df = build_delta_morse(s, f, load_orderings(cfg, f));
    auto base = gradient_paths(f, {cfg.parallel});
    std::vector<GradientPath> lifts;
    for (const auto& p : base)
        lifts.push_back(lift_path(s, f, df, p));
    em.document(format_lifted_paths(s, base, lifts));
    em.summary() << "gradient paths: " << base.size() << "\n";
    return kExitOk;
}

int cmd_export_graph(const RunConfig& cfg, Emitter& em)
{
    auto c = load_complex(cfg);
    auto f = load_matching(cfg, c);
    if (cfg.level == "base") {
        em.document(hasse_dot(f));
        return kExitOk;
    }
    if (cfg.level != "delta")
        throw UsageError("--level must be `base` or `delta`");
    auto s = barycentric_subdivide(c);
    auto df = build_delta_morse(s, f, load_orderings(cfg, f));
    em.document(hasse_dot(s, df.field));
    return kExitOk;
}

// Runs every check, collecting named failures instead of stopping at the first.
class Verifier {
public:
    explicit Verifier(const RunConfig& cfg) : cfg_(cfg) {}

    int run(Emitter& em)
    {
        auto c = load_complex(cfg_);
        auto s = barycentric_subdivide(c);
        BijectionReport report;
        check_structure(s);
        if (auto f = base_field(c)) {
            if (auto table = orderings(*f)) {
                if (auto df = delta_field(s, *f, *table)) {
                    check_homology(s, *f, df->field);
                    check_locality(s, *f, df->field);
                    report = verify_bijection(s, *f, *df, {cfg_.parallel});
                    record("bijection", report.success,
                           report.failures.empty() ? "" : report.failures.front());
                }
            }
        }
        em.document(format_report(report, s.base(), failed_, passed_));
        const bool ok = failed_.empty();
        em.summary() << (ok ? "verification succeeded" : "verification FAILED") << ": "
                     << passed_.size() << " checks passed, " << failed_.size() << " failed\n";
        for (const auto& [name, detail] : failed_)
            em.summary() << "  " << name << ": " << detail << "\n";
        return ok ? kExitOk : kExitVerificationFailed;
    }

private:
    void record(const std::string& name, bool ok, const std::string& detail = "")
    {
        if (ok)
            passed_.push_back(name);
        else
            failed_.emplace_back(name, detail);
    }

    void check_structure(const SubdividedComplex& s)
    {
        std::vector<std::size_t> expected = count_chains(s.base());
        std::vector<std::size_t> got;
        for (int d = 0; d <= s.delta().dimension(); ++d)
            got.push_back(s.delta().count(d));
        record("subdivision_counts", got == expected,
               "subdivision has " + counts_line(s.delta()) + " cells per dimension");
        record("euler_invariance", euler_characteristic(s.delta()) == euler_characteristic(s.base()),
               "euler characteristic changed under subdivision");
    }

    std::optional<DiscreteVectorField> base_field(const ComplexPtr& c)
    {
        try {
            auto f = load_matching(cfg_, c);
            record("base_field_valid", true);
            auto cycle = find_closed_path(f);
            record("base_field_morse", !cycle,
                   cycle ? "closed path " + describe_cells(*c, *cycle) : "");
            if (cycle)
                return std::nullopt;
            return f;
        } catch (const InvalidField& e) {
            record("base_field_valid", false, e.what());
            return std::nullopt;
        }
    }

    std::optional<std::map<CellId, CriticalOrdering>> orderings(const DiscreteVectorField& f)
    {
        try {
            auto list = load_orderings(cfg_, f);
            auto table = resolve_orderings(f, list);
            record("orderings", true);
            return table;
        } catch (const InvalidInput& e) {
            record("orderings", false, e.what());
            return std::nullopt;
        }
    }

    std::optional<DeltaMorse> delta_field(const SubdividedComplex& s, const DiscreteVectorField& f,
                                          const std::map<CellId, CriticalOrdering>& table)
    {
        std::vector<CriticalOrdering> list;
        for (const auto& [id, o] : table)
            list.push_back(o);
        std::optional<DeltaMorse> built;
        try {
            built = build_delta_morse(s, f, list);
            record("construction", true);
        } catch (const std::logic_error& e) {
            record("construction", false, e.what());
        }
        if (!cfg_.delta)
            return built;

        std::optional<DiscreteVectorField> given;
        try {
            given = validate_field(s.delta_ptr(), parse_delta_field(read_text(*cfg_.delta), s, *cfg_.delta));
            record("delta_field_valid", true);
        } catch (const InvalidField& e) {
            record("delta_field_valid", false, e.what());
            return std::nullopt;
        }
        if (built)
            record("delta_field_matches_construction", same_pairs(s, built->field, *given),
                   mismatch_);
        auto cycle = find_closed_path(*given);
        record("delta_field_morse", !cycle,
               cycle ? "closed path through " + s.label(cycle->front()).to_string() : "");
        if (cycle)
            return std::nullopt;

        std::map<CellId, CellId> designated;
        for (const auto& [host, ord] : table)
            designated.emplace(host, s.id_of(ord.designated_label()));
        return DeltaMorse{std::move(*given), table, std::move(designated)};
    }

    bool same_pairs(const SubdividedComplex& s, const DiscreteVectorField& built,
                    const DiscreteVectorField& given)
    {
        std::set<CellPair> a(built.pairs().begin(), built.pairs().end());
        std::set<CellPair> b(given.pairs().begin(), given.pairs().end());
        auto show = [&](CellPair p) {
            return "(" + s.label(p.face).to_string() + ", " + s.label(p.coface).to_string() + ")";
        };
        for (const CellPair& p : a)
            if (!b.contains(p)) {
                mismatch_ = "pair " + show(p) + " is missing from the file";
                return false;
            }
        for (const CellPair& p : b)
            if (!a.contains(p)) {
                mismatch_ = "pair " + show(p) + " is not produced by the construction";
                return false;
            }
        return true;
    }

    void check_homology(const SubdividedComplex& s, const DiscreteVectorField& f,
                        const DiscreteVectorField& df)
    {
        auto betti = betti_gf2(s.base());
        record("homology_invariance", betti == betti_gf2(s.delta()),
               "subdivision changed the GF(2) Betti numbers");
        auto cf = critical_cells(f);
        auto cdf = critical_cells(df);
        long alt_f = 0;
        long alt_df = 0;
        bool weak = true;
        bool equal_counts = true;
        std::string detail;
        for (std::size_t d = 0; d < betti.size(); ++d) {
            const long sign = d % 2 == 0 ? 1 : -1;
            const int dim = static_cast<int>(d);
            alt_f += sign * static_cast<long>(cf.count(dim));
            alt_df += sign * static_cast<long>(cdf.count(dim));
            if (cf.count(dim) < betti[d] || cdf.count(dim) < betti[d]) {
                weak = false;
                detail = "dimension " + std::to_string(d) + " has fewer critical cells than b_" +
                         std::to_string(d) + " = " + std::to_string(betti[d]);
            }
            if (cf.count(dim) != cdf.count(dim))
                equal_counts = false;
        }
        const long chi = euler_characteristic(s.base());
        record("critical_euler", alt_f == chi && alt_df == chi,
               "alternating critical counts " + std::to_string(alt_f) + " and " +
                   std::to_string(alt_df) + " differ from euler characteristic " +
                   std::to_string(chi));
        record("weak_morse_inequalities", weak, detail);
        record("critical_counts_per_dimension", equal_counts,
               "F has " + critical_line(cf) + ", delta(F) has " + critical_line(cdf));
    }

    void check_locality(const SubdividedComplex& s, const DiscreteVectorField& f,
                        const DiscreteVectorField& df)
    {
        // Both carriers must be the same critical simplex or lie in one F-pair.
        for (const CellPair& p : df.pairs()) {
            CellId a = s.carrier(p.face);
            CellId b = s.carrier(p.coface);
            auto group = [&](CellId x) { return f.down_partner(x).value_or(x); };
            if (group(a) != group(b)) {
                record("carrier_locality", false,
                       "pair (" + s.label(p.face).to_string() + ", " + s.label(p.coface).to_string() +
                           ") crosses base simplices");
                return;
            }
        }
        record("carrier_locality", true);
    }

    const RunConfig& cfg_;
    std::vector<std::string> passed_;
    std::vector<std::pair<std::string, std::string>> failed_;
    std::string mismatch_;
};

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Emitter em(config, out, err);
    try {
        if (debug_logging())
            err << "[dmt] command " << config.command << "\n";
        if (config.command == "subdivide")
            return cmd_subdivide(config, em);
        if (config.command == "random-morse")
            return cmd_random_morse(config, em);
        if (config.command == "delta-morse")
            return cmd_delta_morse(config, em);
        if (config.command == "paths")
            return cmd_paths(config, em);
        if (config.command == "export-graph")
            return cmd_export_graph(config, em);
        if (config.command == "verify")
            return Verifier(config).run(em);
        throw UsageError("unknown command `" + config.command + "`");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace dmt
