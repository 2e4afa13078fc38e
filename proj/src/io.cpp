#include "dmt/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace dmt {
namespace {

using nlohmann::json;

std::string where(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text, const std::string& source)
{
    try {
        json doc = json::parse(text);
        if (!doc.is_object())
            throw ParseError(source + ": top level must be an object");
        return doc;
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character.
        std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        std::size_t eol = text.find('\n', at);
        std::size_t bol = text.rfind('\n', at == 0 ? 0 : at - 1);
        bol = bol == std::string::npos ? 0 : bol + 1;
        std::string context = text.substr(bol, eol == std::string::npos ? std::string::npos : eol - bol);
        throw ParseError(source + ": " + where(text, at) + ": malformed JSON near `" + context + "`");
    }
}

const json& field(const json& doc, const char* key, const std::string& source)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(source + ": missing field `" + key + "`");
    if (!it->is_array())
        throw ParseError(source + ": field `" + key + "` must be a list");
    return *it;
}

std::vector<VertexId> int_array(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw ParseError(what + " must be a list of integers");
    std::vector<VertexId> out;
    for (const json& v : j) {
        if (!v.is_number_integer())
            throw ParseError(what + " contains a non-integer entry " + v.dump());
        auto x = v.get<long long>();
        if (x < 0 || x > static_cast<long long>(std::numeric_limits<VertexId>::max()))
            throw ParseError(what + " contains out-of-range vertex " + std::to_string(x));
        out.push_back(static_cast<VertexId>(x));
    }
    return out;
}

Simplex simplex_from(const json& j, const std::string& what)
{
    try {
        return Simplex(int_array(j, what));
    } catch (const InvalidInput& e) {
        throw ParseError(what + ": " + e.what());
    }
}

std::string entry(const std::string& source, const char* key, std::size_t i)
{
    return source + ": " + key + "[" + std::to_string(i) + "]";
}

json ids(const Simplex& s) { return json(s.vertices()); }

json blocks(const Label& l)
{
    json out = json::array();
    for (const Block& b : l.blocks())
        out.push_back(b);
    return out;
}

// {"key": [\n  item,\n  item\n]} with further keys in the given order.
class Document {
public:
    void scalar(const std::string& key, const json& value) { parts_.push_back(quote(key) + ": " + value.dump()); }
    void list(const std::string& key, const std::vector<json>& items)
    {
        std::string s = quote(key) + ": [";
        for (std::size_t i = 0; i < items.size(); ++i)
            s += (i ? ",\n    " : "\n    ") + items[i].dump();
        s += items.empty() ? "]" : "\n  ]";
        parts_.push_back(std::move(s));
    }
    std::string str() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? ",\n  " : "\n  ") + parts_[i];
        return s + "\n}\n";
    }

private:
    static std::string quote(const std::string& k) { return json(k).dump(); }
    std::vector<std::string> parts_;
};

std::vector<json> counts(const SimplicialComplex& c)
{
    std::vector<json> out;
    for (int d = 0; d <= c.dimension(); ++d)
        out.push_back(c.count(d));
    return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path.string());
    out << text;
}

VertexSets parse_complex(const std::string& text, const std::string& source)
{
    json doc = parse_json(text, source);
    const json& list = field(doc, "maximal_simplices", source);
    VertexSets out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        auto vs = int_array(list[i], entry(source, "maximal_simplices", i));
        if (vs.empty())
            throw ParseError(entry(source, "maximal_simplices", i) + " is empty");
        out.push_back(std::move(vs));
    }
    return out;
}

SimplexPairs parse_matching(const std::string& text, const std::string& source)
{
    json doc = parse_json(text, source);
    const json& list = field(doc, "pairs", source);
    SimplexPairs out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string what = entry(source, "pairs", i);
        if (!list[i].is_array() || list[i].size() != 2)
            throw ParseError(what + " must be [face, coface]");
        out.emplace_back(simplex_from(list[i][0], what), simplex_from(list[i][1], what));
    }
    return out;
}

std::vector<CriticalOrdering> parse_orderings(const std::string& text, const std::string& source)
{
    json doc = parse_json(text, source);
    const json& list = field(doc, "orderings", source);
    std::vector<CriticalOrdering> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string what = entry(source, "orderings", i);
        if (!list[i].is_array() || list[i].size() != 2)
            throw ParseError(what + " must be [simplex, order]");
        try {
            out.emplace_back(simplex_from(list[i][0], what), int_array(list[i][1], what));
        } catch (const InvalidInput& e) {
            throw ParseError(what + ": " + e.what());
        }
    }
    return out;
}

std::vector<CellPair> parse_delta_field(const std::string& text, const SubdividedComplex& s,
                                        const std::string& source)
{
    json doc = parse_json(text, source);
    if (doc.contains("delta_vertices")) {
        const json& table = field(doc, "delta_vertices", source);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const std::string what = entry(source, "delta_vertices", i);
            if (!table[i].is_array() || table[i].size() != 2 || !table[i][0].is_number_integer())
                throw ParseError(what + " must be [id, simplex]");
            auto id = table[i][0].get<long long>();
            Simplex base = simplex_from(table[i][1], what);
            auto known = s.base().find(base);
            if (!known || static_cast<long long>(*known) != id)
                throw ParseError(what + " maps " + std::to_string(id) + " to " + base.to_string() +
                                 ", which does not match the complex");
        }
    }
    const json& list = field(doc, "pairs", source);
    std::vector<CellPair> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string what = entry(source, "pairs", i);
        if (!list[i].is_array() || list[i].size() != 2)
            throw ParseError(what + " must be [face, coface]");
        Simplex face = simplex_from(list[i][0], what);
        Simplex coface = simplex_from(list[i][1], what);
        auto a = s.delta().find(face);
        auto b = s.delta().find(coface);
        if (!a || !b)
            throw ParseError(what + " names a cell that is not in the subdivision");
        out.push_back({*a, *b});
    }
    return out;
}

std::string format_complex(const SimplicialComplex& c)
{
    Document d;
    std::vector<json> items;
    for (const Simplex& s : c.maximal_simplices())
        items.push_back(ids(s));
    d.list("maximal_simplices", items);
    return d.str();
}

std::string format_matching(const DiscreteVectorField& f)
{
    Document d;
    std::vector<json> items;
    for (const CellPair& p : f.pairs())
        items.push_back(json::array({ids(f.complex().simplex(p.face)),
                                     ids(f.complex().simplex(p.coface))}));
    d.list("pairs", items);
    return d.str();
}

std::string format_orderings(const std::map<CellId, CriticalOrdering>& orderings)
{
    Document d;
    std::vector<json> items;
    for (const auto& [id, o] : orderings)
        items.push_back(json::array({ids(o.simplex()), json(o.order())}));
    d.list("orderings", items);
    return d.str();
}

std::string format_subdivision(const SubdividedComplex& s)
{
    Document d;
    d.list("base_counts", counts(s.base()));
    d.list("delta_counts", counts(s.delta()));
    std::vector<json> items;
    for (CellId id = 0; id < s.delta().size(); ++id) {
        json chain = json::array();
        for (const Simplex& x : s.chain_of(id))
            chain.push_back(ids(x));
        json row;
        row["vertices"] = ids(s.delta().simplex(id));
        row["chain"] = chain;
        row["label"] = blocks(s.label(id));
        items.push_back(row);
    }
    d.list("simplices", items);
    return d.str();
}

std::string format_delta_field(const SubdividedComplex& s, const DiscreteVectorField& df)
{
    Document d;
    std::vector<json> table;
    for (CellId id = 0; id < s.base().size(); ++id)
        table.push_back(json::array({id, ids(s.base().simplex(id))}));
    d.list("delta_vertices", table);
    std::vector<json> items;
    for (const CellPair& p : df.pairs())
        items.push_back(json::array({ids(s.delta().simplex(p.face)),
                                     ids(s.delta().simplex(p.coface))}));
    d.list("pairs", items);
    std::vector<json> crit;
    for (CellId id : critical_cells(df).all())
        crit.push_back(blocks(s.label(id)));
    d.list("critical_labels", crit);
    return d.str();
}

std::string format_paths(const SimplicialComplex& c, const std::vector<GradientPath>& paths)
{
    Document d;
    std::vector<json> items;
    for (const GradientPath& p : paths) {
        json cells = json::array();
        for (CellId id : p.cells)
            cells.push_back(ids(c.simplex(id)));
        items.push_back(cells);
    }
    d.list("paths", items);
    return d.str();
}

std::string format_delta_paths(const SubdividedComplex& s, const std::vector<GradientPath>& paths)
{
    Document d;
    std::vector<json> items;
    for (const GradientPath& p : paths) {
        json cells = json::array();
        for (CellId id : p.cells)
            cells.push_back(blocks(s.label(id)));
        items.push_back(cells);
    }
    d.list("paths", items);
    return d.str();
}

std::string format_lifted_paths(const SubdividedComplex& s, const std::vector<GradientPath>& base,
                                const std::vector<GradientPath>& lifts)
{
    Document d;
    std::vector<json> items;
    for (std::size_t i = 0; i < base.size(); ++i) {
        json row;
        json b = json::array();
        for (CellId id : base[i].cells)
            b.push_back(ids(s.base().simplex(id)));
        json l = json::array();
        for (CellId id : lifts.at(i).cells)
            l.push_back(blocks(s.label(id)));
        row["base"] = b;
        row["lift"] = l;
        items.push_back(row);
    }
    d.list("paths", items);
    return d.str();
}

std::string format_report(const BijectionReport& r, const SimplicialComplex& base,
                          const std::vector<std::pair<std::string, std::string>>& failed_checks,
                          const std::vector<std::string>& passed_checks)
{
    Document d;
    d.scalar("success", r.success && failed_checks.empty());
    d.scalar("base_paths", r.base_total);
    d.scalar("delta_paths", r.delta_total);
    std::vector<json> passed(passed_checks.begin(), passed_checks.end());
    d.list("checks_passed", passed);
    std::vector<json> failed;
    for (const auto& [name, detail] : failed_checks)
        failed.push_back(json::array({name, detail}));
    d.list("checks_failed", failed);
    std::vector<json> tallies;
    for (const EndpointTally& t : r.tallies) {
        json row;
        row["dimension"] = t.dimension;
        row["source"] = ids(base.simplex(t.source));
        row["target"] = ids(base.simplex(t.target));
        row["base_paths"] = t.base_paths;
        row["delta_paths"] = t.delta_paths;
        row["round_trips_ok"] = t.round_trips_ok;
        tallies.push_back(row);
    }
    d.list("endpoint_pairs", tallies);
    std::vector<json> failures(r.failures.begin(), r.failures.end());
    d.list("failures", failures);
    std::vector<json> offending(r.first_offending_path.begin(), r.first_offending_path.end());
    d.list("first_offending_path", offending);
    return d.str();
}

}  // namespace dmt
