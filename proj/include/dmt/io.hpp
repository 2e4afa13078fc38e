#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmt/delta_morse.hpp"
#include "dmt/paths.hpp"

// All documents are JSON objects written one list entry per line so that
// files diff cleanly and mutate predictably. Grammar:
//
//   complex:    {"maximal_simplices": [[v, ...], ...]}
//   matching:   {"pairs": [[[face...], [coface...]], ...]}
//   orderings:  {"orderings": [[[simplex...], [permutation...]], ...]}
//   delta field:{"delta_vertices": [[id, [simplex...]], ...],
//                "pairs": [[[ids...], [ids...]], ...]}
//
// Vertex ids of the subdivision are the canonical ids of base simplices.

namespace dmt {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using VertexSets = std::vector<std::vector<VertexId>>;
using SimplexPairs = std::vector<std::pair<Simplex, Simplex>>;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// `source` names the input in error messages.
VertexSets parse_complex(const std::string& text, const std::string& source = "complex");
SimplexPairs parse_matching(const std::string& text, const std::string& source = "matching");
std::vector<CriticalOrdering> parse_orderings(const std::string& text,
                                              const std::string& source = "orderings");
/// Reads a subdivided field file against the subdivision it must belong to.
/// Throws ParseError on malformed text or a vertex table that disagrees
/// with `s`; field-level problems surface later from validate_field.
std::vector<CellPair> parse_delta_field(const std::string& text, const SubdividedComplex& s,
                                        const std::string& source = "delta field");

std::string format_complex(const SimplicialComplex& c);
std::string format_matching(const DiscreteVectorField& f);
std::string format_orderings(const std::map<CellId, CriticalOrdering>& orderings);
std::string format_subdivision(const SubdividedComplex& s);
std::string format_delta_field(const SubdividedComplex& s, const DiscreteVectorField& df);
std::string format_paths(const SimplicialComplex& c, const std::vector<GradientPath>& paths);
std::string format_delta_paths(const SubdividedComplex& s, const std::vector<GradientPath>& paths);
/// Base paths side by side with their lifts, one pair per line.
std::string format_lifted_paths(const SubdividedComplex& s, const std::vector<GradientPath>& base,
                                const std::vector<GradientPath>& lifts);
std::string format_report(const BijectionReport& r, const SimplicialComplex& base,
                          const std::vector<std::pair<std::string, std::string>>& failed_checks,
                          const std::vector<std::string>& passed_checks);

}  // namespace dmt
