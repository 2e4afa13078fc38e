#include "dmt/graph_export.hpp"

#include <sstream>

namespace dmt {

std::string hasse_dot(const DiscreteVectorField& f,
                      const std::function<std::string(CellId)>& name)
{
    const auto& c = f.complex();
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int d = 0; d <= c.dimension(); ++d) {
        os << "  { rank=same;";
        for (CellId id = c.first_of_dimension(d); id < c.end_of_dimension(d); ++id)
            os << " n" << id << ';';
        os << " }\n";
    }
    for (CellId id = 0; id < c.size(); ++id) {
        os << "  n" << id << " [label=\"" << name(id) << "\"";
        if (f.is_critical(id))
            os << ", peripheries=2, critical=true";
        os << "];\n";
    }
    for (CellId id = 0; id < c.size(); ++id) {
        for (CellId face : c.facet_ids(id)) {
            if (f.up_partner(face) == id)
                os << "  n" << face << " -> n" << id << " [color=red, penwidth=2, matched=true];\n";
            else
                os << "  n" << face << " -> n" << id << " [color=grey, arrowhead=none];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string hasse_dot(const DiscreteVectorField& f)
{
    return hasse_dot(f, [&](CellId id) { return f.complex().simplex(id).to_string(); });
}

std::string hasse_dot(const SubdividedComplex& s, const DiscreteVectorField& df)
{
    return hasse_dot(df, [&](CellId id) { return s.label(id).to_string(); });
}

}  // namespace dmt
