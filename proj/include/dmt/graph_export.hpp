#pragma once

#include <functional>
#include <string>

#include "dmt/morse.hpp"
#include "dmt/subdivision.hpp"

namespace dmt {

/// Graphviz DOT of the Hasse diagram. Hasse edges run face -> coface in grey;
/// matched pairs are drawn as bold red arrows face -> coface; critical cells
/// get a double outline and `critical=true`. One rank per dimension.
std::string hasse_dot(const DiscreteVectorField& f,
                      const std::function<std::string(CellId)>& name);

std::string hasse_dot(const DiscreteVectorField& f);
std::string hasse_dot(const SubdividedComplex& s, const DiscreteVectorField& df);

}  // namespace dmt
