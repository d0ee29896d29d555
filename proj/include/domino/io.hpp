#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "domino/cells.hpp"
#include "domino/cycles.hpp"
#include "domino/insertion.hpp"
#include "domino/tableau.hpp"

namespace domino {

using Json = nlohmann::ordered_json;

/// {"rank":r,"dominoes":[{"label":k,"cells":[[i,j],[i,j]]},...]}, plus a
/// "core" row-length array when the core is not the rank-r staircase.
Json to_json(const DominoTableau& t);
/// {"left":...,"right":...}
Json to_json(const TableauPair& p);
/// {"labels":[...],"kind":"closed|open-core|open-noncore","sb":[i,j],"sf":[i,j]}
/// with null squares for a closed cycle.
Json to_json(const CycleSet& c, const CycleClass& cls);
/// {"kind":...,"n":...,"rank":...,"blocks":[[words...],...]}
Json to_json(const CellPartition& p);
Json to_json(const VerifyReport& r);

/// Throw DomainError on malformed documents; the tableaux are not checked
/// for standardness here.
DominoTableau tableau_from_json(const Json& j);
TableauPair pair_from_json(const Json& j);

/// Box drawing: core squares as ".", each domino one box with its
/// label. The empty diagram renders as "(empty)".
std::string render_ascii(const DominoTableau& t);
/// Both tableaux side by side.
std::string render_ascii(const TableauPair& p);

/// Undirected operator graph on W_n, edges labeled by descriptor.
std::string to_dot(int n, int rank, const std::vector<OperatorEdge>& edges);

}  // namespace domino
