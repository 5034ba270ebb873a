// Ancestry graphs of regular triangular forms under the local reduction
// maps: successor enumeration, river construction above a stable mouth
// (including collapse edges), stream classification above a root, and
// deterministic DOT/JSON export.
#pragma once

#include <string>
#include <vector>

#include "triform/classify.hpp"
#include "triform/numth.hpp"

namespace triform {

struct RiverEdge {
  Form from;
  Form to;
  Int p = 0;
  bool collapse = false;  // double-headed edge through an old reduction
};

struct River {
  Form mouth;
  std::vector<Form> nodes;       // sorted ascending, mouth included
  std::vector<RiverEdge> edges;  // sorted by (from, to)
};

// p-unstable new regular preimages of e under reduce_at, over p in
// {3, 5, 7}, with all coefficients <= coeff_cap.  Regularity and newness
// are decided through the rank-3/rank-4 classification tables.
std::vector<std::pair<Form, Int>> successors(const Form& e, Int coeff_cap);

// Breadth-first ancestry of a stable mouth: reduction edges from
// successors, plus collapse edges from the recorded rank-4 collapse tops
// whose bottom equals a graph node.
River build_river(const Form& mouth, Int coeff_cap);

// Classification of the ancestry tree above a rank-4 root into periodic
// spines ("mainstreams"), periodic side families ("tributaries") and
// leftover sporadic components.  Periodicity requires two instances inside
// the coefficient cap, related by scaling one coefficient by p^2 two levels
// apart.
StreamCounts describe_streams(const Form& root, Int coeff_cap);

std::string to_dot(const River& river);
std::string to_json(const River& river);

}  // namespace triform
