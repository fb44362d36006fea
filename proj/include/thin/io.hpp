#pragma once

#include <iosfwd>
#include <string>

#include "thin/graph.hpp"
#include "thin/layering.hpp"
#include "thin/tree_decomposition.hpp"

namespace thin {

// Text formats use 1-based vertex ids.

/// PACE ".gr": 'c' comments, "p tw n m", then m lines "u v".
Graph read_gr(std::istream &in);
void write_gr(std::ostream &out, const Graph &g);

/// PACE ".td": "s td <bags> <width+1> <n>", "b <id> <v...>", then tree
/// edges "<i> <j>". The first bag becomes the root. Parse errors throw
/// "io.parse".
TreeDecomposition read_td(std::istream &in);
void write_td(std::ostream &out, const TreeDecomposition &td, std::size_t n);

/// Lines "<layer> <vertex>", layer index starting at 1.
Layering read_layering(std::istream &in);
void write_layering(std::ostream &out, const Layering &l);

Graph read_gr_file(const std::string &path);
void write_gr_file(const std::string &path, const Graph &g);

} // namespace thin
