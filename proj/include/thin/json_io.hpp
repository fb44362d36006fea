#pragma once

#include <string>

#include <json.hpp>

#include "thin/ptas.hpp"
#include "thin/solvers.hpp"
#include "thin/system.hpp"

namespace thin {

using Json = nlohmann::ordered_json;

// JSON ids are 0-based. Host hashes are hex strings, rationals "p/q".

Json to_json(const Graph &g);
Graph graph_from_json(const Json &j);

Json to_json(const TreeDecomposition &td);
TreeDecomposition td_from_json(const Json &j);

Json to_json(const Overlay &o);
Overlay overlay_from_json(const Json &j);

Json to_json(const OverlaySystem &s);
OverlaySystem system_from_json(const Json &j);

Json to_json(const OverlayCheck &c);
Json to_json(const SystemCheck &c);

/// Wall time is included only when `timing` is set, so reports stay
/// reproducible byte for byte.
Json to_json(const PtasReport &r, bool timing = false);

Json solve_to_json(const SolveRequest &req, const SolveResult &res);

/// Parse errors throw "io.parse".
Json read_json_file(const std::string &path);
/// Writes through a temporary file and a rename.
void write_text_file(const std::string &path, const std::string &text);

std::string hash_to_hex(std::uint64_t h);
std::uint64_t hash_from_hex(const std::string &s);

} // namespace thin
