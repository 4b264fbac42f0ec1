#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "spingraph/chain.hpp"
#include "spingraph/graph.hpp"
#include "spingraph/permutation.hpp"
#include "spingraph/transport.hpp"

namespace spingraph {

using ordered_json = nlohmann::ordered_json;

// {"genus", "kind", "vertices", "edges", "faces"} with canonically sorted
// arrays; byte-stable across runs.
ordered_json graph_to_json(const SpinGraph& g);

// Undirected DOT text, one node line per vertex and one "--" line per
// edge, in canonical order.
std::string graph_to_dot(const SpinGraph& g);

ordered_json permutation_to_json(const Permutation& p);

ordered_json chain_to_json(const SpinChain& w);
SpinChain chain_from_json(const SpinGraph& g, const nlohmann::json& j);

// Comma-joined labels, any order; canonicalized and validated.
Face face_from_labels(const SpinGraph& g, std::string_view csv);
std::pair<Vertex, Vertex> edge_from_labels(const SpinGraph& g, std::string_view csv);

}  // namespace spingraph
