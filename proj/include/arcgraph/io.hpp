#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "arcgraph/coloring.hpp"
#include "arcgraph/digraph.hpp"
#include "arcgraph/poset.hpp"
#include "arcgraph/verify.hpp"

namespace arcgraph::io {

using nlohmann::json;

/// {"n": int, "arcs": [[u,v],...], "labels": [...]} with labels only when
/// present. Walk labels are written as "(u0,u1,...)" strings and subset
/// pairs as {"X":[...],"Y":[...]}.
json to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

/// {"m": int, "less": [[u,v],...]}; the full (closed) relation is written.
/// Labelled lattices also carry "labels": [[elements],...].
json to_json(const Poset& p);
/// Accepts any acyclic relation and closes it; throws InvalidInput on cycles.
Poset poset_from_json(const json& j);

json to_json(const Coloring& c);
json to_json(const WidthCertificate& c);
json to_json(const VertexMap& m);
json to_json(const VerificationReport& r);

/// Sorted keys, no insignificant whitespace.
std::string canonical(const json& j);

/// "n <count>" header followed by one "u v" pair per line; '#' starts a comment.
Digraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Digraph& g);

/// JSON if the first non-blank character is '{', edge list otherwise.
Digraph read_digraph(const std::filesystem::path& path);
Poset read_poset(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Directed DOT. With merge_symmetric, opposite arc pairs become one
/// undirected-looking edge (dir=none).
std::string to_dot(const Digraph& g, bool merge_symmetric = false);
/// Hasse diagram (cover relation only), drawn bottom-up.
std::string hasse_dot(const Poset& p);

}  // namespace arcgraph::io
