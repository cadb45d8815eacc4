#pragma once

#include <string>

#include <json.hpp>

#include "pfg/group.hpp"
#include "pfg/pfs.hpp"

namespace pfg {

/// Group file schema: { "order": n, "table": [[...]], "name": "..." }.
/// Identity and inverses are derived and cross-checked on load.
nlohmann::ordered_json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

/// Registry of well-known groups: Z1..Z12, D3..D6, S3, S4, V4 (alias
/// Klein4), and products of those written "AxB" (e.g. "Z2xZ4").
FiniteGroup registry_group(const std::string& name);
std::vector<std::string> registry_names();

/// PFS file schema:
///   { "carrier": "Z6" | <inline group object>, "triples": [["1/2","1/4","1/8"], ...] }
/// Rationals are strings "p/q" or "p"; no decimal forms.
struct LoadedPfs {
    FiniteGroup group;
    PictureFuzzySet pfs;
};
LoadedPfs pfs_from_json(const nlohmann::json& j);
nlohmann::ordered_json pfs_to_json(const FiniteGroup& carrier, const PictureFuzzySet& q);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::ordered_json& j);

/// Resolves a group argument: registry name, or path to a group JSON file.
FiniteGroup resolve_group(const std::string& name_or_path);

/// Map specs for the CLI: "identity", "constant:<k>", "mod:<n>"
/// (source must be cyclic Z_m), "proj:0" / "proj:1" (source must be a
/// product "AxB"), or a path to a JSON file
/// { "source": ..., "target": ..., "map": [...] }.
struct LoadedMap {
    FiniteGroup source;
    FiniteGroup target;
    GroupMap map;
};
LoadedMap resolve_map(const std::string& spec, const FiniteGroup& source);

} // namespace pfg
