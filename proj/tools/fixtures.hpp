#pragma once

#include "innc/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace innc::cli {

struct Fixture {
    std::string name;
    std::string kind;  // arrangement-cone | local-germ | resolution | projective-config
    Json payload;
    std::optional<Json> expected;
    std::string path;
};

/// Parses and schema-checks a fixture file. A bare name resolves inside the bundled directory.
Fixture load_fixture(const std::string& path_or_name);
Fixture fixture_from_json(const Json& j, const std::string& origin);

std::string bundled_fixture_dir();
/// Sorted *.json paths of a directory.
std::vector<std::string> fixture_paths(const std::string& dir);

/// The complex of an arrangement-cone payload: model generic | cone-complement | normal-crossing | explicit.
ChainComplex build_complex(const Json& payload);
/// Homology degree studied by the payload (default n).
std::size_t payload_degree(const Json& payload);

CatalogEntry payload_catalog(const Json& payload);
std::vector<BranchDatum> payload_branch_data(const Json& payload);

struct NamedMap {
    std::string name;
    IntMatrix matrix;
};
std::vector<NamedMap> payload_maps(const Json& payload);

}  // namespace innc::cli
