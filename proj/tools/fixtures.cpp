#include "fixtures.hpp"

#include "innc/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace fs = std::filesystem;

namespace innc::cli {

namespace {

const std::set<std::string> kKinds = {"arrangement-cone", "local-germ", "resolution", "projective-config"};

}  // namespace

std::string bundled_fixture_dir() { return INNC_FIXTURE_DIR; }

std::vector<std::string> fixture_paths(const std::string& dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) throw SchemaError("fixture directory not found: " + dir);
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

Fixture fixture_from_json(const Json& j, const std::string& origin) {
    Fixture f;
    f.path = origin;
    f.name = require(j, "name").get<std::string>();
    f.kind = require(j, "kind").get<std::string>();
    if (!kKinds.count(f.kind)) throw SchemaError(origin + ": unknown fixture kind '" + f.kind + "'");
    f.payload = require(j, "payload");
    if (!f.payload.is_object()) throw SchemaError(origin + ": payload must be an object");
    if (j.contains("expected") && !j["expected"].is_null()) f.expected = j["expected"];
    return f;
}

Fixture load_fixture(const std::string& path_or_name) {
    fs::path p(path_or_name);
    if (!fs::exists(p)) {
        fs::path bundled = fs::path(bundled_fixture_dir()) / (path_or_name + ".json");
        if (!fs::exists(bundled)) throw SchemaError("fixture not found: " + path_or_name);
        p = bundled;
    }
    std::ifstream in(p);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(p.string() + ": " + e.what());
    }
    try {
        return fixture_from_json(j, p.string());
    } catch (const Json::exception& e) {
        throw SchemaError(p.string() + ": " + e.what());
    }
}

ChainComplex build_complex(const Json& payload) {
    const std::string model = require(payload, "model").get<std::string>();
    if (model == "generic")
        return generic_arrangement_cone_complex(require(payload, "r").get<std::size_t>(),
                                                require(payload, "n").get<std::size_t>());
    if (model == "cone-complement")
        return cone_complement_complex(long_vector_from_json(require(payload, "degrees")),
                                       require(payload, "n").get<std::size_t>());
    if (model == "normal-crossing") {
        std::size_t r = require(payload, "r").get<std::size_t>();
        std::vector<LaurentPoly> params;
        for (std::size_t i = 0; i < r; ++i) {
            Exponent e(r, 0);
            e[i] = 1;
            params.push_back(LaurentPoly::binomial(e));
        }
        return koszul_complex(r, params, r);
    }
    if (model == "explicit") return complex_from_json(require(payload, "complex"));
    throw SchemaError("unknown complex model '" + model + "'");
}

std::size_t payload_degree(const Json& payload) {
    if (payload.contains("degree")) return payload["degree"].get<std::size_t>();
    if (payload.contains("n")) return payload["n"].get<std::size_t>();
    return 1;
}

CatalogEntry payload_catalog(const Json& payload) { return catalog_from_json(require(payload, "catalog")); }

std::vector<BranchDatum> payload_branch_data(const Json& payload) {
    std::vector<BranchDatum> out;
    if (payload.contains("branch_data"))
        for (const auto& b : payload["branch_data"]) out.push_back(branch_from_json(b));
    return out;
}

std::vector<NamedMap> payload_maps(const Json& payload) {
    std::vector<NamedMap> out;
    for (const auto& m : require(payload, "maps"))
        out.push_back({require(m, "name").get<std::string>(), int_matrix_from_json(require(m, "matrix"))});
    return out;
}

}  // namespace innc::cli
