#pragma once

/**
 * @file json_io.hpp
 * @brief Persistence format for algebras and the label/cartan sidecar.
 *
 * Algebra format (also the CLI interchange format, bit-exact):
 *   { "name": str, "dim": int, "parity": [int],
 *     "brackets": [ [i, j, [ [k, "num/den"], ... ] ], ... ] }
 * with i <= j only, canonical "n/d" coefficient strings, entries sorted by
 * (i, j, k). Reading validates canonicality so that read -> write is the
 * identity on bytes.
 */

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "superder/superalgebra.hpp"

namespace superder {

struct AlgebraMeta {
    std::string family;                // CLI spec string, e.g. "B:1,1"
    std::map<std::string, int> labels; // basis label -> index
    std::vector<int> cartan;           // indices of the diagonal (Cartan) basis vectors
};

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& a);
SuperAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::ordered_json meta_to_json(const AlgebraMeta& m);
AlgebraMeta meta_from_json(const nlohmann::json& j);

/// Compact single-line dump with trailing newline (the on-disk encoding).
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace superder
