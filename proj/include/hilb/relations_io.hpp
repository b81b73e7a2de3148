#pragma once

#include <hilb/chow.hpp>

#include <string>
#include <vector>

namespace hilb {

/// Load congruence relations from a JSON file:
///   {"relations": [{"name": ...,
///                   "terms": [{"label": ..., "coeff": ...}, ...],
///                   "modulus": [{"char": [a, b], "power": k}, ...]}, ...]}
/// Coefficients are integers or rational strings like "-3/2".
std::vector<RelationSpec> load_relations(const std::string& path);

}  // namespace hilb
