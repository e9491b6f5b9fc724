#pragma once

#include <json.hpp>

namespace nw {
/// Key order is insertion order so reports serialize byte-identically.
using Json = nlohmann::ordered_json;
}  // namespace nw
