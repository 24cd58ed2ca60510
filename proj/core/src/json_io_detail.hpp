#pragma once

#include "json.hpp"

namespace hcob::detail {

using Json = nlohmann::ordered_json;

}  // namespace hcob::detail
