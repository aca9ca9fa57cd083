#pragma once

namespace hess {

// bump when any serialized result format or algorithm output changes;
// the cache treats different versions as disjoint keyspaces.
inline constexpr const char* tool_version = "1.0.0";

}  // namespace hess
