#pragma once

#include <functional>

#include "casbound/root_system.hpp"

namespace casbound {

// Streams every element of the Weyl orbit of a dominant weight exactly once,
// in fundamental-weight coordinates.  Classical series are enumerated through
// (signed) permutations of epsilon coordinates without any dedup storage;
// exceptional types fall back to a hash-set BFS.
void for_each_orbit_element(const RootSystem& rs, const Weight& dominant,
                            const std::function<void(const Weight&)>& fn);

}  // namespace casbound
