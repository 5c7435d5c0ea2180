#pragma once

#include <cstddef>
#include <vector>

namespace vsrchart {

// Maximum bipartite matching (Kuhn's augmenting paths). adjacency[p] lists
// the right-side vertices compatible with left vertex p. Returns the size of
// a maximum one-to-one matching; if match_of_right is given, it receives the
// matched left index per right vertex (-1 when unmatched).
std::size_t max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                   std::size_t right_count,
                                   std::vector<int>* match_of_right = nullptr);

}  // namespace vsrchart
