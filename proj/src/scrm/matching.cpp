#include "scrm/matching.hpp"

namespace vsrchart {

namespace {

bool try_augment(int p, const std::vector<std::vector<int>>& adjacency,
                 std::vector<int>& match_of_right, std::vector<char>& visited) {
  for (int q : adjacency[static_cast<std::size_t>(p)]) {
    if (visited[static_cast<std::size_t>(q)]) continue;
    visited[static_cast<std::size_t>(q)] = 1;
    if (match_of_right[static_cast<std::size_t>(q)] == -1 ||
        try_augment(match_of_right[static_cast<std::size_t>(q)], adjacency,
                    match_of_right, visited)) {
      match_of_right[static_cast<std::size_t>(q)] = p;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                   std::size_t right_count,
                                   std::vector<int>* match_of_right_out) {
  std::vector<int> match_of_right(right_count, -1);
  std::size_t matched = 0;
  for (std::size_t p = 0; p < adjacency.size(); ++p) {
    std::vector<char> visited(right_count, 0);
    if (try_augment(static_cast<int>(p), adjacency, match_of_right, visited))
      ++matched;
  }
  if (match_of_right_out) *match_of_right_out = std::move(match_of_right);
  return matched;
}

}  // namespace vsrchart
