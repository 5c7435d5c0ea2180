#pragma once

#include <string>
#include <vector>

namespace vsrchart::engine {

// Static pool of real-world words used for series labels, categories and
// titles (deduplicated, >= 2000 entries).
const std::vector<std::string>& word_pool();

}  // namespace vsrchart::engine
