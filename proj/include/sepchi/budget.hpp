#pragma once

#include <stdexcept>
#include <string>

namespace sepchi {

// Caps for the exact-search cores. Exceeding a cap raises BudgetError, which
// lets callers distinguish "claim refuted" from "unverifiable at this size".
struct Budget {
  long long search_nodes = 50'000'000;
  std::size_t max_separators = 1'000'000;
};

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sepchi
