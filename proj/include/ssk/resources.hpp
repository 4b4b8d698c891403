#pragma once

#include <cstddef>
#include <stdexcept>

namespace ssk {

/// A structure would exceed its configured memory budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half of physical memory, or 1 GiB when that cannot be determined.
std::size_t default_memory_budget();

}  // namespace ssk
