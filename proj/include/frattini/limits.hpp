#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "frattini/error.hpp"

namespace frattini {

// Resource bounds shared by every module. All are configuration values; the
// defaults are sized for desk-scale groups (S7 lattice, S11 maximality).
struct Limits {
  std::uint64_t enumeration_bound = 1'000'000;  // elements(G)
  std::uint64_t lattice_bound = 5040;           // all_subgroups / iota search
  std::uint64_t index_bound = 10'000;           // coset enumeration

  // Optional wall-clock deadline; long-running loops poll it.
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_deadline(std::string_view where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw BoundExceeded("timeout reached during " + std::string(where));
    }
  }
};

}  // namespace frattini
