#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "frattini/perm_group.hpp"

namespace testing_support {

using frattini::Permutation;
using frattini::PermGroup;

// "(1,2,3)(4,5)" -> permutation of the given degree; "()" is the identity.
inline Permutation perm(const std::string& text, std::size_t degree) {
  std::vector<std::vector<long long>> cycles;
  std::vector<long long> current;
  std::string number;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      number += c;
      continue;
    }
    if (!number.empty()) {
      current.push_back(std::stoll(number));
      number.clear();
    }
    if (c == ')') {
      if (!current.empty()) cycles.push_back(current);
      current.clear();
    }
  }
  return Permutation::from_cycles(cycles, degree);
}

inline PermGroup group(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(perm(g, degree));
  return PermGroup(degree, perms);
}

inline std::vector<Permutation> perms(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(perm(g, degree));
  return out;
}

}  // namespace testing_support
