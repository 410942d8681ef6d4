#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "lahq/arith.hpp"
#include "lahq/verify.hpp"

namespace lahq::detail {

void register_classical_identities(std::vector<IdentitySpec>& out);
void register_q_identities(std::vector<IdentitySpec>& out);

template <class T>
std::string join(const std::vector<T>& values, const char* variable = "q") {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += "; ";
    if constexpr (std::is_same_v<T, LaurentPoly>) {
      out += values[i].to_string(variable);
    } else {
      out += lahq::to_string(values[i]);
    }
  }
  return out + "]";
}

inline std::string join(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += "; ";
    out += values[i];
  }
  return out + "]";
}

inline bool even(std::int64_t m) { return m % 2 == 0; }

}  // namespace lahq::detail
