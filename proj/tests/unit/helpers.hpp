#pragma once

#include <functional>
#include <string>
#include <vector>

#include "koszul/builtins.hpp"
#include "koszul/error.hpp"
#include "koszul/matrix.hpp"

namespace testing {

inline koszul::Vector vec(std::initializer_list<long> xs) {
  koszul::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Error code thrown by f, or "" if it returns normally.
inline std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const koszul::Error& e) {
    return e.code();
  }
  return "";
}

/// Every builtin of dimension at most 10.
inline std::vector<std::string> small_builtins() {
  return {"gl:1", "gl:2", "gl:3", "sl:2", "sl:3", "so:2", "so:3", "so:4", "so:5", "abelian:1", "abelian:3",
          "heisenberg:3", "heisenberg:5", "heisenberg:7", "heisenberg:9"};
}

inline koszul::LieAlgebra algebra(const std::string& ref) { return koszul::builtin(koszul::BuiltinRef::parse(ref)); }

}  // namespace testing
