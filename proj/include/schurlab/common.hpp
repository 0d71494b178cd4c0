#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurlab {

/// Group elements are indices 0..n-1; the identity is always 0.
using Element = int;

/// A set of elements, kept sorted ascending and duplicate-free.
using ElementSet = std::vector<Element>;

using BigInt = boost::multiprecision::cpp_int;

/// Hard limit on the order of any group this library constructs.
inline constexpr int kMaxOrder = 128;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked to work above one of its configured caps.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a backtracking search runs out of its node budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

ElementSet normalized(ElementSet s);
bool contains(const ElementSet& s, Element x);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);

std::string to_string(const BigInt& v);

}  // namespace schurlab
