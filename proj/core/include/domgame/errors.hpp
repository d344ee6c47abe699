#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

/// Raised when an input graph exceeds the order an operation is willing to handle.
class OrderLimitError : public std::invalid_argument {
 public:
  OrderLimitError(const std::string& what, int order, int limit)
      : std::invalid_argument(what + ": order " + std::to_string(order) + " exceeds limit " +
                              std::to_string(limit)),
        order_(order),
        limit_(limit) {}

  int order() const { return order_; }
  int limit() const { return limit_; }

 private:
  int order_;
  int limit_;
};

/// Malformed graph6 or edge-list input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domgame
