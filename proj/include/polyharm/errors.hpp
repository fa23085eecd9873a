#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

/// Argument outside the mathematical domain of an evaluator (angle, order, radius).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested closed form does not exist for this order (e.g. r = 2 where r >= 3 is needed).
class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator received a section of the wrong shape, or produced one.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_domain(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace polyharm
