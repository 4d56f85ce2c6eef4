#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gcdlcm {

/// Input outside an operation's domain (zero elements, empty sets where a
/// value is required, malformed cover indices).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No solution exists. `certificate` is a human-readable witness; for cover
/// instances `element` names one element no set contains.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::string certificate,
                  std::optional<std::size_t> element = std::nullopt)
      : std::runtime_error(what),
        certificate_(std::move(certificate)),
        element_(element) {}

  const std::string& certificate() const noexcept { return certificate_; }
  std::optional<std::size_t> element() const noexcept { return element_; }

 private:
  std::string certificate_;
  std::optional<std::size_t> element_;
};

/// An exhaustive oracle was asked to run past its configured cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input. `field` is a JSON-pointer-like path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace gcdlcm
