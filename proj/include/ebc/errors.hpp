#ifndef EBC_ERRORS_HPP
#define EBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ebc {

/// Violation of a mathematical precondition (bad group, bad point, ...).
/// `clause` optionally names the rule that rejected the input.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what, std::string clause = "")
      : std::runtime_error(what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

private:
  std::string clause_;
};

/// Syntax error in the bundle DSL or a CLI literal; `pos` is a 0-based
/// character offset into the offending text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

} // namespace ebc

#endif
