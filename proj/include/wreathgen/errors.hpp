#ifndef WREATHGEN_ERRORS_HPP
#define WREATHGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wreathgen
{

/// Malformed text input (cycle notation, tower specs, group specs).
class parse_error : public std::invalid_argument
{
public:
  explicit parse_error(std::string const &what) : std::invalid_argument(what) {}
};

/// Two permutations (or a permutation and a group) on different point sets.
class degree_mismatch : public std::invalid_argument
{
public:
  explicit degree_mismatch(std::string const &what) : std::invalid_argument(what) {}
};

/// A caller-supplied argument violates an operation's precondition.
class precondition_error : public std::invalid_argument
{
public:
  explicit precondition_error(std::string const &what) : std::invalid_argument(what) {}
};

/// An enumeration would exceed its configured budget.
class budget_exceeded : public std::runtime_error
{
public:
  explicit budget_exceeded(std::string const &what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; always indicates a bug.
class consistency_error : public std::logic_error
{
public:
  explicit consistency_error(std::string const &what) : std::logic_error(what) {}
};

} // namespace wreathgen

#endif // WREATHGEN_ERRORS_HPP
