#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace egodyn {

/// Bad caller input: out-of-range parameters, violated preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration field failed validation.
class ConfigError : public ParameterError {
 public:
  ConfigError(std::string field, const std::string& message)
      : ParameterError("config field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Connectivity rejection sampling ran out of attempts.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No connectivity-preserving rewire was found within the retry cap.
class RewireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A failure inside a multi-round simulation, tagged with the round it hit.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(std::size_t round_index, const std::string& what)
      : std::runtime_error("round " + std::to_string(round_index) + ": " + what),
        round_index_(round_index) {}

  std::size_t round_index() const noexcept { return round_index_; }

 private:
  std::size_t round_index_;
};

/// Syntactically invalid input line in a round file or metrics CSV.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace egodyn
