#pragma once

#include <stdexcept>
#include <string>

namespace reldisp {

//! Base of every error raised by the library. The kind groups errors by
//! how a caller should react: bad input data versus a computation that is
//! undefined for otherwise valid data.
class Error : public std::runtime_error
{
public:
  enum class Category
  {
    Data,        // malformed or out-of-contract input values
    Computation, // valid input, but the requested quantity is undefined
    Config       // invalid parameters / flags
  };

  Error(Category category, std::string code, const std::string& what)
    : std::runtime_error(what)
    , category_(category)
    , code_(std::move(code))
  {}

  Category category() const noexcept { return category_; }

  //! Short machine-readable identifier, e.g. "degenerate_sample".
  const std::string& code() const noexcept { return code_; }

private:
  Category category_;
  std::string code_;
};

class InvalidSampleError : public Error
{
public:
  explicit InvalidSampleError(const std::string& what)
    : Error(Category::Data, "invalid_sample", what)
  {}
};

class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(Category::Data, "parse_error", what)
    , line_(line)
    , column_(column)
  {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class CoverageError : public Error
{
public:
  CoverageError(const std::string& what, double value)
    : Error(Category::Data, "coverage_error", what)
    , value_(value)
  {}

  double value() const noexcept { return value_; }

private:
  double value_;
};

class DomainError : public Error
{
public:
  explicit DomainError(const std::string& what)
    : Error(Category::Computation, "domain_error", what)
  {}
};

class DegenerateSampleError : public Error
{
public:
  explicit DegenerateSampleError(const std::string& what)
    : Error(Category::Computation, "degenerate_sample", what)
  {}
};

class InsufficientSampleError : public Error
{
public:
  explicit InsufficientSampleError(const std::string& what)
    : Error(Category::Computation, "insufficient_sample", what)
  {}
};

class UndefinedCoefficientError : public Error
{
public:
  explicit UndefinedCoefficientError(const std::string& what)
    : Error(Category::Computation, "undefined_coefficient", what)
  {}
};

class NoMinimumError : public Error
{
public:
  NoMinimumError(const std::string& what, double lower, double upper)
    : Error(Category::Computation, "no_minimum", what)
    , lower_(lower)
    , upper_(upper)
  {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

private:
  double lower_;
  double upper_;
};

class ConfigError : public Error
{
public:
  explicit ConfigError(const std::string& what)
    : Error(Category::Config, "config_error", what)
  {}
};

} // namespace reldisp
