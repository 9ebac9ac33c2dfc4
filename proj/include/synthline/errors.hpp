#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synthline {

// All library failures derive from Error and carry a stable machine-readable
// kind ("LabelOutOfSpace", "HttpError", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Record/dataset validation failure; names the offending key when one exists.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, std::string key, const std::string& message)
      : Error(std::move(kind), message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, const std::string& message)
      : Error("ParseError", message), line_no_(line_no) {}

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::size_t line_no_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IoError", message) {}
};

// Configuration failures map to process exit code 2.
class ConfigError : public Error {
 public:
  ConfigError(std::string kind, const std::string& message)
      : Error(std::move(kind), message) {}
};

class HttpError : public Error {
 public:
  HttpError(int status, const std::string& message)
      : Error("HttpError", message), status_(status) {}

  int status() const noexcept { return status_; }

 private:
  int status_;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::size_t collected, std::size_t target, const std::string& message)
      : Error("BudgetExhausted", message), collected_(collected), target_(target) {}

  std::size_t collected() const noexcept { return collected_; }
  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t collected_;
  std::size_t target_;
};

}  // namespace synthline
