#pragma once

#include <string>
#include <utility>
#include <variant>

namespace deckhand {

struct Error {
  std::string message;
};

/// Value-or-error carrier used across module boundaries. Tool dispatch and
/// parsers report failures through this instead of throwing.
template <typename T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(Error err) : data_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<T>(data_); }
  const T& value() const { return std::get<T>(data_); }
  T&& take() { return std::move(std::get<T>(data_)); }

  const Error& error() const { return std::get<Error>(data_); }

 private:
  std::variant<T, Error> data_;
};

template <>
class Result<void> {
 public:
  Result() = default;
  Result(Error err) : err_(std::move(err)), failed_(true) {}

  bool ok() const { return !failed_; }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return err_; }

 private:
  Error err_;
  bool failed_ = false;
};

inline Error Err(std::string message) { return Error{std::move(message)}; }

}  // namespace deckhand
