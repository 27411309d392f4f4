#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace ztp {

struct Error {
  std::string message;
};

// Value-or-error carrier used by every fallible operation in the library.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  static Result failure(std::string message) { return Result(Error{std::move(message)}); }

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() & {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }

  const std::string& error() const {
    assert(!ok());
    return std::get<Error>(v_).message;
  }

 private:
  std::variant<T, Error> v_;
};

template <>
class Result<void> {
 public:
  Result() = default;
  Result(Error err) : err_(std::move(err)) {}

  static Result failure(std::string message) { return Result(Error{std::move(message)}); }

  bool ok() const { return !err_.has_value(); }
  explicit operator bool() const { return ok(); }

  const std::string& error() const {
    assert(!ok());
    return err_->message;
  }

 private:
  std::optional<Error> err_;
};

}  // namespace ztp
