#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distcrypt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad shapes, out-of-range parameters, unparsable files.
class InputInvalid : public Error {
 public:
  using Error::Error;
};

/// Decryption could not single out the message element.
class ProtocolError : public Error {
 public:
  enum class Kind { MalformedPayload, AmbiguousPayload };

  ProtocolError(Kind kind, const std::string& detail)
      : Error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  static const char* kind_name(Kind kind) noexcept {
    return kind == Kind::MalformedPayload ? "malformed-payload"
                                          : "ambiguous-payload";
  }

 private:
  Kind kind_;
};

/// A search ran into its configured state budget.
class ResourceCapExceeded : public Error {
 public:
  explicit ResourceCapExceeded(std::size_t states_reached)
      : Error("state cap exceeded after " + std::to_string(states_reached) +
              " states"),
        states_reached_(states_reached) {}

  std::size_t states_reached() const noexcept { return states_reached_; }

 private:
  std::size_t states_reached_;
};

}  // namespace distcrypt
