#pragma once

#include <stdexcept>
#include <string>

namespace repvol {

// A mathematical precondition or domain invariant was violated
// (zero Euler number, genus-0 base, bad gluing determinant, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input description. `field` is a JSON-pointer-like path such
// as "fibers[0]"; it prefixes the message.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message),
          field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace repvol
