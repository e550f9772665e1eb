#pragma once

#include <stdexcept>
#include <string>

namespace vancoh {

// Input data contradicts a mathematical precondition (e.g. d does not
// divide e, or a rank formula would go negative).  CLI exit code 2.
class InconsistentInputError : public std::runtime_error {
  public:
    explicit InconsistentInputError(const std::string& what) : std::runtime_error(what) {}
};

// A required stratum cohomology fact or incidence block is missing.
class IncompleteDataError : public std::runtime_error {
  public:
    explicit IncompleteDataError(const std::string& what) : std::runtime_error(what) {}
};

// A cochain complex whose differentials do not compose to zero.
class InvalidComplexError : public std::runtime_error {
  public:
    explicit InvalidComplexError(const std::string& what) : std::runtime_error(what) {}
};

// An identity the library guarantees internally failed; indicates a bug,
// not a user error.
class InternalInvariantError : public std::logic_error {
  public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

// Input file does not match the documented JSON schema.
class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& field, const std::string& what)
        : std::runtime_error("field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

}  // namespace vancoh
