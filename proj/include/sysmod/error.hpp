// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sysmod {

// Every failure mode of the library. Checkers report well-formedness
// violations as data (see Violation in store.hpp); operations whose
// preconditions fail throw Error with one of these kinds.
enum class ErrorKind {
  // universe / constructors
  MalformedType,
  DuplicateField,
  ArityMismatch,
  FieldSetMismatch,
  NoSuchField,
  NilDereference,
  UnknownOid,
  TypeMismatch,
  // classes
  DuplicateClass,
  UnknownClass,
  UnknownSuper,
  InheritanceCycle,
  NameConflict,
  StrictRedefinition,
  MissingInit,
  CarrierViolation,
  DuplicateStatic,
  // data store
  UnmappedLocation,
  NoSuchAttr,
  ImmutableAttr,
  DuplicateObject,
  WrongLocationSet,
  // associations
  DuplicateAssoc,
  StrategyShapeMismatch,
  UnknownAssoc,
  AssocInconsistent,
  StrategyMismatch,
  QualifierNotUnique,
  MultiplicityViolation,
  // model language / scripts
  SyntaxError,
  UnboundVariable,
  AssertionFailed,
};

const char* errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(message)) {}

  // Positioned diagnostic, used by the parsers.
  Error(ErrorKind kind, int line, int column, std::string message)
      : std::runtime_error(std::string(errorKindName(kind)) + " at " +
                           std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        kind_(kind),
        detail_(std::move(message)),
        line_(line),
        column_(column) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  bool positioned() const { return line_ > 0; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace sysmod
