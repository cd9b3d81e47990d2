// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sysmod/type.hpp"

namespace sysmod {

// An object identifier: a (class name, serial) pair, so the class an
// identifier belongs to is intrinsic and classOf never changes.
struct Oid {
  Name cls;
  std::uint64_t serial = 0;

  bool operator==(const Oid& o) const { return cls == o.cls && serial == o.serial; }
  bool operator!=(const Oid& o) const { return !(*this == o); }
  bool operator<(const Oid& o) const {
    return cls != o.cls ? cls < o.cls : serial < o.serial;
  }
  std::string str() const { return cls + "#" + std::to_string(serial); }
};

// A location identifier. What a location contains comes from the store;
// which content type it carries comes from the world registry.
struct Loc {
  std::uint64_t serial = 0;

  bool operator==(const Loc& l) const { return serial == l.serial; }
  bool operator!=(const Loc& l) const { return serial != l.serial; }
  bool operator<(const Loc& l) const { return serial < l.serial; }
  std::string str() const { return "loc#" + std::to_string(serial); }
};

// A member of the value universe. Values are immutable; all "updates"
// build new values. Sets are kept sorted and deduplicated so that value
// equality is set equality.
//
// Unknown(T) stands for an underspecified member of CAR(T): we know the
// carrier it lives in but not which member it is. It passes the carrier
// check for exactly T's equivalence class.
class Value {
 public:
  enum class Kind { Bool, Int, Void, Nil, Oid, Loc, Rec, Tuple, Set, List, Unknown };

  using Field = std::pair<Name, Value>;

  Value() : kind_(Kind::Nil) {}

  static Value boolean(bool b);
  static Value integer(std::int64_t i);
  static Value voidValue();
  static Value nil();
  static Value oid(Oid oid);
  static Value loc(Loc loc);
  // Sorts fields by name; throws DuplicateField on a repeated name.
  static Value record(std::vector<Field> fields);
  static Value tuple(std::vector<Value> items);
  static Value set(std::vector<Value> items);
  static Value list(std::vector<Value> items);
  static Value unknown(Type type);

  Kind kind() const { return kind_; }
  bool isNil() const { return kind_ == Kind::Nil; }
  bool isOid() const { return kind_ == Kind::Oid; }
  bool isUnknown() const { return kind_ == Kind::Unknown; }

  bool asBool() const;
  std::int64_t asInt() const;
  const Oid& asOid() const;
  const Loc& asLoc() const;
  const std::vector<Field>& fields() const;      // Rec, sorted by name
  const std::vector<Value>& items() const;       // Tuple / Set / List
  const Type& unknownType() const;               // Unknown

  bool hasField(const Name& name) const;
  const Value* field(const Name& name) const;

  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }
  // Total order; used for canonical sets and deterministic output only.
  // It is not a semantic "less than" on references.
  bool operator<(const Value& other) const;

  std::string str() const;  // e.g. "5", "true", "nil", "A#1", "{1, 2}"

 private:
  explicit Value(Kind kind) : kind_(kind) {}

  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  Oid oid_;
  Loc loc_;
  std::vector<Field> fields_;
  std::vector<Value> items_;
  std::optional<Type> unknownType_;
};

// The class an identifier belongs to; immutable for the identifier's lifetime.
inline const Name& classOf(const Oid& oid) { return oid.cls; }

}  // namespace sysmod
