// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sysmod {

// Names are primitives: opaque identifier strings compared by content.
using Name = std::string;

// A type name: a symbolic tree naming a carrier set. This is a deep
// embedding -- type names are ordinary data, not host-language types.
//
// Construction canonicalizes: record fields are kept sorted by name and
// basic-name aliases (Bool vs Boolean) resolve to one node, so type
// equivalence (equal carrier sets) coincides with structural equality.
class Type {
 public:
  enum class Kind {
    Boolean,  // CAR = {true, false}
    Int,      // CAR = the integers
    Void,     // CAR = {void}
    Class,    // object identifiers of exactly this class (a reference type)
    Ref,      // references to T; carrier holds Nil for every T
    Rec,      // name-tagged records, field order irrelevant
    Prod,     // Cartesian products, component order significant
    Loc,      // locations whose content has type T
    Oid,      // identifiers of the class and all its subclasses
    Set,      // finite sets over T (collection extension)
    List,     // finite lists over T (collection extension)
  };

  using Field = std::pair<Name, Type>;

  static Type boolean();
  static Type integer();
  static Type voidType();
  // Resolves basic-name aliases; throws MalformedType for an unknown basic.
  static Type basic(const Name& name);
  static Type classType(Name className);
  static Type ref(Type target);
  // Sorts fields by name; throws DuplicateField on a repeated name.
  static Type rec(std::vector<Field> fields);
  static Type prod(std::vector<Type> components);
  static Type loc(Type content);
  static Type oidOf(Name className);
  static Type set(Type element);
  static Type list(Type element);

  Kind kind() const { return kind_; }
  bool isBasic() const {
    return kind_ == Kind::Boolean || kind_ == Kind::Int || kind_ == Kind::Void;
  }

  const Name& className() const;                 // Class / Oid
  const Type& element() const;                   // Ref / Loc / Set / List
  const std::vector<Type>& components() const;   // Prod
  const std::vector<Field>& fields() const;      // Rec, sorted by name
  bool hasField(const Name& name) const;
  const Type* fieldType(const Name& name) const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }
  bool operator<(const Type& other) const;  // arbitrary total order

  // Concrete syntax of the model language, e.g. "Rec{a: Int, b: Boolean}".
  std::string str() const;

 private:
  explicit Type(Kind kind) : kind_(kind) {}

  Kind kind_;
  Name name_;                 // Class / Oid
  std::vector<Type> elems_;   // unary constructors use one slot; Prod uses n
  std::vector<Field> fields_; // Rec
};

// Type equivalence: equal carrier sets. Canonical construction makes this
// structural equality; it is a decidable equivalence relation.
inline bool typesEquivalent(const Type& a, const Type& b) { return a == b; }

}  // namespace sysmod
