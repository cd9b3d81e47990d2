// SPDX-License-Identifier: Apache-2.0
#include "sysmod/universe.hpp"

#include "sysmod/error.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

void validateType(const Type& type, const World& world) {
  switch (type.kind()) {
    case Type::Kind::Boolean:
    case Type::Kind::Int:
    case Type::Kind::Void:
      return;
    case Type::Kind::Class:
    case Type::Kind::Oid:
      if (!world.isClassDeclared(type.className())) {
        throw Error(ErrorKind::MalformedType,
                    "undeclared class '" + type.className() + "' in type " +
                        type.str());
      }
      return;
    case Type::Kind::Ref:
    case Type::Kind::Loc:
    case Type::Kind::Set:
    case Type::Kind::List:
      validateType(type.element(), world);
      return;
    case Type::Kind::Prod:
      for (const Type& c : type.components()) validateType(c, world);
      return;
    case Type::Kind::Rec:
      for (const auto& [name, fieldType] : type.fields()) {
        validateType(fieldType, world);
      }
      return;
  }
}

namespace {

bool inCarrierChecked(const Value& v, const Type& t, const World& world) {
  // Underspecified members stand for some element of exactly their
  // carrier's equivalence class.
  if (v.isUnknown()) return typesEquivalent(v.unknownType(), t);

  switch (t.kind()) {
    case Type::Kind::Boolean:
      return v.kind() == Value::Kind::Bool;
    case Type::Kind::Int:
      return v.kind() == Value::Kind::Int;
    case Type::Kind::Void:
      return v.kind() == Value::Kind::Void;
    case Type::Kind::Class:
      // A class name is a reference type, so Nil belongs; identifiers
      // belong to exactly their own class carrier.
      if (v.isNil()) return true;
      return v.isOid() && classOf(v.asOid()) == t.className();
    case Type::Kind::Oid: {
      // CAR(Oid(C)) is the union of the carriers of all subclasses of C.
      // Those are reference carriers, so Nil belongs here as well; link
      // retrieval is unaffected because it ranges over existing
      // identifiers.
      if (v.isNil()) return true;
      if (!v.isOid()) return false;
      const Name& cls = classOf(v.asOid());
      return world.isClassDeclared(cls) &&
             world.isSubclassOf(cls, t.className());
    }
    case Type::Kind::Ref:
      // Non-Nil references are materialized only for class types, which
      // carry their own node; every other reference carrier holds Nil.
      return v.isNil();
    case Type::Kind::Loc: {
      if (v.kind() != Value::Kind::Loc) return false;
      auto registered = world.locationType(v.asLoc());
      return registered && typesEquivalent(*registered, t.element());
    }
    case Type::Kind::Rec: {
      if (v.kind() != Value::Kind::Rec) return false;
      const auto& fields = v.fields();
      const auto& fieldTypes = t.fields();
      if (fields.size() != fieldTypes.size()) return false;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        // Both sides are sorted by name.
        if (fields[i].first != fieldTypes[i].first) return false;
        if (!inCarrierChecked(fields[i].second, fieldTypes[i].second, world)) {
          return false;
        }
      }
      return true;
    }
    case Type::Kind::Prod: {
      if (v.kind() != Value::Kind::Tuple) return false;
      const auto& items = v.items();
      const auto& comps = t.components();
      if (items.size() != comps.size()) return false;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!inCarrierChecked(items[i], comps[i], world)) return false;
      }
      return true;
    }
    case Type::Kind::Set: {
      if (v.kind() != Value::Kind::Set) return false;
      for (const Value& item : v.items()) {
        if (!inCarrierChecked(item, t.element(), world)) return false;
      }
      return true;
    }
    case Type::Kind::List: {
      if (v.kind() != Value::Kind::List) return false;
      for (const Value& item : v.items()) {
        if (!inCarrierChecked(item, t.element(), world)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool inCarrier(const Value& value, const Type& type, const World& world) {
  validateType(type, world);
  return inCarrierChecked(value, type, world);
}

std::optional<Type> typeOf(const Value& value, const World& world) {
  switch (value.kind()) {
    case Value::Kind::Bool:
      return Type::boolean();
    case Value::Kind::Int:
      return Type::integer();
    case Value::Kind::Void:
      return Type::voidType();
    case Value::Kind::Nil:
      return std::nullopt;
    case Value::Kind::Oid: {
      const Name& cls = classOf(value.asOid());
      if (!world.isClassDeclared(cls)) return std::nullopt;
      return Type::classType(cls);
    }
    case Value::Kind::Loc: {
      auto content = world.locationType(value.asLoc());
      if (!content) return std::nullopt;
      return Type::loc(*content);
    }
    case Value::Kind::Rec: {
      std::vector<Type::Field> fields;
      for (const auto& [name, fieldValue] : value.fields()) {
        auto t = typeOf(fieldValue, world);
        if (!t) return std::nullopt;
        fields.emplace_back(name, std::move(*t));
      }
      return Type::rec(std::move(fields));
    }
    case Value::Kind::Tuple: {
      std::vector<Type> comps;
      for (const Value& item : value.items()) {
        auto t = typeOf(item, world);
        if (!t) return std::nullopt;
        comps.push_back(std::move(*t));
      }
      return Type::prod(std::move(comps));
    }
    case Value::Kind::Set:
    case Value::Kind::List: {
      // Typeable only when every element agrees on one most specific type.
      std::optional<Type> element;
      for (const Value& item : value.items()) {
        auto t = typeOf(item, world);
        if (!t) return std::nullopt;
        if (!element) {
          element = std::move(t);
        } else if (!typesEquivalent(*element, *t)) {
          return std::nullopt;
        }
      }
      if (!element) return std::nullopt;  // empty collection: no element type
      return value.kind() == Value::Kind::Set ? Type::set(std::move(*element))
                                              : Type::list(std::move(*element));
    }
    case Value::Kind::Unknown:
      return value.unknownType();
  }
  return std::nullopt;
}

}  // namespace sysmod
