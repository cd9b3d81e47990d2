// SPDX-License-Identifier: Apache-2.0
#include "sysmod/record_ops.hpp"

#include <algorithm>

#include "sysmod/error.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

Type mkRec(const std::vector<Type::Field>& fields) { return Type::rec(fields); }

std::set<Name> attrOf(const Type& type) {
  if (type.kind() == Type::Kind::Ref) return attrOf(type.element());
  std::set<Name> names;
  if (type.kind() == Type::Kind::Rec) {
    for (const auto& [name, fieldType] : type.fields()) names.insert(name);
  }
  return names;
}

const Value& deref(const Value& ref, const World& world) {
  if (ref.isNil()) {
    throw Error(ErrorKind::NilDereference, "cannot dereference Nil");
  }
  if (!ref.isOid()) {
    throw Error(ErrorKind::TypeMismatch,
                "cannot dereference non-reference value " + ref.str());
  }
  return world.instanceRecord(ref.asOid());
}

Value proj(const Value& value, const Name& attr, const World& world) {
  if (value.kind() == Value::Kind::Rec) {
    const Value* field = value.field(attr);
    if (!field) {
      throw Error(ErrorKind::NoSuchField,
                  "record " + value.str() + " has no field '" + attr + "'");
    }
    return *field;
  }
  // References project through one dereference: r -> a = proj(a)(*r).
  return proj(deref(value, world), attr, world);
}

Value recFromTuple(const std::vector<Name>& names, const Value& tuple) {
  const auto& items = tuple.items();
  if (names.size() != items.size()) {
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(names.size()) + " names for a tuple of arity " +
                    std::to_string(items.size()));
  }
  std::vector<Value::Field> fields;
  fields.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    fields.emplace_back(names[i], items[i]);
  }
  return Value::record(std::move(fields));  // rejects duplicate names
}

Value tupleFromRec(const std::vector<Name>& names, const Value& record) {
  const auto& fields = record.fields();
  std::set<Name> given(names.begin(), names.end());
  bool matches = given.size() == names.size() && fields.size() == names.size();
  if (matches) {
    for (const auto& [name, value] : fields) {
      if (!given.count(name)) {
        matches = false;
        break;
      }
    }
  }
  if (!matches) {
    throw Error(ErrorKind::FieldSetMismatch,
                "name list does not enumerate the record's attribute set");
  }
  std::vector<Value> items;
  items.reserve(names.size());
  for (const Name& name : names) items.push_back(*record.field(name));
  return Value::tuple(std::move(items));
}

}  // namespace sysmod
