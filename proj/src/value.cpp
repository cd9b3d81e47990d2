// SPDX-License-Identifier: Apache-2.0
#include "sysmod/value.hpp"

#include <algorithm>
#include <sstream>

#include "sysmod/error.hpp"

namespace sysmod {

Value Value::boolean(bool b) {
  Value v(Kind::Bool);
  v.bool_ = b;
  return v;
}

Value Value::integer(std::int64_t i) {
  Value v(Kind::Int);
  v.int_ = i;
  return v;
}

Value Value::voidValue() { return Value(Kind::Void); }

Value Value::nil() { return Value(Kind::Nil); }

Value Value::oid(Oid oid) {
  Value v(Kind::Oid);
  v.oid_ = std::move(oid);
  return v;
}

Value Value::loc(Loc loc) {
  Value v(Kind::Loc);
  v.loc_ = loc;
  return v;
}

Value Value::record(std::vector<Field> fields) {
  std::sort(fields.begin(), fields.end(),
            [](const Field& a, const Field& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].first == fields[i - 1].first) {
      throw Error(ErrorKind::DuplicateField,
                  "record value binds '" + fields[i].first + "' twice");
    }
  }
  Value v(Kind::Rec);
  v.fields_ = std::move(fields);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v(Kind::Tuple);
  v.items_ = std::move(items);
  return v;
}

Value Value::set(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Value v(Kind::Set);
  v.items_ = std::move(items);
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v(Kind::List);
  v.items_ = std::move(items);
  return v;
}

Value Value::unknown(Type type) {
  Value v(Kind::Unknown);
  v.unknownType_ = std::move(type);
  return v;
}

namespace {
[[noreturn]] void wrongKind(const char* what) {
  throw Error(ErrorKind::TypeMismatch, std::string("value is not ") + what);
}
}  // namespace

bool Value::asBool() const {
  if (kind_ != Kind::Bool) wrongKind("a boolean");
  return bool_;
}

std::int64_t Value::asInt() const {
  if (kind_ != Kind::Int) wrongKind("an integer");
  return int_;
}

const Oid& Value::asOid() const {
  if (kind_ != Kind::Oid) wrongKind("an object identifier");
  return oid_;
}

const Loc& Value::asLoc() const {
  if (kind_ != Kind::Loc) wrongKind("a location");
  return loc_;
}

const std::vector<Value::Field>& Value::fields() const {
  if (kind_ != Kind::Rec) wrongKind("a record");
  return fields_;
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::Tuple && kind_ != Kind::Set && kind_ != Kind::List) {
    wrongKind("a tuple or collection");
  }
  return items_;
}

const Type& Value::unknownType() const {
  if (kind_ != Kind::Unknown) wrongKind("an underspecified value");
  return *unknownType_;
}

bool Value::hasField(const Name& name) const { return field(name) != nullptr; }

const Value* Value::field(const Name& name) const {
  if (kind_ != Kind::Rec) return nullptr;
  auto it = std::lower_bound(
      fields_.begin(), fields_.end(), name,
      [](const Field& f, const Name& n) { return f.first < n; });
  if (it != fields_.end() && it->first == name) return &it->second;
  return nullptr;
}

bool Value::operator==(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Bool: return bool_ == other.bool_;
    case Kind::Int: return int_ == other.int_;
    case Kind::Void:
    case Kind::Nil: return true;
    case Kind::Oid: return oid_ == other.oid_;
    case Kind::Loc: return loc_ == other.loc_;
    case Kind::Rec: return fields_ == other.fields_;
    case Kind::Tuple:
    case Kind::Set:
    case Kind::List: return items_ == other.items_;
    case Kind::Unknown: return *unknownType_ == *other.unknownType_;
  }
  return false;
}

bool Value::operator<(const Value& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::Bool: return bool_ < other.bool_;
    case Kind::Int: return int_ < other.int_;
    case Kind::Void:
    case Kind::Nil: return false;
    case Kind::Oid: return oid_ < other.oid_;
    case Kind::Loc: return loc_ < other.loc_;
    case Kind::Rec: return fields_ < other.fields_;
    case Kind::Tuple:
    case Kind::Set:
    case Kind::List: return items_ < other.items_;
    case Kind::Unknown: return *unknownType_ < *other.unknownType_;
  }
  return false;
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::Bool: return bool_ ? "true" : "false";
    case Kind::Int: return std::to_string(int_);
    case Kind::Void: return "void";
    case Kind::Nil: return "nil";
    case Kind::Oid: return oid_.str();
    case Kind::Loc: return loc_.str();
    case Kind::Unknown: return "unknown";
    case Kind::Rec: {
      std::ostringstream out;
      out << "[";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out << ", ";
        out << fields_[i].first << " = " << fields_[i].second.str();
      }
      out << "]";
      return out.str();
    }
    case Kind::Tuple:
    case Kind::Set:
    case Kind::List: {
      const char* open = kind_ == Kind::Tuple ? "(" : kind_ == Kind::Set ? "{" : "[";
      const char* close = kind_ == Kind::Tuple ? ")" : kind_ == Kind::Set ? "}" : "]";
      std::ostringstream out;
      out << open;
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out << ", ";
        out << items_[i].str();
      }
      out << close;
      return out.str();
    }
  }
  return "?";
}

}  // namespace sysmod
