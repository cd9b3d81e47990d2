// SPDX-License-Identifier: Apache-2.0
#include "sysmod/type.hpp"

#include <algorithm>
#include <sstream>

#include "sysmod/error.hpp"

namespace sysmod {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedType: return "MalformedType";
    case ErrorKind::DuplicateField: return "DuplicateField";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::FieldSetMismatch: return "FieldSetMismatch";
    case ErrorKind::NoSuchField: return "NoSuchField";
    case ErrorKind::NilDereference: return "NilDereference";
    case ErrorKind::UnknownOid: return "UnknownOid";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DuplicateClass: return "DuplicateClass";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::UnknownSuper: return "UnknownSuper";
    case ErrorKind::InheritanceCycle: return "InheritanceCycle";
    case ErrorKind::NameConflict: return "NameConflict";
    case ErrorKind::StrictRedefinition: return "StrictRedefinition";
    case ErrorKind::MissingInit: return "MissingInit";
    case ErrorKind::CarrierViolation: return "CarrierViolation";
    case ErrorKind::DuplicateStatic: return "DuplicateStatic";
    case ErrorKind::UnmappedLocation: return "UnmappedLocation";
    case ErrorKind::NoSuchAttr: return "NoSuchAttr";
    case ErrorKind::ImmutableAttr: return "ImmutableAttr";
    case ErrorKind::DuplicateObject: return "DuplicateObject";
    case ErrorKind::WrongLocationSet: return "WrongLocationSet";
    case ErrorKind::DuplicateAssoc: return "DuplicateAssoc";
    case ErrorKind::StrategyShapeMismatch: return "StrategyShapeMismatch";
    case ErrorKind::UnknownAssoc: return "UnknownAssoc";
    case ErrorKind::AssocInconsistent: return "AssocInconsistent";
    case ErrorKind::StrategyMismatch: return "StrategyMismatch";
    case ErrorKind::QualifierNotUnique: return "QualifierNotUnique";
    case ErrorKind::MultiplicityViolation: return "MultiplicityViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
  }
  return "Error";
}

Type Type::boolean() { return Type(Kind::Boolean); }
Type Type::integer() { return Type(Kind::Int); }
Type Type::voidType() { return Type(Kind::Void); }

Type Type::basic(const Name& name) {
  if (name == "Boolean" || name == "Bool") return boolean();
  if (name == "Int") return integer();
  if (name == "Void") return voidType();
  throw Error(ErrorKind::MalformedType, "unknown basic type name '" + name + "'");
}

Type Type::classType(Name className) {
  Type t(Kind::Class);
  t.name_ = std::move(className);
  return t;
}

Type Type::ref(Type target) {
  Type t(Kind::Ref);
  t.elems_.push_back(std::move(target));
  return t;
}

Type Type::rec(std::vector<Field> fields) {
  std::sort(fields.begin(), fields.end(),
            [](const Field& a, const Field& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].first == fields[i - 1].first) {
      throw Error(ErrorKind::DuplicateField,
                  "record field '" + fields[i].first + "' declared twice");
    }
  }
  Type t(Kind::Rec);
  t.fields_ = std::move(fields);
  return t;
}

Type Type::prod(std::vector<Type> components) {
  Type t(Kind::Prod);
  t.elems_ = std::move(components);
  return t;
}

Type Type::loc(Type content) {
  Type t(Kind::Loc);
  t.elems_.push_back(std::move(content));
  return t;
}

Type Type::oidOf(Name className) {
  Type t(Kind::Oid);
  t.name_ = std::move(className);
  return t;
}

Type Type::set(Type element) {
  Type t(Kind::Set);
  t.elems_.push_back(std::move(element));
  return t;
}

Type Type::list(Type element) {
  Type t(Kind::List);
  t.elems_.push_back(std::move(element));
  return t;
}

const Name& Type::className() const { return name_; }

const Type& Type::element() const { return elems_.front(); }

const std::vector<Type>& Type::components() const { return elems_; }

const std::vector<Type::Field>& Type::fields() const { return fields_; }

bool Type::hasField(const Name& name) const { return fieldType(name) != nullptr; }

const Type* Type::fieldType(const Name& name) const {
  auto it = std::lower_bound(
      fields_.begin(), fields_.end(), name,
      [](const Field& f, const Name& n) { return f.first < n; });
  if (it != fields_.end() && it->first == name) return &it->second;
  return nullptr;
}

bool Type::operator==(const Type& other) const {
  return kind_ == other.kind_ && name_ == other.name_ &&
         elems_ == other.elems_ && fields_ == other.fields_;
}

bool Type::operator<(const Type& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  if (name_ != other.name_) return name_ < other.name_;
  if (elems_ != other.elems_) return elems_ < other.elems_;
  return fields_ < other.fields_;
}

std::string Type::str() const {
  switch (kind_) {
    case Kind::Boolean: return "Boolean";
    case Kind::Int: return "Int";
    case Kind::Void: return "Void";
    case Kind::Class: return name_;
    case Kind::Ref: return "Ref " + element().str();
    case Kind::Loc: return "Loc(" + element().str() + ")";
    case Kind::Oid: return "Oid(" + name_ + ")";
    case Kind::Set: return "Set(" + element().str() + ")";
    case Kind::List: return "List(" + element().str() + ")";
    case Kind::Prod: {
      std::ostringstream out;
      out << "Prod{";
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ", ";
        out << elems_[i].str();
      }
      out << "}";
      return out.str();
    }
    case Kind::Rec: {
      std::ostringstream out;
      out << "Rec{";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out << ", ";
        out << fields_[i].first << ": " << fields_[i].second.str();
      }
      out << "}";
      return out.str();
    }
  }
  return "?";
}

}  // namespace sysmod
