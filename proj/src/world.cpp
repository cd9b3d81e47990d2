// SPDX-License-Identifier: Apache-2.0
#include "sysmod/world.hpp"

#include <algorithm>

#include "sysmod/error.hpp"
#include "sysmod/universe.hpp"

namespace sysmod {

namespace {

EffectiveAttr* findByName(std::vector<EffectiveAttr>& attrs, const Name& name) {
  for (auto& a : attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

}  // namespace

void World::declareClass(const ClassDecl& decl) {
  if (classes_.count(decl.name)) {
    throw Error(ErrorKind::DuplicateClass,
                "class '" + decl.name + "' already declared");
  }
  for (const Name& super : decl.supers) {
    if (!classes_.count(super)) {
      throw Error(ErrorKind::UnknownSuper,
                  "superclass '" + super + "' of '" + decl.name +
                      "' is not declared");
    }
  }

  // Effective attributes: everything inherited, then the class's own.
  // Homonyms from distinct superclasses are conflicts; the same definition
  // arriving along two inheritance paths is not.
  std::vector<EffectiveAttr> merged;
  for (const Name& super : decl.supers) {
    for (const EffectiveAttr& attr : effectiveAttrs_.at(super)) {
      if (EffectiveAttr* existing = findByName(merged, attr.name)) {
        if (existing->origin != attr.origin) {
          throw Error(ErrorKind::NameConflict,
                      "attribute '" + attr.name + "' reaches '" + decl.name +
                          "' from both '" + existing->origin + "' and '" +
                          attr.origin + "'");
        }
        continue;
      }
      merged.push_back(attr);
    }
  }
  std::set<Name> ownSeen;
  for (const AttrDecl& own : decl.ownAttrs) {
    if (own.name == "self") {
      throw Error(ErrorKind::NameConflict,
                  "'self' is reserved and cannot be declared");
    }
    if (!ownSeen.insert(own.name).second) {
      throw Error(ErrorKind::DuplicateField,
                  "attribute '" + own.name + "' declared twice in class '" +
                      decl.name + "'");
    }
    if (EffectiveAttr* inherited = findByName(merged, own.name)) {
      if (strict_) {
        throw Error(ErrorKind::StrictRedefinition,
                    "class '" + decl.name + "' redeclares inherited attribute '" +
                        own.name + "' (strict inheritance)");
      }
      *inherited = {own.name, own.isMutable, own.contentType, decl.name};
      continue;
    }
    merged.push_back({own.name, own.isMutable, own.contentType, decl.name});
  }

  // Attribute types may mention the class being declared (self references).
  classes_.emplace(decl.name, decl);
  try {
    for (const AttrDecl& own : decl.ownAttrs) {
      validateType(own.contentType, *this);
    }
  } catch (...) {
    classes_.erase(decl.name);
    throw;
  }

  std::set<Name> closure{decl.name};
  for (const Name& super : decl.supers) {
    const auto& above = superClosure_.at(super);
    closure.insert(above.begin(), above.end());
  }
  effectiveAttrs_[decl.name] = std::move(merged);
  superClosure_[decl.name] = std::move(closure);
  classOrder_.push_back(decl.name);
}

void World::declareSubclassOf(const Name& sub, const Name& super) {
  if (!classes_.count(sub)) {
    throw Error(ErrorKind::UnknownClass, "class '" + sub + "' is not declared");
  }
  if (!classes_.count(super)) {
    throw Error(ErrorKind::UnknownClass, "class '" + super + "' is not declared");
  }
  if (superClosure_.at(sub).count(super)) return;  // already sub
  if (superClosure_.at(super).count(sub)) {
    throw Error(ErrorKind::InheritanceCycle,
                "making '" + sub + "' a subclass of '" + super +
                    "' closes an inheritance cycle");
  }
  if (strict_) {
    // attr(super) must be kept, names and types, by the subclass.
    for (const EffectiveAttr& need : effectiveAttrs_.at(super)) {
      const EffectiveAttr* have = findAttribute(sub, need.name);
      if (!have || have->isMutable != need.isMutable ||
          !typesEquivalent(have->contentType, need.contentType)) {
        throw Error(ErrorKind::StrictRedefinition,
                    "'" + sub + "' does not keep attribute '" + need.name +
                        "' of '" + super + "' (strict inheritance)");
      }
    }
  }
  const auto& above = superClosure_.at(super);
  for (auto& [cls, closure] : superClosure_) {
    if (closure.count(sub)) closure.insert(above.begin(), above.end());
  }
  explicitSubEdges_.emplace_back(sub, super);
}

bool World::isSubclassOf(const Name& c1, const Name& c2) const {
  auto it = superClosure_.find(c1);
  if (it == superClosure_.end()) {
    throw Error(ErrorKind::UnknownClass, "class '" + c1 + "' is not declared");
  }
  if (!classes_.count(c2)) {
    throw Error(ErrorKind::UnknownClass, "class '" + c2 + "' is not declared");
  }
  return it->second.count(c2) != 0;
}

const std::vector<EffectiveAttr>& World::attributesOf(const Name& cls) const {
  auto it = effectiveAttrs_.find(cls);
  if (it == effectiveAttrs_.end()) {
    throw Error(ErrorKind::UnknownClass, "class '" + cls + "' is not declared");
  }
  return it->second;
}

const EffectiveAttr* World::findAttribute(const Name& cls, const Name& attr) const {
  for (const EffectiveAttr& a : attributesOf(cls)) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

const EffectiveAttr& World::attribute(const Name& cls, const Name& attr) const {
  const EffectiveAttr* a = findAttribute(cls, attr);
  if (!a) {
    throw Error(ErrorKind::NoSuchAttr,
                "class '" + cls + "' has no attribute '" + attr + "'");
  }
  return *a;
}

Loc World::freshLoc(const Type& contentType) {
  Loc loc{++locCounter_};
  locTypes_.emplace(loc, contentType);
  return loc;
}

Oid World::freshOid(const Name& cls) { return Oid{cls, ++oidCounters_[cls]}; }

World::Instantiated World::instantiate(
    const Store& store, const Name& cls,
    const std::vector<std::pair<Name, Value>>& init) {
  const std::vector<EffectiveAttr>& attrs = attributesOf(cls);

  std::map<Name, const Value*> given;
  for (const auto& [name, value] : init) {
    if (!findAttribute(cls, name)) {
      throw Error(ErrorKind::NoSuchAttr,
                  "class '" + cls + "' has no attribute '" + name + "'");
    }
    given[name] = &value;
  }
  for (const EffectiveAttr& attr : attrs) {
    auto it = given.find(attr.name);
    if (it == given.end()) {
      throw Error(ErrorKind::MissingInit,
                  "attribute '" + attr.name + "' of '" + cls +
                      "' is not initialized");
    }
    if (!inCarrier(*it->second, attr.contentType, *this)) {
      throw Error(ErrorKind::CarrierViolation,
                  "value " + it->second->str() + " is not in the carrier of " +
                      attr.contentType.str() + " (attribute '" + attr.name +
                      "')");
    }
  }

  Oid oid = freshOid(cls);
  std::vector<Value::Field> fields;
  fields.emplace_back("self", Value::oid(oid));
  std::map<Loc, Value> assignments;
  for (const EffectiveAttr& attr : attrs) {
    const Value& value = *given.at(attr.name);
    if (attr.isMutable) {
      Loc loc = freshLoc(attr.contentType);
      fields.emplace_back(attr.name, Value::loc(loc));
      assignments.emplace(loc, value);
    } else {
      fields.emplace_back(attr.name, value);
    }
  }
  objects_.emplace(oid, Value::record(std::move(fields)));

  return {addobj(*this, store, oid, assignments), oid};
}

const Value& World::instanceRecord(const Oid& oid) const {
  auto it = objects_.find(oid);
  if (it == objects_.end()) {
    throw Error(ErrorKind::UnknownOid,
                "object identifier " + oid.str() + " was never allocated");
  }
  return it->second;
}

std::optional<Type> World::locationType(const Loc& loc) const {
  auto it = locTypes_.find(loc);
  if (it == locTypes_.end()) return std::nullopt;
  return it->second;
}

Store World::declareStaticAttr(const Store& store, const Name& name,
                               const Type& type, const Value& init) {
  if (statics_.count(name)) {
    throw Error(ErrorKind::DuplicateStatic,
                "static attribute '" + name + "' already declared");
  }
  validateType(type, *this);
  if (!inCarrier(init, type, *this)) {
    throw Error(ErrorKind::CarrierViolation,
                "value " + init.str() + " is not in the carrier of " +
                    type.str() + " (static '" + name + "')");
  }
  Loc loc = freshLoc(type);
  statics_.emplace(name, StaticEntry{loc, type, init});
  staticOrder_.push_back(name);

  std::map<Loc, Value> mem = store.mem();
  mem.emplace(loc, init);
  return Store(store.oids(), std::move(mem));
}

const AssocDecl& World::assoc(const Name& name) const {
  auto it = assocs_.find(name);
  if (it == assocs_.end()) {
    throw Error(ErrorKind::UnknownAssoc,
                "association '" + name + "' is not declared");
  }
  return it->second;
}

const ClassDecl& World::classDecl(const Name& cls) const {
  auto it = classes_.find(cls);
  if (it == classes_.end()) {
    throw Error(ErrorKind::UnknownClass, "class '" + cls + "' is not declared");
  }
  return it->second;
}

std::vector<std::string> World::modelWarnings() const {
  std::vector<std::string> warnings;
  for (const Name& cls : classOrder_) {
    for (const AttrDecl& attr : classes_.at(cls).ownAttrs) {
      if (attr.isMutable && attr.contentType.kind() == Type::Kind::Loc) {
        warnings.push_back("class '" + cls + "' attribute '" + attr.name +
                           "' stores a location (" + attr.contentType.str() +
                           "); passing locations around enables capsule leaks");
      }
    }
  }
  return warnings;
}

}  // namespace sysmod
