// SPDX-License-Identifier: Apache-2.0
//
// Brute-force link extraction coded straight from the defining set
// comprehensions, reading instance records and the location map directly.
// Deliberately independent of the library's retrieval functions (relOf,
// valAttr): these stay the second route of every dual check.
#pragma once

#include <optional>

#include "sysmod/assoc.hpp"
#include "sysmod/store.hpp"
#include "sysmod/world.hpp"

namespace sysmod::testing {

inline std::optional<Value> rawAttr(const World& world, const Store& store,
                                    const Oid& oid, const Name& attr) {
  const EffectiveAttr* decl = world.findAttribute(classOf(oid), attr);
  if (!decl) return std::nullopt;
  const Value* field = world.instanceRecord(oid).field(attr);
  if (!decl->isMutable) return *field;
  auto it = store.mem().find(field->asLoc());
  if (it == store.mem().end()) return std::nullopt;
  return it->second;
}

inline bool fits(const World& world, const Store& store, const Value& v,
                 const Name& signatureClass) {
  return v.isOid() && store.contains(v.asOid()) &&
         world.isSubclassOf(classOf(v.asOid()), signatureClass);
}

// { (x, y) in Oid(A) x Oid(B) | y = ds(x.attr) }, quadratic over the
// existing objects.
inline LinkSet oracleDirect(const World& world, const Store& store,
                            const Name& ownerClass, const Name& targetClass,
                            const Name& attr, std::size_t ownerIndex = 0) {
  LinkSet out;
  for (const Oid& x : store.oids()) {
    if (!world.isSubclassOf(classOf(x), ownerClass)) continue;
    for (const Oid& y : store.oids()) {
      if (!world.isSubclassOf(classOf(y), targetClass)) continue;
      auto held = rawAttr(world, store, x, attr);
      if (held && *held == Value::oid(y)) {
        LinkTuple tuple(2, Value::nil());
        tuple[ownerIndex] = Value::oid(x);
        tuple[1 - ownerIndex] = Value::oid(y);
        out.insert(std::move(tuple));
      }
    }
  }
  return out;
}

// { (x1..xn, e1..ek) | exists m in CAR(Med): xi = ds(m.ri), ej = ds(m.cj) }
inline LinkSet oracleMediator(const World& world, const Store& store,
                              const std::vector<Name>& signature,
                              const Name& mediatorClass,
                              const std::vector<Name>& roles,
                              const std::vector<Name>& extras) {
  LinkSet out;
  for (const Oid& m : store.oids()) {
    if (classOf(m) != mediatorClass) continue;
    LinkTuple tuple;
    bool ok = true;
    for (std::size_t i = 0; i < signature.size(); ++i) {
      auto end = rawAttr(world, store, m, roles[i]);
      if (!end || !fits(world, store, *end, signature[i])) {
        ok = false;
        break;
      }
      tuple.push_back(*end);
    }
    if (!ok) continue;
    for (const Name& extra : extras) {
      auto v = rawAttr(world, store, m, extra);
      if (!v) {
        ok = false;
        break;
      }
      tuple.push_back(*v);
    }
    if (ok) out.insert(std::move(tuple));
  }
  return out;
}

// { (x, y) | x in vals(ds, y.coll) }, the collection-side derivation.
inline LinkSet oracleCollection(const World& world, const Store& store,
                                const Name& sideA, const Name& sideB,
                                const Name& collectionAttr) {
  LinkSet out;
  for (const Oid& y : store.oids()) {
    if (!world.isSubclassOf(classOf(y), sideB)) continue;
    for (const Oid& x : store.oids()) {
      if (!world.isSubclassOf(classOf(x), sideA)) continue;
      auto coll = rawAttr(world, store, y, collectionAttr);
      if (!coll || coll->kind() != Value::Kind::Set) continue;
      for (const Value& member : coll->items()) {
        if (member == Value::oid(x)) {
          out.insert(LinkTuple{Value::oid(x), Value::oid(y)});
        }
      }
    }
  }
  return out;
}

inline std::map<Oid, std::vector<Value>> oracleOrdered(const World& world,
                                                       const Store& store,
                                                       const Name& ownerClass,
                                                       const Name& listAttr) {
  std::map<Oid, std::vector<Value>> out;
  for (const Oid& x : store.oids()) {
    if (!world.isSubclassOf(classOf(x), ownerClass)) continue;
    auto list = rawAttr(world, store, x, listAttr);
    if (!list || list->kind() != Value::Kind::List) continue;
    out.emplace(x, list->items());
  }
  return out;
}

inline LinkSet oracleOrderedFlattened(const World& world, const Store& store,
                                      const Name& ownerClass,
                                      const Name& targetClass,
                                      const Name& listAttr,
                                      std::size_t ownerIndex = 0) {
  LinkSet out;
  for (const auto& [owner, items] : oracleOrdered(world, store, ownerClass, listAttr)) {
    for (const Value& member : items) {
      if (!fits(world, store, member, targetClass)) continue;
      LinkTuple tuple(2, Value::nil());
      tuple[ownerIndex] = Value::oid(owner);
      tuple[1 - ownerIndex] = member;
      out.insert(std::move(tuple));
    }
  }
  return out;
}

}  // namespace sysmod::testing
