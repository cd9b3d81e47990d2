// SPDX-License-Identifier: Apache-2.0
#include "sysmod/assoc.hpp"

#include <algorithm>
#include <sstream>

#include "sysmod/error.hpp"
#include "sysmod/universe.hpp"

namespace sysmod {

namespace {

// True iff a location of this content type can hold identifiers fitting
// the given signature class: Class(D) or Oid(D) with D related to it.
// A narrower D stores a sublass's identifiers only; a wider D stores more
// than the side, and retrieval filters to the signature.
bool holdsIdentifiersOf(const World& world, const Type& contentType,
                        const Name& signatureClass) {
  if (contentType.kind() != Type::Kind::Class &&
      contentType.kind() != Type::Kind::Oid) {
    return false;
  }
  const Name& held = contentType.className();
  return world.isSubclassOf(held, signatureClass) ||
         world.isSubclassOf(signatureClass, held);
}

const EffectiveAttr& requireAttr(const World& world, const Name& cls,
                                 const Name& attr, const Name& assoc) {
  const EffectiveAttr* a = world.findAttribute(cls, attr);
  if (!a) {
    throw Error(ErrorKind::StrategyShapeMismatch,
                "association '" + assoc + "': class '" + cls +
                    "' has no attribute '" + attr + "'");
  }
  return *a;
}

void requireArity(const AssocDecl& decl, std::size_t arity) {
  if (decl.signature.size() != arity) {
    throw Error(ErrorKind::StrategyShapeMismatch,
                "association '" + decl.name + "': this strategy needs arity " +
                    std::to_string(arity) + ", signature has " +
                    std::to_string(decl.signature.size()));
  }
}

std::size_t resolveOwnerIndex(const AssocDecl& decl, const Name& ownerClass) {
  for (std::size_t i = 0; i < decl.signature.size(); ++i) {
    if (decl.signature[i] == ownerClass) return i;
  }
  throw Error(ErrorKind::StrategyShapeMismatch,
              "association '" + decl.name + "': class '" + ownerClass +
                  "' is not in the signature");
}

// First-fit role resolution for mediator-backed strategies: each signature
// position claims, in the mediator's attribute declaration order, the first
// unclaimed attribute that can hold that side's identifiers.
std::vector<Name> resolveRoles(const World& world, const AssocDecl& decl,
                               const Name& mediatorClass,
                               std::set<Name>& claimed) {
  const auto& attrs = world.attributesOf(mediatorClass);
  std::vector<Name> roles;
  for (const Name& side : decl.signature) {
    const EffectiveAttr* found = nullptr;
    for (const EffectiveAttr& attr : attrs) {
      if (claimed.count(attr.name)) continue;
      if (holdsIdentifiersOf(world, attr.contentType, side)) {
        found = &attr;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': mediator '" +
                      mediatorClass + "' has no unclaimed attribute for side '" +
                      side + "'");
    }
    claimed.insert(found->name);
    roles.push_back(found->name);
  }
  return roles;
}

}  // namespace

void World::declareAssoc(AssocDecl decl) {
  if (assocs_.count(decl.name)) {
    throw Error(ErrorKind::DuplicateAssoc,
                "association '" + decl.name + "' already declared");
  }
  if (decl.signature.size() < 2) {
    throw Error(ErrorKind::StrategyShapeMismatch,
                "association '" + decl.name + "' needs at least two classes");
  }
  for (const Name& cls : decl.signature) {
    if (!isClassDeclared(cls)) {
      throw Error(ErrorKind::UnknownClass,
                  "association '" + decl.name + "' names undeclared class '" +
                      cls + "'");
    }
  }

  if (auto* s = std::get_if<AttributeOwned>(&decl.strategy)) {
    requireArity(decl, 2);
    s->ownerIndex = resolveOwnerIndex(decl, s->ownerClass);
    const Name& target = decl.signature[1 - s->ownerIndex];
    const EffectiveAttr& attr =
        requireAttr(*this, s->ownerClass, s->attrName, decl.name);
    if (!attr.isMutable || !holdsIdentifiersOf(*this, attr.contentType, target)) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': attribute '" + s->attrName +
                      "' of '" + s->ownerClass +
                      "' is not a mutable to-1 link to '" + target + "'");
    }
    decl.extraTypes.clear();
  } else if (auto* s = std::get_if<MediatorStrategy>(&decl.strategy)) {
    if (!isClassDeclared(s->mediatorClass)) {
      throw Error(ErrorKind::UnknownClass,
                  "association '" + decl.name + "' names undeclared mediator '" +
                      s->mediatorClass + "'");
    }
    std::set<Name> claimed;
    s->roleAttrs = resolveRoles(*this, decl, s->mediatorClass, claimed);
    s->extraAttrs.clear();
    decl.extraTypes.clear();
    for (const EffectiveAttr& attr : attributesOf(s->mediatorClass)) {
      if (!claimed.count(attr.name)) {
        s->extraAttrs.push_back(attr.name);
        decl.extraTypes.push_back(attr.contentType);
      }
    }
  } else if (auto* s = std::get_if<RedundantHybrid>(&decl.strategy)) {
    requireArity(decl, 2);
    const Name& sideA = decl.signature[0];
    const Name& sideB = decl.signature[1];
    if (s->directClass != sideA || s->collectionClass != sideB) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name +
                      "': the direct attribute lives on '" + sideA +
                      "' and the collection on '" + sideB + "'");
    }
    const EffectiveAttr& direct = requireAttr(*this, sideA, s->directAttr, decl.name);
    if (!direct.isMutable || !holdsIdentifiersOf(*this, direct.contentType, sideB)) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': attribute '" +
                      s->directAttr + "' of '" + sideA +
                      "' is not a mutable to-1 link to '" + sideB + "'");
    }
    const EffectiveAttr& coll =
        requireAttr(*this, sideB, s->collectionAttr, decl.name);
    if (!coll.isMutable || coll.contentType.kind() != Type::Kind::Set ||
        !holdsIdentifiersOf(*this, coll.contentType.element(), sideA)) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': attribute '" +
                      s->collectionAttr + "' of '" + sideB +
                      "' is not a mutable set over '" + sideA + "' identifiers");
    }
    decl.extraTypes.clear();
  } else if (auto* s = std::get_if<OrderedStrategy>(&decl.strategy)) {
    requireArity(decl, 2);
    s->ownerIndex = resolveOwnerIndex(decl, s->ownerClass);
    const Name& target = decl.signature[1 - s->ownerIndex];
    const EffectiveAttr& attr =
        requireAttr(*this, s->ownerClass, s->listAttr, decl.name);
    if (!attr.isMutable || attr.contentType.kind() != Type::Kind::List ||
        !holdsIdentifiersOf(*this, attr.contentType.element(), target)) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': attribute '" + s->listAttr +
                      "' of '" + s->ownerClass +
                      "' is not a mutable list over '" + target + "' identifiers");
    }
    decl.extraTypes.clear();
  } else if (auto* s = std::get_if<QualifiedStrategy>(&decl.strategy)) {
    requireArity(decl, 2);
    if (!isClassDeclared(s->mediatorClass)) {
      throw Error(ErrorKind::UnknownClass,
                  "association '" + decl.name + "' names undeclared mediator '" +
                      s->mediatorClass + "'");
    }
    validateType(s->qualifierType, *this);
    std::set<Name> claimed;
    s->roleAttrs = resolveRoles(*this, decl, s->mediatorClass, claimed);
    const EffectiveAttr* qualifier = nullptr;
    for (const EffectiveAttr& attr : attributesOf(s->mediatorClass)) {
      if (claimed.count(attr.name)) continue;
      if (typesEquivalent(attr.contentType, s->qualifierType)) {
        qualifier = &attr;
        break;
      }
    }
    if (!qualifier) {
      throw Error(ErrorKind::StrategyShapeMismatch,
                  "association '" + decl.name + "': mediator '" +
                      s->mediatorClass + "' has no attribute of qualifier type " +
                      s->qualifierType.str());
    }
    s->qualifierAttr = qualifier->name;
    decl.extraTypes = {s->qualifierType};
  }

  assocOrder_.push_back(decl.name);
  assocs_.emplace(decl.name, std::move(decl));
}

namespace {

// Existing objects whose class fits a signature position, in store order.
std::vector<Oid> existingOf(const World& world, const Store& store,
                            const Name& signatureClass) {
  std::vector<Oid> result;
  for (const Oid& oid : store.oids()) {
    if (world.isSubclassOf(classOf(oid), signatureClass)) result.push_back(oid);
  }
  return result;
}

// Reads an attribute if the object's class has it at all. Classes related
// by explicit sub edges need not share record structure, so a participant
// may simply lack the realizing attribute; it then carries no links.
std::optional<Value> readIfPresent(const World& world, const Store& store,
                                   const Oid& oid, const Name& attr) {
  if (!world.findAttribute(classOf(oid), attr)) return std::nullopt;
  return valAttr(world, store, oid, attr);
}

bool isExistingTarget(const World& world, const Store& store, const Value& v,
                      const Name& signatureClass) {
  return v.isOid() && store.contains(v.asOid()) &&
         world.isSubclassOf(classOf(v.asOid()), signatureClass);
}

LinkSet attributeOwnedLinks(const World& world, const Store& store,
                            const AssocDecl& decl, const AttributeOwned& s) {
  const Name& targetClass = decl.signature[1 - s.ownerIndex];
  LinkSet links;
  for (const Oid& owner : existingOf(world, store, s.ownerClass)) {
    auto held = readIfPresent(world, store, owner, s.attrName);
    if (!held || !isExistingTarget(world, store, *held, targetClass)) continue;
    LinkTuple tuple(2, Value::nil());
    tuple[s.ownerIndex] = Value::oid(owner);
    tuple[1 - s.ownerIndex] = *held;
    links.insert(std::move(tuple));
  }
  return links;
}

// Mediator instances are members of CAR(Med) itself: the defining
// existential quantifies over the mediator class, not Oid(Med).
std::vector<Oid> mediatorInstances(const Store& store, const Name& mediator) {
  std::vector<Oid> result;
  for (const Oid& oid : store.oids()) {
    if (classOf(oid) == mediator) result.push_back(oid);
  }
  return result;
}

LinkSet mediatorLinks(const World& world, const Store& store,
                      const AssocDecl& decl, const MediatorStrategy& s) {
  LinkSet links;
  for (const Oid& m : mediatorInstances(store, s.mediatorClass)) {
    LinkTuple tuple;
    bool complete = true;
    for (std::size_t i = 0; i < decl.signature.size(); ++i) {
      Value end = valAttr(world, store, m, s.roleAttrs[i]);
      if (!isExistingTarget(world, store, end, decl.signature[i])) {
        complete = false;
        break;
      }
      tuple.push_back(std::move(end));
    }
    if (!complete) continue;
    for (const Name& extra : s.extraAttrs) {
      tuple.push_back(valAttr(world, store, m, extra));
    }
    links.insert(std::move(tuple));
  }
  return links;
}

LinkSet redundantDirectSide(const World& world, const Store& store,
                            const AssocDecl& decl, const RedundantHybrid& s) {
  LinkSet links;
  for (const Oid& x : existingOf(world, store, decl.signature[0])) {
    auto held = readIfPresent(world, store, x, s.directAttr);
    if (!held || !isExistingTarget(world, store, *held, decl.signature[1])) continue;
    links.insert(LinkTuple{Value::oid(x), *held});
  }
  return links;
}

LinkSet redundantCollectionSide(const World& world, const Store& store,
                                const AssocDecl& decl, const RedundantHybrid& s) {
  LinkSet links;
  for (const Oid& y : existingOf(world, store, decl.signature[1])) {
    auto coll = readIfPresent(world, store, y, s.collectionAttr);
    // An underspecified collection contributes no verifiable links.
    if (!coll || coll->kind() != Value::Kind::Set) continue;
    for (const Value& member : coll->items()) {
      if (!isExistingTarget(world, store, member, decl.signature[0])) continue;
      links.insert(LinkTuple{member, Value::oid(y)});
    }
  }
  return links;
}

LinkSet orderedLinks(const World& world, const Store& store,
                     const AssocDecl& decl, const OrderedStrategy& s) {
  const Name& targetClass = decl.signature[1 - s.ownerIndex];
  LinkSet links;
  for (const Oid& owner : existingOf(world, store, s.ownerClass)) {
    auto list = readIfPresent(world, store, owner, s.listAttr);
    if (!list || list->kind() != Value::Kind::List) continue;
    for (const Value& member : list->items()) {
      if (!isExistingTarget(world, store, member, targetClass)) continue;
      LinkTuple tuple(2, Value::nil());
      tuple[s.ownerIndex] = Value::oid(owner);
      tuple[1 - s.ownerIndex] = member;
      links.insert(std::move(tuple));
    }
  }
  return links;
}

LinkSet qualifiedTriples(const World& world, const Store& store,
                         const AssocDecl& decl, const QualifiedStrategy& s) {
  LinkSet links;
  for (const Oid& m : mediatorInstances(store, s.mediatorClass)) {
    Value a = valAttr(world, store, m, s.roleAttrs[0]);
    Value b = valAttr(world, store, m, s.roleAttrs[1]);
    if (!isExistingTarget(world, store, a, decl.signature[0]) ||
        !isExistingTarget(world, store, b, decl.signature[1])) {
      continue;
    }
    Value q = valAttr(world, store, m, s.qualifierAttr);
    links.insert(LinkTuple{std::move(a), std::move(b), std::move(q)});
  }
  return links;
}

std::string tupleStr(const LinkTuple& tuple) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ", ";
    out << tuple[i].str();
  }
  out << ")";
  return out.str();
}

// Qualifier collisions: one (source, concrete qualifier) pair bound to two
// targets. Underspecified qualifiers cannot be asserted equal to anything.
std::vector<std::string> qualifierCollisions(const LinkSet& triples) {
  std::map<std::pair<Value, Value>, std::set<Value>> bySourceAndQualifier;
  for (const LinkTuple& t : triples) {
    if (t[2].isUnknown()) continue;
    bySourceAndQualifier[{t[0], t[2]}].insert(t[1]);
  }
  std::vector<std::string> collisions;
  for (const auto& [key, targets] : bySourceAndQualifier) {
    if (targets.size() < 2) continue;
    std::ostringstream out;
    out << key.first.str() << " with qualifier " << key.second.str()
        << " identifies";
    for (const Value& b : targets) out << " " << b.str();
    collisions.push_back(out.str());
  }
  return collisions;
}

}  // namespace

LinkSet relOf(const World& world, const Store& store, const Name& assoc) {
  const AssocDecl& decl = world.assoc(assoc);
  if (const auto* s = std::get_if<AttributeOwned>(&decl.strategy)) {
    return attributeOwnedLinks(world, store, decl, *s);
  }
  if (const auto* s = std::get_if<MediatorStrategy>(&decl.strategy)) {
    return mediatorLinks(world, store, decl, *s);
  }
  if (const auto* s = std::get_if<RedundantHybrid>(&decl.strategy)) {
    LinkSet direct = redundantDirectSide(world, store, decl, *s);
    LinkSet collection = redundantCollectionSide(world, store, decl, *s);
    if (direct != collection) {
      throw Error(ErrorKind::AssocInconsistent,
                  "association '" + assoc + "': the two redundant derivations disagree");
    }
    return direct;
  }
  if (const auto* s = std::get_if<OrderedStrategy>(&decl.strategy)) {
    return orderedLinks(world, store, decl, *s);
  }
  const auto& s = std::get<QualifiedStrategy>(decl.strategy);
  return qualifiedTriples(world, store, decl, s);
}

std::map<Oid, std::vector<Value>> orderedBinaryRelOf(const World& world,
                                                     const Store& store,
                                                     const Name& assoc) {
  const AssocDecl& decl = world.assoc(assoc);
  const auto* s = std::get_if<OrderedStrategy>(&decl.strategy);
  if (!s) {
    throw Error(ErrorKind::StrategyMismatch,
                "association '" + assoc + "' has no ordered realization");
  }
  std::map<Oid, std::vector<Value>> result;
  for (const Oid& owner : existingOf(world, store, s->ownerClass)) {
    auto list = readIfPresent(world, store, owner, s->listAttr);
    if (!list || list->kind() != Value::Kind::List) continue;
    result.emplace(owner, list->items());
  }
  return result;
}

LinkSet qualifiedBinaryRelOf(const World& world, const Store& store,
                             const Name& assoc) {
  const AssocDecl& decl = world.assoc(assoc);
  const auto* s = std::get_if<QualifiedStrategy>(&decl.strategy);
  if (!s) {
    throw Error(ErrorKind::StrategyMismatch,
                "association '" + assoc + "' has no qualified realization");
  }
  LinkSet triples = qualifiedTriples(world, store, decl, *s);
  auto collisions = qualifierCollisions(triples);
  if (!collisions.empty()) {
    throw Error(ErrorKind::QualifierNotUnique,
                "association '" + assoc + "': " + collisions.front());
  }
  return triples;
}

namespace {

void checkEndpoints(const World& world, const Store& store,
                    const AssocDecl& decl, const LinkTuple& tuple) {
  for (std::size_t i = 0; i < decl.signature.size(); ++i) {
    if (!tuple[i].isOid()) {
      throw Error(ErrorKind::CarrierViolation,
                  "link component " + std::to_string(i + 1) + " (" +
                      tuple[i].str() + ") is not an object identifier");
    }
    const Oid& oid = tuple[i].asOid();
    if (!store.contains(oid)) {
      throw Error(ErrorKind::UnknownOid,
                  oid.str() + " is not an existing object in this store");
    }
    if (!world.isSubclassOf(classOf(oid), decl.signature[i])) {
      throw Error(ErrorKind::CarrierViolation,
                  oid.str() + " is not in the carrier of Oid(" +
                      decl.signature[i] + ")");
    }
  }
}

Value requireSet(const World& world, const Store& store, const Oid& oid,
                 const Name& attr) {
  Value v = valAttr(world, store, oid, attr);
  if (v.kind() != Value::Kind::Set) {
    throw Error(ErrorKind::CarrierViolation,
                oid.str() + "." + attr +
                    " is not a concrete set; initialize it with {} first");
  }
  return v;
}

Value withMember(const Value& setValue, const Value& member) {
  std::vector<Value> items = setValue.items();
  items.push_back(member);
  return Value::set(std::move(items));
}

Value withoutMember(const Value& setValue, const Value& member) {
  std::vector<Value> items;
  for (const Value& v : setValue.items()) {
    if (v != member) items.push_back(v);
  }
  return Value::set(std::move(items));
}

}  // namespace

Store link(World& world, const Store& store, const Name& assoc,
           const LinkTuple& tuple) {
  const AssocDecl& decl = world.assoc(assoc);
  std::size_t expected = decl.signature.size() + decl.extraTypes.size();
  if (tuple.size() != expected) {
    throw Error(ErrorKind::ArityMismatch,
                "association '" + assoc + "' takes " + std::to_string(expected) +
                    " components, got " + std::to_string(tuple.size()));
  }
  checkEndpoints(world, store, decl, tuple);

  if (const auto* s = std::get_if<AttributeOwned>(&decl.strategy)) {
    // To-1 realization: linking an already linked owner overwrites.
    return setvalAttr(world, store, tuple[s->ownerIndex].asOid(), s->attrName,
                      tuple[1 - s->ownerIndex]);
  }

  if (const auto* s = std::get_if<MediatorStrategy>(&decl.strategy)) {
    std::vector<std::pair<Name, Value>> init;
    for (std::size_t i = 0; i < s->roleAttrs.size(); ++i) {
      init.emplace_back(s->roleAttrs[i], tuple[i]);
    }
    for (std::size_t j = 0; j < s->extraAttrs.size(); ++j) {
      init.emplace_back(s->extraAttrs[j], tuple[decl.signature.size() + j]);
    }
    return world.instantiate(store, s->mediatorClass, init).store;
  }

  if (const auto* s = std::get_if<RedundantHybrid>(&decl.strategy)) {
    const Oid& x = tuple[0].asOid();
    const Oid& y = tuple[1].asOid();
    // Validate both sides before touching anything, then update them
    // together; only the final snapshot is observable.
    requireSet(world, store, y, s->collectionAttr);
    Value old = valAttr(world, store, x, s->directAttr);
    Store next = store;
    if (old.isOid() && store.contains(old.asOid()) && old.asOid() != y) {
      const Oid& yOld = old.asOid();
      Value coll = requireSet(world, next, yOld, s->collectionAttr);
      next = setvalAttr(world, next, yOld, s->collectionAttr,
                        withoutMember(coll, tuple[0]));
    }
    next = setvalAttr(world, next, x, s->directAttr, tuple[1]);
    Value coll = requireSet(world, next, y, s->collectionAttr);
    return setvalAttr(world, next, y, s->collectionAttr,
                      withMember(coll, tuple[0]));
  }

  if (const auto* s = std::get_if<OrderedStrategy>(&decl.strategy)) {
    const Oid& owner = tuple[s->ownerIndex].asOid();
    Value list = valAttr(world, store, owner, s->listAttr);
    if (list.kind() != Value::Kind::List) {
      throw Error(ErrorKind::CarrierViolation,
                  owner.str() + "." + s->listAttr +
                      " is not a concrete list; initialize it with [] first");
    }
    std::vector<Value> items = list.items();
    items.push_back(tuple[1 - s->ownerIndex]);
    return setvalAttr(world, store, owner, s->listAttr,
                      Value::list(std::move(items)));
  }

  const auto& s = std::get<QualifiedStrategy>(decl.strategy);
  const Value& qualifier = tuple[2];
  if (!inCarrier(qualifier, s.qualifierType, world)) {
    throw Error(ErrorKind::CarrierViolation,
                "qualifier " + qualifier.str() + " is not in the carrier of " +
                    s.qualifierType.str());
  }
  if (!qualifier.isUnknown()) {
    for (const LinkTuple& t : qualifiedTriples(world, store, decl, s)) {
      if (t[0] == tuple[0] && t[2] == qualifier && t[1] != tuple[1]) {
        throw Error(ErrorKind::MultiplicityViolation,
                    "association '" + assoc + "': " + tuple[0].str() +
                        " with qualifier " + qualifier.str() +
                        " already identifies " + t[1].str());
      }
    }
  }
  std::vector<std::pair<Name, Value>> init;
  init.emplace_back(s.roleAttrs[0], tuple[0]);
  init.emplace_back(s.roleAttrs[1], tuple[1]);
  init.emplace_back(s.qualifierAttr, qualifier);
  for (const EffectiveAttr& attr : world.attributesOf(s.mediatorClass)) {
    if (attr.name != s.roleAttrs[0] && attr.name != s.roleAttrs[1] &&
        attr.name != s.qualifierAttr) {
      init.emplace_back(attr.name, Value::unknown(attr.contentType));
    }
  }
  return world.instantiate(store, s.mediatorClass, init).store;
}

std::vector<Violation> checkAssocConsistency(const World& world,
                                             const Store& store) {
  std::vector<Violation> report;
  for (const Name& name : world.assocOrder()) {
    const AssocDecl& decl = world.assoc(name);
    if (const auto* s = std::get_if<RedundantHybrid>(&decl.strategy)) {
      LinkSet direct = redundantDirectSide(world, store, decl, *s);
      LinkSet collection = redundantCollectionSide(world, store, decl, *s);
      for (const LinkTuple& t : direct) {
        if (!collection.count(t)) {
          report.push_back({Violation::Kind::AssocInconsistency,
                            "association '" + name + "': " + tupleStr(t) +
                                " held by the direct attribute only"});
        }
      }
      for (const LinkTuple& t : collection) {
        if (!direct.count(t)) {
          report.push_back({Violation::Kind::AssocInconsistency,
                            "association '" + name + "': " + tupleStr(t) +
                                " held by the collection side only"});
        }
      }
    } else if (const auto* s = std::get_if<QualifiedStrategy>(&decl.strategy)) {
      for (const std::string& collision :
           qualifierCollisions(qualifiedTriples(world, store, decl, *s))) {
        report.push_back({Violation::Kind::QualifierConflict,
                          "association '" + name + "': " + collision});
      }
    }
  }
  return report;
}

}  // namespace sysmod
