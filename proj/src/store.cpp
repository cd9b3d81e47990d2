// SPDX-License-Identifier: Apache-2.0
#include "sysmod/store.hpp"

#include "sysmod/assoc.hpp"
#include "sysmod/error.hpp"
#include "sysmod/universe.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

std::set<Loc> locationsOf(const Store& store) {
  std::set<Loc> locs;
  for (const auto& [loc, value] : store.mem()) locs.insert(loc);
  return locs;
}

const Value& valLoc(const Store& store, const Loc& loc) {
  auto it = store.mem().find(loc);
  if (it == store.mem().end()) {
    throw Error(ErrorKind::UnmappedLocation,
                loc.str() + " is not in use in this store");
  }
  return it->second;
}

Store setvalLoc(const World& world, const Store& store, const Loc& loc,
                const Value& value) {
  if (!store.mapsLocation(loc)) {
    throw Error(ErrorKind::UnmappedLocation,
                loc.str() + " is not in use in this store");
  }
  auto contentType = world.locationType(loc);
  if (!contentType) {
    throw Error(ErrorKind::UnmappedLocation,
                loc.str() + " has no registered content type");
  }
  if (!inCarrier(value, *contentType, world)) {
    throw Error(ErrorKind::CarrierViolation,
                "value " + value.str() + " is not in the carrier of " +
                    contentType->str() + " (" + loc.str() + ")");
  }
  std::map<Loc, Value> mem = store.mem();
  mem.insert_or_assign(loc, value);
  return Store(store.oids(), std::move(mem));
}

namespace {

const EffectiveAttr& attrOfExisting(const World& world, const Store& store,
                                    const Oid& oid, const Name& attr) {
  if (!store.contains(oid)) {
    throw Error(ErrorKind::UnknownOid,
                oid.str() + " is not an existing object in this store");
  }
  return world.attribute(classOf(oid), attr);
}

}  // namespace

Value valAttr(const World& world, const Store& store, const Oid& oid,
              const Name& attr) {
  const EffectiveAttr& decl = attrOfExisting(world, store, oid, attr);
  const Value& field = *world.instanceRecord(oid).field(attr);
  if (decl.isMutable) return valLoc(store, field.asLoc());
  return field;
}

Store setvalAttr(const World& world, const Store& store, const Oid& oid,
                 const Name& attr, const Value& value) {
  const EffectiveAttr& decl = attrOfExisting(world, store, oid, attr);
  if (!decl.isMutable) {
    throw Error(ErrorKind::ImmutableAttr,
                "attribute '" + attr + "' of " + oid.str() +
                    " is a plain constant field");
  }
  const Value& field = *world.instanceRecord(oid).field(attr);
  return setvalLoc(world, store, field.asLoc(), value);
}

std::map<Name, Value> valsOf(const World& world, const Store& store,
                             const Oid& oid) {
  if (!store.contains(oid)) {
    throw Error(ErrorKind::UnknownOid,
                oid.str() + " is not an existing object in this store");
  }
  std::map<Name, Value> values;
  for (const EffectiveAttr& attr : world.attributesOf(classOf(oid))) {
    values.emplace(attr.name, valAttr(world, store, oid, attr.name));
  }
  return values;
}

// The locations an object owns: the cells behind its mutable attributes.
// A plain field that happens to hold a location value is a passed-around
// location, not an owned cell.
static std::map<Loc, Name> ownedLocations(const World& world, const Oid& oid) {
  std::map<Loc, Name> owned;
  const Value& record = world.instanceRecord(oid);
  for (const EffectiveAttr& attr : world.attributesOf(classOf(oid))) {
    if (attr.isMutable) owned.emplace(record.field(attr.name)->asLoc(), attr.name);
  }
  return owned;
}

Store addobj(const World& world, const Store& store, const Oid& oid,
             const std::map<Loc, Value>& assignments) {
  if (store.contains(oid)) {
    throw Error(ErrorKind::DuplicateObject,
                oid.str() + " already exists in this store");
  }
  std::map<Loc, Name> owned = ownedLocations(world, oid);  // throws UnknownOid
  bool sameDomain = owned.size() == assignments.size();
  if (sameDomain) {
    for (const auto& [loc, attr] : owned) {
      if (!assignments.count(loc)) {
        sameDomain = false;
        break;
      }
    }
  }
  if (!sameDomain) {
    throw Error(ErrorKind::WrongLocationSet,
                "assignments do not cover exactly the locations of " + oid.str());
  }
  for (const auto& [loc, value] : assignments) {
    const Type contentType = *world.locationType(loc);
    if (!inCarrier(value, contentType, world)) {
      throw Error(ErrorKind::CarrierViolation,
                  "value " + value.str() + " is not in the carrier of " +
                      contentType.str() + " (" + loc.str() + ")");
    }
  }

  std::set<Oid> oids = store.oids();
  oids.insert(oid);
  std::map<Loc, Value> mem = store.mem();
  for (const auto& [loc, value] : assignments) mem.insert_or_assign(loc, value);
  return Store(std::move(oids), std::move(mem));
}

const char* violationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::UnknownObject: return "unknown object";
    case Violation::Kind::SelfMismatch: return "self mismatch";
    case Violation::Kind::OrphanLocation: return "orphan location";
    case Violation::Kind::MissingLocation: return "missing location";
    case Violation::Kind::SharedLocation: return "shared location";
    case Violation::Kind::CarrierMismatch: return "carrier mismatch";
    case Violation::Kind::AssocInconsistency: return "association inconsistency";
    case Violation::Kind::QualifierConflict: return "qualifier conflict";
  }
  return "violation";
}

std::string Violation::str() const {
  return std::string(violationKindName(kind)) + ": " + detail;
}

std::vector<Violation> checkStore(const World& world, const Store& store) {
  std::vector<Violation> report;
  auto violation = [&report](Violation::Kind kind, std::string detail) {
    report.push_back({kind, std::move(detail)});
  };

  // Ownership map doubles as the expected location domain.
  std::map<Loc, std::string> owners;
  for (const Oid& oid : store.oids()) {
    if (!world.isAllocated(oid)) {
      violation(Violation::Kind::UnknownObject,
                oid.str() + " exists in the store but was never allocated");
      continue;
    }
    const Value& record = world.instanceRecord(oid);
    const Value* self = record.field("self");
    if (!self || !self->isOid() || self->asOid() != oid) {
      violation(Violation::Kind::SelfMismatch,
                "instance record of " + oid.str() + " has self = " +
                    (self ? self->str() : "<missing>"));
    }
    for (const auto& [loc, attr] : ownedLocations(world, oid)) {
      std::string owner = oid.str() + "." + attr;
      auto [it, inserted] = owners.emplace(loc, owner);
      if (!inserted) {
        violation(Violation::Kind::SharedLocation,
                  loc.str() + " is owned by both " + it->second + " and " + owner);
      }
    }
  }
  for (const auto& [name, entry] : world.statics()) {
    std::string owner = "static " + name;
    auto [it, inserted] = owners.emplace(entry.location, owner);
    if (!inserted) {
      violation(Violation::Kind::SharedLocation,
                entry.location.str() + " is owned by both " + it->second +
                    " and " + owner);
    }
  }

  // locations(store) must equal the owned locations.
  for (const auto& [loc, owner] : owners) {
    if (!store.mapsLocation(loc)) {
      violation(Violation::Kind::MissingLocation,
                loc.str() + " (" + owner + ") is not in use in the store");
    }
  }
  for (const auto& [loc, value] : store.mem()) {
    if (!owners.count(loc)) {
      violation(Violation::Kind::OrphanLocation,
                loc.str() + " belongs to no existing object or static");
      continue;
    }
    auto contentType = world.locationType(loc);
    if (!contentType) {
      violation(Violation::Kind::CarrierMismatch,
                loc.str() + " has no registered content type");
    } else if (!inCarrier(value, *contentType, world)) {
      violation(Violation::Kind::CarrierMismatch,
                loc.str() + " holds " + value.str() +
                    ", outside the carrier of " + contentType->str());
    }
  }

  for (Violation& v : checkAssocConsistency(world, store)) {
    report.push_back(std::move(v));
  }
  return report;
}

}  // namespace sysmod
