// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sysmod/value.hpp"

namespace sysmod {

class World;

// A snapshot of the data state: the finite set of existing object
// identifiers and a finite mapping from locations to their contents.
// Stores are values -- every update returns a fresh snapshot and the
// input remains valid. Any (oids, mem) pair is a representable snapshot;
// checkStore judges well-formedness.
class Store {
 public:
  Store() = default;
  Store(std::set<Oid> oids, std::map<Loc, Value> mem)
      : oids_(std::move(oids)), mem_(std::move(mem)) {}

  const std::set<Oid>& oids() const { return oids_; }
  const std::map<Loc, Value>& mem() const { return mem_; }
  bool contains(const Oid& oid) const { return oids_.count(oid) != 0; }
  bool mapsLocation(const Loc& loc) const { return mem_.count(loc) != 0; }

  bool operator==(const Store& other) const {
    return oids_ == other.oids_ && mem_ == other.mem_;
  }

 private:
  std::set<Oid> oids_;
  std::map<Loc, Value> mem_;
};

// oids((s,m)) = s
inline const std::set<Oid>& oidsOf(const Store& store) { return store.oids(); }

// locations((s,m)) = dom(m)
std::set<Loc> locationsOf(const Store& store);

// val((s,m), loc) = m(loc). Throws UnmappedLocation outside dom(m).
const Value& valLoc(const Store& store, const Loc& loc);

// setval((s,m), loc, v) = (s, m + [loc = v]). The location must be in use
// and v must be in the carrier of its registered content type.
Store setvalLoc(const World& world, const Store& store, const Loc& loc,
                const Value& value);

// val((s,m), oid, at): reads a mutable attribute through its location,
// a plain attribute directly from the instance record.
Value valAttr(const World& world, const Store& store, const Oid& oid,
              const Name& attr);

// setval((s,m), oid, at, v) = (s, m + [*oid.at = v]); mutable attributes only.
Store setvalAttr(const World& world, const Store& store, const Oid& oid,
                 const Name& attr, const Value& value);

// vals((s,m), oid): attribute name -> value, total on the effective
// attributes of classOf(oid); agrees with valAttr pointwise.
std::map<Name, Value> valsOf(const World& world, const Store& store,
                             const Oid& oid);

// addobj((s,m), oid, f) = (s + {oid}, m + f). dom(f) must be exactly the
// location fields of oid's instance record, with carrier-correct values.
Store addobj(const World& world, const Store& store, const Oid& oid,
             const std::map<Loc, Value>& assignments);

// A well-formedness finding. Violations are data, not errors.
struct Violation {
  enum class Kind {
    UnknownObject,       // an existing oid the world never allocated
    SelfMismatch,        // instance record's self field != its identifier
    OrphanLocation,      // mem maps a location no existing object or static owns
    MissingLocation,     // an owned location absent from mem
    SharedLocation,      // two owners hold the same location
    CarrierMismatch,     // stored value outside its location's carrier
    AssocInconsistency,  // redundant realization's two sides disagree
    QualifierConflict,   // qualified association maps one (a, q) to two b's
  };

  Kind kind;
  std::string detail;

  std::string str() const;
};

const char* violationKindName(Violation::Kind kind);

// Verifies every restriction on snapshots: existing objects are allocated,
// the self law, the location-domain equation (object locations plus static
// locations), location disjointness, carrier-correctness of every stored
// value, and association consistency. A store is checked against the world
// it was current under. Empty report = well-formed.
std::vector<Violation> checkStore(const World& world, const Store& store);

}  // namespace sysmod
