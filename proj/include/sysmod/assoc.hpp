// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <vector>

#include "sysmod/store.hpp"
#include "sysmod/value.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

// One link: the participating identifiers in signature order, followed by
// the association's extra attribute values (qualifier last for qualified
// associations).
using LinkTuple = std::vector<Value>;
using LinkSet = std::set<LinkTuple>;

// The retrieval function: extracts the current link set of an association
// from a snapshot, dispatching on the declared realization strategy.
// Every returned identifier is an existing object whose class is a
// subclass of its signature position. For the redundant strategy both
// derivations are evaluated; if they disagree this throws
// AssocInconsistent (checkAssocConsistency reports the same divergence
// as data).
LinkSet relOf(const World& world, const Store& store, const Name& assoc);

// Ordered retrieval: per owner-side object, the target list exactly as
// stored -- order and duplicates preserved. Owners whose list is still
// underspecified are absent from the mapping.
std::map<Oid, std::vector<Value>> orderedBinaryRelOf(const World& world,
                                                     const Store& store,
                                                     const Name& assoc);

// Qualified retrieval: (source, target, qualifier) triples. A qualifier
// value identifies at most one target per source; a concrete qualifier
// bound to two targets raises QualifierNotUnique.
LinkSet qualifiedBinaryRelOf(const World& world, const Store& store,
                             const Name& assoc);

// Realizes a new link through the strategy's underlying store updates:
// attribute-owned links overwrite the owner's to-1 attribute; mediator and
// qualified links instantiate a fresh mediator object (which grows the
// world); redundant links update both sides together; ordered links append
// to the target list. Endpoints must be existing objects fitting the
// signature.
Store link(World& world, const Store& store, const Name& assoc,
           const LinkTuple& tuple);

// Reports, as data: for each redundant association the symmetric
// difference of its two defining comprehensions, and for each qualified
// association every (source, qualifier) pair bound to more than one
// target.
std::vector<Violation> checkAssocConsistency(const World& world,
                                             const Store& store);

}  // namespace sysmod
