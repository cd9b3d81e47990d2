// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "sysmod/type.hpp"
#include "sysmod/value.hpp"

namespace sysmod {

class World;

// Throws MalformedType if the type mentions a class name the world has
// not declared (in Class or Oid position).
void validateType(const Type& type, const World& world);

// The carrier-membership judgment: v in CAR(T). Carrier sets are
// intensional -- most are infinite -- so membership is decided
// structurally:
//   - basic carriers are pairwise disjoint (Bool/Int/Void values);
//   - Nil belongs to CAR(Ref T) for every T, and to every class and
//     Oid carrier, class names being reference types; non-Nil references
//     exist only as object identifiers;
//   - an identifier belongs to a class carrier iff it is of exactly that
//     class, and to CAR(Oid(C)) iff its class is a subclass of C
//     (the substitution principle lives on identifier carriers);
//   - a location belongs to CAR(Loc T) iff the world registered it with
//     an equivalent content type;
//   - records need the exact attribute set, components checked pointwise;
//     products, sets and lists check componentwise;
//   - Unknown(T') belongs to CAR(T) iff T' and T are equivalent.
// Throws MalformedType for types mentioning undeclared classes.
bool inCarrier(const Value& value, const Type& type, const World& world);

// The partial most-specific-type assignment. Nil has none; identifiers of
// undeclared classes and unregistered locations have none; composites are
// typed componentwise and are untyped as soon as one component is.
std::optional<Type> typeOf(const Value& value, const World& world);

}  // namespace sysmod
