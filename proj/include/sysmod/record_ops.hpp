// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <vector>

#include "sysmod/type.hpp"
#include "sysmod/value.hpp"

namespace sysmod {

class World;

// Rec over a finite attribute/type list. Declaration order is irrelevant:
// the result is canonical (fields sorted by name). Throws DuplicateField.
Type mkRec(const std::vector<Type::Field>& fields);

// attr(Rec{a1: T1, ...}) = {a1, ...}; attr(Ref T) = attr(T); {} otherwise.
std::set<Name> attrOf(const Type& type);

// deref: the unique instance record an allocated identifier points to.
// Dereferencing is state independent and injective over allocated
// identifiers. Throws NilDereference on Nil, UnknownOid on identifiers
// the world never allocated.
const Value& deref(const Value& ref, const World& world);

// proj(a)(r) = r(a) on records; proj(a)(r) = proj(a)(*r) on references.
Value proj(const Value& value, const Name& attr, const World& world);

// rec[a1..an](v1..vn) = [a1 = v1, ..., an = vn].
Value recFromTuple(const std::vector<Name>& names, const Value& tuple);

// prod[a1..an]([a1 = v1, ...]) = (v1, ..., vn); inverse of recFromTuple.
Value tupleFromRec(const std::vector<Name>& names, const Value& record);

}  // namespace sysmod
