// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sysmod/store.hpp"
#include "sysmod/type.hpp"
#include "sysmod/value.hpp"

namespace sysmod {

// One attribute in a class declaration. A mutable attribute materializes
// as a record field of type Loc T; a plain one as a direct field of type T,
// immutable after instantiation.
struct AttrDecl {
  Name name;
  bool isMutable = false;
  Type contentType = Type::voidType();
};

struct ClassDecl {
  Name name;
  std::vector<Name> supers;
  std::vector<AttrDecl> ownAttrs;
};

// An effective attribute of a class: own or inherited. The origin class
// tells homonyms from the same definition reaching a class along two
// inheritance paths.
struct EffectiveAttr {
  Name name;
  bool isMutable = false;
  Type contentType = Type::voidType();
  Name origin;
};

// --- association realization strategies ---------------------------------

// Unidirectional to-1 link held in an attribute of the owning side.
struct AttributeOwned {
  Name ownerClass;
  Name attrName;
  std::size_t ownerIndex = 0;  // resolved against the signature at declare
};

// Links stored in instances of an intermediate class; supports any arity.
// Role attributes (one per signature position) and extra attributes are
// resolved from the mediator class shape at declare time: each signature
// position claims, in declaration order, the first unclaimed attribute
// whose content type can hold that side's identifiers; every remaining
// attribute is an extra carried verbatim in retrieved tuples.
struct MediatorStrategy {
  Name mediatorClass;
  std::vector<Name> roleAttrs;   // resolved
  std::vector<Name> extraAttrs;  // resolved
};

// To-1 direct attribute on side A plus a collection attribute on side B,
// kept equal by construction; the consistency checker reports divergence.
struct RedundantHybrid {
  Name directClass;     // must be signature[0]
  Name directAttr;
  Name collectionClass; // must be signature[1]
  Name collectionAttr;  // content: a Set over side-A identifiers
};

// Owner holds an ordered target list; duplicates model multiple links.
struct OrderedStrategy {
  Name ownerClass;
  Name listAttr;
  std::size_t ownerIndex = 0;  // resolved
};

// Mediator class carrying a qualifier that identifies a unique target
// per (source, qualifier) pair.
struct QualifiedStrategy {
  Name mediatorClass;
  Type qualifierType = Type::integer();
  std::vector<Name> roleAttrs;  // resolved, arity 2
  Name qualifierAttr;           // resolved
};

using Strategy = std::variant<AttributeOwned, MediatorStrategy, RedundantHybrid,
                              OrderedStrategy, QualifiedStrategy>;

struct AssocDecl {
  Name name;
  std::vector<Name> signature;  // class names, arity >= 2
  std::vector<Type> extraTypes; // resolved at declare: k extra components
  Strategy strategy;
};

struct StaticEntry {
  Loc location;
  Type type = Type::voidType();
  Value init;  // remembered for the declarations section of snapshots
};

// The monotone registry of everything declared and allocated: classes and
// the subclass relation, associations, object identifiers with their
// instance records, locations with their content types, and statics.
// Mutation follows a single-writer contract; a copy is an immutable
// snapshot. Stores evolve separately as values.
class World {
 public:
  explicit World(bool strictInheritance = false)
      : strict_(strictInheritance) {}

  bool strictInheritance() const { return strict_; }

  // --- classes and subclassing ---
  void declareClass(const ClassDecl& decl);
  // Adds an explicit sub edge without attribute inheritance, for class
  // pairs with independently declared record structures.
  void declareSubclassOf(const Name& sub, const Name& super);
  // Reflexive-transitive subclass judgment. Throws UnknownClass.
  bool isSubclassOf(const Name& c1, const Name& c2) const;
  bool isClassDeclared(const Name& cls) const { return classes_.count(cls) != 0; }
  const std::vector<EffectiveAttr>& attributesOf(const Name& cls) const;
  const EffectiveAttr& attribute(const Name& cls, const Name& attr) const;
  const EffectiveAttr* findAttribute(const Name& cls, const Name& attr) const;

  // --- objects ---
  struct Instantiated {
    Store store;
    Oid oid;
  };
  // Allocates a fresh identifier and one fresh location per mutable
  // attribute, registers the instance record {self, plain values,
  // locations}, and extends the store via addobj. init must cover every
  // effective attribute with a carrier-correct value (Unknown allowed).
  Instantiated instantiate(const Store& store, const Name& cls,
                           const std::vector<std::pair<Name, Value>>& init);

  bool isAllocated(const Oid& oid) const { return objects_.count(oid) != 0; }
  // The unique instance record of an allocated identifier.
  const Value& instanceRecord(const Oid& oid) const;
  const std::map<Oid, Value>& objects() const { return objects_; }

  // --- locations ---
  std::optional<Type> locationType(const Loc& loc) const;
  const std::map<Loc, Type>& locations() const { return locTypes_; }

  // --- statics ---
  // Allocates a location that is part of no object and writes init there.
  Store declareStaticAttr(const Store& store, const Name& name, const Type& type,
                          const Value& init);
  const std::map<Name, StaticEntry>& statics() const { return statics_; }

  // --- associations (shape checks live with the retrieval functions) ---
  void declareAssoc(AssocDecl decl);
  bool isAssocDeclared(const Name& name) const { return assocs_.count(name) != 0; }
  const AssocDecl& assoc(const Name& name) const;
  const std::map<Name, AssocDecl>& assocs() const { return assocs_; }

  // Declaration order, for deterministic output that replays correctly.
  const std::vector<Name>& classOrder() const { return classOrder_; }
  const std::vector<Name>& assocOrder() const { return assocOrder_; }
  const std::vector<Name>& staticOrder() const { return staticOrder_; }
  const std::vector<std::pair<Name, Name>>& explicitSubEdges() const {
    return explicitSubEdges_;
  }
  const ClassDecl& classDecl(const Name& cls) const;

  // Attributes whose content type is itself a location type; these enable
  // capsule leaks and are flagged by model checks.
  std::vector<std::string> modelWarnings() const;

 private:
  Loc freshLoc(const Type& contentType);
  Oid freshOid(const Name& cls);

  bool strict_;
  std::map<Name, ClassDecl> classes_;
  std::map<Name, std::vector<EffectiveAttr>> effectiveAttrs_;
  std::map<Name, std::set<Name>> superClosure_;  // reflexive-transitive
  std::map<Oid, Value> objects_;
  std::map<Loc, Type> locTypes_;
  std::map<Name, StaticEntry> statics_;
  std::map<Name, AssocDecl> assocs_;
  std::map<Name, std::uint64_t> oidCounters_;
  std::uint64_t locCounter_ = 0;
  std::vector<Name> classOrder_;
  std::vector<Name> assocOrder_;
  std::vector<Name> staticOrder_;
  std::vector<std::pair<Name, Name>> explicitSubEdges_;
};

// sub is reflexive and transitive; by construction also acyclic.
inline bool subClassOf(const World& world, const Name& c1, const Name& c2) {
  return world.isSubclassOf(c1, c2);
}

}  // namespace sysmod
