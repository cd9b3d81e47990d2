// SPDX-License-Identifier: Apache-2.0
#include "sysmod/world.hpp"

#include <functional>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "sysmod/error.hpp"
#include "sysmod/record_ops.hpp"
#include "sysmod/universe.hpp"

using namespace sysmod;
using sysmod::testing::Gen;

namespace {

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an Error");
}

// Independent subclass oracle: path search over the declared direct edges.
bool reachesSuper(const World& world, const Name& from, const Name& to) {
  if (from == to) return true;
  std::set<Name> seen;
  std::vector<Name> frontier{from};
  while (!frontier.empty()) {
    Name cls = frontier.back();
    frontier.pop_back();
    if (!seen.insert(cls).second) continue;
    if (cls == to) return true;
    for (const Name& super : world.classDecl(cls).supers) frontier.push_back(super);
    for (const auto& [sub, sup] : world.explicitSubEdges()) {
      if (sub == cls) frontier.push_back(sup);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("declareClass basics") {
  World world;
  world.declareClass({"B", {}, {}});
  world.declareClass({"A", {}, {{"med", true, Type::classType("B")}}});
  CHECK(world.isClassDeclared("A"));
  CHECK(world.attribute("A", "med").isMutable);

  // Subclasses extend the record structure of their superclass.
  World w2;
  w2.declareClass({"C1", {}, {{"x", true, Type::integer()}}});
  w2.declareClass({"C2", {"C1"}, {}});
  CHECK(w2.findAttribute("C2", "x") != nullptr);

  // Homonym attributes from distinct superclasses conflict.
  World w3;
  w3.declareClass({"E1", {}, {{"a", true, Type::integer()}}});
  w3.declareClass({"E2", {}, {{"a", true, Type::integer()}}});
  CHECK(kindOf([&] { w3.declareClass({"D", {"E1", "E2"}, {}}); }) ==
        ErrorKind::NameConflict);
}

TEST_CASE("declareClass error paths") {
  World world;
  world.declareClass({"A", {}, {}});
  CHECK(kindOf([&] { world.declareClass({"A", {}, {}}); }) == ErrorKind::DuplicateClass);
  CHECK(kindOf([&] { world.declareClass({"B", {"Nope"}, {}}); }) == ErrorKind::UnknownSuper);
  CHECK(kindOf([&] {
          world.declareClass({"B", {}, {{"x", true, Type::integer()}, {"x", false, Type::boolean()}}});
        }) == ErrorKind::DuplicateField);
  CHECK(kindOf([&] { world.declareClass({"B", {}, {{"self", false, Type::integer()}}}); }) ==
        ErrorKind::NameConflict);
  CHECK(kindOf([&] {
          world.declareClass({"B", {}, {{"x", true, Type::classType("Nope")}}});
        }) == ErrorKind::MalformedType);
  CHECK_FALSE(world.isClassDeclared("B"));

  // A diamond carries one definition along two paths: no conflict.
  World diamond;
  diamond.declareClass({"Top", {}, {{"t", true, Type::integer()}}});
  diamond.declareClass({"L", {"Top"}, {}});
  diamond.declareClass({"R", {"Top"}, {}});
  diamond.declareClass({"Bottom", {"L", "R"}, {}});
  CHECK(diamond.findAttribute("Bottom", "t") != nullptr);

  // Attribute types may reference the class being declared.
  World rec;
  rec.declareClass({"Node", {}, {{"next", true, Type::classType("Node")}}});
  CHECK(rec.isClassDeclared("Node"));
}

TEST_CASE("redeclaration of an inherited attribute") {
  // Allowed by default: the subclass's definition wins.
  World loose;
  loose.declareClass({"C1", {}, {{"x", true, Type::integer()}}});
  loose.declareClass({"C2", {"C1"}, {{"x", true, Type::boolean()}}});
  CHECK(loose.attribute("C2", "x").contentType == Type::boolean());

  // Strict mode rejects it: subclasses only extend the record structure.
  World strict(true);
  strict.declareClass({"C1", {}, {{"x", true, Type::integer()}}});
  CHECK(kindOf([&] {
          strict.declareClass({"C2", {"C1"}, {{"x", true, Type::boolean()}}});
        }) == ErrorKind::StrictRedefinition);
}

TEST_CASE("subClassOf is reflexive and transitive") {
  World world;
  world.declareClass({"C3", {}, {}});
  world.declareClass({"C2", {"C3"}, {}});
  world.declareClass({"C1", {"C2"}, {}});

  CHECK(subClassOf(world, "C1", "C1"));
  CHECK(subClassOf(world, "C1", "C2"));
  CHECK(subClassOf(world, "C1", "C3"));
  CHECK_FALSE(subClassOf(world, "C3", "C1"));
  CHECK_THROWS_AS(subClassOf(world, "Nope", "C1"), Error);
}

TEST_CASE("explicit sub edges without inheritance") {
  World world;
  world.declareClass({"B", {}, {{"y", true, Type::integer()}}});
  world.declareClass({"A", {}, {{"x", true, Type::integer()}}});
  world.declareSubclassOf("A", "B");
  CHECK(subClassOf(world, "A", "B"));
  // No attribute inheritance along explicit edges.
  CHECK(world.findAttribute("A", "y") == nullptr);

  CHECK(kindOf([&] { world.declareSubclassOf("B", "A"); }) ==
        ErrorKind::InheritanceCycle);

  // Structural non-subtyping: identical attribute lists create no relation.
  World w2;
  w2.declareClass({"P", {}, {{"x", true, Type::integer()}}});
  w2.declareClass({"Q", {}, {{"x", true, Type::integer()}}});
  CHECK_FALSE(subClassOf(w2, "P", "Q"));
  CHECK_FALSE(subClassOf(w2, "Q", "P"));
}

TEST_CASE("subclass closure matches a brute-force path search") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Gen gen(seed);
    World world;
    auto h = testing::declareRandomHierarchy(gen, world, 8, 3);
    // A few explicit edges on top of the declared ones.
    for (int i = 0; i < 3; ++i) {
      Name sub = h.classes[gen.range(0, int(h.classes.size()) - 1)];
      Name super = h.classes[gen.range(0, int(h.classes.size()) - 1)];
      try {
        world.declareSubclassOf(sub, super);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InheritanceCycle);
      }
    }
    for (const Name& c1 : h.classes) {
      for (const Name& c2 : h.classes) {
        CHECK(subClassOf(world, c1, c2) == reachesSuper(world, c1, c2));
      }
    }
  }
}

TEST_CASE("instantiate") {
  World world;
  world.declareClass({"C", {}, {{"x", true, Type::integer()}}});
  Store store;
  auto result = world.instantiate(store, "C", {{"x", Value::integer(5)}});
  store = result.store;

  CHECK(oidsOf(store).size() == 1);
  CHECK(valAttr(world, store, result.oid, "x") == Value::integer(5));
  CHECK(proj(Value::oid(result.oid), "self", world) == Value::oid(result.oid));

  // Distinct instantiations get disjoint location sets.
  auto second = world.instantiate(store, "C", {{"x", Value::integer(6)}});
  store = second.store;
  Loc l1 = world.instanceRecord(result.oid).field("x")->asLoc();
  Loc l2 = world.instanceRecord(second.oid).field("x")->asLoc();
  CHECK(l1 != l2);

  CHECK(kindOf([&] { world.instantiate(store, "Nope", {}); }) == ErrorKind::UnknownClass);
  CHECK(kindOf([&] { world.instantiate(store, "C", {}); }) == ErrorKind::MissingInit);
  CHECK(kindOf([&] { world.instantiate(store, "C", {{"x", Value::boolean(true)}}); }) ==
        ErrorKind::CarrierViolation);
  CHECK(kindOf([&] {
          world.instantiate(store, "C", {{"x", Value::integer(0)}, {"y", Value::integer(0)}});
        }) == ErrorKind::NoSuchAttr);

  // Underspecified initial values are fine: the attribute holds an integer,
  // we just do not know which.
  auto third = world.instantiate(store, "C", {{"x", Value::unknown(Type::integer())}});
  CHECK(valAttr(world, third.store, third.oid, "x").isUnknown());
}

TEST_CASE("plain attributes are constants") {
  World world;
  world.declareClass({"C", {}, {{"c", false, Type::integer()}, {"x", true, Type::integer()}}});
  Store store;
  auto result = world.instantiate(
      store, "C", {{"c", Value::integer(1)}, {"x", Value::integer(2)}});
  store = result.store;
  CHECK(valAttr(world, store, result.oid, "c") == Value::integer(1));
  CHECK(kindOf([&] {
          setvalAttr(world, store, result.oid, "c", Value::integer(9));
        }) == ErrorKind::ImmutableAttr);
  // Plain fields never move: setval on other attributes leaves them alone.
  store = setvalAttr(world, store, result.oid, "x", Value::integer(42));
  CHECK(valAttr(world, store, result.oid, "c") == Value::integer(1));
}

TEST_CASE("declareStaticAttr") {
  World world;
  Store store;
  store = world.declareStaticAttr(store, "counter", Type::integer(), Value::integer(0));
  Loc loc = world.statics().at("counter").location;
  CHECK(valLoc(store, loc) == Value::integer(0));

  CHECK(kindOf([&] {
          world.declareStaticAttr(store, "counter", Type::integer(), Value::integer(1));
        }) == ErrorKind::DuplicateStatic);
  CHECK(kindOf([&] {
          world.declareStaticAttr(store, "flag", Type::boolean(), Value::integer(1));
        }) == ErrorKind::CarrierViolation);

  // The static's location is part of no object.
  world.declareClass({"C", {}, {{"x", true, Type::integer()}}});
  auto result = world.instantiate(store, "C", {{"x", Value::integer(5)}});
  CHECK(world.instanceRecord(result.oid).field("x")->asLoc() != loc);
  CHECK(checkStore(world, result.store).empty());
}

TEST_CASE("identifier carriers follow the substitution principle") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    Gen gen(seed);
    World world;
    auto h = testing::declareRandomHierarchy(gen, world, 10, 6);
    Store store;
    std::vector<Oid> oids;
    int instantiations = gen.range(1, 12);
    for (int i = 0; i < instantiations; ++i) {
      Name cls = h.classes[gen.range(0, int(h.classes.size()) - 1)];
      oids.push_back(testing::instantiateRandom(gen, world, store, cls));
    }
    for (const Oid& oid : oids) {
      CHECK(proj(Value::oid(oid), "self", world) == Value::oid(oid));
      for (const Name& cls : h.classes) {
        CHECK(inCarrier(Value::oid(oid), Type::oidOf(cls), world) ==
              subClassOf(world, classOf(oid), cls));
      }
    }
    CHECK(checkStore(world, store).empty());
  }
}
