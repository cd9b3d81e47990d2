// SPDX-License-Identifier: Apache-2.0
#include "sysmod/universe.hpp"

#include "doctest.h"
#include "generators.hpp"
#include "sysmod/error.hpp"
#include "sysmod/world.hpp"

using namespace sysmod;
using sysmod::testing::Gen;

namespace {

Type recAInt() { return Type::rec({{"a", Type::integer()}}); }

}  // namespace

TEST_CASE("basic carriers") {
  World world;
  CHECK(inCarrier(Value::boolean(true), Type::boolean(), world));
  CHECK(inCarrier(Value::boolean(false), Type::boolean(), world));
  CHECK(inCarrier(Value::integer(3), Type::integer(), world));
  CHECK(inCarrier(Value::voidValue(), Type::voidType(), world));

  // Basic carriers are pairwise disjoint.
  CHECK_FALSE(inCarrier(Value::integer(3), Type::boolean(), world));
  CHECK_FALSE(inCarrier(Value::boolean(true), Type::integer(), world));
  CHECK_FALSE(inCarrier(Value::voidValue(), Type::integer(), world));
}

TEST_CASE("Nil is in CAR(Ref T) for every T") {
  World world;
  CHECK(inCarrier(Value::nil(), Type::ref(recAInt()), world));
  CHECK(inCarrier(Value::nil(), Type::ref(Type::integer()), world));
  CHECK(inCarrier(Value::nil(), Type::ref(Type::ref(Type::boolean())), world));
  // A class name is a reference type, so its carrier holds Nil too.
  world.declareClass({"C", {}, {}});
  CHECK(inCarrier(Value::nil(), Type::classType("C"), world));
  // Non-Nil references only exist as object identifiers.
  CHECK_FALSE(inCarrier(Value::integer(1), Type::ref(Type::integer()), world));
}

TEST_CASE("record and product carriers check componentwise") {
  World world;
  Type rec = Type::rec({{"a", Type::integer()}, {"b", Type::boolean()}});
  Value good = Value::record({{"a", Value::integer(1)}, {"b", Value::boolean(true)}});
  Value badField = Value::record({{"a", Value::integer(1)}, {"b", Value::integer(2)}});
  Value extraField = Value::record(
      {{"a", Value::integer(1)}, {"b", Value::boolean(true)}, {"c", Value::nil()}});
  CHECK(inCarrier(good, rec, world));
  CHECK_FALSE(inCarrier(badField, rec, world));
  CHECK_FALSE(inCarrier(extraField, rec, world));

  Type prod = Type::prod({Type::integer(), Type::boolean()});
  CHECK(inCarrier(Value::tuple({Value::integer(1), Value::boolean(false)}), prod, world));
  CHECK_FALSE(inCarrier(Value::tuple({Value::integer(1)}), prod, world));
  // The unit type has the empty tuple as its single member.
  CHECK(inCarrier(Value::tuple({}), Type::prod({}), world));
}

TEST_CASE("class and Oid carriers") {
  World world;
  world.declareClass({"C2", {}, {}});
  world.declareClass({"C1", {"C2"}, {}});
  Store store;
  Oid o1 = world.instantiate(store, "C1", {}).oid;

  // Exactly-this-class membership on class carriers.
  CHECK(inCarrier(Value::oid(o1), Type::classType("C1"), world));
  CHECK_FALSE(inCarrier(Value::oid(o1), Type::classType("C2"), world));

  // Substitution on identifier carriers: Oid(C) includes subclasses.
  CHECK(inCarrier(Value::oid(o1), Type::oidOf("C1"), world));
  CHECK(inCarrier(Value::oid(o1), Type::oidOf("C2"), world));
  Oid o2 = world.instantiate(store, "C2", {}).oid;
  CHECK_FALSE(inCarrier(Value::oid(o2), Type::oidOf("C1"), world));

  // Oid(C) is a union of class carriers, which are reference carriers:
  // Nil belongs, so Oid-typed attributes can start unlinked.
  CHECK(inCarrier(Value::nil(), Type::oidOf("C1"), world));

  CHECK_THROWS_AS(inCarrier(Value::nil(), Type::classType("Nope"), world), Error);
  try {
    inCarrier(Value::nil(), Type::oidOf("Nope"), world);
    FAIL("expected MalformedType");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedType);
  }
}

TEST_CASE("location carriers go through the world registry") {
  World world;
  world.declareClass({"C", {}, {{"x", true, Type::integer()}}});
  Store store;
  Oid o = world.instantiate(store, "C", {{"x", Value::integer(0)}}).oid;
  Loc loc = world.instanceRecord(o).field("x")->asLoc();

  CHECK(inCarrier(Value::loc(loc), Type::loc(Type::integer()), world));
  CHECK_FALSE(inCarrier(Value::loc(loc), Type::loc(Type::boolean()), world));
  CHECK_FALSE(inCarrier(Value::loc(Loc{9999}), Type::loc(Type::integer()), world));
}

TEST_CASE("underspecified members belong to exactly their carrier") {
  World world;
  CHECK(inCarrier(Value::unknown(Type::integer()), Type::integer(), world));
  CHECK_FALSE(inCarrier(Value::unknown(Type::integer()), Type::boolean(), world));
  CHECK(inCarrier(Value::unknown(Type::basic("Bool")), Type::boolean(), world));
}

TEST_CASE("type equivalence") {
  Type t1 = Type::rec({{"a", Type::integer()}, {"b", Type::boolean()}});
  Type t2 = Type::rec({{"b", Type::boolean()}, {"a", Type::integer()}});
  CHECK(typesEquivalent(t1, t2));

  CHECK(typesEquivalent(Type::basic("Bool"), Type::basic("Boolean")));
  // Both spellings name the carrier {true, false}: membership agrees on
  // every basic value.
  World world;
  std::vector<Value> sample = {Value::boolean(true), Value::boolean(false),
                               Value::integer(0),    Value::integer(1),
                               Value::voidValue(),   Value::nil()};
  for (const Value& v : sample) {
    CHECK(inCarrier(v, Type::basic("Bool"), world) ==
          inCarrier(v, Type::basic("Boolean"), world));
  }
  CHECK(inCarrier(Value::boolean(true), Type::basic("Bool"), world));
  CHECK(inCarrier(Value::boolean(false), Type::basic("Bool"), world));

  CHECK_FALSE(typesEquivalent(Type::rec({{"a", Type::integer()}}),
                              Type::rec({{"b", Type::integer()}})));
  CHECK_FALSE(typesEquivalent(Type::rec({{"a", Type::integer()}}),
                              Type::rec({{"a", Type::boolean()}})));
}

TEST_CASE("equivalence is an equivalence relation and respects carriers") {
  Gen gen(0xabc1);
  World world;
  for (int i = 0; i < 300; ++i) {
    Type t1 = gen.type(2);
    Type t2 = gen.type(2);
    Type t3 = gen.type(2);
    CHECK(typesEquivalent(t1, t1));
    CHECK(typesEquivalent(t1, t2) == typesEquivalent(t2, t1));
    if (typesEquivalent(t1, t2) && typesEquivalent(t2, t3)) {
      CHECK(typesEquivalent(t1, t3));
    }
    if (typesEquivalent(t1, t2)) {
      for (int k = 0; k < 5; ++k) {
        Value v = gen.chance(0.5) ? gen.valueIn(t1) : gen.anyValue();
        CHECK(inCarrier(v, t1, world) == inCarrier(v, t2, world));
      }
    }
  }
}

TEST_CASE("typeOf on the stated examples") {
  World world;
  auto t = typeOf(Value::integer(3), world);
  REQUIRE(t.has_value());
  CHECK(*t == Type::integer());

  CHECK_FALSE(typeOf(Value::nil(), world).has_value());

  auto rec = typeOf(Value::record({{"a", Value::integer(3)}}), world);
  REQUIRE(rec.has_value());
  CHECK(*rec == recAInt());

  CHECK(*typeOf(Value::boolean(true), world) == Type::boolean());
  CHECK(*typeOf(Value::voidValue(), world) == Type::voidType());
  CHECK(*typeOf(Value::unknown(Type::set(Type::integer())), world) ==
        Type::set(Type::integer()));

  // Components without a type make the whole value untypeable.
  CHECK_FALSE(typeOf(Value::record({{"a", Value::nil()}}), world).has_value());

  world.declareClass({"C", {}, {}});
  Store store;
  Oid o = world.instantiate(store, "C", {}).oid;
  CHECK(*typeOf(Value::oid(o), world) == Type::classType("C"));
  CHECK_FALSE(typeOf(Value::oid(Oid{"Undeclared", 1}), world).has_value());
}

TEST_CASE("typeOf implies carrier membership") {
  Gen gen(0xabc2);
  World world;
  world.declareClass({"C", {}, {{"x", true, Type::integer()}}});
  Store store;
  world.instantiate(store, "C", {{"x", Value::integer(1)}});
  for (int i = 0; i < 500; ++i) {
    Value v = gen.anyValue(3);
    auto t = typeOf(v, world);
    if (t) CHECK(inCarrier(v, *t, world));
  }
}
