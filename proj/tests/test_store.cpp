// SPDX-License-Identifier: Apache-2.0
#include "sysmod/store.hpp"

#include <functional>

#include "doctest.h"
#include "generators.hpp"
#include "sysmod/error.hpp"
#include "sysmod/universe.hpp"
#include "sysmod/world.hpp"

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

struct Fixture {
  World world;
  Store store;
  Oid oid;
  Loc xLoc;

  Fixture() {
    world.declareClass({"C", {}, {{"x", true, Type::integer()},
                                  {"y", true, Type::boolean()}}});
    auto result = world.instantiate(
        store, "C", {{"x", Value::integer(5)}, {"y", Value::boolean(false)}});
    store = result.store;
    oid = result.oid;
    xLoc = world.instanceRecord(oid).field("x")->asLoc();
  }
};

}  // namespace

TEST_CASE("oidsOf and locationsOf") {
  Store empty;
  CHECK(oidsOf(empty).empty());
  CHECK(locationsOf(empty).empty());

  Fixture f;
  CHECK(oidsOf(f.store) == std::set<Oid>{f.oid});
  CHECK(locationsOf(f.store).size() == 2);  // one per mutable attribute

  // setval overwrites, never allocates.
  Store after = setvalLoc(f.world, f.store, f.xLoc, Value::integer(6));
  CHECK(locationsOf(after) == locationsOf(f.store));
  CHECK(oidsOf(after) == oidsOf(f.store));
}

TEST_CASE("valLoc / setvalLoc laws") {
  Fixture f;
  Loc l1 = f.xLoc;
  Loc l2 = f.world.instanceRecord(f.oid).field("y")->asLoc();

  // Read after write.
  CHECK(valLoc(setvalLoc(f.world, f.store, l1, Value::integer(7)), l1) ==
        Value::integer(7));
  // Frame: other locations unchanged.
  CHECK(valLoc(setvalLoc(f.world, f.store, l1, Value::integer(7)), l2) ==
        valLoc(f.store, l2));
  // Snapshots are values: the input store is untouched.
  setvalLoc(f.world, f.store, l1, Value::integer(9));
  CHECK(valLoc(f.store, l1) == Value::integer(5));

  CHECK(kindOf([&] { valLoc(f.store, Loc{9999}); }) == ErrorKind::UnmappedLocation);
  CHECK(kindOf([&] { setvalLoc(f.world, f.store, Loc{9999}, Value::integer(0)); }) ==
        ErrorKind::UnmappedLocation);
  CHECK(kindOf([&] { setvalLoc(f.world, f.store, l1, Value::boolean(true)); }) ==
        ErrorKind::CarrierViolation);
}

TEST_CASE("setvalLoc on distinct locations commutes") {
  Fixture f;
  Loc l1 = f.xLoc;
  Loc l2 = f.world.instanceRecord(f.oid).field("y")->asLoc();
  Store a = setvalLoc(f.world, setvalLoc(f.world, f.store, l1, Value::integer(1)),
                      l2, Value::boolean(true));
  Store b = setvalLoc(f.world, setvalLoc(f.world, f.store, l2, Value::boolean(true)),
                      l1, Value::integer(1));
  CHECK(a == b);
}

TEST_CASE("valAttr / setvalAttr") {
  Fixture f;
  CHECK(valAttr(f.world, f.store, f.oid, "x") == Value::integer(5));
  Store after = setvalAttr(f.world, f.store, f.oid, "x", Value::integer(9));
  CHECK(valAttr(f.world, after, f.oid, "x") == Value::integer(9));
  CHECK(valAttr(f.world, f.store, f.oid, "x") == Value::integer(5));

  // No shared locations: updating one object never touches another.
  auto other = f.world.instantiate(
      after, "C", {{"x", Value::integer(1)}, {"y", Value::boolean(true)}});
  Store two = setvalAttr(f.world, other.store, other.oid, "x", Value::integer(100));
  CHECK(valAttr(f.world, two, f.oid, "x") == Value::integer(9));

  CHECK(kindOf([&] { valAttr(f.world, f.store, Oid{"C", 99}, "x"); }) ==
        ErrorKind::UnknownOid);
  CHECK(kindOf([&] { valAttr(f.world, f.store, f.oid, "zz"); }) ==
        ErrorKind::NoSuchAttr);
  CHECK(kindOf([&] {
          setvalAttr(f.world, f.store, f.oid, "x", Value::boolean(true));
        }) == ErrorKind::CarrierViolation);
}

TEST_CASE("valsOf") {
  Fixture f;
  auto values = valsOf(f.world, f.store, f.oid);
  CHECK(values.size() == 2);
  CHECK(values.count("x") == 1);
  CHECK(values.count("y") == 1);
  for (const auto& [attr, value] : values) {
    CHECK(value == valAttr(f.world, f.store, f.oid, attr));
  }
  // After one write the mapping differs at exactly that attribute.
  Store after = setvalAttr(f.world, f.store, f.oid, "x", Value::integer(9));
  auto updated = valsOf(f.world, after, f.oid);
  CHECK(updated.at("x") == Value::integer(9));
  CHECK(updated.at("y") == values.at("y"));
}

TEST_CASE("addobj") {
  World world;
  world.declareClass({"C", {}, {{"x", true, Type::integer()}}});
  Store store;
  auto first = world.instantiate(store, "C", {{"x", Value::integer(1)}});
  CHECK(oidsOf(first.store) == std::set<Oid>{first.oid});

  // addobj grows the location map by exactly the object's assignments.
  CHECK(locationsOf(first.store).size() == 1);

  std::map<Loc, Value> assignments;
  Loc loc = world.instanceRecord(first.oid).field("x")->asLoc();
  assignments.emplace(loc, Value::integer(2));
  CHECK(kindOf([&] { addobj(world, first.store, first.oid, assignments); }) ==
        ErrorKind::DuplicateObject);
  CHECK(kindOf([&] { addobj(world, store, first.oid, {}); }) ==
        ErrorKind::WrongLocationSet);
  CHECK(kindOf([&] {
          addobj(world, store, first.oid, {{loc, Value::boolean(true)}});
        }) == ErrorKind::CarrierViolation);
  // Replaying the same object into the empty store is fine.
  Store replay = addobj(world, store, first.oid, assignments);
  CHECK(valAttr(world, replay, first.oid, "x") == Value::integer(2));
}

TEST_CASE("store algebra properties") {
  Gen gen(0x77);
  for (int round = 0; round < 50; ++round) {
    World world;
    world.declareClass({"C", {}, {{"x", true, Type::integer()},
                                  {"y", true, Type::integer()}}});
    Store store;
    std::vector<Oid> oids;
    for (int i = 0; i < gen.range(1, 4); ++i) {
      oids.push_back(testing::instantiateRandom(gen, world, store, "C"));
    }
    std::vector<Loc> locs;
    for (const Loc& l : locationsOf(store)) locs.push_back(l);

    for (int i = 0; i < 20; ++i) {
      Loc l1 = locs[gen.range(0, int(locs.size()) - 1)];
      Loc l2 = locs[gen.range(0, int(locs.size()) - 1)];
      Value v1 = Value::integer(gen.integer());
      Value v2 = Value::integer(gen.integer());

      Store written = setvalLoc(world, store, l1, v1);
      CHECK(valLoc(written, l1) == v1);
      if (l1 != l2) {
        CHECK(valLoc(written, l2) == valLoc(store, l2));
        Store ab = setvalLoc(world, setvalLoc(world, store, l1, v1), l2, v2);
        Store ba = setvalLoc(world, setvalLoc(world, store, l2, v2), l1, v1);
        CHECK(ab == ba);
      }
    }
    CHECK(checkStore(world, store).empty());
  }
}

TEST_CASE("checkStore flags hand-built defects") {
  Fixture f;
  CHECK(checkStore(f.world, f.store).empty());

  // A mem entry whose location belongs to no existing object.
  std::map<Loc, Value> mem = f.store.mem();
  mem.emplace(Loc{4242}, Value::integer(1));
  Store orphan(f.store.oids(), mem);
  auto report = checkStore(f.world, orphan);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == Violation::Kind::OrphanLocation);

  // An existing object with one of its locations dropped from mem.
  std::map<Loc, Value> holey = f.store.mem();
  holey.erase(f.xLoc);
  auto missing = checkStore(f.world, Store(f.store.oids(), holey));
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].kind == Violation::Kind::MissingLocation);

  // An existing oid the world never allocated.
  std::set<Oid> oids = f.store.oids();
  oids.insert(Oid{"C", 999});
  auto unknown = checkStore(f.world, Store(oids, f.store.mem()));
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0].kind == Violation::Kind::UnknownObject);

  // A stored value outside its location's carrier.
  std::map<Loc, Value> bad = f.store.mem();
  bad.insert_or_assign(f.xLoc, Value::boolean(true));
  auto carrier = checkStore(f.world, Store(f.store.oids(), bad));
  REQUIRE(carrier.size() == 1);
  CHECK(carrier[0].kind == Violation::Kind::CarrierMismatch);
}

TEST_CASE("reachable stores are well-formed") {
  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    Gen gen(seed);
    World world;
    auto h = testing::declareRandomHierarchy(gen, world, 6, 4);
    Store store;
    if (gen.chance(0.5)) {
      store = world.declareStaticAttr(store, "s", Type::integer(),
                                      Value::integer(gen.integer()));
    }
    for (int step = 0; step < 25; ++step) {
      if (gen.chance(0.4) || oidsOf(store).empty()) {
        Name cls = h.classes[gen.range(0, int(h.classes.size()) - 1)];
        testing::instantiateRandom(gen, world, store, cls);
      } else {
        std::vector<Oid> oids(oidsOf(store).begin(), oidsOf(store).end());
        const Oid& oid = oids[gen.range(0, int(oids.size()) - 1)];
        std::vector<EffectiveAttr> mutables;
        for (const EffectiveAttr& a : world.attributesOf(classOf(oid))) {
          if (a.isMutable) mutables.push_back(a);
        }
        if (mutables.empty()) continue;
        const EffectiveAttr& attr = mutables[gen.range(0, int(mutables.size()) - 1)];
        store = setvalAttr(world, store, oid, attr.name,
                           testing::initValueFor(gen, world, store, attr.contentType));
      }
      CHECK(checkStore(world, store).empty());
    }
  }
}
