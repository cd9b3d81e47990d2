// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sysmod/error.hpp"
#include "sysmod/model_parser.hpp"
#include "sysmod/store.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

struct NewStmt {
  Name var;
  Name cls;
  std::vector<std::pair<Name, Literal>> init;
};

struct SetStmt {
  Name var;
  Name attr;
  Literal value;
};

struct LinkStmt {
  Name assoc;
  std::vector<Literal> tuple;
};

struct AssertStmt {
  Name assoc;
  std::vector<Literal> tuple;
};

struct CheckStmt {};
struct DumpStmt {};

struct Statement {
  std::variant<NewStmt, SetStmt, LinkStmt, AssertStmt, CheckStmt, DumpStmt> node;
  int line = 0;
};

struct Script {
  std::vector<Statement> statements;
};

// Parses store-evolution scripts:
//
//   script := stmt*
//   stmt   := "new" NAME ":" NAME "{" (NAME "=" literal
//                                      ("," NAME "=" literal)*)? "}"
//           | "set" NAME "." NAME "=" literal
//           | "link" NAME "(" literal ("," literal)* ")"
//           | "assert" "rel" NAME "contains" "(" literal ("," literal)* ")"
//           | "check"
//           | "dump"
Script parseScript(std::string_view text);

// Executes statements one at a time against a world and an evolving
// snapshot. Each step appends transcript lines; failures throw and leave
// the transcript with everything up to the failing statement.
class ScriptRunner {
 public:
  ScriptRunner(World& world, Store store, std::map<Name, Oid> bindings = {})
      : world_(world), store_(std::move(store)), bindings_(std::move(bindings)) {}

  void step(const Statement& statement);

  const Store& store() const { return store_; }
  const std::vector<std::string>& transcript() const { return transcript_; }
  const std::map<Name, Oid>& bindings() const { return bindings_; }
  std::size_t violationCount() const { return violations_; }

 private:
  void run(const NewStmt&);
  void run(const SetStmt&);
  void run(const LinkStmt&);
  void run(const AssertStmt&);
  void run(const CheckStmt&);
  void run(const DumpStmt&);

  Oid boundOid(const Name& var) const;
  std::vector<Value> resolveTuple(const Name& assoc,
                                  const std::vector<Literal>& tuple,
                                  bool allowEndpointsOnly) const;

  World& world_;
  Store store_;
  std::map<Name, Oid> bindings_;
  std::vector<std::string> transcript_;
  std::size_t violations_ = 0;
};

struct RunResult {
  Store store;
  std::vector<std::string> transcript;
  std::map<Name, Oid> bindings;
  bool ok = true;
  std::size_t violationCount = 0;
  std::optional<Error> error;
};

// Runs the whole script, halting at the first error with a partial
// transcript; the error line is tagged with the 1-based statement index.
// bindings carries variables bound by an earlier script, so sessions can
// run scripts incrementally.
RunResult runScript(World& world, Store store, const Script& script,
                    std::map<Name, Oid> bindings = {});

}  // namespace sysmod
