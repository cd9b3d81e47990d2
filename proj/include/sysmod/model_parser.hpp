// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "sysmod/type.hpp"
#include "sysmod/value.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

// A parsed literal. What `unknown` and collection literals denote depends
// on the type expected where they appear, so resolution is separate.
struct Literal {
  enum class Kind { Int, True, False, Void, Nil, Unknown, Var, List, Set };

  Kind kind = Kind::Nil;
  std::int64_t intValue = 0;
  Name var;
  std::vector<Literal> items;
};

struct ParsedSubclassOf {
  Name sub;
  Name super;
};

struct ParsedStatic {
  Name name;
  Type type = Type::voidType();
  Literal init;
};

using ModelDecl = std::variant<ClassDecl, ParsedSubclassOf, ParsedStatic, AssocDecl>;

struct ParsedModel {
  std::vector<ModelDecl> decls;
};

// Parses model text:
//
//   model    := decl*
//   decl     := "class" NAME ("extends" NAME ("," NAME)*)? "{" attr* "}"
//             | "subclassOf" NAME NAME
//             | "assoc" NAME "(" NAME ("," NAME)+ ")" "via" strategy
//             | "static" NAME ":" type "=" literal
//   attr     := NAME ":" ("loc")? type
//   type     := "Int" | "Bool" | "Boolean" | "Void" | "Ref" type
//             | "Loc" "(" type ")" | "Oid" "(" NAME ")"
//             | "Set" "(" type ")" | "List" "(" type ")"
//             | "Rec" "{" (NAME ":" type ("," NAME ":" type)*)? "}"
//             | "Prod" "{" (type ("," type)*)? "}" | NAME
//   strategy := "attribute" NAME "." NAME | "mediator" NAME
//             | "redundant" NAME "." NAME "," NAME "." NAME
//             | "ordered" NAME "." NAME | "qualified" NAME "by" type
//   literal  := INT | "true" | "false" | "void" | "nil" | "unknown" | NAME
//             | "[" (literal ("," literal)*)? "]"
//             | "{" (literal ("," literal)*)? "}"
//
// "//" and "#" start line comments. Parsing is a single deterministic
// pass; failures throw Error(SyntaxError) with line, column and the
// expected tokens. Semantic errors are deferred to declaration replay.
ParsedModel parseModel(std::string_view text);

// Replays parsed declarations in order through declareClass /
// declareSubclassOf / declareAssoc / declareStaticAttr.
void applyModel(World& world, Store& store, const ParsedModel& model);

// Resolves a literal against the type expected at its position. Script
// variables resolve through env; `unknown` becomes an underspecified
// member of the expected carrier.
Value resolveLiteral(const Literal& literal, const Type& expected,
                     const std::map<Name, Oid>& env);

}  // namespace sysmod
