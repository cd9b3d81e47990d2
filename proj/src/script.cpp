// SPDX-License-Identifier: Apache-2.0
#include "sysmod/script.hpp"

#include <sstream>

#include "lexer.hpp"
#include "sysmod/assoc.hpp"
#include "sysmod/snapshot.hpp"
#include "sysmod/universe.hpp"

namespace sysmod {

namespace {

using detail::ParserBase;

class ScriptParser : public ParserBase {
 public:
  explicit ScriptParser(std::string_view text) : ParserBase(text) {}

  Script parse() {
    Script script;
    while (!atEnd()) {
      Statement statement;
      statement.line = peek().line;
      if (check("new")) {
        statement.node = parseNew();
      } else if (check("set")) {
        statement.node = parseSet();
      } else if (check("link")) {
        statement.node = parseLink();
      } else if (check("assert")) {
        statement.node = parseAssert();
      } else if (match("check")) {
        statement.node = CheckStmt{};
      } else if (match("dump")) {
        statement.node = DumpStmt{};
      } else {
        fail("expected 'new', 'set', 'link', 'assert', 'check' or 'dump'");
      }
      script.statements.push_back(std::move(statement));
    }
    return script;
  }

 private:
  NewStmt parseNew() {
    expect("new");
    NewStmt stmt;
    stmt.var = expectName("a variable name");
    expect(":");
    stmt.cls = expectName("a class name");
    expect("{");
    if (!check("}")) {
      do {
        Name attr = expectName("an attribute name");
        expect("=");
        stmt.init.emplace_back(std::move(attr), parseLiteral());
      } while (match(","));
    }
    expect("}");
    return stmt;
  }

  SetStmt parseSet() {
    expect("set");
    SetStmt stmt;
    stmt.var = expectName("a variable name");
    expect(".");
    stmt.attr = expectName("an attribute name");
    expect("=");
    stmt.value = parseLiteral();
    return stmt;
  }

  LinkStmt parseLink() {
    expect("link");
    LinkStmt stmt;
    stmt.assoc = expectName("an association name");
    stmt.tuple = parseTuple();
    return stmt;
  }

  AssertStmt parseAssert() {
    expect("assert");
    expect("rel");
    AssertStmt stmt;
    stmt.assoc = expectName("an association name");
    expect("contains");
    stmt.tuple = parseTuple();
    return stmt;
  }

  std::vector<Literal> parseTuple() {
    expect("(");
    std::vector<Literal> tuple;
    tuple.push_back(parseLiteral());
    while (match(",")) tuple.push_back(parseLiteral());
    expect(")");
    return tuple;
  }

  Literal parseLiteral() {
    enterNested();
    Literal lit = parseLiteralInner();
    leaveNested();
    return lit;
  }

  Literal parseLiteralInner() {
    Literal lit;
    if (peek().kind == detail::Token::Kind::Int) {
      lit.kind = Literal::Kind::Int;
      lit.intValue = expectInt();
      return lit;
    }
    if (match("true")) { lit.kind = Literal::Kind::True; return lit; }
    if (match("false")) { lit.kind = Literal::Kind::False; return lit; }
    if (match("void")) { lit.kind = Literal::Kind::Void; return lit; }
    if (match("nil")) { lit.kind = Literal::Kind::Nil; return lit; }
    if (match("unknown")) { lit.kind = Literal::Kind::Unknown; return lit; }
    if (match("[")) {
      lit.kind = Literal::Kind::List;
      if (!check("]")) {
        do {
          lit.items.push_back(parseLiteral());
        } while (match(","));
      }
      expect("]");
      return lit;
    }
    if (match("{")) {
      lit.kind = Literal::Kind::Set;
      if (!check("}")) {
        do {
          lit.items.push_back(parseLiteral());
        } while (match(","));
      }
      expect("}");
      return lit;
    }
    if (peek().kind == detail::Token::Kind::Ident &&
        !detail::reservedWords().count(peek().text)) {
      lit.kind = Literal::Kind::Var;
      lit.var = advance().text;
      return lit;
    }
    fail("expected a literal");
  }
};

std::string tupleText(const std::vector<Value>& tuple) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ", ";
    out << tuple[i].str();
  }
  out << ")";
  return out.str();
}

}  // namespace

Script parseScript(std::string_view text) { return ScriptParser(text).parse(); }

Oid ScriptRunner::boundOid(const Name& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) {
    throw Error(ErrorKind::UnboundVariable,
                "variable '" + var + "' is not bound by 'new'");
  }
  return it->second;
}

std::vector<Value> ScriptRunner::resolveTuple(const Name& assoc,
                                              const std::vector<Literal>& tuple,
                                              bool allowEndpointsOnly) const {
  const AssocDecl& decl = world_.assoc(assoc);
  std::size_t n = decl.signature.size();
  std::size_t full = n + decl.extraTypes.size();
  if (tuple.size() != full && !(allowEndpointsOnly && tuple.size() == n)) {
    throw Error(ErrorKind::ArityMismatch,
                "association '" + assoc + "' takes " + std::to_string(full) +
                    " components, got " + std::to_string(tuple.size()));
  }
  std::vector<Value> resolved;
  resolved.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Type expected =
        i < n ? Type::oidOf(decl.signature[i]) : decl.extraTypes[i - n];
    resolved.push_back(resolveLiteral(tuple[i], expected, bindings_));
  }
  return resolved;
}

void ScriptRunner::run(const NewStmt& stmt) {
  std::vector<std::pair<Name, Value>> init;
  for (const auto& [attr, literal] : stmt.init) {
    const EffectiveAttr& decl = world_.attribute(stmt.cls, attr);
    init.emplace_back(attr, resolveLiteral(literal, decl.contentType, bindings_));
  }
  auto result = world_.instantiate(store_, stmt.cls, init);
  store_ = std::move(result.store);
  bindings_[stmt.var] = result.oid;
  transcript_.push_back("new " + stmt.var + " = " + result.oid.str());
}

void ScriptRunner::run(const SetStmt& stmt) {
  Oid oid = boundOid(stmt.var);
  const EffectiveAttr& decl = world_.attribute(classOf(oid), stmt.attr);
  Value value = resolveLiteral(stmt.value, decl.contentType, bindings_);
  store_ = setvalAttr(world_, store_, oid, stmt.attr, value);
  transcript_.push_back("set " + stmt.var + "." + stmt.attr + " = " +
                        value.str());
}

void ScriptRunner::run(const LinkStmt& stmt) {
  std::vector<Value> tuple = resolveTuple(stmt.assoc, stmt.tuple, false);
  store_ = link(world_, store_, stmt.assoc, tuple);
  transcript_.push_back("link " + stmt.assoc + " " + tupleText(tuple));
}

void ScriptRunner::run(const AssertStmt& stmt) {
  std::vector<Value> tuple = resolveTuple(stmt.assoc, stmt.tuple, true);
  LinkSet links = relOf(world_, store_, stmt.assoc);
  std::size_t n = world_.assoc(stmt.assoc).signature.size();
  bool found = false;
  if (tuple.size() == n) {
    // Endpoint form: any link with these participants, extras ignored.
    for (const LinkTuple& t : links) {
      if (std::equal(tuple.begin(), tuple.end(), t.begin())) {
        found = true;
        break;
      }
    }
  } else {
    found = links.count(tuple) != 0;
  }
  std::string line =
      "assert rel " + stmt.assoc + " contains " + tupleText(tuple);
  if (!found) {
    transcript_.push_back(line + ": FAILED");
    throw Error(ErrorKind::AssertionFailed,
                "rel " + stmt.assoc + " does not contain " + tupleText(tuple));
  }
  transcript_.push_back(line + ": ok");
}

void ScriptRunner::run(const CheckStmt&) {
  std::vector<Violation> report = checkStore(world_, store_);
  if (report.empty()) {
    transcript_.push_back("check: OK, 0 violations");
    return;
  }
  violations_ += report.size();
  transcript_.push_back("check: " + std::to_string(report.size()) +
                        " violation" + (report.size() == 1 ? "" : "s"));
  for (const Violation& v : report) {
    transcript_.push_back("  " + v.str());
  }
}

void ScriptRunner::run(const DumpStmt&) {
  transcript_.push_back(dumpSnapshot(world_, store_));
}

void ScriptRunner::step(const Statement& statement) {
  std::visit([this](const auto& stmt) { run(stmt); }, statement.node);
}

RunResult runScript(World& world, Store store, const Script& script,
                    std::map<Name, Oid> bindings) {
  ScriptRunner runner(world, std::move(store), std::move(bindings));
  RunResult result;
  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    try {
      runner.step(script.statements[i]);
    } catch (const Error& e) {
      result.ok = false;
      result.error = e;
      result.transcript = runner.transcript();
      result.transcript.push_back("statement " + std::to_string(i + 1) + ": " +
                                  e.what());
      break;
    }
  }
  if (result.ok) result.transcript = runner.transcript();
  result.store = runner.store();
  result.bindings = runner.bindings();
  result.violationCount = runner.violationCount();
  return result;
}

}  // namespace sysmod
