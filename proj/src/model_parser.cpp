// SPDX-License-Identifier: Apache-2.0
#include "sysmod/model_parser.hpp"

#include "lexer.hpp"
#include "sysmod/error.hpp"

namespace sysmod {

namespace {

using detail::ParserBase;
using detail::Token;

class ModelParser : public ParserBase {
 public:
  explicit ModelParser(std::string_view text) : ParserBase(text) {}

  ParsedModel parse() {
    ParsedModel model;
    while (!atEnd()) {
      if (check("class")) {
        model.decls.emplace_back(parseClass());
      } else if (check("subclassOf")) {
        model.decls.emplace_back(parseSubclassOf());
      } else if (check("assoc")) {
        model.decls.emplace_back(parseAssoc());
      } else if (check("static")) {
        model.decls.emplace_back(parseStatic());
      } else {
        fail("expected 'class', 'subclassOf', 'assoc' or 'static'");
      }
    }
    return model;
  }

 private:
  ClassDecl parseClass() {
    expect("class");
    ClassDecl decl;
    decl.name = expectName("a class name");
    if (match("extends")) {
      decl.supers.push_back(expectName("a superclass name"));
      while (match(",")) decl.supers.push_back(expectName("a superclass name"));
    }
    expect("{");
    while (!match("}")) {
      AttrDecl attr;
      attr.name = expectName("an attribute name or '}'");
      expect(":");
      attr.isMutable = match("loc");
      attr.contentType = parseType();
      decl.ownAttrs.push_back(std::move(attr));
    }
    return decl;
  }

  ParsedSubclassOf parseSubclassOf() {
    expect("subclassOf");
    ParsedSubclassOf decl;
    decl.sub = expectName("a class name");
    decl.super = expectName("a class name");
    return decl;
  }

  ParsedStatic parseStatic() {
    expect("static");
    ParsedStatic decl;
    decl.name = expectName("a static attribute name");
    expect(":");
    decl.type = parseType();
    expect("=");
    decl.init = parseLiteral();
    return decl;
  }

  AssocDecl parseAssoc() {
    expect("assoc");
    AssocDecl decl;
    decl.name = expectName("an association name");
    expect("(");
    decl.signature.push_back(expectName("a class name"));
    expect(",");
    decl.signature.push_back(expectName("a class name"));
    while (match(",")) decl.signature.push_back(expectName("a class name"));
    expect(")");
    expect("via");
    if (match("attribute")) {
      AttributeOwned s;
      s.ownerClass = expectName("a class name");
      expect(".");
      s.attrName = expectName("an attribute name");
      decl.strategy = std::move(s);
    } else if (match("mediator")) {
      MediatorStrategy s;
      s.mediatorClass = expectName("a mediator class name");
      decl.strategy = std::move(s);
    } else if (match("redundant")) {
      RedundantHybrid s;
      s.directClass = expectName("a class name");
      expect(".");
      s.directAttr = expectName("an attribute name");
      expect(",");
      s.collectionClass = expectName("a class name");
      expect(".");
      s.collectionAttr = expectName("an attribute name");
      decl.strategy = std::move(s);
    } else if (match("ordered")) {
      OrderedStrategy s;
      s.ownerClass = expectName("a class name");
      expect(".");
      s.listAttr = expectName("an attribute name");
      decl.strategy = std::move(s);
    } else if (match("qualified")) {
      QualifiedStrategy s;
      s.mediatorClass = expectName("a mediator class name");
      expect("by");
      s.qualifierType = parseType();
      decl.strategy = std::move(s);
    } else {
      fail(
          "expected 'attribute', 'mediator', 'redundant', 'ordered' or "
          "'qualified'");
    }
    return decl;
  }

  Type parseType() {
    enterNested();
    Type t = parseTypeInner();
    leaveNested();
    return t;
  }

  Type parseTypeInner() {
    if (match("Int")) return Type::integer();
    if (match("Bool") || match("Boolean")) return Type::boolean();
    if (match("Void")) return Type::voidType();
    if (match("Ref")) return Type::ref(parseType());
    if (match("Loc")) {
      expect("(");
      Type content = parseType();
      expect(")");
      return Type::loc(std::move(content));
    }
    if (match("Oid")) {
      expect("(");
      Name cls = expectName("a class name");
      expect(")");
      return Type::oidOf(std::move(cls));
    }
    if (match("Set")) {
      expect("(");
      Type element = parseType();
      expect(")");
      return Type::set(std::move(element));
    }
    if (match("List")) {
      expect("(");
      Type element = parseType();
      expect(")");
      return Type::list(std::move(element));
    }
    if (match("Rec")) {
      expect("{");
      std::vector<Type::Field> fields;
      if (!check("}")) {
        do {
          Name field = expectName("a field name");
          expect(":");
          fields.emplace_back(std::move(field), parseType());
        } while (match(","));
      }
      expect("}");
      // Duplicate field names are a syntax-level defect here.
      try {
        return Type::rec(std::move(fields));
      } catch (const Error& e) {
        fail(e.detail());
      }
    }
    if (match("Prod")) {
      expect("{");
      std::vector<Type> comps;
      if (!check("}")) {
        do {
          comps.push_back(parseType());
        } while (match(","));
      }
      expect("}");
      return Type::prod(std::move(comps));
    }
    if (peek().kind == Token::Kind::Ident &&
        !detail::reservedWords().count(peek().text)) {
      return Type::classType(advance().text);
    }
    fail("expected a type");
  }

  Literal parseLiteral() {
    enterNested();
    Literal lit = parseLiteralInner();
    leaveNested();
    return lit;
  }

  Literal parseLiteralInner() {
    Literal lit;
    if (peek().kind == Token::Kind::Int) {
      lit.kind = Literal::Kind::Int;
      lit.intValue = expectInt();
      return lit;
    }
    if (match("true")) {
      lit.kind = Literal::Kind::True;
      return lit;
    }
    if (match("false")) {
      lit.kind = Literal::Kind::False;
      return lit;
    }
    if (match("void")) {
      lit.kind = Literal::Kind::Void;
      return lit;
    }
    if (match("nil")) {
      lit.kind = Literal::Kind::Nil;
      return lit;
    }
    if (match("unknown")) {
      lit.kind = Literal::Kind::Unknown;
      return lit;
    }
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
    if (peek().kind == Token::Kind::Ident &&
        !detail::reservedWords().count(peek().text)) {
      lit.kind = Literal::Kind::Var;
      lit.var = advance().text;
      return lit;
    }
    fail("expected a literal");
  }
};

}  // namespace

ParsedModel parseModel(std::string_view text) {
  return ModelParser(text).parse();
}

void applyModel(World& world, Store& store, const ParsedModel& model) {
  for (const ModelDecl& decl : model.decls) {
    if (const auto* cls = std::get_if<ClassDecl>(&decl)) {
      world.declareClass(*cls);
    } else if (const auto* sub = std::get_if<ParsedSubclassOf>(&decl)) {
      world.declareSubclassOf(sub->sub, sub->super);
    } else if (const auto* st = std::get_if<ParsedStatic>(&decl)) {
      Value init = resolveLiteral(st->init, st->type, {});
      store = world.declareStaticAttr(store, st->name, st->type, init);
    } else {
      world.declareAssoc(std::get<AssocDecl>(decl));
    }
  }
}

Value resolveLiteral(const Literal& literal, const Type& expected,
                     const std::map<Name, Oid>& env) {
  switch (literal.kind) {
    case Literal::Kind::Int:
      return Value::integer(literal.intValue);
    case Literal::Kind::True:
      return Value::boolean(true);
    case Literal::Kind::False:
      return Value::boolean(false);
    case Literal::Kind::Void:
      return Value::voidValue();
    case Literal::Kind::Nil:
      return Value::nil();
    case Literal::Kind::Unknown:
      return Value::unknown(expected);
    case Literal::Kind::Var: {
      auto it = env.find(literal.var);
      if (it == env.end()) {
        throw Error(ErrorKind::UnboundVariable,
                    "variable '" + literal.var + "' is not bound by 'new'");
      }
      return Value::oid(it->second);
    }
    case Literal::Kind::List:
    case Literal::Kind::Set: {
      bool isList = literal.kind == Literal::Kind::List;
      // Nested unknowns take the element type when the context provides
      // one; mismatched contexts surface as carrier violations downstream.
      Type elementType = expected;
      if (isList && expected.kind() == Type::Kind::List) {
        elementType = expected.element();
      } else if (!isList && expected.kind() == Type::Kind::Set) {
        elementType = expected.element();
      }
      std::vector<Value> items;
      items.reserve(literal.items.size());
      for (const Literal& item : literal.items) {
        items.push_back(resolveLiteral(item, elementType, env));
      }
      return isList ? Value::list(std::move(items))
                    : Value::set(std::move(items));
    }
  }
  throw Error(ErrorKind::SyntaxError, "unreachable literal kind");
}

}  // namespace sysmod
