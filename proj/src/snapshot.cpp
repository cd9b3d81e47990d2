// SPDX-License-Identifier: Apache-2.0
#include "sysmod/snapshot.hpp"

#include <optional>
#include <sstream>

#include "sysmod/assoc.hpp"
#include "sysmod/error.hpp"

namespace sysmod {

namespace {

// Values expressible as model-language literals; anything else (object
// identifiers, locations, records) falls back to `unknown`.
std::optional<std::string> literalText(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::Bool:
    case Value::Kind::Int:
    case Value::Kind::Void:
    case Value::Kind::Nil:
      return value.str();
    case Value::Kind::Unknown:
      return "unknown";
    case Value::Kind::Set:
    case Value::Kind::List: {
      std::ostringstream out;
      out << (value.kind() == Value::Kind::Set ? "{" : "[");
      const auto& items = value.items();
      for (std::size_t i = 0; i < items.size(); ++i) {
        auto text = literalText(items[i]);
        if (!text) return std::nullopt;
        if (i) out << ", ";
        out << *text;
      }
      out << (value.kind() == Value::Kind::Set ? "}" : "]");
      return out.str();
    }
    default:
      return std::nullopt;
  }
}

std::string strategyText(const Strategy& strategy) {
  if (const auto* s = std::get_if<AttributeOwned>(&strategy)) {
    return "attribute " + s->ownerClass + "." + s->attrName;
  }
  if (const auto* s = std::get_if<MediatorStrategy>(&strategy)) {
    return "mediator " + s->mediatorClass;
  }
  if (const auto* s = std::get_if<RedundantHybrid>(&strategy)) {
    return "redundant " + s->directClass + "." + s->directAttr + ", " +
           s->collectionClass + "." + s->collectionAttr;
  }
  if (const auto* s = std::get_if<OrderedStrategy>(&strategy)) {
    return "ordered " + s->ownerClass + "." + s->listAttr;
  }
  const auto& s = std::get<QualifiedStrategy>(strategy);
  return "qualified " + s.mediatorClass + " by " + s.qualifierType.str();
}

std::string tupleText(const LinkTuple& tuple) {
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

std::string dumpDeclarations(const World& world) {
  std::ostringstream out;
  out << "# classes\n";
  for (const Name& name : world.classOrder()) {
    const ClassDecl& decl = world.classDecl(name);
    out << "class " << name;
    for (std::size_t i = 0; i < decl.supers.size(); ++i) {
      out << (i == 0 ? " extends " : ", ") << decl.supers[i];
    }
    out << " {\n";
    for (const AttrDecl& attr : decl.ownAttrs) {
      out << "  " << attr.name << ": " << (attr.isMutable ? "loc " : "")
          << attr.contentType.str() << "\n";
    }
    out << "}\n";
  }
  for (const auto& [sub, super] : world.explicitSubEdges()) {
    out << "subclassOf " << sub << " " << super << "\n";
  }
  out << "# statics\n";
  for (const Name& name : world.staticOrder()) {
    const StaticEntry& entry = world.statics().at(name);
    out << "static " << name << ": " << entry.type.str() << " = "
        << literalText(entry.init).value_or("unknown") << "\n";
  }
  out << "# assocs\n";
  for (const Name& name : world.assocOrder()) {
    const AssocDecl& decl = world.assoc(name);
    out << "assoc " << name << " (";
    for (std::size_t i = 0; i < decl.signature.size(); ++i) {
      if (i) out << ", ";
      out << decl.signature[i];
    }
    out << ") via " << strategyText(decl.strategy) << "\n";
  }
  return out.str();
}

std::string dumpSnapshot(const World& world, const Store& store) {
  std::ostringstream out;
  out << dumpDeclarations(world);

  out << "# objects\n";
  for (const Oid& oid : store.oids()) {
    out << "object " << oid.str() << ": " << classOf(oid) << " {\n";
    const Value& record = world.instanceRecord(oid);
    out << "  self = " << oid.str() << "\n";
    for (const auto& [field, value] : record.fields()) {
      if (field == "self") continue;
      out << "  " << field << " = " << value.str() << "\n";
    }
    out << "}\n";
  }

  out << "# locations\n";
  for (const auto& [loc, value] : store.mem()) {
    auto contentType = world.locationType(loc);
    out << loc.str() << ": "
        << (contentType ? contentType->str() : std::string("?")) << " = "
        << value.str() << "\n";
  }

  out << "# associations\n";
  for (const Name& name : world.assocOrder()) {
    const AssocDecl& decl = world.assoc(name);
    std::string head = "rel " + name + " via " + strategyText(decl.strategy);
    try {
      LinkSet links = relOf(world, store, name);
      out << head << " {\n";
      for (const LinkTuple& tuple : links) {
        out << "  " << tupleText(tuple) << "\n";
      }
      out << "}\n";
    } catch (const Error& e) {
      out << head << ": INCONSISTENT (" << e.what() << ")\n";
    }
  }
  return out.str();
}

}  // namespace sysmod
