// SPDX-License-Identifier: Apache-2.0
#include "sysmod/sysmod.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "sysmod/error.hpp"
#include "sysmod/model_parser.hpp"
#include "sysmod/script.hpp"
#include "sysmod/snapshot.hpp"
#include "sysmod/store.hpp"
#include "sysmod/world.hpp"

struct sysmod_session {
  sysmod::World world;
  sysmod::Store store;
  std::string transcript;
  std::string lastError;
  std::string summary;
  std::string checkReport;

  explicit sysmod_session(bool strict) : world(strict) {}
};

namespace {

sysmod_status statusOf(sysmod::ErrorKind kind) {
  using sysmod::ErrorKind;
  switch (kind) {
    case ErrorKind::MalformedType: return SYSMOD_ERR_MALFORMED_TYPE;
    case ErrorKind::DuplicateField: return SYSMOD_ERR_DUPLICATE_FIELD;
    case ErrorKind::ArityMismatch: return SYSMOD_ERR_ARITY_MISMATCH;
    case ErrorKind::FieldSetMismatch: return SYSMOD_ERR_FIELD_SET_MISMATCH;
    case ErrorKind::NoSuchField: return SYSMOD_ERR_NO_SUCH_FIELD;
    case ErrorKind::NilDereference: return SYSMOD_ERR_NIL_DEREFERENCE;
    case ErrorKind::UnknownOid: return SYSMOD_ERR_UNKNOWN_OID;
    case ErrorKind::TypeMismatch: return SYSMOD_ERR_TYPE_MISMATCH;
    case ErrorKind::DuplicateClass: return SYSMOD_ERR_DUPLICATE_CLASS;
    case ErrorKind::UnknownClass: return SYSMOD_ERR_UNKNOWN_CLASS;
    case ErrorKind::UnknownSuper: return SYSMOD_ERR_UNKNOWN_SUPER;
    case ErrorKind::InheritanceCycle: return SYSMOD_ERR_INHERITANCE_CYCLE;
    case ErrorKind::NameConflict: return SYSMOD_ERR_NAME_CONFLICT;
    case ErrorKind::StrictRedefinition: return SYSMOD_ERR_STRICT_REDEFINITION;
    case ErrorKind::MissingInit: return SYSMOD_ERR_MISSING_INIT;
    case ErrorKind::CarrierViolation: return SYSMOD_ERR_CARRIER_VIOLATION;
    case ErrorKind::DuplicateStatic: return SYSMOD_ERR_DUPLICATE_STATIC;
    case ErrorKind::UnmappedLocation: return SYSMOD_ERR_UNMAPPED_LOCATION;
    case ErrorKind::NoSuchAttr: return SYSMOD_ERR_NO_SUCH_ATTR;
    case ErrorKind::ImmutableAttr: return SYSMOD_ERR_IMMUTABLE_ATTR;
    case ErrorKind::DuplicateObject: return SYSMOD_ERR_DUPLICATE_OBJECT;
    case ErrorKind::WrongLocationSet: return SYSMOD_ERR_WRONG_LOCATION_SET;
    case ErrorKind::DuplicateAssoc: return SYSMOD_ERR_DUPLICATE_ASSOC;
    case ErrorKind::StrategyShapeMismatch: return SYSMOD_ERR_STRATEGY_SHAPE_MISMATCH;
    case ErrorKind::UnknownAssoc: return SYSMOD_ERR_UNKNOWN_ASSOC;
    case ErrorKind::AssocInconsistent: return SYSMOD_ERR_ASSOC_INCONSISTENT;
    case ErrorKind::StrategyMismatch: return SYSMOD_ERR_STRATEGY_MISMATCH;
    case ErrorKind::QualifierNotUnique: return SYSMOD_ERR_QUALIFIER_NOT_UNIQUE;
    case ErrorKind::MultiplicityViolation: return SYSMOD_ERR_MULTIPLICITY_VIOLATION;
    case ErrorKind::SyntaxError: return SYSMOD_ERR_SYNTAX;
    case ErrorKind::UnboundVariable: return SYSMOD_ERR_UNBOUND_VARIABLE;
    case ErrorKind::AssertionFailed: return SYSMOD_ERR_ASSERTION_FAILED;
  }
  return SYSMOD_ERR_INTERNAL;
}

template <typename Fn>
sysmod_status guarded(sysmod_session* session, Fn&& fn) {
  if (!session) return SYSMOD_ERR_USAGE;
  session->lastError.clear();
  try {
    return fn();
  } catch (const sysmod::Error& e) {
    session->lastError = e.what();
    return statusOf(e.kind());
  } catch (const std::exception& e) {
    session->lastError = e.what();
    return SYSMOD_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

sysmod_session* sysmod_session_new(int strict_inheritance) {
  try {
    return new sysmod_session(strict_inheritance != 0);
  } catch (...) {
    return nullptr;
  }
}

void sysmod_session_free(sysmod_session* session) { delete session; }

sysmod_status sysmod_load_model(sysmod_session* session, const char* text) {
  if (!text) return SYSMOD_ERR_USAGE;
  return guarded(session, [&] {
    sysmod::ParsedModel model = sysmod::parseModel(text);
    sysmod::applyModel(session->world, session->store, model);
    return SYSMOD_OK;
  });
}

sysmod_status sysmod_run_script(sysmod_session* session, const char* text,
                                int* violations_out) {
  if (!text) return SYSMOD_ERR_USAGE;
  return guarded(session, [&] {
    sysmod::Script script = sysmod::parseScript(text);
    sysmod::RunResult result =
        sysmod::runScript(session->world, session->store, script);
    session->store = result.store;
    for (const std::string& line : result.transcript) {
      session->transcript += line;
      session->transcript += '\n';
    }
    if (violations_out) {
      *violations_out = static_cast<int>(result.violationCount);
    }
    if (!result.ok) {
      session->lastError = result.error->what();
      return statusOf(result.error->kind());
    }
    return SYSMOD_OK;
  });
}

sysmod_status sysmod_check_store(sysmod_session* session, int* violations_out) {
  return guarded(session, [&] {
    auto report = sysmod::checkStore(session->world, session->store);
    std::ostringstream out;
    for (const auto& violation : report) out << violation.str() << "\n";
    session->checkReport = out.str();
    if (violations_out) *violations_out = static_cast<int>(report.size());
    return SYSMOD_OK;
  });
}

const char* sysmod_last_error(const sysmod_session* session) {
  return session ? session->lastError.c_str() : "";
}

const char* sysmod_transcript(const sysmod_session* session) {
  return session ? session->transcript.c_str() : "";
}

const char* sysmod_model_summary(sysmod_session* session) {
  if (!session) return "";
  std::ostringstream out;
  out << "classes: " << session->world.classOrder().size() << "\n"
      << "associations: " << session->world.assocOrder().size() << "\n"
      << "statics: " << session->world.staticOrder().size() << "\n";
  for (const std::string& warning : session->world.modelWarnings()) {
    out << "warning: " << warning << "\n";
  }
  session->summary = out.str();
  return session->summary.c_str();
}

const char* sysmod_check_report(const sysmod_session* session) {
  return session ? session->checkReport.c_str() : "";
}

char* sysmod_dump_snapshot(sysmod_session* session) {
  if (!session) return nullptr;
  try {
    return duplicate(sysmod::dumpSnapshot(session->world, session->store));
  } catch (const std::exception& e) {
    session->lastError = e.what();
    return nullptr;
  }
}

void sysmod_string_free(char* text) { std::free(text); }

const char* sysmod_version(void) { return "1.0.0"; }

}  // extern "C"
