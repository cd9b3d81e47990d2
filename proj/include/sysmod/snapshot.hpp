// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "sysmod/store.hpp"
#include "sysmod/world.hpp"

namespace sysmod {

// The declarations section of a snapshot: classes, explicit sub edges,
// statics and associations rendered as model-language text. Feeding it
// back to parseModel reproduces an equivalent declaration list.
std::string dumpDeclarations(const World& world);

// The full snapshot document: declarations followed by the state sections
// (objects, locations, association extensions). Deterministic -- identical
// world/store pairs produce identical bytes. The format is frozen in
// docs/snapshot_format.md. An inconsistent redundant association is
// flagged in its section instead of aborting the dump.
std::string dumpSnapshot(const World& world, const Store& store);

}  // namespace sysmod
