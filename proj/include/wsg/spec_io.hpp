#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wsg/fieldcheck.hpp"
#include "wsg/model.hpp"

namespace wsg {

// Degree data only, as given in an "abstract" document.
struct AbstractInput {
  std::int64_t p = 0;
  int n = 0;
  std::vector<PoleDatum> poles;
  std::vector<ZeroDatum> zeros;

  friend bool operator==(const AbstractInput&, const AbstractInput&) = default;
};

using SpecDocument = std::variant<AbstractInput, ConcreteSpec>;

// Accepts a JSON document with "mode": "abstract" | "concrete".
// Throws SyntaxError (with line/column) or SchemaError (naming the field).
SpecDocument parse_spec_file(std::string_view text);

// Canonical form: sorted keys, no whitespace, elements as full-length digit lists.
std::string serialize_spec(const SpecDocument& doc);

// Builds the FieldSpec; concrete documents go through validate_concrete.
ValidatedSpec resolve_spec(const SpecDocument& doc, const ValidationOptions& options = {});

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string spec_fingerprint(const SpecDocument& doc);

}  // namespace wsg
