#pragma once

#include "lagblow/blowup/blowup.hpp"
#include "lagblow/model/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagblow::workbench {

struct Workspace {
  model::ManifoldData manifold;
  std::vector<model::LagrangianData> lagrangians;
  std::vector<model::FloerPairData> floer_pairs;
  std::map<std::string, std::string> metadata;  // free-form documentation strings

  /// Blow-up parameters for this manifold, computed on demand.
  blowup::BlowupParams blowup() const { return blowup::make_params(manifold); }

  bool operator==(const Workspace&) const = default;
};

/// Parses and validates an input document (UTF-8 JSON).
///
/// Throws Error(ParseError) for malformed JSON, missing keys or bad literals;
/// the message carries a line:column position when one is known. Throws
/// Error(ValidationError) with one diagnostic per failing item otherwise.
Workspace parse_spec(std::string_view document);

/// Canonical JSON rendering; parse_spec(serialize(w)) == w.
std::string serialize(const Workspace& workspace);

/// Names accepted by builtin_example, in a fixed order.
const std::vector<std::string>& builtin_example_names();

/// Built-in fixture by name; throws Error(UnknownExample).
Workspace builtin_example(std::string_view name);

/// Raw document text of a built-in fixture.
std::string_view builtin_document(std::string_view name);

}  // namespace lagblow::workbench
