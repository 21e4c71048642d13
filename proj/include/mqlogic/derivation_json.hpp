#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "mqlogic/calculus.hpp"

namespace mqlogic {

using Json = nlohmann::ordered_json;

/// {"ant": [item...], "suc": [item...]} where an item is ["A", 1], ["A", "w"]
/// or {"family": "P(n)", "var": "n", "start": 0, "mult": 1}.
Json sequent_to_json(const SchematicSequent& s);
/// Also accepts the text form "A, B |- C".
SchematicSequent sequent_from_json(const Json& j, const Signature& sig);

/// Node: {"seq", "rule", "premises", "family", "principal"}; a reference to
/// the previous family member is {"ref": "prev"}.
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j, const Signature& sig);

struct DerivationFile {
  std::shared_ptr<Signature> signature;
  Derivation root;
};

/// A file holds {"signature": [lines...] or "text", "root": node}, or just a
/// node when the signature comes from `signature_path`.
DerivationFile load_derivation_file(const std::string& path, const std::optional<std::string>& signature_path = {});
Json derivation_file_json(const Signature& sig, const Derivation& root);

/// Field order is fixed, so equal reports serialize to equal bytes.
Json report_to_json(const CheckReport& r);

}  // namespace mqlogic
