// Catalog files: a JSON document {"schemes": [...]} of SchemeHodgeData entries.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "archfe/scheme.hpp"

namespace archfe::cli {

class CatalogError : public std::invalid_argument {
 public:
  enum class Code { Io, Syntax, Schema, Hodge, UnknownScheme, DuplicateScheme };
  CatalogError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

using Catalog = std::vector<SchemeHodgeData>;

/// One scheme entry. Unknown keys, wrong types and malformed pieces throw.
SchemeHodgeData scheme_from_json(const nlohmann::json& entry);
nlohmann::ordered_json scheme_to_json(const SchemeHodgeData& x);

Catalog parse_catalog(std::string_view text);
/// Pretty-printed with two-space indentation and a trailing newline.
std::string serialize_catalog(const Catalog& catalog);
Catalog load_catalog(const std::filesystem::path& path);

/// The shipped catalog (compiled from data/catalog.json).
const Catalog& builtin_catalog();

const SchemeHodgeData& find_scheme(const Catalog& catalog, std::string_view name);

}  // namespace archfe::cli
