#include "cli/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cli/builtin_catalog.hpp"

namespace archfe::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw CatalogError(CatalogError::Code::Schema, where + ": " + what);
}

void require_object(const json& j, const std::string& where, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) schema_error(where, "unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) schema_error(where, "missing key '" + key + "'");
  }
}

std::int64_t get_int(const json& j, const char* key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) schema_error(where, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Integer get_big(const json& j, const char* key, const std::string& where) {
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) schema_error(where, std::string("'") + key + "' is not an integer");
    return z;
  }
  schema_error(where, std::string("'") + key + "' must be an integer or a decimal string");
}

SimplePiece piece_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    schema_error(where, "piece needs a string 'type'");
  }
  const auto type = j.at("type").get<std::string>();
  if (type == "pq") {
    require_object(j, where, {"type", "p", "q", "mult"}, {"type", "p", "q", "mult"});
    const auto p = get_int(j, "p", where);
    const auto q = get_int(j, "q", where);
    if (p >= q) schema_error(where, "pq piece needs p < q");
    return SimplePiece::pq(p, q);
  }
  if (type == "mid") {
    require_object(j, where, {"type", "p", "eps", "mult"}, {"type", "p", "eps", "mult"});
    const auto& e = j.at("eps");
    if (!e.is_string() || (e != "+" && e != "-")) schema_error(where, "eps must be \"+\" or \"-\"");
    return SimplePiece::mid(get_int(j, "p", where), e == "+" ? Eps::Plus : Eps::Minus);
  }
  schema_error(where, "unknown piece type '" + type + "'");
}

}  // namespace

SchemeHodgeData scheme_from_json(const json& entry) {
  std::string where = "scheme";
  if (entry.is_object() && entry.contains("name") && entry.at("name").is_string()) {
    where = "scheme '" + entry.at("name").get<std::string>() + "'";
  }
  require_object(entry, where, {"name", "d", "conductor_A", "chi_real_f2", "remark", "cohomology"},
                 {"name", "d", "cohomology"});
  SchemeHodgeData x;
  if (!entry.at("name").is_string()) schema_error(where, "'name' must be a string");
  x.name = entry.at("name").get<std::string>();
  if (x.name.empty()) schema_error(where, "'name' must be nonempty");
  x.d = get_int(entry, "d", where);
  if (entry.contains("conductor_A")) x.conductor_A = get_big(entry, "conductor_A", where);
  if (entry.contains("chi_real_f2")) x.chi_real_f2 = get_int(entry, "chi_real_f2", where);
  if (entry.contains("remark")) {
    if (!entry.at("remark").is_string()) schema_error(where, "'remark' must be a string");
    x.remark = entry.at("remark").get<std::string>();
  }

  const auto& coh = entry.at("cohomology");
  if (!coh.is_array()) schema_error(where, "'cohomology' must be a list");
  for (const auto& block : coh) {
    require_object(block, where + " cohomology", {"i", "pieces"}, {"i", "pieces"});
    const auto i = get_int(block, "i", where);
    const std::string at = where + " h^" + std::to_string(i);
    if (x.cohomology.contains(i)) schema_error(at, "degree listed twice");
    if (!block.at("pieces").is_array()) schema_error(at, "'pieces' must be a list");
    RHodgeStructure h(i);
    for (const auto& pj : block.at("pieces")) {
      const auto piece = piece_from_json(pj, at);
      const auto mult = get_int(pj, "mult", at);
      if (mult < 1) schema_error(at, "'mult' must be positive");
      if (h.multiplicity(piece) != 0) schema_error(at, piece.to_string() + " listed twice");
      try {
        h.add(piece, mult);
      } catch (const HodgeError& e) {
        throw CatalogError(CatalogError::Code::Hodge, at + ": " + e.what());
      }
    }
    x.cohomology.emplace(i, std::move(h));
  }
  return x;
}

nlohmann::ordered_json scheme_to_json(const SchemeHodgeData& x) {
  nlohmann::ordered_json j;
  j["name"] = x.name;
  j["d"] = x.d;
  if (x.conductor_A) {
    if (x.conductor_A->fits_slong_p()) {
      j["conductor_A"] = x.conductor_A->get_si();
    } else {
      j["conductor_A"] = x.conductor_A->get_str();
    }
  }
  if (x.chi_real_f2) j["chi_real_f2"] = *x.chi_real_f2;
  if (!x.remark.empty()) j["remark"] = x.remark;
  auto coh = nlohmann::ordered_json::array();
  for (const auto& [i, h] : x.cohomology) {
    auto pieces = nlohmann::ordered_json::array();
    for (const auto& [piece, mult] : h.pieces()) {
      nlohmann::ordered_json pj;
      if (piece.is_pq()) {
        pj["type"] = "pq";
        pj["p"] = piece.p();
        pj["q"] = piece.q();
      } else {
        pj["type"] = "mid";
        pj["p"] = piece.p();
        pj["eps"] = std::string(1, eps_char(piece.eps()));
      }
      pj["mult"] = mult;
      pieces.push_back(std::move(pj));
    }
    coh.push_back({{"i", i}, {"pieces", std::move(pieces)}});
  }
  j["cohomology"] = std::move(coh);
  return j;
}

Catalog parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogError(CatalogError::Code::Syntax, std::string("catalog is not valid JSON: ") + e.what());
  }
  require_object(doc, "catalog", {"schemes"}, {"schemes"});
  if (!doc.at("schemes").is_array()) schema_error("catalog", "'schemes' must be a list");
  Catalog out;
  std::set<std::string> names;
  for (const auto& entry : doc.at("schemes")) {
    auto x = scheme_from_json(entry);
    if (!names.insert(x.name).second) {
      throw CatalogError(CatalogError::Code::DuplicateScheme, "scheme '" + x.name + "' listed twice");
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string serialize_catalog(const Catalog& catalog) {
  nlohmann::ordered_json doc;
  auto schemes = nlohmann::ordered_json::array();
  for (const auto& x : catalog) schemes.push_back(scheme_to_json(x));
  doc["schemes"] = std::move(schemes);
  return doc.dump(2) + "\n";
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError(CatalogError::Code::Io, "cannot open catalog " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = parse_catalog(kBuiltinCatalogJson);
  return catalog;
}

const SchemeHodgeData& find_scheme(const Catalog& catalog, std::string_view name) {
  for (const auto& x : catalog) {
    if (x.name == name) return x;
  }
  std::string known;
  for (const auto& x : catalog) known += (known.empty() ? "" : ", ") + x.name;
  throw CatalogError(CatalogError::Code::UnknownScheme,
                     "no scheme named '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace archfe::cli
