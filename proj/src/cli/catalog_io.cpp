#include <fstream>
#include <json.hpp>
#include <sstream>

#include "diracsym/cli.hpp"
#include "diracsym/errors.hpp"

namespace diracsym::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json weight_to_json(const Weight& w) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) arr.push_back(to_string(w[i]));
  return arr;
}

Weight weight_from_json(const ordered_json& arr, Eigen::Index expected_dim,
                        const std::string& where) {
  if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != expected_dim)
    throw ParseError(where + ": root must be an array of " +
                     std::to_string(expected_dim) + " rational strings");
  Weight w(expected_dim);
  for (Eigen::Index i = 0; i < expected_dim; ++i) {
    if (!arr[i].is_string())
      throw ParseError(where + ": coordinates are rational strings");
    w[i] = rational_from_string(arr[i].get<std::string>());
  }
  return w;
}

ordered_json pair_to_json(const SymmetricPair& p) {
  ordered_json j;
  j["name"] = p.name;
  check(p.rs.cartan.has_value(),
        p.name + ": only pairs over catalogued simple types serialize");
  j["cartan"] = {{"family", std::string(1, static_cast<char>(p.rs.cartan->family))},
                 {"rank", p.rs.cartan->rank}};
  ordered_json roots = ordered_json::array();
  for (int i : p.compact_positive)
    roots.push_back(weight_to_json(p.rs.positive_roots[i]));
  j["compact_positive_roots"] = std::move(roots);
  j["structure"] = to_string(p.structure);
  j["kahler_also"] = p.kahler_also;
  j["spin"] = p.has_spin;
  j["spin_source"] =
      p.spin_source == SpinSource::paper_table ? "paper_table" : "asserted";
  return j;
}

SymmetricPair pair_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("catalog entry must be an object");
  auto field = [&](const char* key) -> const ordered_json& {
    auto it = j.find(key);
    if (it == j.end())
      throw ParseError(std::string("catalog entry missing field '") + key + "'");
    return *it;
  };
  std::string name = field("name").get<std::string>();
  const ordered_json& cartan = field("cartan");
  std::string family = cartan.at("family").get<std::string>();
  int rank = cartan.at("rank").get<int>();
  if (family.size() != 1)
    throw ParseError(name + ": cartan.family must be a single letter");
  RootSystem rs;
  try {
    rs = build_root_system(cartan_type_from_name(family + std::to_string(rank)));
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }

  std::vector<Weight> compact;
  const ordered_json& roots = field("compact_positive_roots");
  if (!roots.is_array())
    throw ParseError(name + ": compact_positive_roots must be an array");
  for (std::size_t i = 0; i < roots.size(); ++i)
    compact.push_back(weight_from_json(
        roots[i], rs.ambient_dim,
        name + ".compact_positive_roots[" + std::to_string(i) + "]"));

  PairMetadata meta;
  meta.structure = structure_from_string(field("structure").get<std::string>());
  if (auto it = j.find("kahler_also"); it != j.end())
    meta.kahler_also = it->get<bool>();
  meta.has_spin = field("spin").get<bool>();
  if (auto it = j.find("spin_source"); it != j.end()) {
    std::string s = it->get<std::string>();
    if (s == "paper_table")
      meta.spin_source = SpinSource::paper_table;
    else if (s == "asserted")
      meta.spin_source = SpinSource::asserted;
    else
      throw ParseError(name + ": unknown spin_source '" + s + "'");
  }
  return make_pair_from_roots(rs, std::move(name), compact, meta);
}

}  // namespace

std::string catalog_to_json(const Catalog& catalog) {
  ordered_json j;
  j["entries"] = ordered_json::array();
  for (const std::string& name : catalog.order)
    j["entries"].push_back(pair_to_json(catalog.entries.at(name)));
  return j.dump(2) + "\n";
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read catalog file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog file '" + path + "': " + e.what());
  }
  const ordered_json* entries = nullptr;
  if (j.is_array())
    entries = &j;
  else if (j.is_object() && j.contains("entries"))
    entries = &j["entries"];
  else
    throw ParseError("catalog file '" + path +
                     "': expected an array or an object with 'entries'");

  Catalog catalog = builtin_catalog();
  for (const ordered_json& entry : *entries) catalog.put(pair_from_json(entry));
  return catalog;
}

}  // namespace diracsym::cli
