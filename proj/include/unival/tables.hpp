#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "unival/invariant_forms.hpp"

namespace unival {

using nlohmann::json;

/*
 * Bit-stable serialization of the exported artifacts. Keys are sorted
 * (nlohmann objects are ordered maps), rationals are reduced, pi-powers
 * ascend, and numerators/denominators are decimal strings so the format
 * has no magnitude limit.
 */
inline json pi_scalar_to_json(const PiScalar& s) {
  json terms = json::array();
  for (const auto& [j, c] : s.terms())
    terms.push_back({{"pi_power", j}, {"num", c.num().to_string()}, {"den", c.den().to_string()}});
  return terms;
}

inline PiScalar pi_scalar_from_json(const json& j) {
  PiScalar s;
  for (const auto& term : j) {
    Rational c(BigInt::from_string(term.at("num").get<std::string>()),
               BigInt::from_string(term.at("den").get<std::string>()));
    s += PiScalar::pi_power(term.at("pi_power").get<int>(), c);
  }
  return s;
}

inline json area_index_to_json(const AreaIndex& idx) {
  return {{"kind", to_string(idx.kind)}, {"k", idx.k}, {"q", idx.q}};
}

inline AreaIndex area_index_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "B" && kind != "Gamma")
    throw std::invalid_argument("area index: unknown kind \"" + kind + "\"");
  return {kind == "B" ? AreaKind::B : AreaKind::Gamma, j.at("k").get<int>(),
          j.at("q").get<int>()};
}

inline json table_to_json(const StructureTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"from", area_index_to_json(e.from)},
                       {"to", area_index_to_json(e.to)},
                       {"coeff", pi_scalar_to_json(e.coeff)}});
  return {{"n", t.n}, {"generator", t.generator}, {"entries", entries}};
}

inline StructureTable table_from_json(const json& j) {
  StructureTable t;
  t.n = j.at("n").get<int>();
  t.generator = j.at("generator").get<std::string>();
  for (const auto& e : j.at("entries"))
    t.entries.push_back({area_index_from_json(e.at("from")), area_index_from_json(e.at("to")),
                         pi_scalar_from_json(e.at("coeff"))});
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

inline std::string table_to_csv(const StructureTable& t) {
  std::ostringstream out;
  out << "from_kind,from_k,from_q,to_kind,to_k,to_q,coeff\n";
  for (const auto& e : t.entries)
    out << to_string(e.from.kind) << ',' << e.from.k << ',' << e.from.q << ','
        << to_string(e.to.kind) << ',' << e.to.k << ',' << e.to.q << ','
        << e.coeff.to_string() << '\n';
  return out.str();
}

inline json dims_to_json(int n) {
  json rows = json::array();
  for (int k = 0; k <= 2 * n; ++k) {
    json row = {{"k", k}, {"dim_val", dim_val(n, k)}};
    // area measures stop one degree below the volume
    row["dim_area"] = k <= 2 * n - 1 ? dim_area(n, k) : 0;
    rows.push_back(row);
  }
  return {{"n", n}, {"rows", rows}};
}

inline std::string dims_to_csv(int n) {
  std::ostringstream out;
  out << "k,dim_val,dim_area\n";
  for (int k = 0; k <= 2 * n; ++k)
    out << k << ',' << dim_val(n, k) << ',' << (k <= 2 * n - 1 ? dim_area(n, k) : 0) << '\n';
  return out.str();
}

inline json basis_to_json(int n) {
  json rows = json::array();
  for (const auto& idx : area_basis(n)) rows.push_back(area_index_to_json(idx));
  return {{"n", n}, {"basis", rows}};
}

inline std::string basis_to_csv(int n) {
  std::ostringstream out;
  out << "kind,k,q\n";
  for (const auto& idx : area_basis(n))
    out << to_string(idx.kind) << ',' << idx.k << ',' << idx.q << '\n';
  return out.str();
}

/*
 * Optional on-disk cache of the per-n structure tables, rooted at
 * $UNIVAL_CACHE_DIR when set. A cache file that fails to parse or does
 * not match the requested table is ignored and recomputed; writes are
 * best-effort.
 */
inline StructureTable module_table_cached(int n, char generator) {
  const char* dir = std::getenv("UNIVAL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return module_structure_table(n, generator);
  std::filesystem::path path(dir);
  path /= std::string(generator == 't' ? "t_hat" : "s_hat") + "_n" + std::to_string(n) + ".json";
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      std::ifstream in(path);
      json j;
      in >> j;
      StructureTable t = table_from_json(j);
      if (t.n == n && t.generator == (generator == 't' ? "t_hat" : "s_hat")) return t;
    } catch (const std::exception&) {
      // fall through to recompute
    }
  }
  StructureTable t = module_structure_table(n, generator);
  std::filesystem::create_directories(std::filesystem::path(dir), ec);
  std::ofstream out(path);
  if (out) out << table_to_json(t).dump(2) << '\n';
  return t;
}

} // namespace unival
