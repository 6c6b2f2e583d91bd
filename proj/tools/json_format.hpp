#pragma once

// JSON records emitted by `suptrop --json`. Scalars are always strings in the
// text token grammar so that they round-trip exactly.

#include <string>

#include "json.hpp"
#include "suptrop/suptrop.hpp"

namespace suptrop::json {

using nlohmann::ordered_json;

inline ordered_json scalar(const TropElem& a) { return to_string(a); }

inline ordered_json matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"rows", std::move(rows)}};
}

/// {"n": n, "rows": [[tok, ...], ...]}; numeric entries are accepted too.
inline Matrix parse_matrix(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw ParseError("JSON matrix needs a \"rows\" array", 1, 1);
  const auto& rows = j["rows"];
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("empty matrix", 1, 1);
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != n))
    throw ParseError("\"n\" does not match the number of rows", 1, 1);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " does not have " + std::to_string(n) + " entries", i + 1, 1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = rows[i][k];
      std::string tok;
      if (e.is_string()) tok = e.get<std::string>();
      else if (e.is_number_integer()) tok = std::to_string(e.get<std::int64_t>());
      else throw ParseError("entries must be strings or integers", i + 1, k + 1);
      auto v = try_parse_scalar(tok);
      if (!v) throw ParseError("bad scalar token '" + tok + "'", i + 1, k + 1);
      m(i, k) = *v;
    }
  }
  return m;
}

inline ordered_json permutation(const Permutation& p) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) a.push_back(p(i) + 1);
  return a;
}

inline ordered_json optional_permutation(const std::optional<Permutation>& p) {
  return p ? permutation(*p) : ordered_json(nullptr);
}

inline ordered_json bid(const BidResult& b) {
  return {{"per_plus", scalar(b.per_plus)}, {"per_minus", scalar(b.per_minus)}, {"per", scalar(b.per)}};
}

inline ordered_json generator(const ElemGen& g) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Transposition>)
          return {{"type", "T"}, {"i", x.i + 1}, {"j", x.j + 1}};
        else if constexpr (std::is_same_v<T, DiagMult>)
          return {{"type", "D"}, {"i", x.i + 1}, {"a", scalar(x.a)}};
        else
          return {{"type", "G"}, {"i", x.i + 1}, {"j", x.j + 1}, {"a", scalar(x.a)}};
      },
      g);
}

inline ordered_json word(const ElemWord& w) {
  ordered_json a = ordered_json::array();
  for (const auto& g : w) a.push_back(generator(g));
  return a;
}

inline ordered_json gen_perm(const GenPerm& p) {
  ordered_json w = ordered_json::array();
  for (const auto& x : p.weights()) w.push_back(scalar(x));
  return {{"perm", permutation(p.perm())}, {"weights", std::move(w)}};
}

inline ordered_json class_report(const ClassReport& r) {
  ordered_json dominant = ordered_json::array();
  for (const auto& p : r.dominance.dominant) dominant.push_back(permutation(p));
  return {
      {"singularity", to_string(r.singularity)},
      {"bid", bid(r.bid)},
      {"shape", {{"definite", r.shape.definite}, {"normal", r.shape.normal}, {"strictly_normal", r.shape.strictly_normal}}},
      {"groups", {{"SL", r.groups.in_SL}, {"BQSL", r.groups.in_BQSL}, {"QSL_circ", r.groups.in_QSL_circ}}},
      {"SL1", r.in_SL1},
      {"dominance",
       {{"value", scalar(r.dominance.value)},
        {"dominant", std::move(dominant)},
        {"strictly_dominant", optional_permutation(r.dominance.strictly_dominant)},
        {"uniformly_dominant", optional_permutation(r.dominance.uniformly_dominant)}}},
  };
}

inline ordered_json property_report(const oracle::PropertyReport& r) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"detail", f.detail}});
  return {{"id", r.id},
          {"status", r.status()},
          {"trials", r.trials},
          {"skipped", r.skipped},
          {"failures", std::move(failures)}};
}

}  // namespace suptrop::json
