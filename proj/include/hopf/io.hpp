/// \file io.hpp
/// \brief JSON file formats for group tables, specs, pairings, doubles,
///        and verification reports. Complex entries are [re, im] pairs;
///        writers are deterministic and round-trip bit-exactly.
#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hopf/double.hpp"
#include "hopf/group.hpp"
#include "hopf/pairing.hpp"
#include "hopf/report.hpp"
#include "hopf/spec.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

using json = nlohmann::ordered_json;

inline json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected [re, im] pair");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

/// Tensor to nested arrays, one nesting level per axis.
inline json tensor_to_json(const CTensor& t) {
  if (t.rank() == 0) return complex_to_json(t[0]);
  std::size_t head = t.shape()[0];
  std::size_t stride = t.size() / head;
  if (t.rank() == 1) {
    json arr = json::array();
    for (std::size_t i = 0; i < head; ++i) arr.push_back(complex_to_json(t[i]));
    return arr;
  }
  std::vector<std::size_t> sub_shape(t.shape().begin() + 1, t.shape().end());
  json arr = json::array();
  for (std::size_t i = 0; i < head; ++i) {
    CTensor sub(sub_shape);
    for (std::size_t f = 0; f < stride; ++f) sub[f] = t[i * stride + f];
    arr.push_back(tensor_to_json(sub));
  }
  return arr;
}

inline CTensor tensor_from_json(const json& j,
                                const std::vector<std::size_t>& shape) {
  CTensor t(shape);
  // walk the nesting recursively, filling flat storage in order
  std::size_t pos = 0;
  auto fill = [&](auto&& self, const json& node, std::size_t depth) -> void {
    if (depth == shape.size()) {
      t[pos++] = complex_from_json(node);
      return;
    }
    if (!node.is_array() || node.size() != shape[depth])
      throw ParseError("tensor nesting does not match declared shape");
    for (const json& child : node) self(self, child, depth + 1);
  };
  fill(fill, j, 0);
  t.ensure_finite();
  return t;
}

inline json group_to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order();
  j["product"] = g.table();
  if (!g.label().empty()) j["label"] = g.label();
  return j;
}

inline GroupTable group_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("product"))
    throw ParseError("group file needs \"order\" and \"product\"");
  std::size_t n = j["order"].get<std::size_t>();
  auto table = j["product"].get<std::vector<std::vector<std::size_t>>>();
  if (table.size() != n) throw ParseError("group: order/table mismatch");
  return GroupTable(std::move(table), j.value("label", std::string{}));
}

inline json spec_to_json(const HopfSpec& h) {
  json j;
  j["dim"] = h.dim;
  if (!h.label.empty()) j["label"] = h.label;
  j["mult"] = tensor_to_json(h.mult);
  j["unit"] = tensor_to_json(h.unit);
  j["comult"] = tensor_to_json(h.comult);
  j["counit"] = tensor_to_json(h.counit);
  j["antipode"] = tensor_to_json(h.antipode);
  j["star"] = tensor_to_json(h.star);
  if (h.integral) j["integral"] = tensor_to_json(*h.integral);
  return j;
}

inline HopfSpec spec_from_json(const json& j) {
  for (const char* key : {"dim", "mult", "unit", "comult", "counit",
                          "antipode", "star"})
    if (!j.contains(key))
      throw ParseError(std::string("spec file missing \"") + key + "\"");
  HopfSpec h;
  h.dim = j["dim"].get<std::size_t>();
  std::size_t n = h.dim;
  h.label = j.value("label", std::string{});
  h.mult = tensor_from_json(j["mult"], {n, n, n});
  h.unit = tensor_from_json(j["unit"], {n});
  h.comult = tensor_from_json(j["comult"], {n, n, n});
  h.counit = tensor_from_json(j["counit"], {n});
  h.antipode = tensor_from_json(j["antipode"], {n, n});
  h.star = tensor_from_json(j["star"], {n, n});
  if (j.contains("integral"))
    h.integral = tensor_from_json(j["integral"], {n});
  return h;
}

inline json pairing_to_json(const PairingSpec& pr) {
  json j;
  j["A"] = spec_to_json(pr.A);
  j["B"] = spec_to_json(pr.B);
  j["P"] = tensor_to_json(pr.P);
  return j;
}

/// Standard HopfSpec JSON plus the embedding data; any consumer may read
/// the result back as a plain HopfSpec and ignore the extra fields.
inline json double_to_json(const DoubleSpec& d) {
  json j = spec_to_json(d.H);
  j["index_map"] = {{"n_A", d.n_A}, {"n_B", d.n_B}};
  j["embed_A"] = tensor_to_json(d.embed_A);
  j["embed_B"] = tensor_to_json(d.embed_B);
  j["source"] = pairing_to_json(d.source);
  return j;
}

inline DoubleSpec double_from_json(const json& j,
                                   const std::filesystem::path& base_dir);

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

/// "A"/"B" may be inline spec objects or file-reference strings,
/// resolved relative to the pairing file's directory.
inline PairingSpec pairing_from_json(const json& j,
                                     const std::filesystem::path& base_dir) {
  if (!j.contains("A") || !j.contains("B") || !j.contains("P"))
    throw ParseError("pairing file needs \"A\", \"B\" and \"P\"");
  auto load_side = [&](const json& side) {
    if (side.is_string()) {
      std::filesystem::path p = side.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return spec_from_json(read_json_file(p));
    }
    return spec_from_json(side);
  };
  PairingSpec pr;
  pr.A = load_side(j["A"]);
  pr.B = load_side(j["B"]);
  pr.P = tensor_from_json(j["P"], {pr.A.dim, pr.B.dim});
  return pr;
}

inline DoubleSpec double_from_json(const json& j,
                                   const std::filesystem::path& base_dir) {
  DoubleSpec d;
  d.H = spec_from_json(j);
  if (!j.contains("index_map") || !j.contains("embed_A") ||
      !j.contains("embed_B") || !j.contains("source"))
    throw ParseError("double file needs index_map, embed_A, embed_B, source");
  d.n_A = j["index_map"]["n_A"].get<std::size_t>();
  d.n_B = j["index_map"]["n_B"].get<std::size_t>();
  if (d.n_A * d.n_B != d.H.dim)
    throw ParseError("double file: index_map does not match dim");
  d.embed_A = tensor_from_json(j["embed_A"], {d.n_A, d.H.dim});
  d.embed_B = tensor_from_json(j["embed_B"], {d.n_B, d.H.dim});
  d.source = pairing_from_json(j["source"], base_dir);
  if (!d.H.integral) throw ParseError("double file: missing integral");
  d.theta = *d.H.integral;
  return d;
}

inline json report_to_json(const AxiomReport& rep, const Tolerance& tol) {
  json j;
  j["tolerance"] = {{"abs", tol.abs}, {"rel", tol.rel}};
  j["checks"] = json::array();
  for (const AxiomCheck& c : rep.entries)
    j["checks"].push_back(
        {{"check", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  j["overall"] = rep.overall();
  return j;
}

inline void write_json_file(const std::filesystem::path& path,
                            const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace io
}  // namespace hopf
