#pragma once

// JSON encodings.
//
//   Cover:          {"n": int, "r": int, "blocks": [[[int, ...], ... r parts], ...]}
//   SkewSignMatrix: {"m": int, "entries": [[-1|0|1, ...], ...]}
//
// Blocks are always written in canonical form, so output is byte-stable.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddcover/constructions.hpp"
#include "oddcover/core.hpp"

namespace oddcover {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Cover& cover) {
  ordered_json blocks = ordered_json::array();
  for (const auto& b : cover.blocks()) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : b.parts()) parts.push_back(p);
    blocks.push_back(std::move(parts));
  }
  return ordered_json{{"n", cover.n()}, {"r", cover.r()}, {"blocks", std::move(blocks)}};
}

inline ordered_json to_json(const SkewSignMatrix& m) {
  return ordered_json{{"m", m.dimension()}, {"entries", m.entries()}};
}

inline ordered_json to_json(const RSet& s) {
  return ordered_json(std::vector<Vertex>(s.elements().begin(), s.elements().end()));
}

namespace detail {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

inline nlohmann::json parse_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline Cover cover_from_json(const nlohmann::json& j) {
  const auto n = detail::field<long long>(j, "n");
  const auto r = detail::field<long long>(j, "r");
  if (n < 0 || r < 2) throw ValidationError("cover: n must be non-negative and r at least 2");
  const auto raw = detail::field<std::vector<std::vector<std::vector<long long>>>>(j, "blocks");
  std::vector<Block> blocks;
  blocks.reserve(raw.size());
  for (const auto& rb : raw) {
    if (rb.size() != static_cast<std::size_t>(r))
      throw ValidationError("cover: block does not have r parts");
    std::vector<Part> parts;
    for (const auto& rp : rb) {
      Part p;
      for (auto v : rp) {
        if (v < 0 || v >= n) throw ValidationError("cover: vertex " + std::to_string(v) + " out of range");
        p.push_back(static_cast<Vertex>(v));
      }
      parts.push_back(std::move(p));
    }
    blocks.emplace_back(std::move(parts));
  }
  return Cover(static_cast<std::size_t>(n), static_cast<std::size_t>(r), std::move(blocks));
}

inline SkewSignMatrix matrix_from_json(const nlohmann::json& j) {
  const auto m = detail::field<long long>(j, "m");
  auto entries = detail::field<std::vector<std::vector<int>>>(j, "entries");
  if (m < 0 || entries.size() != static_cast<std::size_t>(m))
    throw ValidationError("matrix: \"m\" does not match the number of rows");
  return SkewSignMatrix(std::move(entries));
}

inline Cover parse_cover(const std::string& text) { return cover_from_json(detail::parse_text(text)); }
inline SkewSignMatrix parse_matrix(const std::string& text) {
  return matrix_from_json(detail::parse_text(text));
}

inline std::string dump(const Cover& cover) { return to_json(cover).dump() + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Cover load_cover(const std::string& path) { return parse_cover(read_file(path)); }

inline void save_cover(const Cover& cover, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << dump(cover);
}

}  // namespace oddcover
