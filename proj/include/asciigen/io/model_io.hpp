// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// GCMA model file format: magic "GCMA", format version u32, kind u8,
// tile_size u32, feature_mode u8, charset length u32 + codes u32 each,
// hyperparam count u32 + (name, f64) pairs, payload length u64 + bytes.
// Per-kind payload layouts live with each backend's save/load.

#pragma once

#include <string>

#include "asciigen/core.hpp"
#include "asciigen/io/binary.hpp"

namespace asciigen::io {

inline constexpr std::uint32_t kModelFormatVersion = 1;

inline std::vector<std::uint8_t> serialize_model(const ModelArtifact& m) {
  ByteWriter w;
  w.magic("GCMA");
  w.u32(kModelFormatVersion);
  w.u8(static_cast<std::uint8_t>(m.kind));
  w.u32(static_cast<std::uint32_t>(m.tile_size));
  w.u8(static_cast<std::uint8_t>(m.feature_mode));
  w.u32(static_cast<std::uint32_t>(m.charset.size()));
  for (int c : m.charset.codes()) w.u32(static_cast<std::uint32_t>(c));
  w.u32(static_cast<std::uint32_t>(m.hyperparams.size()));
  for (const auto& [key, value] : m.hyperparams) {
    w.str(key);
    w.f64(value);
  }
  w.u64(m.payload.size());
  w.bytes(m.payload.data(), m.payload.size());
  return w.take();
}

inline ModelArtifact deserialize_model(const std::vector<std::uint8_t>& buf) {
  ByteReader r(buf);
  r.expect_magic("GCMA");
  ModelArtifact m;
  m.format_version = r.u32();
  if (m.format_version != kModelFormatVersion)
    throw std::runtime_error("unsupported model format version");
  m.kind = static_cast<ModelKind>(r.u8());
  m.tile_size = static_cast<int>(r.u32());
  m.feature_mode = static_cast<FeatureMode>(r.u8());
  std::uint32_t ncodes = r.u32();
  std::vector<int> codes(ncodes);
  for (int& c : codes) c = static_cast<int>(r.u32());
  m.charset = Charset(std::move(codes));
  std::uint32_t nhyper = r.u32();
  for (std::uint32_t i = 0; i < nhyper; ++i) {
    std::string key = r.str();
    m.hyperparams[key] = r.f64();
  }
  std::uint64_t payload_len = r.u64();
  m.payload.resize(payload_len);
  for (auto& b : m.payload) b = r.u8();
  return m;
}

inline void save_model(const ModelArtifact& m, const std::string& path) {
  write_file(path, serialize_model(m));
}

inline ModelArtifact load_model(const std::string& path) {
  return deserialize_model(read_file(path));
}

}  // namespace asciigen::io
