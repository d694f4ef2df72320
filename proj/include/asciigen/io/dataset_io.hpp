// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// GCDS dataset file format (binary, little-endian) and CSV export.
//
// Layout: magic "GCDS", format version u32, tile_size u32, feature_mode u8,
// charset length u32 + codes u32 each, sample count u64, then per sample:
// label u32, feature length u32, features as f32.

#pragma once

#include <sstream>
#include <string>

#include "asciigen/core.hpp"
#include "asciigen/io/binary.hpp"

namespace asciigen::io {

inline constexpr std::uint32_t kDatasetFormatVersion = 1;

inline std::vector<std::uint8_t> serialize_dataset(const Dataset& d) {
  ByteWriter w;
  w.magic("GCDS");
  w.u32(kDatasetFormatVersion);
  w.u32(static_cast<std::uint32_t>(d.tile_size));
  w.u8(static_cast<std::uint8_t>(d.feature_mode));
  w.u32(static_cast<std::uint32_t>(d.charset.size()));
  for (int c : d.charset.codes()) w.u32(static_cast<std::uint32_t>(c));
  w.u64(d.samples.size());
  for (const Sample& s : d.samples) {
    w.u32(static_cast<std::uint32_t>(s.label));
    w.u32(static_cast<std::uint32_t>(s.features.size()));
    for (float f : s.features) w.f32(f);
  }
  return w.take();
}

inline Dataset deserialize_dataset(const std::vector<std::uint8_t>& buf) {
  ByteReader r(buf);
  r.expect_magic("GCDS");
  std::uint32_t version = r.u32();
  if (version != kDatasetFormatVersion)
    throw std::runtime_error("unsupported dataset format version");
  Dataset d;
  d.tile_size = static_cast<int>(r.u32());
  d.feature_mode = static_cast<FeatureMode>(r.u8());
  std::uint32_t ncodes = r.u32();
  std::vector<int> codes(ncodes);
  for (auto& c : codes) c = static_cast<int>(r.u32());
  d.charset = Charset(std::move(codes));
  std::uint64_t count = r.u64();
  d.samples.resize(count);
  for (Sample& s : d.samples) {
    s.label = static_cast<int>(r.u32());
    if (s.label >= d.charset.size()) throw std::runtime_error("label out of range");
    std::uint32_t dim = r.u32();
    s.features.resize(dim);
    for (float& f : s.features) f = r.f32();
  }
  return d;
}

inline void save_dataset(const Dataset& d, const std::string& path) {
  write_file(path, serialize_dataset(d));
}

inline Dataset load_dataset(const std::string& path) {
  return deserialize_dataset(read_file(path));
}

// `label,f0,f1,...` rows, one per sample; for cross-checking with
// external tools.
inline std::string dataset_to_csv(const Dataset& d) {
  std::ostringstream out;
  std::size_t dim = d.samples.empty() ? 0 : d.samples[0].features.size();
  out << "label";
  for (std::size_t i = 0; i < dim; ++i) out << ",f" << i;
  out << '\n';
  for (const Sample& s : d.samples) {
    out << s.label;
    for (float f : s.features) out << ',' << f;
    out << '\n';
  }
  return out.str();
}

}  // namespace asciigen::io
