// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "asciigen/io/binary.hpp"
#include "asciigen/io/dataset_io.hpp"
#include "asciigen/io/image_io.hpp"
#include "asciigen/io/model_io.hpp"

namespace asciigen {
namespace {

// 8x8 RGB JPEG, pixel (x, y) = (30x, 30y, 128), quality 90.
const std::uint8_t kTestJpeg[] = {
    0xff, 0xd8, 0xff, 0xe0, 0x00, 0x10, 0x4a, 0x46, 0x49, 0x46, 0x00, 0x01,
    0x01, 0x00, 0x00, 0x01, 0x00, 0x01, 0x00, 0x00, 0xff, 0xdb, 0x00, 0x43,
    0x00, 0x03, 0x02, 0x02, 0x03, 0x02, 0x02, 0x03, 0x03, 0x03, 0x03, 0x04,
    0x03, 0x03, 0x04, 0x05, 0x08, 0x05, 0x05, 0x04, 0x04, 0x05, 0x0a, 0x07,
    0x07, 0x06, 0x08, 0x0c, 0x0a, 0x0c, 0x0c, 0x0b, 0x0a, 0x0b, 0x0b, 0x0d,
    0x0e, 0x12, 0x10, 0x0d, 0x0e, 0x11, 0x0e, 0x0b, 0x0b, 0x10, 0x16, 0x10,
    0x11, 0x13, 0x14, 0x15, 0x15, 0x15, 0x0c, 0x0f, 0x17, 0x18, 0x16, 0x14,
    0x18, 0x12, 0x14, 0x15, 0x14, 0xff, 0xdb, 0x00, 0x43, 0x01, 0x03, 0x04,
    0x04, 0x05, 0x04, 0x05, 0x09, 0x05, 0x05, 0x09, 0x14, 0x0d, 0x0b, 0x0d,
    0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14,
    0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14,
    0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14,
    0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14, 0x14,
    0x14, 0x14, 0xff, 0xc0, 0x00, 0x11, 0x08, 0x00, 0x08, 0x00, 0x08, 0x03,
    0x01, 0x22, 0x00, 0x02, 0x11, 0x01, 0x03, 0x11, 0x01, 0xff, 0xc4, 0x00,
    0x1f, 0x00, 0x00, 0x01, 0x05, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01, 0x02, 0x03, 0x04, 0x05,
    0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b, 0xff, 0xc4, 0x00, 0xb5, 0x10, 0x00,
    0x02, 0x01, 0x03, 0x03, 0x02, 0x04, 0x03, 0x05, 0x05, 0x04, 0x04, 0x00,
    0x00, 0x01, 0x7d, 0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21,
    0x31, 0x41, 0x06, 0x13, 0x51, 0x61, 0x07, 0x22, 0x71, 0x14, 0x32, 0x81,
    0x91, 0xa1, 0x08, 0x23, 0x42, 0xb1, 0xc1, 0x15, 0x52, 0xd1, 0xf0, 0x24,
    0x33, 0x62, 0x72, 0x82, 0x09, 0x0a, 0x16, 0x17, 0x18, 0x19, 0x1a, 0x25,
    0x26, 0x27, 0x28, 0x29, 0x2a, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3a,
    0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55, 0x56,
    0x57, 0x58, 0x59, 0x5a, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6a,
    0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7a, 0x83, 0x84, 0x85, 0x86,
    0x87, 0x88, 0x89, 0x8a, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99,
    0x9a, 0xa2, 0xa3, 0xa4, 0xa5, 0xa6, 0xa7, 0xa8, 0xa9, 0xaa, 0xb2, 0xb3,
    0xb4, 0xb5, 0xb6, 0xb7, 0xb8, 0xb9, 0xba, 0xc2, 0xc3, 0xc4, 0xc5, 0xc6,
    0xc7, 0xc8, 0xc9, 0xca, 0xd2, 0xd3, 0xd4, 0xd5, 0xd6, 0xd7, 0xd8, 0xd9,
    0xda, 0xe1, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7, 0xe8, 0xe9, 0xea, 0xf1,
    0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa, 0xff, 0xc4, 0x00,
    0x1f, 0x01, 0x00, 0x03, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01,
    0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01, 0x02, 0x03, 0x04, 0x05,
    0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b, 0xff, 0xc4, 0x00, 0xb5, 0x11, 0x00,
    0x02, 0x01, 0x02, 0x04, 0x04, 0x03, 0x04, 0x07, 0x05, 0x04, 0x04, 0x00,
    0x01, 0x02, 0x77, 0x00, 0x01, 0x02, 0x03, 0x11, 0x04, 0x05, 0x21, 0x31,
    0x06, 0x12, 0x41, 0x51, 0x07, 0x61, 0x71, 0x13, 0x22, 0x32, 0x81, 0x08,
    0x14, 0x42, 0x91, 0xa1, 0xb1, 0xc1, 0x09, 0x23, 0x33, 0x52, 0xf0, 0x15,
    0x62, 0x72, 0xd1, 0x0a, 0x16, 0x24, 0x34, 0xe1, 0x25, 0xf1, 0x17, 0x18,
    0x19, 0x1a, 0x26, 0x27, 0x28, 0x29, 0x2a, 0x35, 0x36, 0x37, 0x38, 0x39,
    0x3a, 0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55,
    0x56, 0x57, 0x58, 0x59, 0x5a, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69,
    0x6a, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7a, 0x82, 0x83, 0x84,
    0x85, 0x86, 0x87, 0x88, 0x89, 0x8a, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97,
    0x98, 0x99, 0x9a, 0xa2, 0xa3, 0xa4, 0xa5, 0xa6, 0xa7, 0xa8, 0xa9, 0xaa,
    0xb2, 0xb3, 0xb4, 0xb5, 0xb6, 0xb7, 0xb8, 0xb9, 0xba, 0xc2, 0xc3, 0xc4,
    0xc5, 0xc6, 0xc7, 0xc8, 0xc9, 0xca, 0xd2, 0xd3, 0xd4, 0xd5, 0xd6, 0xd7,
    0xd8, 0xd9, 0xda, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7, 0xe8, 0xe9, 0xea,
    0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa, 0xff, 0xda, 0x00,
    0x0c, 0x03, 0x01, 0x00, 0x02, 0x11, 0x03, 0x11, 0x00, 0x3f, 0x00, 0xe2,
    0x7e, 0x16, 0xfe, 0xcb, 0xdf, 0xea, 0x7f, 0xd1, 0x3d, 0x3f, 0x86, 0x8a,
    0x28, 0xaf, 0x9e, 0xcd, 0x38, 0x97, 0x32, 0xfa, 0xcb, 0xfd, 0xe1, 0xdf,
    0xc0, 0x3c, 0x5d, 0x9b, 0x7f, 0x62, 0x53, 0xfd, 0xe7, 0xf5, 0x6f, 0x53,
    0xff, 0xd9,
};

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

Dataset small_dataset() {
  Dataset d;
  d.tile_size = 3;
  d.feature_mode = FeatureMode::kRaw;
  d.charset = Charset({32, 65, 66});
  d.samples = {
      {{0.0f, 0.5f, 1.0f, 0.25f, 0.75f, 0.125f, 0.0f, 1.0f, 0.5f}, 0},
      {{1.0f, 0.0f, 0.0f, 0.0f, 1.0f, 0.0f, 0.0f, 0.0f, 1.0f}, 2},
  };
  return d;
}

TEST(ByteIo, WriterReaderRoundTrip) {
  io::ByteWriter w;
  w.magic("ABCD");
  w.u8(7);
  w.u32(123456789u);
  w.u64(0x1122334455667788ull);
  w.f32(1.5f);
  w.f64(-2.25);
  w.str("hello");
  io::ByteReader r(w.data());
  r.expect_magic("ABCD");
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32(), 123456789u);
  EXPECT_EQ(r.u64(), 0x1122334455667788ull);
  EXPECT_EQ(r.f32(), 1.5f);
  EXPECT_EQ(r.f64(), -2.25);
  EXPECT_EQ(r.str(), "hello");
  EXPECT_TRUE(r.at_end());
}

TEST(ByteIo, TruncatedReadThrows) {
  io::ByteWriter w;
  w.u32(5);
  io::ByteReader r(w.data());
  r.u32();
  EXPECT_THROW(r.u32(), std::runtime_error);
}

TEST(ByteIo, BadMagicThrows) {
  io::ByteWriter w;
  w.magic("GCDS");
  io::ByteReader r(w.data());
  EXPECT_THROW(r.expect_magic("GCMA"), std::runtime_error);
}

TEST(DatasetIo, SerializeRoundTripPreservesEverything) {
  Dataset d = small_dataset();
  std::vector<std::uint8_t> buf = io::serialize_dataset(d);
  Dataset back = io::deserialize_dataset(buf);
  EXPECT_EQ(back.tile_size, d.tile_size);
  EXPECT_EQ(back.feature_mode, d.feature_mode);
  ASSERT_EQ(back.charset.size(), d.charset.size());
  for (int i = 0; i < d.charset.size(); ++i)
    EXPECT_EQ(back.charset.code_of(i), d.charset.code_of(i));
  ASSERT_EQ(back.samples.size(), d.samples.size());
  for (size_t i = 0; i < d.samples.size(); ++i) {
    EXPECT_EQ(back.samples[i].label, d.samples[i].label);
    EXPECT_EQ(back.samples[i].features, d.samples[i].features);
  }
}

TEST(DatasetIo, ReserializationIsByteIdentical) {
  Dataset d = small_dataset();
  std::vector<std::uint8_t> a = io::serialize_dataset(d);
  std::vector<std::uint8_t> b = io::serialize_dataset(io::deserialize_dataset(a));
  EXPECT_EQ(a, b);
}

TEST(DatasetIo, FileRoundTrip) {
  std::string path = temp_path("asciigen_io_test.gcds");
  Dataset d = small_dataset();
  io::save_dataset(d, path);
  Dataset back = io::load_dataset(path);
  EXPECT_EQ(io::serialize_dataset(back), io::serialize_dataset(d));
  std::remove(path.c_str());
}

TEST(DatasetIo, HeaderStartsWithMagicAndVersion) {
  std::vector<std::uint8_t> buf = io::serialize_dataset(small_dataset());
  ASSERT_GE(buf.size(), 8u);
  EXPECT_EQ(buf[0], 'G');
  EXPECT_EQ(buf[1], 'C');
  EXPECT_EQ(buf[2], 'D');
  EXPECT_EQ(buf[3], 'S');
  EXPECT_EQ(buf[4], 1);  // version 1, little endian
  EXPECT_EQ(buf[5], 0);
  EXPECT_EQ(buf[6], 0);
  EXPECT_EQ(buf[7], 0);
}

TEST(DatasetIo, CorruptBufferThrows) {
  std::vector<std::uint8_t> buf = io::serialize_dataset(small_dataset());
  buf[0] = 'X';
  EXPECT_THROW(io::deserialize_dataset(buf), std::runtime_error);
  buf = io::serialize_dataset(small_dataset());
  buf.resize(buf.size() - 3);
  EXPECT_THROW(io::deserialize_dataset(buf), std::runtime_error);
}

TEST(DatasetIo, CsvExport) {
  Dataset d;
  d.tile_size = 2;
  d.charset = Charset({32, 35});
  d.samples = {{{0.0f, 1.0f, 0.5f, 0.25f}, 1}};
  std::string csv = io::dataset_to_csv(d);
  EXPECT_EQ(csv, "label,f0,f1,f2,f3\n1,0,1,0.5,0.25\n");
}

TEST(ModelIo, RoundTripIsByteIdentical) {
  ModelArtifact m;
  m.kind = ModelKind::kKnn;
  m.tile_size = 10;
  m.feature_mode = FeatureMode::kHog;
  m.charset = Charset::printable_ascii();
  m.hyperparams = {{"k", 5.0}, {"train_acc", 0.987}};
  m.payload = {1, 2, 3, 254, 255, 0, 17};
  std::vector<std::uint8_t> a = io::serialize_model(m);
  ModelArtifact back = io::deserialize_model(a);
  EXPECT_EQ(back.kind, m.kind);
  EXPECT_EQ(back.tile_size, m.tile_size);
  EXPECT_EQ(back.feature_mode, m.feature_mode);
  EXPECT_EQ(back.payload, m.payload);
  EXPECT_EQ(back.hyper("k"), 5.0);
  EXPECT_EQ(io::serialize_model(back), a);
}

TEST(ModelIo, FileRoundTrip) {
  ModelArtifact m;
  m.kind = ModelKind::kAiss;
  m.tile_size = 8;
  m.feature_mode = FeatureMode::kLogPolar;
  m.charset = Charset({32, 46});
  m.payload = std::vector<std::uint8_t>(1000, 0xab);
  std::string path = temp_path("asciigen_io_test.gcma");
  io::save_model(m, path);
  EXPECT_EQ(io::serialize_model(io::load_model(path)), io::serialize_model(m));
  std::remove(path.c_str());
}

TEST(ImageIo, PngWriteReadRoundTrip) {
  GrayImage img(13, 7);
  for (int y = 0; y < 7; ++y)
    for (int x = 0; x < 13; ++x) img.at(x, y) = static_cast<std::uint8_t>((x * 19 + y * 41) % 256);
  std::string path = temp_path("asciigen_io_test.png");
  io::save_png_gray(img, path);
  GrayImage back = io::load_grayscale(path);
  ASSERT_EQ(back.width, img.width);
  ASSERT_EQ(back.height, img.height);
  EXPECT_EQ(back.pixels, img.pixels);
  std::remove(path.c_str());
}

TEST(ImageIo, EmbeddedJpegDecodes) {
  std::vector<std::uint8_t> data(kTestJpeg, kTestJpeg + sizeof(kTestJpeg));
  RgbImage img = io::decode_jpeg(data);
  ASSERT_EQ(img.width, 8);
  ASSERT_EQ(img.height, 8);
  // Lossy compression: allow a generous per-channel tolerance.
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) {
      int i = (y * 8 + x) * 3;
      EXPECT_NEAR(img.pixels[i + 0], x * 30, 32) << x << "," << y;
      EXPECT_NEAR(img.pixels[i + 1], y * 30, 32) << x << "," << y;
      EXPECT_NEAR(img.pixels[i + 2], 128, 32) << x << "," << y;
    }
}

TEST(ImageIo, LoadRgbSniffsFormat) {
  // Write the embedded JPEG with a .png extension; sniffing must still work.
  std::string path = temp_path("asciigen_io_sniff.png");
  io::write_file(path, std::vector<std::uint8_t>(kTestJpeg, kTestJpeg + sizeof(kTestJpeg)));
  RgbImage img = io::load_rgb(path);
  EXPECT_EQ(img.width, 8);
  EXPECT_EQ(img.height, 8);
  std::remove(path.c_str());
}

TEST(ImageIo, GarbageDataThrows) {
  std::string path = temp_path("asciigen_io_garbage.bin");
  io::write_file(path, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_THROW(io::load_rgb(path), std::runtime_error);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace asciigen
