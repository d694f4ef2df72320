// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0

#include "asciigen/preprocess.hpp"

#include <gtest/gtest.h>

#include "asciigen/rng.hpp"

namespace asciigen {
namespace {

RgbImage solid_rgb(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  RgbImage img;
  img.width = w;
  img.height = h;
  img.pixels.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < img.pixels.size(); i += 3) {
    img.pixels[i] = r;
    img.pixels[i + 1] = g;
    img.pixels[i + 2] = b;
  }
  return img;
}

TEST(ToGrayscale, WhiteAndBlackFixedPoints) {
  EXPECT_EQ(to_grayscale(solid_rgb(2, 2, 255, 255, 255)).pixels[0], 255);
  EXPECT_EQ(to_grayscale(solid_rgb(2, 2, 0, 0, 0)).pixels[0], 0);
}

TEST(ToGrayscale, PureRedUsesBt601Weight) {
  // 0.299 * 255 = 76.245 -> 76
  EXPECT_EQ(to_grayscale(solid_rgb(1, 1, 255, 0, 0)).pixels[0], 76);
}

TEST(ToGrayscale, EmptyImageThrows) {
  RgbImage img;
  EXPECT_THROW(to_grayscale(img), std::invalid_argument);
}

TEST(ToGrayscale, GrayInputInvariantUnderChannelPermutation) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint8_t v = static_cast<std::uint8_t>(rng.below(256));
    auto a = to_grayscale(solid_rgb(1, 1, v, v, v));
    EXPECT_EQ(a.pixels[0], v);
  }
}

TEST(Rescale, UnitScaleHalvesHeightOnly) {
  GrayImage img(100, 100, 42);
  GrayImage out = rescale(img, 1.0);
  EXPECT_EQ(out.width, 100);
  EXPECT_EQ(out.height, 50);
}

TEST(Rescale, HalfScale) {
  GrayImage out = rescale(GrayImage(100, 100), 0.5);
  EXPECT_EQ(out.width, 50);
  EXPECT_EQ(out.height, 25);
}

TEST(Rescale, UniformImageStaysUniform) {
  GrayImage img(33, 21, 137);
  for (double scale : {0.4, 1.0, 2.3}) {
    GrayImage out = rescale(img, scale);
    for (std::uint8_t p : out.pixels) EXPECT_EQ(p, 137);
  }
}

TEST(Rescale, DegenerateScaleThrows) {
  GrayImage img(4, 4);
  EXPECT_THROW(rescale(img, 0.01), std::invalid_argument);
  EXPECT_THROW(rescale(img, -1.0), std::invalid_argument);
}

TEST(Binarize, PureBackgroundAndPureStroke) {
  GrayImage white(3, 3, 255), black(3, 3, 0);
  for (double v : binarize_normalize(white, 128, false).values) EXPECT_EQ(v, 0.0);
  for (double v : binarize_normalize(black, 128, false).values) EXPECT_EQ(v, 1.0);
}

TEST(Binarize, CheckerboardMapsPerPixel) {
  GrayImage img(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) img.at(x, y) = (x + y) % 2 ? 255 : 0;
  NormGrid g = binarize_normalize(img, 128, false);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) EXPECT_EQ(g.at(x, y), (x + y) % 2 ? 0.0 : 1.0);
}

TEST(Binarize, InvertFlagFlipsPolarity) {
  GrayImage white(2, 2, 255);
  for (double v : binarize_normalize(white, 128, true).values) EXPECT_EQ(v, 1.0);
}

TEST(AutoInvert, DetectsLightOnDark) {
  EXPECT_TRUE(auto_invert(GrayImage(4, 4, 10)));
  EXPECT_FALSE(auto_invert(GrayImage(4, 4, 240)));
}

TEST(Tiling, ExactDivision) {
  NormGrid g{30, 20, std::vector<double>(600, 0.0)};
  TileGrid tg = tile(g, 10);
  EXPECT_EQ(tg.rows, 2);
  EXPECT_EQ(tg.cols, 3);
}

TEST(Tiling, PartialTilesArePaddedWithBackground) {
  NormGrid g{25, 15, std::vector<double>(375, 1.0)};
  TileGrid tg = tile(g, 10);
  EXPECT_EQ(tg.rows, 2);
  EXPECT_EQ(tg.cols, 3);
  const Tile& corner = tg.at(1, 2);  // bottom-right: only 5x5 covered
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x)
      EXPECT_EQ(corner.at(x, y), (x < 5 && y < 5) ? 1.0 : 0.0);
}

TEST(Tiling, SingleTileEqualsImage) {
  NormGrid g{10, 10, {}};
  g.values.resize(100);
  for (int i = 0; i < 100; ++i) g.values[i] = i / 100.0;
  TileGrid tg = tile(g, 10);
  ASSERT_EQ(tg.tiles.size(), 1u);
  EXPECT_EQ(tg.tiles[0].values, g.values);
}

TEST(Tiling, TileUntileIdentity) {
  Rng rng(7);
  for (auto [w, h, n] : {std::tuple{25, 17, 10}, {30, 20, 5}, {9, 31, 4}}) {
    NormGrid g{w, h, {}};
    g.values.resize(static_cast<std::size_t>(w) * h);
    for (double& v : g.values) v = rng.below(2) ? 1.0 : 0.0;
    NormGrid back = untile(tile(g, n), w, h);
    EXPECT_EQ(back.values, g.values);
  }
}

TEST(Tiling, RejectsTinyTileSize) {
  NormGrid g{4, 4, std::vector<double>(16, 0.0)};
  EXPECT_THROW(tile(g, 1), std::invalid_argument);
}

}  // namespace
}  // namespace asciigen
