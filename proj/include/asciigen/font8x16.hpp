// Copyright 2026 the asciigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Fixed 8x16 monospace bitmap font covering printable ASCII 32..126.
// Derived from DejaVu Sans Mono Bold (Bitstream Vera license); rasterized
// once and frozen here so glyph rendering never depends on system fonts.

#pragma once

#include <array>
#include <cstdint>

namespace asciigen::font {

inline constexpr int kGlyphWidth = 8;
inline constexpr int kGlyphHeight = 16;
inline constexpr int kFirstCode = 32;
inline constexpr int kLastCode = 126;

// One entry per code point, 16 row bytes each; bit 7 is the leftmost pixel.
inline constexpr std::array<std::array<std::uint8_t, 16>, 95> kGlyphRows = {{
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // ' '
    {{0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x00, 0x00, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00}},  // '!'
    {{0x33, 0x33, 0x33, 0x33, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '"'
    {{0x09, 0x19, 0x1b, 0x7f, 0x7f, 0x33, 0x36, 0xff, 0xff, 0x66, 0x64, 0x6c, 0x00, 0x00, 0x00, 0x00}},  // '#'
    {{0x08, 0x0c, 0x3f, 0x3f, 0x78, 0x7c, 0x3f, 0x0f, 0x0b, 0x6f, 0x7f, 0x3e, 0x0c, 0x08, 0x00, 0x00}},  // '$'
    {{0x70, 0xd8, 0xc8, 0xd8, 0x71, 0x06, 0x18, 0x43, 0x04, 0x04, 0x04, 0x03, 0x00, 0x00, 0x00, 0x00}},  // '%'
    {{0x1e, 0x3e, 0x32, 0x30, 0x38, 0x38, 0x7c, 0xee, 0xe7, 0xe7, 0x7f, 0x3f, 0x00, 0x00, 0x00, 0x00}},  // '&'
    {{0x0c, 0x0c, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // 'quote'
    {{0x06, 0x0e, 0x0c, 0x0c, 0x1c, 0x18, 0x18, 0x18, 0x18, 0x1c, 0x0c, 0x0c, 0x0e, 0x06, 0x00, 0x00}},  // '('
    {{0x18, 0x18, 0x0c, 0x0c, 0x0c, 0x0e, 0x0e, 0x0e, 0x0e, 0x0c, 0x0c, 0x1c, 0x18, 0x18, 0x00, 0x00}},  // ')'
    {{0x0c, 0x0c, 0x6d, 0x3e, 0x3e, 0x6d, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '*'
    {{0x00, 0x00, 0x00, 0x0c, 0x0c, 0x0c, 0xff, 0xff, 0x0c, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '+'
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x0c, 0x0c, 0x1c, 0x18, 0x18, 0x00, 0x00}},  // ','
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x3e, 0x3e, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '-'
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x1c, 0x1c, 0x1c, 0x00, 0x00, 0x00, 0x00}},  // '.'
    {{0x01, 0x03, 0x03, 0x06, 0x06, 0x0c, 0x0c, 0x18, 0x18, 0x30, 0x30, 0x20, 0x60, 0x00, 0x00, 0x00}},  // '/'
    {{0x1e, 0x3f, 0x73, 0x73, 0x63, 0x6f, 0x6f, 0x63, 0x73, 0x73, 0x3f, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // '0'
    {{0x1c, 0x3c, 0x2c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // '1'
    {{0x3e, 0x7f, 0x47, 0x03, 0x03, 0x07, 0x0e, 0x1c, 0x38, 0x70, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // '2'
    {{0x3e, 0x7f, 0x63, 0x03, 0x03, 0x1e, 0x1f, 0x03, 0x03, 0x43, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // '3'
    {{0x07, 0x0f, 0x0f, 0x1f, 0x37, 0x37, 0x67, 0x7f, 0x7f, 0x07, 0x07, 0x07, 0x00, 0x00, 0x00, 0x00}},  // '4'
    {{0x7f, 0x7f, 0x60, 0x60, 0x7e, 0x7f, 0x07, 0x03, 0x03, 0x47, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // '5'
    {{0x1e, 0x3f, 0x31, 0x70, 0x7e, 0x7f, 0x73, 0x73, 0x73, 0x73, 0x3f, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // '6'
    {{0x7f, 0x7f, 0x03, 0x07, 0x06, 0x06, 0x0e, 0x0c, 0x1c, 0x1c, 0x18, 0x38, 0x00, 0x00, 0x00, 0x00}},  // '7'
    {{0x1e, 0x3f, 0x73, 0x63, 0x73, 0x3e, 0x3f, 0x73, 0x63, 0x73, 0x7f, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // '8'
    {{0x3e, 0x3f, 0x73, 0x63, 0x63, 0x73, 0x7f, 0x3f, 0x03, 0x07, 0x3e, 0x3c, 0x00, 0x00, 0x00, 0x00}},  // '9'
    {{0x00, 0x00, 0x00, 0x00, 0x1c, 0x1c, 0x1c, 0x00, 0x00, 0x1c, 0x1c, 0x1c, 0x00, 0x00, 0x00, 0x00}},  // ':'
    {{0x00, 0x00, 0x00, 0x00, 0x1c, 0x1c, 0x1c, 0x00, 0x00, 0x1c, 0x1c, 0x1c, 0x18, 0x18, 0x00, 0x00}},  // ';'
    {{0x00, 0x00, 0x00, 0x01, 0x07, 0x3e, 0x70, 0x70, 0x3e, 0x07, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '<'
    {{0x00, 0x00, 0x00, 0x00, 0x7f, 0x7f, 0x00, 0x00, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '='
    {{0x00, 0x00, 0x00, 0x40, 0x78, 0x3e, 0x07, 0x07, 0x3f, 0x78, 0x40, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '>'
    {{0x1e, 0x3f, 0x23, 0x03, 0x07, 0x0e, 0x0c, 0x1c, 0x1c, 0x00, 0x1c, 0x1c, 0x00, 0x00, 0x00, 0x00}},  // '?'
    {{0x00, 0x1e, 0x3f, 0x71, 0xe1, 0xcf, 0xdf, 0xd9, 0xdf, 0xcf, 0x60, 0x71, 0x3f, 0x1f, 0x00, 0x00}},  // '@'
    {{0x1c, 0x1e, 0x1e, 0x3e, 0x36, 0x37, 0x33, 0x7f, 0x7f, 0x63, 0x61, 0xe1, 0x00, 0x00, 0x00, 0x00}},  // 'A'
    {{0x7e, 0x7f, 0x63, 0x63, 0x63, 0x7f, 0x7f, 0x63, 0x61, 0x63, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'B'
    {{0x0f, 0x3f, 0x38, 0x70, 0x70, 0x70, 0x70, 0x70, 0x70, 0x38, 0x3f, 0x0f, 0x00, 0x00, 0x00, 0x00}},  // 'C'
    {{0x7c, 0x7f, 0x67, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x67, 0x7f, 0x7c, 0x00, 0x00, 0x00, 0x00}},  // 'D'
    {{0x7f, 0x7f, 0x70, 0x70, 0x70, 0x7f, 0x7f, 0x70, 0x70, 0x70, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'E'
    {{0x7f, 0x7f, 0x70, 0x70, 0x70, 0x7f, 0x7f, 0x70, 0x70, 0x70, 0x70, 0x70, 0x00, 0x00, 0x00, 0x00}},  // 'F'
    {{0x1f, 0x3f, 0x38, 0x70, 0x70, 0x60, 0x67, 0x77, 0x71, 0x39, 0x3f, 0x1f, 0x00, 0x00, 0x00, 0x00}},  // 'G'
    {{0x63, 0x63, 0x63, 0x63, 0x63, 0x7f, 0x7f, 0x63, 0x63, 0x63, 0x63, 0x63, 0x00, 0x00, 0x00, 0x00}},  // 'H'
    {{0x7f, 0x7f, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'I'
    {{0x1f, 0x1f, 0x03, 0x03, 0x03, 0x03, 0x03, 0x03, 0x07, 0x47, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // 'J'
    {{0x63, 0x63, 0x67, 0x6e, 0x7c, 0x7c, 0x7e, 0x76, 0x67, 0x63, 0x63, 0x61, 0x00, 0x00, 0x00, 0x00}},  // 'K'
    {{0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x3f, 0x3f, 0x00, 0x00, 0x00, 0x00}},  // 'L'
    {{0x73, 0x73, 0x77, 0x77, 0x7f, 0x7d, 0x7d, 0x6d, 0x61, 0x61, 0x61, 0x61, 0x00, 0x00, 0x00, 0x00}},  // 'M'
    {{0x71, 0x71, 0x71, 0x79, 0x79, 0x6d, 0x6d, 0x6f, 0x67, 0x67, 0x63, 0x63, 0x00, 0x00, 0x00, 0x00}},  // 'N'
    {{0x1e, 0x3f, 0x73, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x73, 0x3f, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // 'O'
    {{0x7e, 0x7f, 0x73, 0x73, 0x73, 0x7f, 0x7e, 0x70, 0x70, 0x70, 0x70, 0x70, 0x00, 0x00, 0x00, 0x00}},  // 'P'
    {{0x1e, 0x3f, 0x73, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x73, 0x3f, 0x1e, 0x07, 0x03, 0x00, 0x00}},  // 'Q'
    {{0x7e, 0x7f, 0x63, 0x63, 0x63, 0x7f, 0x7e, 0x67, 0x67, 0x63, 0x63, 0x61, 0x00, 0x00, 0x00, 0x00}},  // 'R'
    {{0x1e, 0x3f, 0x71, 0x60, 0x78, 0x3e, 0x1f, 0x07, 0x03, 0x43, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // 'S'
    {{0x7f, 0x7f, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00}},  // 'T'
    {{0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x63, 0x73, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // 'U'
    {{0xe1, 0x63, 0x63, 0x73, 0x73, 0x33, 0x37, 0x37, 0x3e, 0x1e, 0x1e, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // 'V'
    {{0xc1, 0xc1, 0xc1, 0xcd, 0xed, 0x7d, 0x7f, 0x7f, 0x77, 0x73, 0x73, 0x73, 0x00, 0x00, 0x00, 0x00}},  // 'W'
    {{0x61, 0x73, 0x37, 0x3e, 0x1e, 0x1c, 0x1c, 0x1e, 0x3f, 0x33, 0x73, 0xe1, 0x00, 0x00, 0x00, 0x00}},  // 'X'
    {{0xe1, 0x63, 0x73, 0x37, 0x3e, 0x1e, 0x1c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x00, 0x00, 0x00, 0x00}},  // 'Y'
    {{0x7f, 0x7f, 0x03, 0x07, 0x0e, 0x0e, 0x1c, 0x38, 0x38, 0x70, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'Z'
    {{0x1e, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x1e, 0x00, 0x00}},  // '['
    {{0x60, 0x20, 0x30, 0x30, 0x18, 0x18, 0x0c, 0x0c, 0x06, 0x06, 0x03, 0x03, 0x01, 0x00, 0x00, 0x00}},  // 'backslash'
    {{0x3c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x3c, 0x00, 0x00}},  // ']'
    {{0x1c, 0x1e, 0x37, 0x61, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '^'
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xff}},  // '_'
    {{0x18, 0x0c, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '`'
    {{0x00, 0x00, 0x00, 0x3e, 0x3f, 0x23, 0x3f, 0x7f, 0x73, 0x73, 0x7f, 0x3f, 0x00, 0x00, 0x00, 0x00}},  // 'a'
    {{0x70, 0x70, 0x70, 0x7e, 0x7f, 0x73, 0x73, 0x71, 0x73, 0x73, 0x7f, 0x7e, 0x00, 0x00, 0x00, 0x00}},  // 'b'
    {{0x00, 0x00, 0x00, 0x1f, 0x3f, 0x39, 0x70, 0x70, 0x70, 0x39, 0x3f, 0x1f, 0x00, 0x00, 0x00, 0x00}},  // 'c'
    {{0x03, 0x03, 0x03, 0x3b, 0x7f, 0x77, 0x63, 0x63, 0x63, 0x77, 0x7f, 0x3b, 0x00, 0x00, 0x00, 0x00}},  // 'd'
    {{0x00, 0x00, 0x00, 0x1e, 0x3f, 0x73, 0x7f, 0x7f, 0x60, 0x71, 0x3f, 0x1f, 0x00, 0x00, 0x00, 0x00}},  // 'e'
    {{0x0f, 0x0f, 0x1c, 0x7f, 0x7f, 0x1c, 0x1c, 0x1c, 0x1c, 0x1c, 0x1c, 0x1c, 0x00, 0x00, 0x00, 0x00}},  // 'f'
    {{0x00, 0x00, 0x00, 0x3f, 0x7f, 0x73, 0x63, 0x63, 0x63, 0x73, 0x7f, 0x3f, 0x23, 0x3f, 0x3e, 0x00}},  // 'g'
    {{0x70, 0x70, 0x70, 0x7e, 0x7f, 0x73, 0x73, 0x73, 0x73, 0x73, 0x73, 0x73, 0x00, 0x00, 0x00, 0x00}},  // 'h'
    {{0x0c, 0x0c, 0x00, 0x3c, 0x3c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'i'
    {{0x0e, 0x0e, 0x00, 0x3e, 0x3e, 0x0e, 0x0e, 0x0e, 0x0e, 0x0e, 0x0e, 0x0e, 0x0e, 0x7c, 0x7c, 0x00}},  // 'j'
    {{0x70, 0x70, 0x70, 0x73, 0x77, 0x7e, 0x7c, 0x7e, 0x76, 0x77, 0x73, 0x73, 0x00, 0x00, 0x00, 0x00}},  // 'k'
    {{0x78, 0x78, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x18, 0x1c, 0x1f, 0x0f, 0x00, 0x00, 0x00, 0x00}},  // 'l'
    {{0x00, 0x00, 0x00, 0x7b, 0x7f, 0x6d, 0x6d, 0x6d, 0x6d, 0x6d, 0x6d, 0x6d, 0x00, 0x00, 0x00, 0x00}},  // 'm'
    {{0x00, 0x00, 0x00, 0x7e, 0x7f, 0x73, 0x73, 0x73, 0x73, 0x73, 0x73, 0x73, 0x00, 0x00, 0x00, 0x00}},  // 'n'
    {{0x00, 0x00, 0x00, 0x1e, 0x3f, 0x73, 0x63, 0x63, 0x63, 0x73, 0x3f, 0x1e, 0x00, 0x00, 0x00, 0x00}},  // 'o'
    {{0x00, 0x00, 0x00, 0x7e, 0x7f, 0x73, 0x73, 0x71, 0x73, 0x73, 0x7f, 0x7e, 0x70, 0x70, 0x70, 0x00}},  // 'p'
    {{0x00, 0x00, 0x00, 0x3b, 0x7f, 0x77, 0x63, 0x63, 0x63, 0x77, 0x7f, 0x3b, 0x03, 0x03, 0x03, 0x00}},  // 'q'
    {{0x00, 0x00, 0x00, 0x3f, 0x3f, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x00, 0x00, 0x00, 0x00}},  // 'r'
    {{0x00, 0x00, 0x00, 0x1e, 0x3f, 0x71, 0x30, 0x3e, 0x03, 0x63, 0x7f, 0x3e, 0x00, 0x00, 0x00, 0x00}},  // 's'
    {{0x00, 0x18, 0x18, 0x7f, 0x7f, 0x18, 0x18, 0x18, 0x18, 0x1c, 0x1f, 0x0f, 0x00, 0x00, 0x00, 0x00}},  // 't'
    {{0x00, 0x00, 0x00, 0x73, 0x73, 0x73, 0x73, 0x73, 0x73, 0x77, 0x3f, 0x3b, 0x00, 0x00, 0x00, 0x00}},  // 'u'
    {{0x00, 0x00, 0x00, 0x63, 0x63, 0x73, 0x33, 0x37, 0x36, 0x1e, 0x1e, 0x1c, 0x00, 0x00, 0x00, 0x00}},  // 'v'
    {{0x00, 0x00, 0x00, 0xc0, 0xc1, 0xcd, 0x6d, 0x7d, 0x7f, 0x77, 0x77, 0x73, 0x00, 0x00, 0x00, 0x00}},  // 'w'
    {{0x00, 0x00, 0x00, 0x73, 0x37, 0x3e, 0x1e, 0x1c, 0x1e, 0x3f, 0x73, 0x63, 0x00, 0x00, 0x00, 0x00}},  // 'x'
    {{0x00, 0x00, 0x00, 0x61, 0x63, 0x73, 0x33, 0x37, 0x1e, 0x1e, 0x1c, 0x0c, 0x1c, 0x78, 0x70, 0x00}},  // 'y'
    {{0x00, 0x00, 0x00, 0x7f, 0x7f, 0x07, 0x0e, 0x0c, 0x18, 0x30, 0x7f, 0x7f, 0x00, 0x00, 0x00, 0x00}},  // 'z'
    {{0x0f, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x1c, 0x78, 0x1c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0f, 0x00}},  // '{'
    {{0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c}},  // '|'
    {{0x78, 0x1c, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x07, 0x0c, 0x0c, 0x0c, 0x0c, 0x0c, 0x1c, 0x78, 0x00}},  // '}'
    {{0x00, 0x00, 0x00, 0x00, 0x00, 0x78, 0x7f, 0x07, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00}},  // '~'
}};

}  // namespace asciigen::font
