// Frozen expected values used across the unit and acceptance suites.
#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace goldens {

// Dense matrix of Z (x) I (x) Y: one +-i entry per row, paired across the
// diagonal, signs flipping with the Z factor.
// clang-format off
inline const std::array<std::array<std::complex<double>, 8>, 8> kZiyMatrix = {{
  {{{0,0},{0,-1},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0}}},
  {{{0,1},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0}}},
  {{{0,0},{0,0},{0,0},{0,-1},{0,0},{0,0},{0,0},{0,0}}},
  {{{0,0},{0,0},{0,1},{0,0},{0,0},{0,0},{0,0},{0,0}}},
  {{{0,0},{0,0},{0,0},{0,0},{0,0},{0,1},{0,0},{0,0}}},
  {{{0,0},{0,0},{0,0},{0,0},{0,-1},{0,0},{0,0},{0,0}}},
  {{{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,1}}},
  {{{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,-1},{0,0}}},
}};
// clang-format on

struct TableRow {
  std::string form;
  std::vector<int> diagonal;
  std::vector<int> real;
  std::vector<int> imaginary;
};

// Which su(8) generators live in which three-factor form.
inline const std::vector<TableRow> kClassificationM3 = {
    {"D-D-D", {1, 2, 3, 4, 5, 6, 7}, {}, {}},
    {"D-D-OD", {}, {8, 21, 30, 35}, {36, 49, 58, 63}},
    {"D-OD-D", {}, {9, 16, 31, 34}, {37, 44, 59, 62}},
    {"D-OD-OD", {}, {10, 15, 32, 33}, {38, 43, 60, 61}},
    {"OD-D-D", {}, {11, 18, 24, 29}, {39, 46, 52, 57}},
    {"OD-D-OD", {}, {12, 17, 25, 28}, {40, 45, 53, 56}},
    {"OD-OD-D", {}, {13, 20, 22, 27}, {41, 48, 50, 55}},
    {"OD-OD-OD", {}, {14, 19, 23, 26}, {42, 47, 51, 54}},
};

// Pauli expansions of the generators with coefficients exactly 1/4.
inline const std::map<int, std::map<std::string, double>> kGeneratorExpansions =
    {
        {1, {{"IIZ", 0.25}, {"IZI", 0.25}, {"ZII", 0.25}, {"ZZZ", 0.25}}},
        {8, {{"IIX", 0.25}, {"IZX", 0.25}, {"ZIX", 0.25}, {"ZZX", 0.25}}},
        {21, {{"IIX", 0.25}, {"IZX", -0.25}, {"ZIX", 0.25}, {"ZZX", -0.25}}},
        {30, {{"IIX", 0.25}, {"IZX", 0.25}, {"ZIX", -0.25}, {"ZZX", -0.25}}},
        {35, {{"IIX", 0.25}, {"IZX", -0.25}, {"ZIX", -0.25}, {"ZZX", 0.25}}},
};

// Generator expansions of the strings coupling the (1,2),(3,4),(5,6),(7,8)
// symmetric generators, coefficients exactly +-1.
inline const std::map<std::string, std::map<int, double>> kStringExpansions = {
    {"IIX", {{8, 1}, {21, 1}, {30, 1}, {35, 1}}},
    {"IZX", {{8, 1}, {21, -1}, {30, 1}, {35, -1}}},
    {"ZIX", {{8, 1}, {21, 1}, {30, -1}, {35, -1}}},
    {"ZZX", {{8, 1}, {21, -1}, {30, -1}, {35, 1}}},
};

// The 4x4 change-of-basis block of the D-D-OD real sector: rows IIX, IZX,
// ZIX, ZZX; columns X8, X21, X30, X35. Symmetric, squares to 4I.
inline const std::array<std::array<int, 4>, 4> kSectorBlockDDODReal = {{
    {{1, 1, 1, 1}},
    {{1, -1, 1, -1}},
    {{1, 1, -1, -1}},
    {{1, -1, -1, 1}},
}};

}  // namespace goldens
