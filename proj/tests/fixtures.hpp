#pragma once

// Golden data used across the test suites: the 8x8 worked example (backbone,
// both substituted matrices, the three incidence-matrix factors) and the
// full 96-row parameter table.

#include <array>
#include <vector>

#include "qomat/latin.hpp"
#include "qomat/oracle.hpp"
#include "qomat/orthogen.hpp"

namespace fixtures {

using Rows8 = std::array<std::array<int, 8>, 8>;

inline constexpr Rows8 kP = {{
    {0, 1, 0, 1, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 1, 1, 1},
    {0, 0, 1, 0, 0, 1, 1, 0},
    {0, 0, 1, 0, 0, 0, 1, 1},
    {1, 1, 0, 0, 1, 0, 0, 0},
    {1, 0, 0, 1, 1, 0, 0, 0},
    {1, 1, 0, 1, 0, 0, 0, 0},
}};

inline constexpr Rows8 kP713 = {{
    {7, 13, 7, 13, 13, 7, 7, 7},
    {7, 7, 13, 7, 7, 13, 7, 13},
    {7, 7, 7, 7, 7, 13, 13, 13},
    {7, 7, 13, 7, 7, 13, 13, 7},
    {7, 7, 13, 7, 7, 7, 13, 13},
    {13, 13, 7, 7, 13, 7, 7, 7},
    {13, 7, 7, 13, 13, 7, 7, 7},
    {13, 13, 7, 13, 7, 7, 7, 7},
}};

inline constexpr Rows8 kP415 = {{
    {4, 4, 4, 4, 4, 15, 15, 15},
    {15, 4, 4, 4, 4, 15, 4, 15},
    {4, 15, 4, 15, 15, 4, 4, 4},
    {15, 4, 4, 4, 4, 4, 15, 15},
    {15, 4, 4, 4, 4, 15, 15, 4},
    {4, 15, 15, 15, 4, 4, 4, 4},
    {4, 4, 15, 15, 15, 4, 4, 4},
    {4, 15, 15, 4, 15, 4, 4, 4},
}};

inline constexpr std::array<int, 8> kL1R0 = {6, 5, 4, 3, 1, 7, 0, 2};
inline constexpr std::array<int, 8> kL2R0 = {3, 6, 1, 7, 4, 2, 0, 5};
inline constexpr std::array<int, 8> kL3R0 = {4, 2, 5, 6, 3, 1, 0, 7};
inline constexpr int kLRows = 3;
inline constexpr int kLRot = 2;

inline constexpr Rows8 kM1 = {{
    {0, 0, 1, 0, 1, 0, 1, 0},
    {1, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 1, 0, 1},
    {0, 1, 0, 1, 0, 0, 0, 1},
    {1, 0, 1, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 1, 0, 1},
    {1, 0, 0, 0, 1, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 0},
}};

inline constexpr Rows8 kM2 = {{
    {0, 0, 1, 0, 1, 0, 1, 0},
    {1, 0, 1, 0, 0, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 0},
    {1, 0, 0, 0, 1, 0, 1, 0},
    {1, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 1, 0, 1},
    {0, 1, 0, 0, 0, 1, 0, 1},
    {0, 1, 0, 1, 0, 0, 0, 1},
}};

inline constexpr Rows8 kM3 = {{
    {0, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 1, 0, 1, 0, 0},
    {0, 1, 0, 0, 0, 1, 0, 1},
    {1, 0, 1, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 1, 0},
    {1, 0, 1, 0, 0, 0, 1, 0},
    {0, 1, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 1, 0, 1, 0, 1},
}};

// The full parameter table for even n in [8, 256]: 96 rows.
inline const std::vector<qomat::ParamTriplet> kTable = {
    {8, 3, 2},     {12, 3, 3},    {16, 3, 4},    {18, 5, 3},    {20, 3, 5},    {24, 3, 6},
    {28, 3, 7},    {30, 5, 5},    {32, 3, 8},    {36, 3, 9},    {40, 3, 10},   {42, 5, 7},
    {44, 3, 11},   {48, 3, 12},   {50, 9, 5},    {52, 3, 13},   {54, 5, 9},    {56, 3, 14},
    {60, 3, 15},   {64, 3, 16},   {66, 5, 11},   {68, 3, 17},   {70, 9, 7},    {72, 3, 18},
    {76, 3, 19},   {78, 5, 13},   {80, 3, 20},   {84, 3, 21},   {88, 3, 22},   {90, 5, 15},
    {92, 3, 23},   {96, 3, 24},   {98, 13, 7},   {100, 3, 25},  {102, 5, 17},  {104, 3, 26},
    {108, 3, 27},  {110, 9, 11},  {112, 3, 28},  {114, 5, 19},  {116, 3, 29},  {120, 3, 30},
    {124, 3, 31},  {126, 5, 21},  {128, 3, 32},  {130, 9, 13},  {132, 3, 33},  {136, 3, 34},
    {138, 5, 23},  {140, 3, 35},  {144, 3, 36},  {148, 3, 37},  {150, 5, 25},  {152, 3, 38},
    {154, 13, 11}, {156, 3, 39},  {160, 3, 40},  {162, 5, 27},  {164, 3, 41},  {168, 3, 42},
    {170, 9, 17},  {172, 3, 43},  {174, 5, 29},  {176, 3, 44},  {180, 3, 45},  {182, 13, 13},
    {184, 3, 46},  {186, 5, 31},  {188, 3, 47},  {190, 9, 19},  {192, 3, 48},  {196, 3, 49},
    {198, 5, 33},  {200, 3, 50},  {204, 3, 51},  {208, 3, 52},  {210, 5, 35},  {212, 3, 53},
    {216, 3, 54},  {220, 3, 55},  {222, 5, 37},  {224, 3, 56},  {228, 3, 57},  {230, 9, 23},
    {232, 3, 58},  {234, 5, 39},  {236, 3, 59},  {238, 13, 17}, {240, 3, 60},  {242, 21, 11},
    {244, 3, 61},  {246, 5, 41},  {248, 3, 62},  {250, 9, 25},  {252, 3, 63},  {256, 3, 64},
};

inline qomat::BinaryMatrix dense_from(const Rows8& rows) {
    qomat::BinaryMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.set(i, j, rows[i][j] != 0);
    return m;
}

inline qomat::SupportSetMatrix supports_from(const Rows8& rows) {
    qomat::SupportSetMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (rows[i][j] != 0) m.set(i, j);
    return m;
}

inline qomat::FieldMatrix field_from(const Rows8& rows, const qomat::Field& field) {
    qomat::FieldMatrix m(8, field);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.set(i, j, static_cast<qomat::Elem>(rows[i][j]));
    return m;
}

inline std::vector<int> to_vec(const std::array<int, 8>& a) { return {a.begin(), a.end()}; }

}  // namespace fixtures
