#pragma once

#include <string>

#include "qomat/document.hpp"
#include "qomat/latin.hpp"

namespace qomat {

// Forward colors a as red and b as black; Inverse colors c as blue and d as
// yellow. Binary documents always render as PBM regardless of palette.
enum class Palette { Forward, Inverse };

// ASCII PBM (P1), one pixel per entry, row-major; ones are black.
std::string render_pbm(const SupportSetMatrix& s);

// Binary PPM (P6), one pixel per entry, row-major.
std::string render_ppm(const SupportSetMatrix& s, Palette palette);

std::string render_document(const MatrixDocument& doc, Palette palette);

}  // namespace qomat
