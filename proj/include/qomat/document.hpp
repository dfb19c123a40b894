#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qomat/latin.hpp"
#include "qomat/quasi.hpp"

namespace qomat {

// On-disk form of a matrix. Column supports are sorted ascending; emit is
// canonical, so equal documents serialize to identical bytes.
struct MatrixDocument {
    enum class Kind { BinarySupports, QuasiBinary };

    Kind kind = Kind::BinarySupports;
    int n = 0;
    std::vector<std::vector<int>> columns;
    std::optional<int> a;
    std::optional<int> b;
    std::optional<int> field_m;
    std::optional<std::uint32_t> field_poly;
    std::optional<std::uint64_t> seed;

    bool operator==(const MatrixDocument&) const = default;
};

std::string kind_name(MatrixDocument::Kind kind);

// Throws ParseError on malformed JSON or schema violations.
MatrixDocument parse_document(std::string_view text);

// Canonical JSON bytes (sorted keys, compact, trailing newline).
std::string emit_document(const MatrixDocument& doc);

MatrixDocument make_document(const SupportSetMatrix& s, std::optional<std::uint64_t> seed = {});
MatrixDocument make_document(const QuasiBinaryMatrix& q, std::optional<std::uint64_t> seed = {});

SupportSetMatrix supports_of(const MatrixDocument& doc);

// Requires a quasi-binary document; propagates field and pair validation
// errors (DegreeMismatch, ReduciblePolynomial, BadPair).
QuasiBinaryMatrix quasi_of(const MatrixDocument& doc);

}  // namespace qomat
