#include "qomat/document.hpp"

#include <json.hpp>

#include <limits>

namespace qomat {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* key, long long lo, long long hi) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    }
    const auto v = j[key].get<long long>();
    if (v < lo || v > hi) {
        throw ParseError(std::string("field \"") + key + "\" out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

std::string kind_name(MatrixDocument::Kind kind) {
    return kind == MatrixDocument::Kind::BinarySupports ? "binary-supports" : "quasi-binary";
}

MatrixDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document root must be an object");

    static const char* allowed[] = {"kind", "n", "columns", "a", "b", "field_m", "field_poly", "seed"};
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ParseError("unknown field \"" + item.key() + "\"");
    }

    MatrixDocument doc;
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "binary-supports") {
        doc.kind = MatrixDocument::Kind::BinarySupports;
    } else if (kind == "quasi-binary") {
        doc.kind = MatrixDocument::Kind::QuasiBinary;
    } else {
        throw ParseError("unknown kind \"" + kind + "\"");
    }

    doc.n = require_int(j, "n", 1, 1 << 20);

    if (!j.contains("columns") || !j["columns"].is_array()) throw ParseError("missing \"columns\"");
    const auto& cols = j["columns"];
    if (static_cast<int>(cols.size()) != doc.n) {
        throw ParseError("\"columns\" must hold exactly n = " + std::to_string(doc.n) + " entries");
    }
    doc.columns.reserve(cols.size());
    for (const auto& col : cols) {
        if (!col.is_array()) throw ParseError("each column must be an array of row indices");
        std::vector<int> support;
        support.reserve(col.size());
        int prev = -1;
        for (const auto& entry : col) {
            if (!entry.is_number_integer()) throw ParseError("row indices must be integers");
            const auto v = entry.get<long long>();
            if (v < 0 || v >= doc.n) throw ParseError("row index out of range");
            if (static_cast<int>(v) <= prev) {
                throw ParseError("column supports must be strictly ascending");
            }
            prev = static_cast<int>(v);
            support.push_back(prev);
        }
        doc.columns.push_back(std::move(support));
    }

    const bool quasi = doc.kind == MatrixDocument::Kind::QuasiBinary;
    for (const char* key : {"a", "b", "field_m", "field_poly"}) {
        if (quasi != j.contains(key)) {
            throw ParseError(std::string(quasi ? "quasi-binary document requires \""
                                               : "binary-supports document forbids \"") +
                             key + "\"");
        }
    }
    if (quasi) {
        doc.a = require_int(j, "a", 0, std::numeric_limits<int>::max());
        doc.b = require_int(j, "b", 0, std::numeric_limits<int>::max());
        doc.field_m = require_int(j, "field_m", 2, 16);
        doc.field_poly =
            static_cast<std::uint32_t>(require_int(j, "field_poly", 1, (1 << 17) - 1));
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            throw ParseError("\"seed\" must be an unsigned integer");
        }
        if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0) {
            throw ParseError("\"seed\" must be nonnegative");
        }
        doc.seed = j["seed"].get<std::uint64_t>();
    }
    return doc;
}

std::string emit_document(const MatrixDocument& doc) {
    json j;
    j["kind"] = kind_name(doc.kind);
    j["n"] = doc.n;
    json cols = json::array();
    for (const auto& support : doc.columns) cols.push_back(support);
    j["columns"] = std::move(cols);
    if (doc.kind == MatrixDocument::Kind::QuasiBinary) {
        j["a"] = doc.a.value();
        j["b"] = doc.b.value();
        j["field_m"] = doc.field_m.value();
        j["field_poly"] = doc.field_poly.value();
    }
    if (doc.seed) j["seed"] = *doc.seed;
    return j.dump() + "\n";
}

MatrixDocument make_document(const SupportSetMatrix& s, std::optional<std::uint64_t> seed) {
    MatrixDocument doc;
    doc.kind = MatrixDocument::Kind::BinarySupports;
    doc.n = s.dim();
    doc.columns.reserve(static_cast<std::size_t>(doc.n));
    for (int j = 0; j < doc.n; ++j) doc.columns.push_back(s.column_support(j));
    doc.seed = seed;
    return doc;
}

MatrixDocument make_document(const QuasiBinaryMatrix& q, std::optional<std::uint64_t> seed) {
    MatrixDocument doc = make_document(q.backbone(), seed);
    doc.kind = MatrixDocument::Kind::QuasiBinary;
    doc.a = q.a();
    doc.b = q.b();
    doc.field_m = static_cast<int>(q.field().degree());
    doc.field_poly = q.field().modulus();
    return doc;
}

SupportSetMatrix supports_of(const MatrixDocument& doc) {
    SupportSetMatrix s(doc.n);
    for (int j = 0; j < doc.n; ++j)
        for (int i : doc.columns[static_cast<std::size_t>(j)]) s.set(i, j);
    return s;
}

QuasiBinaryMatrix quasi_of(const MatrixDocument& doc) {
    if (doc.kind != MatrixDocument::Kind::QuasiBinary) {
        throw ParseError("expected a quasi-binary document");
    }
    const Field field(static_cast<unsigned>(doc.field_m.value()), doc.field_poly.value());
    if (*doc.a >= static_cast<int>(field.order()) || *doc.b >= static_cast<int>(field.order())) {
        throw BadPair("substitution values must lie in the field");
    }
    return QuasiBinaryMatrix(supports_of(doc), static_cast<Elem>(*doc.a),
                             static_cast<Elem>(*doc.b), field);
}

}  // namespace qomat
