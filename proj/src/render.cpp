#include "qomat/render.hpp"

#include <array>

namespace qomat {

namespace {

struct Rgb {
    unsigned char r, g, b;
};

constexpr Rgb kRedA{200, 30, 30};
constexpr Rgb kBlackB{20, 20, 20};
constexpr Rgb kBlueC{40, 80, 200};
constexpr Rgb kYellowD{230, 200, 40};

}  // namespace

std::string render_pbm(const SupportSetMatrix& s) {
    const int n = s.dim();
    std::string out = "P1\n" + std::to_string(n) + " " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out += s.get(i, j) ? '1' : '0';
            out += (j + 1 == n) ? '\n' : ' ';
        }
    }
    return out;
}

std::string render_ppm(const SupportSetMatrix& s, Palette palette) {
    const int n = s.dim();
    const Rgb zero = palette == Palette::Forward ? kRedA : kBlueC;
    const Rgb one = palette == Palette::Forward ? kBlackB : kYellowD;
    std::string out = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(n) * n * 3);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rgb px = s.get(i, j) ? one : zero;
            out += static_cast<char>(px.r);
            out += static_cast<char>(px.g);
            out += static_cast<char>(px.b);
        }
    }
    return out;
}

std::string render_document(const MatrixDocument& doc, Palette palette) {
    if (doc.kind == MatrixDocument::Kind::BinarySupports) {
        return render_pbm(supports_of(doc));
    }
    const QuasiBinaryMatrix q = quasi_of(doc);  // validates field and pair
    return render_ppm(q.backbone(), palette);
}

}  // namespace qomat
