#include "qomat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "qomat/bench.hpp"
#include "qomat/document.hpp"
#include "qomat/orthogen.hpp"
#include "qomat/quasi.hpp"
#include "qomat/render.hpp"

namespace qomat {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& payload, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot write \"" + path + "\"");
    file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

std::uint32_t parse_poly(const std::string& text) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used, 0);  // accepts 0x19 and 25
    } catch (const std::exception&) {
        throw ParseError("cannot parse polynomial \"" + text + "\"");
    }
    if (used != text.size() || value > 0x1ffff) {
        throw ParseError("cannot parse polynomial \"" + text + "\"");
    }
    return static_cast<std::uint32_t>(value);
}

std::string dense_text(const MatrixDocument& doc) {
    const SupportSetMatrix s = supports_of(doc);
    const bool quasi = doc.kind == MatrixDocument::Kind::QuasiBinary;
    const int zero = quasi ? *doc.a : 0;
    const int one = quasi ? *doc.b : 1;
    std::string out;
    for (int i = 0; i < doc.n; ++i) {
        for (int j = 0; j < doc.n; ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(s.get(i, j) ? one : zero);
        }
        out += '\n';
    }
    return out;
}

struct GenOptions {
    int n = 0;
    std::uint64_t seed = 0;
    int iterations = 6;
    std::optional<int> a;
    std::optional<int> b;
    std::optional<int> m;
    std::string poly;
    std::string format = "json";
    std::string output;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
    const int given = (opt.a ? 1 : 0) + (opt.b ? 1 : 0) + (opt.m ? 1 : 0) + (!opt.poly.empty() ? 1 : 0);
    if (given != 0 && given != 4) {
        throw ParseError("--a, --b, --m and --poly must be given together");
    }
    GeneratorConfig cfg;
    cfg.n = opt.n;
    cfg.seed = opt.seed;
    cfg.iterations = opt.iterations;
    const SupportSetMatrix p = random_orthogonal_binary_matrix(cfg);

    MatrixDocument doc;
    if (given == 4) {
        const Field field(static_cast<unsigned>(*opt.m), parse_poly(opt.poly));
        if (*opt.a < 0 || *opt.b < 0 || *opt.a >= static_cast<int>(field.order()) ||
            *opt.b >= static_cast<int>(field.order())) {
            throw BadPair("substitution values must lie in the field");
        }
        doc = make_document(
            QuasiBinaryMatrix(p, static_cast<Elem>(*opt.a), static_cast<Elem>(*opt.b), field),
            cfg.seed);
    } else {
        doc = make_document(p, cfg.seed);
    }
    write_output(opt.format == "dense" ? dense_text(doc) : emit_document(doc), opt.output, out);
    return 0;
}

int run_invert(const std::string& input, const std::string& output, std::ostream& out) {
    const MatrixDocument doc = parse_document(read_file(input));
    if (doc.kind != MatrixDocument::Kind::QuasiBinary) {
        throw ParseError("invert expects a quasi-binary document");
    }
    const QuasiBinaryMatrix inverse = quasi_inverse(quasi_of(doc));
    write_output(emit_document(make_document(inverse, doc.seed)), output, out);
    return 0;
}

int run_verify(const std::string& input, std::ostream& out) {
    const MatrixDocument doc = parse_document(read_file(input));
    bool ok = false;
    std::string what;
    if (doc.kind == MatrixDocument::Kind::BinarySupports) {
        const BinaryMatrix dense = supports_to_dense(supports_of(doc));
        ok = is_identity(bin_matmul(dense, bin_transpose(dense)));
        what = "P*P^T = I over F2";
    } else {
        const QuasiBinaryMatrix q = quasi_of(doc);
        ok = verify_quasi_inverse(q, quasi_inverse(q));
        what = "P_ab * (P_ab)^T_cd = I over GF(2^" + std::to_string(*doc.field_m) + ")";
    }
    out << (ok ? "PASS" : "FAIL") << ": " << what << " (n = " << doc.n << ")\n";
    return ok ? 0 : 1;
}

int run_search(int n_min, int n_max, const std::string& format, std::ostream& out) {
    const char sep = format == "csv" ? ',' : '\t';
    for (const ParamTriplet& t : search_table(n_min, n_max)) {
        out << t.n << sep << t.k << sep << t.rot << "\n";
    }
    return 0;
}

int run_render(const std::string& input, const std::string& palette, const std::string& output,
               std::ostream& out) {
    const MatrixDocument doc = parse_document(read_file(input));
    const Palette pal = palette == "inverse" ? Palette::Inverse : Palette::Forward;
    write_output(render_document(doc, pal), output, out);
    return 0;
}

int run_bench(int n, int reps, std::uint64_t seed, std::ostream& out) {
    const BenchReport report = bench_generation(n, reps, seed);
    out << "n " << report.n << ", reps " << report.reps << "\n";
    out << "support path: " << report.support_ms_per_matrix << " ms/matrix\n";
    out << "naive matmul path: " << report.naive_ms_per_matrix << " ms/matrix\n";
    if (report.support_ms_per_matrix > 0.0) {
        out << "speedup: " << report.naive_ms_per_matrix / report.support_ms_per_matrix << "x\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quasi-binary quasi-orthogonal matrix toolkit"};
    app.name("qomat");
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random orthogonal binary matrix");
    gen_cmd->add_option("--n", gen.n, "matrix dimension (even, present in the parameter table)")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "64-bit reproducibility seed");
    gen_cmd->add_option("--iterations", gen.iterations, "chain length")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--a", gen.a, "first substitution value");
    gen_cmd->add_option("--b", gen.b, "second substitution value");
    gen_cmd->add_option("--m", gen.m, "field degree");
    gen_cmd->add_option("--poly", gen.poly, "irreducible polynomial bitmask (hex or decimal)");
    gen_cmd->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember({"json", "dense"}));
    gen_cmd->add_option("--output,-o", gen.output, "output file (default stdout)");

    std::string invert_input, invert_output;
    auto* invert_cmd = app.add_subcommand("invert", "quasi-inverse of a quasi-binary document");
    invert_cmd->add_option("input", invert_input, "input document")->required();
    invert_cmd->add_option("--output,-o", invert_output, "output file (default stdout)");

    std::string verify_input;
    auto* verify_cmd = app.add_subcommand("verify", "check orthogonality / the inverse identity");
    verify_cmd->add_option("input", verify_input, "input document")->required();

    int search_min = 0, search_max = 0;
    std::string search_format = "tsv";
    auto* search_cmd = app.add_subcommand("search", "list (n, k, rot) parameter triplets");
    search_cmd->add_option("--min", search_min, "smallest n")->required();
    search_cmd->add_option("--max", search_max, "largest n")->required();
    search_cmd->add_option("--format", search_format, "output format")
        ->check(CLI::IsMember({"tsv", "csv"}));

    std::string render_input, render_output, render_palette = "forward";
    auto* render_cmd = app.add_subcommand("render", "export a document as PBM or PPM");
    render_cmd->add_option("input", render_input, "input document")->required();
    render_cmd->add_option("--palette", render_palette, "color palette for quasi documents")
        ->check(CLI::IsMember({"forward", "inverse"}));
    render_cmd->add_option("--output,-o", render_output, "output file (default stdout)");

    int bench_n = 0, bench_reps = 10;
    std::uint64_t bench_seed = 0;
    auto* bench_cmd = app.add_subcommand("bench", "time generation against the naive matmul path");
    bench_cmd->add_option("--n", bench_n, "matrix dimension")->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "base seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (gen_cmd->parsed()) return run_gen(gen, out);
        if (invert_cmd->parsed()) return run_invert(invert_input, invert_output, out);
        if (verify_cmd->parsed()) return run_verify(verify_input, out);
        if (search_cmd->parsed()) return run_search(search_min, search_max, search_format, out);
        if (render_cmd->parsed()) return run_render(render_input, render_palette, render_output, out);
        if (bench_cmd->parsed()) return run_bench(bench_n, bench_reps, bench_seed, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qomat
