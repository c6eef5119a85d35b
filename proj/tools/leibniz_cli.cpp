// Command-line front end: every library capability as a reproducible batch
// command. Reports are deterministic structured text so runs can be diffed;
// tensor and extension data travel as canonical JSON files.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed (reports
// carry a witness), 2 input or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/extensions.hpp"
#include "leibniz/families.hpp"
#include "leibniz/mapspaces.hpp"
#include "leibniz/racks.hpp"
#include "leibniz/tensor_io.hpp"

using namespace leibniz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Indented "key: value" tree, one line per entry.
class Report {
public:
    explicit Report(const std::string& command) { lines_.push_back("leibniz-report/1"); add("command", command); }

    void add(const std::string& key, const std::string& value, int depth = 0) {
        lines_.push_back(std::string(2 * depth, ' ') + key + ": " + value);
    }
    void section(const std::string& key, int depth = 0) {
        lines_.push_back(std::string(2 * depth, ' ') + key + ":");
    }
    void raw(const std::string& line, int depth) {
        lines_.push_back(std::string(2 * depth, ' ') + line);
    }

    int finish(bool pass) {
        add("status", pass ? "pass" : "fail");
        for (const auto& l : lines_) std::cout << l << "\n";
        return pass ? exit_ok : exit_check_failed;
    }

private:
    std::vector<std::string> lines_;
};

Vec parse_rational_list(const std::string& text) {
    Vec out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rat::parse(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

std::string vec_to_string(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += v[i].str();
    }
    return out.empty() ? "(empty)" : out;
}

void add_matrix(Report& report, const std::string& name, const Mat& m, int depth) {
    report.section(name, depth);
    for (std::size_t i = 0; i < m.rows(); ++i) report.raw(vec_to_string(m.row(i)), depth + 1);
    if (m.rows() == 0) report.raw("(empty)", depth + 1);
}

std::string witness_string(const LeibnizAlgebra& L, const TripleWitness& w) {
    return "(" + L.basis_labels[w.i] + "," + L.basis_labels[w.j] + "," + L.basis_labels[w.k] + ")";
}

std::string series_dims(const std::vector<Subspace>& series) {
    std::string out;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(series[i].dim());
    }
    return out;
}

// ---------------------------------------------------------------------------
// family

LeibnizAlgebra make_family(const std::string& name, std::size_t n, const std::string& alpha_s,
                           const std::string& beta_s, const std::string& poly_s, std::size_t k) {
    if (name == "s1") return s1();
    if (name == "s2") return s2();
    if (name == "s2n") return s2_normalized();
    if (name == "ln") return l_n(n);
    if (name == "abelian") return abelian(n);
    if (name == "kronecker") return kronecker(n);
    if (name == "dieudonne") return dieudonne(n);
    if (name == "heisenberg") {
        if (poly_s.empty()) throw UsageError("heisenberg needs --poly");
        Vec coeffs = parse_rational_list(poly_s);
        std::vector<Rat> c(coeffs.begin(), coeffs.end());
        return heisenberg(companion_of_power(PolynomialQ(std::move(c)), k));
    }
    if (name == "paper-presentation") {
        if (n < 2) throw UsageError("paper-presentation needs --n >= 2");
        Vec alpha = parse_rational_list(alpha_s), beta = parse_rational_list(beta_s);
        if (alpha.empty()) alpha.assign(n - 2, Rat(0));
        if (beta.empty()) beta.assign(n - 2, Rat(0));
        return paper_presentation(n, alpha, beta);
    }
    throw UsageError("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& path) {
    const std::string text = read_input(path);
    LeibnizAlgebra L = io::parse_tensor_file(text);
    Report report("analyze");
    report.add("input", path);
    report.add("digest", "fnv1a:" + io::digest(text));
    report.section("results");
    report.add("dim", std::to_string(L.dim()), 1);

    auto left = check_left_leibniz(L);
    report.add("left_leibniz", left ? "fail witness=" + witness_string(L, *left) : "pass", 1);
    auto right = check_right_leibniz(L);
    report.add("right_leibniz", right ? "fail witness=" + witness_string(L, *right) : "pass", 1);
    report.add("is_lie", is_lie(L) ? "true" : "false", 1);
    report.add("is_symmetric", is_symmetric(L) ? "true" : "false", 1);
    report.add("derived_series_dims", series_dims(derived_series(L)), 1);
    report.add("lower_central_series_dims", series_dims(lower_central_series(L)), 1);
    auto nil = nilpotency_step(L);
    report.add("nilpotency_step", nil ? std::to_string(*nil) : "none", 1);
    auto sol = solvability_step(L);
    report.add("solvability_step", sol ? std::to_string(*sol) : "none", 1);
    report.add("dim_leibniz_kernel", std::to_string(leibniz_kernel(L).dim()), 1);
    report.add("dim_left_center", std::to_string(left_center(L).dim()), 1);
    report.add("dim_right_center", std::to_string(right_center(L).dim()), 1);
    report.add("dim_center", std::to_string(center(L).dim()), 1);
    return report.finish(!left.has_value());
}

// ---------------------------------------------------------------------------
// der / ader / bider

int cmd_mapspace(const std::string& which, const std::string& path) {
    const std::string text = read_input(path);
    LeibnizAlgebra L = io::parse_tensor_file(text);
    const std::size_t n = L.dim();
    Report report(which);
    report.add("input", path);
    report.add("digest", "fnv1a:" + io::digest(text));
    report.section("results");
    Subspace space = which == "der"    ? derivation_space(L)
                     : which == "ader" ? antiderivation_space(L)
                                       : biderivation_space(L);
    report.add("dim", std::to_string(space.dim()), 1);
    report.section("basis", 1);
    for (std::size_t a = 0; a < space.dim(); ++a) {
        if (which == "bider") {
            BiderivationPair p = unflatten_pair(space.basis_vector(a), n);
            report.section("pair " + std::to_string(a + 1), 2);
            add_matrix(report, "d", p.d, 3);
            add_matrix(report, "D", p.D, 3);
        } else {
            add_matrix(report, "matrix " + std::to_string(a + 1),
                       unflatten(space.basis_vector(a), n), 2);
        }
    }
    return report.finish(true);
}

// ---------------------------------------------------------------------------
// aut-check

int cmd_aut_check(const std::string& path, const std::string& matrix_path) {
    const std::string text = read_input(path);
    LeibnizAlgebra L = io::parse_tensor_file(text);
    Mat P = io::parse_matrix_file(read_input(matrix_path));
    if (P.rows() != L.dim() || P.cols() != L.dim())
        throw UsageError("matrix size does not match the algebra dimension");
    Report report("aut-check");
    report.add("input", path);
    report.add("digest", "fnv1a:" + io::digest(text));
    report.section("results");
    bool ok = is_automorphism(L, P);
    if (ok) {
        report.add("automorphism", "pass", 1);
    } else if (!inverse(P)) {
        report.add("automorphism", "fail witness=singular", 1);
    } else {
        std::string witness = "?";
        for (std::size_t i = 0; i < L.dim() && witness == "?"; ++i)
            for (std::size_t j = 0; j < L.dim(); ++j)
                if (L.bracket(P.col(i), P.col(j)) != P * L.bracket_basis(i, j)) {
                    witness = "(" + L.basis_labels[i] + "," + L.basis_labels[j] + ")";
                    break;
                }
        report.add("automorphism", "fail witness=" + witness, 1);
    }
    return report.finish(ok);
}

// ---------------------------------------------------------------------------
// ext-check / ext-build / ext-family

void add_cocycle_verdicts(Report& report, const CocycleReport& cc) {
    for (std::size_t i = 0; i < 7; ++i) {
        const auto& cond = cc.conditions[i];
        report.add("L" + std::to_string(i + 1),
                   cond.pass ? "pass" : "fail witness=" + cond.witness, 1);
    }
}

int cmd_ext_check(const std::string& path) {
    const std::string text = read_input(path);
    ExtensionData E = io::parse_extension_file(text);
    Report report("ext-check");
    report.add("input", path);
    report.add("digest", "fnv1a:" + io::digest(text));
    report.section("results");
    CocycleReport cc = check_cocycle_conditions(E);
    add_cocycle_verdicts(report, cc);
    return report.finish(cc.all_pass());
}

int cmd_ext_build(const std::string& path, const std::string& out, bool unchecked) {
    const std::string text = read_input(path);
    ExtensionData E = io::parse_extension_file(text);
    CocycleReport cc = check_cocycle_conditions(E);
    if (!cc.all_pass() && !unchecked) {
        Report report("ext-build");
        report.add("input", path);
        report.add("digest", "fnv1a:" + io::digest(text));
        report.section("results");
        add_cocycle_verdicts(report, cc);
        return report.finish(false);
    }
    write_output(out, io::serialize_tensor_file(build_semidirect(E, true)));
    return exit_ok;
}

int cmd_ext_family(const std::string& fiber, std::size_t n, const std::string& alpha_s,
                   const std::string& beta_s, const std::string& out) {
    Vec alpha = parse_rational_list(alpha_s), beta = parse_rational_list(beta_s);
    ExtensionData E = [&] {
        if (fiber == "s2n") {
            if (n < 2) throw UsageError("ext-family with the s2n fiber needs --n >= 2");
            if (alpha.empty()) alpha.assign(n - 2, Rat(0));
            if (beta.empty()) beta.assign(n - 2, Rat(0));
            return paper_family_extension(n, alpha, beta);
        }
        if (fiber == "s1") {
            if (alpha.size() != beta.size())
                throw UsageError("ext-family with the s1 fiber needs --alpha and --beta of equal length");
            return s1_family_extension(alpha, beta);
        }
        throw UsageError("unknown fiber '" + fiber + "' (expected s2n or s1)");
    }();
    write_output(out, io::serialize_extension_file(E));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// normalize

int cmd_normalize(const std::string& path, const std::string& out) {
    const std::string text = read_input(path);
    LeibnizAlgebra L = io::parse_tensor_file(text);
    Report report("normalize");
    report.add("input", path);
    report.add("digest", "fnv1a:" + io::digest(text));
    report.section("results");
    std::optional<NormalizationResult> res;
    try {
        res = normalize_to_ln(L);
    } catch (const std::invalid_argument& e) {
        report.add("in_scope", std::string("fail (") + e.what() + ")", 1);
        return report.finish(false);
    }
    report.add("in_scope", "pass", 1);
    report.add("alpha", vec_to_string(res->alpha), 1);
    report.add("beta", vec_to_string(res->beta), 1);
    add_matrix(report, "P", res->P, 1);
    add_matrix(report, "stage_adapt", res->stages[0], 1);
    add_matrix(report, "stage_beta", res->stages[1], 1);
    add_matrix(report, "stage_alpha", res->stages[2], 1);
    LeibnizAlgebra normal = transport(L, res->P);
    const std::string normal_text = io::serialize_tensor_file(normal);
    report.add("normal_form_digest", "fnv1a:" + io::digest(normal_text), 1);
    if (!out.empty()) write_output(out, normal_text);
    return report.finish(true);
}

// ---------------------------------------------------------------------------
// rack-check

void add_axiom(Report& report, const std::string& name, const AxiomResult& a) {
    std::string line = (a.pass ? "pass" : "fail") + std::string(" max_residual=") +
                       fmt_double(a.max_residual);
    if (!a.pass) line += " witness=" + a.witness;
    report.add(name, line, 2);
}

int cmd_rack_check(const std::string& variant, std::size_t dim, std::size_t samples,
                   std::uint64_t seed, double h, double tol) {
    SmoothRack R = [&] {
        if (variant == "paper") return SmoothRack::paper_ln(dim);
        if (variant == "corrected") return SmoothRack::corrected_ln(dim);
        if (variant == "conj") {
            std::size_t k = 1;
            while (k * k < dim) ++k;
            if (k * k != dim) throw UsageError("conj variant needs a square --dim (k*k)");
            return SmoothRack::conj_matrix(k);
        }
        throw UsageError("unknown variant '" + variant + "' (expected paper, corrected, conj)");
    }();

    Report report("rack-check");
    report.section("results");
    report.add("variant", variant, 1);
    report.add("dim", std::to_string(dim), 1);
    report.add("samples", std::to_string(samples), 1);
    report.add("seed", std::to_string(seed), 1);
    report.add("h", fmt_double(h), 1);
    report.add("tol", fmt_double(tol), 1);

    RackReport axioms = check_rack_axioms(R, samples, seed, tol);
    report.section("axioms", 1);
    add_axiom(report, "autodistributive", axioms.autodistributive);
    add_axiom(report, "bijective_left_multiplication", axioms.bijective);
    add_axiom(report, "unit_left", axioms.unit_left);
    add_axiom(report, "unit_right", axioms.unit_right);
    report.add("quandle", axioms.idempotent.pass ? "yes" : "no", 2);

    TangentTensor T = tangent_algebra(R, h);
    report.section("tangent", 1);
    report.add("h", fmt_double(T.h), 2);
    report.add("err_estimate", fmt_double(T.err_estimate), 2);
    report.section("nonzero_constants", 2);
    for (std::size_t i = 0; i < T.dim; ++i)
        for (std::size_t j = 0; j < T.dim; ++j)
            for (std::size_t k = 0; k < T.dim; ++k)
                if (std::fabs(T.at(i, j, k)) > tol)
                    report.raw("c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                   std::to_string(k) + "] = " + fmt_double(T.at(i, j, k)),
                               3);

    bool tangent_ok;
    if (R.variant == RackVariant::ConjMatrix) {
        LeibnizAlgebra gl = gl_commutator_algebra(R.mat_size);
        std::vector<std::size_t> identity_map(dim);
        for (std::size_t i = 0; i < dim; ++i) identity_map[i] = i;
        TangentComparison cmp = compare_tangent_mapped(T, gl, 100 * h * h, identity_map);
        report.add("reference", "gl_" + std::to_string(R.mat_size) + " commutator", 2);
        report.add("max_deviation", fmt_double(cmp.max_deviation), 2);
        tangent_ok = cmp.pass;
    } else {
        TangentComparison cmp = compare_tangent(T, l_n(dim), tol);
        report.add("reference", "l_" + std::to_string(dim), 2);
        report.add("max_deviation", fmt_double(cmp.max_deviation), 2);
        report.add("worst_entry", "c[" + std::to_string(cmp.i) + "][" + std::to_string(cmp.j) +
                                      "][" + std::to_string(cmp.k) + "]",
                   2);
        tangent_ok = cmp.pass;
    }
    report.add("tangent_matches", tangent_ok ? "pass" : "fail", 1);

    const bool axioms_ok =
        R.variant == RackVariant::ConjMatrix ? axioms.quandle_pass() : axioms.pointed_pass();
    return report.finish(axioms_ok && tangent_ok);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Leibniz algebras with one-dimensional derived subalgebra"};
    app.require_subcommand(1);

    // family
    std::string family_name, family_alpha, family_beta, family_poly, family_out = "-";
    std::size_t family_n = 0, family_k = 1;
    auto* family = app.add_subcommand("family", "emit a named algebra as a tensor file");
    family->add_option("name", family_name,
                       "s1|s2|s2n|ln|abelian|kronecker|dieudonne|heisenberg|paper-presentation")
        ->required();
    family->add_option("--n", family_n, "dimension parameter");
    family->add_option("--alpha", family_alpha, "comma-separated rationals");
    family->add_option("--beta", family_beta, "comma-separated rationals");
    family->add_option("--poly", family_poly, "monic polynomial, ascending coefficients");
    family->add_option("--k", family_k, "power of the polynomial");
    family->add_option("--out", family_out, "output file (default stdout)");

    // analyze
    std::string analyze_file;
    auto* analyze = app.add_subcommand("analyze", "invariants of a tensor file");
    analyze->add_option("file", analyze_file, "tensor file ('-' for stdin)")->required();

    // der / ader / bider
    std::string der_file, ader_file, bider_file;
    auto* der = app.add_subcommand("der", "derivation space of a tensor file");
    der->add_option("file", der_file)->required();
    auto* ader = app.add_subcommand("ader", "anti-derivation space of a tensor file");
    ader->add_option("file", ader_file)->required();
    auto* bider = app.add_subcommand("bider", "biderivation space of a tensor file");
    bider->add_option("file", bider_file)->required();

    // aut-check
    std::string aut_file, aut_matrix;
    auto* aut = app.add_subcommand("aut-check", "test a matrix for automorphism");
    aut->add_option("file", aut_file)->required();
    aut->add_option("matrix", aut_matrix, "matrix file")->required();

    // ext-check / ext-build / ext-family
    std::string ext_check_file;
    auto* ext_check = app.add_subcommand("ext-check", "verify the cocycle equations (L1)-(L7)");
    ext_check->add_option("file", ext_check_file, "extension file")->required();

    std::string ext_build_file, ext_build_out = "-";
    bool ext_build_unchecked = false;
    auto* ext_build = app.add_subcommand("ext-build", "build the extension algebra");
    ext_build->add_option("file", ext_build_file, "extension file")->required();
    ext_build->add_option("--out", ext_build_out, "output tensor file (default stdout)");
    ext_build->add_flag("--unchecked", ext_build_unchecked, "build even if the cocycle check fails");

    std::string extfam_fiber = "s2n", extfam_alpha, extfam_beta, extfam_out = "-";
    std::size_t extfam_n = 0;
    auto* ext_family = app.add_subcommand("ext-family", "emit a closed-form extension file");
    ext_family->add_option("--fiber", extfam_fiber, "s2n (default) or s1");
    ext_family->add_option("--n", extfam_n, "total dimension (s2n fiber)");
    ext_family->add_option("--alpha", extfam_alpha, "comma-separated rationals");
    ext_family->add_option("--beta", extfam_beta, "comma-separated rationals");
    ext_family->add_option("--out", extfam_out, "output file (default stdout)");

    // normalize
    std::string norm_file, norm_out;
    auto* normalize = app.add_subcommand("normalize", "change of basis onto l_n");
    normalize->add_option("file", norm_file, "tensor file")->required();
    normalize->add_option("--out", norm_out, "write the transported tensor here");

    // rack-check
    std::string rack_variant = "corrected";
    std::size_t rack_dim = 2, rack_samples = 1000;
    std::uint64_t rack_seed = 0;
    double rack_h = 1e-4, rack_tol = 1e-6;
    auto* rack = app.add_subcommand("rack-check", "verify rack axioms and the tangent algebra");
    rack->set_help_flag("--help", "print help");  // frees --h for the step size
    rack->add_option("--variant", rack_variant, "paper|corrected|conj");
    rack->add_option("--dim", rack_dim, "point dimension");
    rack->add_option("--samples", rack_samples, "sample count (default 1000)");
    rack->add_option("--seed", rack_seed, "sampler seed (default 0)");
    rack->add_option("--h", rack_h, "finite-difference step (default 1e-4)");
    rack->add_option("--tol", rack_tol, "comparison tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    try {
        if (family->parsed()) {
            LeibnizAlgebra L =
                make_family(family_name, family_n, family_alpha, family_beta, family_poly, family_k);
            write_output(family_out, io::serialize_tensor_file(L));
            return exit_ok;
        }
        if (analyze->parsed()) return cmd_analyze(analyze_file);
        if (der->parsed()) return cmd_mapspace("der", der_file);
        if (ader->parsed()) return cmd_mapspace("ader", ader_file);
        if (bider->parsed()) return cmd_mapspace("bider", bider_file);
        if (aut->parsed()) return cmd_aut_check(aut_file, aut_matrix);
        if (ext_check->parsed()) return cmd_ext_check(ext_check_file);
        if (ext_build->parsed())
            return cmd_ext_build(ext_build_file, ext_build_out, ext_build_unchecked);
        if (ext_family->parsed())
            return cmd_ext_family(extfam_fiber, extfam_n, extfam_alpha, extfam_beta, extfam_out);
        if (normalize->parsed()) return cmd_normalize(norm_file, norm_out);
        if (rack->parsed())
            return cmd_rack_check(rack_variant, rack_dim, rack_samples, rack_seed, rack_h, rack_tol);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CocycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}
