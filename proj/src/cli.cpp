#include "tclab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tclab/algebra.hpp"
#include "tclab/diag.hpp"
#include "tclab/fock.hpp"
#include "tclab/spectra.hpp"
#include "tclab/wavefn.hpp"

namespace tc::cli {

namespace {

// 17 significant digits: round-trip exact for IEEE doubles.
std::string j17(double v) {
    std::ostringstream o;
    o << std::setprecision(17) << v;
    return o.str();
}

// 12 significant digits for CSV readability.
std::string c12(double v) {
    std::ostringstream o;
    o << std::setprecision(12) << v;
    return o.str();
}

struct CommonOpts {
    ModelParams params{1.0, 1.0, 1.0, 0.1};
    std::string format{"json"};
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--w1", opts.params.omega1, "mode-a frequency");
    cmd->add_option("--w2", opts.params.omega2, "mode-b frequency");
    cmd->add_option("--w3", opts.params.omega3, "mode-c frequency");
    cmd->add_option("--g", opts.params.g, "trilinear coupling");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", opts.output, "output file (default: stdout)");
    // Handled before parsing (expand_config); registered here for --help only.
    cmd->add_option("--config", "flat key=value config file; command-line flags take precedence")
        ->option_text("FILE");
}

// Writes `text` to opts.output (stdout when empty). A relative path is
// resolved against $TCLAB_OUTPUT_DIR when that is set.
void emit(const CommonOpts& opts, std::ostream& out, const std::string& text) {
    if (opts.output.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(opts.output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("TCLAB_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path.string());
    file << text;
    if (!file) throw std::invalid_argument("write failed: " + path.string());
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
    CommonOpts common;
    int qmax{-1};
    std::vector<int> block;  // (q_ab, q_ac) when given
};

std::string run_spectrum(const SpectrumOpts& o) {
    std::vector<SpectrumResult> results;
    if (!o.block.empty()) {
        results.push_back(block_spectrum(o.common.params, o.block[0], o.block[1]));
    } else {
        for (int qab = 0; qab <= o.qmax; ++qab)
            for (int qac = 0; qac <= o.qmax; ++qac)
                results.push_back(block_spectrum(o.common.params, qab, qac));
    }

    std::ostringstream s;
    if (o.common.format == "csv") {
        s << "q_ab,q_ac,eigenvalue\n";
        for (const auto& r : results)
            for (double ev : r.eigenvalues)
                s << int(r.labels[0]) << ',' << int(r.labels[1]) << ',' << c12(ev) << '\n';
    } else {
        s << "[\n";
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            s << "  {\"q_ab\": " << int(r.labels[0]) << ", \"q_ac\": " << int(r.labels[1])
              << ", \"eigenvalues\": [";
            for (size_t k = 0; k < r.eigenvalues.size(); ++k)
                s << (k ? ", " : "") << j17(r.eigenvalues[k]);
            s << "]}" << (i + 1 < results.size() ? "," : "") << '\n';
        }
        s << "]\n";
    }
    return s.str();
}

// ---------------------------------------------------------------- analytic

struct AnalyticOpts {
    CommonOpts common;
    std::string method;
    std::string delta_sign{"paper"};
    int nmax{2};
};

std::string run_analytic(const AnalyticOpts& o) {
    struct Row {
        int a, b, c;
        Energy e;
    };
    std::vector<Row> rows;
    std::vector<std::string> names;
    const auto& p = o.common.params;

    if (o.method == "bogoliubov") {
        names = {"n_a", "n_abar", "n_d"};
        bogoliubov_params(p, 0);  // validates omega2 == omega3 up front
        for (int a = 0; a <= o.nmax; ++a)
            for (int b = 0; b <= o.nmax; ++b)
                for (int c = 0; c <= o.nmax; ++c)
                    rows.push_back({a, b, c, energy_bogoliubov(p, a, b, c)});
    } else if (o.method == "su11") {
        names = {"n_a", "n_l", "m_n"};
        for (int a = 0; a <= o.nmax; ++a)
            for (int b = 0; b <= o.nmax; ++b)
                for (int c = 0; c <= o.nmax; ++c)
                    rows.push_back({a, b, c, energy_su11(p, {a, b, c})});
    } else if (o.method == "nm") {
        names = {"n_c", "n_1", "n_2"};
        const DeltaSign sign = o.delta_sign == "alt" ? DeltaSign::Alt : DeltaSign::Paper;
        for (int a = 0; a <= o.nmax; ++a)
            for (int b = 0; b <= o.nmax; ++b)
                for (int c = 0; c <= o.nmax; ++c)
                    rows.push_back({a, b, c, energy_normal_mode(p, {a, b, c}, sign)});
    } else {  // su2
        names = {"n_c", "n_l", "m_n"};
        for (int a = 0; a <= o.nmax; ++a)
            for (int b = 0; b <= o.nmax; ++b)
                for (int c = 0; c <= o.nmax; ++c)
                    rows.push_back({a, b, c, energy_su2(p, {a, b, c})});
    }

    std::ostringstream s;
    if (o.common.format == "csv") {
        s << names[0] << ',' << names[1] << ',' << names[2] << ",energy,is_real\n";
        for (const auto& r : rows)
            s << r.a << ',' << r.b << ',' << r.c << ',' << c12(r.e.value) << ','
              << (r.e.is_real ? 1 : 0) << '\n';
    } else {
        s << "{\n  \"method\": \"" << o.method << "\",\n  \"quantum_numbers\": [\""
          << names[0] << "\", \"" << names[1] << "\", \"" << names[2] << "\"],\n"
          << "  \"rows\": [\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            s << "    {\"quantum_numbers\": [" << r.a << ", " << r.b << ", " << r.c
              << "], \"energy\": " << j17(r.e.value)
              << ", \"is_real\": " << (r.e.is_real ? "true" : "false")
              << ", \"imag_magnitude\": " << j17(r.e.imag_magnitude) << "}"
              << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        s << "  ]\n}\n";
    }
    return s.str();
}

// ------------------------------------------------------------------ verify

struct VerifySuite {
    std::string name;
    double tolerance;
    std::function<double()> residual;
};

double interior_residual_bc(const DenseMatrix& m, int cut, int margin) {
    const auto inside = [&](int idx) {
        const int n1 = idx / (cut + 1), n2 = idx % (cut + 1);
        return n1 + margin <= cut && n2 + margin <= cut;
    };
    double worst = 0.0;
    for (int c = 0; c < m.cols(); ++c)
        if (inside(c))
            for (int r = 0; r < m.rows(); ++r)
                if (inside(r)) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

double complete_sector_residual(const DenseMatrix& m, int cut) {
    const auto sector = [&](int idx) { return idx / (cut + 1) + idx % (cut + 1); };
    double worst = 0.0;
    for (int c = 0; c < m.cols(); ++c)
        if (sector(c) <= cut)
            for (int r = 0; r < m.rows(); ++r)
                if (sector(r) <= cut) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

std::vector<VerifySuite> verify_suites(const ModelParams& params, bool inject_fault) {
    std::vector<VerifySuite> suites;

    suites.push_back({"charges", 1e-12, [params] {
        double worst = 0.0;
        for (auto [qab, qac] : {std::pair{2, 2}, std::pair{3, 4}}) {
            const auto blk = block_basis(qab, qac);
            const auto h = hamiltonian_matrix(params, SingleBlock{qab, qac});
            std::vector<Eigen::Triplet<Complex>> ab, ac;
            for (int i = 0; i < blk.dim(); ++i) {
                ab.emplace_back(i, i, Complex(blk.basis[i].n_a + blk.basis[i].n_b, 0.0));
                ac.emplace_back(i, i, Complex(blk.basis[i].n_a + blk.basis[i].n_c, 0.0));
            }
            worst = std::max(worst, commutator(h, assemble(blk.dim(), ab, true))
                                        .dense().cwiseAbs().maxCoeff());
            worst = std::max(worst, commutator(h, assemble(blk.dim(), ac, true))
                                        .dense().cwiseAbs().maxCoeff());
            worst = std::max(worst, hermiticity_residual(h.dense()));
        }
        return worst;
    }});

    suites.push_back({"su11-algebra", 1e-12, [] {
        const int cut = 12;
        const auto gen = su11_generators(TwoModeTruncated{cut, cut, ModePair::BC});
        const DenseMatrix c1 =
            commutator(gen.kminus, gen.kplus).dense() - 2.0 * gen.k0.dense();
        const DenseMatrix c2 = commutator(gen.k0, gen.kplus).dense() - gen.kplus.dense();
        const auto nd = gen.nd.dense();
        const DenseMatrix c3 = casimir(gen).dense() - 0.25 * (nd * nd).eval() +
                               0.25 * DenseMatrix::Identity(gen.dim(), gen.dim());
        return std::max({interior_residual_bc(c1, cut, 1), interior_residual_bc(c2, cut, 1),
                         interior_residual_bc(c3, cut, 1)});
    }});

    suites.push_back({"su2-algebra", 1e-12, [] {
        const int cut = 10;
        const auto gen = su2_generators(TwoModeTruncated{cut, cut, ModePair::AB});
        const DenseMatrix c1 =
            commutator(gen.jplus, gen.jminus).dense() - 2.0 * gen.j0.dense();
        const auto ns = gen.ns.dense();
        const DenseMatrix c2 = casimir(gen).dense() - 0.25 * (ns * ns).eval() - 0.5 * ns;
        return std::max(complete_sector_residual(c1, cut), complete_sector_residual(c2, cut));
    }});

    suites.push_back({"displacement", 1e-10, [] {
        const int cut = 8;
        const auto gen = su2_generators(TwoModeTruncated{cut, cut, ModePair::AB});
        const Complex xi(0.6, -0.3);
        const DenseMatrix diff =
            displacement_exact(gen, xi) - displacement_normal_order(gen, xi);
        return complete_sector_residual(diff, cut);
    }});

    suites.push_back({"su11-surrogate", 1e-8, [] {
        const auto r = surrogate_su11_spectrum(2.0, 0.0, Complex(0.5), 0, 80);
        double worst = 0.0;
        for (int n = 0; n < 8; ++n)
            worst = std::max(worst, std::abs(r.eigenvalues[n] - r.analytic[n]));
        return worst;
    }});

    suites.push_back({"su2-surrogate", 1e-12, [] {
        double worst = 0.0;
        for (double j : {0.5, 1.0, 2.5, 4.0}) {
            const auto r = surrogate_su2_spectrum(1.3, Complex(0.4, 0.3), j);
            for (size_t i = 0; i < r.eigenvalues.size(); ++i)
                worst = std::max(worst, std::abs(r.eigenvalues[i] - r.analytic[i]));
        }
        return worst;
    }});

    suites.push_back({"reduction", 1e-12, [params] {
        ModelParams p = params;
        p.omega3 = p.omega2;  // reduction identity needs omega2 == omega3
        double worst = 0.0;
        for (int na = 0; na < 5; ++na)
            for (int nl = 0; nl < 5; ++nl)
                for (int mn = 0; mn < 5; ++mn)
                    worst = std::max(worst,
                                     std::abs(energy_su11(p, {na, nl, mn}).value -
                                              energy_bogoliubov(p, na, 2 * nl, mn).value));
        return worst;
    }});

    suites.push_back({"normal-mode", 1e-12, [params, inject_fault] {
        // inject_fault flips the sign of |Y|^2 in the sum rule
        const double sy = inject_fault ? -1.0 : 1.0;
        double worst = 0.0;
        for (double delta : {-0.5, 0.0, 0.5})
            for (double g : {0.0, 0.3, 1.1})
                for (int nc : {0, 1, 4}) {
                    ModelParams p = params;
                    p.omega1 = p.omega2 + delta;
                    p.g = g;
                    const auto c = normal_mode_coeffs(p, nc);
                    worst = std::max(worst, std::abs(c.x2 + sy * c.y2 - 1.0));
                }
        return worst;
    }});

    suites.push_back({"ed-integrity", 1e-10, [params] {
        const int q_max = 3;
        const auto cube = TruncatedCube{q_max, q_max, q_max};
        const auto states = basis_states(cube);
        const DenseMatrix h_cube = hamiltonian_matrix(params, cube).dense();
        std::vector<int> keep;
        for (int i = 0; i < static_cast<int>(states.size()); ++i)
            if (states[i].n_a + states[i].n_b <= q_max &&
                states[i].n_a + states[i].n_c <= q_max)
                keep.push_back(i);
        DenseMatrix sub(keep.size(), keep.size());
        for (size_t r = 0; r < keep.size(); ++r)
            for (size_t c = 0; c < keep.size(); ++c) sub(r, c) = h_cube(keep[r], keep[c]);
        const RealVector cube_ev = hermitian_eigenvalues(sub);

        std::vector<double> block_ev;
        for (int qab = 0; qab <= q_max; ++qab)
            for (int qac = 0; qac <= q_max; ++qac) {
                const auto spec = block_spectrum(params, qab, qac);
                block_ev.insert(block_ev.end(), spec.eigenvalues.begin(),
                                spec.eigenvalues.end());
            }
        std::sort(block_ev.begin(), block_ev.end());
        double worst = hermiticity_residual(h_cube);
        for (Eigen::Index i = 0; i < cube_ev.size(); ++i)
            worst = std::max(worst, std::abs(block_ev[i] - cube_ev[i]));

        ModelParams flipped = params;
        flipped.g = -flipped.g;
        const auto plus = block_spectrum(params, 3, 3).eigenvalues;
        const auto minus = block_spectrum(flipped, 3, 3).eigenvalues;
        for (size_t i = 0; i < plus.size(); ++i)
            worst = std::max(worst, std::abs(plus[i] - minus[i]));
        return worst;
    }});

    return suites;
}

struct VerifyOpts {
    CommonOpts common;
    std::string only;
    bool inject_fault{false};
};

int run_verify(const VerifyOpts& o, std::ostream& out) {
    auto suites = verify_suites(o.common.params, o.inject_fault);
    if (!o.only.empty()) {
        std::erase_if(suites, [&](const VerifySuite& s) { return s.name != o.only; });
        if (suites.empty())
            throw std::invalid_argument("verify: unknown suite '" + o.only + "'");
    }

    struct Result {
        std::string name;
        double residual, tolerance;
        bool pass;
    };
    std::vector<Result> results;
    bool all_pass = true;
    for (const auto& s : suites) {
        const double res = s.residual();
        const bool pass = res <= s.tolerance;
        all_pass = all_pass && pass;
        results.push_back({s.name, res, s.tolerance, pass});
    }

    std::ostringstream s;
    if (o.common.format == "csv") {
        s << "suite,residual,tolerance,pass\n";
        for (const auto& r : results)
            s << r.name << ',' << c12(r.residual) << ',' << c12(r.tolerance) << ','
              << (r.pass ? 1 : 0) << '\n';
    } else {
        s << "{\n  \"suites\": [\n";
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            s << "    {\"name\": \"" << r.name << "\", \"residual\": " << j17(r.residual)
              << ", \"tolerance\": " << j17(r.tolerance)
              << ", \"pass\": " << (r.pass ? "true" : "false") << "}"
              << (i + 1 < results.size() ? "," : "") << '\n';
        }
        s << "  ],\n  \"all_pass\": " << (all_pass ? "true" : "false") << "\n}\n";
    }
    emit(o.common, out, s.str());
    return all_pass ? kOk : kAccuracyFailure;
}

// ---------------------------------------------------------------- coherent

struct CoherentOpts {
    CommonOpts common;
    std::string group;
    bool grid{false};
    double k{0.5}, j{0.5}, mu{0.5};
    int n{0}, truncation{40};
    std::vector<double> xi{0.0, 0.0};
    std::vector<double> zeta{0.0, 0.0};
    int n_l{0}, m_n{0};
    double rho_max{6.0};
    int n_rho{64}, n_phi{64};
};

std::string run_coherent(const CoherentOpts& o) {
    std::ostringstream s;
    if (o.grid) {
        const Complex zeta(o.zeta[0], o.zeta[1]);
        const auto grid = PolarGrid::uniform(o.rho_max, o.n_rho, o.n_phi);
        const auto samples = o.group == "su11"
                                 ? pncs_wavefunction_su11(o.n_l, o.m_n, zeta, GridSpec{grid})
                                 : pncs_wavefunction_su2(o.n_l, o.m_n, zeta, GridSpec{grid});
        if (o.common.format == "csv") {
            s << "rho,phi,re,im,abs2\n";
            for (const auto& w : samples)
                s << c12(w.coords[0]) << ',' << c12(w.coords[1]) << ',' << c12(w.psi.real())
                  << ',' << c12(w.psi.imag()) << ',' << c12(std::norm(w.psi)) << '\n';
        } else {
            s << "[\n";
            for (size_t i = 0; i < samples.size(); ++i) {
                const auto& w = samples[i];
                s << "  {\"rho\": " << j17(w.coords[0]) << ", \"phi\": " << j17(w.coords[1])
                  << ", \"re\": " << j17(w.psi.real()) << ", \"im\": " << j17(w.psi.imag())
                  << ", \"abs2\": " << j17(std::norm(w.psi)) << "}"
                  << (i + 1 < samples.size() ? "," : "") << '\n';
            }
            s << "]\n";
        }
        return s.str();
    }

    const Complex xi(o.xi[0], o.xi[1]);
    const ComplexVector amps =
        o.group == "su11" ? pncs_su11(o.k, o.n, xi, o.truncation) : pncs_su2(o.j, o.mu, xi);
    if (o.common.format == "csv") {
        s << "index,re,im\n";
        for (Eigen::Index i = 0; i < amps.size(); ++i)
            s << i << ',' << c12(amps[i].real()) << ',' << c12(amps[i].imag()) << '\n';
    } else {
        s << "{\n  \"group\": \"" << o.group << "\",\n  \"amplitudes\": [\n";
        for (Eigen::Index i = 0; i < amps.size(); ++i)
            s << "    {\"index\": " << i << ", \"re\": " << j17(amps[i].real())
              << ", \"im\": " << j17(amps[i].imag()) << "}"
              << (i + 1 < amps.size() ? "," : "") << '\n';
        s << "  ]\n}\n";
    }
    return s.str();
}

// ----------------------------------------------------------------- compare

struct CompareOpts {
    CommonOpts common;
    int qmax{4};
    std::vector<double> g_grid{0.0, 0.025, 0.05, 0.1, 0.2};
    std::vector<double> beta_grid{0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
};

std::string run_compare(const CompareOpts& o) {
    const auto table = discrepancy_table(o.common.params, o.qmax, o.qmax, o.g_grid);

    std::ostringstream s;
    if (o.common.format == "csv") {
        s << "q_ab,q_ac,g,deviation\n";
        for (const auto& r : table.rows)
            s << r.q_ab << ',' << r.q_ac << ',' << c12(r.g) << ',' << c12(r.deviation)
              << '\n';
        return s.str();
    }

    s << "{\n  \"rows\": [\n";
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        s << "    {\"q_ab\": " << r.q_ab << ", \"q_ac\": " << r.q_ac
          << ", \"g\": " << j17(r.g) << ", \"deviation\": " << j17(r.deviation) << "}"
          << (i + 1 < table.rows.size() ? "," : "") << '\n';
    }
    s << "  ],\n  \"loglog_slope\": " << j17(table.loglog_slope) << ",\n";

    // isotropic expectation-value matching scan at the configured (w1, g)
    const double w = o.common.params.omega1;
    const ModelParams iso{w, w, w, o.common.params.g};
    s << "  \"matching\": [\n";
    for (size_t i = 0; i < o.beta_grid.size(); ++i) {
        const double beta = o.beta_grid[i];
        const double alpha = matching_alpha(iso.g, w, beta);
        const double e11 = expval_su11(iso, Complex(alpha), 0, 0).value;
        const double e2 = expval_su2(iso, Complex(beta), 0, 0).value;
        s << "    {\"beta\": " << j17(beta) << ", \"alpha\": " << j17(alpha)
          << ", \"su11\": " << j17(e11) << ", \"su2\": " << j17(e2)
          << ", \"abs_diff\": " << j17(std::abs(e11 - e2)) << "}"
          << (i + 1 < o.beta_grid.size() ? "," : "") << '\n';
    }
    s << "  ]\n}\n";
    return s.str();
}

// Expands `--config FILE` into ordinary flags appended after the explicit
// arguments. The file is flat `key=value` text (blank lines and `#` comments
// allowed); a key already present on the command line keeps its flag value.
void expand_config(std::vector<std::string>& args) {
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--config") continue;
        if (i + 1 >= args.size())
            throw std::invalid_argument("--config requires a file path");
        const std::string path = args[i + 1];
        args.erase(args.begin() + i, args.begin() + i + 2);
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot read config file: " + path);
        std::vector<std::string> extra;
        std::string line;
        while (std::getline(file, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line is not key=value: " + line);
            const std::string flag = "--" + trim(line.substr(0, eq));
            if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
            extra.push_back(flag);
            std::istringstream values(trim(line.substr(eq + 1)));
            std::string token;
            while (values >> token) extra.push_back(token);
        }
        args.insert(args.end(), extra.begin(), extra.end());
        return;
    }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"three-mode trilinear boson model laboratory"};
    app.require_subcommand(1);

    SpectrumOpts spec_o;
    auto* spec_cmd = app.add_subcommand("spectrum", "exact block spectra");
    add_common(spec_cmd, spec_o.common);
    spec_cmd->add_option("--qmax", spec_o.qmax, "scan all blocks with charges <= qmax");
    spec_cmd->add_option("--block", spec_o.block, "single block (q_ab q_ac)")
        ->expected(2);

    AnalyticOpts ana_o;
    auto* ana_cmd = app.add_subcommand("analytic", "algebraic-method energies");
    add_common(ana_cmd, ana_o.common);
    ana_cmd->add_option("--method", ana_o.method, "bogoliubov | su11 | nm | su2")
        ->required()
        ->check(CLI::IsMember({"bogoliubov", "su11", "nm", "su2"}));
    ana_cmd->add_option("--delta-sign", ana_o.delta_sign,
                        "detuning sign convention for the normal-mode energy")
        ->check(CLI::IsMember({"paper", "alt"}));
    ana_cmd->add_option("--nmax", ana_o.nmax, "quantum-number range 0..nmax")
        ->check(CLI::NonNegativeNumber);

    VerifyOpts ver_o;
    auto* ver_cmd = app.add_subcommand("verify", "run the invariant suites");
    add_common(ver_cmd, ver_o.common);
    ver_cmd->add_option("--only", ver_o.only, "run a single suite by name");
    ver_cmd->add_flag("--inject-fault", ver_o.inject_fault,
                      "flip one sign to self-test the harness");

    CoherentOpts coh_o;
    auto* coh_cmd = app.add_subcommand("coherent", "number-coherent-state data");
    add_common(coh_cmd, coh_o.common);
    coh_cmd->add_option("--group", coh_o.group, "su11 | su2")
        ->required()
        ->check(CLI::IsMember({"su11", "su2"}));
    coh_cmd->add_flag("--grid", coh_o.grid, "emit the polar-grid wavefunction");
    coh_cmd->add_option("--k", coh_o.k, "su(1,1) Bargmann index");
    coh_cmd->add_option("--n", coh_o.n, "su(1,1) initial level");
    coh_cmd->add_option("--truncation", coh_o.truncation, "su(1,1) amplitude cutoff");
    coh_cmd->add_option("--j", coh_o.j, "su(2) spin");
    coh_cmd->add_option("--mu", coh_o.mu, "su(2) initial projection");
    coh_cmd->add_option("--xi", coh_o.xi, "displacement xi (re im)")->expected(2);
    coh_cmd->add_option("--zeta", coh_o.zeta, "Gaussian parameter zeta (re im)")
        ->expected(2);
    coh_cmd->add_option("--nl", coh_o.n_l, "radial label n_l");
    coh_cmd->add_option("--mn", coh_o.m_n, "angular label m_n");
    coh_cmd->add_option("--rho-max", coh_o.rho_max, "radial grid extent");
    coh_cmd->add_option("--n-rho", coh_o.n_rho, "radial points");
    coh_cmd->add_option("--n-phi", coh_o.n_phi, "angular points");

    CompareOpts cmp_o;
    auto* cmp_cmd = app.add_subcommand("compare", "exact vs analytic discrepancy table");
    add_common(cmp_cmd, cmp_o.common);
    cmp_cmd->add_option("--qmax", cmp_o.qmax, "block charge range")
        ->check(CLI::NonNegativeNumber);
    cmp_cmd->add_option("--g-grid", cmp_o.g_grid, "coupling values to scan");
    cmp_cmd->add_option("--beta-grid", cmp_o.beta_grid,
                        "coherent amplitudes for the matching scan");

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    try {
        expand_config(args);
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kInvalidArguments;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        if (spec_cmd->parsed()) {
            if (!spec_o.block.empty() && (spec_o.block[0] < 0 || spec_o.block[1] < 0))
                throw std::invalid_argument("spectrum: negative block charge");
            emit(spec_o.common, out, run_spectrum(spec_o));
        } else if (ana_cmd->parsed()) {
            emit(ana_o.common, out, run_analytic(ana_o));
        } else if (ver_cmd->parsed()) {
            return run_verify(ver_o, out);
        } else if (coh_cmd->parsed()) {
            emit(coh_o.common, out, run_coherent(coh_o));
        } else {
            for (double g : cmp_o.g_grid)
                if (g < 0.0) throw std::invalid_argument("compare: negative g in grid");
            emit(cmp_o.common, out, run_compare(cmp_o));
        }
    } catch (const MethodInapplicable& e) {
        err << "method inapplicable: " << e.what() << '\n';
        return kMethodInapplicable;
    } catch (const AccuracyError& e) {
        err << "accuracy failure: " << e.what() << '\n';
        return kAccuracyFailure;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kAccuracyFailure;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kInvalidArguments;
    }
    return kOk;
}

}  // namespace tc::cli
