#include "prequant/errors.hpp"
#include "prequant/genfun_spectra.hpp"
#include "prequant/kernel_modules.hpp"
#include "prequant/report.hpp"
#include "prequant/spectrum_oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>

using namespace prequant;

namespace {

struct Options {
    std::string file;
    std::string format = "human";
    std::string nu, mu, window = "0:1", lambda, query, variant = "K0", backend = "groebner";
    std::string c_minus, c_plus;
    int W = 4, N = 1, N1 = 0, D = kDefaultDegreeBound;
    bool untwisted = false, numeric = false;
};

std::string one_based(const std::vector<std::size_t>& idx) {
    std::vector<int> v;
    for (auto i : idx)
        v.push_back(static_cast<int>(i) + 1);
    return join(v);
}

std::string supports_text(const std::vector<Support>& supports) {
    std::string out;
    for (const auto& S : supports)
        out += (out.empty() ? "" : ";") + one_based(S);
    return out;
}

ToricData load_toric(const Options& o) { return toric_data(load_polytope(o.file)); }

Rational need_rational(const std::string& text, const char* name) {
    if (text.empty())
        throw std::invalid_argument(std::string("--") + name + " is required");
    return parse_rational(text);
}

std::string mono_text(const Mono& m) { return join(std::span<const int>(m)); }

void cmd_validate(const Options& o, Report& r) {
    DelzantPolytope P = load_polytope(o.file);
    ValidationReport v = validate(P);
    r.add("dim", std::to_string(P.dim()));
    r.add("facets", std::to_string(P.facet_count()));
    r.add("compact", v.compact);
    r.add("smooth", v.smooth);
    r.add("vertices", std::to_string(v.vertices.size()));
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        r.add("vertex." + std::to_string(i + 1), join(v.vertices[i].point));
        r.add("active." + std::to_string(i + 1), one_based(v.vertices[i].active));
    }
    if (!v.compact)
        throw HypothesisError("compact", "the polytope is unbounded");
    if (!v.smooth)
        throw HypothesisError("smooth", "some vertex is not Delzant");
}

void cmd_data(const Options& o, Report& r) { add_toric_data(r, load_toric(o)); }

void cmd_quadform(const Options& o, Report& r) {
    ToricData T = load_toric(o);
    if (o.lambda.empty())
        throw std::invalid_argument("--lambda is required");
    RatVector lambda = parse_rational_list(o.lambda);
    if (lambda.size() != T.k)
        throw std::invalid_argument("--lambda needs " + std::to_string(T.k) + " entries");
    DecompositionParams params{o.N1, o.N - o.N1};
    params.check();
    GenFormSpectrum S = spectrum(params, lambda, T.iota);
    r.add("N", std::to_string(params.N()));
    r.add("N1", std::to_string(params.N1));
    r.add("lambda", join(S.lambda));
    r.add("coordinates", join(S.coordinates));
    r.add("dimension", std::to_string(4 * T.n * params.N()));
    r.add("negative_index", S.negative_index);
    r.add("exact_negative_count", exact_negative_count(params.N(), S.coordinates));
    auto front = front_membership(params, lambda, T.iota);
    r.add("front", front.empty() ? std::string("none")
                                 : one_based(std::vector<std::size_t>(front.begin(), front.end())));
    r.comment("eigenlines j,k: sign of tan((2k+1)pi/4N) - tan(pi lambda_j/2N), multiplicity 2");
    for (const auto& e : S.eigenvalues)
        r.add("sign." + std::to_string(e.j + 1) + "." + std::to_string(e.k), std::to_string(e.sign()));
    if (o.numeric) {
        r.comment("numeric cross-check (floating point, not exact)");
        Eigen::MatrixXd H = assembled_real_form(params.N(), S.coordinates);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
        std::vector<double> numeric(solver.eigenvalues().data(), solver.eigenvalues().data() + H.rows());
        std::vector<double> analytic;
        for (const auto& e : S.eigenvalues)
            analytic.insert(analytic.end(), e.multiplicity, e.value);
        std::sort(numeric.begin(), numeric.end());
        std::sort(analytic.begin(), analytic.end());
        double dev = 0;
        for (std::size_t i = 0; i < numeric.size() && i < analytic.size(); ++i)
            dev = std::max(dev, std::abs(numeric[i] - analytic[i]));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", dev);
        r.add("numeric.negative_count",
              std::to_string(std::count_if(numeric.begin(), numeric.end(), [](double x) { return x < 0; })));
        r.add("numeric.max_deviation", std::string(buf));
    }
}

Verdict run_query(const LaurentPoly& q, const MonomialModule& M, Backend b, int D) {
    return membership(q, M, b, D);
}

void cmd_kernel(const Options& o, Report& r) {
    ToricData T = load_toric(o);
    Rational nu = need_rational(o.nu, "nu");
    if (o.variant != "K" && o.variant != "K0")
        throw std::invalid_argument("--variant must be K or K0");
    MonomialModule M = o.variant == "K" ? kernel_K(T, nu, o.W) : kernel_K0(T, nu, o.W);
    r.add("variant", o.variant);
    r.add("nu", nu);
    r.add("target", to_string(M.target));
    r.add("window", std::to_string(o.W));
    r.add("lattice_points", std::to_string(M.lattice_points().size()));
    std::vector<IntVector> mins;
    for (const auto& g : minimal_generators(M.generators(), std::numeric_limits<int>::max()))
        mins.push_back(to_int_vector(g));
    r.add("minimal_generators", join_rows(mins));

    if (!o.c_minus.empty() || !o.c_plus.empty()) {
        BoundingData B = bounding_modules(T, nu, need_rational(o.c_minus, "c-minus"), need_rational(o.c_plus, "c-plus"),
                                          o.W);
        r.add("r_minus", B.r_minus);
        r.add("r_plus", B.r_plus);
        r.add("inclusions_checked", std::to_string(B.inclusions_checked));
    }

    if (o.query.empty())
        return;
    LaurentPoly q = parse_query(o.query, T.n);
    r.add("query", q.to_string());
    r.add("restriction", restrict(q, M.subspace).to_string());
    std::vector<std::pair<std::string, Backend>> backends;
    if (o.backend == "groebner" || o.backend == "both")
        backends.emplace_back("groebner", Backend::groebner);
    if (o.backend == "brute" || o.backend == "both")
        backends.emplace_back("brute", Backend::brute);
    if (backends.empty())
        throw std::invalid_argument("--backend must be groebner, brute or both");
    std::vector<Verdict> verdicts;
    for (const auto& [name, b] : backends) {
        verdicts.push_back(run_query(q, M, b, o.D));
        r.add("verdict." + name, to_string(verdicts.back()));
    }
    for (auto v : verdicts)
        if (v == Verdict::inconclusive)
            throw Inconclusive("window protocol reached W = " + std::to_string(kWindowCap));
    if (verdicts.size() == 2 && verdicts[0] != verdicts[1])
        throw HypothesisError("backend agreement", "the two backends disagree");
    r.add("member", verdicts.front() == Verdict::member);
}

void add_witness(Report& r, const MinimalDegreeWitness& w, const std::string& prefix) {
    r.add(prefix + "nu", w.nu);
    r.add(prefix + "shift", join(w.shift));
    r.add(prefix + "shifted_level", w.shifted_level);
    r.add(prefix + "nullstellensatz", join(w.nullstellensatz));
    r.add(prefix + "degree_cap", std::to_string(w.degree_cap));
    r.add(prefix + "a", mono_text(w.a));
    r.add(prefix + "q", w.q.to_string());
    r.add(prefix + "restriction", w.restricted.to_string());
    r.add(prefix + "verdict.q", to_string(w.verdicts[0]));
    for (std::size_t i = 1; i < w.verdicts.size(); ++i)
        r.add(prefix + "verdict.u" + std::to_string(i) + "q", to_string(w.verdicts[i]));
}

void cmd_min_degree(const Options& o, Report& r) {
    ToricData T = load_toric(o);
    Rational nu = need_rational(o.nu, "nu");
    MinimalDegreeWitness w = find_minimal_degree_element(T, nu, o.W);
    add_witness(r, w, "");
}

void cmd_bound(const Options& o, Report& r) {
    ToricData T = load_toric(o);
    BoundCertificate C = translated_point_bound(T);
    r.add("N_M", C.N_M);
    r.add("translated_points_at_least", C.N_M);
    r.comment("certificate: minimal-degree witness at nu = 1/2");
    add_witness(r, C.witness, "witness.");
    r.comment("certificate: Novikov period b with c(b) = N_M p(b)");
    r.add("period.b", join(C.period));
    r.add("period.p", C.period_level);
    r.add("period.degree_shift", C.period_degree);
}

void cmd_spectrum(const Options& o, Report& r) {
    ToricData T = load_toric(o);
    DiagonalMap D{RatVector(T.n, 0), !o.untwisted};
    if (!o.mu.empty())
        D.mu = parse_rational_list(o.mu);
    auto colon = o.window.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--window must be lo:hi");
    Rational lo = parse_rational(o.window.substr(0, colon)), hi = parse_rational(o.window.substr(colon + 1));
    SpectrumReport S = spectrum(T, D, lo, hi);
    r.add("mu", join(D.mu));
    r.add("twisted", D.twisted);
    r.add("window", to_string(lo) + ":" + to_string(hi));
    r.add("supports", supports_text(feasible_supports(T)));
    for (std::size_t i = 0; i < S.progressions.size(); ++i) {
        const auto& P = S.progressions[i];
        std::string key = "progression." + std::to_string(i + 1);
        r.add(key + ".support", one_based(P.support));
        r.add(key + ".residue", P.residue());
        r.add(key + ".step", P.step);
    }
    r.add("values", std::to_string(S.values.size()));
    for (std::size_t i = 0; i < S.values.size(); ++i) {
        r.add("value." + std::to_string(i + 1), S.values[i].s);
        r.add("value." + std::to_string(i + 1) + ".supports", supports_text(S.values[i].supports));
    }
    r.add("period_check", S.period_check);
    if (!o.nu.empty()) {
        PeriodCount C = count_in_period(T, D, parse_rational(o.nu));
        r.add("count_in_period", std::to_string(C.count()));
        r.add("period_values", join(C.values));
        r.add("boundary", C.boundary);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric prequantization toolkit: Delzant data, kernel modules, translated spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

    struct Command {
        const char* name;
        const char* help;
        void (*run)(const Options&, Report&);
    };
    const Command commands[] = {
        {"validate", "check compactness and smoothness", cmd_validate},
        {"data", "toric data: kappa, iota, p, chern, N_M, k0, b", cmd_data},
        {"spectrum-quadform", "spectrum of the assembled generating quadratic form", cmd_quadform},
        {"kernel", "kernel module J*(nu) and membership queries", cmd_kernel},
        {"min-degree", "minimal-degree element outside J*_K0(nu)", cmd_min_degree},
        {"bound", "lower bound N_M on translated points, with certificate", cmd_bound},
        {"spectrum", "translated spectrum of a twisted diagonal map", cmd_spectrum},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("file", o.file, "polytope file")->required();
        subs.push_back(sub);
    }
    auto find = [&](const char* name) { return app.get_subcommand(name); };
    find("spectrum-quadform")->add_option("--lambda", o.lambda, "point of k, comma separated rationals");
    find("spectrum-quadform")->add_option("--N", o.N, "number of factors N = N1 + N2")->check(CLI::PositiveNumber);
    find("spectrum-quadform")->add_option("--N1", o.N1, "factors from the Hamiltonian part");
    find("spectrum-quadform")->add_flag("--numeric", o.numeric, "add a floating-point cross-check block");
    for (const char* name : {"kernel", "min-degree"}) {
        find(name)->add_option("--nu", o.nu, "level");
        find(name)->add_option("--W", o.W, "generator window")->check(CLI::PositiveNumber);
    }
    CLI::App* kernel = find("kernel");
    kernel->add_option("--variant", o.variant, "K or K0");
    kernel->add_option("--query", o.query, "exponent vector or Laurent polynomial in u1..un");
    kernel->add_option("--backend", o.backend, "groebner, brute or both");
    kernel->add_option("--D", o.D, "degree bound of the brute backend")->check(CLI::NonNegativeNumber);
    kernel->add_option("--c-minus", o.c_minus, "lower Hamiltonian bound (bounding modules)");
    kernel->add_option("--c-plus", o.c_plus, "upper Hamiltonian bound (bounding modules)");
    CLI::App* spectrum_cmd = find("spectrum");
    spectrum_cmd->add_option("--mu", o.mu, "rotation vector, comma separated rationals");
    spectrum_cmd->add_option("--window", o.window, "closed window lo:hi");
    spectrum_cmd->add_option("--nu", o.nu, "count values in [nu, nu+1)");
    spectrum_cmd->add_flag("--untwisted", o.untwisted, "drop the -Id twist");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const Format format = o.format == "machine" ? Format::machine : Format::human;
    Report report;
    int status = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i]->parsed())
            continue;
        report.comment("prequant " + std::string(commands[i].name));
        report.add("command", commands[i].name);
        try {
            commands[i].run(o, report);
            report.add("result", "ok");
        } catch (const HypothesisError& e) {
            const std::string& h = e.hypothesis();
            report.add("result", h == "NoMinimalElement" || h == "Inconclusive" ? h : std::string("HypothesisFailure"));
            report.add("hypothesis", h);
            report.add("message", std::string(e.what()));
            status = 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
    std::cout << report.render(format);
    return status;
}
