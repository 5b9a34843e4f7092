#include "hopfkiss/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>

#include "hopfkiss/config_file.hpp"
#include "hopfkiss/constructions.hpp"
#include "hopfkiss/lattice.hpp"

namespace hopfkiss {

using nlohmann::json;

namespace {

ExactScalar frac(long p, long q) { return ExactScalar::fraction(p, q); }

json check(const std::string& name, bool pass, const std::string& detail = {}) {
    json c = {{"check", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    return c;
}

json witness_json(const Configuration& config, std::size_t i, std::size_t j, const ExactScalar& value) {
    return {{"first", i},
            {"second", j},
            {"dot", value.to_string()},
            {"dot_approx", value.to_double()},
            {"first_fiber", config.label(i).to_string()},
            {"second_fiber", config.label(j).to_string()}};
}

std::string spectrum_text(const std::map<ExactScalar, std::uint32_t>& s) {
    std::string out = "{";
    for (const auto& [v, c] : s) {
        if (out.size() > 1) out += ", ";
        out += v.to_string() + ": " + std::to_string(c);
    }
    return out + "}";
}

struct LatticeOutcome {
    std::optional<LatticeReport> report;
    std::string error;
    ExactScalar scale;
};

LatticeOutcome lattice_of(const Configuration& config, const AnalysisReport& analysis) {
    LatticeOutcome out;
    try {
        out.scale = integral_scale(analysis.values);
        out.report = gram_and_basis(config, out.scale);
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

std::optional<TargetExpectation> expectation_for(const std::string& name) {
    if (name == "cell24") {
        return TargetExpectation{name, 24, 8,
                                 {{frac(1, 2), 8}, {frac(0, 1), 6}, {frac(-1, 2), 8}, {frac(-1, 1), 1}},
                                 0, 2, 4};
    }
    if (name == "e8") {
        return TargetExpectation{name, 240, 56,
                                 {{frac(1, 2), 56}, {frac(0, 1), 126}, {frac(-1, 2), 56}, {frac(-1, 1), 1}},
                                 8, 6, 8};
    }
    if (name == "lambda16") {
        return TargetExpectation{name,
                                 4320,
                                 280,
                                 {{frac(1, 2), 280},
                                  {frac(1, 4), 1024},
                                  {frac(0, 1), 1710},
                                  {frac(-1, 4), 1024},
                                  {frac(-1, 2), 280},
                                  {frac(-1, 1), 1}},
                                 56,
                                 14,
                                 16};
    }
    return std::nullopt;
}

Configuration build_target(const std::string& target, const std::string& method, unsigned workers) {
    const BuildOptions options{workers};
    if (method == "hopf") {
        if (target == "cell24") return cell24_hopf(options);
        if (target == "e8") return e8_hopf(options);
        if (target == "lambda16") return lambda16_hopf(options);
    } else if (method == "canonical") {
        if (target == "cell24") return cell24_standard();
        if (target == "e8") return e8_canonical();
        if (target == "lambda16") return bw16_canonical();
    } else {
        throw InputError("unknown method '" + method + "' (expected hopf or canonical)");
    }
    throw InputError("unknown target '" + target + "' (expected cell24, e8 or lambda16)");
}

int cmd_build(const std::string& target, const std::string& method, const std::filesystem::path& out_path,
              const CommandIO& io) {
    try {
        const Configuration config = build_target(target, method, io.workers);
        write_config_file(out_path, config);
        io.out << target << " (" << method << "): " << config.size() << " points -> " << out_path.string()
               << "\n";
        return kExitOk;
    } catch (const ConstructionError& e) {
        json failure = {{"error", e.what()},
                        {"witness", {{"first", e.first()}, {"second", e.second()}, {"dot", e.value().to_string()}}}};
        io.err << failure.dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        io.err << "build: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_verify(const std::filesystem::path& path, const CommandIO& io) {
    LoadedConfig loaded;
    try {
        loaded = read_config_file(path);
    } catch (const std::exception& e) {
        io.err << "verify: " << e.what() << "\n";
        return kExitUsage;
    }
    const Configuration& config = loaded.config;
    const AnalysisOptions options{io.workers};
    json checks = json::array();
    json report = {{"file", path.string()}, {"name", config.meta().name}, {"method", config.meta().method}};

    checks.push_back(check("canonical_order", loaded.canonical_order));
    const auto violation = config.invariant_violation();
    checks.push_back(check("unit_distinct_antipodal", !violation, violation.value_or("")));

    const auto kissing = assert_kissing(config, options);
    checks.push_back(check("kissing", kissing.kissing));
    if (!kissing.kissing) {
        report["witness"] = witness_json(config, *kissing.first, *kissing.second, *kissing.value);
    }

    const AnalysisReport analysis = analyze(config, options);
    report["analysis"] = report_to_json(analysis);

    if (const auto expected = expectation_for(config.meta().name)) {
        checks.push_back(check("point_count", config.size() == expected->point_count,
                               std::to_string(config.size()) + " points"));
        const auto neighbors = analysis.uniform_neighbor_count();
        checks.push_back(check("neighbor_count",
                               neighbors && *neighbors == expected->neighbor_count &&
                                   analysis.max_offdiag_dot == frac(1, 2),
                               neighbors ? std::to_string(*neighbors) + " at " +
                                               analysis.max_offdiag_dot.to_string()
                                         : "non-uniform"));
        const auto spectrum = analysis.uniform_point_spectrum();
        checks.push_back(check("point_spectrum", spectrum && *spectrum == expected->point_spectrum,
                               spectrum ? spectrum_text(*spectrum) : "non-uniform"));
        if (config.meta().method == "hopf") {
            const bool mapped = fibers_consistent(config);
            checks.push_back(check("fibers_map_to_base", mapped));
            const auto d = uniform_decomposition(config, analysis);
            const bool ok = d && d->own_fiber == expected->own_fiber && d->antipodal_fiber == 0 &&
                            d->per_other_fiber == expected->per_other_fiber &&
                            d->other_fiber_count == expected->other_fibers &&
                            d->total == d->own_fiber + d->per_other_fiber * d->other_fiber_count;
            checks.push_back(check("fiber_decomposition", ok,
                                   d ? std::to_string(d->total) + " = " + std::to_string(d->own_fiber) + " + " +
                                           std::to_string(d->per_other_fiber) + " x " +
                                           std::to_string(d->other_fiber_count)
                                     : "non-uniform"));
        }
    }

    bool pass = true;
    for (const auto& c : checks) pass = pass && c.at("pass").get<bool>();
    report["checks"] = std::move(checks);
    report["status"] = pass ? "pass" : "fail";
    io.out << report.dump(2) << "\n";
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_compare(const std::filesystem::path& a_path, const std::filesystem::path& b_path, const CommandIO& io) {
    LoadedConfig a;
    LoadedConfig b;
    try {
        a = read_config_file(a_path);
        b = read_config_file(b_path);
    } catch (const std::exception& e) {
        io.err << "compare: " << e.what() << "\n";
        return kExitUsage;
    }
    const AnalysisOptions options{io.workers};
    json differences = json::array();
    auto differ = [&](const std::string& field, const json& va, const json& vb) {
        if (va != vb) differences.push_back({{"field", field}, {"a", va}, {"b", vb}});
    };

    differ("point_count", a.config.size(), b.config.size());
    differ("ambient_dim", a.config.ambient_dim(), b.config.ambient_dim());
    const auto ra = analyze(a.config, options);
    const auto rb = analyze(b.config, options);
    if (!spectra_equal(ra, rb)) {
        differences.push_back({{"field", "dot_spectrum"},
                               {"a", report_to_json(ra)["dot_spectrum"]},
                               {"b", report_to_json(rb)["dot_spectrum"]}});
    }
    const auto la = lattice_of(a.config, ra);
    const auto lb = lattice_of(b.config, rb);
    json lattice = json::object();
    if (la.report && lb.report) {
        differ("lattice.rank", la.report->rank, lb.report->rank);
        differ("lattice.determinant", la.report->determinant.get_str(), lb.report->determinant.get_str());
        differ("lattice.even", la.report->even, lb.report->even);
        differ("lattice.scale", la.scale.to_string(), lb.scale.to_string());
        lattice = {{"scale", la.scale.to_string()},
                   {"rank", la.report->rank},
                   {"determinant", la.report->determinant.get_str()},
                   {"even", la.report->even}};
    } else {
        differences.push_back({{"field", "lattice"},
                               {"a", la.report ? json("ok") : json(la.error)},
                               {"b", lb.report ? json("ok") : json(lb.error)}});
    }
    const bool equal = differences.empty();
    json out = {{"a", a_path.string()}, {"b", b_path.string()}, {"equal", equal}, {"differences", differences}};
    if (equal) out["lattice"] = lattice;
    io.out << out.dump(2) << "\n";
    return equal ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const std::filesystem::path& path, const RenderSpec& spec, const std::filesystem::path& out_path,
               bool per_frame, const CommandIO& io) {
    try {
        const auto loaded = read_config_file(path);
        if (per_frame) {
            std::filesystem::create_directories(out_path);
            const auto docs = render_frames(loaded.config, spec);
            for (std::size_t f = 0; f < docs.size(); ++f) {
                char name[32];
                std::snprintf(name, sizeof name, "frame_%03zu.svg", f);
                write_text_file(out_path / name, docs[f]);
            }
            io.out << docs.size() << " frames -> " << out_path.string() << "\n";
        } else {
            write_text_file(out_path, render_svg(loaded.config, spec));
            io.out << spec.frame_count << " frames -> " << out_path.string() << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        io.err << "render: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_export(const std::filesystem::path& path, const std::string& format, const std::filesystem::path& out_path,
               const CommandIO& io) {
    try {
        if (format != "csv") throw InputError("unsupported export format '" + format + "'");
        const auto loaded = read_config_file(path);
        write_text_file(out_path, export_csv(loaded.config));
        io.out << loaded.config.size() << " rows -> " << out_path.string() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        io.err << "export: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_experiment_e5(int fiber_size, const CommandIO& io) {
    ExperimentReport result;
    try {
        result = experiment_e5_lift(fiber_size, {}, AnalysisOptions{io.workers});
    } catch (const std::exception& e) {
        io.err << "experiment-e5: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto& a = result.analysis;
    io.out << "E5 lift: 40 base points on S^4 x " << fiber_size << " fiber points -> " << a.point_count
           << " points on S^7\n";
    io.out << "max off-diagonal dot: " << a.max_offdiag_dot.to_string() << " ~ " << a.max_offdiag_dot.to_double()
           << "\n";
    io.out << "kissing (all dots <= 1/2): " << (result.kissing.kissing ? "yes" : "no") << "\n";
    if (!result.kissing.kissing) {
        io.out << "witness: points " << *result.kissing.first << " and " << *result.kissing.second << " at dot "
               << result.kissing.value->to_string() << "\n";
        io.out << "note: with these fiber points the 40-point D5 configuration does not lift to a kissing "
                  "configuration on S^7\n";
    }
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hopf-map constructions of the 24-cell, E8 and Lambda16 kissing configurations"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "Worker threads (0 = all cores)");

    std::string target;
    std::string method;
    std::string path;
    std::string path_b;
    std::string out_path;

    auto* build = app.add_subcommand("build", "Build a configuration and write it as JSON");
    build->add_option("target", target, "cell24 | e8 | lambda16")->required()->check(CLI::IsMember({"cell24", "e8", "lambda16"}));
    build->add_option("method", method, "hopf | canonical")->required()->check(CLI::IsMember({"hopf", "canonical"}));
    build->add_option("-o,--out", out_path, "Output JSON file")->required();

    auto* verify = app.add_subcommand("verify", "Check kissing property and invariants of a configuration file");
    verify->add_option("path", path)->required();

    auto* compare = app.add_subcommand("compare", "Compare dot spectra and lattice invariants of two files");
    compare->add_option("a", path)->required();
    compare->add_option("b", path_b)->required();

    RenderSpec spec;
    std::vector<std::size_t> plane;
    std::vector<std::size_t> axes;
    bool per_frame = false;
    auto* render = app.add_subcommand("render", "Render rotating parallel projections as SVG");
    render->add_option("path", path)->required();
    render->add_option("--frames", spec.frame_count, "Number of views")->check(CLI::PositiveNumber);
    render->add_option("--plane", plane, "Rotation plane axes i j")->expected(2);
    render->add_option("--axes", axes, "Projection axes i j")->expected(2);
    render->add_option("--size", spec.frame_width, "Frame size in pixels")->check(CLI::PositiveNumber);
    render->add_option("--radius", spec.marker_radius, "Marker radius in pixels")->check(CLI::PositiveNumber);
    render->add_flag("--per-frame", per_frame, "Write frame_NNN.svg files into the output directory");
    render->add_option("-o,--out", out_path, "Output SVG (or directory with --per-frame)")->required();

    std::string format = "csv";
    auto* exporter = app.add_subcommand("export", "Export float coordinates");
    exporter->add_option("path", path)->required();
    exporter->add_option("--format", format, "Export format")->check(CLI::IsMember({"csv"}));
    exporter->add_option("-o,--out", out_path, "Output file")->required();

    int fiber_size = 4;
    auto* experiment = app.add_subcommand("experiment-e5", "Try lifting the 40-point D5 configuration to S^7");
    experiment->add_option("--fiber-size", fiber_size, "Fiber points per base point (1, 2, 4 or 8)")
        ->check(CLI::IsMember({1, 2, 4, 8}));

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const CommandIO io{out, err, workers};
    if (!plane.empty()) spec.plane = {plane[0], plane[1]};
    if (!axes.empty()) spec.projection_axes = {axes[0], axes[1]};
    spec.frame_height = spec.frame_width;

    try {
        if (*build) return cmd_build(target, method, out_path, io);
        if (*verify) return cmd_verify(path, io);
        if (*compare) return cmd_compare(path, path_b, io);
        if (*render) return cmd_render(path, spec, out_path, per_frame, io);
        if (*exporter) return cmd_export(path, format, out_path, io);
        if (*experiment) return cmd_experiment_e5(fiber_size, io);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hopfkiss
