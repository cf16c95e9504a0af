#include <clocale>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "macroscopality/config.hpp"
#include "macroscopality/errors.hpp"
#include "macroscopality/orthogonality.hpp"
#include "macroscopality/scenarios.hpp"
#include "macroscopality/spectrum.hpp"

namespace {

using namespace macroscopality;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string criterion_name(const Criterion& c) {
    if (std::holds_alternative<FirstZero>(c)) return "first_zero";
    if (std::holds_alternative<Threshold>(c)) return "threshold";
    return "auto";
}

std::string width_kind_name(WidthKind kind) {
    return kind == WidthKind::stddev ? "stddev" : "fwhm";
}

int cmd_paper(bool as_json) {
    const std::vector<ScenarioResult> rows = run_all_paper();
    if (as_json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const ScenarioResult& r : rows) {
            nlohmann::ordered_json row;
            row["name"] = r.name;
            row["theta_sing"] = r.theta_sing;
            row["theta_sup"] = r.theta_sup;
            row["m_paper"] = r.m_paper;
            row["m_numeric"] = r.m_numeric;
            if (r.report) {
                row["criterion_used"] = {
                    {"sup", criterion_name(r.report->sup_criterion_used)},
                    {"ref", criterion_name(r.report->ref_criterion_used)}};
                row["width_kind"] = width_kind_name(r.report->width_kind);
                row["peaks"] = {{"a1", r.report->peaks.a1},
                                {"a2", r.report->peaks.a2}};
                row["m_width"] = r.report->m_width;
            }
            nlohmann::ordered_json details;
            for (const auto& [key, value] : r.details) details[key] = value;
            row["details"] = std::move(details);
            row["notes"] = r.notes;
            doc.push_back(std::move(row));
        }
        std::printf("%s\n", doc.dump(2).c_str());
        return 0;
    }
    std::printf("%-14s %14s %14s %12s %12s\n", "name", "theta_sing",
                "theta_sup", "m_paper", "m_numeric");
    for (const ScenarioResult& r : rows)
        std::printf("%-14s %14.6g %14.6g %12.6g %12.6g\n", r.name.c_str(),
                    r.theta_sing, r.theta_sup, r.m_paper, r.m_numeric);
    return 0;
}

int cmd_scan(const std::string& config_path, std::optional<double> theta_max,
             int n_points, const std::string& out_path) {
    const LoadedScenario scenario = load_scenario(config_path);
    std::optional<double> window = theta_max;
    if (!window) window = scenario.theta_max;
    double limit;
    if (window) {
        limit = *window;
    } else {
        // Default to the same window first_orthogonality would scan.
        const Moments m = moments(scenario.sup);
        if (!(m.stddev > 0.0))
            throw NoOrthogonality("point-mass spectrum keeps overlap at one");
        limit = 50.0 / m.stddev;
    }
    const OverlapCurve curve = scan_overlap(scenario.sup, limit, n_points);

    std::FILE* out = stdout;
    std::FILE* opened = nullptr;
    if (out_path != "-") {
        opened = std::fopen(out_path.c_str(), "wb");
        if (!opened)
            throw ConfigError("cannot open output file '" + out_path + "'");
        out = opened;
    }
    std::fprintf(out, "theta,overlap\n");
    for (std::size_t i = 0; i < curve.thetas.size(); ++i)
        std::fprintf(out, "%s,%s\n", fmt(curve.thetas[i]).c_str(),
                     fmt(curve.magnitudes[i]).c_str());
    if (opened) std::fclose(opened);
    return 0;
}

int cmd_measure(const std::string& config_path,
                const std::string& criterion_flag,
                std::optional<double> level_flag) {
    const LoadedScenario scenario = load_scenario(config_path);
    Criterion criterion = scenario.criterion;
    if (criterion_flag == "first-zero") {
        criterion = FirstZero{};
    } else if (criterion_flag == "threshold") {
        Threshold t;
        if (level_flag) t.level = *level_flag;
        criterion = t;
    } else if (criterion_flag == "auto") {
        criterion = Auto{};
    } else if (level_flag) {
        criterion = Threshold{*level_flag};
    }
    const Spectrum ref = reference_for(scenario);
    const MacroscopalityReport report = macroscopality::macroscopality(
        scenario.sup, ref, criterion, scenario.width_kind);
    std::printf("name = %s\n", scenario.type.c_str());
    std::printf("theta_sing = %s\n", fmt(report.theta_sing).c_str());
    std::printf("theta_sup = %s\n", fmt(report.theta_sup).c_str());
    std::printf("m_numeric = %s\n", fmt(report.m_numeric).c_str());
    std::printf("m_width = %s\n", fmt(report.m_width).c_str());
    std::printf("width_kind = %s\n", width_kind_name(report.width_kind).c_str());
    std::printf("peak_a1 = %s\n", fmt(report.peaks.a1).c_str());
    std::printf("peak_a2 = %s\n", fmt(report.peaks.a2).c_str());
    std::printf("peak_width = %s\n", fmt(report.peaks.width).c_str());
    std::printf("ref_width = %s\n", fmt(report.ref_width).c_str());
    std::printf("criterion_sup = %s\n",
                criterion_name(report.sup_criterion_used).c_str());
    std::printf("criterion_ref = %s\n",
                criterion_name(report.ref_criterion_used).c_str());
    return 0;
}

int cmd_peaks(const std::string& config_path) {
    const LoadedScenario scenario = load_scenario(config_path);
    const PeakSummary peaks = detect_peaks(scenario.sup);
    std::printf("a1 = %s\n", fmt(peaks.a1).c_str());
    std::printf("a2 = %s\n", fmt(peaks.a2).c_str());
    std::printf("separation = %s\n", fmt(peaks.a2 - peaks.a1).c_str());
    std::printf("peak_width = %s\n", fmt(peaks.width).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Interferometric macroscopality of superposition spectra"};
    app.require_subcommand(1);

    CLI::App* paper =
        app.add_subcommand("paper", "Reference table of the built-in case "
                                    "studies");
    bool as_json = false;
    paper->add_flag("--json", as_json, "Structured output");

    CLI::App* scan = app.add_subcommand(
        "scan", "Write the overlap curve of the configured spectrum as CSV");
    std::string scan_config;
    std::optional<double> scan_theta_max;
    int scan_points = 1001;
    std::string scan_out = "-";
    scan->add_option("--config", scan_config, "Scenario file")->required();
    scan->add_option("--theta-max", scan_theta_max,
                     "Upper end of the theta grid");
    scan->add_option("--points", scan_points, "Number of theta samples")
        ->check(CLI::Range(2, 100000000));
    scan->add_option("--out", scan_out, "Output file, '-' for stdout");

    CLI::App* measure = app.add_subcommand(
        "measure", "Macroscopality report of the configured scenario");
    std::string measure_config;
    std::string measure_criterion;
    std::optional<double> measure_level;
    measure->add_option("--config", measure_config, "Scenario file")
        ->required();
    measure->add_option("--criterion", measure_criterion,
                        "auto | first-zero | threshold")
        ->check(CLI::IsMember({"auto", "first-zero", "threshold"}));
    measure->add_option("--level", measure_level,
                        "Overlap level for the threshold criterion")
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));

    CLI::App* peaks =
        app.add_subcommand("peaks", "Peak positions and width of the "
                                    "configured spectrum");
    std::string peaks_config;
    peaks->add_option("--config", peaks_config, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (!measure_criterion.empty() && measure_criterion == "first-zero" &&
        measure_level) {
        std::fprintf(stderr, "--level applies to --criterion threshold\n");
        return 1;
    }

    try {
        if (paper->parsed()) return cmd_paper(as_json);
        if (scan->parsed())
            return cmd_scan(scan_config, scan_theta_max, scan_points, scan_out);
        if (measure->parsed())
            return cmd_measure(measure_config, measure_criterion,
                               measure_level);
        if (peaks->parsed()) return cmd_peaks(peaks_config);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    }
    return 0;
}
