#include "macroscopality/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "macroscopality/errors.hpp"
#include "macroscopality/scenarios.hpp"
#include "macroscopality/states.hpp"

namespace macroscopality {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct ConfigValue {
    enum class Kind { number, text, array };
    Kind kind = Kind::number;
    double number = 0.0;
    std::string text;
    std::vector<double> array;
    int line = 0;
    bool consumed = false;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(k[0])) || k[0] == '_'))
        return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

double parse_number(const std::string& token, const std::string& where) {
    const std::string t = trim(token);
    if (t.empty()) throw ConfigError(where + ": empty numeric value");
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + t.size())
        throw ConfigError(where + ": cannot parse number '" + t + "'");
    if (!std::isfinite(v))
        throw ConfigError(where + ": number '" + t + "' is not finite");
    return v;
}

class ConfigMap {
public:
    explicit ConfigMap(std::string origin) : origin_(std::move(origin)) {}

    const std::string& origin() const { return origin_; }

    std::string at_line(int line) const {
        return origin_ + ":" + std::to_string(line);
    }

    void insert(const std::string& key, ConfigValue value) {
        auto [it, inserted] = values_.emplace(key, std::move(value));
        if (!inserted)
            throw ConfigError(at_line(value.line) + ": duplicate key '" + key +
                              "' (first set on line " +
                              std::to_string(it->second.line) + ")");
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::optional<double> opt_number(const std::string& key) {
        ConfigValue* v = fetch(key);
        if (!v) return std::nullopt;
        if (v->kind != ConfigValue::Kind::number)
            throw ConfigError(at_line(v->line) + ": key '" + key +
                              "' must be a number");
        return v->number;
    }

    double number(const std::string& key) {
        auto v = opt_number(key);
        if (!v)
            throw ConfigError(origin_ + ": missing required key '" + key + "'");
        return *v;
    }

    std::optional<int> opt_integer(const std::string& key) {
        auto v = opt_number(key);
        if (!v) return std::nullopt;
        const double r = std::round(*v);
        if (std::fabs(*v - r) > 1e-9 || std::fabs(r) > 2.0e9)
            throw ConfigError(origin_ + ": key '" + key +
                              "' must be an integer");
        return static_cast<int>(r);
    }

    int integer(const std::string& key) {
        auto v = opt_integer(key);
        if (!v)
            throw ConfigError(origin_ + ": missing required key '" + key + "'");
        return *v;
    }

    std::optional<std::string> opt_text(const std::string& key) {
        ConfigValue* v = fetch(key);
        if (!v) return std::nullopt;
        if (v->kind != ConfigValue::Kind::text)
            throw ConfigError(at_line(v->line) + ": key '" + key +
                              "' must be a quoted string");
        return v->text;
    }

    std::string text(const std::string& key) {
        auto v = opt_text(key);
        if (!v)
            throw ConfigError(origin_ + ": missing required key '" + key + "'");
        return *v;
    }

    std::optional<std::vector<double>> opt_array(const std::string& key) {
        ConfigValue* v = fetch(key);
        if (!v) return std::nullopt;
        if (v->kind != ConfigValue::Kind::array)
            throw ConfigError(at_line(v->line) + ": key '" + key +
                              "' must be an array [ ... ]");
        return v->array;
    }

    std::vector<double> array(const std::string& key) {
        auto v = opt_array(key);
        if (!v)
            throw ConfigError(origin_ + ": missing required key '" + key + "'");
        return *v;
    }

    // Every recognized key must have been fetched by now.
    void check_all_consumed() const {
        for (const auto& [key, value] : values_)
            if (!value.consumed)
                throw ConfigError(at_line(value.line) + ": unknown key '" +
                                  key + "'");
    }

private:
    ConfigValue* fetch(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    std::map<std::string, ConfigValue> values_;
    std::string origin_;
};

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    ConfigMap cfg(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Strip a comment, respecting quoted strings.
        bool in_quote = false;
        std::string body;
        for (char c : line) {
            if (c == '"') in_quote = !in_quote;
            if (c == '#' && !in_quote) break;
            body.push_back(c);
        }
        body = trim(body);
        if (body.empty()) continue;
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(cfg.at_line(line_no) +
                              ": expected 'key = value', got '" + body + "'");
        const std::string key = trim(body.substr(0, eq));
        if (!valid_key(key))
            throw ConfigError(cfg.at_line(line_no) + ": bad key '" + key + "'");
        const std::string raw = trim(body.substr(eq + 1));
        if (raw.empty())
            throw ConfigError(cfg.at_line(line_no) + ": key '" + key +
                              "' has no value");
        ConfigValue value;
        value.line = line_no;
        if (raw.front() == '"') {
            if (raw.size() < 2 || raw.back() != '"')
                throw ConfigError(cfg.at_line(line_no) +
                                  ": unterminated string for key '" + key + "'");
            value.kind = ConfigValue::Kind::text;
            value.text = raw.substr(1, raw.size() - 2);
        } else if (raw.front() == '[') {
            if (raw.back() != ']')
                throw ConfigError(cfg.at_line(line_no) +
                                  ": unterminated array for key '" + key + "'");
            value.kind = ConfigValue::Kind::array;
            const std::string inner = trim(raw.substr(1, raw.size() - 2));
            if (!inner.empty()) {
                std::stringstream ss(inner);
                std::string token;
                while (std::getline(ss, token, ','))
                    value.array.push_back(
                        parse_number(token, cfg.at_line(line_no)));
            }
        } else {
            value.kind = ConfigValue::Kind::number;
            value.number = parse_number(raw, cfg.at_line(line_no));
        }
        cfg.insert(key, std::move(value));
    }
    return cfg;
}

// Two numeric columns a,p; an optional header line is skipped.
std::pair<std::vector<double>, std::vector<double>> load_csv_pairs(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open csv file '" + path + "'");
    std::vector<double> a;
    std::vector<double> p;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty()) continue;
        const std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected two comma-separated columns");
        const std::string first = trim(body.substr(0, comma));
        const std::string second = trim(body.substr(comma + 1));
        char* end = nullptr;
        std::strtod(first.c_str(), &end);
        if (line_no == 1 && end == first.c_str()) continue;  // header
        a.push_back(parse_number(first, path + ":" + std::to_string(line_no)));
        p.push_back(parse_number(second, path + ":" + std::to_string(line_no)));
    }
    if (a.empty()) throw ConfigError(path + ": no data rows");
    return {std::move(a), std::move(p)};
}

Criterion parse_criterion(ConfigMap& cfg) {
    const std::string name = cfg.opt_text("criterion").value_or("auto");
    const auto tol_zero = cfg.opt_number("tol_zero");
    const auto level = cfg.opt_number("level");
    const auto in_unit = [&](const char* key, double v) {
        if (!(v > 0.0 && v < 1.0))
            throw ConfigError(cfg.origin() + ": key '" + std::string(key) +
                              "' must lie strictly between 0 and 1");
    };
    if (tol_zero) in_unit("tol_zero", *tol_zero);
    if (level) in_unit("level", *level);
    if (name == "auto") {
        if (tol_zero || level)
            throw ConfigError(cfg.origin() +
                              ": 'tol_zero'/'level' require an explicit "
                              "criterion, not \"auto\"");
        return Auto{};
    }
    if (name == "first-zero" || name == "first_zero") {
        if (level)
            throw ConfigError(cfg.origin() +
                              ": 'level' applies to criterion \"threshold\"");
        FirstZero c;
        if (tol_zero) c.tol_zero = *tol_zero;
        return c;
    }
    if (name == "threshold") {
        if (tol_zero)
            throw ConfigError(cfg.origin() +
                              ": 'tol_zero' applies to criterion "
                              "\"first-zero\"");
        Threshold c;
        if (level) c.level = *level;
        return c;
    }
    throw ConfigError(cfg.origin() + ": unknown criterion '" + name +
                      "' (expected auto, first-zero, or threshold)");
}

WidthKind parse_width_kind(ConfigMap& cfg) {
    const std::string name = cfg.opt_text("width_kind").value_or("stddev");
    if (name == "stddev") return WidthKind::stddev;
    if (name == "fwhm") return WidthKind::fwhm;
    throw ConfigError(cfg.origin() + ": unknown width_kind '" + name +
                      "' (expected stddev or fwhm)");
}

DiscreteSpectrum custom_discrete_from(ConfigMap& cfg) {
    const auto csv = cfg.opt_text("csv");
    std::vector<double> eigenvalues;
    std::vector<double> weights;
    if (csv) {
        if (cfg.has("eigenvalues") || cfg.has("weights"))
            throw ConfigError(cfg.origin() +
                              ": give either 'csv' or inline arrays, not both");
        std::tie(eigenvalues, weights) = load_csv_pairs(*csv);
    } else {
        eigenvalues = cfg.array("eigenvalues");
        weights = cfg.array("weights");
    }
    if (eigenvalues.size() != weights.size())
        throw ConfigError(cfg.origin() +
                          ": eigenvalues and weights differ in length");
    if (eigenvalues.empty())
        throw ConfigError(cfg.origin() + ": spectrum is empty");
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0))
        throw ConfigError(cfg.origin() + ": weights must have positive sum");
    std::vector<SpectralPoint> pts(eigenvalues.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = {eigenvalues[i], weights[i] / total};
    return DiscreteSpectrum(std::move(pts));
}

GridDensity custom_density_from(ConfigMap& cfg) {
    const auto csv = cfg.opt_text("csv");
    double a_min = 0.0;
    double a_max = 0.0;
    std::vector<double> values;
    if (csv) {
        if (cfg.has("a_min") || cfg.has("a_max") || cfg.has("values"))
            throw ConfigError(cfg.origin() +
                              ": give either 'csv' or inline values, not both");
        auto [positions, heights] = load_csv_pairs(*csv);
        if (positions.size() < 2)
            throw ConfigError(*csv + ": need at least two rows");
        a_min = positions.front();
        a_max = positions.back();
        const double span = a_max - a_min;
        if (!(span > 0.0))
            throw ConfigError(*csv + ": positions must increase");
        const double h = span / static_cast<double>(positions.size() - 1);
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (std::fabs(positions[i] - (a_min + h * i)) > 1e-9 * span)
                throw ConfigError(*csv +
                                  ": positions must be uniformly spaced");
        values = std::move(heights);
    } else {
        a_min = cfg.number("a_min");
        a_max = cfg.number("a_max");
        values = cfg.array("values");
    }
    if (values.size() < 2)
        throw ConfigError(cfg.origin() + ": density needs at least two values");
    const double h = (a_max - a_min) / static_cast<double>(values.size() - 1);
    double mass = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double w = (i == 0 || i + 1 == values.size()) ? 0.5 : 1.0;
        mass += w * values[i];
    }
    mass *= h;
    if (!(mass > 0.0))
        throw ConfigError(cfg.origin() + ": density mass must be positive");
    for (double& v : values) v /= mass;
    return GridDensity(a_min, a_max, std::move(values));
}

}  // namespace

LoadedScenario load_scenario(const std::string& path) {
    ConfigMap cfg = parse_config_file(path);
    // Placeholder spectrum; every type branch below replaces it.
    LoadedScenario out{std::string(), DiscreteSpectrum({{0.0, 1.0}}),
                       std::nullopt,  Auto{},
                       WidthKind::stddev, std::nullopt};
    out.type = cfg.text("type");
    out.criterion = parse_criterion(cfg);
    out.width_kind = parse_width_kind(cfg);
    if (auto tm = cfg.opt_number("theta_max")) {
        if (!(*tm > 0.0))
            throw ConfigError(cfg.origin() + ": theta_max must be positive");
        out.theta_max = *tm;
    }

    if (out.type == "fock_cat") {
        const int n = cfg.integer("n");
        out.sup = fock_cat_spectrum(n);
        out.ref = coherent_halfdiff_spectrum(static_cast<double>(n));
    } else if (out.type == "qubit") {
        const int n = cfg.integer("n_qubits");
        const double eps = cfg.number("eps");
        const double phi = cfg.opt_number("phi").value_or(kPi / 4.0);
        out.sup = qubit_superposition_spectrum({phi, eps, n});
        out.ref = qubit_product_spectrum(n, phi + eps / 2.0);
    } else if (out.type == "ghz") {
        GhzSpectra spectra = ghz_spectra(cfg.integer("n_qubits"));
        out.sup = std::move(spectra.sup);
        out.ref = std::move(spectra.ref);
    } else if (out.type == "coherent_cat") {
        const CoherentCatParams params{cfg.number("alpha_abs"),
                                       cfg.number("phi")};
        const bool has_grid =
            cfg.has("a_min") || cfg.has("a_max") || cfg.has("n_points");
        if (has_grid) {
            const GridSpec grid{cfg.number("a_min"), cfg.number("a_max"),
                                cfg.integer("n_points")};
            out.sup = coherent_cat_quadrature_density(params, grid);
        } else {
            out.sup = coherent_cat_quadrature_density(params);
        }
        out.ref = gaussian_density(0.0, 0.5);
    } else if (out.type == "molecule") {
        MoleculeParams params;
        if (auto v = cfg.opt_number("slit_width")) params.slit_width = *v;
        if (auto v = cfg.opt_number("grating_period")) params.grating_period = *v;
        if (auto v = cfg.opt_number("screen_distance"))
            params.screen_distance = *v;
        if (auto v = cfg.opt_number("velocity")) params.velocity = *v;
        if (auto v = cfg.opt_number("mass_amu")) params.mass_amu = *v;
        if (auto v = cfg.opt_number("measured_node")) params.measured_node = *v;
        if (!(params.slit_width > 0.0 &&
              params.grating_period > params.slit_width))
            throw ConfigError(cfg.origin() +
                              ": need 0 < slit_width < grating_period");
        // Aperture spectra in the conjugate variable, as in the scenario.
        out.sup = slit_aperture_density(
            {{-params.grating_period / 2.0, params.slit_width},
             {params.grating_period / 2.0, params.slit_width}});
        out.ref = slit_aperture_density({{0.0, params.slit_width}});
    } else if (out.type == "squid") {
        SquidParams params;
        if (auto v = cfg.opt_number("e_inductive")) params.e_inductive = *v;
        if (auto v = cfg.opt_number("e_josephson")) params.e_josephson = *v;
        if (auto v = cfg.opt_number("level_spacing")) params.level_spacing = *v;
        if (auto v = cfg.opt_number("flux_diff")) params.flux_diff = *v;
        if (!(params.e_inductive > 0.0 && params.e_josephson > 0.0 &&
              params.level_spacing > 0.0 && params.flux_diff > 0.0))
            throw ConfigError(cfg.origin() +
                              ": ring parameters must all be positive");
        const double curvature = squid_curvature_kelvin(params, 0.0);
        const double dispersion =
            0.5 * std::sqrt(params.level_spacing / curvature);
        out.sup = DiscreteSpectrum({{-params.flux_diff / 2.0, 0.5},
                                    {params.flux_diff / 2.0, 0.5}});
        out.ref = gaussian_density(0.0, dispersion);
    } else if (out.type == "mirror") {
        const double ratio = cfg.opt_number("ratio").value_or(1.0);
        const Spectrum kernel = gaussian_density(0.0, 1.0);
        out.sup = bimodal_compose(kernel, -ratio / 2.0, ratio / 2.0);
        out.ref = kernel;
    } else if (out.type == "gaussian_pair") {
        const double separation = cfg.number("separation");
        const double sigma = cfg.number("sigma");
        const Spectrum kernel = gaussian_density(0.0, sigma);
        out.sup = bimodal_compose(kernel, -separation / 2.0, separation / 2.0);
        out.ref = kernel;
    } else if (out.type == "slits") {
        const std::vector<double> centers = cfg.array("slit_centers");
        const std::vector<double> widths = cfg.array("slit_widths");
        if (centers.size() != widths.size())
            throw ConfigError(cfg.origin() +
                              ": slit_centers and slit_widths differ in "
                              "length");
        if (centers.empty())
            throw ConfigError(cfg.origin() + ": need at least one slit");
        std::vector<Slit> slits(centers.size());
        for (std::size_t i = 0; i < slits.size(); ++i)
            slits[i] = {centers[i], widths[i]};
        out.sup = slit_aperture_density(slits);
    } else if (out.type == "custom_discrete") {
        out.sup = custom_discrete_from(cfg);
    } else if (out.type == "custom_density") {
        out.sup = custom_density_from(cfg);
    } else {
        throw ConfigError(cfg.origin() + ": unknown scenario type '" +
                          out.type + "'");
    }

    cfg.check_all_consumed();
    return out;
}

Spectrum reference_for(const LoadedScenario& scenario) {
    if (scenario.ref) return *scenario.ref;
    const PeakSummary peaks = detect_peaks(scenario.sup);
    const double sigma = peaks.width / 2.3548200450309493;
    if (!(sigma > 0.0))
        throw Degenerate("taller peak has zero width; no reference "
                         "spectrum can be matched to it");
    return gaussian_density(0.0, sigma);
}

}  // namespace macroscopality
