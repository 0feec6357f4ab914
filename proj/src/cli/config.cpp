#include "polariton/cli/config.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace polariton::cli {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_comment(std::string_view line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if ((line[i] == ';' || line[i] == '#') &&
            (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
            return std::string(line.substr(0, i));
        }
    }
    return std::string(line);
}

std::optional<double> to_double(std::string_view s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
    return v;
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
        out.push_back(trim(s.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Typed access to one document; tracks which keys were read.
class Reader {
public:
    explicit Reader(const IniDocument& doc) : doc_(doc) {}

    const std::string* raw(const std::string& section, const std::string& key) {
        used_.insert(section + "." + key);
        auto s = doc_.sections.find(section);
        if (s == doc_.sections.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    }

    bool has(const std::string& section, const std::string& key) {
        return raw(section, key) != nullptr;
    }

    std::string text(const std::string& section, const std::string& key) {
        const std::string* v = raw(section, key);
        if (v == nullptr) throw ConfigError("missing required key " + section + "." + key);
        return *v;
    }

    std::string text_or(const std::string& section, const std::string& key, std::string def) {
        const std::string* v = raw(section, key);
        return v == nullptr ? def : *v;
    }

    double number(const std::string& section, const std::string& key, double def) {
        const std::string* v = raw(section, key);
        if (v == nullptr) return def;
        return parse_number(section, key, *v);
    }

    std::optional<double> number_or_auto(const std::string& section, const std::string& key,
                                         std::optional<double> def) {
        const std::string* v = raw(section, key);
        if (v == nullptr) return def;
        if (*v == "auto") return std::nullopt;
        return parse_number(section, key, *v);
    }

    std::size_t count(const std::string& section, const std::string& key, std::size_t def) {
        const std::string* v = raw(section, key);
        if (v == nullptr) return def;
        const double d = parse_number(section, key, *v);
        if (d < 0.0 || d != std::floor(d) || d > 1e9) {
            throw ConfigError(section + "." + key + ": expected a non-negative integer, got '" +
                              *v + "'");
        }
        return static_cast<std::size_t>(d);
    }

    bool flag(const std::string& section, const std::string& key, bool def) {
        const std::string* v = raw(section, key);
        if (v == nullptr) return def;
        if (*v == "true" || *v == "yes" || *v == "1" || *v == "on") return true;
        if (*v == "false" || *v == "no" || *v == "0" || *v == "off") return false;
        throw ConfigError(section + "." + key + ": expected a boolean, got '" + *v + "'");
    }

    std::vector<double> list(const std::string& section, const std::string& key,
                             std::vector<double> def) {
        const std::string* v = raw(section, key);
        if (v == nullptr) return def;
        std::vector<double> out;
        for (const std::string& item : split_list(*v)) out.push_back(parse_number(section, key, item));
        return out;
    }

    void reject_unknown() const {
        for (const auto& [section, keys] : doc_.sections) {
            for (const auto& [key, value] : keys) {
                if (!used_.contains(section + "." + key)) {
                    throw ConfigError("unknown key " + section + "." + key);
                }
            }
        }
    }

private:
    static double parse_number(const std::string& section, const std::string& key,
                               const std::string& v) {
        const std::optional<double> d = to_double(v);
        if (!d || !std::isfinite(*d)) {
            throw ConfigError(section + "." + key + ": expected a number, got '" + v + "'");
        }
        return *d;
    }

    const IniDocument& doc_;
    std::set<std::string> used_;
};

HalfSpaceMaterial read_medium(Reader& r, const std::string& name, bool required) {
    const std::string section = "materials";
    std::string base;
    if (required) {
        base = r.text(section, name);
    } else {
        base = r.text_or(section, name, "");
    }
    HalfSpaceMaterial m;
    if (base == "custom") {
        m = presets::dielectric(1.0, 1.0);
        m.label = "custom";
    } else {
        try {
            m = presets::by_name(base);
        } catch (const DomainError&) {
            std::string known;
            for (const auto& n : presets::names()) known += " " + n;
            throw ConfigError(section + "." + name + ": unknown preset '" + base +
                              "' (known: custom" + known + ")");
        }
    }
    const std::string p = name + ".";

    if (r.has(section, p + "epsilon")) {
        m.epsilon = ConstantResponse{r.number(section, p + "epsilon", 1.0)};
    }
    if (r.has(section, p + "mu")) m.mu = ConstantResponse{r.number(section, p + "mu", 1.0)};

    auto drude_override = [&](ResponseModel& model, const char* freq_key, const char* loss_key) {
        const bool has_f = r.has(section, p + freq_key);
        const bool has_l = r.has(section, p + loss_key);
        if (!has_f && !has_l) return;
        DrudeParams d;
        if (const auto* existing = std::get_if<DrudeParams>(&model)) d = *existing;
        if (has_f) {
            d.plasma_frequency = r.number(section, p + freq_key, 0.0);
        } else if (!is_drude(model)) {
            throw ConfigError(section + "." + p + loss_key + " requires a Drude response; set " +
                              section + "." + p + freq_key);
        }
        if (has_l) d.loss_rate = r.number(section, p + loss_key, 0.0);
        model = d;
    };
    drude_override(m.epsilon, "omega_e", "gamma_e");
    drude_override(m.mu, "omega_m", "gamma_m");

    try {
        validate(m);
    } catch (const DomainError& e) {
        throw ConfigError(section + "." + name + ": " + e.what());
    }
    return m;
}

}  // namespace

IniDocument parse_ini(std::string_view text, std::string_view source) {
    IniDocument doc;
    std::string current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where() + "unterminated section header");
            current = trim(std::string_view(line).substr(1, line.size() - 2));
            if (current.empty()) throw ConfigError(where() + "empty section name");
            doc.sections[current];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where() + "expected 'key = value'");
        if (current.empty()) throw ConfigError(where() + "key outside of any [section]");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ConfigError(where() + "empty key");
        auto& sec = doc.sections[current];
        if (sec.contains(key)) throw ConfigError(where() + "duplicate key " + current + "." + key);
        sec[key] = value;
    }
    return doc;
}

void apply_overrides(IniDocument& doc, const std::vector<std::string>& overrides) {
    for (const std::string& o : overrides) {
        const std::size_t eq = o.find('=');
        const std::size_t dot = o.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
            throw ConfigError("override '" + o + "' is not of the form section.key=value");
        }
        const std::string section = trim(std::string_view(o).substr(0, dot));
        const std::string key = trim(std::string_view(o).substr(dot + 1, eq - dot - 1));
        if (section.empty() || key.empty()) {
            throw ConfigError("override '" + o + "' has an empty section or key");
        }
        doc.sections[section][key] = trim(std::string_view(o).substr(eq + 1));
    }
}

std::uint64_t config_hash(const IniDocument& doc) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [section, keys] : doc.sections) {
        for (const auto& [key, value] : keys) {
            feed(section);
            feed(".");
            feed(key);
            feed("=");
            feed(value);
            feed("\n");
        }
    }
    return h;
}

ScenarioConfig load_config(const IniDocument& doc) {
    static const std::set<std::string> known_sections = {"materials", "band", "eit", "pulse",
                                                         "output"};
    for (const auto& [section, keys] : doc.sections) {
        if (!known_sections.contains(section)) throw ConfigError("unknown section [" + section + "]");
    }

    Reader r(doc);
    ScenarioConfig cfg;
    cfg.hash = config_hash(doc);

    // [materials]
    cfg.materials.medium1 = read_medium(r, "medium1", true);
    cfg.materials.medium2 = read_medium(r, "medium2", true);
    if (r.has("materials", "reference")) {
        cfg.materials.reference = read_medium(r, "reference", false);
    } else {
        for (const char* k : {"epsilon", "mu", "omega_e", "gamma_e", "omega_m", "gamma_m"}) {
            if (r.has("materials", std::string("reference.") + k)) {
                throw ConfigError("materials.reference." + std::string(k) +
                                  " given without materials.reference");
            }
        }
    }

    // [band]
    BandSection& b = cfg.band;
    b.omega_min = r.number("band", "omega_min", b.omega_min);
    b.omega_max = r.number("band", "omega_max", b.omega_max);
    b.points = r.count("band", "points", b.points);
    b.omega_ref = r.number("band", "omega_ref", b.omega_ref);
    b.kappa0 = r.number("band", "kappa0", b.kappa0);
    b.gamma_ratio_min = r.number("band", "gamma_ratio_min", b.gamma_ratio_min);
    b.gamma_ratio_max = r.number("band", "gamma_ratio_max", b.gamma_ratio_max);
    b.gamma_points = r.count("band", "gamma_points", b.gamma_points);
    const std::string pol = r.text_or("band", "polarization", "TM");
    if (pol == "TM") {
        b.polarization = Polarization::TM;
    } else if (pol == "TE") {
        b.polarization = Polarization::TE;
    } else {
        throw ConfigError("band.polarization: expected TM or TE, got '" + pol + "'");
    }
    if (b.points == 0) throw ConfigError("band.points: frequency grid is empty");
    if (!(b.omega_min > 0.0)) throw ConfigError("band.omega_min must be > 0");
    if (b.points > 1 && !(b.omega_max > b.omega_min)) {
        throw ConfigError("band.omega_max must exceed band.omega_min");
    }
    if (!(b.omega_ref > 0.0)) throw ConfigError("band.omega_ref must be > 0");
    if (!(b.kappa0 > 0.0)) throw ConfigError("band.kappa0 must be > 0");
    if (b.gamma_points == 0) throw ConfigError("band.gamma_points: loss-rate grid is empty");
    if (!(b.gamma_ratio_min > 0.0) || !(b.gamma_ratio_max >= b.gamma_ratio_min)) {
        throw ConfigError("band.gamma_ratio_min/max must satisfy 0 < min <= max");
    }

    // [eit]
    EitSection& e = cfg.eit;
    LambdaMediumParams& p = e.params;
    p.density = r.number("eit", "density", p.density);
    p.gamma21 = r.number("eit", "gamma21", p.gamma21);
    p.Gamma31 = r.number("eit", "Gamma31", p.Gamma31);
    p.Ly = r.number("eit", "Ly", p.Ly);
    const std::optional<double> k1s = r.number_or_auto("eit", "k1s", p.k1s);
    e.k1s_auto = !k1s.has_value();
    p.k1s = k1s.value_or(1e6);
    if (r.has("eit", "k1c")) {
        p.k1c = r.number("eit", "k1c", p.k1c);
    } else {
        p.k1c = p.k1s;
    }
    p.z0 = r.has("eit", "z0") ? r.number("eit", "z0", p.z0) : 1.0 / p.k1s;
    p.Omega = p.Gamma31;
    if (r.has("eit", "alpha0")) e.alpha0 = r.number("eit", "alpha0", 0.0);
    e.omega31 = r.number("eit", "omega31", e.omega31);
    e.dipole = r.number("eit", "dipole", e.dipole);
    e.strict_normalization = r.flag("eit", "strict_normalization", e.strict_normalization);
    e.nu_min = r.number("eit", "nu_min", e.nu_min);
    e.nu_max = r.number("eit", "nu_max", e.nu_max);
    e.nu_points = r.count("eit", "nu_points", e.nu_points);
    e.omegas = r.list("eit", "omegas", e.omegas);
    e.x = r.number("eit", "x", e.x);
    e.quadrature = r.flag("eit", "quadrature", e.quadrature);
    try {
        validate(p);
    } catch (const DomainError& err) {
        throw ConfigError(std::string("eit: ") + err.what());
    }
    if (e.alpha0 && !(*e.alpha0 >= 0.0)) throw ConfigError("eit.alpha0 must be >= 0");
    if (!(e.omega31 > 0.0)) throw ConfigError("eit.omega31 must be > 0");
    if (!(e.dipole >= 0.0)) throw ConfigError("eit.dipole must be >= 0");
    if (e.nu_points == 0) throw ConfigError("eit.nu_points: detuning grid is empty");
    if (e.nu_points > 1 && !(e.nu_max > e.nu_min)) {
        throw ConfigError("eit.nu_max must exceed eit.nu_min");
    }
    if (e.omegas.empty()) throw ConfigError("eit.omegas must list at least one value");
    for (double om : e.omegas) {
        if (!(om >= 0.0)) throw ConfigError("eit.omegas entries must be >= 0");
    }
    if (!(e.x >= 0.0)) throw ConfigError("eit.x must be >= 0");

    // [pulse]
    PulseSection& ps = cfg.pulse;
    ps.delta_t = r.number("pulse", "delta_t", ps.delta_t);
    ps.x = r.list("pulse", "x", ps.x);
    ps.omegas = r.list("pulse", "omegas", ps.omegas);
    ps.sweep_omegas = r.list("pulse", "sweep_omegas", ps.sweep_omegas);
    ps.kappa31 = r.number_or_auto("pulse", "kappa31", ps.kappa31);
    ps.v0 = r.number_or_auto("pulse", "v0", ps.v0);
    ps.n_nu = r.count("pulse", "n_nu", ps.n_nu);
    ps.nu_span = r.number("pulse", "nu_span", ps.nu_span);
    if (!(ps.delta_t > 0.0)) throw ConfigError("pulse.delta_t must be > 0");
    if (ps.x.empty()) throw ConfigError("pulse.x must list at least one distance");
    for (double x : ps.x) {
        if (!(x >= 0.0)) throw ConfigError("pulse.x entries must be >= 0");
    }
    if (ps.omegas.empty()) throw ConfigError("pulse.omegas must list at least one value");
    for (double om : ps.omegas) {
        if (!(om >= 0.0)) throw ConfigError("pulse.omegas entries must be >= 0");
    }
    for (double om : ps.sweep_omegas) {
        if (!(om > 0.0)) throw ConfigError("pulse.sweep_omegas entries must be > 0");
    }
    if (ps.kappa31 && !(*ps.kappa31 >= 0.0)) throw ConfigError("pulse.kappa31 must be >= 0");
    if (ps.v0 && !(*ps.v0 > 0.0)) throw ConfigError("pulse.v0 must be > 0");
    if (ps.n_nu < 1024 || !std::has_single_bit(ps.n_nu)) {
        throw ConfigError("pulse.n_nu must be a power of two >= 1024");
    }
    if (ps.nu_span != 0.0 && !(ps.nu_span >= 10.0 / ps.delta_t)) {
        throw ConfigError("pulse.nu_span must be 0 (default) or >= 10/delta_t");
    }

    // [output]
    cfg.output.dir = r.text_or("output", "dir", cfg.output.dir);
    cfg.output.plot = r.flag("output", "plot", cfg.output.plot);

    r.reject_unknown();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    IniDocument doc = parse_ini(ss.str(), path);
    apply_overrides(doc, overrides);
    return load_config(doc);
}

}  // namespace polariton::cli
