#include "eoplab/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "eoplab/hermite.hpp"
#include "eoplab/ladder.hpp"
#include "eoplab/susy.hpp"
#include "eoplab/wavefunctions.hpp"

namespace eoplab {

namespace {

using nlohmann::json;

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

json rational_array(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const Rational& v : values) arr.push_back(to_string(v));
    return arr;
}

std::vector<Rational> rationals_from(const json& arr) {
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

std::string system_title(const SystemSpec& sys) {
    std::ostringstream os;
    os << "case " << sys.case_number() << ", ";
    if (sys.kind == SystemKind::case1)
        os << "m = " << sys.m1;
    else
        os << "m1 = " << sys.m1 << ", m2 = " << *sys.m2;
    return os.str();
}

/// "E" or "E^deg" entries of the merged level sequence.
std::string merged_sequence(const SpectrumReport& report) {
    std::ostringstream os;
    bool first = true;
    for (const LevelEntry& level : report.levels) {
        if (!first) os << ", ";
        first = false;
        os << to_string(level.energy);
        if (level.degeneracy > 1) os << "^" << level.degeneracy;
    }
    return os.str();
}

}  // namespace

std::string p_multiset_caret(const std::vector<int>& ps) {
    std::vector<int> sorted = ps;
    std::sort(sorted.rbegin(), sorted.rend());
    std::ostringstream os;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (i > 0) os << ",";
        os << sorted[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string csv_field(const std::string& raw) {
    bool needs_quotes = raw.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return raw;
    std::string out = "\"";
    for (char c : raw) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

LevelIndex level_index(const SystemSpec& sys, long long n) {
    LevelIndex idx;
    if (sys.kind == SystemKind::case1) {
        long long period = sys.m1 + 1;
        idx.lambda = floor_div(n, period);
        idx.mu = n - idx.lambda * period;
        return idx;
    }
    long long period = static_cast<long long>(sys.m1 + 1) * (*sys.m2 + 1);
    idx.lambda = floor_div(n, period);
    idx.mu = n - idx.lambda * period;
    long long sub = *sys.m2 + 1;
    idx.rho = floor_div(idx.mu, sub);
    idx.sigma = idx.mu - idx.rho * sub;
    return idx;
}

json system_to_json(const SystemSpec& sys) {
    json j;
    j["case"] = sys.case_number();
    if (sys.kind == SystemKind::case1) {
        j["m"] = sys.m1;
    } else {
        j["m1"] = sys.m1;
        j["m2"] = *sys.m2;
    }
    j["lambda"] = to_string(sys.lambda);
    j["lambda_x"] = to_string(sys.lambda_x);
    j["lambda_y"] = to_string(sys.lambda_y);
    j["n1"] = sys.n1;
    j["n2"] = sys.n2;
    j["q_x"] = sys.q_x.str("z");
    j["s_y"] = sys.s_y.str("z");
    j["integral_order"] = sys.integral_order;
    j["n_ground"] = sys.n_ground;
    return j;
}

SystemSpec system_from_json(const json& j) {
    int case_number = j.at("case").get<int>();
    if (case_number == 1) return build_case1(j.at("m").get<int>());
    if (case_number == 2) return build_case2(j.at("m1").get<int>(), j.at("m2").get<int>());
    throw std::domain_error("system_from_json: unknown case " + std::to_string(case_number));
}

json unirrep_to_json(const Unirrep& rep) {
    json j;
    j["family"] = rep.family;
    j["params"] = json::object();
    for (const auto& [name, value] : rep.params) j["params"][name] = value;
    j["u"] = to_string(rep.u);
    j["energy"] = to_string(rep.energy);
    j["n"] = rep.n_level;
    j["p"] = rep.p;
    j["dimension"] = rep.dimension;
    j["structure_values"] = rational_array(rep.structure_values);
    return j;
}

Unirrep unirrep_from_json(const json& j) {
    Unirrep rep;
    rep.family = j.at("family").get<std::string>();
    for (const auto& [name, value] : j.at("params").items())
        rep.params[name] = value.get<int>();
    rep.u = parse_rational(j.at("u").get<std::string>());
    rep.energy = parse_rational(j.at("energy").get<std::string>());
    rep.n_level = j.at("n").get<long long>();
    rep.p = j.at("p").get<int>();
    rep.dimension = j.at("dimension").get<int>();
    rep.structure_values = rationals_from(j.at("structure_values"));
    return rep;
}

json spectrum_to_json(const SpectrumReport& report) {
    json j;
    j["system"] = system_to_json(report.system);
    j["n_max"] = report.n_max;
    json levels = json::array();
    for (const LevelEntry& level : report.levels) {
        json row;
        row["n"] = level.n;
        row["energy"] = to_string(level.energy);
        row["degeneracy"] = level.degeneracy;
        row["ps"] = level.ps;
        row["n_unirreps"] = level.n_unirreps;
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    j["sequence"] = merged_sequence(report);
    return j;
}

SpectrumReport spectrum_from_json(const json& j) {
    SpectrumReport report;
    report.system = system_from_json(j.at("system"));
    report.n_max = j.at("n_max").get<long long>();
    for (const auto& row : j.at("levels")) {
        LevelEntry level;
        level.n = row.at("n").get<long long>();
        level.energy = parse_rational(row.at("energy").get<std::string>());
        level.degeneracy = row.at("degeneracy").get<long long>();
        level.ps = row.at("ps").get<std::vector<int>>();
        level.n_unirreps = row.at("n_unirreps").get<long long>();
        report.levels.push_back(std::move(level));
    }
    return report;
}

json unirreps_to_json(const SystemSpec& sys, const std::vector<Unirrep>& reps) {
    json j;
    j["system"] = system_to_json(sys);
    j["count"] = reps.size();
    json arr = json::array();
    for (const Unirrep& rep : reps) arr.push_back(unirrep_to_json(rep));
    j["unirreps"] = std::move(arr);
    return j;
}

json tables_to_json(const SpectrumReport& report) {
    json j;
    j["system"] = system_to_json(report.system);
    j["n_max"] = report.n_max;
    json rows = json::array();
    for (const LevelEntry& level : report.levels) {
        LevelIndex idx = level_index(report.system, level.n);
        json row;
        row["n"] = level.n;
        row["lambda"] = idx.lambda;
        if (report.system.kind == SystemKind::case2) {
            row["rho"] = idx.rho;
            row["sigma"] = idx.sigma;
        }
        row["mu"] = idx.mu;
        json counts = json::object();
        std::size_t i = 0;
        while (i < level.ps.size()) {
            std::size_t k = i;
            while (k < level.ps.size() && level.ps[k] == level.ps[i]) ++k;
            counts[std::to_string(level.ps[i])] = k - i;
            i = k;
        }
        row["p_counts"] = std::move(counts);
        row["p_multiset"] = p_multiset_caret(level.ps);
        row["N_unirreps"] = level.n_unirreps;
        row["degeneracy"] = level.degeneracy;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

json verification_to_json(const std::string& command, const json& config,
                          const VerificationReport& report) {
    json j;
    j["command"] = command;
    j["config"] = config;
    j["passed"] = report.all_passed();
    j["checks_total"] = report.checks.size();
    json failures = json::array();
    for (const Check& c : report.checks) {
        if (c.passed) continue;
        failures.push_back({{"identity", c.identity}, {"probe", c.probe}});
    }
    j["checks_failed"] = failures.size();
    j["failures"] = std::move(failures);
    return j;
}

void emit_spectrum_text(const SpectrumReport& report, std::ostream& out) {
    out << "spectrum, " << system_title(report.system) << "\n";
    out << "levels " << report.system.n_ground << ".." << report.n_max
        << ", bare energy E = 2 N\n\n";
    out << pad_left("N", 6) << pad_left("E", 8) << pad_left("degeneracy", 12)
        << pad_left("multiplets", 12) << "  windows\n";
    for (const LevelEntry& level : report.levels) {
        out << pad_left(std::to_string(level.n), 6) << pad_left(to_string(level.energy), 8)
            << pad_left(std::to_string(level.degeneracy), 12)
            << pad_left(std::to_string(level.n_unirreps), 12) << "  "
            << p_multiset_caret(level.ps) << "\n";
    }
    out << "\nsequence: " << merged_sequence(report) << "\n";
}

void emit_spectrum_csv(const SpectrumReport& report, std::ostream& out) {
    out << csv_row({"n", "energy", "degeneracy", "n_unirreps", "p_multiset"});
    for (const LevelEntry& level : report.levels) {
        out << csv_row({std::to_string(level.n), to_string(level.energy),
                        std::to_string(level.degeneracy), std::to_string(level.n_unirreps),
                        p_multiset_caret(level.ps)});
    }
}

void emit_tables_text(const SpectrumReport& report, std::ostream& out) {
    bool two = report.system.kind == SystemKind::case2;
    out << "multiplet table, " << system_title(report.system) << "\n\n";
    out << pad_left("N", 6) << pad_left("lambda", 8);
    if (two) out << pad_left("rho", 6) << pad_left("sigma", 7);
    out << pad_left("mu", 6) << "  " << pad_right("p-multiset", 18) << pad_left("N_unirreps", 12)
        << pad_left("degeneracy", 12) << "\n";
    for (const LevelEntry& level : report.levels) {
        LevelIndex idx = level_index(report.system, level.n);
        out << pad_left(std::to_string(level.n), 6) << pad_left(std::to_string(idx.lambda), 8);
        if (two)
            out << pad_left(std::to_string(idx.rho), 6) << pad_left(std::to_string(idx.sigma), 7);
        out << pad_left(std::to_string(idx.mu), 6) << "  "
            << pad_right(p_multiset_caret(level.ps), 18)
            << pad_left(std::to_string(level.n_unirreps), 12)
            << pad_left(std::to_string(level.degeneracy), 12) << "\n";
    }
}

void emit_tables_csv(const SpectrumReport& report, std::ostream& out) {
    bool two = report.system.kind == SystemKind::case2;
    std::vector<std::string> header = {"N", "lambda"};
    if (two) {
        header.push_back("rho");
        header.push_back("sigma");
    }
    header.insert(header.end(), {"mu", "p-multiset", "N_unirreps", "degeneracy"});
    out << csv_row(header);
    for (const LevelEntry& level : report.levels) {
        LevelIndex idx = level_index(report.system, level.n);
        std::vector<std::string> row = {std::to_string(level.n), std::to_string(idx.lambda)};
        if (two) {
            row.push_back(std::to_string(idx.rho));
            row.push_back(std::to_string(idx.sigma));
        }
        row.push_back(std::to_string(idx.mu));
        row.push_back(p_multiset_caret(level.ps));
        row.push_back(std::to_string(level.n_unirreps));
        row.push_back(std::to_string(level.degeneracy));
        out << csv_row(row);
    }
}

namespace {

/// "k=1;l=2" from the family labels, skipping the window length p which has
/// its own column everywhere.
std::string param_string(const Unirrep& rep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : rep.params) {
        if (name == "p") continue;
        if (!first) os << ";";
        first = false;
        os << name << "=" << value;
    }
    return os.str();
}

std::string joined_values(const std::vector<Rational>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ";";
        os << to_string(values[i]);
    }
    return os.str();
}

}  // namespace

void emit_unirreps_text(const SystemSpec& sys, const std::vector<Unirrep>& reps,
                        std::ostream& out) {
    out << "multiplets, " << system_title(sys) << ": " << reps.size() << " found\n\n";
    out << pad_right("family", 8) << pad_right("params", 14) << pad_left("E", 8)
        << pad_left("N", 6) << pad_left("u", 10) << pad_left("p", 4) << pad_left("dim", 5)
        << "  structure values\n";
    for (const Unirrep& rep : reps) {
        out << pad_right(rep.family.empty() ? "-" : rep.family, 8)
            << pad_right(param_string(rep), 14) << pad_left(to_string(rep.energy), 8)
            << pad_left(std::to_string(rep.n_level), 6) << pad_left(to_string(rep.u), 10)
            << pad_left(std::to_string(rep.p), 4) << pad_left(std::to_string(rep.dimension), 5)
            << "  " << joined_values(rep.structure_values) << "\n";
    }
}

void emit_unirreps_csv(const SystemSpec& sys, const std::vector<Unirrep>& reps,
                       std::ostream& out) {
    (void)sys;
    out << csv_row({"family", "params", "energy", "n", "u", "p", "dimension",
                    "structure_values"});
    for (const Unirrep& rep : reps) {
        out << csv_row({rep.family, param_string(rep), to_string(rep.energy),
                        std::to_string(rep.n_level), to_string(rep.u), std::to_string(rep.p),
                        std::to_string(rep.dimension), joined_values(rep.structure_values)});
    }
}

LadderTable build_ladder_table(int m, int nu_max) {
    if (nu_max < 0) throw std::domain_error("build_ladder_table: nu_max must be >= 0");
    PHASpec spec = pha_spec(m);
    LadderTable table;
    table.m = m;
    table.lambda = spec.lambda;
    table.q = spec.q;
    std::vector<int> indices = {-(m + 1)};
    for (int nu = 0; nu <= nu_max; ++nu) indices.push_back(nu);
    for (int nu : indices) {
        LadderRow row;
        row.nu = nu;
        row.energy = eigenstate_energy(m, Side::minus, nu);
        row.c_squared = ladder_coefficient(m, nu).c_squared;
        row.annihilated = lowering_annihilates(m, nu);
        table.rows.push_back(std::move(row));
    }
    return table;
}

json ladder_table_to_json(const LadderTable& table) {
    json j;
    j["m"] = table.m;
    j["lambda"] = to_string(table.lambda);
    j["q"] = table.q.str("E");
    json coeffs = json::object();
    json kernel = json::array();
    for (const LadderRow& row : table.rows) {
        coeffs[std::to_string(row.nu)] = to_string(row.c_squared);
        if (row.annihilated) kernel.push_back(row.nu);
    }
    j["coefficients"] = std::move(coeffs);
    j["kernel"] = std::move(kernel);
    return j;
}

void emit_ladder_text(const LadderTable& table, std::ostream& out) {
    out << "ladder pair, m = " << table.m << ": order " << (2 * table.m + 1)
        << ", shift lambda = " << to_string(table.lambda) << "\n";
    out << "q(E) = " << table.q.str("E") << "\n\n";
    out << pad_left("nu", 6) << pad_left("energy", 8) << pad_left("c^2", 16)
        << "  lowering\n";
    for (const LadderRow& row : table.rows) {
        out << pad_left(std::to_string(row.nu), 6) << pad_left(to_string(row.energy), 8)
            << pad_left(to_string(row.c_squared), 16) << "  "
            << (row.annihilated ? "annihilates" : "maps down") << "\n";
    }
}

void emit_ladder_csv(const LadderTable& table, std::ostream& out) {
    out << csv_row({"nu", "energy", "c_squared", "annihilates"});
    for (const LadderRow& row : table.rows) {
        out << csv_row({std::to_string(row.nu), to_string(row.energy), to_string(row.c_squared),
                        row.annihilated ? "yes" : "no"});
    }
}

json eop_to_json(int m, int n) {
    Poly y = eop_y(m, n);
    Poly den = pseudo_hermite(m);
    json j;
    j["m"] = m;
    j["n"] = n;
    j["degree"] = y.degree();
    json coeffs = json::array();
    for (const Rational& c : y.coeffs()) coeffs.push_back(to_string(c));
    j["coefficients"] = std::move(coeffs);
    j["polynomial"] = y.str();
    j["denominator"] = den.str();
    return j;
}

void emit_eop_text(int m, int n, std::ostream& out) {
    Poly y = eop_y(m, n);
    out << "exceptional polynomial, m = " << m << ", n = " << n << "\n";
    out << "y_" << n << " = " << y.str() << "\n";
    out << "degree " << y.degree() << ", denominator P_" << m << " = "
        << pseudo_hermite(m).str() << "\n";
}

json potential_to_json(int m) {
    HamiltonianSpec h = partner_hamiltonian(m);
    json j;
    j["m"] = m;
    j["potential"] = h.potential.str();
    j["numerator"] = h.potential.num().str();
    j["denominator"] = h.potential.den().str();
    j["shift"] = to_string(h.shift);
    return j;
}

void emit_potential_text(int m, std::ostream& out) {
    HamiltonianSpec h = partner_hamiltonian(m);
    out << "rational extension, m = " << m << "\n";
    out << "V(x) = " << h.potential.str() << "\n";
    out << "energy shift: " << to_string(h.shift) << "\n";
}

void emit_verification_text(const VerificationReport& report, std::ostream& out) {
    // One line per distinct identity, preserving first-seen order.
    std::vector<std::pair<std::string, std::pair<long long, long long>>> groups;
    for (const Check& c : report.checks) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == c.identity; });
        if (it == groups.end()) {
            groups.push_back({c.identity, {0, 0}});
            it = groups.end() - 1;
        }
        ++it->second.first;
        if (!c.passed) ++it->second.second;
    }
    for (const auto& [identity, counts] : groups) {
        out << (counts.second == 0 ? "[pass] " : "[FAIL] ") << identity << " ("
            << counts.first << " probes";
        if (counts.second > 0) out << ", " << counts.second << " failed";
        out << ")\n";
    }
    out << "checks: " << report.checks.size() << ", failures: "
        << (report.checks.size() -
            static_cast<std::size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                                   [](const Check& c) { return c.passed; })))
        << "\n";
}

std::string diagram_svg(int m, int nu_max) {
    std::vector<std::vector<int>> towers = unirrep_partition(m, nu_max);
    auto energy_of = [&](int nu) { return 2 * (nu + m + 1); };

    const int unit = 10;  // pixels per energy unit
    const int e_max = energy_of(nu_max);
    const int dash = 2 * m + 2;  // dashed continuation spans one ladder step
    const int margin_top = 40;
    const int margin_bottom = 40;
    const int axis_x = 70;
    const int column = 110;
    const int level_half = 40;
    const int width = axis_x + 20 + column * static_cast<int>(towers.size()) + 20;
    const int height = margin_top + (e_max + dash) * unit + margin_bottom;
    auto y_of = [&](int e) { return margin_top + (e_max + dash - e) * unit; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <defs>\n"
        << "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\""
        << " orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker>\n"
        << "  </defs>\n";
    svg << "  <text x=\"" << axis_x << "\" y=\"" << (margin_top - 16)
        << "\" font-size=\"14\">rational extension ladder, m = " << m << "</text>\n";

    // Energy axis with one tick per occupied level.
    svg << "  <line class=\"axis\" x1=\"" << axis_x << "\" y1=\"" << y_of(0) << "\" x2=\""
        << axis_x << "\" y2=\"" << y_of(e_max + dash) << "\" stroke=\"black\"/>\n";
    std::vector<int> energies = {0};
    for (int nu = 0; nu <= nu_max; ++nu) energies.push_back(energy_of(nu));
    for (int e : energies) {
        svg << "  <line x1=\"" << (axis_x - 4) << "\" y1=\"" << y_of(e) << "\" x2=\"" << axis_x
            << "\" y2=\"" << y_of(e) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << (axis_x - 8) << "\" y=\"" << (y_of(e) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << e << "</text>\n";
    }

    for (std::size_t t = 0; t < towers.size(); ++t) {
        int xc = axis_x + 20 + static_cast<int>(t) * column + column / 2;
        svg << "  <g class=\"tower\" data-bottom=\"" << towers[t].front() << "\">\n";
        for (std::size_t k = 0; k < towers[t].size(); ++k) {
            int nu = towers[t][k];
            int e = energy_of(nu);
            svg << "    <line class=\"level\" data-nu=\"" << nu << "\" data-energy=\"" << e
                << "\" x1=\"" << (xc - level_half) << "\" y1=\"" << y_of(e) << "\" x2=\""
                << (xc + level_half) << "\" y2=\"" << y_of(e)
                << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            svg << "    <text x=\"" << (xc + level_half + 6) << "\" y=\"" << (y_of(e) + 4)
                << "\" font-size=\"11\">nu = " << nu << "</text>\n";
            if (k + 1 < towers[t].size()) {
                int e_up = energy_of(towers[t][k + 1]);
                svg << "    <line class=\"raise\" x1=\"" << xc << "\" y1=\"" << (y_of(e) - 3)
                    << "\" x2=\"" << xc << "\" y2=\"" << (y_of(e_up) + 8)
                    << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
            }
        }
        int e_top = energy_of(towers[t].back());
        svg << "    <line class=\"continue\" x1=\"" << xc << "\" y1=\"" << (y_of(e_top) - 3)
            << "\" x2=\"" << xc << "\" y2=\"" << (y_of(e_top + dash) + 8)
            << "\" stroke=\"black\" stroke-dasharray=\"6,4\""
            << " marker-end=\"url(#arrow)\"/>\n";
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace eoplab
