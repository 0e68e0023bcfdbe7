#include "eoplab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eoplab/ladder.hpp"
#include "eoplab/report_io.hpp"
#include "eoplab/susy.hpp"
#include "eoplab/system2d.hpp"
#include "eoplab/verification.hpp"

namespace eoplab {

namespace {

using nlohmann::json;

int auto_nu_max(int m, int nu_max) { return nu_max < 0 ? 3 * (m + 1) : nu_max; }

SystemSpec make_system(int case_number, int m, int m1, int m2) {
    if (case_number == 1) {
        if (m < 0) throw std::domain_error("case 1 requires --m");
        return build_case1(m);
    }
    if (case_number == 2) {
        if (m1 < 0 || m2 < 0) throw std::domain_error("case 2 requires --m1 and --m2");
        return build_case2(m1, m2);
    }
    throw std::domain_error("--case must be 1 or 2");
}

int cmd_eop(int m, int n, const std::string& format, std::ostream& os) {
    // The polynomial family also exists for odd m, but only even m gives a
    // nodeless denominator and therefore an actual eigenfunction to report.
    if (m < 2 || m % 2 != 0)
        throw std::domain_error("eop: --m must be a positive even integer");
    if (format == "json")
        os << eop_to_json(m, n).dump(2) << "\n";
    else
        emit_eop_text(m, n, os);
    return 0;
}

int cmd_potential(int m, const std::string& format, std::ostream& os) {
    if (format == "json")
        os << potential_to_json(m).dump(2) << "\n";
    else
        emit_potential_text(m, os);
    return 0;
}

int cmd_ladder(int m, int nu_max, const std::string& format, std::ostream& os) {
    LadderTable table = build_ladder_table(m, auto_nu_max(m, nu_max));
    if (format == "json")
        os << ladder_table_to_json(table).dump(2) << "\n";
    else if (format == "csv")
        emit_ladder_csv(table, os);
    else
        emit_ladder_text(table, os);
    return 0;
}

int cmd_pha_check(int m, int nu_max, const std::string& format, std::ostream& os) {
    nu_max = auto_nu_max(m, nu_max);
    VerificationReport report = verify_pha(m, nu_max);
    VerificationReport chain = verify_chain_identities(m);
    report.checks.insert(report.checks.end(), chain.checks.begin(), chain.checks.end());

    json config = {{"m", m}, {"nu_max", nu_max}};
    if (!report.all_passed()) {
        os << verification_to_json("pha-check", config, report).dump(2) << "\n";
        return 1;
    }
    if (format == "json") {
        os << verification_to_json("pha-check", config, report).dump(2) << "\n";
    } else {
        os << "ladder algebra and factorization chain, m = " << m << ", nu <= " << nu_max
           << "\n";
        emit_verification_text(report, os);
    }
    return 0;
}

int cmd_spectrum(const SystemSpec& sys, long long n_max, int p_max, const std::string& format,
                 std::ostream& os) {
    SpectrumReport report = spectrum_report(sys, n_max, p_max);
    if (format == "json")
        os << spectrum_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        emit_spectrum_csv(report, os);
    else
        emit_spectrum_text(report, os);
    return 0;
}

int cmd_unirreps(const SystemSpec& sys, long long n_max, int p_max, const std::string& energy,
                 const std::string& format, std::ostream& os) {
    if (p_max < 0) p_max = default_p_max(sys, n_max);
    std::vector<Unirrep> reps;
    if (energy.empty())
        reps = enumerate_unirreps(sys, p_max);
    else
        reps = generic_unirrep_solver(sys, parse_rational(energy), p_max);
    if (format == "json")
        os << unirreps_to_json(sys, reps).dump(2) << "\n";
    else if (format == "csv")
        emit_unirreps_csv(sys, reps, os);
    else
        emit_unirreps_text(sys, reps, os);
    return 0;
}

int cmd_tables(const SystemSpec& sys, long long n_max, const std::string& format,
               std::ostream& os) {
    SpectrumReport report = spectrum_report(sys, n_max);

    // Closed-form row patterns exist for one extension or two equal ones;
    // compare against them and fail loudly on any disagreement.
    bool have_closed = sys.kind == SystemKind::case1 || sys.m1 == *sys.m2;
    if (have_closed) {
        json mismatches = json::array();
        for (const LevelEntry& level : report.levels) {
            TableRow expected = expected_table_row(sys, level.n);
            if (expected.ps != level.ps || expected.n_unirreps != level.n_unirreps ||
                expected.degeneracy != level.degeneracy) {
                mismatches.push_back({{"n", level.n},
                                      {"expected", p_multiset_caret(expected.ps)},
                                      {"computed", p_multiset_caret(level.ps)}});
            }
        }
        if (!mismatches.empty()) {
            json failure = {{"command", "tables"},
                            {"system", system_to_json(sys)},
                            {"passed", false},
                            {"mismatches", mismatches}};
            os << failure.dump(2) << "\n";
            return 1;
        }
    }

    if (format == "json")
        os << tables_to_json(report).dump(2) << "\n";
    else if (format == "csv")
        emit_tables_csv(report, os);
    else
        emit_tables_text(report, os);
    return 0;
}

int cmd_diagram(int m, int nu_max, std::ostream& os) {
    os << diagram_svg(m, auto_nu_max(m, nu_max));
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact ladder operators and spectra of rational oscillator extensions"};
    app.name("eoplab");
    app.require_subcommand(1);

    int m = -1, m1 = -1, m2 = -1, n = 0, case_number = 0;
    int nu_max = -1, p_max = -1;
    long long n_max = 40;
    std::string format, energy, out_path;

    auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* eop = app.add_subcommand("eop", "print one exceptional orthogonal polynomial");
    eop->add_option("--m", m, "extension index (even, >= 2)")->required();
    eop->add_option("--n", n, "polynomial index (0 or >= m+1)")->required();
    add_common(eop, {"text", "json"});

    CLI::App* potential = app.add_subcommand("potential", "print the extended potential");
    potential->add_option("--m", m, "extension index (even, >= 2)")->required();
    add_common(potential, {"text", "json"});

    CLI::App* ladder = app.add_subcommand("ladder", "squared ladder matrix elements");
    ladder->add_option("--m", m, "extension index (even, >= 2)")->required();
    ladder->add_option("--nu-max,--numax", nu_max, "highest state index (default 3(m+1))");
    add_common(ladder, {"text", "json", "csv"});

    CLI::App* pha = app.add_subcommand("pha-check", "verify the closed ladder algebra");
    pha->add_option("--m", m, "extension index (even, >= 2)")->required();
    pha->add_option("--nu-max,--numax", nu_max, "highest state index (default 3(m+1))");
    add_common(pha, {"text", "json"});

    CLI::App* spectrum = app.add_subcommand("spectrum", "level-by-level degeneracies");
    spectrum->add_option("--case", case_number, "planar model: 1 or 2")->required();
    spectrum->add_option("--m", m, "extension index (case 1)");
    spectrum->add_option("--m1", m1, "x extension index (case 2)");
    spectrum->add_option("--m2", m2, "y extension index (case 2)");
    spectrum->add_option("--n-max,--nmax", n_max, "highest level (default 40)");
    spectrum->add_option("--p-max,--pmax", p_max, "window bound (default: derived from n-max)");
    add_common(spectrum, {"text", "json", "csv"});

    CLI::App* unirreps = app.add_subcommand("unirreps", "list the finite multiplets");
    unirreps->add_option("--case", case_number, "planar model: 1 or 2")->required();
    unirreps->add_option("--m", m, "extension index (case 1)");
    unirreps->add_option("--m1", m1, "x extension index (case 2)");
    unirreps->add_option("--m2", m2, "y extension index (case 2)");
    unirreps->add_option("--n-max,--nmax", n_max, "level bound for the default window bound");
    unirreps->add_option("--p-max,--pmax", p_max, "window bound (default: derived from n-max)");
    unirreps->add_option("--energy", energy,
                         "solve at this energy only (rational, e.g. 6 or -4)");
    add_common(unirreps, {"text", "json", "csv"});

    CLI::App* tables = app.add_subcommand("tables", "multiplet patterns, checked level by level");
    tables->add_option("--case", case_number, "planar model: 1 or 2")->required();
    tables->add_option("--m", m, "extension index (case 1)");
    tables->add_option("--m1", m1, "x extension index (case 2)");
    tables->add_option("--m2", m2, "y extension index (case 2)");
    tables->add_option("--n-max,--nmax", n_max, "highest level (default 40)");
    add_common(tables, {"text", "json", "csv"});

    CLI::App* diagram = app.add_subcommand("diagram", "SVG level diagram of one extension");
    diagram->add_option("--m", m, "extension index (even, >= 2)")->required();
    diagram->add_option("--nu-max,--numax", nu_max, "highest state index (default 3(m+1))");
    add_common(diagram, {"svg"});

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'eoplab --help' for usage\n";
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) throw std::domain_error("cannot open output file: " + out_path);
            os = &file;
        }
        if (format.empty()) format = app.got_subcommand(diagram) ? "svg" : "text";

        if (app.got_subcommand(eop)) return cmd_eop(m, n, format, *os);
        if (app.got_subcommand(potential)) return cmd_potential(m, format, *os);
        if (app.got_subcommand(ladder)) return cmd_ladder(m, nu_max, format, *os);
        if (app.got_subcommand(pha)) return cmd_pha_check(m, nu_max, format, *os);
        if (app.got_subcommand(spectrum)) {
            SystemSpec sys = make_system(case_number, m, m1, m2);
            return cmd_spectrum(sys, n_max, p_max, format, *os);
        }
        if (app.got_subcommand(unirreps)) {
            SystemSpec sys = make_system(case_number, m, m1, m2);
            return cmd_unirreps(sys, n_max, p_max, energy, format, *os);
        }
        if (app.got_subcommand(tables)) {
            SystemSpec sys = make_system(case_number, m, m1, m2);
            return cmd_tables(sys, n_max, format, *os);
        }
        if (app.got_subcommand(diagram)) return cmd_diagram(m, nu_max, *os);
        err << "error: no command selected\n";
        return 2;
    } catch (const VerificationError& e) {
        json failure = {{"error", "verification"}, {"message", e.what()}};
        out << failure.dump(2) << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json failure = {{"error", "internal"}, {"message", e.what()}};
        out << failure.dump(2) << "\n";
        return 1;
    }
}

}  // namespace eoplab
