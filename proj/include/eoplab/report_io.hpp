#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "eoplab/polynomial.hpp"
#include "eoplab/system2d.hpp"
#include "eoplab/verification.hpp"

namespace eoplab {

/// Window lengths with run-length exponents, largest first: {2,1,1,0} ->
/// "2,1^2,0".  Empty input gives the empty string.
std::string p_multiset_caret(const std::vector<int>& ps);

/// RFC 4180 field quoting: wraps in double quotes when the field contains a
/// comma, a quote, or a line break, doubling embedded quotes.
std::string csv_field(const std::string& raw);

/// One CSV record, CRLF-terminated.
std::string csv_row(const std::vector<std::string>& fields);

/// Table-style position of a level: n = lambda * period + mu, with mu further
/// split as rho * (m2 + 1) + sigma for two-extension systems.
struct LevelIndex {
    long long lambda = 0;
    long long mu = 0;
    long long rho = 0;    // two-extension systems only
    long long sigma = 0;  // two-extension systems only
};

LevelIndex level_index(const SystemSpec& sys, long long n);

// --- JSON views (rationals serialize as exact "num/den" strings) ---

nlohmann::json system_to_json(const SystemSpec& sys);
SystemSpec system_from_json(const nlohmann::json& j);

nlohmann::json unirrep_to_json(const Unirrep& rep);
Unirrep unirrep_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const SpectrumReport& report);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

nlohmann::json unirreps_to_json(const SystemSpec& sys, const std::vector<Unirrep>& reps);
nlohmann::json tables_to_json(const SpectrumReport& report);
nlohmann::json verification_to_json(const std::string& command, const nlohmann::json& config,
                                    const VerificationReport& report);

// --- text / CSV emitters (deterministic, byte-stable) ---

void emit_spectrum_text(const SpectrumReport& report, std::ostream& out);
void emit_spectrum_csv(const SpectrumReport& report, std::ostream& out);

void emit_tables_text(const SpectrumReport& report, std::ostream& out);
void emit_tables_csv(const SpectrumReport& report, std::ostream& out);

void emit_unirreps_text(const SystemSpec& sys, const std::vector<Unirrep>& reps,
                        std::ostream& out);
void emit_unirreps_csv(const SystemSpec& sys, const std::vector<Unirrep>& reps, std::ostream& out);

/// Raising-coefficient table of one 1D extension ladder.
struct LadderRow {
    int nu = 0;
    Rational energy;     // 2 (nu + m + 1)
    Rational c_squared;  // squared matrix element of raising from nu
    bool annihilated = false;  // lowering sends nu to zero
};

struct LadderTable {
    int m = 0;
    Rational lambda;
    Poly q;
    std::vector<LadderRow> rows;  // nu = -(m+1), then 0..nu_max
};

LadderTable build_ladder_table(int m, int nu_max);

nlohmann::json ladder_table_to_json(const LadderTable& table);
void emit_ladder_text(const LadderTable& table, std::ostream& out);
void emit_ladder_csv(const LadderTable& table, std::ostream& out);

// --- single-command payloads ---

nlohmann::json eop_to_json(int m, int n);
void emit_eop_text(int m, int n, std::ostream& out);

nlohmann::json potential_to_json(int m);
void emit_potential_text(int m, std::ostream& out);

void emit_verification_text(const VerificationReport& report, std::ostream& out);

/// Level diagram of one 1D extension: energy-proportional horizontal lines,
/// one column per ladder tower, raising arrows inside each tower, dashed
/// continuation above the cutoff.  SVG 1.1, integer coordinates.
std::string diagram_svg(int m, int nu_max);

}  // namespace eoplab
