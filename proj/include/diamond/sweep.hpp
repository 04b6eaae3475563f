#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace diamond {

/// Quantities a sweep can emit, in the fixed CSV column order.
enum class Quantity {
    upper_I,
    upper_II,
    df_I_lp,
    df_I_closed,
    df_II,
    af,
    af_low_snr,
    min_conf_sum,
    selected_link,
};

const char* to_string(Quantity q);
bool quantity_from_string(const std::string& name, Quantity& out);

/// A one-axis parameter sweep. Gains are given in dB, conferencing rates in
/// bits/s/Hz. axis chooses what varies:
///   gamma2_gtilde1_db - gamma2 and gtilde1 move together (dB axis)
///   conf_rate         - c12 and c21 move together (rate axis)
///   g1_db g2_db gt1_db gt2_db c12 c21 - a single parameter
struct SweepSpec {
    std::string axis = "gamma2_gtilde1_db";
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    double g1_db = 0.0;
    double g2_db = 0.0;
    double gt1_db = 0.0;
    double gt2_db = 0.0;
    double c12 = 0.0;
    double c21 = 0.0;
    std::vector<Quantity> quantities;

    void validate() const; // throws std::invalid_argument with a usage message
};

struct SweepOutput {
    std::string csv;        // header line + one row per axis value, LF endings
    int annotated_rows = 0; // rows where an engine failed (cells hold NaN)
};

/// Run the sweep. One row per axis value in ascending order; numeric cells
/// are printed with 9 significant digits, undefined values as the literal
/// NaN; output is byte-identical across runs of the same spec.
SweepOutput run_sweep(const SweepSpec& spec);

/// Human-readable summary for one channel: selected conferencing link, both
/// DF rates and upper bounds, the AF rate, and the strategy-II minimum
/// conferencing sum.
std::string advise(double g1_db, double g2_db, double gt1_db, double gt2_db, double c12,
                   double c21);

/// Parse a `key = value` config file (# comments, blank lines allowed) into
/// a key->value map. Throws std::invalid_argument on malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Apply parsed config keys to a spec. Recognized keys: axis, range (a:b:s),
/// g1_db, g2_db, gt1_db, gt2_db, c12, c21, quantities (comma list).
void apply_config(const std::map<std::string, std::string>& kv, SweepSpec& spec);

} // namespace diamond
