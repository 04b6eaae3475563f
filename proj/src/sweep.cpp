#include "diamond/sweep.hpp"

#include "diamond/af.hpp"
#include "diamond/df_strategy1.hpp"
#include "diamond/df_strategy2.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diamond {

namespace {

const Quantity kAllQuantities[] = {
    Quantity::upper_I,    Quantity::upper_II,     Quantity::df_I_lp,
    Quantity::df_I_closed, Quantity::df_II,        Quantity::af,
    Quantity::af_low_snr, Quantity::min_conf_sum, Quantity::selected_link,
};

std::string format_number(double v) {
    if (std::isnan(v)) return "NaN";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Instance {
    LinkGains gains;
    ConferencingCapacities conf;
};

Instance instance_at(const SweepSpec& s, double axis) {
    double g1 = s.g1_db, g2 = s.g2_db, gt1 = s.gt1_db, gt2 = s.gt2_db;
    double c12 = s.c12, c21 = s.c21;
    if (s.axis == "gamma2_gtilde1_db") {
        g2 = axis;
        gt1 = axis;
    } else if (s.axis == "conf_rate") {
        c12 = axis;
        c21 = axis;
    } else if (s.axis == "g1_db") {
        g1 = axis;
    } else if (s.axis == "g2_db") {
        g2 = axis;
    } else if (s.axis == "gt1_db") {
        gt1 = axis;
    } else if (s.axis == "gt2_db") {
        gt2 = axis;
    } else if (s.axis == "c12") {
        c12 = axis;
    } else if (s.axis == "c21") {
        c21 = axis;
    }
    return {{db_to_linear(g1), db_to_linear(g2), db_to_linear(gt1), db_to_linear(gt2)},
            {c12, c21}};
}

} // namespace

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::upper_I: return "upper_I";
        case Quantity::upper_II: return "upper_II";
        case Quantity::df_I_lp: return "df_I_lp";
        case Quantity::df_I_closed: return "df_I_closed";
        case Quantity::df_II: return "df_II";
        case Quantity::af: return "af";
        case Quantity::af_low_snr: return "af_low_snr";
        case Quantity::min_conf_sum: return "min_conf_sum";
        case Quantity::selected_link: return "selected_link";
    }
    return "?";
}

bool quantity_from_string(const std::string& name, Quantity& out) {
    for (Quantity q : kAllQuantities) {
        if (name == to_string(q)) {
            out = q;
            return true;
        }
    }
    return false;
}

void SweepSpec::validate() const {
    static const char* axes[] = {"gamma2_gtilde1_db", "conf_rate", "g1_db", "g2_db",
                                 "gt1_db",            "gt2_db",    "c12",   "c21"};
    bool ok = false;
    for (const char* a : axes) ok = ok || axis == a;
    if (!ok) throw std::invalid_argument("unknown axis '" + axis + "'");
    if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
    if (!(start <= stop)) throw std::invalid_argument("range start must be <= stop");
    if (quantities.empty()) throw std::invalid_argument("no quantities requested");
}

SweepOutput run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepOutput out;
    std::string& csv = out.csv;
    csv += spec.axis;
    for (Quantity q : spec.quantities) {
        csv += ',';
        csv += to_string(q);
    }
    csv += '\n';

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const long steps = std::lround(std::floor((spec.stop - spec.start) / spec.step + 1e-9));
    for (long i = 0; i <= steps; ++i) {
        const double axis = spec.start + static_cast<double>(i) * spec.step;
        csv += format_number(axis);
        bool row_failed = false;
        for (Quantity q : spec.quantities) {
            csv += ',';
            try {
                const Instance in = instance_at(spec, axis);
                switch (q) {
                    case Quantity::upper_I:
                        csv += format_number(upper_bound_I(in.gains, in.conf).value);
                        break;
                    case Quantity::upper_II:
                        csv += format_number(upper_bound_II(in.gains, in.conf).value);
                        break;
                    case Quantity::df_I_lp:
                        csv += format_number(df_rate_lp(in.gains, in.conf).rate);
                        break;
                    case Quantity::df_I_closed:
                        csv += format_number(df_rate_closed_form(in.gains, in.conf).solution.rate);
                        break;
                    case Quantity::df_II:
                        csv += format_number(df_rate_II(in.gains, in.conf).rate);
                        break;
                    case Quantity::af:
                        csv += format_number(maximize_af(in.gains, in.conf).rate);
                        break;
                    case Quantity::af_low_snr:
                        csv += format_number(
                            af_low_snr(in.gains, conferencing_noise(in.gains, in.conf))
                                .solution.rate);
                        break;
                    case Quantity::min_conf_sum:
                        csv += format_number(min_conferencing_for_capacity(in.gains).min_conf_sum);
                        break;
                    case Quantity::selected_link:
                        csv += to_string(select_conferencing_link(in.gains));
                        break;
                }
            } catch (const std::exception&) {
                csv += format_number(nan);
                row_failed = true;
            }
        }
        csv += '\n';
        if (row_failed) ++out.annotated_rows;
    }
    return out;
}

std::string advise(double g1_db, double g2_db, double gt1_db, double gt2_db, double c12,
                   double c21) {
    const LinkGains gains{db_to_linear(g1_db), db_to_linear(g2_db), db_to_linear(gt1_db),
                          db_to_linear(gt2_db)};
    const ConferencingCapacities conf{c12, c21};
    const ConferencingLink link = select_conferencing_link(gains);
    const UpperBound u1 = upper_bound_I(gains, conf);
    const UpperBound u2 = upper_bound_II(gains, conf);
    const DfSolution d1 = df_rate_lp(gains, conf);
    const DfSolution d2 = df_rate_II(gains, conf);
    const AfSolution af = maximize_af(gains, conf);
    const ThresholdReport th = min_conferencing_for_capacity(gains);

    std::ostringstream os;
    os << "channel: g1 = " << g1_db << " dB, g2 = " << g2_db << " dB, gt1 = " << gt1_db
       << " dB, gt2 = " << gt2_db << " dB; conferencing c12 = " << c12 << ", c21 = " << c21
       << " bits/s/Hz\n";
    if (link == ConferencingLink::none)
        os << "one-side conferencing: no relay conferencing (it cannot raise the DF rate)\n";
    else
        os << "one-side conferencing: use " << to_string(link) << "\n";
    os << "strategy I : DF rate " << format_number(d1.rate) << ", upper bound "
       << format_number(u1.value) << " (lambda1 = " << format_number(u1.share.lambda1) << ")\n";
    os << "strategy II: DF rate " << format_number(d2.rate) << ", upper bound "
       << format_number(u2.value) << "\n";
    os << "AF rate    : " << format_number(af.rate) << "\n";
    os << "strategy-II DF reaches its upper bound once c12 + c21 >= "
       << format_number(th.min_conf_sum) << " bits/s/Hz\n";
    return os.str();
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        kv[key] = value;
    }
    return kv;
}

void apply_config(const std::map<std::string, std::string>& kv, SweepSpec& spec) {
    auto num = [](const std::string& key, const std::string& s) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("config key '" + key + "': bad number '" + s + "'");
        }
    };
    for (const auto& [key, value] : kv) {
        if (key == "axis") {
            spec.axis = value;
        } else if (key == "range") {
            const auto c1 = value.find(':');
            const auto c2 = value.find(':', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw std::invalid_argument("config key 'range': expected start:stop:step");
            spec.start = num("range", value.substr(0, c1));
            spec.stop = num("range", value.substr(c1 + 1, c2 - c1 - 1));
            spec.step = num("range", value.substr(c2 + 1));
        } else if (key == "g1_db") {
            spec.g1_db = num(key, value);
        } else if (key == "g2_db") {
            spec.g2_db = num(key, value);
        } else if (key == "gt1_db") {
            spec.gt1_db = num(key, value);
        } else if (key == "gt2_db") {
            spec.gt2_db = num(key, value);
        } else if (key == "c12") {
            spec.c12 = num(key, value);
        } else if (key == "c21") {
            spec.c21 = num(key, value);
        } else if (key == "quantities") {
            spec.quantities.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                Quantity q;
                if (!quantity_from_string(item, q))
                    throw std::invalid_argument("unknown quantity '" + item + "'");
                spec.quantities.push_back(q);
            }
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

} // namespace diamond
