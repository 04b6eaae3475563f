#include "diamond/sweep.hpp"

#include <doctest.h>

#include <sstream>
#include <vector>

using namespace diamond;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

} // namespace

TEST_CASE("config parsing") {
    std::istringstream in(
        "# canonical conferencing-rate sweep\n"
        "axis = conf_rate\n"
        "range = 0:50:1\n"
        "g1_db = 10\n"
        "g2_db = 30   # strong second relay\n"
        "gt1_db = 30\n"
        "gt2_db = 10\n"
        "quantities = upper_I,upper_II,df_I_lp,df_II\n");
    SweepSpec spec;
    apply_config(parse_config(in), spec);
    CHECK(spec.axis == "conf_rate");
    CHECK(spec.start == 0.0);
    CHECK(spec.stop == 50.0);
    CHECK(spec.step == 1.0);
    CHECK(spec.g2_db == 30.0);
    CHECK(spec.quantities.size() == 4);

    std::istringstream bad("axis conf_rate\n");
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
    std::istringstream badkey("axes = conf_rate\n");
    SweepSpec s2;
    CHECK_THROWS_AS(apply_config(parse_config(badkey), s2), std::invalid_argument);
    std::istringstream badq("quantities = upper_I,bogus\n");
    CHECK_THROWS_AS(apply_config(parse_config(badq), s2), std::invalid_argument);
}

TEST_CASE("spec validation") {
    SweepSpec spec;
    spec.quantities = {Quantity::upper_I};
    CHECK_NOTHROW(spec.validate());
    SweepSpec bad1 = spec;
    bad1.axis = "sideways";
    CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
    SweepSpec bad2 = spec;
    bad2.step = 0.0;
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
    SweepSpec bad3 = spec;
    bad3.quantities.clear();
    CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}

TEST_CASE("sweep output shape, determinism and bound ordering") {
    SweepSpec spec;
    spec.axis = "gamma2_gtilde1_db";
    spec.start = 6;
    spec.stop = 14;
    spec.step = 1;
    spec.g1_db = 10;
    spec.gt2_db = 10;
    spec.c12 = spec.c21 = 5;
    spec.quantities = {Quantity::upper_I, Quantity::df_I_lp, Quantity::upper_II,
                       Quantity::df_II, Quantity::selected_link};
    const auto out1 = run_sweep(spec);
    const auto out2 = run_sweep(spec);
    CHECK(out1.csv == out2.csv); // byte-identical reruns
    CHECK(out1.annotated_rows == 0);

    const auto lines = split_lines(out1.csv);
    REQUIRE(lines.size() == 10); // header + 9 axis values
    CHECK(lines[0] == "gamma2_gtilde1_db,upper_I,df_I_lp,upper_II,df_II,selected_link");
    double prev_axis = -1e9;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 6);
        const double axis = std::stod(cells[0]);
        CHECK(axis > prev_axis);
        prev_axis = axis;
        const double u1 = std::stod(cells[1]), d1 = std::stod(cells[2]);
        const double u2 = std::stod(cells[3]), d2 = std::stod(cells[4]);
        CHECK(d1 <= u1 + 1e-9);
        CHECK(d2 <= u2 + 1e-9);
        CHECK((cells[5] == "relay1_to_relay2" || cells[5] == "relay2_to_relay1" ||
               cells[5] == "none"));
    }
    // the symmetric row advises no conferencing
    CHECK(split_csv(lines[5])[5] == "none");
}

TEST_CASE("engine failures annotate the row with NaN and keep going") {
    SweepSpec spec;
    spec.axis = "c12";
    spec.start = -1;
    spec.stop = 1;
    spec.step = 1;
    spec.g1_db = 10;
    spec.g2_db = 10;
    spec.gt1_db = 10;
    spec.gt2_db = 10;
    spec.quantities = {Quantity::upper_I};
    const auto out = run_sweep(spec);
    const auto lines = split_lines(out.csv);
    REQUIRE(lines.size() == 4);
    CHECK(out.annotated_rows == 1);
    CHECK(split_csv(lines[1])[1] == "NaN"); // c12 = -1 fails validation
    CHECK(split_csv(lines[2])[1] != "NaN");
}

TEST_CASE("numbers are emitted with nine significant digits") {
    SweepSpec spec;
    spec.axis = "c12";
    spec.start = 1.0 / 3.0;
    spec.stop = 1.0 / 3.0;
    spec.step = 1;
    spec.quantities = {Quantity::upper_I};
    const auto out = run_sweep(spec);
    const auto cells = split_csv(split_lines(out.csv)[1]);
    CHECK(cells[0] == "0.333333333");
}

TEST_CASE("advise mentions the link choice and the threshold") {
    const std::string sym = advise(10, 10, 10, 10, 5, 5);
    CHECK(sym.find("no relay conferencing") != std::string::npos);
    // gains (15, 1, 1, 15): capacities (4, 1, 1, 4)
    const std::string asym = advise(11.7609126, 0, 0, 11.7609126, 1, 1);
    CHECK(asym.find("relay1_to_relay2") != std::string::npos);
    CHECK(asym.find("c12 + c21 >= 4") != std::string::npos);
    CHECK(asym.find("strategy I : DF rate 2") != std::string::npos);
}
