#include <doctest.h>

#include <optional>
#include <string>

#include "fxlab/dataset.hpp"
#include "fxlab/errors.hpp"
#include "test_support.hpp"

using namespace fxlab;
using testsup::write_file;

TEST_SUITE("dataset") {

TEST_CASE("quarterly panel round-trip with gaps and blanks") {
    const std::string path = write_file("panel.csv",
                                        "period,gdp,cpi\n"
                                        "2004-Q3,100.5,1.2\n"
                                        "2004-Q4,,1.3\n"
                                        "2005-Q2,103.25,1.4\n");
    const Dataset d = load_csv(path);
    CHECK(d.source() == path);
    CHECK(d.frequency() == Frequency::Quarterly);
    CHECK(d.column_names() == std::vector<std::string>{"gdp", "cpi"});
    CHECK(d.has_column("gdp"));
    CHECK(!d.has_column("period"));

    const TimeSeries& gdp = d.column("gdp");
    CHECK(gdp.start() == Period{2004, 3});
    REQUIRE(gdp.size() == 4);  // 2005-Q1 gap filled as missing
    CHECK(gdp[0] == 100.5);
    CHECK(!gdp[1].has_value());  // blank cell
    CHECK(!gdp[2].has_value());  // chronology gap
    CHECK(gdp[3] == 103.25);

    const TimeSeries& cpi = d.column("cpi");
    REQUIRE(cpi.size() == 4);
    CHECK(cpi[1] == 1.3);
    CHECK(!cpi[2].has_value());
    CHECK(cpi[3] == 1.4);
}

TEST_CASE("annual panel and whitespace tolerance") {
    const std::string path = write_file("annual.csv",
                                        "period, output , rate\r\n"
                                        "1998, 10.0, 0.05\r\n"
                                        "1999, 11.0 ,0.06\r\n"
                                        "2001,12.5,\r\n");
    const Dataset d = load_csv(path);
    CHECK(d.frequency() == Frequency::Annual);
    CHECK(d.column_names() == std::vector<std::string>{"output", "rate"});
    const TimeSeries& out = d.column("output");
    CHECK(out.start() == Period{1998, 1});
    REQUIRE(out.size() == 4);
    CHECK(out[1] == 11.0);
    CHECK(!out[2].has_value());
    CHECK(out[3] == 12.5);
    CHECK(!d.column("rate")[3].has_value());
}

TEST_CASE("unknown column lookups list what exists") {
    const std::string path =
        write_file("lookup.csv", "period,a,b\n2000-Q1,1,2\n");
    const Dataset d = load_csv(path);
    CHECK_THROWS_WITH_AS(d.column("missing"),
                         doctest::Contains("available: a, b"), DataError);
}

TEST_CASE("missing file") {
    CHECK_THROWS_WITH_AS(load_csv("/nonexistent/nowhere.csv"),
                         doctest::Contains("cannot open"), DataError);
}

TEST_CASE("header problems carry the file location") {
    std::string path = write_file("empty.csv", "");
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("header row"),
                         DataError);
    path = write_file("header_only.csv", "period,a\n");
    CHECK_THROWS_AS(load_csv(path), DataError);
    path = write_file("one_col.csv", "period\n2000-Q1\n");
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("at least one series"),
                         DataError);
    path = write_file("noname.csv", "period,a,\n2000-Q1,1,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains("has no name"),
                         DataError);
    path = write_file("dupcol.csv", "period,a,a\n2000-Q1,1,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("duplicate column name 'a'"), DataError);
}

TEST_CASE("data row problems name the offending line") {
    std::string path = write_file("badkey.csv",
                                  "period,a\n"
                                  "2000-Q1,1\n"
                                  "2000-Q5,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains(":3: "), DataError);
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("malformed period key '2000-Q5'"),
                         DataError);

    path = write_file("badnum.csv",
                      "period,a,b\n"
                      "2000-Q1,1,2\n"
                      "2000-Q2,1,oops\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("column 'b' has non-numeric value 'oops'"),
                         DataError);
    CHECK_THROWS_WITH_AS(load_csv(path), doctest::Contains(":3: "), DataError);

    path = write_file("dup.csv",
                      "period,a\n"
                      "2000-Q1,1\n"
                      "2000-Q1,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("duplicate period '2000-Q1'"), DataError);

    path = write_file("order.csv",
                      "period,a\n"
                      "2000-Q2,1\n"
                      "2000-Q1,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("out-of-order period '2000-Q1'"),
                         DataError);

    path = write_file("mixed.csv",
                      "period,a\n"
                      "2000-Q1,1\n"
                      "2001,2\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("does not match the quarterly frequency"),
                         DataError);

    path = write_file("cells.csv",
                      "period,a,b\n"
                      "2000-Q1,1\n");
    CHECK_THROWS_WITH_AS(load_csv(path),
                         doctest::Contains("expected 3 cells, found 2"), DataError);
}

TEST_CASE("trailing blank lines are ignored") {
    const std::string path = write_file("trailing.csv",
                                        "period,a\n"
                                        "2000-Q1,1\n"
                                        "2000-Q2,2\n"
                                        "\n"
                                        "   \n");
    const Dataset d = load_csv(path);
    CHECK(d.column("a").size() == 2);
}

TEST_CASE("scientific notation and negatives parse as numbers") {
    const std::string path = write_file("sci.csv",
                                        "period,x\n"
                                        "2000-Q1,-3.5e-2\n"
                                        "2000-Q2,1E3\n");
    const Dataset d = load_csv(path);
    CHECK(d.column("x")[0] == -0.035);
    CHECK(d.column("x")[1] == 1000.0);
}

} // TEST_SUITE
