#include <gtest/gtest.h>

#include "specht/io.hpp"
#include "specht/report.hpp"

using namespace specht;

TEST(Io, ComplexJsonSchema) {
    const auto j = io::complex_json(build_complex(5, 2));
    for (const char* key : {"n", "d", "modules", "differentials", "generators"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["modules"].size(), 3u);
    const auto& m = j["modules"][0];
    for (const char* key : {"index", "shape", "twist", "rank", "basis"}) EXPECT_TRUE(m.contains(key)) << key;
    EXPECT_EQ(m["basis"].size(), m["rank"].get<std::size_t>());
    const auto& e = j["differentials"][0]["entries"][0];
    EXPECT_TRUE(e.contains("row") && e.contains("col") && e.contains("poly"));
    const auto& term = e["poly"][0];
    EXPECT_TRUE(term.contains("num") && term.contains("den") && term.contains("exps"));
    EXPECT_EQ(term["exps"].size(), 5u);
}

TEST(Io, DeterministicExport) {
    EXPECT_EQ(io::complex_json(build_complex(6, 2, 1)).dump(), io::complex_json(build_complex(6, 2, 2)).dump());
    EXPECT_EQ(io::complex_csv(build_complex(5, 2)), io::complex_csv(build_complex(5, 2)));
}

TEST(Io, CsvHeaders) {
    EXPECT_EQ(io::complex_csv(build_complex(4, 2)).rfind("index,row,col,poly\n", 0), 0u);
    EXPECT_EQ(io::betti_csv(betti_table(7, 3)), "i,j,beta\n0,3,14\n1,4,21\n2,6,14\n3,7,6\n");
}

TEST(Io, BettiText) {
    const auto s = io::betti_text(betti_table(7, 3));
    EXPECT_NE(s.find("21"), std::string::npos);
    EXPECT_NE(s.find('-'), std::string::npos);
}

TEST(Io, HilbertJson) {
    io::HilbertListing h;
    h.n = 6;
    h.d = 2;
    h.series = hilbert_series(6, 2);
    h.rows = hilbert_crosscheck(6, 2, 4, nullptr);
    const auto j = io::hilbert_json(h);
    EXPECT_EQ(j["numerator"], io::Json::parse("[1,4,1]"));
    EXPECT_EQ(j["denominator_exponent"], 2);
    EXPECT_TRUE(j["oracle_agrees"].get<bool>());
}

TEST(Io, LargeIntegersBecomeStrings) {
    EXPECT_TRUE(io::integer_json(mpz_class(7)).is_number());
    EXPECT_TRUE(io::integer_json(mpz_class("123456789012345678901234567890")).is_string());
}

TEST(Io, FormatParsing) {
    EXPECT_EQ(io::parse_format("csv"), io::Format::Csv);
    EXPECT_THROW(io::parse_format("xml"), std::invalid_argument);
}

TEST(Io, ReportJson) {
    const auto rep = verify_complex(build_complex(5, 2));
    const auto j = report_json(rep);
    EXPECT_TRUE(j["passed"].get<bool>());
    std::vector<std::string> names;
    for (const auto& c : j["checks"]) names.push_back(c["name"]);
    EXPECT_EQ(names.front(), "chain_complex");
    EXPECT_NE(report_csv(rep).find("graded_exactness,pass"), std::string::npos);
}
