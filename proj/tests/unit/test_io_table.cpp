#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "contactlie/table.hpp"
#include "helpers.hpp"

using namespace contactlie;
using namespace testing_helpers;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> golden_dirs() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CONTACTLIE_GOLDEN_DIR))
    if (e.is_directory()) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Golden, TablesMatchByteForByte) {
  const auto dirs = golden_dirs();
  ASSERT_GE(dirs.size(), 6u);
  for (const auto& dir : dirs) {
    auto c = parse_config_file((dir / "config.txt").string());
    auto window = parse_window(c, read_file((dir / "window.txt").string()));
    std::ostringstream out;
    write_csv(out, structure_table(c, window));
    EXPECT_EQ(out.str(), read_file((dir / "table.csv").string())) << dir;
  }
}

TEST(Golden, RowsAgreeWithOperatorBracket) {
  for (const auto& dir : golden_dirs()) {
    auto c = parse_config_file((dir / "config.txt").string());
    auto window = parse_window(c, read_file((dir / "window.txt").string()));
    for (const auto& a : window)
      for (const auto& b : window) {
        AlgebraElement expected =
            bracket_operator(AlgebraElement::basis(c, a), AlgebraElement::basis(c, b));
        AlgebraElement from_rows(c);
        for (const auto& row : structure_table(c, {a, b})) {
          if (row.lhs != format_basis(*c, a) || row.rhs != format_basis(*c, b) || row.result == "0") continue;
          from_rows.add_term(parse_basis(c, row.result), parse_rational(row.coefficient));
        }
        EXPECT_EQ(from_rows, expected) << dir;
      }
  }
}

TEST(Table, ZeroBracketRowAndQuoting) {
  auto c = single_block(1, J0Mode::kZero);
  auto rows = structure_table(c, {bi(c, "x[0,1,1]")});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].result, "0");
  EXPECT_EQ(rows[0].coefficient, "0");
  std::ostringstream out;
  write_csv(out, rows);
  EXPECT_EQ(out.str(), "lhs_index,rhs_index,result_term_index,coefficient\n"
                       "\"x[0,1,1]\",\"x[0,1,1]\",\"0\",\"0\"\n");
}

TEST(Table, WindowParsingSkipsComments) {
  auto c = single_block(1, J0Mode::kZero);
  auto w = parse_window(c, "# header\nx[0,1,1]\n\n  x[1,0,0]  # trailing\n");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(format_basis(*c, w[1]), "x[1,0,0]");
}

TEST(Literals, RoundTripEverywhere) {
  for (const auto& text : standard_config_texts()) {
    auto c = config(text);
    Sampler s(c, 2);
    for (int k = 0; k < 50; ++k) {
      AlgebraElement u = s.element(4);
      EXPECT_EQ(parse_element(c, format_element(u)), u);
      BasisIndex b = s.basis();
      EXPECT_EQ(parse_basis(c, format_basis(*c, b)), b);
    }
  }
}

TEST(Literals, Rejections) {
  auto c = single_block(2, J0Mode::kZero);
  EXPECT_THROW(bi(c, "x[0,1]"), ParseError);
  EXPECT_THROW(bi(c, "x[0,1/2,0]"), ParseError);
  EXPECT_THROW(bi(c, "x[0,1,0]t[0,0,-1]"), ParseError);
  EXPECT_THROW(bi(c, "x[0,1,0]t[0,1,0]"), ParseError);  // forbidden t_1 in block 2
  EXPECT_THROW(bi(c, "x[0,1,0]t[1,0,0]"), ParseError);  // J0 = {0}
  EXPECT_THROW(bi(c, "x[0,1,0] junk"), ParseError);
  EXPECT_THROW(el(c, "2*x[0,1,0] +"), ParseError);
  EXPECT_EQ(el(c, "-x[0,1,0] + 1/2*x[0,0,1]t[0,0,3]").size(), 2u);
  EXPECT_TRUE(el(c, "x[0,1,0] - x[0,1,0]").is_zero());
}

TEST(Literals, FunctionalAndPairTables) {
  auto c = single_block(1, J0Mode::kZero);
  auto f = parse_functional_text(c, "x[0,1,1] 3\n# note\n2*x[1,0,0] 1/2\nx[0,0,1] 0\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.at(bi(c, "x[1,0,0]")), Rational(1));
  auto pairs = parse_pair_table_text(c, "x[0,2,0] x[0,0,2] 4\n");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(std::get<2>(pairs[0]), Rational(4));
  try {
    parse_pair_table_text(c, "x[0,2,0] x[0,0,2] 4\nx[0,2,0] x[0,0,2]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  try {
    parse_functional_text(c, "\nx[0,2] 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}
