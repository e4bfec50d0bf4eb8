#include "doctest.h"

#include <cstdlib>

#include "eelwe/data_io.hpp"
#include "eelwe/hex.hpp"

using namespace eelwe;

TEST_CASE("hex helpers")
{
  CHECK(parse_hex("5742414E", 8) == 0x5742414E);
  CHECK(parse_hex("0x5742414e", 8) == 0x5742414E);
  CHECK(format_hex(0xAE8C829D, 8) == "AE8C829D");
  CHECK(format_hex(0x1, 12) == "000000000001");
  CHECK_THROWS_AS(parse_hex("5742414", 8), hex_error);
  CHECK_THROWS_AS(parse_hex("5742414Z", 8), hex_error);
  CHECK_THROWS_AS(parse_hex("", 0), hex_error);
}

TEST_CASE("csv splitting skips comments and blank lines")
{
  const auto rows = io::parse_csv("# c\n\na, b ,c\n  \n1,2\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{ "a", "b", "c" });
  CHECK(rows[1] == std::vector<std::string>{ "1", "2" });
}

TEST_CASE("sweep csv round trip")
{
  io::SweepRow r{ VariantId::e48, "0123456789AB", {} };
  r.cost.unroll = 16;
  r.cost.cb = 18;
  r.cost.tr1 = 0.0001473;
  r.cost.e_bit = 421.54191;
  const auto text = io::format_sweep_csv({ r });
  CHECK(text.rfind(io::sweep_csv_header, 0) == 0);
  const auto back = io::parse_sweep_csv(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].variant == VariantId::e48);
  CHECK(back[0].ciphertext_hex == "0123456789AB");
  CHECK(back[0].cost.cb == 18);
  CHECK(back[0].cost.e_bit == doctest::Approx(421.54191));
}

TEST_CASE("malformed csv is rejected")
{
  CHECK_THROWS_AS(io::parse_sweep_csv("wrong,header\n"), io::data_error);
  CHECK_THROWS_AS(io::parse_sweep_csv(std::string(io::sweep_csv_header) + "\ne32,1,AA\n"), io::data_error);
  CHECK_THROWS_AS(io::parse_sweep_csv(std::string(io::sweep_csv_header) + "\ne32,1,AA,x,1,1,1,1,1,1,1,1,1\n"),
                  io::data_error);
  CHECK_THROWS_AS(io::read_text("/nonexistent/eelwe/file.csv"), io::data_error);
  CHECK_THROWS_AS(io::parse_known_answers("e32, 00, 00000000, 1\n"), io::data_error);
}

TEST_CASE("fixtures load")
{
  const std::string dir = EELWE_TEST_DATA_DIR;
  const auto t = io::load_reference_table(dir + "/" + io::reference_table_file(VariantId::e64));
  CHECK(t.variant == VariantId::e64);
  REQUIRE(t.columns.size() == 9);
  CHECK(t.columns[8].unroll == 254);
  CHECK(t.columns[8].e_bit == doctest::Approx(5072.687));

  const auto cmp = io::load_comparison(dir + "/" + io::comparison_file);
  CHECK(cmp.size() == 14);

  const auto profile = io::load_msec_profile(dir + "/" + io::msec_profile_file);
  const auto cands = io::msec_candidates(cmp, profile);
  REQUIRE(cands.size() == cmp.size());
  CHECK(cands[0].name == "AES-128");
  CHECK(cands[0].gamma == 128);

  const auto figs = io::load_figure_rows(dir + "/" + io::figure_ebit_file);
  REQUIRE(figs.size() == 3);
  CHECK(figs[2].e_bit[4] == std::pair<unsigned, double>{ 16, 381.05 });
}

TEST_CASE("known-answer record format")
{
  const auto kas = io::parse_known_answers("e32, 00000000000000000001, 5742414E, 1, AE8C829D\n");
  REQUIRE(kas.size() == 1);
  CHECK(kas[0].key.bit(0));
  CHECK(kas[0].rounds == 1);
  CHECK(io::format_known_answer(kas[0]) == "e32, 00000000000000000001, 5742414E, 1, AE8C829D");
}

TEST_CASE("fixture directory honours the environment")
{
  ::setenv(io::fixture_env_var, "/tmp/eelwe-fixtures", 1);
  CHECK(io::fixture_dir() == std::filesystem::path("/tmp/eelwe-fixtures"));
  ::unsetenv(io::fixture_env_var);
  CHECK_FALSE(io::fixture_dir().empty());
}
