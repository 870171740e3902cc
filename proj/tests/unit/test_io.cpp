#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "f2/increment.hpp"
#include "f2/report_io.hpp"
#include "f2/rng.hpp"
#include "f2/set_io.hpp"

using namespace f2;

TEST_CASE("text set round trip") {
  SplitMix64 rng(81);
  DenseSet a = sample_bernoulli(9, mpq_class(1, 4), rng);
  std::stringstream ss;
  write_set_text(ss, a);
  CHECK(read_set_text(ss) == a);
}

TEST_CASE("text set rejects malformed input") {
  std::stringstream missing("x 4\n1 2");
  CHECK_THROWS(read_set_text(missing));
  std::stringstream unsorted("n 4\n3\n2\n");
  CHECK_THROWS(read_set_text(unsorted));
  std::stringstream dup("n 4\n3\n3\n");
  CHECK_THROWS(read_set_text(dup));
  std::stringstream range("n 4\n16\n");
  CHECK_THROWS(read_set_text(range));
  std::stringstream junk("n 4\n1\ntwo\n");
  CHECK_THROWS(read_set_text(junk));
}

TEST_CASE("binary set round trip and magic sniffing") {
  SplitMix64 rng(82);
  DenseSet a = sample_bernoulli(11, mpq_class(1, 3), rng);

  auto dir = std::filesystem::temp_directory_path() / "f2sumset_io_test";
  std::filesystem::create_directories(dir);
  auto bin = (dir / "set.bin").string();
  auto txt = (dir / "set.txt").string();
  write_set_file(bin, a);
  write_set_file(txt, a);
  CHECK(read_set_file(bin) == a);
  CHECK(read_set_file(txt) == a);

  // the binary header is exactly magic + n
  std::ifstream f(bin, std::ios::binary);
  char head[9];
  f.read(head, 9);
  CHECK(std::string(head, 5) == "F2SET");
  CHECK(head[5] == '\0');
  CHECK(head[8] == 11);
  std::filesystem::remove_all(dir);
}

TEST_CASE("finder report JSON round trip") {
  SplitMix64 rng(83);
  DenseSet a = sample_exact_card(8, 60, rng);
  FinderReport r = find_subspace(a);
  json j = report_to_json(r);
  FinderReport back = report_from_json(j);
  CHECK(back.n == r.n);
  CHECK(back.alpha == r.alpha);
  CHECK(back.theorem_bound == r.theorem_bound);
  CHECK(back.achieved_codim == r.achieved_codim);
  CHECK(back.steps.size() == r.steps.size());
  CHECK(back.final_subspace == r.final_subspace);
  CHECK(verify_report(a, back).ok);
  // serialization is stable
  CHECK(report_to_json(back).dump(2) == j.dump(2));

  FinderReport m = find_subspace(a, Stopping::metsch(3));
  FinderReport mback = report_from_json(report_to_json(m));
  CHECK(mback.stopping.rule == Stopping::Rule::metsch);
  CHECK(mback.stopping.d == 3);
  CHECK(mback.final_subspace.dim() == 3);
  CHECK(verify_report(a, mback).ok);
}

TEST_CASE("mask and rational literals") {
  CHECK(mask_hex(0x1a) == "0x1a");
  CHECK(mask_from_hex("0x1a") == 0x1au);
  CHECK_THROWS_AS(mask_from_hex("1a"), std::invalid_argument);
  CHECK(mpq_to_string(mpq_class(2, 3)) == "2/3");
  CHECK(mpq_to_string(mpq_class(7)) == "7");
  CHECK(mpq_from_string("4/6") == mpq_class(2, 3));
  CHECK_THROWS_AS(mpq_from_string("x/y"), std::invalid_argument);
}
