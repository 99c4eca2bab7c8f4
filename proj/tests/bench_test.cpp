#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "octbic/bench.hpp"

namespace octbic {
namespace {

SweepSpec small_sweep() {
  SweepSpec s;
  s.base.n_l = 40;
  s.base.n_r = 10;
  s.base.n_o = 4;
  s.base.d_lr = s.base.d_cross = s.base.d_o = 0.05;
  s.base.cv_lr = s.base.cv_cross = 0.5;
  s.vary = "d_cross";
  s.values = {0.01, 0.05, 0.11};
  s.seeds = {1, 2};
  s.algorithms = {Algorithm::Mica, Algorithm::OctMica};
  s.timeout_s = 60.0;
  return s;
}

TEST(RunBench, RowCountAndOrder) {
  const auto rows = run_bench(small_sweep());
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].params.d_cross, 0.01);
  EXPECT_EQ(rows[0].params.seed, 1u);
  EXPECT_EQ(rows[0].algorithm, Algorithm::Mica);
  EXPECT_EQ(rows[1].algorithm, Algorithm::OctMica);
  EXPECT_EQ(rows[2].params.seed, 2u);
  EXPECT_EQ(rows[11].params.d_cross, 0.11);
}

TEST(RunBench, AlgorithmsAgreeAndParallelRunsMatch) {
  SweepSpec s = small_sweep();
  s.algorithms = {Algorithm::Mica, Algorithm::OctMica, Algorithm::EnumMib, Algorithm::OctMib2};
  const auto serial = run_bench(s);
  s.jobs = 4;
  const auto parallel = run_bench(s);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_FALSE(serial[i].timed_out);
    EXPECT_EQ(serial[i].algorithm, parallel[i].algorithm);
    EXPECT_EQ(serial[i].count, parallel[i].count);
  }
  for (std::size_t i = 0; i < serial.size(); i += 4) {
    EXPECT_EQ(serial[i].count, serial[i + 1].count);
    EXPECT_EQ(serial[i + 2].count, serial[i + 3].count);
  }
}

TEST(RunBench, TimeoutRecordsBudget) {
  SweepSpec s = small_sweep();
  s.base.n_l = 300;
  s.base.n_r = 60;
  s.base.d_lr = s.base.d_cross = 0.3;
  s.values = {0.3};
  s.seeds = {1};
  s.algorithms = {Algorithm::Mica};
  s.timeout_s = 1e-4;
  const auto rows = run_bench(s);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].timed_out);
  EXPECT_EQ(rows[0].wall_time_s, 1e-4);
}

TEST(SweepSpec, RejectsUnusableSweeps) {
  SweepSpec s = small_sweep();
  s.algorithms.clear();
  EXPECT_THROW(run_bench(s), std::invalid_argument);

  s = small_sweep();
  s.seeds.clear();
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = small_sweep();
  s.vary = "bogus";
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = small_sweep();
  s.values = {1.5};
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(WriteBenchCsv, Format) {
  SweepSpec s = small_sweep();
  s.values = {0.05};
  s.seeds = {3};
  s.algorithms = {Algorithm::OctMica};
  std::ostringstream out;
  write_bench_csv(out, run_bench(s));
  std::istringstream in(out.str());
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, kBenchHeader);
  EXPECT_EQ(row.rfind("oct-mica,40,10,4,0.05,0.05,0.05,0.5,3,", 0), 0u) << row;
  EXPECT_EQ(row.substr(row.size() - 6), ",false");
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(SetParameter, CvSetsBoth) {
  GeneratorParams p;
  set_parameter(p, "cv", 0.7);
  EXPECT_EQ(p.cv_lr, 0.7);
  EXPECT_EQ(p.cv_cross, 0.7);
  set_parameter(p, "n_o", 12);
  EXPECT_EQ(p.n_o, 12u);
  EXPECT_THROW(set_parameter(p, "n_x", 1), std::invalid_argument);
}

}  // namespace
}  // namespace octbic
