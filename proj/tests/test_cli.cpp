// Copyright 2026 The avgfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
};

fs::path tmp_dir() {
  const fs::path dir(AVGFUSION_TEST_TMP);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CliRun run(const std::string& args) {
  const fs::path capture = tmp_dir() / "stdout.txt";
  const std::string cmd = std::string("\"") + AVGFUSION_CLI_PATH + "\" " + args + " > \"" +
                          capture.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(capture)};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(Cli, Version) {
  const CliRun r = run("version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "avgfusion 0.1.0\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("fusion-sweep").code, 2);  // --out is required
  const std::string out = (tmp_dir() / "bad.csv").string();
  EXPECT_EQ(run("fusion-sweep --m-grid 0:0.7:0.1 --out " + out).code, 2);
  EXPECT_EQ(run("bsm-sweep --samples 0 --out " + out).code, 2);
  EXPECT_EQ(run("trace-distance --m 0.9 --out " + out).code, 2);
  EXPECT_EQ(run("table2 --eta-h 1.5").code, 2);
  EXPECT_EQ(run("bsm-sweep --svg-metric nope --out " + out).code, 2);
}

TEST(Cli, UnwritableOutputExitsOne) {
  EXPECT_EQ(run("bsm-sweep --samples 1 --out /nonexistent-dir/x.csv").code, 1);
  EXPECT_EQ(run("table2 --config /nonexistent-dir/cfg.ini").code, 1);
}

TEST(Cli, Verify) {
  const CliRun r = run("verify --samples 5 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 7u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("pattern-support: PASS"), std::string::npos);
}

TEST(Cli, Table2Balanced) {
  const CliRun r = run("table2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ab       ✓"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("a²        "), std::string::npos) << r.out;
  // Only the legend mentions the cross.
  EXPECT_EQ(r.out.find("×"), r.out.find("× possible only"));
}

TEST(Cli, Table2Unbalanced) {
  const CliRun r = run("table2 --eta-h 0.3 --eta-v 0.3");
  EXPECT_EQ(r.code, 0);
  // ac appears for the phi states only once the splitters are unbalanced.
  EXPECT_NE(r.out.find("ac                   ×     ×"), std::string::npos) << r.out;
}

TEST(Cli, SweepWritesCsvAndSvg) {
  const fs::path csv = tmp_dir() / "fusion.csv";
  const fs::path svg = tmp_dir() / "fusion.svg";
  const CliRun r = run("fusion-sweep --n-copies 1,2 --m-grid 0,0.2 --samples 3 --seed 5 --out " +
                    csv.string() + " --svg " + svg.string());
  ASSERT_EQ(r.code, 0);
  const std::string text = slurp(csv);
  EXPECT_EQ(lines(text), 1u + 4u * 5u);
  EXPECT_TRUE(text.starts_with("experiment,N,m,row_kind,trial,eta_x,eta_y,F_HH,"));
  EXPECT_TRUE(slurp(svg).ends_with("</svg>\n"));
  EXPECT_EQ(lines(r.out), 5u);
  EXPECT_TRUE(r.out.starts_with("N,m,mean_F_HH_norm,std_F_HH_norm\n"));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const fs::path a = tmp_dir() / "a.csv";
  const fs::path b = tmp_dir() / "b.csv";
  const std::string flags = "bsm-sweep --n-copies 1,3 --m-grid 0.1,0.4 --samples 4 --seed 11";
  ASSERT_EQ(run(flags + " --out " + a.string()).code, 0);
  ASSERT_EQ(run(flags + " --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const fs::path cfg = tmp_dir() / "td.ini";
  const fs::path out = tmp_dir() / "td.csv";
  {
    std::ofstream os(cfg);
    os << "# trace-distance settings\n"
       << "n-copies = 1,2\n"
       << "m = 0.1\n"
       << "samples = 2\n"
       << "out = " << out.string() << "\n";
  }
  ASSERT_EQ(run("trace-distance --config " + cfg.string()).code, 0);
  EXPECT_EQ(lines(slurp(out)), 1u + 2u * 4u);
  // Command-line flags win over the file.
  ASSERT_EQ(run("trace-distance --config " + cfg.string() + " --samples 3").code, 0);
  EXPECT_EQ(lines(slurp(out)), 1u + 2u * 5u);

  const fs::path bad = tmp_dir() / "bad.ini";
  {
    std::ofstream os(bad);
    os << "unknown-key = 1\n";
  }
  EXPECT_EQ(run("table2 --config " + bad.string()).code, 2);
}

}  // namespace
