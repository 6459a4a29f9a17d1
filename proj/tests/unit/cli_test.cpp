/* Copyright 2026 The berezin-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../generators.hpp"
#include "berezin/cli.hpp"
#include "berezin/domain_text.hpp"

using berezin::Domain;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = berezin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(ParseDomain, Examples) {
  const auto sq = berezin::parse_domain("box:1x1");
  ASSERT_TRUE(sq.as<berezin::AxisBox>());
  EXPECT_EQ(sq.as<berezin::AxisBox>()->sides, (std::vector<double>{1, 1}));
  EXPECT_EQ(sq.slicing_axis(), 2);
  const auto disk = berezin::parse_domain("disk:1;axis=1");
  EXPECT_EQ(disk.as<berezin::Disk>()->radius, 1.0);
  EXPECT_EQ(disk.slicing_axis(), 1);
  const auto u = berezin::parse_domain("union:box(1x1)@(0,0)+box(1x1)@(2,0)");
  ASSERT_EQ(u.as<berezin::BoxUnion>()->boxes.size(), 2u);
  EXPECT_EQ(u.as<berezin::BoxUnion>()->boxes[1].origin, (std::vector<double>{2, 0}));
  EXPECT_EQ(berezin::parse_domain("box:1.5x2e-1x3").dim(), 3);
}

TEST(ParseDomain, ErrorsCarryPositions) {
  const auto position = [](const std::string& text) -> long {
    try {
      berezin::parse_domain(text);
    } catch (const berezin::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position("sphere:1"), 0);
  EXPECT_EQ(position("box:1xx1"), 6);
  EXPECT_EQ(position("box:1x1;axis=0"), 13);
  EXPECT_EQ(position("box:1x1 "), 7);
  EXPECT_EQ(position("union:box(1x1)@(0)"), 15);
  EXPECT_EQ(position("union:box(1x1)(0,0)"), 13);
  EXPECT_THROW(berezin::parse_domain("union:box(1x1)@(0,0)+box(1x1)@(0.5,0)"), berezin::DomainError);
  EXPECT_THROW(berezin::parse_domain("box:1x1;axis=3"), berezin::DomainError);
  EXPECT_THROW(berezin::parse_domain("disk:0"), berezin::DomainError);
}

TEST(RenderDomain, RoundTripsExactly) {
  std::mt19937_64 rng(97);
  std::vector<Domain> doms{Domain::box({1, 1}), Domain::box({0.1, 1.0 / 3.0, 2.5e-7}, 2), Domain::disk(1.0 / 7.0, 1)};
  for (int i = 0; i < 50; ++i) doms.push_back(gen::random_union(rng));
  for (int i = 0; i < 20; ++i) doms.push_back(gen::random_box(rng, 1 + i % 4));
  for (const auto& dom : doms) {
    const std::string text = berezin::render_domain(dom);
    const Domain back = berezin::parse_domain(text);
    EXPECT_EQ(back.shape().index(), dom.shape().index()) << text;
    EXPECT_EQ(back.slicing_axis(), dom.slicing_axis()) << text;
    if (const auto* b = dom.as<berezin::AxisBox>()) EXPECT_EQ(*back.as<berezin::AxisBox>(), *b) << text;
    if (const auto* d = dom.as<berezin::Disk>()) EXPECT_EQ(*back.as<berezin::Disk>(), *d) << text;
    if (const auto* u = dom.as<berezin::BoxUnion>()) EXPECT_EQ(*back.as<berezin::BoxUnion>(), *u) << text;
    EXPECT_EQ(berezin::render_domain(back), text);
  }
  EXPECT_THROW(berezin::render_domain(berezin::as_generic(Domain::box({1, 1}))), berezin::UnsupportedDomainError);
}

TEST(Cli, CheckOnTheUnitSquare) {
  const auto r = run({"check", "--domain", "box:1x1", "--sigma", "1.5", "--lambda", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rows: 1"), std::string::npos);
}

TEST(Cli, EpsilonAtMuTwo) {
  const auto r = run({"epsilon", "--mu", "2"});
  ASSERT_EQ(r.code, 0);
  const auto at = r.out.find("nu_lower (4*epsilon_mu) = ");
  ASSERT_NE(at, std::string::npos);
  const double nu = std::stod(r.out.substr(at + 26));
  EXPECT_GT(nu, 1.91);
  EXPECT_LE(nu, 2.0);
  EXPECT_EQ(run({"epsilon", "--sigma", "1.5", "--dim", "2"}).code, 0);
  EXPECT_EQ(run({"epsilon", "--mu", "2", "--dim", "2"}).code, 2);
}

TEST(Cli, SweepOnTheDiskWritesTheCsv) {
  const auto path = std::filesystem::temp_directory_path() / "berezin_cli_disk.csv";
  const auto r = run({"sweep", "--domain", "disk:1", "--sigma", "1.5", "--lambda-max", "1e4", "--points", "100",
                      "--csv", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(path);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# berezin-lab v0.1.0");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("lambda,n,S,eta,S_cl,sliced,improved,two_term,vol_omega_lambda,d_lambda,v_berezin,m_berezin", 0),
            0u);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 100);
  std::filesystem::remove(path);
}

TEST(Cli, FailingVerdictExitsWithOne) {
  const auto r = run({"sweep", "--domain", "box:100x1", "--nu", "2.05", "--lambda-max", "1e3", "--points", "50"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("worst failure"), std::string::npos);
  EXPECT_NE(r.out.find("exploratory"), std::string::npos);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"sweep", "--domain", "box:1x1", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--domain", "box:1x", "--lambda", "3"}).code, 2);
  EXPECT_EQ(run({"check", "--domain", "box:1x1", "--lambda", "3", "--nu", "two"}).code, 2);
  EXPECT_EQ(run({"sums", "--domain", "box:1x1"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--domain", "box:1x1", "--cutoff", "100", "--axis", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, NumericFailuresExitWithThree) {
  // A spectrum this large trips the capacity guard.
  EXPECT_EQ(run({"spectrum", "--domain", "box:100x100x100", "--cutoff", "1e6"}).code, 3);
  EXPECT_EQ(run({"epsilon", "--mu", "2", "--scan-upper", "1"}).code, 2);
}

TEST(Cli, SpectrumAndConstantsAndSums) {
  const auto s = run({"spectrum", "--domain", "box:1x1", "--cutoff", "60"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("eigenvalue,multiplicity"), std::string::npos);
  EXPECT_NE(s.out.find(",2\n"), std::string::npos);
  EXPECT_EQ(run({"constants", "--sigma", "1.5", "--dim", "2"}).code, 0);
  EXPECT_EQ(run({"sums", "--domain", "box:2x1", "--n-max", "500", "--sigma", "2", "--melas-m", "0"}).code, 0);
  EXPECT_EQ(run({"asymptotics", "--domain", "box:1x1", "--lambda", "400", "--lambda", "40000"}).code, 0);
}

TEST(Cli, CsvIsIdenticalAcrossWorkerCounts) {
  std::vector<std::string> base{"sweep", "--domain", "union:box(1x1)@(0,0)+box(1x1)@(2,0)", "--lambda-max", "2e4",
                                "--points", "120", "--csv", "-"};
  auto with = [&](const char* w) {
    auto a = base;
    a.insert(a.end(), {"--workers", w});
    return run(a).out;
  };
  const std::string one = with("1");
  EXPECT_EQ(with("4"), one);
  EXPECT_EQ(with("7"), one);
}
