// Copyright 2026 The lct Authors
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


#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "lct/cli/commands.hpp"

namespace {

namespace fs = std::filesystem;
using lct::cli::Json;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(LCT_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("lct_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string write_lct1d(const std::string& name, double a, double b, double c, double d) const {
    const Json j{{"signature", {{"n_plus", 1}, {"n_minus", 0}}},
                 {"a", {{a}}}, {"b", {{b}}}, {"c", {{c}}}, {"d", {{d}}}};
    return write(name, j.dump());
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

lct::Complex gaussian(double t) { return {std::exp(-0.5 * t * t), 0.0}; }

std::string gaussian_csv() {
  std::ostringstream os;
  lct::cli::write_signal_csv(os, lct::testing::sample(lct::testing::symmetric_grid(12.0, 512),
                                                      gaussian));
  return os.str();
}

TEST_F(CliTest, ClassifyIdentity) {
  const auto r = run("classify " + write_lct1d("id.json", 1, 0, 0, 1));
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["symplectic"]["flag"].get<bool>());
  EXPECT_TRUE(j["pseudo_unitary"]["flag"].get<bool>());
  EXPECT_TRUE(j["isodispersion"]["flag"].get<bool>());
  EXPECT_TRUE(j["lorentz_embedded"]["flag"].get<bool>());
  EXPECT_FALSE(j["fourier_like"]["flag"].get<bool>());
  EXPECT_EQ(j["symplectic"]["residual"].get<double>(), 0.0);
  EXPECT_EQ(j["isodispersion"]["residual"].get<double>(), 0.0);
  EXPECT_EQ(j["lorentz_embedded"]["residual"].get<double>(), 0.0);
}

TEST_F(CliTest, ClassifyFourier) {
  const auto r = run("classify " + write_lct1d("f.json", 0, 1, -1, 0));
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["fourier_like"]["flag"].get<bool>());
  EXPECT_TRUE(j["pseudo_unitary"]["flag"].get<bool>());
  EXPECT_TRUE(j["isodispersion"]["flag"].get<bool>());
  EXPECT_FALSE(j["lorentz_embedded"]["flag"].get<bool>());
}

TEST_F(CliTest, ClassifyReportsNonSymplecticWithExitTwo) {
  const auto r = run("classify " + write_lct1d("s.json", 2, 0, 0, 2));
  EXPECT_EQ(r.exit_code, 2);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["symplectic"]["flag"].get<bool>());
  EXPECT_DOUBLE_EQ(j["symplectic"]["residual"].get<double>(), 3.0);
  EXPECT_FALSE(j["pseudo_unitary"]["flag"].get<bool>());
}

TEST_F(CliTest, NonSquareMatrixIsParseError) {
  const std::string f = write("bad.json", R"({"signature": {"n_plus": 2, "n_minus": 0},
      "a": [[1, 0]], "b": [[0, 0], [0, 0]], "c": [[0, 0], [0, 0]], "d": [[1, 0], [0, 1]]})");
  EXPECT_EQ(run("classify " + f).exit_code, 1);
}

TEST_F(CliTest, MissingFileIsExitOne) {
  EXPECT_EQ(run("classify " + path("nope.json").string()).exit_code, 1);
  EXPECT_EQ(run("apply " + write_lct1d("f.json", 0, 1, -1, 0) + " " + path("nope.csv").string())
                .exit_code,
            1);
}

TEST_F(CliTest, ApplyWithZeroCIsDegenerate) {
  const auto r =
      run("apply " + write_lct1d("m.json", 2, 0, 0, 0.5) + " " + write("g.csv", gaussian_csv()));
  EXPECT_EQ(r.exit_code, 3);
}

TEST_F(CliTest, ApplyRejectsTranslation) {
  const std::string f = write("k.json", R"({"signature": {"n_plus": 1, "n_minus": 0},
      "a": [[0]], "b": [[1]], "c": [[-1]], "d": [[0]], "K": [1], "Y": [0]})");
  EXPECT_EQ(run("apply " + f + " " + write("g.csv", gaussian_csv())).exit_code, 1);
}

TEST_F(CliTest, FourierMapsGaussianToGaussian) {
  const auto r = run("apply " + write_lct1d("f.json", 0, 1, -1, 0) + " " +
                     write("g.csv", gaussian_csv()) + " --out " + path("o.csv").string());
  ASSERT_EQ(r.exit_code, 0);
  const lct::SampledSignal out = lct::cli::read_signal_csv(path("o.csv"));
  const lct::SampledSignal expected = lct::testing::sample(out.grid(), gaussian);
  EXPECT_LE(lct::phase_aligned_relative_error(out.samples(), expected.samples()), 1e-6);
}

TEST_F(CliTest, FractionalRoundTrip) {
  const double th = 0.7;
  const std::string fwd = write_lct1d("fwd.json", std::cos(th), std::sin(th), -std::sin(th),
                                      std::cos(th));
  const std::string back = write_lct1d("back.json", std::cos(th), -std::sin(th), std::sin(th),
                                       std::cos(th));
  const std::string in = write("g.csv", gaussian_csv());
  ASSERT_EQ(run("apply " + fwd + " " + in + " --out " + path("mid.csv").string()).exit_code, 0);
  ASSERT_EQ(run("apply " + back + " " + path("mid.csv").string() + " --out " +
                path("out.csv").string())
                .exit_code,
            0);
  const lct::SampledSignal a = lct::cli::read_signal_csv(path("out.csv"));
  const lct::SampledSignal b = lct::cli::read_signal_csv(fs::path(in));
  EXPECT_LE(lct::relative_l2_error(a.samples(), b.samples()), 1e-4);
}

TEST_F(CliTest, GroundStateMoments) {
  const auto r = run("state --n 0 --T 0 --Omega 0 --B 0.5 --out " + path("s.csv").string());
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["T"].get<double>(), 0.0, 1e-5);
  EXPECT_NEAR(j["Omega"].get<double>(), 0.0, 1e-5);
  EXPECT_NEAR(j["A"].get<double>(), 0.5, 1e-5);
  EXPECT_NEAR(j["B"].get<double>(), 0.5, 1e-5);
  EXPECT_TRUE(fs::exists(path("s.csv")));
}

TEST_F(CliTest, ThirdStateUncertaintyProduct) {
  const auto r = run("state --n 3 --B 0.5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(Json::parse(r.out)["AB"].get<double>(), 49.0 / 4.0, 1e-3);
}

TEST_F(CliTest, StateModulationShiftsFrequencyMean) {
  const auto r = run("state --n 0 --Omega 3 --B 0.5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(Json::parse(r.out)["Omega"].get<double>(), 3.0, 1e-6);
}

TEST_F(CliTest, NegativeVarianceIsUsageError) {
  EXPECT_EQ(run("state --n 0 --B -1").exit_code, 1);
}

TEST_F(CliTest, NarrowGridIsExitFour) {
  EXPECT_EQ(run("state --n 0 --B 0.5 --grid=-1,0.01,201").exit_code, 4);
}

TEST_F(CliTest, UnknownSubcommandIsUsageError) { EXPECT_EQ(run("frobnicate").exit_code, 1); }

TEST_F(CliTest, ComposeActsLeftToRight) {
  const std::string shear = write_lct1d("shear.json", 1, 0, 1, 1);
  const std::string scale = write_lct1d("scale.json", 2, 0, 0, 0.5);
  const auto r = run("compose " + shear + " " + scale);
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  // scale * shear: [[2, 0], [0, 0.5]] [[1, 0], [1, 1]]
  EXPECT_DOUBLE_EQ(j["a"][0][0].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["b"][0][0].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j["c"][0][0].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["d"][0][0].get<double>(), 0.5);
}

TEST_F(CliTest, ComposeCarriesTranslations) {
  const std::string shift = write("k.json", R"({"signature": {"n_plus": 1, "n_minus": 0},
      "a": [[1]], "b": [[0]], "c": [[0]], "d": [[1]], "K": [1], "Y": [2]})");
  const std::string fourier = write_lct1d("f.json", 0, 1, -1, 0);
  const Json j = Json::parse(run("compose " + shift + " " + fourier).out);
  // p' = x, x' = -p applied to (1, 2)
  EXPECT_DOUBLE_EQ(j["K"][0].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["Y"][0].get<double>(), -1.0);
}

TEST_F(CliTest, ComposeRejectsNonSymplecticInput) {
  EXPECT_EQ(run("compose " + write_lct1d("s.json", 2, 0, 0, 2)).exit_code, 2);
}

TEST_F(CliTest, ExpOfZeroGeneratorIsIdentity) {
  const std::string g = write("g.json", R"({"signature": {"n_plus": 1, "n_minus": 1},
      "lambda": [[0, 0], [0, 0]], "mu": [[0, 0], [0, 0]], "phi": [[0, 0], [0, 0]],
      "theta": [[0, 0], [0, 0]]})");
  const auto r = run("exp " + g);
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["a"], Json::parse("[[1.0, 0.0], [0.0, 1.0]]"));
  EXPECT_EQ(j["b"], Json::parse("[[0.0, 0.0], [0.0, 0.0]]"));
}

TEST_F(CliTest, ExpRejectsInvalidGenerator) {
  const std::string g = write("g.json", R"({"signature": {"n_plus": 1, "n_minus": 0},
      "lambda": [[1]], "mu": [[0]], "phi": [[0]], "theta": [[0]]})");
  EXPECT_EQ(run("exp " + g).exit_code, 2);
}

TEST_F(CliTest, RandomIlctClassifiesIsodispersion) {
  const auto r = run("random 1 2 --seed 7 --scale 0.5 --ilct");
  ASSERT_EQ(r.exit_code, 0);
  const std::string f = write("r.json", r.out);
  const auto c = run("classify " + f);
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_TRUE(Json::parse(c.out)["isodispersion"]["flag"].get<bool>());
  EXPECT_EQ(run("random 1 2 --seed 7 --scale 0.5 --ilct").out, r.out);
}

TEST_F(CliTest, DispFourierSwapsDispersionsAndReducesToQuarterTurn) {
  const std::string disp = write("d.json", R"({"P": [0.5], "X": [1.0],
      "a_win": [[2.0]], "b_win": [[0.25]]})");
  const auto r = run("disp " + write_lct1d("f.json", 0, 1, -1, 0) + " " + disp);
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  // A = 4, B = 1/16 swap under the Fourier transform; means (P, X) -> (X, -P).
  EXPECT_NEAR(j["output"]["A"][0][0].get<double>(), 1.0 / 16.0, 1e-12);
  EXPECT_NEAR(j["output"]["B"][0][0].get<double>(), 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(j["output"]["P"][0].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["output"]["X"][0].get<double>(), -0.5);
  ASSERT_FALSE(j["reduced"].is_null());
  EXPECT_NEAR(j["reduced"]["symplectic_residual"].get<double>(), 0.0, 1e-12);
}

TEST_F(CliTest, DispRejectsNonIsodispersion) {
  const std::string disp = write("d.json", R"({"P": [0], "X": [0],
      "a_win": [[0.70710678118654752]], "b_win": [[0.70710678118654752]]})");
  EXPECT_EQ(run("disp " + write_lct1d("s.json", 2, 0, 0, 0.5) + " " + disp).exit_code, 2);
}

TEST(CliIo, GridParsing) {
  const lct::Grid g = lct::cli::parse_grid("-1.5, 0.25, 13");
  EXPECT_EQ(g.t0(), -1.5);
  EXPECT_EQ(g.dt(), 0.25);
  EXPECT_EQ(g.count(), 13u);
  for (const char* bad : {"1,2", "a,1,3", "0,-1,4", "0,1,x", "0,1,1"}) {
    EXPECT_EQ(lct::testing::caught([&] { lct::cli::parse_grid(bad); }), lct::Errc::ParseError)
        << bad;
  }
}

TEST(CliIo, CsvRoundTripIsExact) {
  lct::testing::Gen gen(3);
  lct::CVector v(9);
  for (auto& z : v) z = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
  const lct::SampledSignal s(lct::Grid(-0.3, 0.1, 9), v);
  std::stringstream ss;
  lct::cli::write_signal_csv(ss, s);
  const lct::SampledSignal back = lct::cli::read_signal_csv(ss);
  EXPECT_EQ(back.samples(), s.samples());
  EXPECT_EQ(back.grid().t0(), -0.3);
  EXPECT_NEAR(back.grid().dt(), 0.1, 1e-15);
}

TEST(CliIo, CsvRejectsMalformedInput) {
  for (const char* text : {"x,y,z\n0,1,0\n1,1,0\n", "t,re,im\n0,1,0\n", "t,re,im\n0,1\n1,1,0\n",
                           "t,re,im\n0,1,0\n1,1,0\n2.5,1,0\n", "t,re,im\n0,1,0\n1,nan,0\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(lct::testing::caught([&] { lct::cli::read_signal_csv(in); }), lct::Errc::ParseError)
        << text;
  }
  std::istringstream crlf("t,re,im\r\n0,1,0\r\n1,2,0\r\n");
  EXPECT_EQ(lct::cli::read_signal_csv(crlf).size(), 2u);
}

TEST(CliIo, BlockDocumentRoundTrip) {
  lct::testing::Gen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const lct::Signature sig = gen.signature(4);
    const lct::BlockLCT l = lct::random_lct(sig, gen.seed(), 0.5, lct::GeneratorFamily::Full);
    const lct::cli::BlockDocument doc =
        lct::cli::block_document_from_json(Json::parse(lct::cli::to_json(l).dump()));
    EXPECT_EQ(doc.a, l.a());
    EXPECT_EQ(doc.b, l.b());
    EXPECT_EQ(doc.c, l.c());
    EXPECT_EQ(doc.d, l.d());
    EXPECT_FALSE(doc.has_translation());
  }
}

TEST(CliIo, ExitCodesAreStable) {
  using lct::Errc;
  using lct::cli::exit_code_for;
  EXPECT_EQ(exit_code_for(Errc::ParseError), 1);
  EXPECT_EQ(exit_code_for(Errc::InvalidArgument), 1);
  EXPECT_EQ(exit_code_for(Errc::NotSymplectic), 2);
  EXPECT_EQ(exit_code_for(Errc::NotIsodispersion), 2);
  EXPECT_EQ(exit_code_for(Errc::DegenerateKernel), 3);
  EXPECT_EQ(exit_code_for(Errc::GridTooNarrow), 4);
  EXPECT_EQ(exit_code_for(Errc::ZeroSignal), 5);
}

TEST(Classify, FlagsAgreeWithResidualsOnRandomTransforms) {
  lct::testing::Gen gen(21);
  const double tol = 1e-9;
  for (int trial = 0; trial < 100; ++trial) {
    const lct::Signature sig = gen.signature(3);
    const auto family =
        gen.coin() ? lct::GeneratorFamily::Full : lct::GeneratorFamily::Isodispersion;
    const lct::BlockLCT l = lct::random_lct(sig, gen.seed(), 0.5, family);
    const lct::cli::BlockDocument doc{l.metric(), l.a(), l.b(), l.c(), l.d(), {}, {}};
    const auto r = lct::cli::classify(doc, tol);
    EXPECT_TRUE(r.symplectic);
    EXPECT_EQ(r.isodispersion, r.isodispersion_residual <= tol);
    EXPECT_EQ(r.lorentz_embedded, r.lorentz_residual <= tol);
    EXPECT_EQ(r.fourier_like, r.fourier_residual <= tol);
    EXPECT_EQ(r.pseudo_unitary, lct::is_pseudo_unitary(r.bogoliubov, tol));
    if (family == lct::GeneratorFamily::Isodispersion) EXPECT_TRUE(r.isodispersion);
  }
}

TEST(Classify, LorentzEmbeddingOfBoost) {
  const lct::Metric m(lct::Signature(1, 3));
  const lct::Matrix a = lct::boost_matrix(m, 0, 2, 0.8);
  const lct::BlockLCT l = lct::embed_pseudo_orthogonal(a, m);
  const auto r = lct::cli::classify({m, l.a(), l.b(), l.c(), l.d(), {}, {}}, 1e-9);
  EXPECT_TRUE(r.lorentz_embedded);
  EXPECT_TRUE(r.pseudo_unitary);
  EXPECT_FALSE(r.fourier_like);
}

}  // namespace
