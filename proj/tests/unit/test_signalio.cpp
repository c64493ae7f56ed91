#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtfa/errors.hpp"
#include "gtfa/signalio.hpp"
#include "support.hpp"

using namespace gtfa;

namespace {

std::string le32(unsigned v) {
  std::string s(4, '\0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  return s;
}

std::string le16(unsigned v) { return le32(v).substr(0, 2); }

std::string wav_bytes(int channels, int format, int bits, int rate, const std::vector<int>& samples) {
  std::string data;
  for (int s : samples) data += le16(static_cast<unsigned>(s) & 0xFFFF);
  std::string b = "RIFF" + le32(36 + static_cast<unsigned>(data.size())) + "WAVE";
  b += "fmt " + le32(16) + le16(format) + le16(channels) + le32(rate) + le32(rate * channels * bits / 8) +
       le16(channels * bits / 8) + le16(bits);
  b += "data" + le32(static_cast<unsigned>(data.size())) + data;
  return b;
}

std::vector<int> pixels(const std::string& pgm) {
  std::istringstream in(pgm);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  std::vector<int> p;
  for (int v; in >> v;) p.push_back(v);
  return p;
}

}  // namespace

TEST_CASE("eight-sample WAV fixture") {
  const auto wav = read_wav_mono16(testing::data_path("eight.wav"));
  CHECK(wav.sample_rate == 8000);
  REQUIRE(wav.signal.size() == 8);
  const std::vector<double> expect{0.0, 1.0 / 32768, -1.0 / 32768, 32767.0 / 32768, -1.0, 0.5, -0.5, 256.0 / 32768};
  for (int i = 0; i < 8; ++i) CHECK(wav.signal.values[i] == Complex(expect[i], 0.0));
  CHECK(wav.signal.offset == 0);
}

TEST_CASE("unsupported and truncated WAV files") {
  CHECK_THROWS_AS(read_wav_mono16(testing::data_path("stereo.wav")), UnsupportedFormat);
  CHECK_THROWS_AS(parse_wav_mono16(wav_bytes(1, 3, 16, 8000, {0, 1})), UnsupportedFormat);
  CHECK_THROWS_AS(parse_wav_mono16(wav_bytes(1, 1, 8, 8000, {0, 1})), UnsupportedFormat);
  CHECK_THROWS_AS(parse_wav_mono16("RIFX0000WAVE"), UnsupportedFormat);
  const std::string good = wav_bytes(1, 1, 16, 8000, {1, 2, 3});
  CHECK_THROWS_AS(parse_wav_mono16(good.substr(0, good.size() - 3)), TruncatedFile);
  CHECK_THROWS_AS(parse_wav_mono16(good.substr(0, 20)), TruncatedFile);
  CHECK_THROWS_AS(parse_wav_mono16("RIFF"), TruncatedFile);
}

TEST_CASE("thousand-sample speech-rate file") {
  std::vector<int> s(1000);
  for (int i = 0; i < 1000; ++i) s[i] = (i * 37) % 2000 - 1000;
  const auto wav = parse_wav_mono16(wav_bytes(1, 1, 16, 4000, s));
  CHECK(wav.signal.size() == 1000);
  CHECK(wav.sample_rate == 4000);
}

TEST_CASE("signal CSV round trip is bit exact") {
  auto g = build_cyclic(6);
  auto r = testing::rng(90);
  const auto u = random_signal(g, r);
  const auto text = format_signal_csv(u);
  const auto back = parse_csv_signal(text, g);
  CHECK((back.values() - u.values()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(text.find('\r') == std::string::npos);

  testing::TempDir dir("csv");
  write_text_atomic(dir.file("u.csv"), text);
  CHECK_FALSE(std::filesystem::exists(dir.file("u.csv.tmp")));
  CHECK((read_csv_signal(dir.file("u.csv"), g).values() - u.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("signal CSV errors and accepted forms") {
  auto g = build_cyclic(3);
  const auto u = parse_csv_signal("index,re,im\n2,1e-3,0\n0,1.5E2,-2\n1,0,0\n", g);
  CHECK(u(0) == Complex(150.0, -2.0));
  CHECK(u(2) == Complex(1e-3, 0.0));

  CHECK_THROWS_AS(parse_csv_signal("0,1,0\n1,1,0\n", g), ParseError);
  CHECK_THROWS_AS(parse_csv_signal("0,1,0\n1,1,0\n1,1,0\n", g), ParseError);
  CHECK_THROWS_AS(parse_csv_signal("0,1,0\n1,1,0\n5,1,0\n", g), ParseError);
  try {
    parse_csv_signal("0,1,0\n1,abc,0\n2,1,0\n", g);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("integer-time signals") {
  const auto z = parse_csv_zsignal("-2,1,0\n1,0,2\n");
  CHECK(z.offset == -2);
  CHECK(z.size() == 4);
  CHECK(z.at(-1) == Complex{});
  CHECK(z.at(1) == Complex(0.0, 2.0));
  const auto back = parse_csv_zsignal(format_zsignal_csv(z));
  CHECK(back.offset == z.offset);
  CHECK((back.values - z.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("symbol, operator and kernel CSV round trips") {
  auto g = build_dihedral(3);
  auto r = testing::rng(91);
  const auto a = random_tf(g, r);
  CHECK(max_abs_diff(parse_tf_csv(format_tf_csv(a), g), a) == 0.0);

  Matrix k(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) k(i, j) = random_complex(r);
  const GroupOperator op(g, k);
  CHECK((parse_operator_csv(format_operator_csv(op), g).kernel() - k).cwiseAbs().maxCoeff() == 0.0);

  const AmbiguityFunction phi(g, symplectic_fourier(a).data());
  const auto text = format_kernel_csv(phi);
  CHECK(text.rfind("xi_index,y_index,row,col,re,im\n", 0) == 0);
  CHECK(max_abs_diff(parse_kernel_csv(text, g), phi) == 0.0);
  CHECK_THROWS_AS(parse_kernel_csv("xi_index,y_index,row,col,re,im\n0,0,0,0,1,0\n", g), ParseError);
}

TEST_CASE("grid and plain tables") {
  RealMatrix t(2, 2);
  t << 1.0, 0.5, -2.0, 1e-20;
  CHECK(format_csv_matrix(t) == "1,0.5\n-2,9.9999999999999995e-21\n");

  ZTFGrid grid;
  grid.x0 = -1;
  grid.m = 2;
  grid.values = Matrix::Zero(2, 1);
  grid.values(1, 0) = Complex(3.0, -1.0);
  CHECK(format_grid_csv(grid) == "-1,0,0,0\n-1,1,3,-1\n");
}

TEST_CASE("PGM shading") {
  ImageSpec mid{ShadeMode::midgrey_zero, 1.0};
  ImageSpec white{ShadeMode::white_zero, 1.0};

  const auto zeros = pixels(render_pgm(RealMatrix::Zero(3, 4), mid));
  CHECK(zeros.size() == 12);
  for (int p : zeros) CHECK(p == 128);

  RealMatrix ramp(1, 2);
  ramp << 0.0, 7.0;
  CHECK(pixels(render_pgm(ramp, white)) == std::vector<int>{255, 0});

  RealMatrix sym(1, 3);
  sym << 2.0, -2.0, 0.0;
  CHECK(pixels(render_pgm(sym, mid)) == std::vector<int>{0, 255, 128});

  RealMatrix neg(1, 2);
  neg << -1.0, -3.0;
  CHECK(pixels(render_pgm(neg, white)) == std::vector<int>{255, 255});

  const auto text = render_pgm(RealMatrix::Constant(5, 40, 1.0), white);
  CHECK(text.rfind("P2\n40 5\n255\n", 0) == 0);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) CHECK(line.size() <= 70);
}

TEST_CASE("PGM gamma") {
  RealMatrix v(1, 2);
  v << 0.25, 1.0;
  // sign(v)|v|^0.5 maps 0.25 to 0.5 of the maximum
  CHECK(pixels(render_pgm(v, ImageSpec{ShadeMode::white_zero, 0.5})) == std::vector<int>{128, 0});
}

TEST_CASE("periodization") {
  auto g = build_cyclic(4);
  ZSignal u;
  u.offset = 1;
  u.values = Vector::Zero(2);
  u.values << 1.0, 2.0;
  const auto p = periodize(u, g);
  CHECK(p.values() == (Vector(4) << 0.0, 1.0, 2.0, 0.0).finished());

  ZSignal pair;
  pair.offset = -4;
  pair.values = Vector::Zero(8);
  pair.values[0] = 1.0;
  pair.values[4] = 3.0;
  const auto q = periodize(pair, g);
  CHECK(q(0) == Complex(4.0, 0.0));
  CHECK(q(1) == Complex{});
  CHECK_THROWS_AS(periodize(u, build_dihedral(3)), Error);
}
