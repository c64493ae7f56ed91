#include "gtfa/signalio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "gtfa/errors.hpp"
#include "gtfa/numfmt.hpp"

namespace gtfa {

namespace {

struct Row {
  int line = 0;
  std::vector<std::string> fields;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

bool parse_number(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto r = std::from_chars(first, last, out);
  return r.ec == std::errc() && r.ptr == last && first != last;
}

bool parse_integer(const std::string& s, long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto r = std::from_chars(first, last, out);
  return r.ec == std::errc() && r.ptr == last && first != last;
}

// Splits into comma-separated rows, dropping blank lines and a leading header.
std::vector<Row> split_rows(const std::string& text, std::size_t columns) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty()) continue;
    Row row{number, {}};
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = t.find(',', start);
      row.fields.push_back(trim(std::string_view(t).substr(start, comma == std::string::npos ? comma : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    double probe = 0.0;
    if (first && !parse_number(row.fields[0], probe)) {
      first = false;
      continue;
    }
    first = false;
    if (row.fields.size() != columns)
      throw ParseError("expected " + std::to_string(columns) + " fields, found " + std::to_string(row.fields.size()),
                       number);
    rows.push_back(std::move(row));
  }
  return rows;
}

long field_int(const Row& r, std::size_t i, long lo, long hi, const char* what) {
  long v = 0;
  if (!parse_integer(r.fields[i], v)) throw ParseError(std::string("malformed ") + what + " '" + r.fields[i] + "'", r.line);
  if (v < lo || v > hi) throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range", r.line);
  return v;
}

double field_real(const Row& r, std::size_t i) {
  double v = 0.0;
  if (!parse_number(r.fields[i], v)) throw ParseError("malformed number '" + r.fields[i] + "'", r.line);
  return v;
}

Complex field_complex(const Row& r, std::size_t i) { return {field_real(r, i), field_real(r, i + 1)}; }

std::string complex_fields(Complex c) { return format_g17(c.real()) + "," + format_g17(c.imag()); }

// Fills a |G| x |G| block-packed matrix from rows (point, irrep, row, col, re, im).
Matrix parse_block_rows(const std::string& text, const GroupPtr& g, int point_col, const char* point_name) {
  const int n = g->order();
  const auto rows = split_rows(text, 6);
  Matrix data = Matrix::Zero(n, n);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& r : rows) {
    const int irrep_col = 1 - point_col;
    const int p = static_cast<int>(field_int(r, point_col, 0, n - 1, point_name));
    const int e = static_cast<int>(field_int(r, irrep_col, 0, g->irrep_count() - 1, "irrep index"));
    const int i = static_cast<int>(field_int(r, 2, 0, g->dim(e) - 1, "row"));
    const int j = static_cast<int>(field_int(r, 3, 0, g->dim(e) - 1, "col"));
    const int packed = g->offset(e) + j * g->dim(e) + i;
    char& s = seen[static_cast<std::size_t>(packed) * n + p];
    if (s) throw ParseError("duplicate entry", r.line);
    s = 1;
    data(packed, p) = field_complex(r, 4);
  }
  if (rows.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("expected " + std::to_string(n * n) + " rows, found " + std::to_string(rows.size()), 0);
  return data;
}

std::string format_block_rows(const Group& g, const Matrix& data, bool point_first) {
  std::string s;
  for (int p = 0; p < g.order(); ++p)
    for (int e = 0; e < g.irrep_count(); ++e)
      for (int j = 0; j < g.dim(e); ++j)
        for (int i = 0; i < g.dim(e); ++i) {
          const Complex c = data(g.offset(e) + j * g.dim(e) + i, p);
          const std::string a = std::to_string(point_first ? p : e);
          const std::string b = std::to_string(point_first ? e : p);
          s += a + "," + b + "," + std::to_string(i) + "," + std::to_string(j) + "," + complex_fields(c) + "\n";
        }
  return s;
}

std::uint32_t le32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t le16(const std::string& b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot move output into place at '" + path + "'");
  }
}

WavData parse_wav_mono16(const std::string& b) {
  if (b.size() < 12) throw TruncatedFile("file shorter than a RIFF header");
  if (b.compare(0, 4, "RIFF") != 0 || b.compare(8, 4, "WAVE") != 0) throw UnsupportedFormat("not a RIFF/WAVE file");
  std::size_t at = 12;
  bool have_fmt = false;
  WavData out;
  while (true) {
    if (at + 8 > b.size()) throw TruncatedFile(have_fmt ? "missing data chunk" : "missing fmt chunk");
    const std::string id = b.substr(at, 4);
    const std::size_t size = le32(b, at + 4);
    const std::size_t body = at + 8;
    if (id == "fmt ") {
      if (size < 16 || body + 16 > b.size()) throw TruncatedFile("fmt chunk cut short");
      const auto format = le16(b, body);
      const auto channels = le16(b, body + 2);
      const auto bits = le16(b, body + 14);
      if (format != 1) throw UnsupportedFormat("only PCM (format 1) is supported, found format " + std::to_string(format));
      if (channels != 1) throw UnsupportedFormat("only mono is supported, found " + std::to_string(channels) + " channels");
      if (bits != 16) throw UnsupportedFormat("only 16-bit samples are supported, found " + std::to_string(bits));
      out.sample_rate = static_cast<int>(le32(b, body + 4));
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw UnsupportedFormat("data chunk precedes fmt chunk");
      if (body + size > b.size()) throw TruncatedFile("data chunk cut short");
      if (size % 2 != 0) throw TruncatedFile("data chunk holds a partial sample");
      const std::size_t count = size / 2;
      out.signal.offset = 0;
      out.signal.values = Vector::Zero(static_cast<Eigen::Index>(count));
      for (std::size_t i = 0; i < count; ++i) {
        const auto raw = static_cast<std::int16_t>(le16(b, body + 2 * i));
        out.signal.values[static_cast<Eigen::Index>(i)] = static_cast<double>(raw) / 32768.0;
      }
      return out;
    }
    at = body + size + (size & 1);
  }
}

WavData read_wav_mono16(const std::string& path) { return parse_wav_mono16(read_text_file(path)); }

Signal parse_csv_signal(const std::string& text, const GroupPtr& g) {
  const int n = g->order();
  const auto rows = split_rows(text, 3);
  auto u = Signal::zeros(g);
  std::vector<char> seen(n, 0);
  for (const auto& r : rows) {
    const int x = static_cast<int>(field_int(r, 0, 0, n - 1, "index"));
    if (seen[x]) throw ParseError("duplicate index " + std::to_string(x), r.line);
    seen[x] = 1;
    u(x) = field_complex(r, 1);
  }
  if (rows.size() != static_cast<std::size_t>(n))
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()), 0);
  return u;
}

Signal read_csv_signal(const std::string& path, const GroupPtr& g) { return parse_csv_signal(read_text_file(path), g); }

ZSignal parse_csv_zsignal(const std::string& text) {
  const auto rows = split_rows(text, 3);
  if (rows.empty()) return {};
  std::map<long, Complex> samples;
  for (const auto& r : rows) {
    const long x = field_int(r, 0, -(1L << 40), 1L << 40, "index");
    if (!samples.emplace(x, field_complex(r, 1)).second) throw ParseError("duplicate index", r.line);
  }
  ZSignal u;
  u.offset = samples.begin()->first;
  u.values = Vector::Zero(samples.rbegin()->first - u.offset + 1);
  for (const auto& [x, v] : samples) u.values[x - u.offset] = v;
  return u;
}

ZSignal read_csv_zsignal(const std::string& path) { return parse_csv_zsignal(read_text_file(path)); }

std::string format_signal_csv(const Signal& u) {
  std::string s;
  for (int x = 0; x < u.size(); ++x) s += std::to_string(x) + "," + complex_fields(u(x)) + "\n";
  return s;
}

std::string format_zsignal_csv(const ZSignal& u) {
  std::string s;
  for (long i = 0; i < u.size(); ++i) s += std::to_string(u.offset + i) + "," + complex_fields(u.values[i]) + "\n";
  return s;
}

std::string format_tf_csv(const TFFunction& a) { return format_block_rows(a.group(), a.data(), true); }

TFFunction parse_tf_csv(const std::string& text, const GroupPtr& g) {
  return {g, parse_block_rows(text, g, 0, "time index")};
}

std::string format_operator_csv(const GroupOperator& b) {
  std::string s;
  const int n = b.group().order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s += std::to_string(x) + "," + std::to_string(y) + "," + complex_fields(b.kernel()(x, y)) + "\n";
  return s;
}

GroupOperator parse_operator_csv(const std::string& text, const GroupPtr& g) {
  const int n = g->order();
  const auto rows = split_rows(text, 4);
  Matrix k = Matrix::Zero(n, n);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& r : rows) {
    const int x = static_cast<int>(field_int(r, 0, 0, n - 1, "x"));
    const int y = static_cast<int>(field_int(r, 1, 0, n - 1, "y"));
    char& s = seen[static_cast<std::size_t>(x) * n + y];
    if (s) throw ParseError("duplicate entry", r.line);
    s = 1;
    k(x, y) = field_complex(r, 2);
  }
  if (rows.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("expected " + std::to_string(n * n) + " rows, found " + std::to_string(rows.size()), 0);
  return {g, std::move(k)};
}

std::string format_kernel_csv(const AmbiguityFunction& phi) {
  const Group& g = phi.group();
  std::string s = "xi_index,y_index,row,col,re,im\n";
  for (int xi = 0; xi < g.irrep_count(); ++xi)
    for (int y = 0; y < g.order(); ++y)
      for (int j = 0; j < g.dim(xi); ++j)
        for (int i = 0; i < g.dim(xi); ++i)
          s += std::to_string(xi) + "," + std::to_string(y) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
               complex_fields(phi.block(y, xi)(i, j)) + "\n";
  return s;
}

AmbiguityFunction parse_kernel_csv(const std::string& text, const GroupPtr& g) {
  return {g, parse_block_rows(text, g, 1, "lag index")};
}

std::string format_grid_csv(const ZTFGrid& grid) {
  std::string s;
  for (Eigen::Index c = 0; c < grid.values.cols(); ++c)
    for (Eigen::Index j = 0; j < grid.values.rows(); ++j)
      s += std::to_string(grid.x0 + c) + "," + std::to_string(j) + "," + complex_fields(grid.values(j, c)) + "\n";
  return s;
}

std::string format_csv_matrix(const RealMatrix& table) {
  std::string s;
  for (Eigen::Index r = 0; r < table.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.cols(); ++c) {
      if (c) s += ",";
      s += format_g17(table(r, c));
    }
    s += "\n";
  }
  return s;
}

std::string render_pgm(const RealMatrix& values, const ImageSpec& spec) {
  const Eigen::Index h = values.rows();
  const Eigen::Index w = values.cols();
  RealMatrix v = values;
  if (spec.gamma != 1.0)
    v = v.unaryExpr([g = spec.gamma](double t) { return std::copysign(std::pow(std::abs(t), g), t); });

  std::vector<int> px(static_cast<std::size_t>(h * w));
  if (spec.mode == ShadeMode::midgrey_zero) {
    const double s = h * w > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
    for (Eigen::Index r = 0; r < h; ++r)
      for (Eigen::Index c = 0; c < w; ++c) {
        const double t = s > 0.0 ? std::clamp(v(r, c) / s, -1.0, 1.0) : 0.0;
        px[r * w + c] = static_cast<int>(std::lround(127.5 * (1.0 - t)));
      }
  } else {
    const double m = h * w > 0 ? v.maxCoeff() : 0.0;
    for (Eigen::Index r = 0; r < h; ++r)
      for (Eigen::Index c = 0; c < w; ++c) {
        const double t = m > 0.0 ? std::clamp(v(r, c) / m, 0.0, 1.0) : 0.0;
        px[r * w + c] = static_cast<int>(std::lround(255.0 * (1.0 - t)));
      }
  }

  std::string s = "P2\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (Eigen::Index r = 0; r < h; ++r) {
    std::string line;
    for (Eigen::Index c = 0; c < w; ++c) {
      const std::string tok = std::to_string(px[r * w + c]);
      // plain PGM lines stay within 70 characters
      if (!line.empty() && line.size() + 1 + tok.size() > 70) {
        s += line + "\n";
        line.clear();
      }
      if (!line.empty()) line += " ";
      line += tok;
    }
    s += line + "\n";
  }
  return s;
}

void write_pgm(const std::string& path, const RealMatrix& values, const ImageSpec& spec) {
  write_text_atomic(path, render_pgm(values, spec));
}

Signal periodize(const ZSignal& u, const GroupPtr& cyclic) {
  const auto n = cyclic->cyclic_order();
  if (!n) throw Error("periodize requires a standard cyclic group");
  auto s = Signal::zeros(cyclic);
  for (long i = 0; i < u.size(); ++i) {
    const long x = ((u.offset + i) % *n + *n) % *n;
    s(static_cast<int>(x)) += u.values[i];
  }
  return s;
}

}  // namespace gtfa
