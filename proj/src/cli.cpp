#include "gtfa/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>

#include "gtfa/errors.hpp"
#include "gtfa/numfmt.hpp"
#include "gtfa/properties.hpp"
#include "gtfa/quantization.hpp"
#include "gtfa/reconstruct.hpp"
#include "gtfa/signalio.hpp"

namespace gtfa {

namespace {

int parse_positive(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error("malformed group spec '" + spec + "'");
  return v;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
  if (starts_with(spec, "cyclic:")) return build_cyclic(parse_positive(spec.substr(7), spec));
  if (starts_with(spec, "dihedral:")) return build_dihedral(parse_positive(spec.substr(9), spec));
  if (starts_with(spec, "file:")) return load_group_file(spec.substr(5));
  if (starts_with(spec, "product:")) {
    const std::string rest = spec.substr(8);
    // try every 'x' as the separator; the left factor must itself parse
    for (std::size_t at = rest.find('x'); at != std::string::npos; at = rest.find('x', at + 1)) {
      GroupPtr left;
      try {
        left = parse_group_spec(rest.substr(0, at));
      } catch (const Error&) {
        continue;
      }
      return build_product(left, parse_group_spec(rest.substr(at + 1)));
    }
    throw Error("malformed product spec '" + spec + "'");
  }
  throw Error("unknown group spec '" + spec + "'");
}

CohenKernel parse_kernel_spec(const std::string& spec, const GroupPtr& g) {
  if (spec == "kn") return kn_kernel(g);
  if (spec == "anti-kn") return anti_kn_kernel(g);
  if (spec == "born-jordan") return born_jordan_cyclic_kernel(g);
  if (spec == "wigner-odd") return wigner_kernel_odd_cyclic(g);
  if (spec == "margin-fix") return margin_fix_kernel(g);
  if (starts_with(spec, "spectrogram:")) return spectrogram_kernel(read_csv_signal(spec.substr(12), g));
  if (starts_with(spec, "csv:")) {
    return {"csv", parse_kernel_csv(read_text_file(spec.substr(4)), g), {}};
  }
  if (starts_with(spec, "commutator:")) {
    const std::string rest = spec.substr(11);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw Error("commutator kernel needs two files: commutator:<f.csv>:<g.csv>");
    return commutator_kernel(read_csv_signal(rest.substr(0, colon), g), read_csv_signal(rest.substr(colon + 1), g));
  }
  throw Error("unknown kernel spec '" + spec + "'");
}

ZSignal synthetic_chirp(int samples, double f0, double f1) {
  if (samples < 2) throw Error("chirp needs at least two samples");
  ZSignal u{0, Vector::Zero(samples)};
  const double span = samples - 1;
  for (int t = 0; t < samples; ++t) {
    const double phase = f0 * t + (f1 - f0) * t * t / (2.0 * span);
    u.values[t] = std::cos(2.0 * kPi * (phase - std::floor(phase)));
  }
  return u;
}

FigureSet compute_figures(const ZSignal& u, const FigureOptions& options) {
  const int n = static_cast<int>(u.size());
  if (n < 1) throw Error("empty signal");
  FigureSet f;
  f.n = n;
  f.sigma = options.sigma > 0.0 ? options.sigma : n / 16.0;
  f.q_z = q_z_distribution(u, n, options.axis_fix).values.real();

  const GroupPtr g = build_cyclic(n);
  const Signal p = periodize(u, g);
  f.q_cyclic = cohen_distribution(born_jordan_cyclic_kernel(g), p).data().real();
  f.spectrogram = stft(gaussian_window(g, f.sigma), p).data().cwiseAbs2();
  return f;
}

namespace {

RealMatrix trace_image(const TFFunction& d) {
  const Group& g = d.group();
  RealMatrix img(g.irrep_count(), g.order());
  for (int e = 0; e < g.irrep_count(); ++e)
    for (int x = 0; x < g.order(); ++x) img(e, x) = d.block(x, e).trace().real();
  return img;
}

void print_warnings(const CohenKernel& k) {
  for (const auto& w : k.warnings) std::cerr << "warning: " << w << "\n";
}

std::string sibling_pgm(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".pgm");
  return p.string();
}

struct Config {
  std::string group;
  std::string kernel;
  std::string in;
  std::string second;
  std::string out;
  std::string pgm;
  std::string pgm_out;
  double gamma = 1.0;
  std::vector<std::string> require;
  std::string csv;
  bool no_cross_check = false;
  std::string reference;
  std::string report;
  double tol_zero = 1e-9;
  std::string wav;
  std::string synthetic;
  int samples = 256;
  std::string outdir;
  double sigma = 0.0;
  bool axis_fix = true;
};

ShadeMode shade_from(const std::string& s) { return s == "white" ? ShadeMode::white_zero : ShadeMode::midgrey_zero; }

int cmd_transform(const Config& c) {
  const GroupPtr g = parse_group_spec(c.group);
  const CohenKernel k = parse_kernel_spec(c.kernel, g);
  print_warnings(k);
  const Signal u = read_csv_signal(c.in, g);
  const Signal v = c.second.empty() ? u : read_csv_signal(c.second, g);
  const TFFunction d = cohen_transform(k, u, v);
  write_text_atomic(c.out, format_tf_csv(d));
  if (!c.pgm.empty())
    write_pgm(c.pgm_out.empty() ? sibling_pgm(c.out) : c.pgm_out, trace_image(d), {shade_from(c.pgm), c.gamma});
  return 0;
}

int cmd_verify(const Config& c) {
  const std::set<std::string> known(property_names().begin(), property_names().end());
  for (const auto& r : c.require)
    if (!known.count(r)) throw Error("unknown property '" + r + "' in --require");
  const GroupPtr g = parse_group_spec(c.group);
  const CohenKernel k = parse_kernel_spec(c.kernel, g);
  print_warnings(k);
  const auto reports = run_all_properties(k, !c.no_cross_check);
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << format_report_line(r) << "\n";
    for (const auto& need : c.require)
      if (need == r.name && !r.holds) ok = false;
  }
  if (!c.csv.empty()) write_text_atomic(c.csv, format_report_csv(reports));
  return ok ? 0 : 1;
}

int cmd_quantize(const Config& c) {
  const GroupPtr g = parse_group_spec(c.group);
  const CohenKernel k = parse_kernel_spec(c.kernel, g);
  print_warnings(k);
  const TFFunction a = parse_tf_csv(read_text_file(c.in), g);
  write_text_atomic(c.out, format_operator_csv(quantize(k, a)));
  return 0;
}

int cmd_dequantize(const Config& c) {
  const GroupPtr g = parse_group_spec(c.group);
  const CohenKernel k = parse_kernel_spec(c.kernel, g);
  print_warnings(k);
  const GroupOperator b = parse_operator_csv(read_text_file(c.in), g);
  write_text_atomic(c.out, format_tf_csv(dequantize(k, b)));
  return 0;
}

int cmd_reconstruct(const Config& c) {
  const GroupPtr g = parse_group_spec(c.group);
  const TFFunction q = parse_tf_csv(read_text_file(c.in), g);
  const PhaseRetrieval pr = phase_retrieve(q, c.tol_zero);
  write_text_atomic(c.out, format_signal_csv(pr.signal));

  TFFunction diff = cohen_distribution(born_jordan_cyclic_kernel(g), pr.signal);
  diff.data() -= q.data();
  std::string rep = "pivot=" + std::to_string(pr.pivot) + "\n" + "pivot_magnitude=" + format_g17(pr.pivot_magnitude) +
                    "\n" + "islands=" + std::to_string(pr.islands) + "\n" +
                    "all_zero=" + (pr.all_zero ? "1" : "0") + "\n" +
                    "distribution_residual=" + format_g17(tf_norm(diff)) + "\n";
  if (!c.reference.empty())
    rep += "class_distance=" + format_g17(class_distance(read_csv_signal(c.reference, g), pr.signal)) + "\n";
  if (pr.all_zero) rep += "note=every margin is below the zero tolerance; returned the zero signal\n";
  if (c.report.empty())
    std::cout << rep;
  else
    write_text_atomic(c.report, rep);
  return 0;
}

int cmd_figures(const Config& c) {
  if (c.wav.empty() == c.synthetic.empty()) throw Error("give exactly one of --wav or --synthetic");
  ZSignal u;
  if (!c.wav.empty()) {
    u = read_wav_mono16(c.wav).signal;
  } else {
    if (c.synthetic != "chirp") throw Error("unknown synthetic signal '" + c.synthetic + "'");
    u = synthetic_chirp(c.samples);
  }
  std::filesystem::create_directories(c.outdir);
  const std::filesystem::path dir(c.outdir);
  const FigureSet f = compute_figures(u, {c.sigma, c.axis_fix});
  write_text_atomic((dir / "waveform.csv").string(), format_zsignal_csv(u));
  write_pgm((dir / "qz.pgm").string(), f.q_z, {ShadeMode::midgrey_zero, c.gamma});
  write_pgm((dir / "qcyclic.pgm").string(), f.q_cyclic, {ShadeMode::midgrey_zero, c.gamma});
  write_pgm((dir / "spectrogram.pgm").string(), f.spectrogram, {ShadeMode::white_zero, c.gamma});
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Cohen-class time-frequency analysis on finite groups", "gtfa"};
  app.require_subcommand(1);
  Config c;

  auto add_group = [&c](CLI::App* s) { s->add_option("--group", c.group, "cyclic:N | dihedral:n | product:<a>x<b> | file:<path>")->required(); };
  auto add_kernel = [&c](CLI::App* s) {
    s->add_option("--kernel", c.kernel,
                  "kn | anti-kn | born-jordan | wigner-odd | margin-fix | spectrogram:<w.csv> | "
                  "commutator:<f.csv>:<g.csv> | csv:<kernel.csv>")
        ->required();
  };

  auto* transform = app.add_subcommand("transform", "Compute D(u) or D(u, v) and write the symbol CSV");
  add_group(transform);
  add_kernel(transform);
  transform->add_option("--in", c.in, "signal CSV (index,re,im)")->required();
  transform->add_option("--second", c.second, "second signal CSV for the cross transform");
  transform->add_option("--out", c.out, "output CSV (x,eta_index,row,col,re,im)")->required();
  transform->add_option("--pgm", c.pgm, "also render Re tr D as a PGM")->check(CLI::IsMember({"midgrey", "white"}));
  transform->add_option("--pgm-out", c.pgm_out, "PGM path (default: output path with .pgm)");
  transform->add_option("--gamma", c.gamma, "apply sign(v)|v|^gamma before shading");

  auto* verify = app.add_subcommand("verify", "Run every property checker on a kernel");
  add_group(verify);
  add_kernel(verify);
  verify->add_option("--require", c.require, "comma-separated properties that must hold")->delimiter(',');
  verify->add_option("--csv", c.csv, "also write the reports as CSV");
  verify->add_flag("--no-cross-check", c.no_cross_check, "skip the sampled transform-side checks");

  auto* quant = app.add_subcommand("quantize", "Symbol CSV to operator CSV");
  add_group(quant);
  add_kernel(quant);
  quant->add_option("--in,--symbol", c.in, "symbol CSV (x,eta_index,row,col,re,im)")->required();
  quant->add_option("--out", c.out, "operator CSV (x,y,re,im)")->required();

  auto* dequant = app.add_subcommand("dequantize", "Operator CSV to symbol CSV");
  add_group(dequant);
  add_kernel(dequant);
  dequant->add_option("--in,--operator", c.in, "operator CSV (x,y,re,im)")->required();
  dequant->add_option("--out", c.out, "symbol CSV")->required();

  auto* recon = app.add_subcommand("reconstruct", "Recover [u] from a Born-Jordan distribution on Z/NZ");
  add_group(recon);
  recon->add_option("--in", c.in, "distribution CSV (x,eta_index,row,col,re,im)")->required();
  recon->add_option("--out", c.out, "recovered signal CSV")->required();
  recon->add_option("--reference", c.reference, "true signal, to report the class distance");
  recon->add_option("--report", c.report, "report file (default: standard output)");
  recon->add_option("--tol-zero", c.tol_zero, "squared magnitudes below this are zero");

  auto* figures = app.add_subcommand("figures", "Render the Q_Z, periodic Q and spectrogram pictures");
  figures->add_option("--wav", c.wav, "mono 16-bit PCM WAV input");
  figures->add_option("--synthetic", c.synthetic, "built-in signal")->check(CLI::IsMember({"chirp"}));
  figures->add_option("--samples", c.samples, "length of the synthetic signal")->check(CLI::PositiveNumber);
  figures->add_option("--outdir", c.outdir, "output directory")->required();
  figures->add_option("--sigma", c.sigma, "Gaussian window width in samples (default N/16)");
  figures->add_flag("--axis-fix,!--no-axis-fix", c.axis_fix, "add the lag-zero term to Q_Z (default on)");
  figures->add_option("--gamma", c.gamma, "apply sign(v)|v|^gamma before shading");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (transform->parsed()) return cmd_transform(c);
    if (verify->parsed()) return cmd_verify(c);
    if (quant->parsed()) return cmd_quantize(c);
    if (dequant->parsed()) return cmd_dequantize(c);
    if (recon->parsed()) return cmd_reconstruct(c);
    if (figures->parsed()) return cmd_figures(c);
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gtfa");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace gtfa
