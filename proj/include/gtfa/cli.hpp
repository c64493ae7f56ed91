#pragma once

#include <string>
#include <vector>

#include "gtfa/limits.hpp"
#include "gtfa/transforms.hpp"

namespace gtfa {

/// `cyclic:N`, `dihedral:n`, `product:<a>x<b>` (nested specs allowed) or `file:<path>`.
GroupPtr parse_group_spec(const std::string& spec);

/// `kn`, `anti-kn`, `born-jordan`, `wigner-odd`, `margin-fix`,
/// `spectrogram:<window.csv>`, `commutator:<f.csv>:<g.csv>` or `csv:<kernel.csv>`.
CohenKernel parse_kernel_spec(const std::string& spec, const GroupPtr& g);

/// Real linear chirp cos(2 pi (f0 t + (f1 - f0) t^2 / (2 (samples - 1)))), t = 0..samples-1,
/// frequencies in cycles per sample.
ZSignal synthetic_chirp(int samples, double f0 = 0.1, double f1 = 0.35);

struct FigureOptions {
  /// Gaussian window width in samples; 0 selects N / 16.
  double sigma = 0.0;
  bool axis_fix = true;
};

/// Matrices ready for rendering: row = frequency bin (0 at top), column = time.
struct FigureSet {
  int n = 0;
  double sigma = 0.0;
  RealMatrix q_z;          // Q_Z[u] on an N-point frequency grid
  RealMatrix q_cyclic;     // Q_{Z/NZ} of the periodized signal
  RealMatrix spectrogram;  // |G_w u|^2 with the Gaussian window
};

FigureSet compute_figures(const ZSignal& u, const FigureOptions& options);

/// Entry point of the command-line tool; the vector form takes the arguments
/// without the program name. Exit codes: 0 ok, 1 a required
/// property fails, 2 usage or input error, 3 numeric error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace gtfa
