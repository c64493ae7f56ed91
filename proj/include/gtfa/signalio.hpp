#pragma once

#include <string>

#include "gtfa/limits.hpp"
#include "gtfa/quantization.hpp"

namespace gtfa {

struct WavData {
  ZSignal signal;
  int sample_rate = 0;
};

/// RIFF/WAVE, PCM format 1, 16 bit, one channel. Samples are scaled by 1/32768.
WavData read_wav_mono16(const std::string& path);
WavData parse_wav_mono16(const std::string& bytes);

/// `index,re,im` rows, one per group element in any order. A non-numeric first
/// line is taken as a header and skipped.
Signal read_csv_signal(const std::string& path, const GroupPtr& g);
Signal parse_csv_signal(const std::string& text, const GroupPtr& g);
/// `index,re,im` rows with integer time indices on Z; gaps are zero.
ZSignal parse_csv_zsignal(const std::string& text);
ZSignal read_csv_zsignal(const std::string& path);

std::string format_signal_csv(const Signal& u);
std::string format_zsignal_csv(const ZSignal& u);
/// Symbol rows `x,eta_index,row,col,re,im`.
std::string format_tf_csv(const TFFunction& a);
TFFunction parse_tf_csv(const std::string& text, const GroupPtr& g);
/// Operator rows `x,y,re,im`.
std::string format_operator_csv(const GroupOperator& b);
GroupOperator parse_operator_csv(const std::string& text, const GroupPtr& g);
/// Kernel rows with header `xi_index,y_index,row,col,re,im`.
std::string format_kernel_csv(const AmbiguityFunction& phi);
AmbiguityFunction parse_kernel_csv(const std::string& text, const GroupPtr& g);
/// Grid rows `x,theta_index,re,im`.
std::string format_grid_csv(const ZTFGrid& grid);
/// Plain numeric table, one matrix row per line.
std::string format_csv_matrix(const RealMatrix& table);

std::string read_text_file(const std::string& path);
/// Writes to a sibling temporary file and renames it over the target.
void write_text_atomic(const std::string& path, const std::string& content);

enum class ShadeMode { midgrey_zero, white_zero };

struct ImageSpec {
  ShadeMode mode = ShadeMode::midgrey_zero;
  double gamma = 1.0;
};

/// Plain (P2) PGM with maxval 255. Matrix rows become image rows top to bottom.
/// Higher values are darker; see ShadeMode for where zero lands.
std::string render_pgm(const RealMatrix& values, const ImageSpec& spec);
void write_pgm(const std::string& path, const RealMatrix& values, const ImageSpec& spec);

/// Folds the support of u onto Z/NZ by summation.
Signal periodize(const ZSignal& u, const GroupPtr& cyclic);

}  // namespace gtfa
