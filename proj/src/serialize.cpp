#include "gstlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gstlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (!first_in_scope_.back()) out_ << ",";
    first_in_scope_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ << "{";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ << "}";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ << "[";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ << "]";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  if (!first_in_scope_.back()) out_ << ",";
  first_in_scope_.back() = false;
  out_ << "\"" << name << "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  if (std::isfinite(v))
    out_ << format_double(v);
  else
    out_ << "null";
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  separate();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separate();
  out_ << "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out_ << '\\';
    out_ << c;
  }
  out_ << "\"";
  return *this;
}

JsonWriter& JsonWriter::value_raw(const std::string& token) {
  separate();
  out_ << token;
  return *this;
}

namespace {

void write_complex_block(JsonWriter& w, const CMat& block) {
  w.begin_array();
  for (long j = 0; j < block.cols(); ++j) {
    for (long i = 0; i < block.rows(); ++i) {
      w.begin_array();
      w.value(block(i, j).real());
      w.value(block(i, j).imag());
      w.end_array();
    }
  }
  w.end_array();
}

void write_eigenvalues(JsonWriter& w, const CVec& values) {
  w.begin_array();
  for (long i = 0; i < values.size(); ++i) {
    w.begin_array();
    w.value(values[i].real());
    w.value(values[i].imag());
    w.end_array();
  }
  w.end_array();
}

}  // namespace

std::string to_json(const GstBasis& basis) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(basis.n());
  w.key("M").value(basis.group_count());
  w.key("groups").begin_array();
  for (int k = 0; k < basis.group_count(); ++k) {
    w.begin_object();
    w.key("eigenvalues");
    write_eigenvalues(w, basis.partition.group_eigenvalues(k));
    w.key("block");
    write_complex_block(w, basis.blocks[k]);  // column-major [re, im] pairs
    w.end_object();
  }
  w.end_array();
  w.key("condition_estimate").value(basis.condition_estimate);
  w.end_object();
  return w.str();
}

std::string to_json(const DwBasis& basis) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(basis.n());
  w.key("M").value(basis.requested_levels);
  w.key("epsilon").value(basis.epsilon);
  w.key("achieved_levels").value(basis.achieved_levels());
  w.key("groups").begin_array();
  for (const DwLevel& lvl : basis.levels) {
    w.begin_object();
    w.key("level").value(lvl.index);
    w.key("eigenvalue_range")
        .begin_array()
        .value(lvl.range_low)
        .value(lvl.range_high)
        .end_array();
    w.key("block");
    write_complex_block(w, lvl.basis.cast<Complex>());
    w.end_object();
  }
  w.end_array();
  w.key("terminal").begin_object();
  w.key("eigenvalue_range")
      .begin_array()
      .value(basis.terminal_range_low)
      .value(basis.terminal_range_high)
      .end_array();
  w.key("block");
  write_complex_block(w, basis.terminal.cast<Complex>());
  w.end_object();
  w.end_object();
  return w.str();
}

std::string orthogonality_pairs_csv(const OrthogonalityStats& stats) {
  std::ostringstream out;
  out << "i,j,abs_inner,eig_distance\n";
  for (const OrthogonalityPair& p : stats.pairs) {
    out << p.i << "," << p.j << "," << format_double(p.abs_inner) << ",";
    if (std::isnan(p.eig_distance))
      out << "";
    else
      out << format_double(p.eig_distance);
    out << "\n";
  }
  out << "summary,mu=" << format_double(stats.mu)
      << ",m=" << format_double(stats.m) << ",n=" << stats.cross_pair_count
      << "\n";
  return out.str();
}

std::string orthogonality_histogram_csv(const OrthogonalityStats& stats,
                                        double bin_width) {
  const int bins = static_cast<int>(std::ceil(1.0 / bin_width));
  std::vector<long long> counts(bins + 1, 0);
  for (const OrthogonalityPair& p : stats.pairs) {
    int b = static_cast<int>(p.abs_inner / bin_width);
    if (b > bins) b = bins;
    ++counts[b];
  }
  std::ostringstream out;
  out << "bin_low,bin_high,count\n";
  for (int b = 0; b <= bins; ++b) {
    if (counts[b] == 0 && b == bins) continue;
    out << format_double(b * bin_width) << ","
        << format_double((b + 1) * bin_width) << "," << counts[b] << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace gstlab
