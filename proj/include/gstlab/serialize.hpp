#ifndef GSTLAB_SERIALIZE_HPP
#define GSTLAB_SERIALIZE_HPP

#include <sstream>
#include <string>
#include <vector>

#include "gstlab/dw.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/metrics.hpp"

namespace gstlab {

// %.17g: round-trips doubles exactly and keeps result files byte-stable.
std::string format_double(double v);

// Minimal streaming JSON writer with caller-controlled key order; numbers
// go through format_double so output bytes are reproducible.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(const std::string& v);
  JsonWriter& value_raw(const std::string& token);
  std::string str() const { return out_.str(); }

 private:
  void separate();
  std::ostringstream out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

std::string to_json(const GstBasis& basis);
std::string to_json(const DwBasis& basis);

// pair CSV: i, j, abs_inner, eig_distance rows then a summary row.
std::string orthogonality_pairs_csv(const OrthogonalityStats& stats);

// histogram of |b_ij| with fixed-width bins over [0, 1].
std::string orthogonality_histogram_csv(const OrthogonalityStats& stats,
                                        double bin_width = 0.02);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace gstlab

#endif
