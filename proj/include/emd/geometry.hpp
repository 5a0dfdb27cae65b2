#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace emd {

inline constexpr int kMaxDim = 8;

// Subdivision floor: pieces smaller than this signal pathological input.
inline constexpr double kLengthFloor = 1e-12;

enum class Metric { L1, L2 };

const char* metric_name(Metric m);

/// Point in R^d, 1 <= d <= 8. Coordinates beyond dim() are zero.
class Vec {
 public:
  Vec() { c_.fill(0.0); }
  explicit Vec(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("Vec: dimension out of range");
    c_.fill(0.0);
  }
  Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
    if (dim_ < 1 || dim_ > kMaxDim) throw std::invalid_argument("Vec: dimension out of range");
    c_.fill(0.0);
    int i = 0;
    for (double x : xs) c_[i++] = x;
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }

  Vec operator+(const Vec& o) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  Vec operator*(double s) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  double dot(const Vec& o) const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += c_[i] * o.c_[i];
    return s;
  }
  bool operator==(const Vec& o) const { return dim_ == o.dim_ && c_ == o.c_; }

  bool finite() const;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

struct SegmentGeom {
  Vec a, b;
};

/// k-simplex given by k+1 vertices (k=1 segment, k=2 triangle, k=d full cell).
struct SimplexGeom {
  std::vector<Vec> vertices;
  int intrinsic_dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Axis-aligned box, lo[i] < hi[i].
struct BoxCell {
  Vec lo, hi;
  int dim() const { return lo.dim(); }
  Vec center() const { return (lo + hi) * 0.5; }
  double side(int axis) const { return hi[axis] - lo[axis]; }
  double volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= side(i);
    return v;
  }
  bool contains(const Vec& p, double eps = 0.0) const;
};

struct Extremes {
  double dmin = 0.0;
  double dmax = 0.0;
};

double dist(const Vec& p, const Vec& q, Metric metric);

double segment_length(const SegmentGeom& s, Metric metric = Metric::L2);

Extremes point_segment_extremes(const Vec& p, const SegmentGeom& s, Metric metric);
Extremes point_box_extremes(const Vec& p, const BoxCell& c, Metric metric);
Extremes segment_segment_extremes(const SegmentGeom& u, const SegmentGeom& v, Metric metric);
Extremes box_box_extremes(const BoxCell& a, const BoxCell& b, Metric metric);

/// k-dimensional measure (length/area/volume) via the Gram determinant.
/// Throws on degenerate input.
double simplex_measure(const SimplexGeom& s);

/// Length of s inside the closed box (slab clipping).
double clip_segment_box(const SegmentGeom& s, const BoxCell& c);

/// Half-space {x : normal . x <= offset}.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// Options for the Monte Carlo clipping path (d >= 4).
struct ClipOptions {
  std::uint64_t seed = 0;
  int mc_samples = 1000000;
};

struct ClipResult {
  double measure = 0.0;
  double sigma = 0.0;  // 0 on the exact path
};

/// Measure of s ∩ c for a full-dimensional simplex (or planar triangle, d=2).
/// Exact half-space clipping for d <= 3, fixed-seed Monte Carlo for d >= 4.
ClipResult clip_simplex_box(const SimplexGeom& s, const BoxCell& c, const ClipOptions& opt = {});

/// Measure of s ∩ c ∩ (the given half-spaces); same exact/MC split as above.
ClipResult clip_simplex_region(const SimplexGeom& s, const BoxCell& c,
                               const std::vector<Halfspace>& cuts, const ClipOptions& opt = {});

/// Decomposes s ∩ c into simplices (triangulation from an interior point).
/// Exact path only (d <= 3); throws for d >= 4.
std::vector<SimplexGeom> clip_simplex_box_parts(const SimplexGeom& s, const BoxCell& c);

/// Inward-facing facet half-spaces of a full-dimensional simplex.
std::vector<Halfspace> simplex_halfspaces(const SimplexGeom& s);

bool point_in_simplex(const Vec& p, const SimplexGeom& s, double eps = 1e-12);

double longest_edge(const SimplexGeom& s, Metric metric = Metric::L2);

}  // namespace emd
