#include "emd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace emd {

namespace {

double abs_max_coord(const Vec& v) {
  double m = 0.0;
  for (int i = 0; i < v.dim(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

// Gaussian elimination with partial pivoting for small (n <= kMaxDim) systems.
// Returns false if the matrix is numerically singular.
bool solve_small(int n, double a[][kMaxDim], double* b, double* x) {
  int idx[kMaxDim];
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[idx[col]][col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[idx[r]][col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-14) return false;
    std::swap(idx[col], idx[piv]);
    const int pr = idx[col];
    for (int r = col + 1; r < n; ++r) {
      const int rr = idx[r];
      const double f = a[rr][col] / a[pr][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[rr][c] -= f * a[pr][c];
      b[rr] -= f * b[pr];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    const int r = idx[i];
    double s = b[r];
    for (int c = i + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[i] = s / a[r][i];
  }
  return true;
}

}  // namespace

const char* metric_name(Metric m) { return m == Metric::L1 ? "l1" : "l2"; }

bool Vec::finite() const {
  for (int i = 0; i < dim_; ++i)
    if (!std::isfinite(c_[i])) return false;
  return true;
}

bool BoxCell::contains(const Vec& p, double eps) const {
  for (int i = 0; i < dim(); ++i)
    if (p[i] < lo[i] - eps || p[i] > hi[i] + eps) return false;
  return true;
}

double dist(const Vec& p, const Vec& q, Metric metric) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dist: dimension mismatch");
  double s = 0.0;
  if (metric == Metric::L1) {
    for (int i = 0; i < p.dim(); ++i) s += std::abs(p[i] - q[i]);
    return s;
  }
  for (int i = 0; i < p.dim(); ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double segment_length(const SegmentGeom& s, Metric metric) { return dist(s.a, s.b, metric); }

Extremes point_segment_extremes(const Vec& p, const SegmentGeom& s, Metric metric) {
  if (p.dim() != s.a.dim()) throw std::invalid_argument("point_segment_extremes: dimension mismatch");
  const int d = p.dim();
  const Vec u = s.b - s.a;
  Extremes e;
  e.dmax = std::max(dist(p, s.a, metric), dist(p, s.b, metric));
  if (metric == Metric::L2) {
    const double uu = u.dot(u);
    double t = uu > 0.0 ? (p - s.a).dot(u) / uu : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    e.dmin = dist(p, s.a + u * t, metric);
    return e;
  }
  // L1: distance along the segment is piecewise linear and convex in t;
  // candidates are the endpoints and per-axis sign changes.
  double best = std::min(dist(p, s.a, metric), dist(p, s.b, metric));
  for (int k = 0; k < d; ++k) {
    if (u[k] == 0.0) continue;
    const double t = (p[k] - s.a[k]) / u[k];
    if (t > 0.0 && t < 1.0) best = std::min(best, dist(p, s.a + u * t, metric));
  }
  e.dmin = best;
  return e;
}

Extremes point_box_extremes(const Vec& p, const BoxCell& c, Metric metric) {
  if (p.dim() != c.dim()) throw std::invalid_argument("point_box_extremes: dimension mismatch");
  double smin = 0.0, smax = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    const double g = std::max({0.0, c.lo[i] - p[i], p[i] - c.hi[i]});
    const double m = std::max(p[i] - c.lo[i], c.hi[i] - p[i]);
    if (metric == Metric::L1) {
      smin += g;
      smax += m;
    } else {
      smin += g * g;
      smax += m * m;
    }
  }
  if (metric == Metric::L1) return {smin, smax};
  return {std::sqrt(smin), std::sqrt(smax)};
}

namespace {

Vec lerp(const Vec& a, const Vec& b, double t) { return a + (b - a) * t; }

double seg_seg_min_l2(const SegmentGeom& s1, const SegmentGeom& s2) {
  // Closest distance between segments via clamped quadratic minimisation.
  const Vec d1 = s1.b - s1.a;
  const Vec d2 = s2.b - s2.a;
  const Vec r = s1.a - s2.a;
  const double a = d1.dot(d1);
  const double e = d2.dot(d2);
  const double f = d2.dot(r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-300 && e <= 1e-300) {
    // both degenerate
  } else if (a <= 1e-300) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= 1e-300) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      if (denom > 1e-300) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return dist(lerp(s1.a, s1.b, s), lerp(s2.a, s2.b, t), Metric::L2);
}

double seg_seg_min_l1(const SegmentGeom& s1, const SegmentGeom& s2) {
  // f(s,t) = sum_k |A_k + B_k s - C_k t| is convex piecewise linear on the unit
  // square; the minimum lies on a corner, a kink line hitting an edge, or a
  // crossing of two kink lines.
  const int d = s1.a.dim();
  const Vec u = s1.b - s1.a;
  const Vec v = s2.b - s2.a;
  std::vector<std::array<double, 2>> cand;
  for (double s : {0.0, 1.0})
    for (double t : {0.0, 1.0}) cand.push_back({s, t});
  for (int k = 0; k < d; ++k) {
    const double A = s1.a[k] - s2.a[k];
    // kink line: A + u_k s - v_k t = 0
    for (double s : {0.0, 1.0}) {
      if (v[k] != 0.0) {
        const double t = (A + u[k] * s) / v[k];
        if (t >= 0.0 && t <= 1.0) cand.push_back({s, t});
      }
    }
    for (double t : {0.0, 1.0}) {
      if (u[k] != 0.0) {
        const double s = (v[k] * t - A) / u[k];
        if (s >= 0.0 && s <= 1.0) cand.push_back({s, t});
      }
    }
    for (int l = k + 1; l < d; ++l) {
      const double Al = s1.a[l] - s2.a[l];
      double m[2][kMaxDim] = {{u[k], -v[k]}, {u[l], -v[l]}};
      double rhs[2] = {-A, -Al};
      double st[2];
      if (solve_small(2, m, rhs, st) && st[0] >= 0.0 && st[0] <= 1.0 && st[1] >= 0.0 &&
          st[1] <= 1.0)
        cand.push_back({st[0], st[1]});
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cand)
    best = std::min(best, dist(lerp(s1.a, s1.b, c[0]), lerp(s2.a, s2.b, c[1]), Metric::L1));
  return best;
}

}  // namespace

Extremes segment_segment_extremes(const SegmentGeom& u, const SegmentGeom& v, Metric metric) {
  if (u.a.dim() != v.a.dim())
    throw std::invalid_argument("segment_segment_extremes: dimension mismatch");
  Extremes e;
  e.dmax = 0.0;
  for (const Vec* x : {&u.a, &u.b})
    for (const Vec* y : {&v.a, &v.b}) e.dmax = std::max(e.dmax, dist(*x, *y, metric));
  e.dmin = metric == Metric::L2 ? seg_seg_min_l2(u, v) : seg_seg_min_l1(u, v);
  return e;
}

Extremes box_box_extremes(const BoxCell& a, const BoxCell& b, Metric metric) {
  if (a.dim() != b.dim()) throw std::invalid_argument("box_box_extremes: dimension mismatch");
  double smin = 0.0, smax = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double g = std::max({0.0, a.lo[i] - b.hi[i], b.lo[i] - a.hi[i]});
    const double m = std::max(a.hi[i] - b.lo[i], b.hi[i] - a.lo[i]);
    if (metric == Metric::L1) {
      smin += g;
      smax += m;
    } else {
      smin += g * g;
      smax += m * m;
    }
  }
  if (metric == Metric::L1) return {smin, smax};
  return {std::sqrt(smin), std::sqrt(smax)};
}

double simplex_measure(const SimplexGeom& s) {
  const int k = s.intrinsic_dim();
  if (k < 1) throw std::invalid_argument("simplex_measure: need at least 2 vertices");
  const int d = s.vertices[0].dim();
  if (k > d) throw std::invalid_argument("simplex_measure: intrinsic dimension exceeds ambient");
  // Gram determinant of the edge vectors from vertex 0.
  double gram[kMaxDim][kMaxDim];
  double scale = 0.0;
  std::vector<Vec> edges;
  edges.reserve(k);
  for (int i = 1; i <= k; ++i) edges.push_back(s.vertices[i] - s.vertices[0]);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram[i][j] = edges[i].dot(edges[j]);
    scale = std::max(scale, gram[i][i]);
  }
  // det via elimination
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(gram[r][col]) > std::abs(gram[piv][col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(gram[col][c], gram[piv][c]);
      det = -det;
    }
    if (std::abs(gram[col][col]) <= scale * 1e-24) throw std::invalid_argument("degenerate simplex");
    det *= gram[col][col];
    for (int r = col + 1; r < k; ++r) {
      const double f = gram[r][col] / gram[col][col];
      for (int c = col; c < k; ++c) gram[r][c] -= f * gram[col][c];
    }
  }
  if (det <= 0.0) throw std::invalid_argument("degenerate simplex");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  const double m = std::sqrt(det) / fact;
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("degenerate simplex");
  return m;
}

double clip_segment_box(const SegmentGeom& s, const BoxCell& c) {
  if (s.a.dim() != c.dim()) throw std::invalid_argument("clip_segment_box: dimension mismatch");
  double t0 = 0.0, t1 = 1.0;
  const Vec u = s.b - s.a;
  for (int i = 0; i < c.dim(); ++i) {
    if (u[i] == 0.0) {
      if (s.a[i] < c.lo[i] || s.a[i] > c.hi[i]) return 0.0;
      continue;
    }
    double ta = (c.lo[i] - s.a[i]) / u[i];
    double tb = (c.hi[i] - s.a[i]) / u[i];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 >= t1) return 0.0;
  }
  return (t1 - t0) * segment_length(s);
}

std::vector<Halfspace> simplex_halfspaces(const SimplexGeom& s) {
  const int d = s.vertices[0].dim();
  if (s.intrinsic_dim() != d)
    throw std::invalid_argument("simplex_halfspaces: simplex must be full-dimensional");
  std::vector<Halfspace> hs;
  hs.reserve(d + 1);
  for (int skip = 0; skip <= d; ++skip) {
    // normal orthogonal to the facet spanned by all vertices but `skip`
    std::vector<Vec> f;
    for (int i = 0; i <= d; ++i)
      if (i != skip) f.push_back(s.vertices[i]);
    // Solve for n with n . (f_i - f_0) = 0, fixing one free component.
    double m[kMaxDim][kMaxDim];
    double rhs[kMaxDim];
    Vec n(d);
    // Build (d-1) orthogonality rows plus one normalisation row; try each axis
    // as the fixed component until the system is regular.
    bool ok = false;
    for (int fixed = 0; fixed < d && !ok; ++fixed) {
      for (int r = 0; r < d - 1; ++r) {
        const Vec e = f[r + 1] - f[0];
        for (int c = 0; c < d; ++c) m[r][c] = e[c];
        rhs[r] = 0.0;
      }
      for (int c = 0; c < d; ++c) m[d - 1][c] = (c == fixed) ? 1.0 : 0.0;
      rhs[d - 1] = 1.0;
      double x[kMaxDim];
      if (!solve_small(d, m, rhs, x)) continue;
      double norm = 0.0;
      for (int c = 0; c < d; ++c) norm += x[c] * x[c];
      norm = std::sqrt(norm);
      if (norm < 1e-12) continue;
      for (int c = 0; c < d; ++c) n[c] = x[c] / norm;
      ok = true;
    }
    if (!ok) throw std::invalid_argument("simplex_halfspaces: degenerate facet");
    double off = n.dot(f[0]);
    // orient so the skipped vertex is inside
    if (n.dot(s.vertices[skip]) > off) {
      n = n * -1.0;
      off = -off;
    }
    hs.push_back({n, off});
  }
  return hs;
}

bool point_in_simplex(const Vec& p, const SimplexGeom& s, double eps) {
  const int d = p.dim();
  if (s.intrinsic_dim() != d) throw std::invalid_argument("point_in_simplex: need full-dimensional simplex");
  double m[kMaxDim][kMaxDim];
  double rhs[kMaxDim];
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) m[r][c] = s.vertices[c + 1][r] - s.vertices[0][r];
    rhs[r] = p[r] - s.vertices[0][r];
  }
  double lam[kMaxDim];
  if (!solve_small(d, m, rhs, lam)) return false;
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    if (lam[i] < -eps) return false;
    sum += lam[i];
  }
  return sum <= 1.0 + eps;
}

double longest_edge(const SimplexGeom& s, Metric metric) {
  double m = 0.0;
  for (size_t i = 0; i < s.vertices.size(); ++i)
    for (size_t j = i + 1; j < s.vertices.size(); ++j)
      m = std::max(m, dist(s.vertices[i], s.vertices[j], metric));
  return m;
}

namespace {

// Exact clipped-polytope machinery (d <= 3): enumerate vertices of the
// intersection of half-spaces, then triangulate from an interior point.
struct ClippedPolytope {
  std::vector<Vec> vertices;
  std::vector<Halfspace> planes;
  int dim = 0;
};

ClippedPolytope enumerate_vertices(const SimplexGeom& s, const BoxCell& c,
                                   const std::vector<Halfspace>& cuts) {
  const int d = s.vertices[0].dim();
  ClippedPolytope poly;
  poly.dim = d;
  std::vector<Halfspace>& hs = poly.planes;
  for (auto& h : simplex_halfspaces(s)) hs.push_back(h);
  for (int i = 0; i < d; ++i) {
    Vec n(d);
    n[i] = 1.0;
    hs.push_back({n, c.hi[i]});
    n[i] = -1.0;
    hs.push_back({n, -c.lo[i]});
  }
  for (const auto& h : cuts) {
    // normalise for consistent tolerances
    double norm = std::sqrt(h.normal.dot(h.normal));
    if (norm < 1e-300) continue;
    hs.push_back({h.normal * (1.0 / norm), h.offset / norm});
  }
  double scale = std::max(abs_max_coord(c.lo), abs_max_coord(c.hi));
  for (const auto& v : s.vertices) scale = std::max(scale, abs_max_coord(v));
  const double feas_eps = 1e-9 * std::max(1.0, scale);

  const int H = static_cast<int>(hs.size());
  std::vector<int> pick(d);
  std::vector<Vec>& verts = poly.vertices;
  // iterate over all d-subsets of half-space boundaries
  std::vector<int> stack;
  stack.push_back(0);
  while (!stack.empty()) {
    if (static_cast<int>(stack.size()) == d + 1) {
      stack.pop_back();
      if (stack.empty()) break;
      ++stack.back();
      continue;
    }
    if (stack.back() >= H) {
      stack.pop_back();
      if (stack.empty()) break;
      ++stack.back();
      continue;
    }
    if (static_cast<int>(stack.size()) < d) {
      stack.push_back(stack.back() + 1);
      continue;
    }
    // full subset
    double m[kMaxDim][kMaxDim];
    double rhs[kMaxDim];
    for (int r = 0; r < d; ++r) {
      for (int cc = 0; cc < d; ++cc) m[r][cc] = hs[stack[r]].normal[cc];
      rhs[r] = hs[stack[r]].offset;
    }
    double x[kMaxDim];
    if (solve_small(d, m, rhs, x)) {
      Vec v(d);
      for (int i = 0; i < d; ++i) v[i] = x[i];
      bool feasible = true;
      for (int h = 0; h < H && feasible; ++h)
        if (hs[h].normal.dot(v) > hs[h].offset + feas_eps) feasible = false;
      // reject solutions that drifted off their defining planes
      for (int r = 0; r < d && feasible; ++r)
        if (std::abs(hs[stack[r]].normal.dot(v) - hs[stack[r]].offset) > feas_eps) feasible = false;
      if (feasible) {
        bool dup = false;
        for (const auto& w : verts)
          if (dist(v, w, Metric::L2) <= feas_eps * 4.0) {
            dup = true;
            break;
          }
        if (!dup) verts.push_back(v);
      }
    }
    ++stack.back();
  }
  return poly;
}

Vec centroid_of(const std::vector<Vec>& vs, int d) {
  Vec c(d);
  for (const auto& v : vs) c = c + v;
  return c * (1.0 / static_cast<double>(vs.size()));
}

double polygon_area_from_vertices(std::vector<Vec> vs) {
  // convex polygon: order by angle around the centroid, then shoelace
  if (vs.size() < 3) return 0.0;
  const Vec c = centroid_of(vs, 2);
  std::sort(vs.begin(), vs.end(), [&](const Vec& p, const Vec& q) {
    return std::atan2(p[1] - c[1], p[0] - c[0]) < std::atan2(q[1] - c[1], q[0] - c[0]);
  });
  double area = 0.0;
  const size_t n = vs.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec& p = vs[i];
    const Vec& q = vs[(i + 1) % n];
    area += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(area) * 0.5;
}

std::vector<SimplexGeom> polygon_fan(std::vector<Vec> vs) {
  std::vector<SimplexGeom> out;
  if (vs.size() < 3) return out;
  const Vec c = centroid_of(vs, 2);
  std::sort(vs.begin(), vs.end(), [&](const Vec& p, const Vec& q) {
    return std::atan2(p[1] - c[1], p[0] - c[0]) < std::atan2(q[1] - c[1], q[0] - c[0]);
  });
  for (size_t i = 1; i + 1 < vs.size(); ++i) {
    SimplexGeom t;
    t.vertices = {vs[0], vs[i], vs[i + 1]};
    out.push_back(t);
  }
  return out;
}

// Faces of a 3D clipped polytope: for each plane, the vertices lying on it,
// ordered by angle within the plane.
std::vector<std::vector<Vec>> polytope_faces_3d(const ClippedPolytope& poly, double eps) {
  std::vector<std::vector<Vec>> faces;
  for (const auto& h : poly.planes) {
    std::vector<Vec> fv;
    for (const auto& v : poly.vertices)
      if (std::abs(h.normal.dot(v) - h.offset) <= eps) fv.push_back(v);
    if (fv.size() < 3) continue;
    const Vec c = centroid_of(fv, 3);
    // in-plane basis
    Vec u(3);
    const Vec& n = h.normal;
    if (std::abs(n[0]) <= std::abs(n[1]) && std::abs(n[0]) <= std::abs(n[2]))
      u = Vec{0.0, -n[2], n[1]};
    else if (std::abs(n[1]) <= std::abs(n[2]))
      u = Vec{-n[2], 0.0, n[0]};
    else
      u = Vec{-n[1], n[0], 0.0};
    const double un = std::sqrt(u.dot(u));
    if (un < 1e-300) continue;
    u = u * (1.0 / un);
    Vec w{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};
    std::sort(fv.begin(), fv.end(), [&](const Vec& p, const Vec& q) {
      const Vec dp = p - c;
      const Vec dq = q - c;
      return std::atan2(dp.dot(w), dp.dot(u)) < std::atan2(dq.dot(w), dq.dot(u));
    });
    faces.push_back(std::move(fv));
  }
  return faces;
}

double tet_volume(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const Vec u = b - a;
  const Vec v = c - a;
  const Vec w = d - a;
  const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                     u[2] * (v[0] * w[1] - v[1] * w[0]);
  return std::abs(det) / 6.0;
}

double mc_clip_measure(const SimplexGeom& s, const BoxCell& c, const std::vector<Halfspace>& cuts,
                       const ClipOptions& opt, double* sigma) {
  const int d = s.vertices[0].dim();
  const double vol = simplex_measure(s);
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> cutpts(d + 1);
  long long inside = 0;
  const int N = opt.mc_samples;
  for (int it = 0; it < N; ++it) {
    // uniform barycentric coordinates via spacings of sorted uniforms
    for (int i = 1; i <= d; ++i) cutpts[i] = uni(rng);
    cutpts[0] = 0.0;
    std::sort(cutpts.begin() + 1, cutpts.end());
    Vec x(d);
    double prev = 0.0;
    for (int i = 0; i <= d; ++i) {
      const double cut = (i == d) ? 1.0 : cutpts[i + 1];
      x = x + s.vertices[i] * (cut - prev);
      prev = cut;
    }
    bool ok = c.contains(x);
    for (size_t h = 0; h < cuts.size() && ok; ++h)
      if (cuts[h].normal.dot(x) > cuts[h].offset) ok = false;
    if (ok) ++inside;
  }
  const double p = static_cast<double>(inside) / N;
  if (sigma) *sigma = vol * std::sqrt(std::max(0.0, p * (1.0 - p) / N));
  return vol * p;
}

}  // namespace

ClipResult clip_simplex_region(const SimplexGeom& s, const BoxCell& c,
                               const std::vector<Halfspace>& cuts, const ClipOptions& opt) {
  const int d = s.vertices[0].dim();
  if (s.intrinsic_dim() != d)
    throw std::invalid_argument("clip_simplex_region: simplex must be full-dimensional");
  if (c.dim() != d) throw std::invalid_argument("clip_simplex_region: dimension mismatch");

  // cheap rejection: bounding boxes
  for (int i = 0; i < d; ++i) {
    double lo = s.vertices[0][i], hi = lo;
    for (const auto& v : s.vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    if (lo > c.hi[i] || hi < c.lo[i]) return {0.0, 0.0};
  }

  if (d >= 4) {
    ClipResult r;
    r.measure = mc_clip_measure(s, c, cuts, opt, &r.sigma);
    return r;
  }

  if (cuts.empty()) {
    // fast paths
    bool all_in_box = true;
    for (const auto& v : s.vertices)
      if (!c.contains(v, 1e-15)) {
        all_in_box = false;
        break;
      }
    if (all_in_box) return {simplex_measure(s), 0.0};
    if (d >= 2) {
      bool box_in_simplex = true;
      const int corners = 1 << d;
      for (int mask = 0; mask < corners && box_in_simplex; ++mask) {
        Vec p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? c.hi[i] : c.lo[i];
        if (!point_in_simplex(p, s, 1e-12)) box_in_simplex = false;
      }
      if (box_in_simplex) return {c.volume(), 0.0};
    }
  }

  if (d == 1) {
    double lo = std::min(s.vertices[0][0], s.vertices[1][0]);
    double hi = std::max(s.vertices[0][0], s.vertices[1][0]);
    lo = std::max(lo, c.lo[0]);
    hi = std::min(hi, c.hi[0]);
    for (const auto& h : cuts) {
      if (h.normal[0] > 0.0)
        hi = std::min(hi, h.offset / h.normal[0]);
      else if (h.normal[0] < 0.0)
        lo = std::max(lo, h.offset / h.normal[0]);
      else if (h.offset < 0.0)
        return {0.0, 0.0};
    }
    return {std::max(0.0, hi - lo), 0.0};
  }

  const ClippedPolytope poly = enumerate_vertices(s, c, cuts);
  if (poly.vertices.size() < static_cast<size_t>(d + 1)) return {0.0, 0.0};
  if (d == 2) return {polygon_area_from_vertices(poly.vertices), 0.0};

  double scale = std::max(abs_max_coord(c.lo), abs_max_coord(c.hi));
  for (const auto& v : s.vertices) scale = std::max(scale, abs_max_coord(v));
  const double eps = 1e-9 * std::max(1.0, scale);
  const Vec inner = centroid_of(poly.vertices, 3);
  double vol = 0.0;
  for (const auto& face : polytope_faces_3d(poly, eps))
    for (size_t i = 1; i + 1 < face.size(); ++i)
      vol += tet_volume(inner, face[0], face[i], face[i + 1]);
  return {vol, 0.0};
}

ClipResult clip_simplex_box(const SimplexGeom& s, const BoxCell& c, const ClipOptions& opt) {
  return clip_simplex_region(s, c, {}, opt);
}

std::vector<SimplexGeom> clip_simplex_box_parts(const SimplexGeom& s, const BoxCell& c) {
  const int d = s.vertices[0].dim();
  if (d >= 4) throw std::invalid_argument("clip_simplex_box_parts: exact path is d <= 3 only");
  std::vector<SimplexGeom> out;
  if (d == 1) {
    double lo = std::min(s.vertices[0][0], s.vertices[1][0]);
    double hi = std::max(s.vertices[0][0], s.vertices[1][0]);
    lo = std::max(lo, c.lo[0]);
    hi = std::min(hi, c.hi[0]);
    if (hi > lo) {
      SimplexGeom g;
      g.vertices = {Vec{lo}, Vec{hi}};
      out.push_back(g);
    }
    return out;
  }
  const ClippedPolytope poly = enumerate_vertices(s, c, {});
  if (poly.vertices.size() < static_cast<size_t>(d + 1)) return out;
  if (d == 2) return polygon_fan(poly.vertices);

  double scale = std::max(abs_max_coord(c.lo), abs_max_coord(c.hi));
  for (const auto& v : s.vertices) scale = std::max(scale, abs_max_coord(v));
  const double eps = 1e-9 * std::max(1.0, scale);
  const Vec inner = centroid_of(poly.vertices, 3);
  for (const auto& face : polytope_faces_3d(poly, eps)) {
    for (size_t i = 1; i + 1 < face.size(); ++i) {
      if (tet_volume(inner, face[0], face[i], face[i + 1]) <= 0.0) continue;
      SimplexGeom t;
      t.vertices = {inner, face[0], face[i], face[i + 1]};
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace emd
