#include "hypavg/triangle_measures.hpp"

#include <algorithm>
#include <cstdlib>
#include <span>

namespace hypavg {

namespace {

// A side read from one of its ends.
struct SideView {
  std::span<const Vertex> path;
  bool reversed = false;

  int length() const { return static_cast<int>(path.size()) - 1; }
  Vertex at(int i) const { return reversed ? path[path.size() - 1 - i] : path[i]; }
};

SideView forward(const GeodesicSegment& s) { return {s.vertices, false}; }
SideView backward(const GeodesicSegment& s) { return {s.vertices, true}; }

// Slim contribution of side s (from corner a to corner b). left is the other
// side at a read from a, right the other side at b read from b. Offsets give
// lower bounds d(s_i, left_j) >= |i - j| and d(s_i, right_k) >= |L - i - k|,
// so each w scans rings of growing lower bound and stops once the ring
// cannot beat its running minimum. `floor` is the best value found so far:
// a w whose minimum drops to it cannot raise the maximum.
int side_slim(const GraphMetric& m, SideView s, SideView left, SideView right, int floor) {
  const int len = s.length(), ll = left.length(), rl = right.length();
  int best = floor;
  for (int i = 0; i <= len; ++i) {
    const Vertex w = s.at(i);
    int cur = std::min(i, len - i);  // corners
    if (cur <= best) continue;
    const int ri = len - i;
    for (int k = 0; k < cur; ++k) {
      for (int j : {i - k, i + k}) {
        if (j < 0 || j > ll) continue;
        cur = std::min(cur, m.hops(w, left.at(j)));
        if (k == 0) break;
      }
      for (int j : {ri - k, ri + k}) {
        if (j < 0 || j > rl) continue;
        cur = std::min(cur, m.hops(w, right.at(j)));
        if (k == 0) break;
      }
      if (cur <= best) break;
    }
    best = std::max(best, cur);
  }
  return best;
}

int diam3(int a, int b, int c) { return std::max({a, b, c}); }

}  // namespace

int slim(const GraphMetric& m, const GeodesicTriangle& tri) {
  if (tri.degenerate) return 0;
  int best = 0;
  best = side_slim(m, forward(tri.xy), backward(tri.zx), forward(tri.yz), best);
  best = side_slim(m, forward(tri.yz), backward(tri.xy), forward(tri.zx), best);
  best = side_slim(m, forward(tri.zx), backward(tri.yz), forward(tri.xy), best);
  return best;
}

int thin(const GraphMetric& m, const GeodesicTriangle& tri) {
  if (tri.degenerate) return 0;
  const int dxy = static_cast<int>(tri.xy.length());
  const int dyz = static_cast<int>(tri.yz.length());
  const int dzx = static_cast<int>(tri.zx.length());
  int best = 0;
  auto corner = [&](SideView a, SideView b, int twice_product) {
    const int top = twice_product / 2;
    for (int r = 1; r <= top; ++r) best = std::max(best, m.hops(a.at(r), b.at(r)));
  };
  corner(forward(tri.xy), backward(tri.zx), dxy + dzx - dyz);
  corner(forward(tri.yz), backward(tri.xy), dyz + dxy - dzx);
  corner(forward(tri.zx), backward(tri.yz), dzx + dyz - dxy);
  return best;
}

int minsize(const GraphMetric& m, const GeodesicTriangle& tri) {
  if (tri.degenerate) return 0;
  // x' = yz[i] (i from y), y' = zx[j] (j from z), z' = xy[k] (k from x).
  const SideView a = forward(tri.yz), b = forward(tri.zx), c = forward(tri.xy);
  const int la = a.length(), lb = b.length(), lc = c.length();

  // Start from the vertices nearest the internal points.
  const int ia = (lc + la - lb) / 2, jb = (la + lb - lc) / 2, kc = (lb + lc - la) / 2;
  const Vertex pa = a.at(ia), pb = b.at(jb), pc = c.at(kc);
  int best = diam3(m.hops(pa, pb), m.hops(pb, pc), m.hops(pa, pc));

  // Sides sharing a corner: d(a_i, c_k) >= |i - (lc - k)| at y,
  // d(a_i, b_j) >= |la - i - j| at z, d(b_j, c_k) >= |lb - j - k| at x.
  for (int i = 0; i <= la && best > 0; ++i) {
    const Vertex va = a.at(i);
    const int jlo = std::max(0, la - i - best + 1), jhi = std::min(lb, la - i + best - 1);
    for (int j = jlo; j <= jhi && best > 0; ++j) {
      const int dab = m.hops(va, b.at(j));
      if (dab >= best) continue;
      const Vertex vb = b.at(j);
      const int klo = std::max({0, lc - i - best + 1, lb - j - best + 1});
      const int khi = std::min({lc, lc - i + best - 1, lb - j + best - 1});
      for (int k = klo; k <= khi; ++k) {
        const Vertex vc = c.at(k);
        const int dac = m.hops(va, vc);
        if (dac >= best) continue;
        const int dbc = m.hops(vb, vc);
        if (dbc >= best) continue;
        best = diam3(dab, dac, dbc);
        if (best == 0) break;
      }
    }
  }
  return best;
}

HalfInt insize(const GraphMetric& m, const InternalPoints& pts) {
  return std::max({point_distance(m, pts.m_yz, pts.m_zx), point_distance(m, pts.m_zx, pts.m_xy),
                   point_distance(m, pts.m_xy, pts.m_yz)});
}

HalfInt insize(const GraphMetric& m, const GeodesicTriangle& tri) {
  if (tri.degenerate) return HalfInt(0);
  return insize(m, locate_internal_points(m, tri));
}

TriangleReport measure_all(const GraphMetric& m, const GeodesicTriangle& tri) {
  TriangleReport r;
  r.degenerate = tri.degenerate;
  if (tri.degenerate) return r;
  r.slim = slim(m, tri);
  r.thin = thin(m, tri);
  r.minsize = minsize(m, tri);
  r.insize = insize(m, tri);
  return r;
}

}  // namespace hypavg
