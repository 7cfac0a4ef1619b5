#include "sgames/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sgames {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate_decomposition(const XyzDecomposition& d) {
  require(d.r >= 2, "decomposition needs at least two rows");
  require(static_cast<int>(d.x.size()) == d.r && static_cast<int>(d.y.size()) == d.r,
          "coordinate vectors must have length r");
  for (int v : d.x) require(v >= 0, "coordinates must be non-negative");
  for (int v : d.y) require(v >= 0, "coordinates must be non-negative");
  require(d.z1 >= 0 && d.z2 >= 0, "coordinates must be non-negative");
}

// Non-negative length-`parts` tuples summing to `total`, earlier entries
// varying fastest (ascending colexicographic order).
void weak_compositions_colex(int total, int parts, std::vector<int>& buf, int pos,
                             const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == 0) {
    buf[0] = total;
    fn(buf);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    buf[pos] = v;
    weak_compositions_colex(total - v, parts, buf, pos - 1, fn);
  }
}

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> buf(static_cast<std::size_t>(parts));
  weak_compositions_colex(total, parts, buf, parts - 1, fn);
}

// Column-major flattening, the sort key for the deterministic output order.
std::vector<int> flatten(const MinimalWinningMatrix& rows) {
  std::vector<int> flat;
  flat.reserve(rows.size() * rows.front().size());
  for (std::size_t col = 0; col < rows.front().size(); ++col) {
    for (const ProfileVector& row : rows) flat.push_back(row[col]);
  }
  return flat;
}

}  // namespace

VectorGame xyz_to_pair(int n, const XyzDecomposition& d) {
  validate_decomposition(d);
  const int r = d.r;
  const int sum = std::accumulate(d.x.begin(), d.x.end(), 0) +
                  std::accumulate(d.y.begin(), d.y.end(), 0) + d.z1 + d.z2;
  require(sum == n + 2 - 2 * r, "coordinates must sum to n+2-2r");

  std::vector<int> px(r + 1, 0);  // px[k] = x_1 + ... + x_k
  std::vector<int> py(r + 1, 0);
  for (int k = 1; k <= r; ++k) {
    px[k] = px[k - 1] + d.x[k - 1];
    py[k] = py[k - 1] + d.y[k - 1];
  }

  VectorGame out;
  out.class_sizes = {d.z1 + r - 1 + px[r], d.z2 + r - 1 + py[r]};
  out.rows.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    out.rows.push_back({(r - i) + px[r - i + 1], (i - 1) + py[i]});
  }
  return out;
}

XyzDecomposition pair_to_xyz(const VectorGame& vg) {
  require(vg.num_classes() == 2, "decomposition is defined for two classes");
  const int r = vg.num_rows();
  require(r >= 2, "decomposition needs at least two rows");
  for (const ProfileVector& row : vg.rows) {
    require(row.size() == 2, "row width must equal the number of classes");
  }

  XyzDecomposition d;
  d.r = r;
  d.x.resize(static_cast<std::size_t>(r));
  d.y.resize(static_cast<std::size_t>(r));
  d.x[0] = vg.rows[r - 1][0];
  for (int h = 2; h <= r; ++h) {
    d.x[h - 1] = vg.rows[r - h][0] - vg.rows[r - h + 1][0] - 1;
  }
  d.y[0] = vg.rows[0][1];
  for (int i = 2; i <= r; ++i) {
    d.y[i - 1] = vg.rows[i - 1][1] - vg.rows[i - 2][1] - 1;
  }
  d.z1 = vg.class_sizes[0] - (r - 1) - std::accumulate(d.x.begin(), d.x.end(), 0);
  d.z2 = vg.class_sizes[1] - (r - 1) - std::accumulate(d.y.begin(), d.y.end(), 0);

  auto nonneg = [](int v) { return v >= 0; };
  require(std::all_of(d.x.begin(), d.x.end(), nonneg) &&
              std::all_of(d.y.begin(), d.y.end(), nonneg) && d.z1 >= 0 && d.z2 >= 0,
          "pair lacks the staircase structure (bounds or row order violated)");
  return d;
}

bool separation_violated_xyz(const XyzDecomposition& d) {
  validate_decomposition(d);
  for (int k = 1; k < d.r; ++k) {
    if (d.x[k] != 0 || d.y[k] != 0) return false;
  }
  return (d.y[0] == 0 || d.z1 == 0) && (d.x[0] == 0 || d.z2 == 0);
}

void for_each_xyz(int n, const std::function<void(const XyzDecomposition&)>& fn) {
  require(n >= 2, "at least two players required");
  for (int r = 2; r <= n / 2 + 1; ++r) {
    const int total = n + 2 - 2 * r;
    for_each_composition(total, 2 * r + 2, [&](const std::vector<int>& buf) {
      XyzDecomposition d;
      d.r = r;
      d.x.assign(buf.begin(), buf.begin() + r);
      d.y.assign(buf.begin() + r, buf.begin() + 2 * r);
      d.z1 = buf[2 * r];
      d.z2 = buf[2 * r + 1];
      fn(d);
    });
  }
}

void for_each_pair(int n, const std::function<void(const VectorGame&)>& fn) {
  require(n >= 2, "at least two players required");
  for (int n1 = 1; n1 <= n - 1; ++n1) {
    const int n2 = n - n1;
    std::vector<std::pair<std::vector<int>, VectorGame>> group;  // (flattening, pair)

    // Single-row pairs: everything in bounds except the two corners, kept
    // only when the separation check passes.
    for (int a = 0; a <= n1; ++a) {
      for (int b = 0; b <= n2; ++b) {
        if ((a == 0 && b == 0) || (a == n1 && b == n2)) continue;
        VectorGame vg{{n1, n2}, {{a, b}}};
        if (check_conditions(vg).separation_ok) {
          group.emplace_back(flatten(vg.rows), std::move(vg));
        }
      }
    }

    // r >= 2 via the staircase coordinates, split so that the first class
    // size is pinned to n1: x and z1 share n1-(r-1), y and z2 share n2-(r-1).
    for (int r = 2; r <= std::min(n1, n2) + 1; ++r) {
      std::vector<std::vector<int>> lefts;   // (x_1..x_r, z1)
      std::vector<std::vector<int>> rights;  // (y_1..y_r, z2)
      for_each_composition(n1 - (r - 1), r + 1,
                           [&](const std::vector<int>& c) { lefts.push_back(c); });
      for_each_composition(n2 - (r - 1), r + 1,
                           [&](const std::vector<int>& c) { rights.push_back(c); });
      for (const auto& left : lefts) {
        for (const auto& right : rights) {
          XyzDecomposition d;
          d.r = r;
          d.x.assign(left.begin(), left.begin() + r);
          d.y.assign(right.begin(), right.begin() + r);
          d.z1 = left[r];
          d.z2 = right[r];
          if (separation_violated_xyz(d)) continue;
          VectorGame vg = xyz_to_pair(n, d);
          group.emplace_back(flatten(vg.rows), std::move(vg));
        }
      }
    }

    std::sort(group.begin(), group.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& entry : group) fn(entry.second);
  }
}

bool matrix_at_least_swapped(const VectorGame& vg) {
  require(vg.num_classes() == 2, "tie rule is defined for two classes");
  const int r = vg.num_rows();
  std::vector<int> col1(static_cast<std::size_t>(r));
  std::vector<int> col2_rev(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    col1[i] = vg.rows[i][0];
    col2_rev[i] = vg.rows[r - 1 - i][1];
  }
  return col1 >= col2_rev;
}

void for_each_bipartite_canonical(int n, const std::function<void(const VectorGame&)>& fn) {
  for_each_pair(n, [&](const VectorGame& vg) {
    if (vg.class_sizes[0] < vg.class_sizes[1]) return;
    if (vg.class_sizes[0] == vg.class_sizes[1] && !matrix_at_least_swapped(vg)) return;
    fn(vg);
  });
}

std::vector<VectorGame> enumerate_pairs(int n) {
  std::vector<VectorGame> out;
  for_each_pair(n, [&](const VectorGame& vg) { out.push_back(vg); });
  return out;
}

std::vector<VectorGame> enumerate_bipartite_canonical(int n) {
  std::vector<VectorGame> out;
  for_each_bipartite_canonical(n, [&](const VectorGame& vg) { out.push_back(vg); });
  return out;
}

}  // namespace sgames
