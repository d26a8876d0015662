#pragma once

#include "reesposet/integer.hpp"
#include "reesposet/poset.hpp"
#include "reesposet/snf.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

using Face = std::vector<int>;

/// Finite simplicial complex given by all of its nonempty faces, grouped by
/// dimension. Faces are sorted vertex lists and each dimension is sorted.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<Face>& facets) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    std::vector<std::set<Face>> by_dim;
    for (Face f : facets) {
      std::sort(f.begin(), f.end());
      if (f.empty()) continue;
      if (f.front() < 0 || f.back() >= vertex_count) throw std::invalid_argument("facet vertex out of range");
      const int k = static_cast<int>(f.size());
      if (k > 30) throw std::invalid_argument("facet too large");
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        Face g;
        for (int i = 0; i < k; ++i)
          if (mask >> i & 1) g.push_back(f[i]);
        if (by_dim.size() < g.size()) by_dim.resize(g.size());
        by_dim[g.size() - 1].insert(std::move(g));
      }
    }
    for (auto& s : by_dim) c.faces_.emplace_back(s.begin(), s.end());
    c.build_index();
    return c;
  }

  /// Faces already closed under taking subsets, grouped by dimension.
  static SimplicialComplex from_closed_faces(int vertex_count, std::vector<std::vector<Face>> faces) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (auto& d : faces) std::sort(d.begin(), d.end());
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    c.faces_ = std::move(faces);
    c.build_index();
    return c;
  }

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Face>& faces(int dim) const { return faces_.at(dim); }
  std::size_t face_count(int dim) const {
    return dim >= 0 && dim < static_cast<int>(faces_.size()) ? faces_[dim].size() : 0;
  }

  /// Index of a sorted face within its dimension, or -1.
  int index_of(const Face& f) const {
    if (f.empty() || f.size() > faces_.size()) return -1;
    const auto& d = faces_[f.size() - 1];
    auto it = std::lower_bound(d.begin(), d.end(), f);
    return it != d.end() && *it == f ? static_cast<int>(it - d.begin()) : -1;
  }

  /// Faces contained in no other face.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (int d = 0; d <= dimension(); ++d)
      for (const auto& f : faces_[d]) {
        bool maximal = true;
        if (d < dimension())
          for (int v = 0; v < vertex_count_ && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face g = f;
            g.insert(std::upper_bound(g.begin(), g.end(), v), v);
            maximal = index_of(g) < 0;
          }
        if (maximal) out.push_back(f);
      }
    return out;
  }

  /// Reduced Euler characteristic: -1 + f_0 - f_1 + ...
  Integer reduced_euler_characteristic() const {
    Integer chi = -1;
    for (int d = 0; d <= dimension(); ++d) chi += sign_power(d) * Integer(faces_[d].size());
    return chi;
  }

  /// Boundary from dimension `dim` to `dim - 1`; dim = 0 gives the
  /// augmentation onto the single empty face. The face with vertex i
  /// (counting from 0 in sorted order) removed gets sign (-1)^i.
  SparseIntMatrix boundary(int dim) const {
    if (dim < 0 || dim > dimension()) throw std::out_of_range("boundary: dimension out of range");
    const auto& cols = faces_[dim];
    if (dim == 0) {
      SparseIntMatrix m(1, static_cast<int>(cols.size()));
      for (int j = 0; j < static_cast<int>(cols.size()); ++j) m.add(0, j, 1);
      return m;
    }
    SparseIntMatrix m(static_cast<int>(faces_[dim - 1].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
      for (int i = 0; i <= dim; ++i) {
        Face g = cols[j];
        g.erase(g.begin() + i);
        const int row = index_of(g);
        if (row < 0) throw std::logic_error("boundary: complex is not closed under faces");
        m.add(row, j, i % 2 == 0 ? 1 : -1);
      }
    return m;
  }

 private:
  void build_index() {
    for (std::size_t d = 0; d < faces_.size(); ++d)
      for (const auto& f : faces_[d])
        if (f.size() != d + 1) throw std::invalid_argument("face has the wrong dimension");
  }

  int vertex_count_ = 0;
  std::vector<std::vector<Face>> faces_;
};

/// Order complex of a graded poset. Its vertices are the elements other than
/// a unique minimum or maximum, numbered by (rank, id), so every face lists a
/// chain from bottom to top.
struct OrderComplex {
  SimplicialComplex complex;
  std::vector<ElementId> vertex_element;  // vertex -> poset element
  std::vector<int> element_vertex;        // poset element -> vertex or -1

  Face face_of_chain(const std::vector<ElementId>& chain) const {
    Face f;
    for (ElementId x : chain) {
      const int v = element_vertex.at(x);
      if (v >= 0) f.push_back(v);
    }
    std::sort(f.begin(), f.end());
    return f;
  }
};

inline OrderComplex order_complex(const GradedPoset& p) {
  OrderComplex oc;
  const auto bottom = p.bottom();
  const auto top = p.top();
  std::vector<ElementId> elems;
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x)
    if (x != bottom && x != top) elems.push_back(x);
  std::stable_sort(elems.begin(), elems.end(), [&](ElementId a, ElementId b) { return p.rank(a) < p.rank(b); });
  oc.vertex_element = elems;
  oc.element_vertex.assign(p.size(), -1);
  for (std::size_t v = 0; v < elems.size(); ++v) oc.element_vertex[elems[v]] = static_cast<int>(v);

  const int nv = static_cast<int>(elems.size());
  std::vector<std::vector<int>> above(nv);
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (p.less(elems[a], elems[b])) above[a].push_back(b);
  std::vector<std::vector<Face>> faces;
  Face chain;
  std::function<void(int)> grow = [&](int last) {
    if (faces.size() < chain.size()) faces.resize(chain.size());
    faces[chain.size() - 1].push_back(chain);
    for (int b : above[last]) {
      chain.push_back(b);
      grow(b);
      chain.pop_back();
    }
  };
  for (int a = 0; a < nv; ++a) {
    chain = {a};
    grow(a);
  }
  oc.complex = SimplicialComplex::from_closed_faces(nv, std::move(faces));
  return oc;
}

struct HomologyGroup {
  int dim = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  std::string to_string() const {
    std::string s = betti == 0 && torsion.empty() ? "0" : "";
    if (betti == 1) s = "Z";
    if (betti > 1) s = "Z^" + std::to_string(betti);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
    return s;
  }
};

/// Rank and nonzero invariant factors of every boundary map, dimension 0 up.
struct BoundaryInvariants {
  std::vector<std::size_t> rank;
  std::vector<std::vector<Integer>> factors;
};

inline BoundaryInvariants boundary_invariants(const SimplicialComplex& c) {
  BoundaryInvariants b;
  for (int d = 0; d <= c.dimension(); ++d) {
    auto f = smith_invariants(c.boundary(d));
    b.rank.push_back(f.size());
    b.factors.push_back(std::move(f));
  }
  return b;
}

/// Reduced integral homology H~_d for d = 0..dim (plus d = -1 for the empty
/// complex): betti_d = f_d - rank d_d - rank d_{d+1}; torsion from the
/// invariant factors of d_{d+1}.
inline std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c) {
  std::vector<HomologyGroup> out;
  if (c.dimension() < 0) {
    out.push_back({-1, 1, {}});
    return out;
  }
  auto inv = boundary_invariants(c);
  for (int d = 0; d <= c.dimension(); ++d) {
    HomologyGroup h;
    h.dim = d;
    const std::size_t next = d < c.dimension() ? inv.rank[d + 1] : 0;
    h.betti = c.face_count(d) - inv.rank[d] - next;
    if (d < c.dimension())
      for (const auto& x : inv.factors[d + 1])
        if (x > 1) h.torsion.push_back(x);
    out.push_back(std::move(h));
  }
  return out;
}

inline std::string format_homology(const std::vector<HomologyGroup>& h) {
  std::string s;
  for (const auto& g : h) s += (s.empty() ? "" : ", ") + std::string("H") + std::to_string(g.dim) + "=" + g.to_string();
  return s;
}

}  // namespace reesposet
