#pragma once

#include <map>
#include <string>
#include <vector>

#include "upknot/errors.hpp"

namespace upknot {

// One crossing of an upright long-knot diagram. Edges are numbered 1..2n+1 in
// traversal order; a crossing is entered by two edges (one on the over strand,
// one on the under strand) and exited by their successors.
struct Crossing {
  int sign = 0;      // +1 or -1
  int over_in = 0;   // edge entering on the over strand
  int under_in = 0;  // edge entering on the under strand
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Combinatorial upright diagram of a long knot: n crossings, 2n+1 edges, and
// integer rotation counts per edge. Construction validates:
//   - every sign is +1 or -1,
//   - incoming edges lie in [1, 2n] and each such edge enters exactly one
//     crossing (in exactly one role),
//   - rotation keys lie in [1, 2n+1],
//   - total rotation plus writhe is even.
// Planar realizability is deliberately not checked; every invariant and
// identity in this library is defined at the combinatorial level.
class UprightDiagram {
 public:
  UprightDiagram(int n, std::vector<Crossing> crossings, std::map<int, int> rotations);

  int crossing_count() const { return n_; }
  int edge_count() const { return 2 * n_ + 1; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::map<int, int>& rotations() const { return rotations_; }

  int rotation(int edge) const {
    auto it = rotations_.find(edge);
    return it == rotations_.end() ? 0 : it->second;
  }

  int writhe() const;
  int total_rotation() const;

  friend bool operator==(const UprightDiagram&, const UprightDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<Crossing> crossings_;   // sorted by over_in (canonical order)
  std::map<int, int> rotations_;      // nonzero entries only
};

// Violation messages for the construction rules above; empty means valid.
std::vector<std::string> diagram_violations(int n, const std::vector<Crossing>& crossings,
                                            const std::map<int, int>& rotations);

// Text format, one directive per line ('#' starts a comment):
//   n <crossings>
//   c <+|-> <over_in> <under_in>
//   phi <edge> <rotation>
UprightDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const UprightDiagram& d);

// Which strand the new loop's crossing is traversed on first.
enum class KinkChirality { OverFirst, UnderFirst };

// Subdivide edge `edge` and insert a small curl of the given sign there. The
// result presents the same knot; invariants are unchanged. The loop edge
// absorbs the rotation of the curl (+sign for OverFirst, -sign for
// UnderFirst), which is what keeps the normalization exponent balanced.
UprightDiagram kink_insert(const UprightDiagram& d, int edge, int sign,
                           KinkChirality chirality);

}  // namespace upknot
