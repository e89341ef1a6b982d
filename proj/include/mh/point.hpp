#pragma once

#include "mh/types.hpp"

namespace mh {

// Value of the defining polynomial at x:  sum xi^2 - a * prod xi.
Int variety_value(const Params& params, const Coords& x);

// True iff x satisfies the variety equation.  Throws StructuralError when the
// tuple length differs from params.n.
bool check_on_variety(const Params& params, const Coords& x);

// Height Delta(x) = sum |xi|; every descent argument is phrased against it.
Int height(const Coords& x);

// "(3, 3, 6)" — used by error messages and the text renderers.
std::string format_coords(const Coords& x);

// An integral solution of the variety equation.  Construction validates, so a
// Point in hand is always on the variety it was built for.
class Point {
 public:
  Point(const Params& params, Coords coords);

  const Coords& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()); }

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  Coords coords_;
};

// True iff x is in canonical position: sorted by absolute value ascending and
// every coordinate after the first nonnegative.  (A negative first coordinate
// then forces all others >= |x1| >= 1, so canonical tuples with a zero are
// automatically fully nonnegative.)
bool is_canonical(const Coords& x);

// A solution in canonical position: the unique representative of its orbit
// under permutations and double sign changes.  Construction validates both
// the variety equation and canonical shape.
class NormalPoint {
 public:
  NormalPoint(const Params& params, Coords coords);

  const Coords& coords() const { return coords_; }
  int n() const { return static_cast<int>(coords_.size()); }

  friend bool operator==(const NormalPoint&, const NormalPoint&) = default;
  friend bool operator<(const NormalPoint& a, const NormalPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  Coords coords_;
};

inline Int height(const Point& p) { return height(p.coords()); }
inline Int height(const NormalPoint& p) { return height(p.coords()); }

}  // namespace mh
