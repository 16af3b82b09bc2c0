#include "igm/feasible.hpp"

#include <stdexcept>

namespace igm {

FeasibleSet FeasibleSet::whole_space() { return FeasibleSet(Kind::kWholeSpace, "all"); }

FeasibleSet FeasibleSet::box(Vec lower, Vec upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("box bounds must match in size");
  if ((lower.array() > upper.array()).any())
    throw std::invalid_argument("box requires lower <= upper componentwise");
  FeasibleSet s(Kind::kBox, "box");
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

FeasibleSet FeasibleSet::ball(Vec center, double radius) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  FeasibleSet s(Kind::kBall, "ball");
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

Vec FeasibleSet::project(const Vec& x) const {
  switch (kind_) {
    case Kind::kWholeSpace:
      return x;
    case Kind::kBox:
      if (x.size() != lower_.size()) throw std::invalid_argument("point size mismatch with box");
      return x.cwiseMax(lower_).cwiseMin(upper_);
    case Kind::kBall: {
      if (x.size() != center_.size()) throw std::invalid_argument("point size mismatch with ball");
      const Vec d = x - center_;
      const double norm = d.norm();
      if (norm <= radius_) return x;
      return center_ + (radius_ / norm) * d;
    }
  }
  throw std::logic_error("unreachable");
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
  switch (kind_) {
    case Kind::kWholeSpace:
      return true;
    case Kind::kBox:
      if (x.size() != lower_.size()) return false;
      return (x.array() >= lower_.array() - tol).all() &&
             (x.array() <= upper_.array() + tol).all();
    case Kind::kBall:
      if (x.size() != center_.size()) return false;
      return (x - center_).norm() <= radius_ + tol;
  }
  return false;
}

}  // namespace igm
