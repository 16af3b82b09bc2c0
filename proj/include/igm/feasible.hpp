#ifndef IGM_FEASIBLE_HPP
#define IGM_FEASIBLE_HPP

#include <string>

#include "igm/objective.hpp"

namespace igm {

// Closed convex feasible set with a Euclidean projection.
class FeasibleSet {
 public:
  static FeasibleSet whole_space();
  static FeasibleSet box(Vec lower, Vec upper);
  static FeasibleSet ball(Vec center, double radius);

  Vec project(const Vec& x) const;
  bool contains(const Vec& x, double tol = 1e-12) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { kWholeSpace, kBox, kBall };

  FeasibleSet(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  Vec lower_, upper_;  // box
  Vec center_;         // ball
  double radius_ = 0.0;
};

}  // namespace igm

#endif
