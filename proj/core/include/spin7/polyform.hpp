#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "spin7/blade.hpp"

namespace spin7 {

// Element of the full exterior algebra over an oriented 8-dimensional space:
// one coefficient per basis blade, indexed by blade mask.  Rank-0 sits at
// index 0, the volume blade at index 255.  Mixed-rank elements are first-class
// citizens; operations that require a pure rank say so explicitly.
class Polyform {
 public:
  Polyform() = default;

  static Polyform scalar(double value) {
    Polyform p;
    p.c_[0] = value;
    return p;
  }

  static Polyform blade(Blade b, double value = 1.0) {
    Polyform p;
    p.c_[b] = value;
    return p;
  }

  double operator[](Blade b) const { return c_[b]; }
  double& operator[](Blade b) { return c_[b]; }

  double scalar_part() const { return c_[0]; }

  Polyform& operator+=(const Polyform& o) {
    for (int i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Polyform& operator-=(const Polyform& o) {
    for (int i = 0; i < kBladeCount; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Polyform& operator*=(double s) {
    for (double& c : c_) c *= s;
    return *this;
  }

  friend Polyform operator+(Polyform a, const Polyform& b) { return a += b; }
  friend Polyform operator-(Polyform a, const Polyform& b) { return a -= b; }
  friend Polyform operator*(Polyform a, double s) { return a *= s; }
  friend Polyform operator*(double s, Polyform a) { return a *= s; }
  friend Polyform operator-(Polyform a) { return a *= -1.0; }

  Polyform rank_component(int k) const {
    Polyform p;
    for (int i = 0; i < kBladeCount; ++i)
      if (blade_rank(static_cast<Blade>(i)) == k) p.c_[i] = c_[i];
    return p;
  }

  // Largest rank with a coefficient exceeding `eps` in magnitude, or -1 for a
  // numerically vanishing element.  `pure_rank` is the companion check that no
  // other rank carries weight.
  int top_rank(double eps = 0.0) const {
    int top = -1;
    for (int i = 0; i < kBladeCount; ++i)
      if (std::abs(c_[i]) > eps) top = std::max(top, blade_rank(static_cast<Blade>(i)));
    return top;
  }

  bool pure_rank(int k, double eps = 0.0) const {
    for (int i = 0; i < kBladeCount; ++i)
      if (blade_rank(static_cast<Blade>(i)) != k && std::abs(c_[i]) > eps) return false;
    return true;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
  }

  bool is_zero(double eps = 0.0) const { return max_abs_coeff() <= eps; }

  const std::array<double, kBladeCount>& coefficients() const { return c_; }

 private:
  std::array<double, kBladeCount> c_{};
};

}  // namespace spin7
