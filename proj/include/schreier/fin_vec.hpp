#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "schreier/schreier_core.hpp"

namespace schreier {

/// Finitely supported real vector over 1-based coordinates. Only nonzero
/// entries are stored, so the key set is exactly the support.
class FinVec {
 public:
  FinVec() = default;
  FinVec(std::initializer_list<std::pair<const Natural, double>> entries);
  explicit FinVec(const std::map<Natural, double>& entries);

  static FinVec unit(Natural n) { return FinVec{{n, 1.0}}; }
  // Indicator of a set, scaled by `value`.
  static FinVec constant_on(const FinSet& set, double value = 1.0);

  double operator[](Natural n) const;
  void set(Natural n, double value);

  const std::map<Natural, double>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  FinSet support() const;
  Natural min_support() const;
  Natural max_support() const;

  // |x| coordinatewise.
  FinVec abs() const;

  double lp_norm(double p) const;
  double sup_norm() const;

  FinVec& operator+=(const FinVec& other);
  FinVec& operator*=(double scalar);
  friend FinVec operator+(FinVec lhs, const FinVec& rhs) { return lhs += rhs; }
  friend FinVec operator*(double scalar, FinVec v) { return v *= scalar; }
  friend FinVec operator*(FinVec v, double scalar) { return v *= scalar; }

  std::string to_string() const;

  friend bool operator==(const FinVec&, const FinVec&) = default;

 private:
  std::map<Natural, double> entries_;
};

}  // namespace schreier
