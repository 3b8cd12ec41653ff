#include "schreier/fin_vec.hpp"

#include <cmath>
#include <iterator>
#include <sstream>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

FinVec::FinVec(std::initializer_list<std::pair<const Natural, double>> entries) {
  for (const auto& [n, v] : entries) set(n, v);
}

FinVec::FinVec(const std::map<Natural, double>& entries) {
  for (const auto& [n, v] : entries) set(n, v);
}

FinVec FinVec::constant_on(const FinSet& set, double value) {
  FinVec out;
  for (Natural n : set) out.set(n, value);
  return out;
}

double FinVec::operator[](Natural n) const {
  const auto it = entries_.find(n);
  return it == entries_.end() ? 0.0 : it->second;
}

void FinVec::set(Natural n, double value) {
  if (n == 0) throw PreconditionError("coordinates are 1-based");
  if (!std::isfinite(value)) throw PreconditionError("vector entries must be finite");
  if (value == 0.0) {
    entries_.erase(n);
  } else {
    entries_[n] = value;
  }
}

FinSet FinVec::support() const {
  std::vector<Natural> out;
  out.reserve(entries_.size());
  for (const auto& [n, v] : entries_) out.push_back(n);
  return FinSet(std::move(out));
}

Natural FinVec::min_support() const {
  if (entries_.empty()) throw PreconditionError("zero vector has empty support");
  return entries_.begin()->first;
}

Natural FinVec::max_support() const {
  if (entries_.empty()) throw PreconditionError("zero vector has empty support");
  return entries_.rbegin()->first;
}

FinVec FinVec::abs() const {
  FinVec out;
  for (const auto& [n, v] : entries_) out.entries_[n] = std::fabs(v);
  return out;
}

double FinVec::lp_norm(double p) const {
  double sum = 0.0;
  for (const auto& [n, v] : entries_) sum += std::pow(std::fabs(v), p);
  return std::pow(sum, 1.0 / p);
}

double FinVec::sup_norm() const {
  double best = 0.0;
  for (const auto& [n, v] : entries_) best = std::max(best, std::fabs(v));
  return best;
}

FinVec& FinVec::operator+=(const FinVec& other) {
  for (const auto& [n, v] : other.entries_) set(n, (*this)[n] + v);
  return *this;
}

FinVec& FinVec::operator*=(double scalar) {
  if (scalar == 0.0) {
    entries_.clear();
    return *this;
  }
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= scalar;
    it = it->second == 0.0 ? entries_.erase(it) : std::next(it);
  }
  return *this;
}

std::string FinVec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [n, v] : entries_) {
    if (!first) os << ',';
    first = false;
    os << n << ':' << v;
  }
  return os.str();
}

}  // namespace schreier
