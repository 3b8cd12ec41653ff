#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "schreier/errors.hpp"
#include "schreier/sequences.hpp"

namespace schreier {

Natural peak_count(const FinVec& w, double tolerance) {
  Natural count = 0;
  for (const auto& [n, v] : w.entries()) {
    if (std::fabs(v) >= 1.0 - tolerance) ++count;
  }
  return count;
}

// The set {c : |(Ac)_j| <= 1 for all j} is a bounded polytope when the
// basis is independent. At a vertex, dim(W) independent rows are active, so
// some square subsystem A_R c = sigma recovers it. The search tries row
// subsets of size n first (minimum-norm solutions), then grows the subset up
// to dim(W), where the vertex argument guarantees success.
FinVec milman_flat_vector(const std::vector<FinVec>& basis, Natural n, const MilmanOptions& options) {
  const Natural dim = basis.size();
  if (dim == 0) throw PreconditionError("milman_flat_vector: empty basis");
  if (dim > options.max_dimension) {
    throw BoundExceeded("milman_flat_vector: dimension " + std::to_string(dim) + " exceeds bound " +
                        std::to_string(options.max_dimension));
  }
  if (n == 0 || n > dim) {
    throw PreconditionError("milman_flat_vector: need 1 <= n <= dim, got n = " + std::to_string(n));
  }

  std::vector<Natural> coords;
  for (const auto& b : basis) {
    for (const auto& [idx, v] : b.entries()) coords.push_back(idx);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  if (coords.size() > options.max_support) {
    throw BoundExceeded("milman_flat_vector: combined support " + std::to_string(coords.size()) +
                        " exceeds bound " + std::to_string(options.max_support));
  }

  const Eigen::Index rows = static_cast<Eigen::Index>(coords.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = basis[c][coords[r]];
  }
  if (Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() < cols) {
    throw PreconditionError("milman_flat_vector: basis is linearly dependent");
  }

  for (Natural size = n; size <= dim; ++size) {
    // Row subsets of the given size in lexicographic order.
    std::vector<bool> pick(coords.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Eigen::Index> chosen;
      for (std::size_t r = 0; r < pick.size(); ++r) {
        if (pick[r]) chosen.push_back(static_cast<Eigen::Index>(r));
      }
      Eigen::MatrixXd sub(static_cast<Eigen::Index>(size), cols);
      for (std::size_t i = 0; i < chosen.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = a.row(chosen[i]);
      const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(sub);

      // w and -w are interchangeable, so the first sign stays +1.
      const std::size_t patterns = std::size_t{1} << (size - 1);
      for (std::size_t mask = 0; mask < patterns; ++mask) {
        Eigen::VectorXd sigma(static_cast<Eigen::Index>(size));
        sigma(0) = 1.0;
        for (std::size_t i = 1; i < size; ++i) sigma(static_cast<Eigen::Index>(i)) = (mask >> (i - 1)) & 1 ? -1.0 : 1.0;
        const Eigen::VectorXd coef = solver.solve(sigma);
        if ((sub * coef - sigma).cwiseAbs().maxCoeff() > options.tolerance) continue;
        const Eigen::VectorXd w = a * coef;
        const double peak = w.cwiseAbs().maxCoeff();
        if (peak > 1.0 + options.tolerance) continue;

        FinVec out;
        for (Eigen::Index r = 0; r < rows; ++r) {
          if (std::fabs(w(r)) > 1e-15) out.set(coords[r], w(r) / peak);
        }
        if (peak_count(out, options.tolerance) >= n) return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw SearchExhausted("milman_flat_vector: no flat vector found for n = " + std::to_string(n));
}

}  // namespace schreier
