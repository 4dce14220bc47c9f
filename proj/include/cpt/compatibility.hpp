#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpt/subspace.hpp"

namespace cpt {

/// n pairwise orthogonal lines spanning C^n: an orthogonal basis recorded up
/// to scalar multiples.
class Frame {
 public:
  Frame() = default;
  /// Pairwise orthogonal nonzero vectors, exactly n of them in C^n.
  static Frame from_directions(std::vector<Vector> directions);
  static Frame standard(std::size_t n);

  std::size_t ambient_dim() const { return directions_.size(); }
  std::size_t size() const { return directions_.size(); }
  const Vector& direction(std::size_t i) const { return directions_.at(i); }
  const std::vector<Vector>& directions() const { return directions_; }
  const Subspace& line(std::size_t i) const { return lines_.at(i); }
  const std::vector<Subspace>& lines() const { return lines_; }

  /// Sum of the listed lines.
  Subspace span_of(std::span<const std::size_t> indices) const;
  /// Indices of the lines contained in x.
  std::vector<std::size_t> lines_in(const Subspace& x) const;
  /// True iff x is the sum of the frame lines it contains.
  bool spans(const Subspace& x) const;

 private:
  std::vector<Vector> directions_;
  std::vector<Subspace> lines_;
};

/// (X∩Y)^perp∩X is orthogonal to (X∩Y)^perp∩Y.
bool is_compatible(const Subspace& x, const Subspace& y);

/// Refines a pairwise compatible family into a frame such that every member
/// is the sum of the frame lines it contains.
///
/// Keeps a partition of C^n into mutually orthogonal blocks, starting from
/// {C^n}. While a member X meets a block Y in a proper nonzero subspace, Y is
/// replaced by Y∩X and (Y∩X)^perp∩Y. Blocks are finally cut into lines by
/// Gram-Schmidt. Members are scanned in input order and blocks in partition
/// order, so the result is reproducible. Zero members are skipped and
/// duplicates collapse.
///
/// Throws IncompatibleFamily naming the first offending pair (input indices),
/// DimensionMismatch if a member is not in C^n.
Frame refine_to_frame(std::size_t n, std::span<const Subspace> family);

}  // namespace cpt
