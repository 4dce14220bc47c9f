#include "cpt/compatibility.hpp"

#include <algorithm>
#include <string>

#include "cpt/error.hpp"

namespace cpt {

Frame Frame::from_directions(std::vector<Vector> directions) {
  const std::size_t n = directions.size();
  Frame f;
  for (std::size_t i = 0; i < n; ++i) {
    if (directions[i].size() != n) throw DimensionMismatch("frame: direction length differs from line count");
    if (is_zero(directions[i])) throw InvalidArgument("frame: zero direction");
    for (std::size_t j = 0; j < i; ++j) {
      if (!inner(directions[j], directions[i]).is_zero()) {
        throw InvalidArgument("frame: directions " + std::to_string(j) + " and " + std::to_string(i) +
                              " are not orthogonal");
      }
    }
  }
  f.lines_.reserve(n);
  for (const auto& d : directions) f.lines_.push_back(Subspace::line(d));
  f.directions_ = std::move(directions);
  return f;
}

Frame Frame::standard(std::size_t n) {
  std::vector<Vector> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(unit_vector(n, i));
  return from_directions(std::move(dirs));
}

Subspace Frame::span_of(std::span<const std::size_t> indices) const {
  std::vector<Vector> spanning;
  spanning.reserve(indices.size());
  for (auto i : indices) spanning.push_back(direction(i));
  return projection_of(ambient_dim(), spanning);
}

std::vector<std::size_t> Frame::lines_in(const Subspace& x) const {
  if (x.ambient_dim() != ambient_dim()) throw DimensionMismatch("frame: subspace in a different ambient space");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    if (x.contains(directions_[i])) out.push_back(i);
  }
  return out;
}

bool Frame::spans(const Subspace& x) const { return lines_in(x).size() == x.dim(); }

bool is_compatible(const Subspace& x, const Subspace& y) {
  const Subspace common = intersect(x, y);
  const Subspace x_rest = complement_within(common, x);
  const Subspace y_rest = complement_within(common, y);
  return x_rest.orthogonal_to(y_rest);
}

Frame refine_to_frame(std::size_t n, std::span<const Subspace> family) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (family[a].ambient_dim() != n) {
      throw DimensionMismatch("refine_to_frame: member " + std::to_string(a) + " is not in C^" + std::to_string(n));
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!is_compatible(family[a], family[b])) throw IncompatibleFamily(a, b);
    }
  }

  std::vector<Subspace> members;
  for (const auto& x : family) {
    if (x.is_zero()) continue;
    if (std::find(members.begin(), members.end(), x) != members.end()) continue;
    members.push_back(x);
  }

  std::vector<Subspace> blocks{Subspace::full(n)};
  // Each split strictly increases the block count, so at most n - 1 happen.
  for (const auto& x : members) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      Subspace inside = intersect(blocks[b], x);
      if (inside.is_zero() || inside.dim() == blocks[b].dim()) continue;
      Subspace outside = complement_within(inside, blocks[b]);
      blocks[b] = std::move(inside);
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(b) + 1, std::move(outside));
      ++b;
    }
  }

  std::vector<Vector> directions;
  directions.reserve(n);
  for (const auto& block : blocks) {
    for (auto& v : orthogonal_basis(block)) directions.push_back(std::move(v));
  }
  return Frame::from_directions(std::move(directions));
}

}  // namespace cpt
