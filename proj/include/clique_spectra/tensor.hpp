#pragma once

#include <cmath>
#include <span>

#include <Eigen/Core>

#include "clique_spectra/cliques.hpp"
#include "clique_spectra/error.hpp"

namespace clique_spectra {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Implicit symmetric t-clique tensor: entry 1/(t-1)! on every permutation of
/// a clique's index tuple, zero elsewhere. Only the clique list is stored.
class CliqueTensorView {
 public:
  CliqueTensorView(const CliqueList& cliques, int dimension)
      : cliques_(&cliques), dimension_(dimension) {}

  int order() const noexcept { return cliques_->order(); }
  int dimension() const noexcept { return dimension_; }
  const CliqueList& cliques() const noexcept { return *cliques_; }

  /// Entry a_{i_1 ... i_t}; linear in the number of cliques.
  double entry(std::span<const Vertex> index) const;

 private:
  const CliqueList* cliques_;
  int dimension_;
};

namespace detail {

template <typename Derived>
void check_input(const CliqueTensorView& view, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != view.dimension())
    throw ValidationError("vector length does not match tensor dimension");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    using std::isfinite;
    if (!isfinite(x(i)) || x(i) < 0) throw ValidationError("vector entries must be finite and >= 0");
  }
}

}  // namespace detail

/// (A x^{t-1})_i = sum over cliques I containing i of prod_{j in I, j != i} x_j,
/// without input validation.
template <typename Derived>
Vector<typename Derived::Scalar> apply_unchecked(const CliqueTensorView& view,
                                                 const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto& cliques = view.cliques();
  const int t = cliques.order();
  Vector<Scalar> out = Vector<Scalar>::Zero(view.dimension());
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto c = cliques[k];
    // prefix/suffix products give every leave-one-out product in O(t).
    Scalar prefix(1);
    for (int i = 0; i < t; ++i) {
      Scalar suffix(1);
      for (int j = i + 1; j < t; ++j) suffix *= x(c[j]);
      out(c[i]) += prefix * suffix;
      prefix *= x(c[i]);
    }
  }
  return out;
}

template <typename Derived>
Vector<typename Derived::Scalar> apply(const CliqueTensorView& view,
                                       const Eigen::MatrixBase<Derived>& x) {
  detail::check_input(view, x);
  return apply_unchecked(view, x);
}

/// Homogeneous form A x^t = t * sum_I prod_{i in I} x_i (no normalisation).
template <typename Derived>
typename Derived::Scalar clique_form(const CliqueTensorView& view,
                                     const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto& cliques = view.cliques();
  Scalar sum(0);
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    Scalar prod(1);
    for (Vertex v : cliques[k]) prod *= x(v);
    sum += prod;
  }
  return Scalar(cliques.order()) * sum;
}

/// sum_i x_i^t.
template <typename Derived>
typename Derived::Scalar power_sum(const Eigen::MatrixBase<Derived>& x, int t) {
  using std::pow;
  return x.unaryExpr([t](auto v) { return pow(v, t); }).sum();
}

/// Variational value at a nonnegative t-norm unit vector; a lower bound on
/// the spectral radius.
template <typename Derived>
typename Derived::Scalar rayleigh(const CliqueTensorView& view,
                                  const Eigen::MatrixBase<Derived>& x) {
  detail::check_input(view, x);
  using std::abs;
  if (abs(power_sum(x, view.order()) - 1) > 1e-9)
    throw ValidationError("rayleigh: vector is not a unit vector in the t-norm");
  return clique_form(view, x);
}

}  // namespace clique_spectra
