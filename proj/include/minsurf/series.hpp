#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace minsurf {

using Complex = std::complex<double>;

/// Real trigonometric polynomial with an optional affine term,
///
///   f(t) = slope*t + a[0] + sum_{j=1..N} ( a[j] cos(jt) + b[j] sin(jt) ),
///
/// closed under differentiation, antidifferentiation (the constant mode
/// integrates into the affine term) and, for affine-free operands, products.
/// Evaluation extends to complex arguments; the extension is entire, so no
/// convergence bookkeeping is needed.
class TrigSeries {
public:
  // Hard cap on the degree a product may reach.
  static constexpr int kMaxDegree = 256;

  TrigSeries() = default;
  explicit TrigSeries(double constant);

  static TrigSeries affine(double slope);
  static TrigSeries harmonic(int j, double cos_coeff, double sin_coeff);

  int degree() const { return static_cast<int>(cos_.size()) - 1; }
  double slope() const { return slope_; }
  double constant() const { return cos_.empty() ? 0.0 : cos_[0]; }
  double cos_coeff(int j) const;
  double sin_coeff(int j) const;
  void set_slope(double s) { slope_ = s; }
  void set_coeff(int j, double cos_coeff, double sin_coeff);

  bool is_zero(double tol = 0.0) const;

  /// Evaluation at real t; exactly real by construction.
  double operator()(double t) const;
  /// Analytic continuation to complex z = u + iv.
  Complex operator()(const Complex& z) const;

  /// Term-wise derivative; degree is unchanged, affine slope becomes constant.
  TrigSeries derivative() const;
  /// Term-wise antiderivative F with F(0) = 0. The constant mode becomes an
  /// affine term. Throws std::domain_error if this series already has one.
  TrigSeries antiderivative() const;

  TrigSeries operator+(const TrigSeries& o) const;
  TrigSeries operator-(const TrigSeries& o) const;
  TrigSeries operator*(double s) const;
  /// Product via the product-to-sum identities; degrees add. Throws
  /// std::domain_error on affine operands and std::length_error beyond
  /// kMaxDegree.
  TrigSeries operator*(const TrigSeries& o) const;

private:
  void ensure_degree(int j);
  void trim();

  double slope_ = 0.0;
  std::vector<double> cos_{0.0};  // cos_[0] is the constant term
  std::vector<double> sin_{0.0};  // sin_[0] is unused, kept zero
};

/// R^3-valued trigonometric series; houses curves c(t), normal fields n(t)
/// and their unique analytic extensions c(z), n(z).
class TrigSeries3 {
public:
  TrigSeries3() = default;
  TrigSeries3(TrigSeries x, TrigSeries y, TrigSeries z);

  const TrigSeries& operator[](int k) const { return comp_[static_cast<size_t>(k)]; }
  TrigSeries& operator[](int k) { return comp_[static_cast<size_t>(k)]; }

  int degree() const;
  bool has_affine() const;

  Eigen::Vector3d operator()(double t) const;
  Eigen::Vector3cd operator()(const Complex& z) const;

  TrigSeries3 derivative() const;
  TrigSeries3 antiderivative() const;
  TrigSeries3 cross(const TrigSeries3& o) const;
  TrigSeries dot(const TrigSeries3& o) const;

  TrigSeries3 operator+(const TrigSeries3& o) const;
  TrigSeries3 operator-(const TrigSeries3& o) const;
  TrigSeries3 operator*(double s) const;

  static TrigSeries3 constant(const Eigen::Vector3d& c);
  /// The unit circle (cos t, sin t, 0).
  static TrigSeries3 circle();

private:
  std::array<TrigSeries, 3> comp_{};
};

/// Strip domain [a,b] x (-eps, eps) for the complex parameter z = u + iv.
struct Strip {
  double half_width = 1.0;  // eps
  bool contains(const Complex& z) const { return std::abs(z.imag()) <= half_width; }
};

/// Real part of (c - i q) evaluated along the horizontal line Im z = v0,
/// returned as a real trig series in t. Used to extract boundary curves of
/// Björling surfaces with exact coefficients.
TrigSeries3 restrict_real_part(const TrigSeries3& c, const TrigSeries3& q, double v0);

}  // namespace minsurf
