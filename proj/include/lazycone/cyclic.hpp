// The cyclic cochain complex of a small finite-dimensional algebra,
// computed exactly. An n-cochain is the rank-(n+1) tensor of its values
// on basis tuples. Conventions committed to here (the literature varies
// and the choice does not affect any dimension we report):
//
//   (lambda phi)(x0,...,xn) = phi(xn, x0, ..., x_{n-1})
//   C^n_lambda = { phi : lambda phi = (-1)^n phi }
//   (b phi)(x0,...,x_{n+1}) =
//       sum_{j=0}^{n} (-1)^j phi(x0,...,x_j x_{j+1},...,x_{n+1})
//     + (-1)^{n+1}  phi(x_{n+1} x0, x1,...,xn)
//
// Degree-0 cyclic cocycles are exactly the tracial functionals.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lazycone/linalg.hpp"
#include "lazycone/structure_algebra.hpp"

namespace lazycone {

// Guards on tensor growth; both configurable at every call site.
struct CyclicLimits {
  std::size_t max_degree = 3;
  std::size_t max_coefficients = 256;  // cap on d^(n+1)
};

struct DegreeCapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Cochain {
  std::size_t degree = 0;
  std::size_t dim = 0;                // algebra dimension d
  std::vector<Rational> coeffs;       // d^(degree+1) values, row-major

  static Cochain zero(std::size_t degree, std::size_t dim) {
    Cochain phi{degree, dim, {}};
    std::size_t size = 1;
    for (std::size_t t = 0; t <= degree; ++t)
      size *= dim;
    phi.coeffs.assign(size, Rational(0));
    return phi;
  }
};

namespace detail {

// d^(n+1), guarded by the configured caps.
inline std::size_t tensor_size(std::size_t dim, std::size_t degree, const CyclicLimits& limits) {
  if (degree > limits.max_degree)
    throw DegreeCapError("degree " + std::to_string(degree) + " exceeds the cap " +
                         std::to_string(limits.max_degree));
  std::size_t size = 1;
  for (std::size_t t = 0; t <= degree; ++t) {
    size *= dim;
    if (size > limits.max_coefficients)
      throw DegreeCapError("tensor with " + std::to_string(size) +
                           "+ coefficients exceeds the cap " +
                           std::to_string(limits.max_coefficients));
  }
  return size;
}

// Flat index of the cyclic shift (xn, x0, ..., x_{n-1}) of the tuple with
// flat index t; tuples are row-major with x0 most significant.
inline std::size_t rotate_index(std::size_t t, std::size_t dim, std::size_t degree) {
  const std::size_t last = t % dim;
  std::size_t head_size = 1;
  for (std::size_t s = 0; s < degree; ++s)
    head_size *= dim;
  return last * head_size + t / dim;
}

}  // namespace detail

// lambda: the signed-free cyclic rotation of arguments.
inline Cochain cyclic_permute(const Cochain& phi) {
  Cochain out = phi;
  for (std::size_t t = 0; t < phi.coeffs.size(); ++t)
    out.coeffs[t] = phi.coeffs[detail::rotate_index(t, phi.dim, phi.degree)];
  return out;
}

// Whether phi lies in C^n_lambda.
inline bool is_cyclic(const Cochain& phi) {
  const Rational sign(phi.degree % 2 == 0 ? 1 : -1);
  for (std::size_t t = 0; t < phi.coeffs.size(); ++t)
    if (phi.coeffs[detail::rotate_index(t, phi.dim, phi.degree)] != sign * phi.coeffs[t])
      return false;
  return true;
}

// Hochschild coboundary with the sign convention above.
inline Cochain hochschild_coboundary(const StructureAlgebra& alg, const Cochain& phi) {
  const std::size_t d = alg.dim;
  if (phi.dim != d)
    throw std::invalid_argument("hochschild_coboundary: cochain dimension mismatch");
  const std::size_t n = phi.degree;
  Cochain out = Cochain::zero(n + 1, d);

  std::vector<std::size_t> x(n + 2, 0);
  for (std::size_t t = 0; t < out.coeffs.size(); ++t) {
    // Decode the output tuple (x0, ..., x_{n+1}).
    std::size_t rest = t;
    for (std::size_t s = n + 2; s-- > 0;) {
      x[s] = rest % d;
      rest /= d;
    }

    Rational value(0);
    // phi applied to the tuple with x_j, x_{j+1} multiplied out: contract
    // the product against the structure constants in position j.
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational sign(j % 2 == 0 ? 1 : -1);
      for (std::size_t m = 0; m < d; ++m) {
        const Rational& coeff = alg.c(x[j], x[j + 1], m);
        if (coeff == 0)
          continue;
        std::size_t flat = 0;
        for (std::size_t s = 0; s <= n + 1; ++s) {
          if (s == j + 1)
            continue;
          flat = flat * d + (s == j ? m : x[s]);
        }
        value += sign * coeff * phi.coeffs[flat];
      }
    }
    // Closing term: x_{n+1} x_0 in the first slot.
    const Rational closing_sign((n + 1) % 2 == 0 ? 1 : -1);
    for (std::size_t m = 0; m < d; ++m) {
      const Rational& coeff = alg.c(x[n + 1], x[0], m);
      if (coeff == 0)
        continue;
      std::size_t flat = m;
      for (std::size_t s = 1; s <= n; ++s)
        flat = flat * d + x[s];
      value += closing_sign * coeff * phi.coeffs[flat];
    }
    out.coeffs[t] = value;
  }
  return out;
}

// Basis of C^n_lambda as the exact nullspace of (lambda - (-1)^n id).
inline Subspace cyclic_subspace(const StructureAlgebra& alg, std::size_t n,
                                const CyclicLimits& limits = {}) {
  const std::size_t size = detail::tensor_size(alg.dim, n, limits);
  const Rational sign(n % 2 == 0 ? 1 : -1);
  RatMatrix constraints;
  constraints.reserve(size);
  for (std::size_t t = 0; t < size; ++t) {
    std::vector<Rational> row(size, Rational(0));
    const std::size_t rotated = detail::rotate_index(t, alg.dim, n);
    row[rotated] += 1;
    row[t] -= sign;
    constraints.push_back(std::move(row));
  }
  return nullspace(std::move(constraints), size);
}

// Tracial functionals: tau with tau(e_i e_j) = tau(e_j e_i) for all i, j.
inline Subspace trace_space(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  RatMatrix constraints;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Rational> row(d);
      for (std::size_t k = 0; k < d; ++k)
        row[k] = alg.c(i, j, k) - alg.c(j, i, k);
      constraints.push_back(std::move(row));
    }
  return nullspace(std::move(constraints), d);
}

// dim HC^n = dim(ker b restricted to C^n_lambda) - dim b(C^{n-1}_lambda).
// Also checks the complex is well formed: b must map C^{n-1}_lambda into
// C^n_lambda, and the image must sit inside the kernel.
inline std::size_t hc_dimension(const StructureAlgebra& alg, std::size_t n,
                                const CyclicLimits& limits = {}) {
  const Subspace cn = cyclic_subspace(alg, n, limits);

  const auto images_of = [&alg](const Subspace& space, std::size_t degree) {
    RatMatrix images;
    images.reserve(space.rank());
    for (const std::vector<Rational>& vec : space.basis) {
      Cochain phi{degree, alg.dim, vec};
      images.push_back(hochschild_coboundary(alg, phi).coeffs);
    }
    return images;
  };

  const std::size_t rank_here = rank_exact(images_of(cn, n));
  const std::size_t kernel_dim = cn.rank() - rank_here;

  std::size_t image_dim = 0;
  if (n > 0) {
    const Subspace below = cyclic_subspace(alg, n - 1, limits);
    RatMatrix images = images_of(below, n - 1);
    for (const std::vector<Rational>& img : images)
      if (!is_cyclic(Cochain{n, alg.dim, img}))
        throw std::logic_error("hc_dimension: b left the cyclic subspace");
    image_dim = rank_exact(images);
  }
  if (image_dim > kernel_dim)
    throw std::logic_error("hc_dimension: image exceeds kernel");
  return kernel_dim - image_dim;
}

}  // namespace lazycone
