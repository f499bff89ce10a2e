#pragma once

// Rational cohomology of complete simplicial toric varieties and of their
// anticanonical hypersurfaces.

#include <array>
#include <cstddef>
#include <vector>

#include "cytrans/fan.hpp"
#include "cytrans/groebner.hpp"

namespace cytrans {

/// Q[x1..xr] under degrevlex with x1 > ... > xr, one variable per ray.
Ring ray_ring(const Fan& f);

/// Minimal non-faces as squarefree monomials, lexicographic by index set.
/// Throws std::invalid_argument for non-simplicial fans.
Ideal stanley_reisner_ideal(const Fan& f, const Ring& ring);
Ideal stanley_reisner_ideal(const Fan& f);

/// Generator k is sum_i u_i[k] x_i.
Ideal linear_ideal(const Fan& f, const Ring& ring);
Ideal linear_ideal(const Fan& f);

/// Q[x]/(J + SR) with each x_i in degree 2.
GradedQuotientRing cohomology_ring(const Fan& f);

/// dim H^{2d} for d = 0..dim.
std::vector<std::size_t> betti(const GradedQuotientRing& r);
std::vector<std::size_t> betti(const Fan& f);

/// Normal form of x1 + ... + xr.
Polynomial hypersurface_class(const GradedQuotientRing& r);

/// Kernel of multiplication by y, indexed by polynomial degree (cohomological
/// degree 2d). Each basis is the reduced row echelon basis of the kernel in
/// the descending standard-monomial basis, scaled to primitive integer
/// coefficients with positive leading coefficient.
struct CupKernel {
  std::vector<std::vector<Polynomial>> by_degree;
  std::vector<std::size_t> source_dims;
  std::vector<std::size_t> ranks;  // rank of multiplication in each degree

  std::size_t dim(std::size_t d) const { return d < by_degree.size() ? by_degree[d].size() : 0; }
  std::vector<Polynomial> all() const;
};
CupKernel cup_kernel(const GradedQuotientRing& r, const Polynomial& y);

/// (b0, b2, b4, b6) of the hypersurface: dim H^{2d}(X) - dim ker in degree d.
std::array<std::size_t, 4> cy_betti(const GradedQuotientRing& r, const CupKernel& k);

struct TrilinearChoice {
  std::vector<Polynomial> basis;  // three degree-1 polynomials
  Polynomial top;                 // degree 3
};

/// Last three ray variables with the cube of the last, when they give a
/// basis of H^2(Y) and a nonzero top class; otherwise the first three
/// surviving degree-2 standard monomials and the first surviving degree-6 one.
TrilinearChoice default_trilinear_choice(const GradedQuotientRing& r, const CupKernel& k);

/// Ring Q[A,B,C] (degrevlex, A > B > C) used for trilinear forms.
Ring abc_ring();

/// (A e1 + B e2 + C e3)^3 = t(A,B,C) top in H*(X)/ker. Throws
/// std::invalid_argument when the classes are dependent modulo the kernel or
/// when the top class vanishes.
Polynomial trilinear_form(const GradedQuotientRing& r, const CupKernel& k, const TrilinearChoice& choice);

}  // namespace cytrans
