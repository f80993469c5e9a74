#pragma once

#include <array>

#include "cdhom/types.hpp"

namespace cdhom {

// Element of SL(2,C), rows [a b; c d], acting on the disc by z -> (az+b)/(cz+d).
// Elements of SU(1,1) (d = conj(a), c = conj(b), |a|^2 - |b|^2 = 1) are the
// Mobius automorphisms of the disc; is_unitary_disc() reports that tag.
class GroupElement {
public:
  GroupElement() = default;
  /// Throws DomainError unless |ad - bc - 1| <= 1e-12.
  GroupElement(cplx a, cplx b, cplx c, cplx d);

  static GroupElement identity() { return {}; }
  /// k_theta = diag(e^{i theta/2}, e^{-i theta/2}), z -> e^{i theta} z.
  static GroupElement rotation(double theta);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

  bool is_unitary_disc() const { return unitary_disc_; }

  GroupElement inverse() const;
  CMatrix matrix() const;

  friend GroupElement operator*(const GroupElement &g, const GroupElement &h);

private:
  struct Unchecked {};
  GroupElement(cplx a, cplx b, cplx c, cplx d, Unchecked);
  void tag();

  cplx a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
  bool unitary_disc_ = true;
};

/// (az+b)/(cz+d); PoleHit when |cz+d| < 1e-14.
cplx act(const GroupElement &g, cplx z);

/// g'(z) = (cz+d)^{-2}; PoleHit as for act.
cplx derivative(const GroupElement &g, cplx z);

// c_h h + c_x x + c_y y in the complex basis
//   h = [1/2 0; 0 -1/2],  x = [0 1; 0 0],  y = [0 0; 1 0].
struct LieAlgebraElement {
  cplx c_h{0.0};
  cplx c_x{0.0};
  cplx c_y{0.0};

  static LieAlgebraElement h() { return {1.0, 0.0, 0.0}; }
  static LieAlgebraElement x() { return {0.0, 1.0, 0.0}; }
  static LieAlgebraElement y() { return {0.0, 0.0, 1.0}; }
  /// X_0 = i h, generator of the rotations.
  static LieAlgebraElement X0() { return {cplx{0.0, 1.0}, 0.0, 0.0}; }
  /// X_1 = (x + y)/2.
  static LieAlgebraElement X1() { return {0.0, 0.5, 0.5}; }
  /// Y = (x - y)/(2i).
  static LieAlgebraElement Y() { return {0.0, cplx{0.0, -0.5}, cplx{0.0, 0.5}}; }

  Eigen::Matrix2cd matrix() const;

  friend LieAlgebraElement operator*(double s, LieAlgebraElement X) {
    return {s * X.c_h, s * X.c_x, s * X.c_y};
  }
  friend LieAlgebraElement operator+(LieAlgebraElement X,
                                     const LieAlgebraElement &Z) {
    return {X.c_h + Z.c_h, X.c_x + Z.c_x, X.c_y + Z.c_y};
  }
};

/// exp(t X). Diagonal and nilpotent generators use their exact closed forms;
/// any other traceless generator uses cosh(s) I + sinh(s)/s A, s^2 = -det A.
GroupElement exp_basis(const LieAlgebraElement &X, double t);

// Coefficients of the vector field X.z = k0 + k1 z + k2 z^2 generated by X.
struct VectorField {
  cplx k0{0.0}, k1{0.0}, k2{0.0};
  cplx operator()(cplx z) const { return k0 + z * (k1 + z * k2); }
};

/// x.z = 1, y.z = -z^2, h.z = z, extended linearly.
VectorField infinitesimal_action(const LieAlgebraElement &X);

} // namespace cdhom
