#pragma once

#include "acm5/acms.hpp"

// Textbook formulas straight from the connection values, written without
// the library's pointwise machinery.
namespace acm5::oracle {

inline Scalar Phi(int a, int b) { return evaluate(fundamental_form(), {a, b}); }
inline Scalar P(int c, int b) { return phi_matrix()(c, b); }

// g(nabla_{e_a} e_b, e_c)
inline Scalar nab(const Tensor3& conn, int a, int b, int c) { return conn(a, b, c); }

// g([e_a, e_b], e_c) for the torsion-free connection
inline Scalar bracket(const Tensor3& conn, int a, int b, int c) { return conn(a, b, c) - conn(b, a, c); }

// (nabla_X Phi)(Y, Z) = -Phi(nabla_X Y, Z) - Phi(Y, nabla_X Z)
inline Tensor3 nabla_Phi(const Tensor3& conn) {
  Tensor3 t;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        Scalar v;
        for (int c = 0; c < 5; ++c) v -= nab(conn, x, y, c) * Phi(c, z) + nab(conn, x, z, c) * Phi(y, c);
        t.set_raw(x, y, z, v);
      }
  return t;
}

// g((nabla_X phi) Y, Z) = g(nabla_X (phi Y), Z) - g(phi nabla_X Y, Z)
inline Tensor3 nabla_phi(const Tensor3& conn) {
  Tensor3 t;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        Scalar v;
        for (int c = 0; c < 5; ++c) {
          v += P(c, y) * nab(conn, x, c, z);
          v -= nab(conn, x, y, c) * P(z, c);
        }
        t.set_raw(x, y, z, v);
      }
  return t;
}

// g(nabla_X xi, Y)
inline Scalar nabla_xi(const Tensor3& conn, int x, int y) { return conn(x, kXi, y); }

// N(X,Y,Z) = g(X, [phi,phi](Y,Z)) + eta(X) d eta(Y,Z) from Lie brackets.
inline Tensor3 nijenhuis(const Tensor3& conn) {
  auto br = [&](const Vec& u, const Vec& v, int c) {
    Scalar s;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        if (!u[a].is_zero() && !v[b].is_zero()) s += u[a] * v[b] * bracket(conn, a, b, c);
    return s;
  };
  auto vec_of = [&](auto&& coord) {
    Vec v{};
    for (int c = 0; c < 5; ++c) v[c] = coord(c);
    return v;
  };
  Tensor3 t;
  for (int y = 0; y < 5; ++y)
    for (int z = 0; z < 5; ++z) {
      Vec ey = basis_vector(y), ez = basis_vector(z);
      Vec py = phi(ey), pz = phi(ez);
      Vec b1 = vec_of([&](int c) { return br(py, pz, c); });
      Vec b2 = vec_of([&](int c) { return br(ey, ez, c); });
      Vec b3 = vec_of([&](int c) { return br(py, ez, c); });
      Vec b4 = vec_of([&](int c) { return br(ey, pz, c); });
      Vec pb2 = phi(phi(b2)), pb3 = phi(b3), pb4 = phi(b4);
      for (int x = 0; x < 5; ++x) {
        Scalar v = b1[x] + pb2[x] - pb3[x] - pb4[x];
        if (x == kXi) v -= b2[kXi];  // d eta(Y,Z) = -eta([Y,Z])
        t.set_raw(x, y, z, v);
      }
    }
  return t;
}

// The N-through-nabla-Phi expression of the system.
inline Tensor3 nijenhuis_from_nabla_Phi(const Tensor3& np) {
  auto along = [&](const Vec& v, int a, int b) {
    Scalar s;
    for (int c = 0; c < 5; ++c)
      if (!v[c].is_zero()) s += v[c] * np(c, a, b);
    return s;
  };
  auto slot2 = [&](int x, const Vec& v, int b) {
    Scalar s;
    for (int c = 0; c < 5; ++c)
      if (!v[c].is_zero()) s += v[c] * np(x, c, b);
    return s;
  };
  auto slot3 = [&](int x, int a, const Vec& v) {
    Scalar s;
    for (int c = 0; c < 5; ++c)
      if (!v[c].is_zero()) s += v[c] * np(x, a, c);
    return s;
  };
  Tensor3 t;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        Vec px = phi(basis_vector(x)), py = phi(basis_vector(y)), pz = phi(basis_vector(z));
        Scalar v = along(py, x, z) - along(pz, x, y) + slot2(y, px, z) - slot2(z, px, y);
        if (x == kXi) v += slot3(y, kXi, pz) - slot3(z, kXi, py);
        t.set_raw(x, y, z, v);
      }
  return t;
}

}  // namespace acm5::oracle
