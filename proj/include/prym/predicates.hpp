#pragma once

// Membership tests for the matrix groups
//   Delta  <=  Lambda  <=  urU#  <=  urU  <=  U
// together with urSp_{2g-2}(Z) and the genus-2 normal form.

#include <optional>
#include <string>
#include <string_view>

#include "prym/cyclotomic.hpp"
#include "prym/error.hpp"
#include "prym/ringlinalg.hpp"

namespace prym {

enum class GroupTag { U, USharp, UrU, UrUSharp, UrSpZ, Lambda, Delta, Genus2Theta };

inline std::string_view group_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::U: return "U";
    case GroupTag::USharp: return "USharp";
    case GroupTag::UrU: return "UrU";
    case GroupTag::UrUSharp: return "UrUSharp";
    case GroupTag::UrSpZ: return "UrSpZ";
    case GroupTag::Lambda: return "Lambda";
    case GroupTag::Delta: return "Delta";
    case GroupTag::Genus2Theta: return "Genus2Theta";
  }
  return "?";
}

inline std::optional<GroupTag> parse_group_tag(std::string_view name) {
  for (GroupTag t : {GroupTag::U, GroupTag::USharp, GroupTag::UrU, GroupTag::UrUSharp, GroupTag::UrSpZ,
                     GroupTag::Lambda, GroupTag::Delta, GroupTag::Genus2Theta})
    if (group_name(t) == name) return t;
  return std::nullopt;
}

/// Verdict plus the first failing clause.
struct Membership {
  bool member = true;
  std::string reason;

  static Membership yes() { return {}; }
  static Membership no(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return member; }
};

namespace detail {

inline bool lower_left_zero(const BlockMat& m) { return m.lower_left().is_zero(); }

inline bool all_integer(const BlockMat& m) {
  const auto& a = m.matrix();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).as_integer()) return false;
  return true;
}

// det == zeta^e with e even for some representative e mod d.
inline bool is_even_zeta_power(const CycInt& x) {
  const int d = x.modulus();
  for (long k = 0; k < d; ++k)
    if (x == zeta_pow(d, 2 * k)) return true;
  return false;
}

inline Membership check_u(const BlockMat& m) {
  if (!preserves_form(m)) return Membership::no("M* Omega M != Omega");
  return Membership::yes();
}

inline Membership check_usharp(const BlockMat& m) {
  if (auto r = check_u(m); !r) return r;
  if (!is_even_zeta_power(det(m.matrix()))) return Membership::no("det is not an even power of zeta");
  return Membership::yes();
}

inline Membership check_urU(const BlockMat& m) {
  if (!lower_left_zero(m)) return Membership::no("lower-left != 0");
  return check_u(m);
}

inline Membership check_lambda(const BlockMat& m) {
  if (!lower_left_zero(m)) return Membership::no("lower-left != 0");
  const RingMatrix a = m.upper_left(), b = m.upper_right(), dd = m.lower_right();
  const RingMatrix dstar = dd.adjoint();
  const std::size_t n = m.half();
  // A = (D*)^-1  <=>  A D* = Id (square matrices over a commutative domain)
  if (a * dstar != RingMatrix::identity(m.modulus(), n)) return Membership::no("upper-left != (D*)^-1");
  if (!unit_exponent(det(dd))) return Membership::no("det(D) is not +-zeta^k");
  if (dstar * b != b.adjoint() * dd) return Membership::no("D*B != B*D");
  return Membership::yes();
}

inline Membership check_delta(const BlockMat& m) {
  const int d = m.modulus();
  const std::size_t n = m.half();
  const CycInt lead = m.matrix()(0, 0);
  for (long k = 0; k < d; ++k) {
    if (lead != zeta_pow(d, k)) continue;
    const BlockMat scaled = zeta_pow(d, -k) * m;
    const RingMatrix id = RingMatrix::identity(d, n);
    if (scaled.upper_left() != id || scaled.lower_right() != id || !scaled.lower_left().is_zero())
      return Membership::no("not of the form zeta^k [[Id, B], [0, Id]]");
    if (!is_self_adjoint(scaled.upper_right())) return Membership::no("B != B*");
    return Membership::yes();
  }
  return Membership::no("leading entry is not a power of zeta");
}

inline Membership check_ursp_z(const BlockMat& m) {
  if (!all_integer(m)) return Membership::no("entries are not integers");
  if (!lower_left_zero(m)) return Membership::no("lower-left != 0");
  if (!preserves_form(m)) return Membership::no("not symplectic");
  return Membership::yes();
}

inline Membership check_genus2(const BlockMat& m) {
  if (m.genus() != 2) return Membership::no("genus is not 2");
  if (auto r = check_lambda(m); !r) return r;
  const auto& a = m.matrix();
  auto u = unit_exponent(a(1, 1));
  if (!u) return Membership::no("D is not +-zeta^k");
  const CycInt s = zeta_pow(m.modulus(), -u->k);
  if (s * a(0, 0) != s * a(1, 1)) return Membership::no("diagonal entries differ");
  if (!(s * a(0, 1)).is_real()) return Membership::no("normalised upper-right entry is not real");
  return Membership::yes();
}

}  // namespace detail

inline Membership is_member(const BlockMat& m, GroupTag tag) {
  switch (tag) {
    case GroupTag::U: return detail::check_u(m);
    case GroupTag::USharp: return detail::check_usharp(m);
    case GroupTag::UrU: return detail::check_urU(m);
    case GroupTag::UrUSharp: {
      if (auto r = detail::check_urU(m); !r) return r;
      return detail::check_usharp(m);
    }
    case GroupTag::UrSpZ: return detail::check_ursp_z(m);
    case GroupTag::Lambda: return detail::check_lambda(m);
    case GroupTag::Delta: return detail::check_delta(m);
    case GroupTag::Genus2Theta: return detail::check_genus2(m);
  }
  throw DomainError("unknown group tag");
}

/// Image of a genus-2 Lambda element in Z/2 (+) R' after removing the scalar zeta^k.
struct ThetaImage {
  int sign;  // +1 or -1
  CycInt r;  // real
  friend bool operator==(const ThetaImage&, const ThetaImage&) = default;
};

namespace detail {

inline std::pair<UnitExponent, BlockMat> genus2_normalise(const BlockMat& m) {
  if (m.genus() != 2) throw DomainError("genus-2 projection needs g = 2");
  if (auto r = check_lambda(m); !r) throw DomainError("not in Lambda: " + r.reason);
  auto u = unit_exponent(m.matrix()(1, 1));
  if (!u) throw ArithmeticError("Lambda element with D not a unit power");
  return {*u, zeta_pow(m.modulus(), -u->k) * m};
}

}  // namespace detail

/// (sign, r) with M = zeta^k * sign * [[1, r], [0, 1]]. Odd d only: for even d
/// the sign is absorbed by -1 = zeta^(d/2) and is not well defined.
inline ThetaImage genus2_theta_project(const BlockMat& m) {
  if (m.modulus() % 2 == 0) throw DomainError("Theta projection sign is only defined for odd d");
  auto [u, scaled] = detail::genus2_normalise(m);
  const CycInt r = u.sign < 0 ? -scaled.matrix()(0, 1) : scaled.matrix()(0, 1);
  return {u.sign, r};
}

/// The R' component of the genus-2 projection, defined for every d. For even
/// d the scalar is normalised to a pure power of zeta (D = 1).
inline CycInt genus2_real_part(const BlockMat& m) {
  auto [u, scaled] = detail::genus2_normalise(m);
  return u.sign < 0 ? -scaled.matrix()(0, 1) : scaled.matrix()(0, 1);
}

}  // namespace prym
