#pragma once

// Catalogue of explicit matrices in the image of the handlebody and twist
// groups: elementary transformations, the zeta-rotation T and its conjugates,
// transvections of lifted Dehn twists, deck scalars and urSp_{2g-2}(Z).
//
// Signed indices i = +-1..+-(g-1) name basis vectors e_i; see basis_position().

#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "prym/cyclotomic.hpp"
#include "prym/error.hpp"
#include "prym/poly.hpp"
#include "prym/predicates.hpp"
#include "prym/ringlinalg.hpp"

namespace prym {

namespace detail {

inline void check_index(int g, int i) { (void)basis_position(g, i); }

inline void check_positive_index(int g, int i) {
  if (i <= 0 || i > g - 1)
    throw DomainError("index " + std::to_string(i) + " must lie in 1.." + std::to_string(g - 1));
}

inline void check_distinct_abs(int i, int j) {
  if (std::abs(i) == std::abs(j))
    throw DomainError("indices " + std::to_string(i) + ", " + std::to_string(j) + " must satisfy |i| != |j|");
}

// The row vector w with <x, v> = w . x, i.e. w_a = sum_b Omega_ab conj(v_b).
inline RingVector form_functional(const RingVector& v, int g) {
  const std::size_t n = static_cast<std::size_t>(g - 1);
  RingVector w(2 * n, CycInt::zero(v[0].modulus()));
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = v[n + i].conj();
    w[n + i] = -v[i].conj();
  }
  return w;
}

// Id + sum_t cols[t] * rows[t]^T
inline BlockMat identity_plus_rank(int d, int g, const std::vector<std::pair<RingVector, RingVector>>& terms) {
  BlockMat id = BlockMat::identity(d, g);
  RingMatrix m = id.matrix();
  const std::size_t size = m.rows();
  for (const auto& [col, row] : terms)
    for (std::size_t r = 0; r < size; ++r) {
      if (col[r].is_zero()) continue;
      for (std::size_t c = 0; c < size; ++c)
        if (!row[c].is_zero()) m(r, c) += col[r] * row[c];
    }
  return BlockMat(g, std::move(m));
}

inline RingVector scaled(const CycInt& s, RingVector v) {
  for (auto& x : v) x = s * x;
  return v;
}

// Matrix whose columns are the images of the basis vectors listed in `images`
// (signed index -> image); unlisted basis vectors are fixed.
inline BlockMat from_images(int d, int g, const std::vector<std::pair<int, RingVector>>& images) {
  RingMatrix m = RingMatrix::identity(d, 2 * static_cast<std::size_t>(g - 1));
  for (const auto& [idx, img] : images) {
    const std::size_t col = basis_position(g, idx);
    for (std::size_t r = 0; r < img.size(); ++r) m(r, col) = img[r];
  }
  return BlockMat(g, std::move(m));
}

}  // namespace detail

/// T_i(r'): x -> x + r' <x, e_i> e_i, for real r'.
inline BlockMat elem_Ti(int g, int d, int i, const CycInt& r) {
  detail::check_index(g, i);
  if (!r.is_real()) throw DomainError("T_i needs a real scalar, got " + r.to_string());
  const RingVector e = basis_vector(d, g, i);
  return detail::identity_plus_rank(d, g, {{detail::scaled(r, e), detail::form_functional(e, g)}});
}

/// T_{i,j}(r): x -> x + r <x, e_i> e_j + conj(r) <x, e_j> e_i.
inline BlockMat elem_Tij(int g, int d, int i, int j, const CycInt& r) {
  detail::check_index(g, i);
  detail::check_index(g, j);
  detail::check_distinct_abs(i, j);
  const RingVector ei = basis_vector(d, g, i), ej = basis_vector(d, g, j);
  return detail::identity_plus_rank(d, g,
                                    {{detail::scaled(r, ej), detail::form_functional(ei, g)},
                                     {detail::scaled(r.conj(), ei), detail::form_functional(ej, g)}});
}

/// T: e_{+-1} -> zeta e_{+-1}, all other basis vectors fixed.
inline BlockMat big_T(int g, int d) {
  BlockMat id = BlockMat::identity(d, g);
  RingMatrix m = id.matrix();
  m(basis_position(g, 1), basis_position(g, 1)) = zeta_pow(d, 1);
  m(basis_position(g, -1), basis_position(g, -1)) = zeta_pow(d, 1);
  return BlockMat(g, std::move(m));
}

/// A_H: swaps the planes <e_i, e_-i> and <e_1, e_-1>.
inline BlockMat conj_AH(int g, int d, int i) {
  detail::check_positive_index(g, i);
  if (i == 1) return BlockMat::identity(d, g);
  auto e = [&](int k) { return basis_vector(d, g, k); };
  return detail::from_images(d, g, {{1, e(i)}, {-1, e(-i)}, {i, e(1)}, {-i, e(-1)}});
}

/// A_{H'}: maps H' = <e_i, e_-i + e_j> onto <e_1, e_-1> by an element of
/// urSp_{2g-2}(Z). Three cases: |j| != 1, j = 1, j = -1.
///
/// For j < 0 the images carry the signs that make the map symplectic:
/// e_{-j} -> e_{-j} + e_1 (|j| != 1) and e_{-i} -> e_{-1} - e_{-i} (j = -1).
inline BlockMat conj_AHPrime(int g, int d, int i, int j) {
  detail::check_positive_index(g, i);
  detail::check_index(g, j);
  detail::check_distinct_abs(i, j);
  auto e = [&](int k) { return basis_vector(d, g, k); };
  auto add = [](RingVector a, const RingVector& b, int sign) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] = sign > 0 ? a[t] + b[t] : a[t] - b[t];
    return a;
  };
  std::vector<std::pair<int, RingVector>> images;
  if (std::abs(j) != 1) {
    // With i = 1 the swap entries are trivial and the e_{-i} image wins.
    if (i != 1) images = {{1, e(i)}, {-1, e(-i)}, {i, e(1)}};
    images.push_back({-i, add(e(-1), e(j), -1)});
    images.push_back({-j, add(e(-j), e(1), j > 0 ? -1 : +1)});
  } else if (j == 1) {
    images = {{1, e(i)}, {i, e(1)}, {-1, add(e(-i), e(1), -1)}, {-i, add(e(-1), e(i), -1)}};
  } else {
    images = {{1, add(e(1), e(i), +1)}, {i, e(1)}, {-1, e(-i)}, {-i, add(e(-1), e(-i), -1)}};
  }
  return detail::from_images(d, g, images);
}

/// T_H = A_H^-1 T A_H: multiplication by zeta on <e_i, e_-i>.
inline BlockMat TH(int g, int d, int i) {
  const BlockMat a = conj_AH(g, d, i);
  return inverse(a) * big_T(g, d) * a;
}

/// T_{H'} = A_{H'}^-1 T A_{H'}: multiplication by zeta on <e_i, e_-i + e_j>.
inline BlockMat THPrime(int g, int d, int i, int j) {
  const BlockMat a = conj_AHPrime(g, d, i, j);
  return inverse(a) * big_T(g, d) * a;
}

/// x -> x + <x, v> v for an arbitrary vector v.
inline BlockMat transvection(int g, const RingVector& v) {
  if (v.size() != 2 * static_cast<std::size_t>(g - 1)) throw DomainError("transvection vector has wrong length");
  return detail::identity_plus_rank(v[0].modulus(), g, {{v, detail::form_functional(v, g)}});
}

/// Lifted Dehn twist about a meridian with class v in span{e_1..e_{g-1}}:
/// x -> x + <x, v> v, upper-right block -v v*.
inline BlockMat twist_transvection(int g, int d, const RingVector& v) {
  const std::size_t n = static_cast<std::size_t>(g - 1);
  if (v.size() != 2 * n) throw DomainError("twist vector has wrong length");
  for (std::size_t t = n; t < 2 * n; ++t)
    if (!v[t].is_zero()) throw DomainError("twist vector must be supported on e_1..e_{g-1}");
  (void)d;
  return transvection(g, v);
}

inline BlockMat twist_E(int g, int d, int i) {
  detail::check_positive_index(g, i);
  return twist_transvection(g, d, basis_vector(d, g, i));
}

/// Twist about gamma_{i,k}; its lift has class (1 - zeta^k) e_i.
inline BlockMat twist_gamma_ik(int g, int d, int i, long k) {
  detail::check_positive_index(g, i);
  return twist_transvection(g, d, detail::scaled(CycInt::one(d) - zeta_pow(d, k), basis_vector(d, g, i)));
}

/// Twist about gamma_{i,j,k}; its lift has class e_i - zeta^k e_j.
inline BlockMat twist_gamma_ijk(int g, int d, int i, int j, long k) {
  detail::check_positive_index(g, i);
  detail::check_positive_index(g, j);
  if (i == j) throw DomainError("gamma_{i,j,k} needs i != j");
  RingVector v = basis_vector(d, g, i);
  v[basis_position(g, j)] = -zeta_pow(d, k);
  return twist_transvection(g, d, v);
}

/// The three generator families of the twist-group image, all unipotent:
///   G1(i)     = T_{E_i}^-1                          block E_ii
///   G2(i,k)   = T_gamma(i,k) T_{E_i}^-2              block (zeta^k + zeta^-k) E_ii
///   G3(i,j,k) = T_gamma(i,j,k) T_{E_i}^-1 T_{E_j}^-1  block zeta^k E_ji + zeta^-k E_ij
inline BlockMat delta_G1(int g, int d, int i) { return inverse(twist_E(g, d, i)); }

inline BlockMat delta_G2(int g, int d, int i, long k) {
  return twist_gamma_ik(g, d, i, k) * power(twist_E(g, d, i), -2);
}

inline BlockMat delta_G3(int g, int d, int i, int j, long k) {
  return twist_gamma_ijk(g, d, i, j, k) * inverse(twist_E(g, d, i)) * inverse(twist_E(g, d, j));
}

inline BlockMat scalar_zeta(int g, int d, long k) {
  return BlockMat(g, RingMatrix::scalar(zeta_pow(d, k), 2 * static_cast<std::size_t>(g - 1)));
}

/// Promotes an integer matrix in urSp_{2g-2}(Z) into the representation.
inline BlockMat embed_ursp(int g, int d, const IntMatrix& m) {
  const std::size_t size = 2 * static_cast<std::size_t>(g - 1);
  if (m.size() != size) throw DomainError("urSp matrix has wrong size");
  RingMatrix r(d, size, size);
  for (std::size_t a = 0; a < size; ++a) {
    if (m[a].size() != size) throw DomainError("urSp matrix has wrong size");
    for (std::size_t b = 0; b < size; ++b) r(a, b) = CycInt::from_integer(d, m[a][b]);
  }
  BlockMat out(g, std::move(r));
  if (auto verdict = is_member(out, GroupTag::UrSpZ); !verdict)
    throw DomainError("not in urSp_{2g-2}(Z): " + verdict.reason);
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic generator names, shared with the word language.

namespace gen {

struct Ti {
  int i;
  LaurentPoly r;
  friend bool operator==(const Ti&, const Ti&) = default;
};
struct Tij {
  int i, j;
  LaurentPoly r;
  friend bool operator==(const Tij&, const Tij&) = default;
};
struct BigT {
  friend bool operator==(const BigT&, const BigT&) = default;
};
struct AH {
  int i;
  friend bool operator==(const AH&, const AH&) = default;
};
struct AHPrime {
  int i, j;
  friend bool operator==(const AHPrime&, const AHPrime&) = default;
};
struct TH {
  int i;
  friend bool operator==(const TH&, const TH&) = default;
};
struct THPrime {
  int i, j;
  friend bool operator==(const THPrime&, const THPrime&) = default;
};
struct TwistE {
  int i;
  friend bool operator==(const TwistE&, const TwistE&) = default;
};
struct GammaIK {
  int i;
  long k;
  friend bool operator==(const GammaIK&, const GammaIK&) = default;
};
struct GammaIJK {
  int i, j;
  long k;
  friend bool operator==(const GammaIJK&, const GammaIJK&) = default;
};
struct G1 {
  int i;
  friend bool operator==(const G1&, const G1&) = default;
};
struct G2 {
  int i;
  long k;
  friend bool operator==(const G2&, const G2&) = default;
};
struct G3 {
  int i, j;
  long k;
  friend bool operator==(const G3&, const G3&) = default;
};
struct Zeta {
  long k;
  friend bool operator==(const Zeta&, const Zeta&) = default;
};
struct UrSp {
  IntMatrix m;
  friend bool operator==(const UrSp&, const UrSp&) = default;
};
/// General transvection x -> x + <x, v> v (not necessarily a handlebody element).
struct Transvection {
  std::vector<LaurentPoly> v;
  friend bool operator==(const Transvection&, const Transvection&) = default;
};

}  // namespace gen

using GenSpec = std::variant<gen::Ti, gen::Tij, gen::BigT, gen::AH, gen::AHPrime, gen::TH, gen::THPrime, gen::TwistE,
                             gen::GammaIK, gen::GammaIJK, gen::G1, gen::G2, gen::G3, gen::Zeta, gen::UrSp,
                             gen::Transvection>;

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

/// Matrix of a symbolic generator in Z[zeta_d], genus g.
inline BlockMat build_generator(const GenSpec& spec, int d, int g) {
  return std::visit(
      detail::overloaded{
          [&](const gen::Ti& s) { return elem_Ti(g, d, s.i, CycInt::from_laurent(d, s.r)); },
          [&](const gen::Tij& s) { return elem_Tij(g, d, s.i, s.j, CycInt::from_laurent(d, s.r)); },
          [&](const gen::BigT&) { return big_T(g, d); },
          [&](const gen::AH& s) { return conj_AH(g, d, s.i); },
          [&](const gen::AHPrime& s) { return conj_AHPrime(g, d, s.i, s.j); },
          [&](const gen::TH& s) { return TH(g, d, s.i); },
          [&](const gen::THPrime& s) { return THPrime(g, d, s.i, s.j); },
          [&](const gen::TwistE& s) { return twist_E(g, d, s.i); },
          [&](const gen::GammaIK& s) { return twist_gamma_ik(g, d, s.i, s.k); },
          [&](const gen::GammaIJK& s) { return twist_gamma_ijk(g, d, s.i, s.j, s.k); },
          [&](const gen::G1& s) { return delta_G1(g, d, s.i); },
          [&](const gen::G2& s) { return delta_G2(g, d, s.i, s.k); },
          [&](const gen::G3& s) { return delta_G3(g, d, s.i, s.j, s.k); },
          [&](const gen::Zeta& s) { return scalar_zeta(g, d, s.k); },
          [&](const gen::UrSp& s) { return embed_ursp(g, d, s.m); },
          [&](const gen::Transvection& s) {
            RingVector v;
            for (const auto& p : s.v) v.push_back(CycInt::from_laurent(d, p));
            if (v.empty()) throw DomainError("empty transvection vector");
            return transvection(g, v);
          },
      },
      spec);
}

}  // namespace prym
