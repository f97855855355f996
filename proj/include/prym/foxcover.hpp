#pragma once

// The graph-theoretic representation eta : Gamma_{X,C} -> GL_{g-1}(Z[zeta_d]).
//
// X is the rose on x_1..x_g and X~ its d-fold cyclic cover along x_g. eta is
// computed twice: by lifting paths to X~ and reading off 1-chains
// (eta_chain), and by Fox calculus pushed through x_i -> 1, x_g -> zeta
// (eta_fox). Both use the covariant convention eta(phi o psi) =
// eta(phi) eta(psi) with column j holding the image of x_j; see
// kEtaConvention.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prym/cyclotomic.hpp"
#include "prym/error.hpp"
#include "prym/ringlinalg.hpp"

namespace prym {

/// Freely reduced word in x_1..x_g; letter +i is x_i, -i is x_i^-1.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters) {
    for (int l : letters) push(l);
  }

  static FreeWord generator(int i) { return FreeWord(std::vector<int>{i}); }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  void push(int letter) {
    if (letter == 0) throw DomainError("free word letter 0");
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }

  FreeWord& operator*=(const FreeWord& o) {
    for (int l : o.letters_) push(l);
    return *this;
  }
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }

  FreeWord inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
    return r;
  }

  /// Signed count of x_i letters.
  long exponent_sum(int i) const {
    long s = 0;
    for (int l : letters_) s += (l == i) - (l == -i);
    return s;
  }

  int max_generator() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, std::abs(l));
    return m;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.letters_ <=> b.letters_; }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t t = 0; t < letters_.size(); ++t) {
      if (t) out += " ";
      out += "x" + std::to_string(std::abs(letters_[t]));
      if (letters_[t] < 0) out += "^-1";
    }
    return out;
  }

 private:
  std::vector<int> letters_;
};

/// Endomorphism of F_g given by generator images, with a candidate inverse.
struct Endo {
  int g = 0;
  std::vector<FreeWord> images;          // images[i-1] = phi(x_i)
  std::vector<FreeWord> inverse_images;  // psi with phi o psi = psi o phi = id

  static Endo identity(int g) {
    Endo e{g, {}, {}};
    for (int i = 1; i <= g; ++i) {
      e.images.push_back(FreeWord::generator(i));
      e.inverse_images.push_back(FreeWord::generator(i));
    }
    return e;
  }

  /// Substitutes images into w.
  FreeWord apply(const FreeWord& w) const { return substitute(images, w); }

  Endo inverse() const { return Endo{g, inverse_images, images}; }

  static FreeWord substitute(const std::vector<FreeWord>& imgs, const FreeWord& w) {
    FreeWord out;
    for (int l : w.letters()) {
      const std::size_t idx = static_cast<std::size_t>(std::abs(l) - 1);
      if (idx >= imgs.size()) throw DomainError("letter x" + std::to_string(std::abs(l)) + " outside the rank");
      out *= l > 0 ? imgs[idx] : imgs[idx].inverse();
    }
    return out;
  }
};

/// (phi o psi)(x) = phi(psi(x)); the inverse is psi^-1 o phi^-1.
inline Endo compose(const Endo& phi, const Endo& psi) {
  if (phi.g != psi.g) throw DomainError("composing endomorphisms of different rank");
  Endo r{phi.g, {}, {}};
  for (const auto& w : psi.images) r.images.push_back(phi.apply(w));
  for (const auto& w : phi.inverse_images) r.inverse_images.push_back(Endo::substitute(psi.inverse_images, w));
  return r;
}

struct EndoCheck {
  bool member = true;
  std::string reason;
  explicit operator bool() const { return member; }
};

/// Automorphism certificate plus the congruences defining Gamma_{X,C}:
/// x_g-exponent of phi(x_i) is 0 mod d for i < g and 1 mod d for i = g.
inline EndoCheck check_member(const Endo& phi, int d) {
  if (d < 2) throw DomainError("modulus d must be >= 2");
  const std::size_t g = static_cast<std::size_t>(phi.g);
  if (phi.g < 2 || phi.images.size() != g || phi.inverse_images.size() != g)
    return {false, "images and inverse images must list all g generators"};
  for (int i = 1; i <= phi.g; ++i) {
    const FreeWord xi = FreeWord::generator(i);
    if (Endo::substitute(phi.images, phi.inverse_images[static_cast<std::size_t>(i - 1)]) != xi)
      return {false, "phi(psi(x" + std::to_string(i) + ")) != x" + std::to_string(i)};
    if (Endo::substitute(phi.inverse_images, phi.images[static_cast<std::size_t>(i - 1)]) != xi)
      return {false, "psi(phi(x" + std::to_string(i) + ")) != x" + std::to_string(i)};
  }
  for (int i = 1; i <= phi.g; ++i) {
    const long e = phi.images[static_cast<std::size_t>(i - 1)].exponent_sum(phi.g);
    const long want = i == phi.g ? 1 : 0;
    if (detail::mod_floor(e - want, d) != 0)
      return {false, "x" + std::to_string(phi.g) + "-exponent of phi(x" + std::to_string(i) + ") is " +
                         std::to_string(e) + ", expected " + std::to_string(want) + " mod " + std::to_string(d)};
  }
  return {};
}

/// First homology class of a closed lift in the cover graph.
struct CoverClass {
  int d = 0, g = 0;
  std::vector<Integer> loops;  // loops[(i-1)*d + c] for i < g, sheet c
  Integer lambda = 0;          // signed traversals of the x_g-edge from sheet d-1 to sheet 0

  Integer& loop(int i, int c) { return loops[static_cast<std::size_t>((i - 1) * d + c)]; }
  const Integer& loop(int i, int c) const { return loops[static_cast<std::size_t>((i - 1) * d + c)]; }
  friend bool operator==(const CoverClass&, const CoverClass&) = default;
};

/// Lifts w to the cover starting at sheet 0. The spanning tree consists of
/// the x_g-edges leaving sheets 0..d-2, so lambda counts the remaining edge.
inline CoverClass lift_class(const FreeWord& w, int d, int g) {
  if (d < 2) throw DomainError("modulus d must be >= 2");
  if (w.max_generator() > g) throw DomainError("word uses a generator beyond x" + std::to_string(g));
  CoverClass cls{d, g, std::vector<Integer>(static_cast<std::size_t>((g - 1) * d), 0), 0};
  long sheet = 0;
  for (int l : w.letters()) {
    const int i = std::abs(l);
    if (i < g) {
      cls.loop(i, static_cast<int>(sheet)) += l > 0 ? 1 : -1;
    } else if (l > 0) {
      if (sheet == d - 1) cls.lambda += 1;
      sheet = (sheet + 1) % d;
    } else {
      sheet = (sheet + d - 1) % d;
      if (sheet == d - 1) cls.lambda -= 1;
    }
  }
  if (sheet != 0) throw DomainError("word does not close up in the cover (x_g-exponent not divisible by d)");
  return cls;
}

/// Fixed once by comparing both routes on Nielsen generators: no transpose,
/// eta covariant in composition. Tests pin these values.
struct EtaConvention {
  bool transpose_fox;
  bool covariant;
};
inline constexpr EtaConvention kEtaConvention{false, true};

namespace detail {

inline RingVector project_class(const CoverClass& cls) {
  RingVector v(static_cast<std::size_t>(cls.g - 1), CycInt::zero(cls.d));
  for (int i = 1; i < cls.g; ++i)
    for (int c = 0; c < cls.d; ++c)
      if (cls.loop(i, c) != 0) v[static_cast<std::size_t>(i - 1)] += cls.loop(i, c) * zeta_pow(cls.d, c);
  return v;
}

inline void require_member(const Endo& phi, int d, int g) {
  if (phi.g != g) throw DomainError("endomorphism rank differs from g");
  if (auto ok = check_member(phi, d); !ok) throw DomainError("not in Gamma_{X,C}: " + ok.reason);
}

}  // namespace detail

/// Column j = projection of the lifted class of phi(x_j); loop (i, c) -> zeta^c e_i,
/// lambda -> 0.
inline RingMatrix eta_chain(const Endo& phi, int d, int g) {
  detail::require_member(phi, d, g);
  const std::size_t n = static_cast<std::size_t>(g - 1);
  RingMatrix m(d, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RingVector col = detail::project_class(lift_class(phi.images[j], d, g));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

/// Element of Z[F_g] as a formal sum of reduced words.
using GroupRingElement = std::map<FreeWord, Integer>;

/// Fox derivative: d(uv) = du + u dv, d x_j = delta_ij, d x_j^-1 = -delta_ij x_j^-1.
inline GroupRingElement fox_derivative(const FreeWord& w, int i) {
  GroupRingElement out;
  FreeWord prefix;
  auto add = [&](const FreeWord& key, int c) {
    auto [it, inserted] = out.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (int l : w.letters()) {
    if (l == i) add(prefix, 1);
    prefix.push(l);
    if (l == -i) add(prefix, -1);
  }
  return out;
}

/// Augmentation x_i -> 1 (i < g), x_g -> zeta.
inline CycInt fox_augment(const GroupRingElement& x, int d, int g) {
  CycInt acc = CycInt::zero(d);
  for (const auto& [w, c] : x) acc += c * zeta_pow(d, w.exponent_sum(g));
  return acc;
}

/// Entry (i, j) = augment(d phi(x_j) / d x_i) for i, j < g.
inline RingMatrix eta_fox(const Endo& phi, int d, int g) {
  detail::require_member(phi, d, g);
  const std::size_t n = static_cast<std::size_t>(g - 1);
  RingMatrix m(d, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      m(i, j) = fox_augment(fox_derivative(phi.images[j], static_cast<int>(i) + 1), d, g);
  return kEtaConvention.transpose_fox ? m.transpose() : m;
}

// ---------------------------------------------------------------------------
// Text format: `x1 -> x2 x1 x2^-1 ; x2 -> x2`. Unlisted generators map to themselves.

namespace detail {

inline FreeWord parse_free_word(std::string_view text, std::size_t offset) {
  FreeWord w;
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number", offset + pos);
    if (pos - start > 9) throw ParseError("number too large", offset + start);
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  for (;;) {
    ws();
    if (pos == text.size()) break;
    if (text[pos] == '1' && (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;  // explicit identity
      continue;
    }
    if (text[pos] != 'x') throw ParseError(std::string("expected 'x', found '") + text[pos] + "'", offset + pos);
    ++pos;
    const long gen = number();
    if (gen < 1) throw ParseError("generator index must be >= 1", offset + pos);
    long e = 1;
    ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      ws();
      bool neg = false;
      if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
      }
      e = number();
      if (neg) e = -e;
    }
    for (long t = 0; t < std::labs(e); ++t) w.push(e > 0 ? static_cast<int>(gen) : -static_cast<int>(gen));
  }
  return w;
}

inline std::vector<FreeWord> parse_images(std::string_view text, int g) {
  std::vector<FreeWord> imgs;
  for (int i = 1; i <= g; ++i) imgs.push_back(FreeWord::generator(i));
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  for (auto [clause, off] : split_top_level(text, ';', 0)) {
    if (clause.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
    const auto arrow = clause.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'xi -> word'", off);
    FreeWord lhs = parse_free_word(clause.substr(0, arrow), off);
    if (lhs.length() != 1 || lhs.letters()[0] < 0) throw ParseError("left side must be a single generator", off);
    const int i = lhs.letters()[0];
    if (i > g) throw ParseError("generator x" + std::to_string(i) + " exceeds g", off);
    if (seen[static_cast<std::size_t>(i - 1)]) throw ParseError("generator x" + std::to_string(i) + " given twice", off);
    seen[static_cast<std::size_t>(i - 1)] = true;
    const std::string_view rhs_text = clause.substr(arrow + 2);
    if (rhs_text.find_first_not_of(" \t\r\n") == std::string_view::npos)
      throw ParseError("empty image; write 1 for the identity", off + clause.size());
    FreeWord rhs = parse_free_word(rhs_text, off + arrow + 2);
    if (rhs.max_generator() > g) throw ParseError("image uses a generator beyond x" + std::to_string(g), off);
    imgs[static_cast<std::size_t>(i - 1)] = std::move(rhs);
  }
  return imgs;
}

}  // namespace detail

inline Endo parse_endo(std::string_view map_text, std::string_view inverse_text, int g) {
  if (g < 2) throw DomainError("rank g must be >= 2");
  return Endo{g, detail::parse_images(map_text, g), detail::parse_images(inverse_text, g)};
}

inline std::string render_endo_images(const std::vector<FreeWord>& imgs) {
  std::string out;
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    if (i) out += " ; ";
    out += "x" + std::to_string(i + 1) + " -> " + imgs[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nielsen-type moves that stay inside Gamma_{X,C}.

namespace nielsen {

inline Endo with_image(int g, int target, FreeWord image, FreeWord inverse_image) {
  Endo e = Endo::identity(g);
  e.images[static_cast<std::size_t>(target - 1)] = std::move(image);
  e.inverse_images[static_cast<std::size_t>(target - 1)] = std::move(inverse_image);
  return e;
}

/// x_i -> x_i x_j (i != j, both < g)
inline Endo right_mult(int g, int i, int j) {
  return with_image(g, i, FreeWord({i, j}), FreeWord({i, -j}));
}

/// x_i -> x_j x_i (i != j, both < g)
inline Endo left_mult(int g, int i, int j) { return with_image(g, i, FreeWord({j, i}), FreeWord({-j, i})); }

/// x_i -> x_i^-1 (i < g)
inline Endo invert(int g, int i) { return with_image(g, i, FreeWord({-i}), FreeWord({-i})); }

/// x_i -> x_g x_i x_g^-1 (i < g)
inline Endo conjugate_by_xg(int g, int i) { return with_image(g, i, FreeWord({g, i, -g}), FreeWord({-g, i, g})); }

/// x_g -> x_g x_i (i < g)
inline Endo xg_right(int g, int i) { return with_image(g, g, FreeWord({g, i}), FreeWord({g, -i})); }

/// x_g -> x_i x_g (i < g)
inline Endo xg_left(int g, int i) { return with_image(g, g, FreeWord({i, g}), FreeWord({-i, g})); }

/// x_i <-> x_j (both < g)
inline Endo swap(int g, int i, int j) {
  Endo e = Endo::identity(g);
  std::swap(e.images[static_cast<std::size_t>(i - 1)], e.images[static_cast<std::size_t>(j - 1)]);
  std::swap(e.inverse_images[static_cast<std::size_t>(i - 1)], e.inverse_images[static_cast<std::size_t>(j - 1)]);
  return e;
}

/// x_i -> x_i x_g^d (i < g)
inline Endo append_xg_power(int g, int d, int i) {
  std::vector<int> fwd{i}, back{i};
  for (int t = 0; t < d; ++t) {
    fwd.push_back(g);
    back.push_back(-g);
  }
  return with_image(g, i, FreeWord(fwd), FreeWord(back));
}

/// Every x -> x_g x x_g^-1: the deck transformation, eta = zeta Id.
inline Endo deck(int g) {
  Endo e = Endo::identity(g);
  for (int i = 1; i < g; ++i) {
    e.images[static_cast<std::size_t>(i - 1)] = FreeWord({g, i, -g});
    e.inverse_images[static_cast<std::size_t>(i - 1)] = FreeWord({-g, i, g});
  }
  return e;
}

}  // namespace nielsen

}  // namespace prym
