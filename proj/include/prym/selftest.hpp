#pragma once

// Randomised and exhaustive sweeps over the catalogue, decompositions and the
// fox-cover oracle. Used by `prym selftest` and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prym/cyclotomic.hpp"
#include "prym/decompose.hpp"
#include "prym/foxcover.hpp"
#include "prym/generators.hpp"
#include "prym/predicates.hpp"
#include "prym/ringlinalg.hpp"
#include "prym/wordlang.hpp"

namespace prym {

// ---------------------------------------------------------------------------
// Random instances

namespace sample {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline CycInt cyc(Rng& rng, int d, long lo, long hi) {
  std::vector<Integer> c(static_cast<std::size_t>(euler_phi(d)));
  for (auto& x : c) x = uniform(rng, lo, hi);
  return CycInt::from_coeffs(d, c);
}

/// c + x + conj(x), or an integer combination of 1 and zeta^k + zeta^-k.
inline CycInt real(Rng& rng, int d, long lo, long hi) {
  if (rng() % 2) {
    const CycInt x = cyc(rng, d, lo, hi);
    return CycInt::from_integer(d, uniform(rng, lo, hi)) + x + x.conj();
  }
  CycInt r = CycInt::from_integer(d, uniform(rng, lo, hi));
  for (long k = 1; k < d; ++k) r += uniform(rng, lo, hi) * (zeta_pow(d, k) + zeta_pow(d, -k));
  return r;
}

inline LaurentPoly real_laurent(Rng& rng, int d, long lo, long hi) {
  LaurentPoly p = LaurentPoly::constant(uniform(rng, lo, hi));
  for (long k = 1; k <= d / 2; ++k) {
    const long c = uniform(rng, lo, hi);
    if (c != 0) p = p + LaurentPoly::monomial(c, k) + LaurentPoly::monomial(c, -k);
  }
  return p;
}

inline LaurentPoly laurent(Rng& rng, int d, long lo, long hi) {
  LaurentPoly p;
  for (long k = 0; k < d; ++k) {
    const long c = uniform(rng, lo, hi);
    if (c != 0) p = p + LaurentPoly::monomial(c, k);
  }
  return p;
}

/// B = B*: real diagonal, b_ji = conj(b_ij).
inline RingMatrix self_adjoint(Rng& rng, int d, std::size_t n, long lo, long hi) {
  RingMatrix b(d, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    CycInt x = cyc(rng, d, lo, hi);
    b(i, i) = x + x.conj();
    if (rng() % 2) b(i, i) = real(rng, d, lo, hi);
    for (std::size_t j = i + 1; j < n; ++j) {
      b(i, j) = cyc(rng, d, lo, hi);
      b(j, i) = b(i, j).conj();
    }
  }
  return b;
}

/// One generator of Lambda for (d, g): elementary moves with positive indices,
/// T, zeta scalars, conjugators A_H and A_{H'} (j > 0), their T-conjugates and
/// the twist-group generators.
inline GenSpec lambda_generator(Rng& rng, int d, int g) {
  const int n = g - 1;
  auto idx = [&] { return static_cast<int>(uniform(rng, 1, n)); };
  auto pair = [&]() -> std::pair<int, int> {
    int i = idx(), j = idx();
    while (n > 1 && j == i) j = idx();
    return {i, j};
  };
  for (;;) {
    switch (uniform(rng, 0, 9)) {
      case 0: return gen::Ti{idx(), real_laurent(rng, d, -2, 2)};
      case 1:
        if (n > 1) {
          auto [i, j] = pair();
          return gen::Tij{i, j, laurent(rng, d, -1, 1)};
        }
        break;
      case 2: return gen::BigT{};
      case 3: return gen::Zeta{uniform(rng, 0, d - 1)};
      case 4: return gen::TH{idx()};
      case 5:
        if (n > 1) {
          auto [i, j] = pair();
          return rng() % 2 ? GenSpec{gen::AHPrime{i, j}} : GenSpec{gen::THPrime{i, j}};
        }
        break;
      case 6: return gen::AH{idx()};
      case 7: return gen::G1{idx()};
      case 8: return gen::G2{idx(), uniform(rng, 1, d - 1)};
      case 9:
        if (n > 1) {
          auto [i, j] = pair();
          return gen::G3{i, j, uniform(rng, 0, d - 1)};
        }
        break;
    }
  }
}

inline Word lambda_word(Rng& rng, int d, int g, std::size_t max_len) {
  Word w;
  const std::size_t len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t t = 0; t < len; ++t) {
    long e = uniform(rng, -2, 2);
    if (e == 0) e = 1;
    w *= Word::single(lambda_generator(rng, d, g), e);
  }
  return w;
}

/// One of the Nielsen-type moves preserving Gamma_{X,C}.
inline Endo nielsen_move(Rng& rng, int d, int g) {
  const int n = g - 1;
  const int i = static_cast<int>(uniform(rng, 1, n));
  int j = static_cast<int>(uniform(rng, 1, n));
  for (;;) {
    switch (uniform(rng, 0, 7)) {
      case 0:
        if (j != i) return nielsen::right_mult(g, i, j);
        break;
      case 1:
        if (j != i) return nielsen::left_mult(g, i, j);
        break;
      case 2: return nielsen::invert(g, i);
      case 3: return nielsen::conjugate_by_xg(g, i);
      case 4: return nielsen::xg_right(g, i);
      case 5: return nielsen::xg_left(g, i);
      case 6:
        if (j != i) return nielsen::swap(g, i, j);
        break;
      case 7: return nielsen::append_xg_power(g, d, i);
    }
    j = static_cast<int>(uniform(rng, 1, n));
  }
}

inline Endo gamma_element(Rng& rng, int d, int g, int max_moves) {
  Endo e = Endo::identity(g);
  const long moves = uniform(rng, 0, max_moves);
  for (long t = 0; t < moves; ++t) e = compose(e, nielsen_move(rng, d, g));
  return e;
}

}  // namespace sample

// ---------------------------------------------------------------------------
// Suites

struct SuiteConfig {
  int max_d = 12;
  int max_g = 5;
  std::uint64_t seed = 20240611;
  std::string inject;  // suite name whose first comparison is corrupted
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string message;
};

namespace detail {

// Tracks one suite: counts cases, keeps the first failure message and applies
// the failure injection to the first comparison.
class SuiteRun {
 public:
  SuiteRun(std::string name, const SuiteConfig& cfg)
      : res_{std::move(name), true, 0, {}}, inject_(cfg.inject == res_.name) {}

  template <class T>
  void equal(const T& lhs, const T& rhs, const std::function<std::string()>& what) {
    check(lhs == rhs, what);
  }

  void check(bool ok, const std::function<std::string()>& what) {
    ++res_.cases;
    if (inject_) {
      inject_ = false;
      ok = false;
    }
    if (!ok && res_.passed) {
      res_.passed = false;
      res_.message = what();
    }
  }

  void fail(const std::string& what) {
    ++res_.cases;
    if (res_.passed) {
      res_.passed = false;
      res_.message = what;
    }
  }

  SuiteResult finish() {
    if (inject_) check(true, [] { return std::string("injected failure"); });
    if (res_.cases == 0 && res_.passed) res_.message = "no cases within bounds";
    return res_;
  }

 private:
  SuiteResult res_;
  bool inject_;
};

inline std::string cell(int d, int g) { return "d=" + std::to_string(d) + " g=" + std::to_string(g); }

template <class F>
void guarded(SuiteRun& run, const std::string& where, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    run.fail(where + ": " + e.what());
  }
}

}  // namespace detail

/// T_{i,j}(1 - zeta^k) = T_H^-k T_{H'}^k, d <= 10, all admissible (i, j), k = 1..d-1.
inline SuiteResult suite_identity(const SuiteConfig& cfg) {
  detail::SuiteRun run("identity", cfg);
  for (int d = 2; d <= std::min(cfg.max_d, 10); ++d)
    for (int g = 2; g <= std::min(cfg.max_g, 5); ++g)
      for (int i = 1; i < g; ++i)
        for (int j = -(g - 1); j <= g - 1; ++j) {
          if (j == 0 || std::abs(j) == i) continue;
          detail::guarded(run, detail::cell(d, g), [&] {
            const BlockMat th = TH(g, d, i), thp = THPrime(g, d, i, j);
            for (long k = 1; k < d; ++k) {
              const BlockMat lhs = elem_Tij(g, d, i, j, CycInt::one(d) - zeta_pow(d, k));
              const BlockMat rhs = power(th, -k) * power(thp, k);
              run.equal(lhs, rhs, [&] {
                return detail::cell(d, g) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                       " k=" + std::to_string(k);
              });
            }
          });
        }
  return run.finish();
}

/// [T_{i,-j}(zeta^k), T_{i,j}(1)] = T_i(+-(zeta^k + zeta^-k)), sign + for j > 0.
/// The commutator is a b a^-1 b^-1.
inline SuiteResult suite_commutator(const SuiteConfig& cfg) {
  detail::SuiteRun run("commutator", cfg);
  for (int d = 2; d <= std::min(cfg.max_d, 10); ++d)
    for (int g = 2; g <= std::min(cfg.max_g, 5); ++g)
      for (int i = 1; i < g; ++i)
        for (int j = -(g - 1); j <= g - 1; ++j) {
          if (j == 0 || std::abs(j) == i) continue;
          detail::guarded(run, detail::cell(d, g), [&] {
            const BlockMat b = elem_Tij(g, d, i, j, CycInt::one(d));
            const BlockMat b_inv = inverse(b);
            for (long k = 1; k < d; ++k) {
              const BlockMat a = elem_Tij(g, d, i, -j, zeta_pow(d, k));
              const CycInt s = zeta_pow(d, k) + zeta_pow(d, -k);
              run.equal(a * b * inverse(a) * b_inv, elem_Ti(g, d, i, j > 0 ? s : -s), [&] {
                return detail::cell(d, g) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                       " k=" + std::to_string(k);
              });
            }
          });
        }
  return run.finish();
}

/// Every catalogue generator (for a given d, g) with a fixed set of scalars.
inline std::vector<GenSpec> catalogue(int d, int g) {
  std::vector<GenSpec> out;
  const int n = g - 1;
  const std::vector<LaurentPoly> reals = {
      LaurentPoly::constant(1), LaurentPoly::constant(-3),
      LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1),
      LaurentPoly::constant(2) - LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1)};
  const std::vector<LaurentPoly> scalars = {LaurentPoly::constant(1), LaurentPoly::monomial(1, 1),
                                            LaurentPoly::constant(1) - LaurentPoly::monomial(1, 2),
                                            LaurentPoly::constant(2) + LaurentPoly::monomial(-1, 3)};
  std::vector<int> signed_idx;
  for (int i = 1; i <= n; ++i) signed_idx.insert(signed_idx.end(), {i, -i});

  out.push_back(gen::BigT{});
  for (long k = 0; k < d; ++k) out.push_back(gen::Zeta{k});
  for (int i : signed_idx)
    for (const auto& r : reals) out.push_back(gen::Ti{i, r});
  for (int i : signed_idx)
    for (int j : signed_idx)
      if (std::abs(i) != std::abs(j))
        for (const auto& r : scalars) out.push_back(gen::Tij{i, j, r});
  for (int i = 1; i <= n; ++i) {
    out.push_back(gen::AH{i});
    out.push_back(gen::TH{i});
    out.push_back(gen::TwistE{i});
    out.push_back(gen::G1{i});
    for (long k = 0; k < d; ++k) {
      out.push_back(gen::GammaIK{i, k});
      out.push_back(gen::G2{i, k});
    }
    for (int j : signed_idx)
      if (std::abs(j) != i) {
        out.push_back(gen::AHPrime{i, j});
        out.push_back(gen::THPrime{i, j});
      }
    for (int j = 1; j <= n; ++j)
      if (j != i)
        for (long k = 0; k < d; ++k) {
          out.push_back(gen::GammaIJK{i, j, k});
          out.push_back(gen::G3{i, j, k});
        }
  }
  return out;
}

/// M* Omega M = Omega for the whole catalogue; Lambda for positive-index
/// elementary moves; Lambda and Delta for G1, G2, G3.
inline SuiteResult suite_soundness(const SuiteConfig& cfg) {
  detail::SuiteRun run("soundness", cfg);
  for (int d = 2; d <= std::min(cfg.max_d, 10); ++d)
    for (int g = 2; g <= std::min(cfg.max_g, 5); ++g)
      for (const GenSpec& spec : catalogue(d, g)) {
        const std::string name = detail::render_gen(spec);
        detail::guarded(run, detail::cell(d, g) + " " + name, [&] {
          const BlockMat m = build_generator(spec, d, g);
          run.check(preserves_form(m), [&] { return detail::cell(d, g) + " " + name + " does not preserve the form"; });
          bool want_lambda = false, want_delta = false;
          if (auto* t = std::get_if<gen::Ti>(&spec)) want_lambda = t->i > 0;
          if (auto* t = std::get_if<gen::Tij>(&spec)) want_lambda = t->i > 0 && t->j > 0;
          if (std::holds_alternative<gen::G1>(spec) || std::holds_alternative<gen::G2>(spec) ||
              std::holds_alternative<gen::G3>(spec))
            want_lambda = want_delta = true;
          if (want_lambda) {
            auto v = is_member(m, GroupTag::Lambda);
            run.check(v.member, [&] { return detail::cell(d, g) + " " + name + " not in Lambda: " + v.reason; });
          }
          if (want_delta) {
            auto v = is_member(m, GroupTag::Delta);
            run.check(v.member, [&] { return detail::cell(d, g) + " " + name + " not in Delta: " + v.reason; });
          }
        });
      }
  return run.finish();
}

inline std::vector<int> bounded(const std::vector<int>& values, int max) {
  std::vector<int> out;
  std::copy_if(values.begin(), values.end(), std::back_inserter(out), [&](int v) { return v <= max; });
  return out;
}

/// evaluate(decompose_delta(B)) = [[Id, B], [0, Id]], 100 random B per cell.
inline SuiteResult suite_delta_roundtrip(const SuiteConfig& cfg, int samples = 100) {
  detail::SuiteRun run("delta-roundtrip", cfg);
  sample::Rng rng(cfg.seed ^ 0x44656c7461ULL);
  for (int d : bounded({2, 3, 4, 5, 12}, cfg.max_d))
    for (int g : bounded({2, 3, 5}, cfg.max_g))
      for (int t = 0; t < samples; ++t) {
        const RingMatrix b = sample::self_adjoint(rng, d, static_cast<std::size_t>(g - 1), -5, 5);
        detail::guarded(run, detail::cell(d, g) + " B=" + b.to_string(), [&] {
          const Word w = decompose_delta(b, d, g);
          run.equal(evaluate(w, d, g), BlockMat::unipotent(b),
                    [&] { return detail::cell(d, g) + " B=" + b.to_string() + " word=" + render(w); });
        });
      }
  return run.finish();
}

/// M = evaluate(wD) [[Id, F0], [0, Id]]; reduce_lambda(M, wD) evaluates to M
/// and recovers F = F0 = F*.
inline SuiteResult suite_lambda_roundtrip(const SuiteConfig& cfg, int samples = 100) {
  detail::SuiteRun run("lambda-roundtrip", cfg);
  sample::Rng rng(cfg.seed ^ 0x4c616d626461ULL);
  const int dmax = std::min(cfg.max_d, 12), gmax = std::min(cfg.max_g, 5);
  if (dmax < 2 || gmax < 2) return run.finish();
  for (int t = 0; t < samples; ++t) {
    const int d = static_cast<int>(sample::uniform(rng, 2, dmax));
    const int g = static_cast<int>(sample::uniform(rng, 2, gmax));
    const Word wd = sample::lambda_word(rng, d, g, 6);
    const RingMatrix f0 = sample::self_adjoint(rng, d, static_cast<std::size_t>(g - 1), -3, 3);
    detail::guarded(run, detail::cell(d, g) + " wD=" + render(wd), [&] {
      const BlockMat m = evaluate(wd, d, g) * BlockMat::unipotent(f0);
      const LambdaReduction red = reduce_lambda_detailed(m, wd);
      auto where = [&] { return detail::cell(d, g) + " wD=" + render(wd) + " F0=" + f0.to_string(); };
      run.equal(evaluate(red.word, d, g), m, where);
      run.check(is_self_adjoint(red.residual), where);
      run.equal(red.residual, f0, where);
    });
  }
  return run.finish();
}

/// eta_chain = eta_fox, multiplicativity and det = +-zeta^k on random
/// composites of at most 8 Nielsen moves.
inline SuiteResult suite_eta_oracle(const SuiteConfig& cfg, int samples = 200, int pairs = 50) {
  detail::SuiteRun run("eta-oracle", cfg);
  sample::Rng rng(cfg.seed ^ 0x457461ULL);
  const int dmax = std::min(cfg.max_d, 8), gmax = std::min(cfg.max_g, 5);
  if (dmax < 2 || gmax < 2) return run.finish();
  auto draw = [&] {
    const int d = static_cast<int>(sample::uniform(rng, 2, dmax));
    const int g = static_cast<int>(sample::uniform(rng, 2, gmax));
    return std::tuple{d, g, sample::gamma_element(rng, d, g, 8)};
  };
  for (int t = 0; t < samples; ++t) {
    auto [d, g, phi] = draw();
    const std::string where = detail::cell(d, g) + " phi: " + render_endo_images(phi.images);
    detail::guarded(run, where, [&] {
      const RingMatrix chain = eta_chain(phi, d, g);
      run.equal(chain, eta_fox(phi, d, g), [&] { return where + " chain != fox"; });
      run.check(unit_exponent(det(chain)).has_value(), [&] { return where + " det not +-zeta^k"; });
    });
  }
  for (int t = 0; t < pairs; ++t) {
    auto [d, g, phi] = draw();
    const Endo psi = sample::gamma_element(rng, d, g, 8);
    const std::string where = detail::cell(d, g) + " phi: " + render_endo_images(phi.images) +
                              " psi: " + render_endo_images(psi.images);
    detail::guarded(run, where, [&] {
      run.equal(eta_chain(compose(phi, psi), d, g), eta_chain(phi, d, g) * eta_chain(psi, d, g),
                [&] { return where + " not multiplicative"; });
    });
  }
  return run.finish();
}

/// x_i -> x_g x_i x_g^-1 for all i < g gives zeta Id.
inline SuiteResult suite_deck(const SuiteConfig& cfg) {
  detail::SuiteRun run("deck-scalar", cfg);
  for (int d = 2; d <= std::min(cfg.max_d, 8); ++d)
    for (int g = 2; g <= std::min(cfg.max_g, 5); ++g)
      detail::guarded(run, detail::cell(d, g), [&] {
        const Endo c = nielsen::deck(g);
        const RingMatrix want = RingMatrix::scalar(zeta_pow(d, 1), static_cast<std::size_t>(g - 1));
        run.equal(eta_chain(c, d, g), want, [&] { return detail::cell(d, g) + " chain"; });
        run.equal(eta_fox(c, d, g), want, [&] { return detail::cell(d, g) + " fox"; });
      });
  return run.finish();
}

/// The genus-2, d = 5 word with twists about gamma and delta, whose product is
/// diag(sqrt5 - 2, sqrt5 + 2) up to sign.
inline const char* remark_word() {
  return "Transvection(1-z, 0)^2 * Transvection(1, 0)^-2 * Transvection(0, 1) * Transvection(1-z, 0)^2 * "
         "Transvection(1, 0)^-6 * Transvection(0, 1-z)^2 * Transvection(0, 1)^-3";
}

inline SuiteResult suite_remark(const SuiteConfig& cfg) {
  detail::SuiteRun run("remark-d5", cfg);
  const int d = 5, g = 2;
  detail::guarded(run, "remark", [&] {
    const CycInt one = CycInt::one(d), z = zeta_pow(d, 1), zi = zeta_pow(d, -1);
    const BlockMat t_gamma = build_generator(parse_word("Transvection(1-z, 0)").factors()[0].gen, d, g);
    const BlockMat t_delta = build_generator(parse_word("Transvection(0, 1-z)").factors()[0].gen, d, g);
    RingMatrix want_gamma = RingMatrix::identity(d, 2), want_delta = RingMatrix::identity(d, 2);
    want_gamma(0, 1) = z + zi - 2 * one;
    want_delta(1, 0) = 2 * one - z - zi;
    run.equal(t_gamma.matrix(), want_gamma, [&] { return "T_gamma = " + t_gamma.to_string(); });
    run.equal(t_delta.matrix(), want_delta, [&] { return "T_delta = " + t_delta.to_string(); });

    const BlockMat m = evaluate(parse_word(remark_word()), d, g);
    const auto& a = m.matrix();
    const CycInt trace = a(0, 0) + a(1, 1);
    const CycInt t = 2 * one + 4 * z + 4 * zeta_pow(d, 4);
    run.check(a(0, 1).is_zero() && a(1, 0).is_zero(), [&] { return "not diagonal: " + m.to_string(); });
    run.check(a(0, 0) * a(1, 1) == one, [&] { return "entry product != 1: " + m.to_string(); });
    run.check(trace == t || trace == -t, [&] { return "trace " + trace.to_string() + " != +-(2+4z+4z^4)"; });
    auto usharp = is_member(m, GroupTag::UrUSharp);
    run.check(usharp.member, [&] { return "remark matrix not in urU#: " + usharp.reason; });
    run.check(!is_member(m, GroupTag::Lambda).member, [&] { return "remark matrix unexpectedly in Lambda"; });
  });
  return run.finish();
}

/// 200 random real elements per d solve in {1, zeta^k + zeta^-k}.
inline SuiteResult suite_real_basis(const SuiteConfig& cfg, int samples = 200) {
  detail::SuiteRun run("real-basis", cfg);
  sample::Rng rng(cfg.seed ^ 0x5265616cULL);
  for (int d = 2; d <= std::min(cfg.max_d, 12); ++d)
    for (int t = 0; t < samples; ++t) {
      const CycInt r = sample::real(rng, d, -6, 6);
      detail::guarded(run, "d=" + std::to_string(d) + " r=" + r.to_string(), [&] {
        run.equal(solve_real_basis(r).evaluate(d), r,
                  [&] { return "d=" + std::to_string(d) + " r=" + r.to_string() + " reconstruction differs"; });
      });
    }
  return run.finish();
}

/// zeta^k [[s, r'], [0, s]] with s = +-1 and r' real, as an explicit check.
inline bool genus2_shape(const BlockMat& m) {
  if (m.genus() != 2) return false;
  const auto& a = m.matrix();
  if (!a(1, 0).is_zero()) return false;
  auto u = unit_exponent(a(1, 1));
  if (!u) return false;
  const CycInt s = zeta_pow(m.modulus(), -u->k);
  const CycInt sign = CycInt::from_integer(m.modulus(), u->sign);
  return s * a(1, 1) == sign && s * a(0, 0) == sign && (s * a(0, 1)).is_real();
}

/// 200 random genus-2 catalogue words have the shape above; for odd d the
/// Theta projection (sign, r') is a homomorphism to Z/2 (+) R'.
inline SuiteResult suite_genus2(const SuiteConfig& cfg, int samples = 200, int pairs = 100) {
  detail::SuiteRun run("genus2-shape", cfg);
  sample::Rng rng(cfg.seed ^ 0x47656e7573ULL);
  const int g = 2;
  const int dmax = std::min(cfg.max_d, 12);
  if (dmax < 2 || cfg.max_g < 2) return run.finish();
  for (int t = 0; t < samples; ++t) {
    const int d = static_cast<int>(sample::uniform(rng, 2, dmax));
    const Word w = sample::lambda_word(rng, d, g, 8);
    detail::guarded(run, "d=" + std::to_string(d) + " w=" + render(w), [&] {
      const BlockMat m = evaluate(w, d, g);
      run.check(genus2_shape(m), [&] { return "d=" + std::to_string(d) + " w=" + render(w) + " -> " + m.to_string(); });
      auto v = is_member(m, GroupTag::Genus2Theta);
      run.check(v.member, [&] { return "d=" + std::to_string(d) + " w=" + render(w) + ": " + v.reason; });
    });
  }
  std::vector<int> odd;
  for (int d = 3; d <= dmax; d += 2) odd.push_back(d);
  if (!odd.empty())
    for (int t = 0; t < pairs; ++t) {
      const int d = odd[static_cast<std::size_t>(sample::uniform(rng, 0, static_cast<long>(odd.size()) - 1))];
      const Word u = sample::lambda_word(rng, d, g, 6), v = sample::lambda_word(rng, d, g, 6);
      const std::string where = "d=" + std::to_string(d) + " u=" + render(u) + " v=" + render(v);
      detail::guarded(run, where, [&] {
        const BlockMat mu = evaluate(u, d, g), mv = evaluate(v, d, g);
        const ThetaImage a = genus2_theta_project(mu), b = genus2_theta_project(mv);
        const ThetaImage ab = genus2_theta_project(mu * mv);
        run.equal(ab, ThetaImage{a.sign * b.sign, a.r + b.r}, [&] { return where + " Theta not multiplicative"; });
      });
    }
  return run.finish();
}

using Suite = std::function<SuiteResult(const SuiteConfig&)>;

/// Suites in acceptance order.
inline std::vector<std::pair<std::string, Suite>> all_suites() {
  return {
      {"identity", [](const SuiteConfig& c) { return suite_identity(c); }},
      {"commutator", [](const SuiteConfig& c) { return suite_commutator(c); }},
      {"soundness", [](const SuiteConfig& c) { return suite_soundness(c); }},
      {"delta-roundtrip", [](const SuiteConfig& c) { return suite_delta_roundtrip(c); }},
      {"lambda-roundtrip", [](const SuiteConfig& c) { return suite_lambda_roundtrip(c); }},
      {"eta-oracle", [](const SuiteConfig& c) { return suite_eta_oracle(c); }},
      {"deck-scalar", [](const SuiteConfig& c) { return suite_deck(c); }},
      {"remark-d5", [](const SuiteConfig& c) { return suite_remark(c); }},
      {"real-basis", [](const SuiteConfig& c) { return suite_real_basis(c); }},
      {"genus2-shape", [](const SuiteConfig& c) { return suite_genus2(c); }},
  };
}

inline std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& [name, suite] : all_suites()) out.push_back(suite(cfg));
  return out;
}

}  // namespace prym
