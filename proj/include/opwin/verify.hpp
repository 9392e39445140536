#pragma once

#include <array>
#include <functional>

#include "opwin/cohen.hpp"
#include "opwin/report.hpp"
#include "opwin/rng.hpp"

namespace opwin {

inline const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names = {
      "moyal",        "isometry",  "reconstruction", "trace-lemma", "sandwich",
      "schatten-embed", "window-independence", "cohen", "localization", "amalgam",
      "khinchin",     "young",     "dominance",      "ft-product",  "nuclear"};
  return names;
}

inline bool is_heavy_suite(const std::string& name) {
  return name == "localization" || name == "amalgam";
}

namespace detail {

inline std::string witness(std::size_t trial) { return "trial=" + std::to_string(trial); }

inline const std::array<double, 4>& exponent_grid() {
  static const std::array<double, 4> grid = {1.0, 2.0, 4.0, kInfExp};
  return grid;
}

// The weight family exercised everywhere: v = (1+d)^2 and the moderate set
// {1, (1+d), (1+d)^2, 1/v}.
struct WeightSet {
  Weight v;
  std::vector<std::pair<std::string, Weight>> moderate;
  std::vector<double> cvm;  // moderateness constant per entry

  explicit WeightSet(std::size_t n) : v(weight_polynomial(n, 2.0)) {
    moderate.emplace_back("m=1", Weight(n, 1.0, WeightKind::moderate));
    moderate.emplace_back("m=(1+d)^1", weight_polynomial(n, 1.0));
    moderate.emplace_back("m=(1+d)^2", weight_polynomial(n, 2.0));
    moderate.emplace_back("m=1/v", reciprocal_weight(v));
    for (const auto& [name, m] : moderate) cvm.push_back(moderateness_constant(m, v));
  }
};

inline double l1v_mu(const PhaseField& F, const Weight& v) {
  const std::size_t n = F.group_size();
  double s = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi)
      s += std::abs(F(x, xi)) * v(x, xi) / static_cast<double>(n);
  return s;
}

// (1/N) sum_z tr(pi(z) R pi(z)^* T)
inline cplx twisted_trace_average(const OperatorWindow& R, const OperatorWindow& T) {
  const std::size_t n = R.size();
  cplx total{0.0, 0.0};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < n; ++xi) {
      cplx tr{0.0, 0.0};
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) {
          const long long diff = static_cast<long long>(t) - static_cast<long long>(s);
          const double ang = 2.0 * kPi *
                             static_cast<double>(mod_n(diff * static_cast<long long>(xi), n)) /
                             static_cast<double>(n);
          tr += std::polar(1.0, ang) *
                R.operator()(mod_n(static_cast<long long>(t) - static_cast<long long>(x), n),
                             mod_n(static_cast<long long>(s) - static_cast<long long>(x), n)) *
                T(s, t);
        }
      total += tr;
    }
  return total / static_cast<double>(n);
}

// Conjugate exponent triple for Young: 1/p3 = 1 + 1/p2 - 1/p1 (p1 <= p2).
inline double young_third(double p1, double p2) {
  const double i1 = p1 == kInfExp ? 0.0 : 1.0 / p1;
  const double i2 = p2 == kInfExp ? 0.0 : 1.0 / p2;
  const double i3 = 1.0 + i2 - i1;
  return i3 <= 0.0 ? kInfExp : 1.0 / i3;
}

}  // namespace detail

// Exact Khinchin expectation by full enumeration of the 2^K sign patterns.
struct KhinchinResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

inline KhinchinResult khinchin_exact(const std::vector<cplx>& a, double p) {
  const std::size_t k = a.size();
  if (k > 16) throw resource_error("khinchin_exact: sequence length must be <= 16");
  if (k == 0) throw domain_error("khinchin_exact: empty sequence");
  KhinchinResult out;
  const std::size_t patterns = std::size_t{1} << k;
  double acc = 0.0;
  for (std::size_t bits = 0; bits < patterns; ++bits) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < k; ++j)
      s += ((bits >> j) & 1u) ? a[j] : -a[j];
    acc += std::pow(std::abs(s), p);
  }
  out.lhs = acc / static_cast<double>(patterns);
  double sq = 0.0;
  for (const auto& v : a) sq += std::norm(v);
  out.rhs = std::pow(sq, p / 2.0);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

// ---- suites ----

namespace suites {

inline SuiteReport moyal(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"moyal", n, trials, seed, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 1, t);
    const Signal f1 = random_signal(rng, n), f2 = random_signal(rng, n);
    const Signal p1 = random_signal(rng, n), p2 = random_signal(rng, n);
    const PhaseField V1 = stft(f1, p1), V2 = stft(f2, p2);
    const cplx lhs = inner_mu(V1, V2);
    const cplx rhs = inner(f1, f2) * std::conj(inner(p1, p2));
    const double scale = norm2(f1) * norm2(f2) * norm2(p1) * norm2(p2) + 1e-300;
    rep.record("moyal-identity", std::abs(lhs - rhs) / scale, 1e-11, detail::witness(t));

    const PhaseField D = stft_direct(f1, p1);
    double worst = 0.0;
    for (std::size_t i = 0; i < D.values().size(); ++i)
      worst = std::max(worst, std::abs(D.values()[i] - V1.values()[i]));
    rep.record("fast-vs-direct", worst / (norm2(f1) * norm2(p1) + 1e-300), 1e-12,
               detail::witness(t));

    // covariance: |V(f shifted)| is a translate of |V f|
    const PhasePoint z0{rng.index(n), rng.index(n)};
    const PhaseField Vs = stft(tf_shift(f1, z0), p1);
    double cov = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < n; ++xi)
        cov = std::max(cov, std::abs(std::abs(Vs(x, xi)) -
                                     std::abs(V1.at_mod(static_cast<long long>(x) - static_cast<long long>(z0.x),
                                                        static_cast<long long>(xi) - static_cast<long long>(z0.xi)))));
    rep.record("shift-covariance", cov / (norm2(f1) * norm2(p1) + 1e-300), 1e-12,
               detail::witness(t));

    // inversion: <gamma, g>^{-1} V_g^* (a V_g f) recovers f
    const Signal gamma = random_signal(rng, n);
    const cplx pairing = inner(gamma, p1);
    if (std::abs(pairing) > 1e-3) {
      const Signal rec = stft_adjoint(stft(f1, p1), gamma);
      double err = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        err = std::max(err, std::abs(rec[k] / pairing - f1[k]));
      rep.record("inversion", err / (norm2(f1) + 1e-300), 1e-11, detail::witness(t));
    }
  }
  return rep;
}

inline SuiteReport isometry(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"isometry", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const Weight one(n, 1.0, WeightKind::moderate);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 2, t);
    const OperatorWindow S = generate_operator(rng, n, t);
    const Signal f = random_signal(rng, n);
    const double hs = S.frobenius();
    const double scale = hs * norm2(f) + 1e-300;
    const double lhs = mixed_norm_vec(op_stft(S, f), MixedNormParams{2.0, 2.0, one});
    rep.record("vsf-isometry", std::abs(lhs - hs * norm2(f)) / scale, 1e-11,
               detail::witness(t));
    const double g0norm = mixed_norm_vec(op_stft(S, g0), MixedNormParams{2.0, 2.0, one});
    rep.record("hs-via-g0", std::abs(g0norm - hs) / (hs + 1e-300), 1e-11, detail::witness(t));
  }
  return rep;
}

inline SuiteReport reconstruction(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"reconstruction", n, trials, seed, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 3, t);
    const OperatorWindow S = generate_operator(rng, n, t);
    const OperatorWindow T = generate_operator(rng, n, t + 1);
    const Signal f = random_signal(rng, n);
    const Signal h = op_stft_adjoint(T, op_stft(S, f));
    const cplx c = hs_inner(S, T);  // tr(T^* S)
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(h[k] - c * f[k]));
    const double scale = norm2(f) * S.frobenius() * T.frobenius() + 1e-300;
    rep.record("reconstruction", err / scale, 1e-10, detail::witness(t));
  }
  return rep;
}

inline SuiteReport trace_lemma(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"trace-lemma", n, trials, seed, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 4, t);
    const OperatorWindow R = generate_operator(rng, n, t);
    const OperatorWindow T = generate_operator(rng, n, t + 2);
    const cplx lhs = detail::twisted_trace_average(R, T);
    const cplx rhs = trace(R) * trace(T);
    const double scale = R.frobenius() * T.frobenius() * static_cast<double>(n) + 1e-300;
    rep.record("trace-lemma", std::abs(lhs - rhs) / scale, 1e-10, detail::witness(t));

    // resolution of identity: (1/N) sum_z pi(z) R pi(z)^* = tr(R) I
    OperatorWindow acc(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const long long diff = static_cast<long long>(a) - static_cast<long long>(b);
            const double ang = 2.0 * kPi *
                               static_cast<double>(mod_n(diff * static_cast<long long>(xi), n)) /
                               static_cast<double>(n);
            acc(a, b) += std::polar(1.0, ang) *
                         R(mod_n(static_cast<long long>(a) - static_cast<long long>(x), n),
                           mod_n(static_cast<long long>(b) - static_cast<long long>(x), n)) /
                         static_cast<double>(n);
          }
    const OperatorWindow expect = OperatorWindow::identity(n).scaled(trace(R));
    rep.record("resolution-of-identity", (acc - expect).frobenius() /
                   (R.frobenius() * static_cast<double>(n) + 1e-300),
               1e-11, detail::witness(t));
  }
  return rep;
}

inline SuiteReport sandwich(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"sandwich", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const detail::WeightSet ws(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 5, t);
    const OperatorWindow S = generate_operator(rng, n, t);
    const Signal f = random_signal(rng, n);
    const double hs2 = S.frobenius() * S.frobenius();
    const double b1v = b_norm(S, 1.0, 1.0, ws.v, g0);
    const VecPhaseField VSf = op_stft(S, f);
    const PhaseField mid_field = pointwise_norms(VSf);
    const PhaseField Vg0f = stft(f, g0);
    PhaseField absV(n);
    for (std::size_t i = 0; i < absV.values().size(); ++i)
      absV.values()[i] = std::abs(Vg0f.values()[i]);

    for (std::size_t mi = 0; mi < ws.moderate.size(); ++mi) {
      const Weight& m = ws.moderate[mi].second;
      const double cvm = ws.cvm[mi];
      for (double p : detail::exponent_grid())
        for (double q : detail::exponent_grid()) {
          const MixedNormParams params{p, q, m};
          const double mid = mixed_norm(mid_field, params);
          const double ref = mixed_norm(absV, params);
          const double upper = cvm * b1v * ref;
          const double lower = hs2 / (cvm * b1v) * ref;
          const double scale = std::max({mid, upper, 1e-300});
          const std::string tag = ws.moderate[mi].first;
          rep.record("upper-" + tag, (mid - upper) / scale, 1e-9,
                     detail::witness(t) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
          rep.record("lower-" + tag, (lower - mid) / scale, 1e-9,
                     detail::witness(t) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    }

    // eq-3: || V_S f(z) ||^2 = sum_n |V_{S* e_n} f(z)|^2 pointwise
    const OperatorWindow Sadj = S.adjoint();
    PhaseField basis_sum(n);
    for (std::size_t k = 0; k < n; ++k) {
      Signal e(n);
      e[k] = cplx{1.0, 0.0};
      const PhaseField Vk = stft(f, Sadj.apply(e));
      for (std::size_t i = 0; i < basis_sum.values().size(); ++i)
        basis_sum.values()[i] += std::norm(Vk.values()[i]);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < basis_sum.values().size(); ++i)
      worst = std::max(worst, std::abs(std::sqrt(std::real(basis_sum.values()[i])) -
                                       std::real(mid_field.values()[i])));
    rep.record("basis-expansion", worst / (S.frobenius() * norm2(f) + 1e-300), 1e-11,
               detail::witness(t));
  }
  return rep;
}

inline SuiteReport schatten_embed(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"schatten-embed", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const Weight one(n, 1.0, WeightKind::moderate);
  const detail::WeightSet ws(n);
  const PhaseField Vgg = stft(g0, g0);
  PhaseField Phi(n);
  for (std::size_t i = 0; i < Phi.values().size(); ++i)
    Phi.values()[i] = std::abs(Vgg.values()[i]);
  double ratio_hi = 0.0, ratio_lo = kInfExp;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 6, t);
    const OperatorWindow S = generate_operator(rng, n, t);
    const double hs = S.frobenius();
    const double b2 = b_norm(S, 2.0, 2.0, one, g0);
    rep.record("b2-equals-hs", std::abs(b2 - hs) / (hs + 1e-300), 1e-10, detail::witness(t));
    for (double p : {1.0, 1.5, 2.0}) {
      const double sp = schatten_norm(S, p);
      const double bp = b_norm(S, p, p, one, g0);
      rep.record("sp-le-bp-p=" + std::to_string(p), (sp - bp) / (sp + 1e-300), 1e-9,
                 detail::witness(t));
    }
    for (double p : {3.0, 4.0, kInfExp}) {
      const double sp = schatten_norm(S, p);
      const double bp = b_norm(S, p, p, one, g0);
      rep.record(p == kInfExp ? "bp-le-sp-p=inf" : "bp-le-sp-p=" + std::to_string(p),
                 (bp - sp) / (sp + 1e-300), 1e-9, detail::witness(t));
    }
    // embedding chain: p2 >= p1, q2 >= q1, same weight; the explicit factor is
    // C_v^m ||Phi||_{L^{p3,q3}_v} via c <= c * Phi and Young
    for (std::size_t mi = 0; mi < 2; ++mi) {
      const Weight& m = ws.moderate[mi].second;
      const double cvm = ws.cvm[mi];
      const PhaseField c_field = op_window_field(S, g0);
      const std::array<std::pair<double, double>, 3> pairs = {
          {{1.0, 2.0}, {2.0, 4.0}, {1.0, kInfExp}}};
      for (const auto& [p1, p2] : pairs)
        for (const auto& [q1, q2] : pairs) {
          const double p3 = detail::young_third(p1, p2), q3 = detail::young_third(q1, q2);
          const double K = cvm * mixed_norm(Phi, MixedNormParams{p3, q3, ws.v});
          const double lhs = mixed_norm(c_field, MixedNormParams{p2, q2, m});
          const double rhs = K * mixed_norm(c_field, MixedNormParams{p1, q1, m});
          rep.record("embedding-chain-" + ws.moderate[mi].first,
                     (lhs - rhs) / std::max(rhs, 1e-300), 1e-9, detail::witness(t));
        }
    }

    // strictness witnesses on rank-one instances, recorded only
    const OperatorWindow R1 = random_rank_one(rng, n);
    const double r_hi = b_norm(R1, 4.0, 4.0, one, g0) / schatten_norm(R1, 4.0);
    const double r_lo = b_norm(R1, 1.0, 1.0, one, g0) / schatten_norm(R1, 1.0);
    ratio_hi = std::max(ratio_hi, r_lo);
    ratio_lo = std::min(ratio_lo, r_hi);
  }
  rep.constants["rank-one-b1-over-s1-max"] = ratio_hi;
  rep.constants["rank-one-b4-over-s4-min"] = ratio_lo;
  return rep;
}

inline SuiteReport window_independence(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"window-independence", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const detail::WeightSet ws(n);

  // a delta-mollified bump, narrower than g0
  Signal bump(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double d = torus_dist(t, n);
    bump[t] = cplx{std::exp(-2.0 * kPi * d * d / static_cast<double>(n)), 0.0};
  }
  {
    const double c = norm2(bump);
    for (auto& v : bump.values()) v /= c;
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 7, t);
    const OperatorWindow T = generate_operator(rng, n, t);
    const std::vector<std::pair<std::string, Signal>> windows = {
        {"bump", bump}, {"random", random_unit_signal(rng, n)}};
    for (const auto& [wname, phi] : windows) {
      const double factor_up = detail::l1v_mu(stft(phi, g0), ws.v);      // ||V_{g0} phi||_{L^1_v}
      const double factor_down = detail::l1v_mu(stft(g0, phi), ws.v);    // ||V_phi g0||_{L^1_v}
      const double phi2 = norm2(phi) * norm2(phi);
      for (std::size_t mi = 0; mi < 2; ++mi) {
        const Weight& m = ws.moderate[mi].second;
        const double cvm = ws.cvm[mi];
        for (double p : detail::exponent_grid())
          for (double q : detail::exponent_grid()) {
            const double bg = b_norm(T, p, q, m, g0);
            const double bp = b_norm(T, p, q, m, phi);
            const double up = cvm * bg * factor_up;
            const double down = cvm * bp * factor_down / phi2;
            const double scale = std::max({bg, bp, 1e-300});
            rep.record("phi-le-g0-" + wname, (bp - up) / scale, 1e-9, detail::witness(t));
            rep.record("g0-le-phi-" + wname, (bg - down) / scale, 1e-9, detail::witness(t));
          }
      }
    }
  }
  return rep;
}

inline SuiteReport cohen_suite(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"cohen", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const detail::WeightSet ws(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 8, t);
    const OperatorWindow T = random_hermitian_psd(rng, n);
    const Signal f = random_signal(rng, n);
    const double scale = T.frobenius() * norm2(f) * norm2(f) + 1e-300;

    const PhaseField Q = cohen(T, f);
    double neg = 0.0, imag = 0.0;
    for (const auto& q : Q.values()) {
      neg = std::max(neg, -q.real());
      imag = std::max(imag, std::abs(q.imag()));
    }
    rep.record("positivity", neg / scale, 1e-11, detail::witness(t));
    rep.record("real-valued", imag / scale, 1e-11, detail::witness(t));

    const OperatorWindow R = psd_sqrt(T);
    const PhaseField norms = pointwise_norms(op_stft(R, f));
    double worst = 0.0;
    for (std::size_t i = 0; i < Q.values().size(); ++i) {
      const double lhs = std::sqrt(std::max(0.0, Q.values()[i].real()));
      worst = std::max(worst, std::abs(lhs - norms.values()[i].real()));
    }
    rep.record("sqrtQ-equals-opstft", worst / (std::sqrt(scale) + 1e-300), 1e-9,
               detail::witness(t));

    // tr(T) = || sqrt(Q_T g0) ||_{L^2(mu)}^2
    const PhaseField Qg0 = cohen(T, g0);
    double mass = 0.0;
    for (const auto& q : Qg0.values()) mass += std::max(0.0, q.real());
    mass /= static_cast<double>(n);
    const double tr = std::real(trace(T));
    rep.record("trace-identity", std::abs(mass - tr) / (tr + 1e-300), 1e-9,
               detail::witness(t));

    // thm-Mc sandwich with explicit constants
    PhaseField sqrtQg0(n), sqrtQf(n);
    for (std::size_t i = 0; i < Qg0.values().size(); ++i)
      sqrtQg0.values()[i] = std::sqrt(std::max(0.0, Qg0.values()[i].real()));
    for (std::size_t i = 0; i < Q.values().size(); ++i)
      sqrtQf.values()[i] = std::sqrt(std::max(0.0, Q.values()[i].real()));
    const double G1 = detail::l1v_mu(sqrtQg0, ws.v);
    const PhaseField Vg0f = stft(f, g0);
    PhaseField absV(n);
    for (std::size_t i = 0; i < absV.values().size(); ++i)
      absV.values()[i] = std::abs(Vg0f.values()[i]);
    for (std::size_t mi = 0; mi < ws.moderate.size(); ++mi) {
      const Weight& m = ws.moderate[mi].second;
      const double cvm = ws.cvm[mi];
      for (double p : detail::exponent_grid())
        for (double q : detail::exponent_grid()) {
          const MixedNormParams params{p, q, m};
          const double mid = mixed_norm(sqrtQf, params);
          const double ref = mixed_norm(absV, params);
          const double upper = cvm * G1 * ref;
          const double lower = tr / (cvm * G1) * ref;
          const double s = std::max({mid, upper, 1e-300});
          rep.record("mc-upper-" + ws.moderate[mi].first, (mid - upper) / s, 1e-8,
                     detail::witness(t));
          rep.record("mc-lower-" + ws.moderate[mi].first, (lower - mid) / s, 1e-8,
                     detail::witness(t));
        }
    }

    // linearity of T -> Q_T for real coefficients
    const OperatorWindow T2 = random_hermitian_psd(rng, n);
    const double al = rng.uniform01() + 0.5, be = rng.uniform01() + 0.5;
    const PhaseField Qc = cohen(T.scaled(cplx{al, 0.0}) + T2.scaled(cplx{be, 0.0}), f);
    const PhaseField Q2 = cohen(T2, f);
    double lin = 0.0;
    for (std::size_t i = 0; i < Qc.values().size(); ++i)
      lin = std::max(lin, std::abs(Qc.values()[i] - al * Q.values()[i] - be * Q2.values()[i]));
    rep.record("linearity", lin / scale, 1e-11, detail::witness(t));
  }
  return rep;
}

inline SuiteReport localization_suite(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"localization", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const detail::WeightSet ws(n);
  double bp_ratio_1 = 0.0, bp_ratio_2 = 0.0;
  const Weight one(n, 1.0, WeightKind::moderate);

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 9, t);
    PhaseField a = (t % 3 == 0)   ? sparse_nonneg_field(rng, n)
                   : (t % 3 == 1) ? random_nonneg_field(rng, n)
                                  : PhaseField(n);
    if (t % 3 == 2)
      for (auto& v : a.values()) v = cplx{0.5 + rng.uniform01() * 0.0, 0.0};  // constant

    // weak form with general windows
    const Signal phi1 = random_unit_signal(rng, n), phi2 = random_unit_signal(rng, n);
    const PhaseField ac = random_field(rng, n);  // complex symbol allowed here
    const OperatorWindow Ac = localization(ac, phi1, phi2);
    const Signal f = random_signal(rng, n), g = random_signal(rng, n);
    const PhaseField V1 = stft(f, phi1), V2 = stft(g, phi2);
    cplx weak{0.0, 0.0};
    for (std::size_t i = 0; i < ac.values().size(); ++i)
      weak += ac.values()[i] * V1.values()[i] * std::conj(V2.values()[i]);
    weak /= static_cast<double>(n);
    const double wf_scale = l2_mu(ac) * norm2(f) * norm2(g) * static_cast<double>(n) + 1e-300;
    rep.record("weak-form", std::abs(inner(Ac.apply(f), g) - weak) / wf_scale, 1e-11,
               detail::witness(t));

    // a == 1 pins the conjugation convention: A_1 = <phi2, phi1> I
    PhaseField ones(n);
    for (auto& v : ones.values()) v = cplx{1.0, 0.0};
    const OperatorWindow A1 = localization(ones, phi1, phi2);
    const OperatorWindow expect = OperatorWindow::identity(n).scaled(inner(phi2, phi1));
    rep.record("constant-symbol", (A1 - expect).frobenius(), 1e-11, detail::witness(t));

    // atom symbol gives the shifted rank-one operator
    const PhasePoint z0{rng.index(n), rng.index(n)};
    PhaseField atom(n);
    atom(z0.x, z0.xi) = cplx{static_cast<double>(n), 0.0};
    const OperatorWindow Aat = localization(atom, phi1, phi2);
    const OperatorWindow Rat =
        OperatorWindow::rank_one(tf_shift(phi2, z0), tf_shift(phi1, z0));
    rep.record("atom-symbol", (Aat - Rat).frobenius(), 1e-11, detail::witness(t));

    // nonnegative symbol, equal windows: psd
    const OperatorWindow A = localization(a, g0, g0);
    const EigResult eig = hermitian_eig(A.scaled(cplx{0.5, 0.0}) +
                                        A.adjoint().scaled(cplx{0.5, 0.0}));
    rep.record("psd", -eig.eigenvalues.front() / (1.0 + A.frobenius()), 1e-10,
               detail::witness(t));

    // Prop 4.12 pipeline equality
    const double direct = b1v_localization_value(a, g0, ws.v);
    const double viaop = b_norm(psd_sqrt(A), 1.0, 1.0, ws.v, g0);
    rep.record("b1v-pipeline", std::abs(direct - viaop) / (direct + 1e-12), 1e-8,
               detail::witness(t));

    // final corollary: Cohen sandwich for T = A_a with explicit constants
    {
      const PhaseField Qg0 = cohen(A, g0), Qf = cohen(A, f);
      PhaseField sq0(n), sqf(n);
      for (std::size_t i = 0; i < Qg0.values().size(); ++i)
        sq0.values()[i] = std::sqrt(std::max(0.0, Qg0.values()[i].real()));
      for (std::size_t i = 0; i < Qf.values().size(); ++i)
        sqf.values()[i] = std::sqrt(std::max(0.0, Qf.values()[i].real()));
      const double G1 = detail::l1v_mu(sq0, ws.v);
      const double tr = std::real(trace(A));
      if (tr > 1e-12 && G1 > 1e-12) {
        const PhaseField Vg0f = stft(f, g0);
        PhaseField absV(n);
        for (std::size_t i = 0; i < absV.values().size(); ++i)
          absV.values()[i] = std::abs(Vg0f.values()[i]);
        const Weight& m = ws.moderate[1].second;
        const double cvm = ws.cvm[1];
        for (double p : detail::exponent_grid()) {
          const MixedNormParams params{p, p, m};
          const double mid = mixed_norm(sqf, params);
          const double ref = mixed_norm(absV, params);
          const double s = std::max({mid, cvm * G1 * ref, 1e-300});
          rep.record("final-corollary-upper", (mid - cvm * G1 * ref) / s, 1e-8,
                     detail::witness(t));
          rep.record("final-corollary-lower", (tr / (cvm * G1) * ref - mid) / s, 1e-8,
                     detail::witness(t));
        }
      }
    }

    // Theorem on B_p bounds: ratio recorded per p
    if (t < 4) {
      const double m1 = m1v_norm(g0, ws.v);
      for (double p : {1.0, 2.0}) {
        const double num = b_norm(A, p, p, one, g0);
        const double den = symbol_mod_norm(a, p, kInfExp) * m1 * m1;
        if (den > 1e-12) {
          const double r = num / den;
          (p == 1.0 ? bp_ratio_1 : bp_ratio_2) =
              std::max(p == 1.0 ? bp_ratio_1 : bp_ratio_2, r);
        }
      }
    }

    // converse identity: |V_Psi a(z, zeta)| <= ||A_a^{g0, h} pi(z) g0||_2 with
    // Psi = |V_{g0} g0|^2 and h = M_{zeta1} T_{-zeta2} g0
    if (t < 2) {
      const PhaseField Vgg = stft(g0, g0);
      PhaseField Psi(n);
      for (std::size_t i = 0; i < Psi.values().size(); ++i)
        Psi.values()[i] = cplx{std::norm(Vgg.values()[i]), 0.0};
      double worst = -kInfExp;
      for (std::size_t zc1 = 0; zc1 < n; ++zc1)
        for (std::size_t zc2 = 0; zc2 < n; ++zc2) {
          const Signal h = tf_shift(g0, PhasePoint{mod_n(-static_cast<long long>(zc2), n), zc1});
          const OperatorWindow Ah = localization(a, g0, h);
          for (std::size_t z1 = 0; z1 < n; ++z1)
            for (std::size_t z2 = 0; z2 < n; ++z2) {
              cplx v{0.0, 0.0};
              for (std::size_t w1 = 0; w1 < n; ++w1)
                for (std::size_t w2 = 0; w2 < n; ++w2) {
                  const double ang = -2.0 * kPi *
                                     static_cast<double>((w1 * zc1 + w2 * zc2) % n) /
                                     static_cast<double>(n);
                  v += a(w1, w2) * std::polar(1.0, ang) *
                       Psi.at_mod(static_cast<long long>(w1) - static_cast<long long>(z1),
                                  static_cast<long long>(w2) - static_cast<long long>(z2));
                }
              const double lhs = std::abs(v) / static_cast<double>(n);
              const double rhs = norm2(Ah.apply(tf_shift(g0, PhasePoint{z1, z2})));
              worst = std::max(worst, lhs - rhs);
            }
          }
      rep.record("converse-pointwise", std::max(0.0, worst), 1e-10, detail::witness(t));
    }
  }
  rep.constants["bp-over-mpinf-p=1"] = bp_ratio_1;
  rep.constants["bp-over-mpinf-p=2"] = bp_ratio_2;
  return rep;
}

inline SuiteReport amalgam(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"amalgam", n, trials, seed, {}, {}};
  if (n % 2 != 0) throw domain_error("amalgam: N must be even for block=2");
  const Signal g0 = gaussian_window(n);
  const Weight v = weight_polynomial(n, 1.0);
  const PhaseField Vgg = stft(g0, g0);
  PhaseField Phi(n);
  for (std::size_t i = 0; i < Phi.values().size(); ++i)
    Phi.values()[i] = cplx{std::norm(Vgg.values()[i]), 0.0};

  const std::size_t block = 2;
  double rmax = 0.0, rmin = kInfExp;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 10, t);
    const PhaseField a = (t % 2 == 0) ? random_nonneg_field(rng, n)
                                      : sparse_nonneg_field(rng, n);
    // continuous-window functional || z -> ||a T_z Phi||_{L^1} ||_{L^{1/2}_v}
    PhaseField h(n);
    for (std::size_t z1 = 0; z1 < n; ++z1)
      for (std::size_t z2 = 0; z2 < n; ++z2) {
        double s = 0.0;
        for (std::size_t w1 = 0; w1 < n; ++w1)
          for (std::size_t w2 = 0; w2 < n; ++w2)
            s += std::abs(a(w1, w2)) *
                 std::real(Phi.at_mod(static_cast<long long>(w1) - static_cast<long long>(z1),
                                      static_cast<long long>(w2) - static_cast<long long>(z2)));
        h(z1, z2) = cplx{s / static_cast<double>(n), 0.0};
      }
    const double lhs = l_half_mu(h, v);
    const double rhs = amalgam_norm(a, 1.0, 0.5, v, block);
    if (rhs > 1e-14) {
      const double r = lhs / rhs;
      rmax = std::max(rmax, r);
      rmin = std::min(rmin, r);
      rep.record("ratio-finite", std::isfinite(r) && r > 0.0 ? 0.0 : 1.0, 0.5,
                 detail::witness(t));
    }
  }
  rep.constants["equivalence-ratio-max-block=2"] = rmax;
  rep.constants["equivalence-ratio-min-block=2"] = rmin;
  return rep;
}

inline SuiteReport khinchin(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"khinchin", n, trials, seed, {}, {}};
  double cmax_p1 = 0.0, cmax_p2 = 0.0, cmax_p4 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 11, t);
    const std::size_t k = 1 + rng.index(12);
    std::vector<cplx> a(k);
    for (auto& c : a) c = rng.complex_pm1();
    for (double p : {1.0, 2.0, 4.0}) {
      const KhinchinResult r = khinchin_exact(a, p);
      if (p == 2.0)
        rep.record("p2-exact", std::abs(r.ratio - 1.0), 1e-12, detail::witness(t));
      rep.record("ratio-positive", r.ratio > 0.0 ? 0.0 : 1.0, 0.5, detail::witness(t));
      (p == 1.0 ? cmax_p1 : p == 2.0 ? cmax_p2 : cmax_p4) =
          std::max(p == 1.0 ? cmax_p1 : p == 2.0 ? cmax_p2 : cmax_p4, r.ratio);
    }
  }
  rep.constants["ratio-max-p=1"] = cmax_p1;
  rep.constants["ratio-max-p=2"] = cmax_p2;
  rep.constants["ratio-max-p=4"] = cmax_p4;
  return rep;
}

inline SuiteReport young(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"young", n, trials, seed, {}, {}};
  const detail::WeightSet ws(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 12, t);
    const PhaseField F = random_field(rng, n), G = random_field(rng, n);
    const PhaseField C = convolve_phase(F, G);
    for (std::size_t mi = 0; mi < ws.moderate.size(); ++mi) {
      const Weight& m = ws.moderate[mi].second;
      const double cvm = ws.cvm[mi];
      const double g1v = detail::l1v_mu(G, ws.v);
      for (double p : detail::exponent_grid())
        for (double q : detail::exponent_grid()) {
          const MixedNormParams params{p, q, m};
          const double lhs = mixed_norm(C, params);
          const double rhs = cvm * mixed_norm(F, params) * g1v;
          rep.record("young-" + ws.moderate[mi].first, (lhs - rhs) / std::max(rhs, 1e-300),
                     1e-9, detail::witness(t));
        }
    }
    // general exponent triple: ||F*G||_{p2,q2,m} <= C ||F||_{p1,q1,m} ||G||_{p3,q3,v}
    {
      const Weight& m = ws.moderate[1].second;
      const double cvm = ws.cvm[1];
      const std::array<std::pair<double, double>, 3> pairs = {
          {{1.0, 2.0}, {2.0, 4.0}, {1.0, kInfExp}}};
      for (const auto& [p1, p2] : pairs)
        for (const auto& [q1, q2] : pairs) {
          const double p3 = detail::young_third(p1, p2), q3 = detail::young_third(q1, q2);
          const double lhs = mixed_norm(C, MixedNormParams{p2, q2, m});
          const double rhs = cvm * mixed_norm(F, MixedNormParams{p1, q1, m}) *
                             mixed_norm(G, MixedNormParams{p3, q3, ws.v});
          rep.record("young-triple", (lhs - rhs) / std::max(rhs, 1e-300), 1e-9,
                     detail::witness(t));
        }
    }

    // monotone in the weight
    const MixedNormParams big{2.0, 4.0, ws.moderate[2].second};
    const MixedNormParams small{2.0, 4.0, ws.moderate[1].second};
    rep.record("weight-monotone",
               (mixed_norm(F, small) - mixed_norm(F, big)) /
                   std::max(mixed_norm(F, big), 1e-300),
               1e-12, detail::witness(t));
    // translation covariance with m == 1 is exact
    const Weight one(n, 1.0, WeightKind::moderate);
    PhaseField Ft(n);
    const std::size_t sx = rng.index(n), sk = rng.index(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < n; ++xi)
        Ft(x, xi) = F.at_mod(static_cast<long long>(x) - static_cast<long long>(sx),
                             static_cast<long long>(xi) - static_cast<long long>(sk));
    const MixedNormParams pp{3.0, 1.0, one};
    rep.record("translation-covariance",
               std::abs(mixed_norm(Ft, pp) - mixed_norm(F, pp)) /
                   std::max(mixed_norm(F, pp), 1e-300),
               1e-13, detail::witness(t));
  }
  return rep;
}

inline SuiteReport dominance(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"dominance", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  double cmax = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 13, t);
    const Signal phi = random_signal(rng, n);
    const Signal psi = random_unit_signal(rng, n);
    const Signal f = random_signal(rng, n);
    const FieldPair pair = dominance_pair(phi, psi, f);
    double worst = 0.0;
    const double scale = norm2(phi) * norm2(f) + 1e-300;
    for (std::size_t i = 0; i < pair.lhs.values().size(); ++i) {
      worst = std::max(worst, std::real(pair.lhs.values()[i] - pair.rhs.values()[i]));
      const double r = std::real(pair.rhs.values()[i]);
      if (r > 1e-10 * scale)
        cmax = std::max(cmax, std::real(pair.lhs.values()[i]) / r);
    }
    rep.record("pointwise", worst / scale, 1e-12, detail::witness(t));

    // vector-valued form with a three-window family, constant 1 via g0
    std::vector<Signal> family;
    for (int k = 0; k < 3; ++k) family.push_back(random_signal(rng, n));
    PhaseField lhsF(n), famg0(n), absVf(n);
    for (const Signal& w : family) {
      const PhaseField Vf = stft(f, w), Vg = stft(g0, w);
      for (std::size_t i = 0; i < lhsF.values().size(); ++i) {
        lhsF.values()[i] += std::norm(Vf.values()[i]);
        famg0.values()[i] += std::norm(Vg.values()[i]);
      }
    }
    for (std::size_t i = 0; i < lhsF.values().size(); ++i) {
      lhsF.values()[i] = std::sqrt(std::real(lhsF.values()[i]));
      famg0.values()[i] = std::sqrt(std::real(famg0.values()[i]));
    }
    const PhaseField Vg0f = stft(f, g0);
    for (std::size_t i = 0; i < absVf.values().size(); ++i)
      absVf.values()[i] = std::abs(Vg0f.values()[i]);
    const PhaseField rhsF = convolve_phase(famg0, absVf);
    double worst_vec = 0.0;
    double vscale = 0.0;
    for (const Signal& w : family) vscale += norm2(w) * norm2(w);
    vscale = std::sqrt(vscale) * norm2(f) + 1e-300;
    for (std::size_t i = 0; i < lhsF.values().size(); ++i)
      worst_vec = std::max(worst_vec, std::real(lhsF.values()[i] - rhsF.values()[i]));
    rep.record("vector-valued", worst_vec / vscale, 1e-12, detail::witness(t));
  }
  rep.constants["dominance-constant"] = cmax;
  rep.record("constant-le-1", cmax - 1.0, 1e-9, "ensemble");
  return rep;
}

inline SuiteReport ft_product_suite(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"ft-product", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 14, t);
    const Signal f1 = (t == 0) ? g0 : random_signal(rng, n);
    const Signal g1 = (t == 0) ? g0 : random_signal(rng, n);
    const Signal f2 = (t == 0) ? g0 : random_signal(rng, n);
    const Signal g2 = (t == 0) ? g0 : random_signal(rng, n);
    const FieldPair pair = ft_product(f1, g1, f2, g2);
    double worst = 0.0;
    for (std::size_t i = 0; i < pair.lhs.values().size(); ++i)
      worst = std::max(worst, std::abs(pair.lhs.values()[i] - pair.rhs.values()[i]));
    const double scale =
        norm2(f1) * norm2(g1) * norm2(f2) * norm2(g2) + 1e-300;
    rep.record("identity", worst / scale, 1e-10, detail::witness(t));
  }
  return rep;
}

inline SuiteReport nuclear(std::size_t n, std::size_t trials, std::uint64_t seed) {
  SuiteReport rep{"nuclear", n, trials, seed, {}, {}};
  const Signal g0 = gaussian_window(n);
  const Weight v = weight_polynomial(n, 2.0);
  double gap_max = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, 15, t);
    const OperatorWindow S = generate_operator(rng, n, t);
    const double bound = nuclear_bound(S, v);
    const double b1 = b_norm(S, 1.0, 1.0, v, g0);
    rep.record("bound-dominates", (b1 - bound) / std::max(bound, 1e-300), 1e-9,
               detail::witness(t));
    if (b1 > 1e-12) gap_max = std::max(gap_max, bound / b1);

    // rank-one closed form
    const Signal xi = random_signal(rng, n), phi = random_signal(rng, n);
    const OperatorWindow R = OperatorWindow::rank_one(xi, phi);
    const double closed = norm2(xi) * m1v_norm(phi, v);
    rep.record("rank-one", std::abs(nuclear_bound(R, v) - closed) / (closed + 1e-300),
               1e-10, detail::witness(t));
  }
  rep.constants["bound-over-b1v-max"] = gap_max;
  return rep;
}

}  // namespace suites

inline SuiteReport run_suite(const std::string& name, std::size_t n, std::size_t trials,
                             std::uint64_t seed, std::size_t max_n4 = 12) {
  if (n == 0) throw domain_error("run_suite: group size must be positive");
  if (is_heavy_suite(name) && n > max_n4)
    throw resource_error("run_suite: suite '" + name + "' is O(N^4) and capped at N <= " +
                         std::to_string(max_n4));
  if (name == "moyal") return suites::moyal(n, trials, seed);
  if (name == "isometry") return suites::isometry(n, trials, seed);
  if (name == "reconstruction") return suites::reconstruction(n, trials, seed);
  if (name == "trace-lemma") return suites::trace_lemma(n, trials, seed);
  if (name == "sandwich") return suites::sandwich(n, trials, seed);
  if (name == "schatten-embed") return suites::schatten_embed(n, trials, seed);
  if (name == "window-independence") return suites::window_independence(n, trials, seed);
  if (name == "cohen") return suites::cohen_suite(n, trials, seed);
  if (name == "localization") return suites::localization_suite(n, trials, seed);
  if (name == "amalgam") return suites::amalgam(n, trials, seed);
  if (name == "khinchin") return suites::khinchin(n, trials, seed);
  if (name == "young") return suites::young(n, trials, seed);
  if (name == "dominance") return suites::dominance(n, trials, seed);
  if (name == "ft-product") return suites::ft_product_suite(n, trials, seed);
  if (name == "nuclear") return suites::nuclear(n, trials, seed);
  throw domain_error("run_suite: unknown suite '" + name + "'");
}

// Max of lhs/rhs over a seeded instance family, for the paper's implicit
// constants.
inline double estimate_constant(const std::string& id, std::size_t n, std::size_t trials,
                                std::uint64_t seed) {
  if (id == "dominance") {
    const SuiteReport r = suites::dominance(n, trials, seed);
    return r.constants.at("dominance-constant");
  }
  if (id == "amalgam-max" || id == "amalgam-min") {
    const SuiteReport r = suites::amalgam(n, trials, seed);
    return r.constants.at(id == "amalgam-max" ? "equivalence-ratio-max-block=2"
                                              : "equivalence-ratio-min-block=2");
  }
  if (id == "localization-b1" || id == "localization-b2") {
    const SuiteReport r = suites::localization_suite(n, trials, seed);
    return r.constants.at(id == "localization-b1" ? "bp-over-mpinf-p=1"
                                                  : "bp-over-mpinf-p=2");
  }
  throw domain_error("estimate_constant: unknown inequality '" + id + "'");
}

}  // namespace opwin
