#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/matrix.hpp"
#include "heisurf/exactmath/prime_field.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

/// First-order jet: a value together with its gradient w.r.t. a fixed list of
/// directions. Lets compositions like p(grad F) be differentiated without
/// expanding them symbolically.
template <FieldElement F>
struct Jet {
  F value;
  std::vector<F> grad;

  static Jet constant(const F& v, std::size_t dirs) { return {v, std::vector<F>(dirs, F::zero(v.field()))}; }
  static Jet seed(const F& v, std::size_t dirs, std::size_t which) {
    Jet j = constant(v, dirs);
    j.grad[which] = F::one(v.field());
    return j;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r{a.value + b.value, a.grad};
    for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = r.grad[i] + b.grad[i];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r{a.value - b.value, a.grad};
    for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = r.grad[i] - b.grad[i];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r{a.value * b.value, std::vector<F>()};
    r.grad.reserve(a.grad.size());
    for (std::size_t i = 0; i < a.grad.size(); ++i) r.grad.push_back(a.value * b.grad[i] + b.value * a.grad[i]);
    return r;
  }
};

/// Evaluates f at jet-valued arguments (one per ring variable).
template <FieldElement F>
Jet<F> eval_jet(const MultiPoly<F>& f, const std::vector<Jet<F>>& args) {
  std::size_t dirs = args.empty() ? 0 : args.front().grad.size();
  auto field = f.field();
  return eval_generic(
      f, args, [&](const F& c) { return Jet<F>::constant(c, dirs); }, Jet<F>::constant(F::zero(field), dirs));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct RankProbeResult {
  std::size_t max_rank = 0;
  std::size_t witness_sample = 0;
  std::vector<std::uint64_t> witness;  // one coordinate per ring variable
  std::vector<std::size_t> ranks;      // per sample, in sample order
};

/// System evaluator for the probe: given a point of jets (seeded in the wrt
/// directions) return the jets of every equation.
using JetSystem = std::function<std::vector<Jet<ModP>>(const std::vector<Jet<ModP>>&)>;

inline std::size_t jacobian_rank(const std::vector<Jet<ModP>>& eqs, std::size_t dirs, ModP::Field f) {
  if (eqs.empty() || dirs == 0) return 0;
  ExactMatrix<ModP> j(eqs.size(), dirs, ModP::zero(f));
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < dirs; ++c) j(r, c) = eqs[r].grad[c];
  return rank(j);
}

/// Sample k draws its point from a generator seeded by splitmix64(seed + k),
/// so results do not depend on thread scheduling or on the sample count.
inline std::vector<std::uint64_t> probe_point(std::uint64_t seed, std::size_t k, std::size_t nvars, std::uint64_t p) {
  std::mt19937_64 rng(splitmix64(seed + k));
  std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
  std::vector<std::uint64_t> pt(nvars);
  for (auto& x : pt) x = u(rng);
  return pt;
}

inline std::vector<Jet<ModP>> seed_point(const std::vector<std::uint64_t>& pt, const std::vector<std::size_t>& wrt,
                                         ModP::Field f) {
  std::vector<Jet<ModP>> args;
  args.reserve(pt.size());
  for (std::size_t v = 0; v < pt.size(); ++v) {
    ModP val(f, static_cast<std::int64_t>(pt[v]));
    auto it = std::find(wrt.begin(), wrt.end(), v);
    args.push_back(it == wrt.end() ? Jet<ModP>::constant(val, wrt.size())
                                   : Jet<ModP>::seed(val, wrt.size(), static_cast<std::size_t>(it - wrt.begin())));
  }
  return args;
}

/// Max Jacobian rank of a jet system over GF(p) at `samples` random points.
inline RankProbeResult random_rank_probe_with(const JetSystem& system, std::size_t nvars,
                                              const std::vector<std::size_t>& wrt, std::uint64_t p,
                                              std::size_t samples, std::uint64_t seed, unsigned threads = 1) {
  ModP::Field f = ModP::make_field(p);
  if (samples == 0) throw Error("rank probe needs at least one sample");
  RankProbeResult res;
  res.ranks.assign(samples, 0);
  auto work = [&](std::size_t k) {
    auto pt = probe_point(seed, k, nvars, p);
    res.ranks[k] = jacobian_rank(system(seed_point(pt, wrt, f)), wrt.size(), f);
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(samples)));
  if (threads == 1) {
    for (std::size_t k = 0; k < samples; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < samples; k += threads) work(k);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t k = 0; k < samples; ++k)
    if (k == 0 || res.ranks[k] > res.max_rank) {
      res.max_rank = res.ranks[k];
      res.witness_sample = k;
    }
  res.witness = probe_point(seed, res.witness_sample, nvars, p);
  return res;
}

/// Jet system built from rational polynomials, reduced mod p (BadPrime if p
/// divides a denominator).
inline JetSystem jet_system(const std::vector<MultiPoly<Rational>>& system, std::uint64_t p) {
  if (system.empty()) return [](const std::vector<Jet<ModP>>&) { return std::vector<Jet<ModP>>{}; };
  const auto& src = system.front().ring();
  auto ring = make_ring<ModP>(src->vars.names(), ModP::make_field(p), src->order);
  std::vector<MultiPoly<ModP>> reduced;
  for (const auto& f : system) reduced.push_back(from_rational_poly(f, ring));
  return [reduced](const std::vector<Jet<ModP>>& x) {
    std::vector<Jet<ModP>> out;
    out.reserve(reduced.size());
    for (const auto& f : reduced) out.push_back(eval_jet(f, x));
    return out;
  };
}

inline std::vector<std::size_t> variable_indices(const VarTable& vars, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(vars.index(n));
  return idx;
}

/// Jacobian of the system w.r.t. wrt at uniformly random GF(p) points (all
/// other variables random too); reports the maximum rank and its witness.
inline RankProbeResult random_rank_probe(const std::vector<MultiPoly<Rational>>& system,
                                         const std::vector<std::string>& wrt, std::uint64_t p, std::size_t samples,
                                         std::uint64_t seed, unsigned threads = 1) {
  if (system.empty()) throw Error("rank probe needs a nonempty system");
  const auto& vars = system.front().ring()->vars;
  return random_rank_probe_with(jet_system(system, p), vars.size(), variable_indices(vars, wrt), p, samples, seed,
                                threads);
}

/// Jacobian rank at a given point (coordinates per ring variable, mod p).
inline std::size_t jacobian_rank_at(const std::vector<MultiPoly<Rational>>& system,
                                    const std::vector<std::string>& wrt, std::uint64_t p,
                                    const std::vector<std::uint64_t>& point) {
  if (system.empty()) return 0;
  const auto& vars = system.front().ring()->vars;
  if (point.size() != vars.size()) throw DimensionMismatch("one coordinate per ring variable required");
  ModP::Field f = ModP::make_field(p);
  auto idx = variable_indices(vars, wrt);
  return jacobian_rank(jet_system(system, p)(seed_point(point, idx, f)), idx.size(), f);
}

}  // namespace heisurf
