#ifndef CATFROB_SET_COMONAD_HPP
#define CATFROB_SET_COMONAD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra_catalog.hpp"
#include "monad.hpp"

namespace catfrob {

/// T = −×Z/n on FinSet: the induced monad of the cyclic group.
inline MonadPtr<FinSet> set_product_monad(std::size_t n) { return induced_module_monad(cyclic_group_set(n)); }

/// G X = X^{Z/n} on FinSet with ε(f) = f(0), δ(f)(g)(h) = f(g+h), pointwise g₂
/// and constant g₀. A function f : Z/n → X is the element Σ_g f(g)·|X|^{n-1-g}.
/// Any operation whose table would exceed `max_entries` returns nothing.
class SetHomComonad {
 public:
  using Obj = FinSet::Obj;
  using Mor = FinSet::Mor;

  explicit SetHomComonad(std::size_t n, std::size_t max_entries = 1000000) : n_(n), cap_(max_entries) {
    require(n >= 1, "SetHomComonad: group order must be at least 1");
  }

  std::size_t order() const { return n_; }
  const FinSet& ambient() const { return c_; }

  /// |X|^n, or nothing past the cap.
  std::optional<Obj> obj(const Obj& x) const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x.size != 0 && s > cap_ / x.size) return std::nullopt;
      s *= x.size;
    }
    return Obj{s};
  }

  std::optional<Mor> map(const Mor& f) const {
    auto gx = obj(f.dom);
    auto gy = obj(f.cod);
    if (!gx || !gy) return std::nullopt;
    std::vector<std::size_t> t(gx->size);
    for (std::size_t e = 0; e < gx->size; ++e) t[e] = encode(apply(decode(e, f.dom.size), f), f.cod.size);
    return Mor{*gx, *gy, std::move(t)};
  }

  std::optional<Mor> eps(const Obj& x) const {
    auto gx = obj(x);
    if (!gx) return std::nullopt;
    std::vector<std::size_t> t(gx->size);
    for (std::size_t e = 0; e < gx->size; ++e) t[e] = decode(e, x.size)[0];
    return Mor{*gx, x, std::move(t)};
  }

  std::optional<Mor> delta(const Obj& x) const {
    auto gx = obj(x);
    if (!gx) return std::nullopt;
    auto ggx = obj(*gx);
    if (!ggx) return std::nullopt;
    std::vector<std::size_t> t(gx->size);
    for (std::size_t e = 0; e < gx->size; ++e) {
      auto f = decode(e, x.size);
      std::vector<std::size_t> outer(n_);
      for (std::size_t g = 0; g < n_; ++g) {
        std::vector<std::size_t> inner(n_);
        for (std::size_t h = 0; h < n_; ++h) inner[h] = f[(g + h) % n_];
        outer[g] = encode(inner, x.size);
      }
      t[e] = encode(outer, gx->size);
    }
    return Mor{*gx, *ggx, std::move(t)};
  }

  /// GX×GY → G(X×Y), (f, f') ↦ (g ↦ (f(g), f'(g))).
  std::optional<Mor> g2(const Obj& x, const Obj& y) const {
    auto gx = obj(x);
    auto gy = obj(y);
    auto gxy = obj(c_.tensor(x, y));
    if (!gx || !gy || !gxy || gx->size * gy->size > cap_) return std::nullopt;
    std::vector<std::size_t> t;
    t.reserve(gx->size * gy->size);
    for (std::size_t a = 0; a < gx->size; ++a) {
      auto f = decode(a, x.size);
      for (std::size_t b = 0; b < gy->size; ++b) {
        auto f2 = decode(b, y.size);
        std::vector<std::size_t> pair(n_);
        for (std::size_t g = 0; g < n_; ++g) pair[g] = f[g] * y.size + f2[g];
        t.push_back(encode(pair, x.size * y.size));
      }
    }
    return Mor{c_.tensor(*gx, *gy), *gxy, std::move(t)};
  }

  Mor g0() const { return Mor{c_.unit(), c_.unit(), {0}}; }

  /// GX⊗GY → G²X⊗GY → G(GX⊗Y).
  std::optional<Mor> cofusion_left(const Obj& x, const Obj& y) const {
    auto d = delta(x);
    auto gy = obj(y);
    auto gx = obj(x);
    if (!d || !gy || !gx) return std::nullopt;
    auto g = g2(*gx, y);
    if (!g) return std::nullopt;
    return c_.compose(*g, c_.tensor(*d, c_.id(*gy)));
  }

  /// GX⊗GY → GX⊗G²Y → G(X⊗GY).
  std::optional<Mor> cofusion_right(const Obj& x, const Obj& y) const {
    auto d = delta(y);
    auto gx = obj(x);
    auto gy = obj(y);
    if (!d || !gx || !gy) return std::nullopt;
    auto g = g2(x, *gy);
    if (!g) return std::nullopt;
    return c_.compose(*g, c_.tensor(c_.id(*gx), *d));
  }

 private:
  std::vector<std::size_t> decode(std::size_t e, std::size_t base) const {
    std::vector<std::size_t> f(n_);
    for (std::size_t g = n_; g-- > 0;) {
      f[g] = e % base;
      e /= base;
    }
    return f;
  }
  std::size_t encode(const std::vector<std::size_t>& f, std::size_t base) const {
    std::size_t e = 0;
    for (std::size_t g = 0; g < n_; ++g) e = e * base + f[g];
    return e;
  }
  static std::vector<std::size_t> apply(std::vector<std::size_t> f, const Mor& m) {
    for (auto& v : f) v = m.table[v];
    return f;
  }

  FinSet c_;
  std::size_t n_;
  std::size_t cap_;
};

enum class CofusionOutcome { bijective, refuted, undecided };

struct CofusionVerdict {
  CofusionOutcome outcome = CofusionOutcome::undecided;
  std::size_t dom_size = 0;
  std::size_t cod_size = 0;
  bool injective = false;
  std::string witness;
};

/// Exhaustive bijectivity check of cofusion_left at (x, y).
inline CofusionVerdict check_cofusion_left(const SetHomComonad& g, const FinSet::Obj& x, const FinSet::Obj& y) {
  CofusionVerdict v;
  auto f = g.cofusion_left(x, y);
  if (!f) {
    v.witness = "table exceeds the enumeration cap";
    return v;
  }
  const FinSet& c = g.ambient();
  v.dom_size = f->dom.size;
  v.cod_size = f->cod.size;
  v.injective = c.is_mono(*f);
  if (c.inverse(*f)) {
    v.outcome = CofusionOutcome::bijective;
  } else {
    v.outcome = CofusionOutcome::refuted;
    v.witness = v.dom_size != v.cod_size
                    ? "cardinality " + std::to_string(v.dom_size) + " vs " + std::to_string(v.cod_size)
                    : std::string("not injective");
  }
  return v;
}

/// Comonad laws and monoidality of δ, ε on probe objects.
inline LawReport check_comonad_laws(const SetHomComonad& g, const std::vector<FinSet::Obj>& objs) {
  const FinSet& c = g.ambient();
  LawReport r;
  auto one = c.unit();
  for (const auto& x : objs) {
    auto gx = g.obj(x);
    auto d = g.delta(x);
    if (!gx || !d) {
      r.set("comonad.enumeration", Verdict::undecided, "cap exceeded at " + c.describe(x));
      continue;
    }
    std::string ctx = c.describe(x);
    auto dgx = g.delta(*gx);
    auto gd = g.map(*d);
    if (dgx && gd) check_equal(r, c, "comonad.coassociativity", ctx, c.compose(*dgx, *d), c.compose(*gd, *d));
    check_equal(r, c, "comonad.counit", ctx, c.compose(*g.eps(*gx), *d), c.id(*gx));
    check_equal(r, c, "comonad.counit", ctx, c.compose(*g.map(*g.eps(x)), *d), c.id(*gx));
    for (const auto& y : objs) {
      std::string ctx2 = ctx + "," + c.describe(y);
      auto xy = c.tensor(x, y);
      auto g2 = g.g2(x, y);
      if (!g2) continue;
      check_equal(r, c, "monoidal.eps", ctx2, c.compose(*g.eps(xy), *g2), c.tensor(*g.eps(x), *g.eps(y)));
      auto gy = g.obj(y);
      auto g2g = g.g2(*gx, *gy);
      auto gg2 = g.map(*g2);
      if (g2g && gg2)
        check_equal(r, c, "monoidal.delta", ctx2, c.compose(*g.delta(xy), *g2),
                    compose_all(c, *gg2, *g2g, c.tensor(*d, *g.delta(y))));
    }
  }
  check_equal(r, c, "monoidal.eps", c.describe(one), c.compose(*g.eps(one), g.g0()), c.id(one));
  return r;
}

}  // namespace catfrob

#endif  // CATFROB_SET_COMONAD_HPP
