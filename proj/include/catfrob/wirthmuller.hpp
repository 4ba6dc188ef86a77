#ifndef CATFROB_WIRTHMULLER_HPP
#define CATFROB_WIRTHMULLER_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "adjunction.hpp"
#include "frobenius_search.hpp"
#include "functor.hpp"

namespace catfrob {

/// Data (C, u, m) for building a right adjoint of U of the form L(C⊗−):
/// u : 𝟙 → TC and m : T𝟙⊗TC → T𝟙 in the base category, expected to be
/// algebra maps 𝟙 → LC and L𝟙⊗LC → L𝟙.
template <class C>
struct WirthmullerInput {
  std::shared_ptr<const FreeForgetful<C>> adj;
  typename C::Obj c;
  typename C::Mor u;
  typename C::Mor m;
  bool require_algebra_maps = true;

  TAlgebraMor<C> u_d() const { return adj->cat_d().trusted(adj->cat_d().unit(), adj->L(c), u); }
  TAlgebraMor<C> m_d() const {
    const auto& d = adj->cat_d();
    auto l1 = adj->L(adj->cat_c().unit());
    return d.trusted(d.tensor(l1, adj->L(c)), l1, m);
  }
  /// ev = L₀∘m : L𝟙⊗LC → 𝟙 and coev = L₂_{C,𝟙}∘u : 𝟙 → LC⊗L𝟙.
  DualPairData<EMCategory<C>> duality() const {
    const auto& d = adj->cat_d();
    auto one = adj->cat_c().unit();
    return {adj->L(one), adj->L(c), d.compose(adj->L0(), m_d()), d.compose(adj->L2(c, one), u_d())};
  }
};

/// The four relations tying (u, m) to the comonoidal structure of L, the
/// induced duality between L𝟙 and LC, the algebra-map conditions, and the
/// recomputation of u as the transpose of L₀.
template <class C>
LawReport check_LC(const WirthmullerInput<C>& w) {
  const auto& adj = *w.adj;
  const C& k = adj.cat_c();
  const auto& d = adj.cat_d();
  LawReport r;
  auto one = k.unit();
  auto l1 = adj.L(one);
  auto lc = adj.L(w.c);
  const std::string ctx = k.describe(w.c);
  if (!k.same(k.dom(w.u), one) || !k.same(k.cod(w.u), lc.carrier) ||
      !k.same(k.dom(w.m), k.tensor(l1.carrier, lc.carrier)) || !k.same(k.cod(w.m), l1.carrier))
    throw ContractViolation("check_LC: u or m has the wrong type for C = " + ctx);

  if (w.require_algebra_maps) {
    auto is_map = [&](const TAlgebra<C>& a, const TAlgebra<C>& b, const typename C::Mor& f) {
      return k.equal(k.compose(f, a.action), k.compose(b.action, adj.monad().map(f)));
    };
    auto mark = [&](const std::string& id, bool ok) {
      Witness wit;
      wit.context = ctx;
      wit.note = "not a T-algebra map";
      r.record(id, ok, wit);
    };
    mark("lc.u_algebra_map", is_map(d.unit(), lc, w.u));
    mark("lc.m_algebra_map", is_map(d.tensor(l1, lc), l1, w.m));
  }

  auto u = w.u_d();
  auto m = w.m_d();
  auto i1 = d.id(l1);
  auto ic = d.id(lc);
  auto l2 = adj.L2(one, one);
  auto l2c = adj.L2(w.c, one);
  // (i) (1⊗m)∘(L₂⊗1) = L₂∘m
  check_equal(r, d, "lc.i", ctx, d.compose(d.tensor(i1, m), d.tensor(l2, ic)), d.compose(l2, m));
  // (ii) (m⊗1)∘(1⊗L₂_{C,𝟙}) = L₂∘m
  check_equal(r, d, "lc.ii", ctx, d.compose(d.tensor(m, i1), d.tensor(i1, l2c)), d.compose(l2, m));
  // (iii) m∘(1⊗u) = 1
  check_equal(r, d, "lc.iii", ctx, d.compose(m, d.tensor(i1, u)), i1);
  // (iv) (1⊗m)∘(L₂_{C,𝟙}⊗1)∘(u⊗1) = L₂_{C,𝟙}
  check_equal(r, d, "lc.iv", ctx, compose_all(d, d.tensor(ic, m), d.tensor(l2c, ic), d.tensor(u, ic)), l2c);

  r.merge(dual_pair_report(d, w.duality()), "lc.");
  // ū = (1⊗L₀)∘coev
  auto ubar = d.compose(d.tensor(ic, adj.L0()), w.duality().coev);
  check_equal(r, d, "lc.u_transpose", ctx, ubar, u);
  Witness wit;
  wit.context = ctx;
  wit.note = "transpose of L0 is not a T-algebra map";
  r.record("lc.u_transpose_algebra_map", k.equal(k.compose(ubar.underlying, d.unit().action),
                                                 k.compose(lc.action, adj.monad().map(ubar.underlying))),
           wit);
  return r;
}

enum class RightVariant { left, right };

inline const char* to_string(RightVariant v) { return v == RightVariant::left ? "left" : "right"; }

/// A right adjoint R of U with its unit, counit and lax monoidal structure.
/// Components are closures so that tests can perturb them.
template <class C>
struct RightAdjointData {
  using CObj = typename C::Obj;
  using CMor = typename C::Mor;
  using DObj = TAlgebra<C>;
  using DMor = TAlgebraMor<C>;

  RightVariant variant = RightVariant::left;
  std::shared_ptr<const FreeForgetful<C>> adj;
  typename C::Obj c;
  std::function<DObj(const CObj&)> obj;
  std::function<DMor(const CMor&)> map;
  std::function<DMor(const DObj&)> eta;  // A → RUA
  std::function<CMor(const CObj&)> eps;  // URX → X
  DMor r0;
  std::function<DMor(const CObj&, const CObj&)> r2;  // RX⊗RY → R(X⊗Y)
};

namespace detail {

/// The unique h with η_X∘h = g, after checking that g equalizes (Tη_X, η_{TX})
/// and that η_X is the equalizer there.
template <class C>
typename C::Mor factor_through_unit(const FreeForgetful<C>& adj, const typename C::Obj& x, const typename C::Mor& g) {
  const C& k = adj.cat_c();
  const auto& t = adj.monad();
  if (!descent_holds_at(t, x))
    throw ConstructionError("counit: the unit at " + k.describe(x) + " is not the equalizer of (T eta, eta T)");
  auto tx = t.obj(x);
  if (!k.equal(k.compose(t.map(t.eta(x)), g), k.compose(t.eta(tx), g)))
    throw ConstructionError("counit: the mate at " + k.describe(x) + " does not equalize (T eta, eta T)");
  auto h = k.factor_through(t.eta(x), g);
  if (!h) throw ConstructionError("counit: no factorization through the unit at " + k.describe(x));
  return *h;
}

template <class C>
struct CounitCache {
  std::mutex mutex;
  std::map<std::string, std::vector<std::pair<typename C::Obj, typename C::Mor>>> entries;
};

template <class C, class F>
typename C::Mor cached_counit(const C& k, CounitCache<C>& cache, const typename C::Obj& x, F make) {
  const std::string key = k.describe(x);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    for (const auto& [obj, mor] : cache.entries[key])
      if (k.same(obj, x)) return mor;
  }
  auto mor = make();
  std::lock_guard<std::mutex> lock(cache.mutex);
  cache.entries[key].emplace_back(x, mor);
  return mor;
}

}  // namespace detail

/// (r₀, r₂) transported along the adjunction: r₀ = u, and
/// r₂ = L(1⊗1⊗ε^r_Y)∘ℍ^{l,-1}_{C⊗X,RY} (left variant) or
/// r₂ = L(ε^r_X⊗1)∘ℍ^{r,-1}_{RX,Y} (right variant).
template <class C>
void lax_structure(RightAdjointData<C>& r, const typename C::Mor& u) {
  auto adj = r.adj;
  const C& k = adj->cat_c();
  r.r0 = adj->cat_d().trusted(adj->cat_d().unit(), r.obj(k.unit()), u);
  auto eps = r.eps;
  auto obj = r.obj;
  auto cobj = r.c;
  if (r.variant == RightVariant::left) {
    r.r2 = [adj, eps, obj, cobj](const typename C::Obj& x, const typename C::Obj& y) {
      const C& k = adj->cat_c();
      auto inv = adj->hopf_left_inverse(k.tensor(cobj, x), obj(y));
      return adj->cat_d().compose(adj->L(tensor_all(k, k.id(cobj), k.id(x), eps(y))), inv);
    };
  } else {
    r.r2 = [adj, eps, obj](const typename C::Obj& x, const typename C::Obj& y) {
      const C& k = adj->cat_c();
      auto inv = adj->hopf_right_inverse(obj(x), y);
      return adj->cat_d().compose(adj->L(k.tensor(eps(x), k.id(y))), inv);
    };
  }
}

/// Throws ConstructionError naming the first failing precondition: the (LC)
/// relations, the descent condition and monicity of T(1⊗η) on the probes.
template <class C>
void require_wirthmuller_preconditions(const WirthmullerInput<C>& w, const std::vector<typename C::Obj>& xs) {
  auto lc = check_LC(w);
  if (!lc.all_pass()) throw ConstructionError("precondition " + lc.failures().front() + " fails");
  auto desc = descent_type_check(w.adj->monad(), xs);
  if (!desc.holds) throw ConstructionError("precondition descent fails at " + desc.witness);
  auto mono = tensor_unit_monic_check(w.adj->monad(), w.c, xs);
  if (!mono.holds) throw ConstructionError("precondition T(1⊗eta) monic fails at " + mono.witness);
}

/// R X = L(C⊗X) with η^r_A = ℍ^{l,-1}_{C,A}∘(u⊗1) and ε^r_X the factorization
/// through η_X of θ_{LX}∘UL(1⊗η_X), where
///   θ_A = U((ev⊗1)∘(1⊗ℍˡ_{C,A})∘ℍˡ_{𝟙,RUA})∘η_{URUA}.
template <class C>
RightAdjointData<C> right_adjoint_construct(const WirthmullerInput<C>& w, const std::vector<typename C::Obj>& xs) {
  require_wirthmuller_preconditions(w, xs);
  auto adj = w.adj;
  RightAdjointData<C> r;
  r.variant = RightVariant::left;
  r.adj = adj;
  r.c = w.c;
  auto cobj = w.c;
  r.obj = [adj, cobj](const typename C::Obj& x) { return adj->L(adj->cat_c().tensor(cobj, x)); };
  r.map = [adj, cobj](const typename C::Mor& f) {
    const C& k = adj->cat_c();
    return adj->L(k.tensor(k.id(cobj), f));
  };
  auto u = w.u_d();
  r.eta = [adj, cobj, u](const TAlgebra<C>& a) {
    const auto& d = adj->cat_d();
    return d.compose(adj->hopf_left_inverse(cobj, a), d.tensor(u, d.id(a)));
  };
  auto ev = w.duality().ev;
  auto obj = r.obj;
  // θ_A : URUA → UA
  auto theta = [adj, cobj, ev, obj](const TAlgebra<C>& a) {
    const C& k = adj->cat_c();
    const auto& d = adj->cat_d();
    auto rua = obj(a.carrier);
    auto eps_prime = compose_all(d, d.tensor(ev, d.id(a)), d.tensor(d.id(adj->L(k.unit())), adj->hopf_left(cobj, a)),
                                 adj->hopf_left(k.unit(), rua));
    return k.compose(adj->U(eps_prime), adj->eta(rua.carrier));
  };
  auto cache = std::make_shared<detail::CounitCache<C>>();
  r.eps = [adj, cobj, theta, cache](const typename C::Obj& x) {
    const C& k = adj->cat_c();
    return detail::cached_counit(k, *cache, x, [&] {
      auto g = k.compose(theta(adj->L(x)), adj->U(adj->L(k.tensor(k.id(cobj), adj->eta(x)))));
      return detail::factor_through_unit(*adj, x, g);
    });
  };
  lax_structure(r, w.u);
  return r;
}

/// The mirror construction with C = 𝟙: R X = LX, η^r_A = ℍ^{r,-1}_{A,𝟙}∘(1⊗u),
/// ε^r_X the factorization through η_X of θ̄_{LX}∘UL(η_X), where
///   θ̄_A = U(1⊗ev)∘U(ℍʳ_{A,𝟙}⊗1)∘U(ℍʳ_{LUA,𝟙})∘η_{ULUA}.
template <class C>
RightAdjointData<C> right_adjoint_right_variant(const WirthmullerInput<C>& w, const std::vector<typename C::Obj>& xs) {
  const C& k0 = w.adj->cat_c();
  require(k0.same(w.c, k0.unit()), "right_adjoint_right_variant: C must be the unit object");
  require_wirthmuller_preconditions(w, xs);
  auto adj = w.adj;
  RightAdjointData<C> r;
  r.variant = RightVariant::right;
  r.adj = adj;
  r.c = w.c;
  r.obj = [adj](const typename C::Obj& x) { return adj->L(x); };
  r.map = [adj](const typename C::Mor& f) { return adj->L(f); };
  auto u = w.u_d();
  r.eta = [adj, u](const TAlgebra<C>& a) {
    const auto& d = adj->cat_d();
    return d.compose(adj->hopf_right_inverse(a, adj->cat_c().unit()), d.tensor(d.id(a), u));
  };
  auto ev = w.duality().ev;
  auto theta = [adj, ev](const TAlgebra<C>& a) {
    const C& k = adj->cat_c();
    const auto& d = adj->cat_d();
    auto one = k.unit();
    auto lua = adj->L(a.carrier);
    auto l1 = adj->L(one);
    auto inner = compose_all(d, d.tensor(d.id(a), ev), d.tensor(adj->hopf_right(a, one), d.id(l1)),
                             adj->hopf_right(lua, one));
    return k.compose(adj->U(inner), adj->eta(lua.carrier));
  };
  auto cache = std::make_shared<detail::CounitCache<C>>();
  r.eps = [adj, theta, cache](const typename C::Obj& x) {
    const C& k = adj->cat_c();
    return detail::cached_counit(k, *cache, x, [&] {
      auto g = k.compose(theta(adj->L(x)), adj->U(adj->L(adj->eta(x))));
      return detail::factor_through_unit(*adj, x, g);
    });
  };
  lax_structure(r, w.u);
  return r;
}

/// Triangle identities ε^r_{UA}∘Uη^r_A = 1 and R(ε^r_X)∘η^r_{RX} = 1.
template <class C>
LawReport check_right_adjoint(const RightAdjointData<C>& r, const std::vector<typename C::Obj>& xs,
                              const std::vector<TAlgebra<C>>& as) {
  const auto& adj = *r.adj;
  const C& k = adj.cat_c();
  const auto& d = adj.cat_d();
  LawReport rep;
  for (const auto& a : as)
    check_equal(rep, k, "right_adjoint.triangle_counit", a.label,
                k.compose(r.eps(a.carrier), adj.U(r.eta(a))), k.id(a.carrier));
  for (const auto& x : xs) {
    auto rx = r.obj(x);
    check_equal(rep, d, "right_adjoint.triangle_unit", k.describe(x), d.compose(r.map(r.eps(x)), r.eta(rx)),
                d.id(rx));
  }
  return rep;
}

/// Associativity and unit laws of (R, r₂, r₀).
template <class C>
LawReport check_lax_structure(const RightAdjointData<C>& r, const std::vector<typename C::Obj>& xs) {
  const auto& adj = *r.adj;
  const C& k = adj.cat_c();
  const auto& d = adj.cat_d();
  auto one = k.unit();
  LawReport rep;
  for (const auto& x : xs) {
    auto ix = d.id(r.obj(x));
    check_equal(rep, d, "lax.unit", k.describe(x), d.compose(r.r2(one, x), d.tensor(r.r0, ix)), ix);
    check_equal(rep, d, "lax.unit", k.describe(x), d.compose(r.r2(x, one), d.tensor(ix, r.r0)), ix);
    for (const auto& y : xs)
      for (const auto& z : xs)
        check_equal(rep, d, "lax.associativity", k.describe(x) + "," + k.describe(y) + "," + k.describe(z),
                    d.compose(r.r2(k.tensor(x, y), z), d.tensor(r.r2(x, y), d.id(r.obj(z)))),
                    d.compose(r.r2(x, k.tensor(y, z)), d.tensor(d.id(r.obj(x)), r.r2(y, z))));
  }
  return rep;
}

/// The coHopf operator χ built from (η^r, r₂) is inverse to the Hopf operator:
/// χˡ_{X,A} = r₂∘(1⊗η^r_A) against ℍˡ_{C⊗X,A} (left variant), or
/// χʳ_{A,X} = r₂∘(η^r_A⊗1) against ℍʳ_{A,X} (right variant).
template <class C>
LawReport cohopf_identity(const RightAdjointData<C>& r, const std::vector<typename C::Obj>& xs,
                          const std::vector<TAlgebra<C>>& as) {
  const auto& adj = *r.adj;
  const C& k = adj.cat_c();
  const auto& d = adj.cat_d();
  LawReport rep;
  for (const auto& x : xs)
    for (const auto& a : as) {
      const std::string ctx = k.describe(x) + "," + a.label;
      typename FreeForgetful<C>::DMor chi, h;
      if (r.variant == RightVariant::left) {
        chi = d.compose(r.r2(x, a.carrier), d.tensor(d.id(r.obj(x)), r.eta(a)));
        h = adj.hopf_left(k.tensor(r.c, x), a);
      } else {
        chi = d.compose(r.r2(a.carrier, x), d.tensor(r.eta(a), d.id(r.obj(x))));
        h = adj.hopf_right(a, x);
      }
      check_equal(rep, d, "cohopf.left_inverse", ctx, d.compose(chi, h), d.id(d.dom(h)));
      check_equal(rep, d, "cohopf.right_inverse", ctx, d.compose(h, chi), d.id(d.cod(h)));
    }
  return rep;
}

/// The composite self-adjunction T ⊣ T when C = 𝟙: unit U(η^r_{LX})∘η_X and
/// counit ε^r_X∘U(ε^l_{RX}).
template <class C>
LawReport check_self_adjunction(const RightAdjointData<C>& r, const std::vector<typename C::Obj>& xs) {
  const auto& adj = *r.adj;
  const C& k = adj.cat_c();
  const auto& t = adj.monad();
  LawReport rep;
  auto unit = [&](const typename C::Obj& x) { return k.compose(adj.U(r.eta(adj.L(x))), adj.eta(x)); };
  auto counit = [&](const typename C::Obj& x) { return k.compose(r.eps(x), adj.U(adj.eps(r.obj(x)))); };
  for (const auto& x : xs) {
    auto tx = t.obj(x);
    check_equal(rep, k, "self_adjunction.triangle_left", k.describe(x), k.compose(counit(tx), t.map(unit(x))),
                k.id(tx));
    check_equal(rep, k, "self_adjunction.triangle_right", k.describe(x), k.compose(t.map(counit(x)), unit(tx)),
                k.id(tx));
  }
  return rep;
}

/// T as a bimonoidal endofunctor: f₂ = U r₂, f₀ = U r₀, F₂ = T₂, F₀ = T₀.
template <class C>
BimonoidalFunctor<C, C> monad_as_frobenius_functor(const RightAdjointData<C>& r) {
  auto adj = r.adj;
  auto r2 = r.r2;
  BimonoidalFunctor<C, C> f;
  f.obj = [adj](const typename C::Obj& x) { return adj->monad().obj(x); };
  f.map = [adj](const typename C::Mor& m) { return adj->monad().map(m); };
  f.f2 = [r2](const typename C::Obj& x, const typename C::Obj& y) { return r2(x, y).underlying; };
  f.f0 = r.r0.underlying;
  f.F2 = [adj](const typename C::Obj& x, const typename C::Obj& y) { return adj->monad().t2(x, y); };
  f.F0 = adj->monad().t0();
  return f;
}

/// Comonad laws of (T, δ, ε^r) with δ_X = U(η^r_{LX}) and the Frobenius law
/// T(μ_X)∘δ_{TX} = δ_X∘μ_X = μ_{TX}∘T(δ_X).
template <class C>
LawReport check_frobenius_monad(const RightAdjointData<C>& r, const std::vector<typename C::Obj>& xs) {
  const auto& adj = *r.adj;
  const C& k = adj.cat_c();
  const auto& t = adj.monad();
  LawReport rep;
  auto delta = [&](const typename C::Obj& x) { return adj.U(r.eta(adj.L(x))); };
  for (const auto& x : xs) {
    const std::string ctx = k.describe(x);
    auto tx = t.obj(x);
    auto dx = delta(x);
    check_equal(rep, k, "frobenius_monad.coassociativity", ctx, k.compose(delta(tx), dx), k.compose(t.map(dx), dx));
    check_equal(rep, k, "frobenius_monad.counit", ctx, k.compose(r.eps(tx), dx), k.id(tx));
    check_equal(rep, k, "frobenius_monad.counit", ctx, k.compose(t.map(r.eps(x)), dx), k.id(tx));
    auto dm = k.compose(dx, t.mu(x));
    check_equal(rep, k, "frobenius_monad.frobenius_left", ctx, k.compose(t.map(t.mu(x)), delta(tx)), dm);
    check_equal(rep, k, "frobenius_monad.frobenius_right", ctx, k.compose(t.mu(tx), t.map(dx)), dm);
  }
  return rep;
}

/// Outcome of the six-stage pipeline. Stages after the first failing one are
/// recorded as not reached.
template <class C>
struct PipelineResult {
  LawReport report;
  std::size_t stages_passed = 0;
  std::string halted_stage;  // empty when all stages pass
  std::optional<FrobeniusData<EMCategory<C>>> frobenius;
  std::optional<WirthmullerInput<C>> input;
  std::optional<RightAdjointData<C>> right;
};

inline constexpr const char* kPipelineStages[] = {"pipeline.stage1_frobenius_monoid", "pipeline.stage2_descent",
                                                  "pipeline.stage3_right_adjoint", "pipeline.stage4_self_adjunction",
                                                  "pipeline.stage5_frobenius_functor",
                                                  "pipeline.stage6_frobenius_monad"};

/// Searches for a Frobenius structure on (L𝟙, L₂, L₀), builds the right adjoint
/// with C = 𝟙 from it, and checks that T is self-adjoint, a Frobenius monoidal
/// functor and a Frobenius monad.
template <LinearCategory C>
PipelineResult<C> ambidextrous_frobenius(std::shared_ptr<const FreeForgetful<C>> adj,
                                         const std::vector<typename C::Obj>& xs,
                                         const std::vector<TAlgebra<C>>& as) {
  PipelineResult<C> out;
  const C& k = adj->cat_c();
  const auto& d = adj->cat_d();
  auto& rep = out.report;
  auto one = k.unit();
  std::size_t stage = 0;
  auto finish = [&](Verdict v, const std::string& detail) {
    rep.set(kPipelineStages[stage], v, detail);
    if (v == Verdict::pass) {
      ++out.stages_passed;
      ++stage;
      return true;
    }
    out.halted_stage = kPipelineStages[stage];
    for (std::size_t s = stage + 1; s < 6; ++s) rep.set(kPipelineStages[s], Verdict::undecided, "not reached");
    return false;
  };
  auto stage_ok = [&](const LawReport& part) {
    auto f = part.failures();
    return f.empty() ? std::string() : f.front();
  };

  // (1) Frobenius monoid extending the unit comonoid
  auto co = unit_comonoid(*adj);
  auto search = frobenius_structure_search(d, co);
  Verdict sv = search.outcome == SearchOutcome::found     ? Verdict::pass
               : search.outcome == SearchOutcome::refuted ? Verdict::refuted
                                                          : Verdict::undecided;
  rep.set("frobenius_search", sv, search.detail);
  if (search.outcome != SearchOutcome::found) {
    std::string why = search.outcome == SearchOutcome::refuted
                          ? "no Frobenius structure on T1 in the category of T-algebras: " + search.detail
                          : search.detail;
    finish(sv, why);
    return out;
  }
  FrobeniusData<EMCategory<C>> frob{co.carrier, *search.m, *search.u, co.d, co.e};
  out.frobenius = frob;
  LawReport s1;
  s1.merge(check_frobenius_monoid(d, frob), "frobenius_em.");
  FrobeniusData<C> ambient{frob.carrier.carrier, frob.m.underlying, frob.u.underlying, frob.d.underlying,
                           frob.e.underlying};
  s1.merge(check_frobenius_monoid(k, ambient), "frobenius_ambient.");
  rep.merge(s1);
  if (auto f = stage_ok(s1); !f.empty()) {
    finish(Verdict::fail, f);
    return out;
  }
  finish(Verdict::pass, search.detail);

  // (2) descent and monicity on probes
  auto desc = descent_type_check(adj->monad(), xs);
  auto mono = tensor_unit_monic_check(adj->monad(), one, xs);
  rep.set("descent", desc.holds ? Verdict::pass : Verdict::fail,
          desc.holds ? "holds on " + std::to_string(desc.checked) + " probes" : "fails at " + desc.witness);
  rep.set("unit_monic", mono.holds ? Verdict::pass : Verdict::fail,
          mono.holds ? "holds on " + std::to_string(mono.checked) + " probes" : "fails at " + mono.witness);
  if (!desc.holds || !mono.holds) {
    finish(Verdict::fail, desc.holds ? "unit_monic" : "descent");
    return out;
  }
  finish(Verdict::pass, "holds on probes");

  // (3) right adjoint with C = 𝟙
  WirthmullerInput<C> w{adj, one, frob.u.underlying, frob.m.underlying, true};
  out.input = w;
  LawReport s3 = check_LC(w);
  if (auto f = stage_ok(s3); !f.empty()) {
    rep.merge(s3);
    finish(Verdict::fail, f);
    return out;
  }
  try {
    auto r = right_adjoint_construct(w, xs);
    s3.merge(check_right_adjoint(r, xs, as));
    s3.merge(check_lax_structure(r, xs));
    s3.merge(cohopf_identity(r, xs, as));
    out.right = r;
  } catch (const ConstructionError& e) {
    rep.merge(s3);
    finish(Verdict::fail, e.what());
    return out;
  }
  rep.merge(s3);
  if (auto f = stage_ok(s3); !f.empty()) {
    finish(Verdict::fail, f);
    return out;
  }
  finish(Verdict::pass, "right adjoint T(1⊗-) constructed");

  // (4) T ⊣ T
  auto s4 = check_self_adjunction(*out.right, xs);
  rep.merge(s4);
  if (auto f = stage_ok(s4); !f.empty()) {
    finish(Verdict::fail, f);
    return out;
  }
  finish(Verdict::pass, "triangle identities hold on probes");

  // (5) Frobenius monoidal functor, with preservation of the self-duality of T𝟙
  // and of the Frobenius monoid T𝟙
  auto f = monad_as_frobenius_functor(*out.right);
  LawReport s5 = check_frobenius_monoidal_functor(k, k, f, xs);
  DualPairData<C> pair{ambient.carrier, ambient.carrier, k.compose(ambient.e, ambient.m),
                       k.compose(ambient.d, ambient.u)};
  s5.merge(dual_pair_report(k, transport_dual_pair(k, f, pair)), "frobenius_functor.preserves_");
  s5.merge(check_frobenius_monoid(k, transport_frobenius(k, f, ambient)), "frobenius_functor.preserves_");
  rep.merge(s5);
  if (auto fl = stage_ok(s5); !fl.empty()) {
    finish(Verdict::fail, fl);
    return out;
  }
  finish(Verdict::pass, "compatibility squares hold on probes");

  // (6) Frobenius monad
  auto s6 = check_frobenius_monad(*out.right, xs);
  rep.merge(s6);
  if (auto fl = stage_ok(s6); !fl.empty()) {
    finish(Verdict::fail, fl);
    return out;
  }
  finish(Verdict::pass, "comultiplication U(eta^r L) with counit eps^r");
  return out;
}

/// Result of comparing the left and right constructions.
template <class C>
struct RightAdjointComparison {
  LawReport report;
  std::vector<std::pair<std::string, TAlgebraMor<C>>> composites;  // φ_X per probe
  bool counits_equal = true;
};

/// φ_X = L(ε̄^r_X)∘η^r_{LX} : LX → LX. Records invertibility, monoidality
/// (φ∘r̄₀ = r₀, φ∘r̄₂ = r₂∘(φ⊗φ)) and whether ε^r = ε̄^r on the probes.
template <class C>
RightAdjointComparison<C> compare_right_adjoints(const RightAdjointData<C>& left, const RightAdjointData<C>& right,
                                                 const std::vector<typename C::Obj>& xs) {
  require(left.variant == RightVariant::left && right.variant == RightVariant::right,
          "compare_right_adjoints: expects a left and a right variant");
  const auto& adj = *left.adj;
  const C& k = adj.cat_c();
  const auto& d = adj.cat_d();
  RightAdjointComparison<C> out;
  auto& rep = out.report;
  auto phi = [&](const typename C::Obj& x) { return d.compose(right.map(right.eps(x)), left.eta(right.obj(x))); };
  for (const auto& x : xs) {
    auto p = phi(x);
    out.composites.emplace_back(k.describe(x), p);
    check_invertible(rep, d, "comparison.invertible", k.describe(x), p);
    for (const auto& y : xs)
      check_equal(rep, d, "comparison.monoidal_tensor", k.describe(x) + "," + k.describe(y),
                  d.compose(phi(k.tensor(x, y)), right.r2(x, y)), d.compose(left.r2(x, y), d.tensor(p, phi(y))));
  }
  check_equal(rep, d, "comparison.monoidal_unit", "1", d.compose(phi(k.unit()), right.r0), left.r0);

  std::optional<Witness> diff;
  for (const auto& x : xs) {
    auto a = left.eps(x);
    auto b = right.eps(x);
    if (!k.equal(a, b)) {
      Witness w;
      w.context = k.describe(x);
      w.index = k.first_mismatch(a, b);
      if (w.index) {
        w.lhs = k.render_column(a, *w.index);
        w.rhs = k.render_column(b, *w.index);
      }
      w.note = "left and right counits differ";
      diff = std::move(w);
      break;
    }
  }
  out.counits_equal = !diff.has_value();
  rep.set("comparison.counits_equal", Verdict::measured,
          diff ? "counits differ at " + diff->context : "counits agree on all probes", diff);
  if constexpr (LinearCategory<C>) {
    std::ostringstream s;
    for (const auto& [ctx, p] : out.composites) s << (s.tellp() ? "; " : "") << ctx << ": " << d.matrix(p);
    rep.set("comparison.composite", Verdict::measured, s.str());
  }
  return out;
}

}  // namespace catfrob

#endif  // CATFROB_WIRTHMULLER_HPP
