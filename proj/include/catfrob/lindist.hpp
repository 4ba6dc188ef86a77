#ifndef CATFROB_LINDIST_HPP
#define CATFROB_LINDIST_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "functor.hpp"
#include "inverse_cache.hpp"
#include "wirthmuller.hpp"

namespace catfrob {

/// A linearly distributive functor S → T: a monoidal R, a comonoidal L, two
/// strengths and two costrengths
///   ν_R^r : R(X⊗Y) → LX⊗RY,   ν_R^l : R(X⊗Y) → RX⊗LY,
///   ν_L^r : RX⊗LY → L(X⊗Y),   ν_L^l : LX⊗RY → L(X⊗Y).
template <class S, class T>
struct LinDistFunctor {
  using SObj = typename S::Obj;
  using SMor = typename S::Mor;
  using TObj = typename T::Obj;
  using TMor = typename T::Mor;
  using Pair = std::function<TMor(const SObj&, const SObj&)>;

  std::function<TObj(const SObj&)> R, L;
  std::function<TMor(const SMor&)> R_map, L_map;
  Pair r2;  // RX⊗RY → R(X⊗Y)
  TMor r0;  // 𝟙 → R𝟙
  Pair L2;  // L(X⊗Y) → LX⊗LY
  TMor L0;  // L𝟙 → 𝟙
  Pair nu_R_r, nu_R_l, nu_L_r, nu_L_l;
};

/// R and L both equal to F, with ν_R = F₂ and ν_L = f₂. For a strong monoidal F
/// (F₂ = f₂⁻¹) and more generally for a Frobenius monoidal one.
template <class S, class T>
LinDistFunctor<S, T> degenerate_lindist(const BimonoidalFunctor<S, T>& f) {
  LinDistFunctor<S, T> out;
  out.R = out.L = f.obj;
  out.R_map = out.L_map = f.map;
  out.r2 = f.f2;
  out.r0 = f.f0;
  out.L2 = f.F2;
  out.L0 = f.F0;
  out.nu_R_r = out.nu_R_l = f.F2;
  out.nu_L_r = out.nu_L_l = f.f2;
  return out;
}

/// The identity functor of a strict monoidal category as a bimonoidal functor.
template <MonoidalCategory C>
BimonoidalFunctor<C, C> identity_functor(const C& c) {
  BimonoidalFunctor<C, C> f;
  f.obj = [](const typename C::Obj& x) { return x; };
  f.map = [](const typename C::Mor& m) { return m; };
  f.f2 = f.F2 = [c](const typename C::Obj& x, const typename C::Obj& y) { return c.id(c.tensor(x, y)); };
  f.f0 = f.F0 = c.id(c.unit());
  return f;
}

/// The forgetful functor U : C^T → C, strict monoidal.
template <class C>
BimonoidalFunctor<EMCategory<C>, C> forgetful_functor(std::shared_ptr<const FreeForgetful<C>> adj) {
  BimonoidalFunctor<EMCategory<C>, C> f;
  f.obj = [](const TAlgebra<C>& a) { return a.carrier; };
  f.map = [](const TAlgebraMor<C>& m) { return m.underlying; };
  f.f2 = f.F2 = [adj](const TAlgebra<C>& a, const TAlgebra<C>& b) {
    const C& c = adj->cat_c();
    return c.id(c.tensor(a.carrier, b.carrier));
  };
  f.f0 = f.F0 = adj->cat_c().id(adj->cat_c().unit());
  return f;
}

/// Component-wise composite G∘F of F : S → T and G : T → E:
///   ν_R^r = ν'^r_R∘R'(ν_R^r),  ν_R^l = ν'^l_R∘R'(ν_R^l),
///   ν_L^r = L'(ν_L^r)∘ν'^r_L,  ν_L^l = L'(ν_L^l)∘ν'^l_L.
template <class S, class T, MonoidalCategory E>
LinDistFunctor<S, E> compose_lindist(const E& e, const LinDistFunctor<S, T>& f, const LinDistFunctor<T, E>& g) {
  using SObj = typename S::Obj;
  LinDistFunctor<S, E> out;
  out.R = [f, g](const SObj& x) { return g.R(f.R(x)); };
  out.L = [f, g](const SObj& x) { return g.L(f.L(x)); };
  out.R_map = [f, g](const typename S::Mor& m) { return g.R_map(f.R_map(m)); };
  out.L_map = [f, g](const typename S::Mor& m) { return g.L_map(f.L_map(m)); };
  out.r2 = [e, f, g](const SObj& x, const SObj& y) { return e.compose(g.R_map(f.r2(x, y)), g.r2(f.R(x), f.R(y))); };
  out.r0 = e.compose(g.R_map(f.r0), g.r0);
  out.L2 = [e, f, g](const SObj& x, const SObj& y) { return e.compose(g.L2(f.L(x), f.L(y)), g.L_map(f.L2(x, y))); };
  out.L0 = e.compose(g.L0, g.L_map(f.L0));
  out.nu_R_r = [e, f, g](const SObj& x, const SObj& y) {
    return e.compose(g.nu_R_r(f.L(x), f.R(y)), g.R_map(f.nu_R_r(x, y)));
  };
  out.nu_R_l = [e, f, g](const SObj& x, const SObj& y) {
    return e.compose(g.nu_R_l(f.R(x), f.L(y)), g.R_map(f.nu_R_l(x, y)));
  };
  out.nu_L_r = [e, f, g](const SObj& x, const SObj& y) {
    return e.compose(g.L_map(f.nu_L_r(x, y)), g.nu_L_r(f.R(x), f.L(y)));
  };
  out.nu_L_l = [e, f, g](const SObj& x, const SObj& y) {
    return e.compose(g.L_map(f.nu_L_l(x, y)), g.nu_L_l(f.L(x), f.R(y)));
  };
  return out;
}

/// The eighteen component relations of LF1–LF5 at every probe (pair, triple),
/// together with the monoidal laws of R and the comonoidal laws of L.
template <MonoidalCategory S, MonoidalCategory T>
LawReport check_lf_axioms(const S& s, const T& t, const LinDistFunctor<S, T>& f,
                          const std::vector<typename S::Obj>& xs) {
  LawReport r;
  auto one = s.unit();
  auto iR = [&](const typename S::Obj& x) { return t.id(f.R(x)); };
  auto iL = [&](const typename S::Obj& x) { return t.id(f.L(x)); };
  for (const auto& x : xs) {
    const std::string cx = s.describe(x);
    // LF1
    check_equal(r, t, "lf1.costrength_left", cx, t.compose(f.nu_L_l(x, one), t.tensor(iL(x), f.r0)), iL(x));
    check_equal(r, t, "lf1.costrength_right", cx, t.compose(f.nu_L_r(one, x), t.tensor(f.r0, iL(x))), iL(x));
    check_equal(r, t, "lf1.strength_left", cx, t.compose(t.tensor(iR(x), f.L0), f.nu_R_l(x, one)), iR(x));
    check_equal(r, t, "lf1.strength_right", cx, t.compose(t.tensor(f.L0, iR(x)), f.nu_R_r(one, x)), iR(x));
    check_equal(r, t, "lindist.R_monoidal_unit", cx, t.compose(f.r2(one, x), t.tensor(f.r0, iR(x))), iR(x));
    check_equal(r, t, "lindist.R_monoidal_unit", cx, t.compose(f.r2(x, one), t.tensor(iR(x), f.r0)), iR(x));
    check_equal(r, t, "lindist.L_comonoidal_counit", cx, t.compose(t.tensor(f.L0, iL(x)), f.L2(one, x)), iL(x));
    check_equal(r, t, "lindist.L_comonoidal_counit", cx, t.compose(t.tensor(iL(x), f.L0), f.L2(x, one)), iL(x));
    for (const auto& y : xs)
      for (const auto& z : xs) {
        const std::string ctx = cx + "," + s.describe(y) + "," + s.describe(z);
        auto xy = s.tensor(x, y);
        auto yz = s.tensor(y, z);
        // LF2
        check_equal(r, t, "lf2.costrength_left", ctx, t.compose(f.nu_L_l(xy, z), t.tensor(f.nu_L_l(x, y), iR(z))),
                    t.compose(f.nu_L_l(x, yz), t.tensor(iL(x), f.r2(y, z))));
        check_equal(r, t, "lf2.costrength_right", ctx, t.compose(f.nu_L_r(x, yz), t.tensor(iR(x), f.nu_L_r(y, z))),
                    t.compose(f.nu_L_r(xy, z), t.tensor(f.r2(x, y), iL(z))));
        check_equal(r, t, "lf2.strength_left", ctx, t.compose(t.tensor(f.nu_R_l(x, y), iL(z)), f.nu_R_l(xy, z)),
                    t.compose(t.tensor(iR(x), f.L2(y, z)), f.nu_R_l(x, yz)));
        check_equal(r, t, "lf2.strength_right", ctx, t.compose(t.tensor(iL(x), f.nu_R_r(y, z)), f.nu_R_r(x, yz)),
                    t.compose(t.tensor(f.L2(x, y), iR(z)), f.nu_R_r(xy, z)));
        // LF3
        check_equal(r, t, "lf3.costrengths", ctx, t.compose(f.nu_L_r(x, yz), t.tensor(iR(x), f.nu_L_l(y, z))),
                    t.compose(f.nu_L_l(xy, z), t.tensor(f.nu_L_r(x, y), iR(z))));
        check_equal(r, t, "lf3.strengths", ctx, t.compose(t.tensor(iL(x), f.nu_R_l(y, z)), f.nu_R_r(x, yz)),
                    t.compose(t.tensor(f.nu_R_r(x, y), iL(z)), f.nu_R_l(xy, z)));
        // LF4
        check_equal(r, t, "lf4.a", ctx, t.compose(t.tensor(f.nu_L_l(x, y), iL(z)), t.tensor(iL(x), f.nu_R_l(y, z))),
                    t.compose(f.L2(xy, z), f.nu_L_l(x, yz)));
        check_equal(r, t, "lf4.b", ctx, t.compose(t.tensor(iL(x), f.nu_L_r(y, z)), t.tensor(f.nu_R_r(x, y), iL(z))),
                    t.compose(f.L2(x, yz), f.nu_L_r(xy, z)));
        check_equal(r, t, "lf4.c", ctx, t.compose(t.tensor(iR(x), f.nu_L_l(y, z)), t.tensor(f.nu_R_l(x, y), iR(z))),
                    t.compose(f.nu_R_l(x, yz), f.r2(xy, z)));
        check_equal(r, t, "lf4.d", ctx, t.compose(t.tensor(f.nu_L_r(x, y), iR(z)), t.tensor(iR(x), f.nu_R_r(y, z))),
                    t.compose(f.nu_R_r(xy, z), f.r2(x, yz)));
        // LF5
        check_equal(r, t, "lf5.a", ctx, t.compose(t.tensor(iL(x), f.nu_L_l(y, z)), t.tensor(f.L2(x, y), iR(z))),
                    t.compose(f.L2(x, yz), f.nu_L_l(xy, z)));
        check_equal(r, t, "lf5.b", ctx, t.compose(t.tensor(f.nu_L_r(x, y), iL(z)), t.tensor(iR(x), f.L2(y, z))),
                    t.compose(f.L2(xy, z), f.nu_L_r(x, yz)));
        check_equal(r, t, "lf5.c", ctx, t.compose(t.tensor(f.r2(x, y), iL(z)), t.tensor(iR(x), f.nu_R_l(y, z))),
                    t.compose(f.nu_R_l(xy, z), f.r2(x, yz)));
        check_equal(r, t, "lf5.d", ctx, t.compose(t.tensor(iL(x), f.r2(y, z)), t.tensor(f.nu_R_r(x, y), iR(z))),
                    t.compose(f.nu_R_r(x, yz), f.r2(xy, z)));
        check_equal(r, t, "lindist.R_monoidal_associativity", ctx,
                    t.compose(f.r2(xy, z), t.tensor(f.r2(x, y), iR(z))),
                    t.compose(f.r2(x, yz), t.tensor(iR(x), f.r2(y, z))));
        check_equal(r, t, "lindist.L_comonoidal_coassociativity", ctx,
                    t.compose(t.tensor(f.L2(x, y), iL(z)), f.L2(xy, z)),
                    t.compose(t.tensor(iL(x), f.L2(y, z)), f.L2(x, yz)));
      }
  }
  return r;
}

/// The two dualities between L𝟙 and R𝟙, the monoid R𝟙, the comonoid L𝟙 and
/// the L𝟙-coaction ν_R^r on R𝟙.
template <MonoidalCategory S, MonoidalCategory T>
LawReport check_lindist_unit_objects(const S& s, const T& t, const LinDistFunctor<S, T>& f) {
  auto one = s.unit();
  auto l1 = f.L(one);
  auto r1 = f.R(one);
  LawReport r;
  DualPairData<T> left{l1, r1, t.compose(f.L0, f.nu_L_l(one, one)), t.compose(f.nu_R_l(one, one), f.r0)};
  DualPairData<T> right{r1, l1, t.compose(f.L0, f.nu_L_r(one, one)), t.compose(f.nu_R_r(one, one), f.r0)};
  r.merge(dual_pair_report(t, left), "lindist.duality_left.");
  r.merge(dual_pair_report(t, right), "lindist.duality_right.");
  check_monoid(r, t, MonoidData<T>{r1, f.r2(one, one), f.r0}, "lindist.R1_monoid");
  check_comonoid(r, t, ComonoidData<T>{l1, f.L2(one, one), f.L0}, "lindist.L1_comonoid");
  auto delta = f.nu_R_r(one, one);
  check_equal(r, t, "lindist.coaction", "1", t.compose(t.tensor(t.id(l1), delta), delta),
              t.compose(t.tensor(f.L2(one, one), t.id(r1)), delta));
  check_equal(r, t, "lindist.coaction", "1", t.compose(t.tensor(f.L0, t.id(r1)), delta), t.id(r1));
  return r;
}

/// ρ : R → R' monoidal and λ : L' → L comonoidal, between linearly
/// distributive functors F = (R, L) and F' = (R', L').
template <class S, class T>
struct LinDistNatTrans {
  std::function<typename T::Mor(const typename S::Obj&)> rho;     // RX → R'X
  std::function<typename T::Mor(const typename S::Obj&)> lambda;  // L'X → LX
};

template <MonoidalCategory S, MonoidalCategory T>
LawReport check_lindist_nat(const S& s, const T& t, const LinDistNatTrans<S, T>& n, const LinDistFunctor<S, T>& f,
                            const LinDistFunctor<S, T>& g, const std::vector<typename S::Obj>& xs) {
  LawReport r;
  auto one = s.unit();
  check_equal(r, t, "ln.rho_monoidal_unit", "1", t.compose(n.rho(one), f.r0), g.r0);
  check_equal(r, t, "ln.lambda_comonoidal_counit", "1", t.compose(f.L0, n.lambda(one)), g.L0);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const std::string ctx = s.describe(x) + "," + s.describe(y);
      auto xy = s.tensor(x, y);
      check_equal(r, t, "ln.rho_monoidal", ctx, t.compose(n.rho(xy), f.r2(x, y)),
                  t.compose(g.r2(x, y), t.tensor(n.rho(x), n.rho(y))));
      check_equal(r, t, "ln.lambda_comonoidal", ctx, t.compose(f.L2(x, y), n.lambda(xy)),
                  t.compose(t.tensor(n.lambda(x), n.lambda(y)), g.L2(x, y)));
      // λ∘ν'^l_L∘(1⊗ρ) = ν^l_L∘(λ⊗1) on L'X⊗RY
      check_equal(r, t, "ln.costrength_left", ctx,
                  compose_all(t, n.lambda(xy), g.nu_L_l(x, y), t.tensor(t.id(g.L(x)), n.rho(y))),
                  t.compose(f.nu_L_l(x, y), t.tensor(n.lambda(x), t.id(f.R(y)))));
      // λ∘ν'^r_L∘(ρ⊗1) = ν^r_L∘(1⊗λ) on RX⊗L'Y
      check_equal(r, t, "ln.costrength_right", ctx,
                  compose_all(t, n.lambda(xy), g.nu_L_r(x, y), t.tensor(n.rho(x), t.id(g.L(y)))),
                  t.compose(f.nu_L_r(x, y), t.tensor(t.id(f.R(x)), n.lambda(y))));
      // (1⊗λ)∘ν'^l_R∘ρ = (ρ⊗1)∘ν^l_R on R(X⊗Y)
      check_equal(r, t, "ln.strength_left", ctx,
                  compose_all(t, t.tensor(t.id(g.R(x)), n.lambda(y)), g.nu_R_l(x, y), n.rho(xy)),
                  t.compose(t.tensor(n.rho(x), t.id(f.L(y))), f.nu_R_l(x, y)));
      // (λ⊗1)∘ν'^r_R∘ρ = (1⊗ρ)∘ν^r_R on R(X⊗Y)
      check_equal(r, t, "ln.strength_right", ctx,
                  compose_all(t, t.tensor(n.lambda(x), t.id(g.R(y))), g.nu_R_r(x, y), n.rho(xy)),
                  t.compose(t.tensor(t.id(f.L(x)), n.rho(y)), f.nu_R_r(x, y)));
    }
  return r;
}

/// The triple L ⊣ U ⊣ R of a free/forgetful adjunction and a constructed right
/// adjoint, with the coHopf operators χˡ_{X,A} = r₂∘(1⊗η^r_A) and
/// χʳ_{A,X} = r₂∘(η^r_A⊗1).
template <class C>
struct BiHopfTriple {
  std::shared_ptr<const FreeForgetful<C>> adj;
  RightAdjointData<C> right;
  std::shared_ptr<const InverseCache<EMCategory<C>>> inverses = std::make_shared<InverseCache<EMCategory<C>>>();

  TAlgebraMor<C> cohopf_left(const typename C::Obj& x, const TAlgebra<C>& a) const {
    const auto& d = adj->cat_d();
    return d.compose(right.r2(x, a.carrier), d.tensor(d.id(right.obj(x)), right.eta(a)));
  }
  TAlgebraMor<C> cohopf_right(const TAlgebra<C>& a, const typename C::Obj& x) const {
    const auto& d = adj->cat_d();
    return d.compose(right.r2(a.carrier, x), d.tensor(right.eta(a), d.id(right.obj(x))));
  }
  TAlgebraMor<C> cohopf_left_inverse(const typename C::Obj& x, const TAlgebra<C>& a) const {
    return inverses->get(adj->cat_d(), "l," + adj->cat_c().describe(x) + "," + a.label, cohopf_left(x, a),
                         "left coHopf operator");
  }
  TAlgebraMor<C> cohopf_right_inverse(const TAlgebra<C>& a, const typename C::Obj& x) const {
    return inverses->get(adj->cat_d(), "r," + a.label + "," + adj->cat_c().describe(x), cohopf_right(a, x),
                         "right coHopf operator");
  }
};

/// Strengths of the triple:
///   ν_R^r = χ^{r,-1}_{LX,Y}∘R(η_X⊗1),   ν_R^l = χ^{l,-1}_{X,LY}∘R(1⊗η_Y),
///   ν_L^r = L(ε^r_X⊗1)∘ℍ^{r,-1}_{RX,Y}, ν_L^l = L(1⊗ε^r_Y)∘ℍ^{l,-1}_{X,RY}.
/// Every operator inverse is evaluated on the probe pairs up front; a
/// non-invertible one raises ConstructionError naming it.
template <class C>
LinDistFunctor<C, EMCategory<C>> strengths_from_bihopf(const BiHopfTriple<C>& b,
                                                       const std::vector<typename C::Obj>& xs) {
  using CObj = typename C::Obj;
  auto adj = b.adj;
  auto r = b.right;
  LinDistFunctor<C, EMCategory<C>> f;
  f.R = r.obj;
  f.R_map = r.map;
  f.L = [adj](const CObj& x) { return adj->L(x); };
  f.L_map = [adj](const typename C::Mor& m) { return adj->L(m); };
  f.r2 = r.r2;
  f.r0 = r.r0;
  f.L2 = [adj](const CObj& x, const CObj& y) { return adj->L2(x, y); };
  f.L0 = adj->L0();
  f.nu_R_r = [b](const CObj& x, const CObj& y) {
    const C& c = b.adj->cat_c();
    return b.adj->cat_d().compose(b.cohopf_right_inverse(b.adj->L(x), y),
                                  b.right.map(c.tensor(b.adj->eta(x), c.id(y))));
  };
  f.nu_R_l = [b](const CObj& x, const CObj& y) {
    const C& c = b.adj->cat_c();
    return b.adj->cat_d().compose(b.cohopf_left_inverse(x, b.adj->L(y)),
                                  b.right.map(c.tensor(c.id(x), b.adj->eta(y))));
  };
  f.nu_L_r = [adj, r](const CObj& x, const CObj& y) {
    const C& c = adj->cat_c();
    return adj->cat_d().compose(adj->L(c.tensor(r.eps(x), c.id(y))), adj->hopf_right_inverse(r.obj(x), y));
  };
  f.nu_L_l = [adj, r](const CObj& x, const CObj& y) {
    const C& c = adj->cat_c();
    return adj->cat_d().compose(adj->L(c.tensor(c.id(x), r.eps(y))), adj->hopf_left_inverse(x, r.obj(y)));
  };
  for (const auto& x : xs)
    for (const auto& y : xs) {
      f.nu_R_r(x, y);
      f.nu_R_l(x, y);
      f.nu_L_r(x, y);
      f.nu_L_l(x, y);
    }
  return f;
}

/// The triple with C = 𝟙 as a linearly distributive functor from the
/// ambidextrous pipeline's right adjoint.
template <class C>
BiHopfTriple<C> bihopf_triple(const RightAdjointData<C>& r) {
  return BiHopfTriple<C>{r.adj, r};
}

/// Candidate inverses of the four operators read off the strengths:
///   ℍ^{l,-1}_{X,A} = ν_L^l∘(1⊗η^r_A),   ℍ^{r,-1}_{A,X} = ν_L^r∘(η^r_A⊗1),
///   χ^{l,-1}_{X,A} = (1⊗ε^l_A)∘ν_R^l,   χ^{r,-1}_{A,X} = (ε^l_A⊗1)∘ν_R^r,
/// each checked to be a two-sided inverse at the probes.
template <class C>
LawReport hopf_inverses_from_lindist(const BiHopfTriple<C>& b, const LinDistFunctor<C, EMCategory<C>>& f,
                                     const std::vector<typename C::Obj>& xs, const std::vector<TAlgebra<C>>& as) {
  const auto& adj = *b.adj;
  const C& c = adj.cat_c();
  const auto& d = adj.cat_d();
  const auto& r = b.right;
  LawReport rep;
  auto both = [&](const std::string& id, const std::string& ctx, const TAlgebraMor<C>& op,
                  const TAlgebraMor<C>& inv) {
    check_equal(rep, d, id, ctx, d.compose(inv, op), d.id(op.dom));
    check_equal(rep, d, id, ctx, d.compose(op, inv), d.id(op.cod));
  };
  for (const auto& x : xs)
    for (const auto& a : as) {
      const std::string ctx = c.describe(x) + "," + a.label;
      auto ua = a.carrier;
      both("inverse.hopf_left", ctx, adj.hopf_left(x, a),
           d.compose(f.nu_L_l(x, ua), d.tensor(d.id(adj.L(x)), r.eta(a))));
      both("inverse.hopf_right", ctx, adj.hopf_right(a, x),
           d.compose(f.nu_L_r(ua, x), d.tensor(r.eta(a), d.id(adj.L(x)))));
      both("inverse.cohopf_left", ctx, b.cohopf_left(x, a),
           d.compose(d.tensor(d.id(r.obj(x)), adj.eps(a)), f.nu_R_l(x, ua)));
      both("inverse.cohopf_right", ctx, b.cohopf_right(a, x),
           d.compose(d.tensor(adj.eps(a), d.id(r.obj(x))), f.nu_R_r(ua, x)));
    }
  return rep;
}

/// The unit (η^r, ε^l) : Id ⇒ (RU, LU) on the algebra side and the counit
/// (ε^r, η^l) : (UR, UL) ⇒ Id on the base, with their LN checks.
template <class C>
LawReport check_lindist_adjunction(const BiHopfTriple<C>& b, const LinDistFunctor<C, EMCategory<C>>& f,
                                   const std::vector<typename C::Obj>& xs, const std::vector<TAlgebra<C>>& as) {
  auto adj = b.adj;
  const C& c = adj->cat_c();
  const auto& d = adj->cat_d();
  auto u = degenerate_lindist(forgetful_functor(adj));
  auto id_d = degenerate_lindist(identity_functor(d));
  auto id_c = degenerate_lindist(identity_functor(c));
  auto fu = compose_lindist(d, u, f);  // (RU, LU) on the algebra side
  auto uf = compose_lindist(c, f, u);  // (UR, UL) on the base
  LawReport rep;
  LinDistNatTrans<EMCategory<C>, EMCategory<C>> unit{[r = b.right](const TAlgebra<C>& a) { return r.eta(a); },
                                                     [adj](const TAlgebra<C>& a) { return adj->eps(a); }};
  rep.merge(check_lindist_nat(d, d, unit, id_d, fu, as), "unit.");
  LinDistNatTrans<C, C> counit{[r = b.right](const typename C::Obj& x) { return r.eps(x); },
                               [adj](const typename C::Obj& x) { return adj->eta(x); }};
  rep.merge(check_lindist_nat(c, c, counit, uf, id_c, xs), "counit.");
  return rep;
}

}  // namespace catfrob

#endif  // CATFROB_LINDIST_HPP
