#ifndef CATFROB_ADJUNCTION_HPP
#define CATFROB_ADJUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "algebra_objects.hpp"
#include "eilenberg_moore.hpp"
#include "inverse_cache.hpp"

namespace catfrob {

/// The free/forgetful adjunction L ⊣ U between C and its category D of
/// T-algebras, with the comonoidal structure (L₂, L₀) of L. U is strict
/// monoidal, so u₂ and u₀ are identities.
template <class C>
class FreeForgetful {
 public:
  using D = EMCategory<C>;
  using CObj = typename C::Obj;
  using CMor = typename C::Mor;
  using DObj = typename D::Obj;
  using DMor = typename D::Mor;

  explicit FreeForgetful(MonadPtr<C> t) : d_(std::move(t)) {}

  const C& cat_c() const { return d_.base(); }
  const D& cat_d() const { return d_; }
  const ComonoidalMonad<C>& monad() const { return d_.monad(); }

  DObj L(const CObj& x) const { return d_.free(x); }
  DMor L(const CMor& f) const { return d_.trusted(L(cat_c().dom(f)), L(cat_c().cod(f)), monad().map(f)); }
  CObj U(const DObj& a) const { return a.carrier; }
  CMor U(const DMor& f) const { return f.underlying; }

  CMor eta(const CObj& x) const { return monad().eta(x); }
  DMor eps(const DObj& a) const { return d_.trusted(L(a.carrier), a, a.action); }

  DMor L2(const CObj& x, const CObj& y) const {
    return d_.trusted(L(cat_c().tensor(x, y)), d_.tensor(L(x), L(y)), monad().t2(x, y));
  }
  DMor L0() const { return d_.trusted(L(cat_c().unit()), d_.unit(), monad().t0()); }

  /// ℍˡ_{X,A} = (1⊗ε_A)∘L₂ : L(X⊗UA) → LX⊗A.
  DMor hopf_left(const CObj& x, const DObj& a) const {
    return d_.compose(d_.tensor(d_.id(L(x)), eps(a)), L2(x, U(a)));
  }

  /// ℍʳ_{A,X} = (ε_A⊗1)∘L₂ : L(UA⊗X) → A⊗LX.
  DMor hopf_right(const DObj& a, const CObj& x) const {
    return d_.compose(d_.tensor(eps(a), d_.id(L(x))), L2(U(a), x));
  }

  DMor hopf_left_inverse(const CObj& x, const DObj& a) const {
    return inverses_.get(d_, cat_c().describe(x) + "," + a.label, hopf_left(x, a), "left Hopf operator");
  }
  DMor hopf_right_inverse(const DObj& a, const CObj& x) const {
    return inverses_.get(d_, a.label + "," + cat_c().describe(x), hopf_right(a, x), "right Hopf operator");
  }

 private:
  D d_;
  InverseCache<D> inverses_;
};

/// (L𝟙, L₂, L₀): the comonoid that a Frobenius structure must extend.
template <class C>
ComonoidData<EMCategory<C>> unit_comonoid(const FreeForgetful<C>& adj) {
  auto one = adj.cat_c().unit();
  return {adj.L(one), adj.L2(one, one), adj.L0()};
}

/// The unit algebra and the free algebras on the given objects.
template <class C>
std::vector<TAlgebra<C>> algebra_probes(const FreeForgetful<C>& adj, const std::vector<typename C::Obj>& xs) {
  std::vector<TAlgebra<C>> out{adj.cat_d().unit()};
  for (const auto& x : xs) out.push_back(adj.L(x));
  return out;
}

/// The one-dimensional T-algebra on 𝟙 whose action T𝟙 → 𝟙 has matrix `chi`.
template <LinearCategory C>
TAlgebra<C> character_algebra(const FreeForgetful<C>& adj, const RationalMatrix& chi, std::string label) {
  const C& c = adj.cat_c();
  auto one = c.unit();
  return adj.cat_d().make_algebra(one, c.from_matrix(adj.monad().obj(one), one, chi), std::move(label));
}

/// Triangle identities and the (co)monoidality squares of the unit and counit.
template <class C>
LawReport check_adjunction(const FreeForgetful<C>& adj, const std::vector<typename C::Obj>& xs,
                           const std::vector<TAlgebra<C>>& as) {
  const C& c = adj.cat_c();
  const auto& d = adj.cat_d();
  LawReport r;
  for (const auto& x : xs) {
    check_equal(r, d, "adjunction.triangle", c.describe(x), d.compose(adj.eps(adj.L(x)), adj.L(adj.eta(x))),
                d.id(adj.L(x)));
    for (const auto& y : xs)
      check_equal(r, c, "adjunction.unit_comonoidal", c.describe(x) + "," + c.describe(y),
                  c.compose(adj.U(adj.L2(x, y)), adj.eta(c.tensor(x, y))), c.tensor(adj.eta(x), adj.eta(y)));
  }
  check_equal(r, c, "adjunction.unit_comonoidal", "1", c.compose(adj.U(adj.L0()), adj.eta(c.unit())),
              c.id(c.unit()));
  for (const auto& a : as) {
    check_equal(r, c, "adjunction.triangle", a.label, c.compose(adj.U(adj.eps(a)), adj.eta(adj.U(a))),
                c.id(a.carrier));
    for (const auto& b : as)
      check_equal(r, d, "adjunction.counit_comonoidal", a.label + "," + b.label,
                  d.compose(d.tensor(adj.eps(a), adj.eps(b)), adj.L2(a.carrier, b.carrier)), adj.eps(d.tensor(a, b)));
  }
  check_equal(r, d, "adjunction.counit_comonoidal", "1", adj.L0(), adj.eps(d.unit()));
  return r;
}

/// Relations satisfied by the Hopf operators of a comonoidal adjunction, in
/// both the left and right forms, together with their naturality (family h7).
template <class C>
LawReport check_hopf_lemma(const FreeForgetful<C>& adj, const std::vector<typename C::Obj>& xs,
                           const std::vector<TAlgebra<C>>& as, const std::vector<typename C::Mor>& mors) {
  const C& c = adj.cat_c();
  const auto& d = adj.cat_d();
  LawReport r;
  auto one_c = c.unit();
  auto one_d = d.unit();
  auto idL = [&](const typename C::Obj& x) { return d.id(adj.L(x)); };
  for (const auto& x : xs) {
    const std::string cx = c.describe(x);
    // h1: ℍˡ_{X,𝟙} = 1, ℍʳ_{𝟙,X} = 1
    check_equal(r, d, "hopf_lemma.h1.left", cx, adj.hopf_left(x, one_d), idL(x));
    check_equal(r, d, "hopf_lemma.h1.right", cx, adj.hopf_right(one_d, x), idL(x));
    for (const auto& y : xs) {
      const std::string cxy = cx + "," + c.describe(y);
      // h4: ℍˡ_{X,LY}∘L(1⊗η) = L₂, ℍʳ_{LX,Y}∘L(η⊗1) = L₂
      check_equal(r, d, "hopf_lemma.h4.left", cxy,
                  d.compose(adj.hopf_left(x, adj.L(y)), adj.L(c.tensor(c.id(x), adj.eta(y)))), adj.L2(x, y));
      check_equal(r, d, "hopf_lemma.h4.right", cxy,
                  d.compose(adj.hopf_right(adj.L(x), y), adj.L(c.tensor(adj.eta(x), c.id(y)))), adj.L2(x, y));
    }
  }
  for (const auto& a : as) {
    const std::string la = a.label;
    // h8: (L₀⊗1)∘ℍˡ_{𝟙,A} = ε_A, (1⊗L₀)∘ℍʳ_{A,𝟙} = ε_A
    check_equal(r, d, "hopf_lemma.h8.left", la, d.compose(d.tensor(adj.L0(), d.id(a)), adj.hopf_left(one_c, a)),
                adj.eps(a));
    check_equal(r, d, "hopf_lemma.h8.right", la,
                d.compose(d.tensor(d.id(a), adj.L0()), adj.hopf_right(a, one_c)), adj.eps(a));
    for (const auto& x : xs) {
      const std::string ctx = c.describe(x) + "," + la;
      auto ua = adj.U(a);
      // h5: Uℍˡ∘η = η⊗1, Uℍʳ∘η = 1⊗η
      check_equal(r, c, "hopf_lemma.h5.left", ctx, c.compose(adj.U(adj.hopf_left(x, a)), adj.eta(c.tensor(x, ua))),
                  c.tensor(adj.eta(x), c.id(ua)));
      check_equal(r, c, "hopf_lemma.h5.right", ctx,
                  c.compose(adj.U(adj.hopf_right(a, x)), adj.eta(c.tensor(ua, x))), c.tensor(c.id(ua), adj.eta(x)));
      for (const auto& y : xs) {
        const std::string cxy = c.describe(x) + "," + c.describe(y) + "," + la;
        auto xy = c.tensor(x, y);
        // h6: (L₂⊗1)∘ℍˡ_{X⊗Y,A} = (1⊗ℍˡ_{Y,A})∘L₂_{X,Y⊗UA}
        check_equal(r, d, "hopf_lemma.h6.left", cxy,
                    d.compose(d.tensor(adj.L2(x, y), d.id(a)), adj.hopf_left(xy, a)),
                    d.compose(d.tensor(idL(x), adj.hopf_left(y, a)), adj.L2(x, c.tensor(y, ua))));
        // (1⊗L₂)∘ℍʳ_{A,X⊗Y} = (ℍʳ_{A,X}⊗1)∘L₂_{UA⊗X,Y}
        check_equal(r, d, "hopf_lemma.h6.right", cxy,
                    d.compose(d.tensor(d.id(a), adj.L2(x, y)), adj.hopf_right(a, xy)),
                    d.compose(d.tensor(adj.hopf_right(a, x), idL(y)), adj.L2(c.tensor(ua, x), y)));
      }
      for (const auto& b : as) {
        const std::string cab = c.describe(x) + "," + la + "," + b.label;
        auto ub = adj.U(b);
        // h2: (ℍˡ_{X,A}⊗1)∘ℍˡ_{X⊗UA,B} = ℍˡ_{X,A⊗B}
        check_equal(r, d, "hopf_lemma.h2.left", cab,
                    d.compose(d.tensor(adj.hopf_left(x, a), d.id(b)), adj.hopf_left(c.tensor(x, ua), b)),
                    adj.hopf_left(x, d.tensor(a, b)));
        // (1⊗ℍʳ_{B,X})∘ℍʳ_{A,UB⊗X} = ℍʳ_{A⊗B,X}
        check_equal(r, d, "hopf_lemma.h2.right", cab,
                    d.compose(d.tensor(d.id(a), adj.hopf_right(b, x)), adj.hopf_right(a, c.tensor(ub, x))),
                    adj.hopf_right(d.tensor(a, b), x));
        // h3: (ℍʳ_{A,X}⊗1)∘ℍˡ_{UA⊗X,B} = (1⊗ℍˡ_{X,B})∘ℍʳ_{A,X⊗UB}
        check_equal(r, d, "hopf_lemma.h3", cab,
                    d.compose(d.tensor(adj.hopf_right(a, x), d.id(b)), adj.hopf_left(c.tensor(ua, x), b)),
                    d.compose(d.tensor(d.id(a), adj.hopf_left(x, b)), adj.hopf_right(a, c.tensor(x, ub))));
      }
    }
  }
  // h7: naturality in X (along probe maps f) and in A (along counits ε_A : LUA → A)
  std::vector<typename FreeForgetful<C>::DMor> dmors;
  for (const auto& a : as) dmors.push_back(adj.eps(a));
  for (const auto& f : mors) dmors.push_back(adj.L(f));
  for (const auto& f : mors) {
    auto x = c.dom(f);
    auto x2 = c.cod(f);
    for (const auto& g : dmors) {
      auto a = d.dom(g);
      auto a2 = d.cod(g);
      const std::string ctx = c.describe(x) + "->" + c.describe(x2) + "," + a.label + "->" + a2.label;
      check_equal(r, d, "hopf_lemma.h7.left", ctx,
                  d.compose(adj.hopf_left(x2, a2), adj.L(c.tensor(f, adj.U(g)))),
                  d.compose(d.tensor(adj.L(f), g), adj.hopf_left(x, a)));
      check_equal(r, d, "hopf_lemma.h7.right", ctx,
                  d.compose(adj.hopf_right(a2, x2), adj.L(c.tensor(adj.U(g), f))),
                  d.compose(d.tensor(g, adj.L(f)), adj.hopf_right(a, x)));
    }
  }
  return r;
}

}  // namespace catfrob

#endif  // CATFROB_ADJUNCTION_HPP
