#include "gpd/fiber_product.hpp"

#include <algorithm>

namespace gpd {

namespace {

template <typename T>
std::uint32_t lex_find(const std::vector<T>& sorted, const T& value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return UINT32_MAX;
  return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

object_id fiber_product_bundle::find_object(object_id a, arrow_id x,
                                            object_id b) const {
  return lex_find(*objects, fp_object{a, x, b});
}

arrow_id fiber_product_bundle::find_arrow(arrow_id y, object_id at,
                                          arrow_id z) const {
  return lex_find(*arrows, fp_arrow{y, at, z});
}

natural_transformation fiber_product_bundle::canonical_transformation() const {
  natural_transformation nt;
  nt.src = compose_strict(pi1, input_f);
  nt.tgt = compose_strict(pi2, input_g);
  nt.comp.reserve(objects->size());
  for (const fp_object& o : *objects) nt.comp.push_back(o.mid);
  return nt;
}

fiber_product_bundle fiber_product(const strict_morphism& f,
                                   const strict_morphism& g) {
  if (!same_groupoid(f.cod, g.cod))
    fail(errc::codomain_mismatch,
         "fiber product inputs have different codomains");
  const finite_groupoid& F = *f.dom;
  const finite_groupoid& G = *g.dom;
  const finite_groupoid& H = *f.cod;

  // Right-factor objects bucketed by their image.
  std::vector<std::vector<object_id>> g_fiber(H.object_count());
  for (object_id b = 0; b < G.object_count(); ++b)
    g_fiber[g.f0[b]].push_back(b);

  auto objects = std::make_shared<std::vector<fp_object>>();
  for (object_id a = 0; a < F.object_count(); ++a)
    for (arrow_id x : H.arrows_from(f.f0[a]))
      for (object_id b : g_fiber[H.target(x)])
        objects->push_back({a, x, b});

  // Objects bucketed by their left component, ascending ids.
  std::vector<std::vector<object_id>> obj_by_left(F.object_count());
  std::size_t n_arrows = 0;
  for (object_id o = 0; o < objects->size(); ++o) {
    obj_by_left[(*objects)[o].left].push_back(o);
    n_arrows += F.arrows_from((*objects)[o].left).size() *
                G.arrows_from((*objects)[o].right).size();
  }
  if (n_arrows > product_arrow_cap)
    fail(errc::desk_scale_exceeded,
         "fiber product would have " + std::to_string(n_arrows) + " arrows");

  auto arrows = std::make_shared<std::vector<fp_arrow>>();
  arrows->reserve(n_arrows);
  for (arrow_id y = 0; y < F.arrow_count(); ++y)
    for (object_id o : obj_by_left[F.source(y)])
      for (arrow_id z : G.arrows_from((*objects)[o].right))
        arrows->push_back({y, o, z});

  fiber_product_bundle bundle;
  bundle.input_f = f;
  bundle.input_g = g;
  bundle.objects = objects;
  bundle.arrows = arrows;

  groupoid_ptr fd = f.dom, gd = g.dom, hc = f.cod;
  finite_groupoid::parts p;
  p.name = F.name() + "x" + G.name();
  p.n_objects = static_cast<std::uint32_t>(objects->size());
  p.src.reserve(arrows->size());
  p.tgt.reserve(arrows->size());
  auto f1 = f.f1;
  auto g1 = g.f1;
  auto target_of = [&](const fp_arrow& ar) {
    const fp_object& o = (*objects)[ar.at];
    arrow_id mid = H.compose(H.inverse(f1[ar.left]),
                             H.compose(o.mid, g1[ar.right]));
    return lex_find(*objects,
                    fp_object{F.target(ar.left), mid, G.target(ar.right)});
  };
  for (const fp_arrow& ar : *arrows) {
    p.src.push_back(ar.at);
    p.tgt.push_back(target_of(ar));
  }
  p.unit.reserve(objects->size());
  for (object_id o = 0; o < objects->size(); ++o)
    p.unit.push_back(lex_find(
        *arrows, fp_arrow{F.unit((*objects)[o].left), o,
                          G.unit((*objects)[o].right)}));
  p.inverse.reserve(arrows->size());
  for (arrow_id x = 0; x < arrows->size(); ++x) {
    const fp_arrow& ar = (*arrows)[x];
    p.inverse.push_back(lex_find(
        *arrows, fp_arrow{F.inverse(ar.left), p.tgt[x], G.inverse(ar.right)}));
  }
  p.compose = [objects, arrows, fd, gd](arrow_id u, arrow_id v) {
    const fp_arrow& a = (*arrows)[u];
    const fp_arrow& b = (*arrows)[v];
    return lex_find(*arrows, fp_arrow{fd->compose(a.left, b.left), a.at,
                                      gd->compose(a.right, b.right)});
  };
  bundle.total = finite_groupoid::from_parts(std::move(p));

  bundle.pi1.dom = bundle.total;
  bundle.pi1.cod = f.dom;
  bundle.pi2.dom = bundle.total;
  bundle.pi2.cod = g.dom;
  for (const fp_object& o : *objects) {
    bundle.pi1.f0.push_back(o.left);
    bundle.pi2.f0.push_back(o.right);
  }
  for (const fp_arrow& ar : *arrows) {
    bundle.pi1.f1.push_back(ar.left);
    bundle.pi2.f1.push_back(ar.right);
  }
  return bundle;
}

object_id strict_fiber_product_bundle::find_object(object_id a,
                                                   object_id b) const {
  return lex_find(*objects, sfp_object{a, b});
}

arrow_id strict_fiber_product_bundle::find_arrow(arrow_id x,
                                                 arrow_id y) const {
  return lex_find(*arrows, sfp_arrow{x, y});
}

strict_fiber_product_bundle strict_fiber_product(const strict_morphism& f1,
                                                 const strict_morphism& f2) {
  if (!same_groupoid(f1.cod, f2.cod))
    fail(errc::codomain_mismatch,
         "strict fiber product inputs have different codomains");
  const finite_groupoid& A = *f1.dom;
  const finite_groupoid& B = *f2.dom;

  std::vector<std::vector<object_id>> fiber0(f1.cod->object_count());
  for (object_id b = 0; b < B.object_count(); ++b)
    fiber0[f2.f0[b]].push_back(b);
  auto objects = std::make_shared<std::vector<sfp_object>>();
  for (object_id a = 0; a < A.object_count(); ++a)
    for (object_id b : fiber0[f1.f0[a]]) objects->push_back({a, b});

  std::vector<std::vector<arrow_id>> fiber1(f1.cod->arrow_count());
  for (arrow_id y = 0; y < B.arrow_count(); ++y)
    fiber1[f2.f1[y]].push_back(y);
  std::size_t n_arrows = 0;
  for (arrow_id x = 0; x < A.arrow_count(); ++x)
    n_arrows += fiber1[f1.f1[x]].size();
  if (n_arrows > product_arrow_cap)
    fail(errc::desk_scale_exceeded, "strict fiber product would have " +
                                        std::to_string(n_arrows) + " arrows");
  auto arrows = std::make_shared<std::vector<sfp_arrow>>();
  arrows->reserve(n_arrows);
  for (arrow_id x = 0; x < A.arrow_count(); ++x)
    for (arrow_id y : fiber1[f1.f1[x]]) arrows->push_back({x, y});

  strict_fiber_product_bundle bundle;
  bundle.input_f = f1;
  bundle.input_g = f2;
  bundle.objects = objects;
  bundle.arrows = arrows;

  groupoid_ptr ad = f1.dom, bd = f2.dom;
  finite_groupoid::parts p;
  p.name = A.name() + "x~" + B.name();
  p.n_objects = static_cast<std::uint32_t>(objects->size());
  for (const sfp_arrow& ar : *arrows) {
    p.src.push_back(lex_find(*objects,
                             sfp_object{A.source(ar.left), B.source(ar.right)}));
    p.tgt.push_back(lex_find(*objects,
                             sfp_object{A.target(ar.left), B.target(ar.right)}));
  }
  for (const sfp_object& o : *objects)
    p.unit.push_back(
        lex_find(*arrows, sfp_arrow{A.unit(o.left), B.unit(o.right)}));
  for (const sfp_arrow& ar : *arrows)
    p.inverse.push_back(
        lex_find(*arrows, sfp_arrow{A.inverse(ar.left), B.inverse(ar.right)}));
  p.compose = [arrows, ad, bd](arrow_id u, arrow_id v) {
    const sfp_arrow& a = (*arrows)[u];
    const sfp_arrow& b = (*arrows)[v];
    return lex_find(*arrows, sfp_arrow{ad->compose(a.left, b.left),
                                       bd->compose(a.right, b.right)});
  };
  bundle.total = finite_groupoid::from_parts(std::move(p));

  bundle.pi1.dom = bundle.total;
  bundle.pi1.cod = f1.dom;
  bundle.pi2.dom = bundle.total;
  bundle.pi2.cod = f2.dom;
  for (const sfp_object& o : *objects) {
    bundle.pi1.f0.push_back(o.left);
    bundle.pi2.f0.push_back(o.right);
  }
  for (const sfp_arrow& ar : *arrows) {
    bundle.pi1.f1.push_back(ar.left);
    bundle.pi2.f1.push_back(ar.right);
  }
  return bundle;
}

strict_morphism embed_q(const strict_fiber_product_bundle& sfp,
                        const fiber_product_bundle& fp) {
  if (!sfp.input_f.equal(fp.input_f) || !sfp.input_g.equal(fp.input_g))
    fail(errc::mismatched_inputs,
         "the two products were not built from the same pair of morphisms");
  const strict_morphism& f1 = sfp.input_f;
  const finite_groupoid& H = *f1.cod;
  strict_morphism q;
  q.dom = sfp.total;
  q.cod = fp.total;
  q.f0.reserve(sfp.objects->size());
  for (const sfp_object& o : *sfp.objects)
    q.f0.push_back(fp.find_object(o.left, H.unit(f1.f0[o.left]), o.right));
  q.f1.reserve(sfp.arrows->size());
  for (const sfp_arrow& ar : *sfp.arrows) {
    object_id a = sfp.input_f.dom->source(ar.left);
    object_id b = sfp.input_g.dom->source(ar.right);
    q.f1.push_back(fp.find_arrow(
        ar.left, fp.find_object(a, H.unit(f1.f0[a]), b), ar.right));
  }
  return q;
}

namespace {

void check_wiring(const strict_morphism& f, const strict_morphism& g,
                  const strict_morphism& u, const strict_morphism& v) {
  if (!same_groupoid(f.cod, g.cod) || !same_groupoid(g.dom, u.dom) ||
      !same_groupoid(u.cod, v.cod))
    fail(errc::wiring_mismatch,
         "the four morphisms do not fit the re-association diagram");
}

bool mutually_inverse(const strict_morphism& fwd, const strict_morphism& bwd) {
  if (!is_isomorphism(fwd) || !is_isomorphism(bwd)) return false;
  return compose_strict(fwd, bwd)
             .equal(strict_morphism::identity(fwd.dom)) &&
         compose_strict(bwd, fwd).equal(strict_morphism::identity(bwd.dom));
}

}  // namespace

assoc_iso_result assoc_iso(const strict_morphism& f, const strict_morphism& g,
                           const strict_morphism& u, const strict_morphism& v) {
  check_wiring(f, g, u, v);
  assoc_iso_result res;

  // strict side
  res.strict_inner_left = strict_fiber_product(f, g);
  res.strict_outer_left =
      strict_fiber_product(compose_strict(res.strict_inner_left.pi2, u), v);
  res.strict_inner_right = strict_fiber_product(u, v);
  res.strict_outer_right =
      strict_fiber_product(f, compose_strict(res.strict_inner_right.pi1, g));

  auto& sil = res.strict_inner_left;
  auto& sol = res.strict_outer_left;
  auto& sir = res.strict_inner_right;
  auto& sor = res.strict_outer_right;

  res.strict_forward.dom = sol.total;
  res.strict_forward.cod = sor.total;
  for (const sfp_object& o : *sol.objects) {
    sfp_object ab = sil.object_decode(o.left);
    res.strict_forward.f0.push_back(
        sor.find_object(ab.left, sir.find_object(ab.right, o.right)));
  }
  for (const sfp_arrow& ar : *sol.arrows) {
    sfp_arrow xy = sil.arrow_decode(ar.left);
    res.strict_forward.f1.push_back(
        sor.find_arrow(xy.left, sir.find_arrow(xy.right, ar.right)));
  }
  res.strict_backward.dom = sor.total;
  res.strict_backward.cod = sol.total;
  for (const sfp_object& o : *sor.objects) {
    sfp_object bm = sir.object_decode(o.right);
    res.strict_backward.f0.push_back(
        sol.find_object(sil.find_object(o.left, bm.left), bm.right));
  }
  for (const sfp_arrow& ar : *sor.arrows) {
    sfp_arrow yz = sir.arrow_decode(ar.right);
    res.strict_backward.f1.push_back(
        sol.find_arrow(sil.find_arrow(ar.left, yz.left), yz.right));
  }

  // weak side
  res.weak_inner_left = fiber_product(f, g);
  res.weak_outer_left =
      fiber_product(compose_strict(res.weak_inner_left.pi2, u), v);
  res.weak_inner_right = fiber_product(u, v);
  res.weak_outer_right =
      fiber_product(f, compose_strict(res.weak_inner_right.pi1, g));

  auto& wil = res.weak_inner_left;
  auto& wol = res.weak_outer_left;
  auto& wir = res.weak_inner_right;
  auto& wor = res.weak_outer_right;

  res.weak_forward.dom = wol.total;
  res.weak_forward.cod = wor.total;
  for (const fp_object& o : *wol.objects) {
    fp_object asb = wil.object_decode(o.left);  // (a, s, b)
    res.weak_forward.f0.push_back(wor.find_object(
        asb.left, asb.mid, wir.find_object(asb.right, o.mid, o.right)));
  }
  for (const fp_arrow& ar : *wol.arrows) {
    fp_arrow xy = wil.arrow_decode(ar.left);  // (x, (a,s,b), y)
    fp_object src_o = wol.object_decode(ar.at);
    fp_object asb = wil.object_decode(src_o.left);
    object_id inner_at = wir.find_object(asb.right, src_o.mid, src_o.right);
    res.weak_forward.f1.push_back(
        wor.find_arrow(xy.left, res.weak_forward.f0[ar.at],
                       wir.find_arrow(xy.right, inner_at, ar.right)));
  }
  res.weak_backward.dom = wor.total;
  res.weak_backward.cod = wol.total;
  for (const fp_object& o : *wor.objects) {
    fp_object btm = wir.object_decode(o.right);  // (b, t, m)
    res.weak_backward.f0.push_back(
        wol.find_object(wil.find_object(o.left, o.mid, btm.left), btm.mid,
                        btm.right));
  }
  for (const fp_arrow& ar : *wor.arrows) {
    fp_arrow yz = wir.arrow_decode(ar.right);  // (y, (b,t,m), z)
    fp_object src_o = wor.object_decode(ar.at);
    fp_object btm = wir.object_decode(src_o.right);
    object_id inner_at = wil.find_object(src_o.left, src_o.mid, btm.left);
    res.weak_backward.f1.push_back(
        wol.find_arrow(wil.find_arrow(ar.left, inner_at, yz.left),
                       res.weak_backward.f0[ar.at], yz.right));
  }

  // verticals: strict outer -> weak outer on each side
  const finite_groupoid& G = *f.cod;
  const finite_groupoid& L = *u.cod;
  res.q_left.dom = sol.total;
  res.q_left.cod = wol.total;
  for (const sfp_object& o : *sol.objects) {
    sfp_object ab = sil.object_decode(o.left);
    object_id inner = wil.find_object(ab.left, G.unit(f.f0[ab.left]), ab.right);
    res.q_left.f0.push_back(
        wol.find_object(inner, L.unit(u.f0[ab.right]), o.right));
  }
  for (arrow_id i = 0; i < sol.arrows->size(); ++i) {
    const sfp_arrow& ar = (*sol.arrows)[i];
    sfp_arrow xy = sil.arrow_decode(ar.left);
    object_id src_obj = sol.total->source(i);
    sfp_object src_dec = sol.object_decode(src_obj);
    sfp_object ab = sil.object_decode(src_dec.left);
    object_id inner_at =
        wil.find_object(ab.left, G.unit(f.f0[ab.left]), ab.right);
    res.q_left.f1.push_back(
        wol.find_arrow(wil.find_arrow(xy.left, inner_at, xy.right),
                       res.q_left.f0[src_obj], ar.right));
  }
  res.q_right.dom = sor.total;
  res.q_right.cod = wor.total;
  for (const sfp_object& o : *sor.objects) {
    sfp_object bm = sir.object_decode(o.right);
    object_id inner = wir.find_object(bm.left, L.unit(u.f0[bm.left]), bm.right);
    res.q_right.f0.push_back(
        wor.find_object(o.left, G.unit(f.f0[o.left]), inner));
  }
  for (arrow_id i = 0; i < sor.arrows->size(); ++i) {
    const sfp_arrow& ar = (*sor.arrows)[i];
    sfp_arrow yz = sir.arrow_decode(ar.right);
    object_id src_obj = sor.total->source(i);
    sfp_object src_dec = sor.object_decode(src_obj);
    sfp_object bm = sir.object_decode(src_dec.right);
    object_id inner_at =
        wir.find_object(bm.left, L.unit(u.f0[bm.left]), bm.right);
    res.q_right.f1.push_back(
        wor.find_arrow(ar.left, res.q_right.f0[src_obj],
                       wir.find_arrow(yz.left, inner_at, yz.right)));
  }

  res.isomorphisms_verified =
      mutually_inverse(res.strict_forward, res.strict_backward) &&
      mutually_inverse(res.weak_forward, res.weak_backward);
  res.square_commutes =
      compose_strict(res.q_left, res.weak_forward)
          .equal(compose_strict(res.strict_forward, res.q_right));
  return res;
}

unit_iso_result unit_iso(const strict_morphism& f) {
  unit_iso_result res;
  strict_morphism id_h = strict_morphism::identity(f.cod);
  res.left = strict_fiber_product(id_h, f);
  res.right = strict_fiber_product(f, id_h);
  res.left_iso = res.left.pi2;
  res.right_iso = res.right.pi1;
  res.verified = is_isomorphism(res.left_iso) && is_isomorphism(res.right_iso);
  return res;
}

}  // namespace gpd
