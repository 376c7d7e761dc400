#include "gpd/composition.hpp"

namespace gpd {

h_composite h_compose(const gen_morphism& m, const gen_morphism& n) {
  if (m.mode() != n.mode())
    fail(errc::mode_mismatch, "spans have different modes");
  if (!same_groupoid(m.base_cod(), n.base_dom()))
    fail(errc::base_mismatch,
         "middle groupoid of the two spans does not match");
  h_composite res;
  if (m.mode() == mor_mode::general) {
    res.middle_fp = std::make_shared<fiber_product_bundle>(
        fiber_product(m.u(), n.psi()));
    res.morphism = gen_morphism(compose_strict(res.middle_fp->pi1, m.psi()),
                                compose_strict(res.middle_fp->pi2, n.u()),
                                mor_mode::general);
  } else {
    res.middle_sfp = std::make_shared<strict_fiber_product_bundle>(
        strict_fiber_product(m.u(), n.psi()));
    res.morphism = gen_morphism(compose_strict(res.middle_sfp->pi1, m.psi()),
                                compose_strict(res.middle_sfp->pi2, n.u()),
                                mor_mode::full);
  }
  return res;
}

namespace {

struct arrow_pair_context {
  h_composite c1, c2;
  std::shared_ptr<const mor_carrier> carrier;
};

arrow_pair_context composite_context(const mor_arrow& a, const mor_arrow& b) {
  arrow_pair_context ctx;
  ctx.c1 = h_compose(a.src(), b.src());
  ctx.c2 = h_compose(a.tgt(), b.tgt());
  ctx.carrier = make_carrier(ctx.c1.morphism, ctx.c2.morphism);
  return ctx;
}

// Lift objects for the full-mode composition at a carrier object: j12 runs
// over the phi2-fiber of phi1(j1), j21 over the phi1-fiber of phi2(j2).
struct full_lift {
  object_id j12, j21;
};

std::vector<full_lift> full_lifts(const gen_morphism& n1,
                                  const gen_morphism& n2, object_id j1,
                                  object_id j2, bool first_only) {
  std::vector<full_lift> out;
  for (object_id j12 = 0; j12 < n2.apex()->object_count(); ++j12) {
    if (n2.psi().f0[j12] != n1.psi().f0[j1]) continue;
    for (object_id j21 = 0; j21 < n1.apex()->object_count(); ++j21) {
      if (n1.psi().f0[j21] != n2.psi().f0[j2]) continue;
      out.push_back({j12, j21});
      if (first_only) return out;
    }
  }
  return out;
}

}  // namespace

mor_arrow h_compose_arrows(const mor_arrow& a, const mor_arrow& b) {
  if (a.mode() != b.mode())
    fail(errc::mode_mismatch, "arrows have different modes");
  arrow_pair_context ctx = composite_context(a, b);
  const finite_groupoid& h = *a.src().base_cod();
  const finite_groupoid& n_cod = *b.src().base_cod();
  const gen_morphism& n1 = b.src();
  const gen_morphism& n2 = b.tgt();

  std::vector<arrow_id> alpha(ctx.carrier->object_count());
  for (object_id o = 0; o < ctx.carrier->object_count(); ++o) {
    carrier_obj c = ctx.carrier->object(o);
    if (a.mode() == mor_mode::general) {
      fp_object left = ctx.c1.middle_fp->object_decode(c.k1);   // (k1, x, j1)
      fp_object right = ctx.c2.middle_fp->object_decode(c.k2);  // (k2, y, j2)
      arrow_id av =
          a.value(a.carrier().find(left.left, c.mid, right.left));
      arrow_id w = h.compose(h.inverse(left.mid), h.compose(av, right.mid));
      alpha[o] = b.value(b.carrier().find(left.right, w, right.right));
    } else {
      sfp_object left = ctx.c1.middle_sfp->object_decode(c.k1);   // (k1, j1)
      sfp_object right = ctx.c2.middle_sfp->object_decode(c.k2);  // (k2, j2)
      arrow_id av =
          a.value(a.carrier().find(left.left, no_arrow, right.left));
      auto lifts = full_lifts(n1, n2, left.right, right.right, true);
      if (lifts.empty())
        fail(errc::internal_no_lift, "no lift object in the full mode");
      arrow_id y_alpha =
          preimage_arrow(n2.psi(), lifts[0].j12, right.right, av);
      alpha[o] = n_cod.compose(
          b.value(b.carrier().find(left.right, no_arrow, lifts[0].j12)),
          n2.u().f1[y_alpha]);
    }
  }
  return mor_arrow(ctx.c1.morphism, ctx.c2.morphism, ctx.carrier,
                   std::move(alpha));
}

bool h_compose_choice_independent(const mor_arrow& a, const mor_arrow& b) {
  mor_arrow composed = h_compose_arrows(a, b);
  if (a.mode() == mor_mode::general) return true;  // no choices made
  arrow_pair_context ctx = composite_context(a, b);
  const finite_groupoid& n_cod = *b.src().base_cod();
  const gen_morphism& n1 = b.src();
  const gen_morphism& n2 = b.tgt();
  for (object_id o = 0; o < ctx.carrier->object_count(); ++o) {
    carrier_obj c = ctx.carrier->object(o);
    sfp_object left = ctx.c1.middle_sfp->object_decode(c.k1);
    sfp_object right = ctx.c2.middle_sfp->object_decode(c.k2);
    arrow_id av = a.value(a.carrier().find(left.left, no_arrow, right.left));
    for (const full_lift& lift :
         full_lifts(n1, n2, left.right, right.right, false)) {
      arrow_id y_alpha = preimage_arrow(n2.psi(), lift.j12, right.right, av);
      arrow_id via_j12 = n_cod.compose(
          b.value(b.carrier().find(left.right, no_arrow, lift.j12)),
          n2.u().f1[y_alpha]);
      arrow_id x_alpha = preimage_arrow(n1.psi(), left.right, lift.j21, av);
      arrow_id via_j21 = n_cod.compose(
          n1.u().f1[x_alpha],
          b.value(b.carrier().find(lift.j21, no_arrow, right.right)));
      if (via_j12 != composed.value(o) || via_j21 != composed.value(o))
        return false;
    }
  }
  return true;
}

bool interchange_check(const mor_arrow& a1, const mor_arrow& a2,
                       const mor_arrow& b1, const mor_arrow& b2) {
  if (!a1.tgt().equal(a2.src()) || !b1.tgt().equal(b2.src()))
    fail(errc::not_composable, "the vertical composites are not defined");
  mor_arrow lhs =
      vertical_compose(h_compose_arrows(a1, b1), h_compose_arrows(a2, b2));
  mor_arrow rhs =
      h_compose_arrows(vertical_compose(a1, a2), vertical_compose(b1, b2));
  return lhs.equal(rhs);
}

associator_data associator_arrow(const gen_morphism& m1,
                                 const gen_morphism& m2,
                                 const gen_morphism& m3) {
  associator_data res;
  h_composite h23 = h_compose(m2, m3);
  h_composite right = h_compose(m1, h23.morphism);  // (m3∘m2)∘m1
  h_composite h12 = h_compose(m1, m2);
  h_composite left = h_compose(h12.morphism, m3);  // m3∘(m2∘m1)
  res.nested_right = right.morphism;
  res.nested_left = left.morphism;

  // Re-association K1 x (K2 x K3) -> (K1 x K2) x K3 on decoded tuples.
  strict_morphism& rho = res.reassoc;
  rho.dom = right.morphism.apex();
  rho.cod = left.morphism.apex();
  if (m1.mode() == mor_mode::general) {
    const fiber_product_bundle& outer_r = *right.middle_fp;  // K1 x inner23
    const fiber_product_bundle& inner23 = *h23.middle_fp;    // K2 x K3
    const fiber_product_bundle& outer_l = *left.middle_fp;   // inner12 x K3
    const fiber_product_bundle& inner12 = *h12.middle_fp;    // K1 x K2
    for (object_id o = 0; o < outer_r.objects->size(); ++o) {
      fp_object d = outer_r.object_decode(o);          // (k1, x, i23)
      fp_object e = inner23.object_decode(d.right);    // (k2, y, k3)
      rho.f0.push_back(outer_l.find_object(
          inner12.find_object(d.left, d.mid, e.left), e.mid, e.right));
    }
    for (arrow_id x = 0; x < outer_r.arrows->size(); ++x) {
      fp_arrow ar = outer_r.arrow_decode(x);         // (w1, at, W23)
      fp_arrow w23 = inner23.arrow_decode(ar.right);  // (w2, at23, w3)
      fp_object src_d = outer_r.object_decode(ar.at);
      fp_object e = inner23.object_decode(src_d.right);
      object_id at12 = inner12.find_object(src_d.left, src_d.mid, e.left);
      rho.f1.push_back(outer_l.find_arrow(
          inner12.find_arrow(ar.left, at12, w23.left), rho.f0[ar.at],
          w23.right));
    }
  } else {
    const strict_fiber_product_bundle& outer_r = *right.middle_sfp;
    const strict_fiber_product_bundle& inner23 = *h23.middle_sfp;
    const strict_fiber_product_bundle& outer_l = *left.middle_sfp;
    const strict_fiber_product_bundle& inner12 = *h12.middle_sfp;
    for (object_id o = 0; o < outer_r.objects->size(); ++o) {
      sfp_object d = outer_r.object_decode(o);
      sfp_object e = inner23.object_decode(d.right);
      rho.f0.push_back(outer_l.find_object(
          inner12.find_object(d.left, e.left), e.right));
    }
    for (arrow_id x = 0; x < outer_r.arrows->size(); ++x) {
      sfp_arrow ar = outer_r.arrow_decode(x);
      sfp_arrow w23 = inner23.arrow_decode(ar.right);
      rho.f1.push_back(outer_l.find_arrow(
          inner12.find_arrow(ar.left, w23.left), w23.right));
    }
  }
  res.arrow = induced_arrow(res.nested_right, res.nested_left, rho);
  return res;
}

bool associator_transport_check(const mor_arrow& a1, const mor_arrow& a2,
                                const mor_arrow& a3) {
  associator_data src_assoc =
      associator_arrow(a1.src(), a2.src(), a3.src());
  associator_data tgt_assoc =
      associator_arrow(a1.tgt(), a2.tgt(), a3.tgt());
  mor_arrow right_way = h_compose_arrows(a1, h_compose_arrows(a2, a3));
  mor_arrow left_way = h_compose_arrows(h_compose_arrows(a1, a2), a3);

  // Naturality square of the associator.
  mor_arrow via_tgt = vertical_compose(right_way, tgt_assoc.arrow);
  mor_arrow via_src = vertical_compose(src_assoc.arrow, left_way);
  if (!via_tgt.equal(via_src)) return false;

  // Pointwise identification of the two triple composites under the
  // re-association of their carriers.
  std::vector<object_id> src_back(src_assoc.reassoc.cod->object_count());
  for (object_id i = 0; i < src_assoc.reassoc.f0.size(); ++i)
    src_back[src_assoc.reassoc.f0[i]] = i;
  std::vector<object_id> tgt_back(tgt_assoc.reassoc.cod->object_count());
  for (object_id i = 0; i < tgt_assoc.reassoc.f0.size(); ++i)
    tgt_back[tgt_assoc.reassoc.f0[i]] = i;
  const mor_carrier& lc = left_way.carrier();
  for (object_id o = 0; o < lc.object_count(); ++o) {
    carrier_obj c = lc.object(o);
    object_id ro =
        right_way.carrier().find(src_back[c.k1], c.mid, tgt_back[c.k2]);
    if (ro == no_object || right_way.value(ro) != left_way.value(o))
      return false;
  }
  return true;
}

mor_arrow unit_right_absorber(const gen_morphism& m) {
  gen_morphism mg = m.with_mode(mor_mode::general);
  gen_morphism unit =
      gen_morphism::identity(mg.base_dom()).with_mode(mor_mode::general);
  h_composite comp = h_compose(unit, mg);
  auto carrier = make_carrier(comp.morphism, mg);
  const finite_groupoid& base = *mg.base_dom();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);                      // (w, y, k')
    fp_object gxk = comp.middle_fp->object_decode(c.k1);     // (g, x, k)
    arrow_id path = base.compose(base.inverse(gxk.mid), c.mid);
    alpha[o] = mg.u().f1[preimage_arrow(mg.psi(), gxk.right, c.k2, path)];
  }
  return mor_arrow(comp.morphism, mg, carrier, std::move(alpha));
}

mor_arrow unit_left_absorber(const gen_morphism& m) {
  gen_morphism mg = m.with_mode(mor_mode::general);
  gen_morphism unit =
      gen_morphism::identity(mg.base_cod()).with_mode(mor_mode::general);
  h_composite comp = h_compose(mg, unit);
  auto carrier = make_carrier(comp.morphism, mg);
  const finite_groupoid& cod = *mg.base_cod();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);                    // (v, z, k')
    fp_object kxh = comp.middle_fp->object_decode(c.k1);   // (k, x, h)
    alpha[o] = cod.compose(
        cod.inverse(kxh.mid),
        mg.u().f1[preimage_arrow(mg.psi(), kxh.left, c.k2, c.mid)]);
  }
  return mor_arrow(comp.morphism, mg, carrier, std::move(alpha));
}

}  // namespace gpd
