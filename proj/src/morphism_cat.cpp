#include "gpd/morphism_cat.hpp"

#include <algorithm>
#include <map>

namespace gpd {

gen_morphism::gen_morphism(strict_morphism psi, strict_morphism u,
                           mor_mode mode, bool check)
    : psi_(std::move(psi)), u_(std::move(u)), mode_(mode) {
  if (!same_groupoid(psi_.dom, u_.dom))
    fail(errc::domain_mismatch, "the two legs have different apexes");
  if (!check) return;
  if (mode_ == mor_mode::full) {
    full_equivalence_report rep = is_full_equivalence(psi_);
    if (!rep)
      fail(errc::not_an_equivalence,
           rep.equivalence.ok()
               ? "psi is not surjective on objects"
               : "psi is not an equivalence: " + rep.equivalence.detail);
  } else {
    equivalence_report rep = is_equivalence(psi_);
    if (!rep)
      fail(errc::not_an_equivalence,
           "psi is not an equivalence: " + rep.detail);
  }
}

gen_morphism gen_morphism::identity(const groupoid_ptr& g) {
  strict_morphism id = strict_morphism::identity(g);
  return gen_morphism(id, id, mor_mode::full, false);
}

gen_morphism gen_morphism::with_mode(mor_mode m) const {
  if (m == mode_) return *this;
  return gen_morphism(psi_, u_, m, m == mor_mode::full);
}

bool gen_morphism::equal(const gen_morphism& other) const {
  return mode_ == other.mode_ && psi_.equal(other.psi_) && u_.equal(other.u_);
}

carrier_obj mor_carrier::object(object_id o) const {
  if (mode == mor_mode::general) {
    fp_object d = fp->object_decode(o);
    return {d.left, d.mid, d.right};
  }
  sfp_object d = sfp->object_decode(o);
  return {d.left, no_arrow, d.right};
}

object_id mor_carrier::find(object_id k1, arrow_id mid, object_id k2) const {
  if (mode == mor_mode::general) return fp->find_object(k1, mid, k2);
  return sfp->find_object(k1, k2);
}

std::shared_ptr<const mor_carrier> make_carrier(const gen_morphism& m1,
                                                const gen_morphism& m2) {
  auto c = std::make_shared<mor_carrier>();
  c->mode = m1.mode();
  if (c->mode == mor_mode::general)
    c->fp = fiber_product(m1.psi(), m2.psi());
  else
    c->sfp = strict_fiber_product(m1.psi(), m2.psi());
  return c;
}

namespace {

void check_parallel(const gen_morphism& m1, const gen_morphism& m2) {
  if (m1.mode() != m2.mode())
    fail(errc::mode_mismatch, "spans have different modes");
  if (!same_groupoid(m1.base_dom(), m2.base_dom()) ||
      !same_groupoid(m1.base_cod(), m2.base_cod()))
    fail(errc::base_mismatch, "spans are not parallel");
}

}  // namespace

mor_arrow::mor_arrow(gen_morphism src, gen_morphism tgt,
                     std::shared_ptr<const mor_carrier> carrier,
                     std::vector<arrow_id> alpha, bool check)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      carrier_(std::move(carrier)),
      alpha_(std::move(alpha)) {
  check_parallel(src_, tgt_);
  if (check) verify();
}

natural_transformation mor_arrow::as_nat_trans() const {
  natural_transformation nt;
  nt.src = compose_strict(carrier_->pi1(), src_.u());
  nt.tgt = compose_strict(carrier_->pi2(), tgt_.u());
  nt.comp = alpha_;
  return nt;
}

void mor_arrow::verify() const { as_nat_trans().verify(); }

bool mor_arrow::equal(const mor_arrow& other) const {
  return src_.equal(other.src_) && tgt_.equal(other.tgt_) &&
         alpha_ == other.alpha_;
}

std::vector<mor_arrow> enumerate_arrows(const gen_morphism& m1,
                                        const gen_morphism& m2) {
  check_parallel(m1, m2);
  auto carrier = make_carrier(m1, m2);
  strict_morphism leg1 = compose_strict(carrier->pi1(), m1.u());
  strict_morphism leg2 = compose_strict(carrier->pi2(), m2.u());
  std::vector<mor_arrow> out;
  for (natural_transformation& nt : enumerate_nat_trans(leg1, leg2))
    out.emplace_back(m1, m2, carrier, std::move(nt.comp), false);
  return out;
}

mor_arrow unit_arrow(const gen_morphism& m) {
  auto carrier = make_carrier(m, m);
  const finite_groupoid& base = *m.base_dom();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);
    arrow_id x = m.mode() == mor_mode::general
                     ? c.mid
                     : base.unit(m.psi().f0[c.k1]);
    arrow_id w = preimage_arrow(m.psi(), c.k1, c.k2, x);
    alpha[o] = m.u().f1[w];
  }
  return mor_arrow(m, m, carrier, std::move(alpha));
}

mor_arrow invert_arrow(const mor_arrow& a) {
  auto carrier = make_carrier(a.tgt(), a.src());
  const finite_groupoid& base = *a.src().base_dom();
  const finite_groupoid& cod = *a.src().base_cod();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);  // (k2, x, k1)
    arrow_id mid = a.mode() == mor_mode::general ? base.inverse(c.mid)
                                                 : no_arrow;
    object_id at = a.carrier().find(c.k2, mid, c.k1);
    alpha[o] = cod.inverse(a.value(at));
  }
  return mor_arrow(a.tgt(), a.src(), carrier, std::move(alpha));
}

namespace {

// All splitting witnesses of the object (k1, x, k3) through the middle span
// m2: pairs (object index in a1's carrier, object index in a2's carrier).
std::vector<std::pair<object_id, object_id>> splittings(
    const mor_arrow& a1, const mor_arrow& a2, const carrier_obj& c,
    bool first_only) {
  std::vector<std::pair<object_id, object_id>> out;
  const gen_morphism& m1 = a1.src();
  const gen_morphism& m2 = a1.tgt();
  const finite_groupoid& base = *m1.base_dom();
  if (m1.mode() == mor_mode::general) {
    for (object_id k2 = 0; k2 < m2.apex()->object_count(); ++k2) {
      object_id mid_obj = m2.psi().f0[k2];
      for (arrow_id x1 : base.hom(m1.psi().f0[c.k1], mid_obj)) {
        arrow_id x2 = base.compose(base.inverse(x1), c.mid);
        object_id o12 = a1.carrier().find(c.k1, x1, k2);
        object_id o23 = a2.carrier().find(k2, x2, c.k2);
        if (o12 == no_object || o23 == no_object) continue;
        out.emplace_back(o12, o23);
        if (first_only) return out;
      }
    }
  } else {
    for (object_id k2 = 0; k2 < m2.apex()->object_count(); ++k2) {
      if (m2.psi().f0[k2] != m1.psi().f0[c.k1]) continue;
      object_id o12 = a1.carrier().find(c.k1, no_arrow, k2);
      object_id o23 = a2.carrier().find(k2, no_arrow, c.k2);
      if (o12 == no_object || o23 == no_object) continue;
      out.emplace_back(o12, o23);
      if (first_only) return out;
    }
  }
  return out;
}

}  // namespace

mor_arrow vertical_compose(const mor_arrow& a1, const mor_arrow& a2) {
  if (!a1.tgt().equal(a2.src()))
    fail(errc::not_composable, "target of the first arrow differs from the "
                               "source of the second");
  auto carrier = make_carrier(a1.src(), a2.tgt());
  const finite_groupoid& cod = *a1.src().base_cod();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);
    auto w = splittings(a1, a2, c, true);
    if (w.empty())
      fail(errc::internal_no_splitting,
           "no splitting witness at carrier object " + std::to_string(o));
    alpha[o] = cod.compose(a1.value(w[0].first), a2.value(w[0].second));
  }
  return mor_arrow(a1.src(), a2.tgt(), carrier, std::move(alpha));
}

bool vertical_choice_independent(const mor_arrow& a1, const mor_arrow& a2) {
  if (!a1.tgt().equal(a2.src())) fail(errc::not_composable, "not composable");
  auto carrier = make_carrier(a1.src(), a2.tgt());
  const finite_groupoid& cod = *a1.src().base_cod();
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);
    auto ws = splittings(a1, a2, c, false);
    if (ws.empty()) return false;
    arrow_id first = cod.compose(a1.value(ws[0].first), a2.value(ws[0].second));
    for (const auto& [o12, o23] : ws)
      if (cod.compose(a1.value(o12), a2.value(o23)) != first) return false;
  }
  return true;
}

mor_arrow induced_arrow(const gen_morphism& m1, const gen_morphism& m2,
                        const strict_morphism& h) {
  check_parallel(m1, m2);
  if (!same_groupoid(h.dom, m1.apex()) || !same_groupoid(h.cod, m2.apex()))
    fail(errc::domain_mismatch, "mediating morphism has wrong shape");
  if (!compose_strict(h, m2.psi()).equal(m1.psi()) ||
      !compose_strict(h, m2.u()).equal(m1.u()))
    fail(errc::wiring_mismatch,
         "mediating morphism does not commute with the legs");
  auto carrier = make_carrier(m1, m2);
  const finite_groupoid& base = *m1.base_dom();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);
    arrow_id x = m1.mode() == mor_mode::general
                     ? c.mid
                     : base.unit(m1.psi().f0[c.k1]);
    alpha[o] = m2.u().f1[preimage_arrow(m2.psi(), h.f0[c.k1], c.k2, x)];
  }
  return mor_arrow(m1, m2, carrier, std::move(alpha));
}

mor_roster strict_morphism_roster(const groupoid_ptr& g,
                                  const groupoid_ptr& h) {
  mor_roster r;
  r.base_dom = g;
  r.base_cod = h;
  r.mode = mor_mode::general;
  strict_morphism id = strict_morphism::identity(g);
  for (strict_morphism& u : enumerate_functors(g, h))
    r.entries.emplace_back(id, std::move(u), mor_mode::general, false);
  return r;
}

refinement refinement_of(const groupoid_ptr& g,
                         const std::vector<std::uint32_t>& multiplicity) {
  if (multiplicity.size() != g->object_count())
    fail(errc::format_error, "multiplicity vector has wrong size");
  refinement r;
  for (object_id a = 0; a < g->object_count(); ++a) {
    if (multiplicity[a] == 0)
      fail(errc::format_error,
           "every object needs multiplicity at least one");
    for (std::uint32_t i = 0; i < multiplicity[a]; ++i)
      r.object_of.push_back(a);
  }
  const std::uint32_t n = static_cast<std::uint32_t>(r.object_of.size());

  finite_groupoid::parts p;
  p.name = g->name() + "~";
  p.n_objects = n;
  // Arrows: one copy of hom(object_of[a], object_of[b]) for every pair.
  std::vector<arrow_id> arrow_of;  // refined arrow -> g arrow
  std::vector<std::vector<arrow_id>> id_of(n, std::vector<arrow_id>());
  std::map<std::pair<std::pair<object_id, object_id>, arrow_id>, arrow_id>
      index;
  for (object_id a = 0; a < n; ++a)
    for (object_id b = 0; b < n; ++b)
      for (arrow_id x : g->hom(r.object_of[a], r.object_of[b])) {
        index[{{a, b}, x}] = static_cast<arrow_id>(arrow_of.size());
        arrow_of.push_back(x);
        p.src.push_back(a);
        p.tgt.push_back(b);
      }
  for (object_id a = 0; a < n; ++a)
    p.unit.push_back(index.at({{a, a}, g->unit(r.object_of[a])}));
  for (arrow_id i = 0; i < arrow_of.size(); ++i)
    p.inverse.push_back(
        index.at({{p.tgt[i], p.src[i]}, g->inverse(arrow_of[i])}));
  std::vector<object_id> src_copy = p.src, tgt_copy = p.tgt;
  p.compose = [g, arrow_of, index, src_copy, tgt_copy](arrow_id x,
                                                       arrow_id y) {
    return index.at(
        {{src_copy[x], tgt_copy[y]}, g->compose(arrow_of[x], arrow_of[y])});
  };
  r.apex = finite_groupoid::from_parts(std::move(p));
  r.fold.dom = r.apex;
  r.fold.cod = g;
  r.fold.f0 = r.object_of;
  r.fold.f1 = arrow_of;
  return r;
}

morphism_groupoid_result build_morphism_groupoid(const mor_roster& roster) {
  for (const gen_morphism& m : roster.entries) {
    if (m.mode() != roster.mode)
      fail(errc::mode_mismatch, "roster entry has wrong mode");
    if (!same_groupoid(m.base_dom(), roster.base_dom) ||
        !same_groupoid(m.base_cod(), roster.base_cod))
      fail(errc::base_mismatch, "roster entry has wrong base");
  }
  morphism_groupoid_result res;
  const std::uint32_t n = static_cast<std::uint32_t>(roster.entries.size());

  finite_groupoid::parts p;
  p.name = "Mor";
  p.n_objects = n;
  std::vector<std::vector<std::vector<mor_arrow>>> groups(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    groups[i].resize(n);
    for (std::uint32_t j = 0; j < n; ++j)
      groups[i][j] = enumerate_arrows(roster.entries[i], roster.entries[j]);
  }
  std::vector<std::vector<arrow_id>> first_id(n, std::vector<arrow_id>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      first_id[i][j] = static_cast<arrow_id>(res.arrow_decode.size());
      for (const mor_arrow& a : groups[i][j]) {
        res.arrow_decode.push_back(a);
        res.arrow_endpoints.emplace_back(i, j);
        p.src.push_back(i);
        p.tgt.push_back(j);
      }
    }

  auto locate = [&](std::uint32_t i, std::uint32_t j,
                    const std::vector<arrow_id>& alpha) {
    const auto& list = groups[i][j];
    for (std::size_t k = 0; k < list.size(); ++k)
      if (list[k].alpha() == alpha) return first_id[i][j] + (arrow_id)k;
    throw std::logic_error("composite arrow missing from enumerated hom set");
  };

  for (std::uint32_t i = 0; i < n; ++i)
    p.unit.push_back(
        locate(i, i, unit_arrow(roster.entries[i]).alpha()));
  for (arrow_id x = 0; x < res.arrow_decode.size(); ++x) {
    auto [i, j] = res.arrow_endpoints[x];
    p.inverse.push_back(locate(j, i, invert_arrow(res.arrow_decode[x]).alpha()));
  }
  // Composition is tabulated eagerly; rosters are desk scale by contract.
  const std::size_t total = res.arrow_decode.size();
  auto table = std::make_shared<std::vector<arrow_id>>(total * total, no_arrow);
  for (arrow_id x = 0; x < total; ++x)
    for (arrow_id y = 0; y < total; ++y) {
      if (res.arrow_endpoints[x].second != res.arrow_endpoints[y].first)
        continue;
      (*table)[x * total + y] =
          locate(res.arrow_endpoints[x].first, res.arrow_endpoints[y].second,
                 vertical_compose(res.arrow_decode[x], res.arrow_decode[y])
                     .alpha());
    }
  p.compose = [table, total](arrow_id x, arrow_id y) {
    return (*table)[x * total + y];
  };
  res.gpd = finite_groupoid::from_parts(std::move(p));
  return res;
}

namespace {

// q0 of the carriers of a pair of full-mode spans: strict object (k1,k2) ->
// index of (k1, 1, k2) in the general-mode carrier.
object_id q0_object(const gen_morphism& m1, const mor_carrier& strict_c,
                    const mor_carrier& general_c, object_id o) {
  carrier_obj c = strict_c.object(o);
  arrow_id unit = m1.base_dom()->unit(m1.psi().f0[c.k1]);
  return general_c.find(c.k1, unit, c.k2);
}

}  // namespace

mor_arrow embed_i(const mor_arrow& full_arrow) {
  if (full_arrow.mode() != mor_mode::full)
    fail(errc::not_full_mode, "embedding starts from a full-mode arrow");
  gen_morphism src = full_arrow.src().with_mode(mor_mode::general);
  gen_morphism tgt = full_arrow.tgt().with_mode(mor_mode::general);
  auto carrier = make_carrier(src, tgt);
  const mor_carrier& strict_c = full_arrow.carrier();
  const finite_groupoid& total = *carrier->total();
  const finite_groupoid& cod = *src.base_cod();
  strict_morphism leg1 = compose_strict(carrier->pi1(), src.u());
  strict_morphism leg2 = compose_strict(carrier->pi2(), tgt.u());

  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id b = 0; b < carrier->object_count(); ++b) {
    arrow_id chosen = no_arrow;
    for (object_id a0 = 0; a0 < strict_c.object_count() && chosen == no_arrow;
         ++a0) {
      object_id qa = q0_object(full_arrow.src(), strict_c, *carrier, a0);
      for (arrow_id x : total.hom(qa, b)) {
        chosen = cod.compose(
            cod.inverse(leg1.f1[x]),
            cod.compose(full_arrow.value(a0), leg2.f1[x]));
        break;
      }
    }
    if (chosen == no_arrow)
      fail(errc::internal_no_lift,
           "no connecting arrow from the strict carrier image");
    alpha[b] = chosen;
  }
  return mor_arrow(src, tgt, carrier, std::move(alpha));
}

mor_arrow restrict_i(const mor_arrow& general_arrow) {
  if (general_arrow.mode() != mor_mode::general)
    fail(errc::mode_mismatch, "restriction starts from a general-mode arrow");
  gen_morphism src = general_arrow.src().with_mode(mor_mode::full);
  gen_morphism tgt = general_arrow.tgt().with_mode(mor_mode::full);
  auto carrier = make_carrier(src, tgt);
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o)
    alpha[o] = general_arrow.value(
        q0_object(src, *carrier, general_arrow.carrier(), o));
  return mor_arrow(src, tgt, carrier, std::move(alpha));
}

bool i1_witness_independent(const mor_arrow& full_arrow) {
  mor_arrow embedded = embed_i(full_arrow);
  const mor_carrier& strict_c = full_arrow.carrier();
  const mor_carrier& carrier = embedded.carrier();
  const finite_groupoid& total = *carrier.total();
  const finite_groupoid& cod = *embedded.src().base_cod();
  strict_morphism leg1 = compose_strict(carrier.pi1(), embedded.src().u());
  strict_morphism leg2 = compose_strict(carrier.pi2(), embedded.tgt().u());
  for (object_id b = 0; b < carrier.object_count(); ++b) {
    for (object_id a0 = 0; a0 < strict_c.object_count(); ++a0) {
      object_id qa = q0_object(full_arrow.src(), strict_c, carrier, a0);
      for (arrow_id x : total.hom(qa, b)) {
        arrow_id v = cod.compose(
            cod.inverse(leg1.f1[x]),
            cod.compose(full_arrow.value(a0), leg2.f1[x]));
        if (v != embedded.value(b)) return false;
      }
    }
  }
  return true;
}

bool i1_preserves_composition_check(const mor_arrow& a, const mor_arrow& b) {
  mor_arrow direct = vertical_compose(a, b);
  mor_arrow via_i = vertical_compose(embed_i(a), embed_i(b));
  mor_arrow pulled = restrict_i(via_i);
  return direct.equal(pulled);
}

replacement_data replacement_representative(const gen_morphism& m) {
  gen_morphism mg = m.with_mode(mor_mode::general);
  fiber_product_bundle w =
      fiber_product(strict_morphism::identity(mg.base_dom()), mg.psi());
  gen_morphism rep(w.pi1, compose_strict(w.pi2, mg.u()), mor_mode::full);

  gen_morphism rep_g = rep.with_mode(mor_mode::general);
  auto carrier = make_carrier(mg, rep_g);
  const finite_groupoid& base = *mg.base_dom();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);  // (k, x, w-object)
    fp_object gyk = w.object_decode(c.k2);  // (g, y, k')
    arrow_id xy = base.compose(c.mid, gyk.mid);
    alpha[o] = mg.u().f1[preimage_arrow(mg.psi(), c.k1, gyk.right, xy)];
  }
  replacement_data res;
  res.representative = rep;
  res.connecting = mor_arrow(mg, rep_g, carrier, std::move(alpha));
  return res;
}

}  // namespace gpd
