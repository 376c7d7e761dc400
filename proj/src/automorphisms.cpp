#include "gpd/automorphisms.hpp"

#include <algorithm>
#include <numeric>

namespace gpd {

namespace {

// Central loops of the isotropy group at each object, ascending arrow id.
std::vector<arrow_id> central_loops(const finite_groupoid& g) {
  std::vector<arrow_id> out;
  for (arrow_id x = 0; x < g.arrow_count(); ++x) {
    if (!g.is_loop(x)) continue;
    object_id a = g.source(x);
    bool central = true;
    for (arrow_id y : g.arrows_from(a)) {
      if (!g.is_loop(y)) continue;
      if (g.compose(x, y) != g.compose(y, x)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

}  // namespace

center_groupoid_result center_groupoid(const groupoid_ptr& g) {
  center_groupoid_result res;
  res.points = central_loops(*g);
  std::vector<std::uint32_t> point_of(g->arrow_count(), UINT32_MAX);
  for (std::uint32_t p = 0; p < res.points.size(); ++p)
    point_of[res.points[p]] = p;

  groupoid_action act;
  act.n_points = static_cast<std::uint32_t>(res.points.size());
  for (arrow_id x : res.points) act.anchor.push_back(g->source(x));
  act.act.assign(static_cast<std::size_t>(g->arrow_count()) * act.n_points,
                 no_object);
  for (arrow_id y = 0; y < g->arrow_count(); ++y)
    for (std::uint32_t p = 0; p < act.n_points; ++p) {
      if (g->source(y) != act.anchor[p]) continue;
      arrow_id conj = g->compose(g->inverse(y), g->compose(res.points[p], y));
      act.act[static_cast<std::size_t>(y) * act.n_points + p] = point_of[conj];
    }

  action_groupoid_result built = action_groupoid(g, act);
  res.zg = built.gpd;
  res.projection.dom = res.zg;
  res.projection.cod = g;
  res.projection.f0 = act.anchor;
  for (const auto& [y, p] : built.arrow_decode) {
    (void)p;
    res.projection.f1.push_back(y);
  }
  return res;
}

void verify_center_section(const finite_groupoid& g, const center_section& s) {
  if (s.comp.size() != g.object_count())
    fail(errc::format_error, "section has wrong size");
  for (object_id a = 0; a < g.object_count(); ++a) {
    arrow_id c = s.comp[a];
    if (c >= g.arrow_count() || g.source(c) != a || g.target(c) != a)
      fail(errc::format_error,
           "section at object " + std::to_string(a) + " is not a loop there");
    for (arrow_id y : g.arrows_from(a))
      if (g.is_loop(y) && g.compose(c, y) != g.compose(y, c))
        fail(errc::format_error, "section value is not central");
  }
  for (arrow_id x = 0; x < g.arrow_count(); ++x) {
    object_id a = g.source(x), b = g.target(x);
    if (g.compose(x, s.comp[b]) != g.compose(s.comp[a], x))
      fail(errc::format_error,
           "section is not equivariant along arrow " + std::to_string(x));
  }
}

center_group_result center_group(const groupoid_ptr& g) {
  center_group_result res;
  coarse_space cs = coarse_space_of(*g);

  // Per class: candidate sections generated from a root choice and conjugated
  // along a spanning tree, then filtered by full equivariance.
  std::vector<object_id> root(cs.n_classes, no_object);
  for (object_id a = 0; a < g->object_count(); ++a)
    if (root[cs.class_of[a]] == no_object) root[cs.class_of[a]] = a;

  std::vector<std::vector<std::vector<arrow_id>>> class_solutions(
      cs.n_classes);
  std::vector<arrow_id> all_central = central_loops(*g);
  for (std::uint32_t c = 0; c < cs.n_classes; ++c) {
    object_id r = root[c];
    // Spanning tree of the class.
    std::vector<arrow_id> to_here(g->object_count(), no_arrow);
    std::vector<object_id> bfs{r};
    std::vector<bool> seen(g->object_count(), false);
    seen[r] = true;
    for (std::size_t head = 0; head < bfs.size(); ++head)
      for (arrow_id x : g->arrows_from(bfs[head]))
        if (!seen[g->target(x)]) {
          seen[g->target(x)] = true;
          to_here[g->target(x)] =
              to_here[bfs[head]] == no_arrow
                  ? x
                  : g->compose(to_here[bfs[head]], x);
          bfs.push_back(g->target(x));
        }
    for (arrow_id c0 : all_central) {
      if (g->source(c0) != r) continue;
      std::vector<arrow_id> partial(g->object_count(), no_arrow);
      for (object_id a : bfs) {
        arrow_id w = to_here[a];
        partial[a] = w == no_arrow
                         ? c0
                         : g->compose(g->inverse(w), g->compose(c0, w));
      }
      // Full equivariance within the class.
      bool ok = true;
      for (arrow_id x = 0; x < g->arrow_count() && ok; ++x) {
        object_id a = g->source(x), b = g->target(x);
        if (cs.class_of[a] != c) continue;
        ok = g->compose(x, partial[b]) == g->compose(partial[a], x);
      }
      if (ok) {
        std::vector<arrow_id> values;
        for (object_id a : bfs) values.push_back(partial[a]);
        class_solutions[c].push_back(partial);
      }
    }
  }

  // Sections are independent products across classes.
  std::vector<std::uint32_t> pick(cs.n_classes, 0);
  while (true) {
    center_section s;
    s.comp.assign(g->object_count(), no_arrow);
    for (std::uint32_t c = 0; c < cs.n_classes; ++c)
      for (object_id a = 0; a < g->object_count(); ++a)
        if (cs.class_of[a] == c) s.comp[a] = class_solutions[c][pick[c]][a];
    res.sections.push_back(std::move(s));
    std::size_t c = 0;
    for (; c < cs.n_classes; ++c) {
      if (++pick[c] < class_solutions[c].size()) break;
      pick[c] = 0;
    }
    if (c == cs.n_classes) break;
  }
  std::sort(res.sections.begin(), res.sections.end(),
            [](const center_section& a, const center_section& b) {
              return a.comp < b.comp;
            });
  for (const center_section& s : res.sections) verify_center_section(*g, s);

  // Pointwise multiplication table.
  const std::uint32_t n = static_cast<std::uint32_t>(res.sections.size());
  auto locate = [&](const std::vector<arrow_id>& comp) {
    for (std::uint32_t i = 0; i < n; ++i)
      if (res.sections[i].comp == comp) return i;
    throw std::logic_error("section product escaped the enumerated set");
  };
  std::vector<std::uint32_t> mult(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<arrow_id> prod(g->object_count());
      for (object_id a = 0; a < g->object_count(); ++a)
        prod[a] = g->compose(res.sections[i].comp[a], res.sections[j].comp[a]);
      mult[static_cast<std::size_t>(i) * n + j] = locate(prod);
    }
  res.table = group_table::validate(n, mult);
  res.unit_index = res.table.unit;
  return res;
}

automorphism_check is_automorphism(const gen_morphism& m) {
  if (!same_groupoid(m.base_dom(), m.base_cod()))
    fail(errc::base_mismatch, "self-span expected");
  automorphism_check res;
  res.u_report = is_equivalence(m.u());
  res.ok = res.u_report.ok();
  if (!res.ok) return res;

  gen_morphism mg = m.with_mode(mor_mode::general);
  gen_morphism inv(mg.u(), mg.psi(), mor_mode::general);
  gen_morphism unit =
      gen_morphism::identity(mg.base_dom()).with_mode(mor_mode::general);
  const finite_groupoid& base = *mg.base_dom();

  // m∘inverse (inverse applied first): carrier K x_{psi,G,psi} K.
  h_composite left = h_compose(inv, mg);
  auto lc = make_carrier(left.morphism, unit);
  std::vector<arrow_id> lalpha(lc->object_count());
  for (object_id o = 0; o < lc->object_count(); ++o) {
    carrier_obj c = lc->object(o);                        // (w, z, g)
    fp_object w = left.middle_fp->object_decode(c.k1);    // (k1, x, k2)
    arrow_id through =
        mg.u().f1[preimage_arrow(mg.psi(), w.left, w.right, w.mid)];
    lalpha[o] = base.compose(base.inverse(through), c.mid);
  }

  // inverse∘m (m applied first): carrier K x_{u,G,u} K.
  h_composite right = h_compose(mg, inv);
  auto rc = make_carrier(right.morphism, unit);
  std::vector<arrow_id> ralpha(rc->object_count());
  for (object_id o = 0; o < rc->object_count(); ++o) {
    carrier_obj c = rc->object(o);
    fp_object w = right.middle_fp->object_decode(c.k1);
    arrow_id through =
        mg.psi().f1[preimage_arrow(mg.u(), w.left, w.right, w.mid)];
    ralpha[o] = base.compose(base.inverse(through), c.mid);
  }

  automorphism_witness wit{
      inv, mor_arrow(left.morphism, unit, lc, std::move(lalpha)),
      mor_arrow(right.morphism, unit, rc, std::move(ralpha))};
  res.witness = std::move(wit);
  return res;
}

mor_roster aut_roster(const groupoid_ptr& g) {
  mor_roster r;
  r.base_dom = g;
  r.base_cod = g;
  r.mode = mor_mode::general;
  strict_morphism id = strict_morphism::identity(g);
  for (strict_morphism& u : enumerate_self_equivalences(g))
    r.entries.emplace_back(id, std::move(u), mor_mode::general, false);
  return r;
}

mor_arrow iso_psi(const gen_morphism& m, const center_section& sigma) {
  if (!is_equivalence(m.u()))
    fail(errc::not_automorphism, "the span is not an automorphism");
  gen_morphism mg = m.with_mode(mor_mode::general);
  verify_center_section(*mg.base_dom(), sigma);
  auto carrier = make_carrier(mg, mg);
  const finite_groupoid& base = *mg.base_dom();
  std::vector<arrow_id> alpha(carrier->object_count());
  for (object_id o = 0; o < carrier->object_count(); ++o) {
    carrier_obj c = carrier->object(o);
    arrow_id through =
        mg.u().f1[preimage_arrow(mg.psi(), c.k1, c.k2, c.mid)];
    alpha[o] = base.compose(sigma.comp[mg.u().f0[c.k1]], through);
  }
  return mor_arrow(mg, mg, carrier, std::move(alpha));
}

center_section iso_phi(const mor_arrow& self_arrow) {
  if (!self_arrow.src().equal(self_arrow.tgt()))
    fail(errc::not_automorphism, "not a self-arrow");
  const gen_morphism& m = self_arrow.src();
  if (!is_equivalence(m.u()))
    fail(errc::not_automorphism, "the span is not an automorphism");
  const finite_groupoid& base = *m.base_dom();

  center_section s;
  s.comp.assign(base.object_count(), no_arrow);
  std::vector<bool> in_image(base.object_count(), false);
  for (object_id k = 0; k < m.apex()->object_count(); ++k) {
    object_id a = m.u().f0[k];
    if (in_image[a]) continue;
    in_image[a] = true;
    arrow_id mid = base.unit(m.psi().f0[k]);
    object_id o = self_arrow.carrier().find(
        k, m.mode() == mor_mode::general ? mid : no_arrow, k);
    s.comp[a] = self_arrow.value(o);
  }
  // Extend along arrows from the image of u.
  for (object_id b = 0; b < base.object_count(); ++b) {
    if (s.comp[b] != no_arrow) continue;
    bool done = false;
    for (object_id a = 0; a < base.object_count() && !done; ++a) {
      if (!in_image[a]) continue;
      for (arrow_id x : base.hom(a, b)) {
        s.comp[b] =
            base.compose(base.inverse(x), base.compose(s.comp[a], x));
        done = true;
        break;
      }
    }
    if (!done)
      fail(errc::not_automorphism,
           "coarse image of u misses object " + std::to_string(b));
  }
  verify_center_section(base, s);
  return s;
}

gerbe_report gerbe_decomposition(const groupoid_ptr& g) {
  gerbe_report rep;
  rep.roster = aut_roster(g);
  rep.aut = build_morphism_groupoid(rep.roster);
  const finite_groupoid& aut = *rep.aut.gpd;

  center_group_result k = center_group(g);
  rep.center_order = k.table.order;

  rep.kernel_fibers.resize(aut.object_count());
  for (arrow_id x = 0; x < aut.arrow_count(); ++x)
    if (aut.is_loop(x)) rep.kernel_fibers[aut.source(x)].push_back(x);

  rep.fibers_match_center = true;
  for (object_id i = 0; i < aut.object_count(); ++i) {
    const auto& fiber = rep.kernel_fibers[i];
    if (fiber.size() != k.table.order) {
      rep.fibers_match_center = false;
      break;
    }
    // iso_psi must hit every fiber element exactly once, multiplicatively.
    std::vector<std::uint32_t> image_of(k.table.order, UINT32_MAX);
    for (std::uint32_t s = 0; s < k.sections.size(); ++s) {
      mor_arrow a = iso_psi(rep.roster.entries[i], k.sections[s]);
      std::uint32_t hit = UINT32_MAX;
      for (std::uint32_t fx = 0; fx < fiber.size(); ++fx)
        if (rep.aut.arrow_decode[fiber[fx]].alpha() == a.alpha()) {
          hit = fx;
          break;
        }
      if (hit == UINT32_MAX) {
        rep.fibers_match_center = false;
        break;
      }
      image_of[s] = hit;
    }
    if (!rep.fibers_match_center) break;
    std::vector<std::uint32_t> sorted = image_of;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t s = 0; s < sorted.size(); ++s)
      if (sorted[s] != s) rep.fibers_match_center = false;
    for (std::uint32_t s1 = 0; s1 < k.table.order && rep.fibers_match_center;
         ++s1)
      for (std::uint32_t s2 = 0; s2 < k.table.order; ++s2) {
        const mor_arrow& f1 = rep.aut.arrow_decode[fiber[image_of[s1]]];
        const mor_arrow& f2 = rep.aut.arrow_decode[fiber[image_of[s2]]];
        if (vertical_compose(f1, f2).alpha() !=
            rep.aut.arrow_decode[fiber[image_of[k.table.product(s1, s2)]]]
                .alpha()) {
          rep.fibers_match_center = false;
          break;
        }
      }
    if (!rep.fibers_match_center) break;
  }

  // Quotient by the kernel: parallel arrows collapse, so the quotient keeps
  // one arrow per connected ordered pair of roster objects.
  coarse_space cs = coarse_space_of(aut);
  rep.coarse_order = cs.n_classes;
  std::vector<std::vector<arrow_id>> quotient_arrow(
      aut.object_count(),
      std::vector<arrow_id>(aut.object_count(), no_arrow));
  finite_groupoid::parts qp;
  qp.name = "Aut~";
  qp.n_objects = static_cast<std::uint32_t>(aut.object_count());
  std::vector<std::pair<object_id, object_id>> q_decode;
  for (arrow_id x = 0; x < aut.arrow_count(); ++x) {
    object_id i = aut.source(x), j = aut.target(x);
    if (quotient_arrow[i][j] != no_arrow) continue;
    quotient_arrow[i][j] = static_cast<arrow_id>(q_decode.size());
    q_decode.emplace_back(i, j);
    qp.src.push_back(i);
    qp.tgt.push_back(j);
  }
  rep.projection.resize(aut.arrow_count());
  for (arrow_id x = 0; x < aut.arrow_count(); ++x)
    rep.projection[x] = quotient_arrow[aut.source(x)][aut.target(x)];
  for (object_id i = 0; i < aut.object_count(); ++i)
    qp.unit.push_back(quotient_arrow[i][i]);
  for (const auto& [i, j] : q_decode)
    qp.inverse.push_back(quotient_arrow[j][i]);
  qp.compose = [q_decode, quotient_arrow](arrow_id x, arrow_id y) {
    return quotient_arrow[q_decode[x].first][q_decode[y].second];
  };
  rep.quotient = finite_groupoid::from_parts(std::move(qp));

  rep.quotient_equivalent_to_discrete = true;
  for (object_id i = 0; i < rep.quotient->object_count(); ++i)
    if (isotropy_group_at(*rep.quotient, i).table.order != 1)
      rep.quotient_equivalent_to_discrete = false;
  if (rep.quotient_equivalent_to_discrete) {
    strict_morphism to_discrete;
    to_discrete.dom = rep.quotient;
    to_discrete.cod = discrete_groupoid(cs.n_classes);
    to_discrete.f0 = cs.class_of;
    for (arrow_id x = 0; x < rep.quotient->arrow_count(); ++x)
      to_discrete.f1.push_back(cs.class_of[rep.quotient->source(x)]);
    to_discrete.verify();
    rep.quotient_equivalent_to_discrete = is_equivalence(to_discrete).ok();
  }
  return rep;
}

namespace {

bool arrow_connected(const gen_morphism& a, const gen_morphism& b) {
  return !enumerate_arrows(a, b).empty();
}

}  // namespace

aut_group_table coarse_aut_group(const groupoid_ptr& g) {
  aut_group_table res;
  res.roster = aut_roster(g);
  const std::uint32_t n = static_cast<std::uint32_t>(res.roster.entries.size());

  // Connectivity classes of the roster.
  std::vector<std::uint32_t> cls(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cls[i] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(res.class_reps.size());
    cls[i] = c;
    res.class_reps.push_back(i);
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (cls[j] == UINT32_MAX &&
          arrow_connected(res.roster.entries[i], res.roster.entries[j]))
        cls[j] = c;
  }
  res.class_of = cls;
  const std::uint32_t k = static_cast<std::uint32_t>(res.class_reps.size());

  auto class_of_span = [&](const gen_morphism& m) -> std::uint32_t {
    for (std::uint32_t c = 0; c < k; ++c)
      if (arrow_connected(m, res.roster.entries[res.class_reps[c]])) return c;
    throw std::logic_error("self-span not connected to any strict "
                           "representative");
  };

  std::vector<std::uint32_t> mult(static_cast<std::size_t>(k) * k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      gen_morphism prod = h_compose(res.roster.entries[res.class_reps[i]],
                                    res.roster.entries[res.class_reps[j]])
                              .morphism;
      mult[static_cast<std::size_t>(i) * k + j] = class_of_span(prod);
    }
  res.table = group_table::validate(k, mult);

  strict_morphism id = strict_morphism::identity(g);
  res.unit_class = UINT32_MAX;
  for (std::uint32_t i = 0; i < n; ++i)
    if (res.roster.entries[i].u().equal(id)) {
      res.unit_class = cls[i];
      break;
    }
  if (res.unit_class != res.table.unit)
    throw std::logic_error("identity span is not the table unit");
  return res;
}

std::uint32_t locate_class(const aut_group_table& aut, const gen_morphism& m) {
  gen_morphism mg = m.with_mode(mor_mode::general);
  for (std::uint32_t c = 0; c < aut.class_reps.size(); ++c)
    if (!enumerate_arrows(mg, aut.roster.entries[aut.class_reps[c]]).empty())
      return c;
  fail(errc::not_automorphism,
       "self-span is not arrow-connected to any automorphism class");
}

action_report validate_group_action(const group_table& k,
                                    const std::vector<gen_morphism>& slices) {
  if (slices.size() != k.order)
    fail(errc::format_error, "one slice per group element expected");
  action_report rep;
  const groupoid_ptr& g = slices[0].base_dom();
  for (const gen_morphism& m : slices)
    if (!same_groupoid(m.base_dom(), g) || !same_groupoid(m.base_cod(), g))
      fail(errc::base_mismatch, "slices act on different groupoids");

  center_group_result z = center_group(g);
  if (z.table.order != 1) {
    rep.failure = errc::nontrivial_center;
    rep.detail = "the center has order " + std::to_string(z.table.order);
    return rep;
  }
  for (std::size_t i = 0; i < slices.size(); ++i)
    if (!is_automorphism(slices[i]).ok) {
      rep.failure = errc::not_automorphism_slice;
      rep.detail = "slice " + std::to_string(i) + " is not an automorphism";
      return rep;
    }

  aut_group_table aut = coarse_aut_group(g);
  rep.classes.resize(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i)
    rep.classes[i] = locate_class(aut, slices[i]);
  for (std::uint32_t a = 0; a < k.order; ++a)
    for (std::uint32_t b = 0; b < k.order; ++b) {
      std::uint32_t lhs = rep.classes[k.product(a, b)];
      std::uint32_t rhs =
          aut.table.product(rep.classes[a], rep.classes[b]);
      if (lhs != rhs) {
        rep.failure = errc::not_homomorphism;
        rep.detail = "classes of slices " + std::to_string(a) + "," +
                     std::to_string(b) + " do not multiply compatibly";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace gpd
