#include "gpd/functors.hpp"

#include <algorithm>
#include <numeric>

namespace gpd {

strict_morphism strict_morphism::identity(const groupoid_ptr& g) {
  strict_morphism f;
  f.dom = g;
  f.cod = g;
  f.f0.resize(g->object_count());
  std::iota(f.f0.begin(), f.f0.end(), 0u);
  f.f1.resize(g->arrow_count());
  std::iota(f.f1.begin(), f.f1.end(), 0u);
  return f;
}

void strict_morphism::verify() const {
  if (f0.size() != dom->object_count() || f1.size() != dom->arrow_count())
    fail(errc::format_error, "morphism maps have wrong sizes");
  for (object_id a : f0)
    if (a >= cod->object_count())
      fail(errc::format_error, "object image out of range");
  for (arrow_id x = 0; x < dom->arrow_count(); ++x) {
    if (f1[x] >= cod->arrow_count())
      fail(errc::format_error, "arrow image out of range");
    if (cod->source(f1[x]) != f0[dom->source(x)] ||
        cod->target(f1[x]) != f0[dom->target(x)])
      fail(errc::format_error,
           "arrow " + std::to_string(x) + " image has wrong endpoints");
  }
  for (object_id a = 0; a < dom->object_count(); ++a)
    if (f1[dom->unit(a)] != cod->unit(f0[a]))
      fail(errc::format_error,
           "unit of object " + std::to_string(a) + " not preserved");
  for (arrow_id x = 0; x < dom->arrow_count(); ++x)
    for (arrow_id y : dom->arrows_from(dom->target(x)))
      if (f1[dom->compose(x, y)] != cod->compose(f1[x], f1[y]))
        fail(errc::format_error, "composition not preserved at " +
                                     std::to_string(x) + "." +
                                     std::to_string(y));
}

bool strict_morphism::equal(const strict_morphism& other) const {
  return f0 == other.f0 && f1 == other.f1 && same_groupoid(dom, other.dom) &&
         same_groupoid(cod, other.cod);
}

strict_morphism compose_strict(const strict_morphism& f,
                               const strict_morphism& g) {
  if (!same_groupoid(f.cod, g.dom))
    fail(errc::domain_mismatch,
         "codomain of the first morphism differs from the domain of the "
         "second");
  strict_morphism h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.f0.reserve(f.f0.size());
  for (object_id a : f.f0) h.f0.push_back(g.f0[a]);
  h.f1.reserve(f.f1.size());
  for (arrow_id x : f.f1) h.f1.push_back(g.f1[x]);
  return h;
}

strict_morphism restriction_inclusion(const restriction& r,
                                      const groupoid_ptr& parent) {
  strict_morphism f;
  f.dom = r.sub;
  f.cod = parent;
  f.f0 = r.object_map;
  f.f1 = r.arrow_map;
  return f;
}

bool is_isomorphism(const strict_morphism& f) {
  if (f.dom->object_count() != f.cod->object_count() ||
      f.dom->arrow_count() != f.cod->arrow_count())
    return false;
  std::vector<bool> obj_hit(f.cod->object_count(), false);
  for (object_id a : f.f0) {
    if (obj_hit[a]) return false;
    obj_hit[a] = true;
  }
  std::vector<bool> arr_hit(f.cod->arrow_count(), false);
  for (arrow_id x : f.f1) {
    if (arr_hit[x]) return false;
    arr_hit[x] = true;
  }
  return true;
}

equivalence_report is_equivalence(const strict_morphism& f) {
  const finite_groupoid& g = *f.dom;
  const finite_groupoid& h = *f.cod;
  equivalence_report rep;

  // (1) essential surjectivity: every object of the codomain is the target
  // of an arrow starting in the image of f0.
  std::vector<bool> reached(h.object_count(), false);
  for (object_id a = 0; a < g.object_count(); ++a)
    for (arrow_id x : h.arrows_from(f.f0[a])) reached[h.target(x)] = true;
  rep.essentially_surjective = true;
  for (object_id b = 0; b < h.object_count(); ++b)
    if (!reached[b]) {
      rep.essentially_surjective = false;
      rep.missed_object = b;
      rep.detail = "object " + std::to_string(b) +
                   " of the codomain is not reached from the image";
      break;
    }

  // (2) full and faithful: hom-set bijections.
  rep.fully_faithful = true;
  for (object_id a = 0; a < g.object_count() && rep.fully_faithful; ++a)
    for (object_id b = 0; b < g.object_count(); ++b) {
      auto dom_hom = g.hom(a, b);
      auto cod_hom = h.hom(f.f0[a], f.f0[b]);
      bool bad = dom_hom.size() != cod_hom.size();
      if (!bad) {
        std::vector<arrow_id> images;
        images.reserve(dom_hom.size());
        for (arrow_id x : dom_hom) images.push_back(f.f1[x]);
        std::sort(images.begin(), images.end());
        bad = std::adjacent_find(images.begin(), images.end()) != images.end();
      }
      if (bad) {
        rep.fully_faithful = false;
        rep.bad_hom = {a, b};
        rep.detail = "hom(" + std::to_string(a) + "," + std::to_string(b) +
                     ") does not map bijectively onto hom(" +
                     std::to_string(f.f0[a]) + "," + std::to_string(f.f0[b]) +
                     ")";
        break;
      }
    }
  return rep;
}

full_equivalence_report is_full_equivalence(const strict_morphism& f) {
  full_equivalence_report rep;
  rep.equivalence = is_equivalence(f);
  std::vector<bool> hit(f.cod->object_count(), false);
  for (object_id a : f.f0) hit[a] = true;
  rep.objects_surjective = true;
  for (object_id b = 0; b < f.cod->object_count(); ++b)
    if (!hit[b]) {
      rep.objects_surjective = false;
      rep.missed_object = b;
      break;
    }
  return rep;
}

arrow_id preimage_arrow(const strict_morphism& f, object_id a, object_id b,
                        arrow_id y) {
  for (arrow_id x : f.dom->arrows_from(a))
    if (f.dom->target(x) == b && f.f1[x] == y) return x;
  return no_arrow;
}

void natural_transformation::verify() const {
  if (!same_groupoid(src.dom, tgt.dom) || !same_groupoid(src.cod, tgt.cod))
    fail(errc::domain_mismatch,
         "natural transformation between morphisms of different shapes");
  const finite_groupoid& g = *src.dom;
  const finite_groupoid& h = *src.cod;
  if (comp.size() != g.object_count())
    fail(errc::format_error, "component family has wrong size");
  for (object_id a = 0; a < g.object_count(); ++a) {
    if (comp[a] >= h.arrow_count() || h.source(comp[a]) != src.f0[a] ||
        h.target(comp[a]) != tgt.f0[a])
      fail(errc::format_error,
           "component at object " + std::to_string(a) +
               " has wrong endpoints");
  }
  for (arrow_id x = 0; x < g.arrow_count(); ++x) {
    object_id a = g.source(x), b = g.target(x);
    if (h.compose(src.f1[x], comp[b]) != h.compose(comp[a], tgt.f1[x]))
      fail(errc::format_error,
           "naturality square fails at arrow " + std::to_string(x));
  }
}

std::vector<natural_transformation> enumerate_nat_trans(
    const strict_morphism& f, const strict_morphism& g) {
  if (!same_groupoid(f.dom, g.dom) || !same_groupoid(f.cod, g.cod))
    fail(errc::domain_mismatch, "morphisms do not share domain and codomain");
  const finite_groupoid& dom = *f.dom;
  const finite_groupoid& cod = *f.cod;
  const std::size_t n = dom.object_count();

  // A component at one object of each connected component of the domain
  // determines the rest through naturality; enumerate roots and propagate.
  coarse_space cs = coarse_space_of(dom);
  std::vector<object_id> root(cs.n_classes, no_object);
  for (object_id a = 0; a < n; ++a)
    if (root[cs.class_of[a]] == no_object) root[cs.class_of[a]] = a;

  // Spanning arrows: for each non-root object pick an arrow from the root's
  // tree; breadth-first from the roots.
  std::vector<arrow_id> tree_arrow(n, no_arrow);  // arrow parent -> a
  std::vector<object_id> parent(n, no_object);
  std::vector<object_id> order;
  order.reserve(n);
  {
    std::vector<bool> seen(n, false);
    for (std::uint32_t c = 0; c < cs.n_classes; ++c) {
      object_id r = root[c];
      seen[r] = true;
      order.push_back(r);
      std::size_t head = order.size() - 1;
      for (; head < order.size(); ++head) {
        object_id at = order[head];
        if (cs.class_of[at] != c) continue;
        for (arrow_id x : dom.arrows_from(at)) {
          object_id b = dom.target(x);
          if (!seen[b]) {
            seen[b] = true;
            parent[b] = at;
            tree_arrow[b] = x;
            order.push_back(b);
          }
        }
      }
    }
  }

  std::vector<natural_transformation> result;
  std::vector<arrow_id> comp(n, no_arrow);

  // Choose root components per class, propagate, then filter by the full
  // naturality check over all domain arrows.
  std::vector<std::vector<arrow_id>> root_candidates(cs.n_classes);
  for (std::uint32_t c = 0; c < cs.n_classes; ++c) {
    object_id r = root[c];
    for (arrow_id y : cod.arrows_from(f.f0[r]))
      if (cod.target(y) == g.f0[r]) root_candidates[c].push_back(y);
    if (root_candidates[c].empty()) return result;
  }

  std::vector<std::uint32_t> pick(cs.n_classes, 0);
  while (true) {
    for (std::uint32_t c = 0; c < cs.n_classes; ++c)
      comp[root[c]] = root_candidates[c][pick[c]];
    // Propagate along the spanning tree: comp(b) = f1(x)^-1 . comp(a) . g1(x).
    for (object_id b : order) {
      if (tree_arrow[b] == no_arrow) continue;
      arrow_id x = tree_arrow[b];
      comp[b] = cod.compose(cod.inverse(f.f1[x]),
                            cod.compose(comp[parent[b]], g.f1[x]));
    }
    bool natural = true;
    for (arrow_id x = 0; x < dom.arrow_count() && natural; ++x) {
      object_id a = dom.source(x), b = dom.target(x);
      natural = cod.compose(f.f1[x], comp[b]) == cod.compose(comp[a], g.f1[x]);
    }
    if (natural) {
      natural_transformation nt;
      nt.src = f;
      nt.tgt = g;
      nt.comp = comp;
      result.push_back(std::move(nt));
    }
    std::size_t c = 0;
    for (; c < cs.n_classes; ++c) {
      if (++pick[c] < root_candidates[c].size()) break;
      pick[c] = 0;
    }
    if (c == cs.n_classes) break;
  }
  std::sort(result.begin(), result.end(),
            [](const natural_transformation& a,
               const natural_transformation& b) { return a.comp < b.comp; });
  return result;
}

quasi_inverse_data quasi_inverse(const strict_morphism& f) {
  equivalence_report rep = is_equivalence(f);
  if (!rep)
    fail(errc::not_an_equivalence, "quasi-inverse requested for a morphism "
                                   "that is not an equivalence: " +
                                       rep.detail);
  const finite_groupoid& g = *f.dom;
  const finite_groupoid& h = *f.cod;

  // For each codomain object b pick the least-index domain object whose image
  // is connected to b, with the least-index connecting arrow f0(a) -> b.
  std::vector<object_id> back(h.object_count(), no_object);
  std::vector<arrow_id> connector(h.object_count(), no_arrow);
  for (object_id b = 0; b < h.object_count(); ++b) {
    for (object_id a = 0; a < g.object_count() && back[b] == no_object; ++a)
      for (arrow_id e : h.arrows_from(f.f0[a]))
        if (h.target(e) == b) {
          back[b] = a;
          connector[b] = e;
          break;
        }
  }

  quasi_inverse_data qi;
  qi.inverse.dom = f.cod;
  qi.inverse.cod = f.dom;
  qi.inverse.f0 = back;
  qi.inverse.f1.resize(h.arrow_count());
  for (arrow_id y = 0; y < h.arrow_count(); ++y) {
    object_id b = h.source(y), b2 = h.target(y);
    // e_b . y . e_b2^-1 lies in hom(f0(back b), f0(back b2)); pull it back.
    arrow_id w = h.compose(connector[b], h.compose(y, h.inverse(connector[b2])));
    qi.inverse.f1[y] = preimage_arrow(f, back[b], back[b2], w);
  }

  // (f then g) => id_dom with components the preimages of the connectors.
  qi.to_dom_unit.src = compose_strict(f, qi.inverse);
  qi.to_dom_unit.tgt = strict_morphism::identity(f.dom);
  qi.to_dom_unit.comp.resize(g.object_count());
  for (object_id a = 0; a < g.object_count(); ++a)
    qi.to_dom_unit.comp[a] =
        preimage_arrow(f, back[f.f0[a]], a, connector[f.f0[a]]);

  // (g then f) => id_cod with components the connectors themselves.
  qi.to_cod_unit.src = compose_strict(qi.inverse, f);
  qi.to_cod_unit.tgt = strict_morphism::identity(f.cod);
  qi.to_cod_unit.comp = connector;
  return qi;
}

namespace {

// Backtracking over arrow images; object images are forced by endpoint
// consistency as arrows get assigned, starting from unit arrows.
void enumerate_functors_rec(const finite_groupoid& g, const finite_groupoid& h,
                            std::vector<object_id>& f0,
                            std::vector<arrow_id>& f1, arrow_id next,
                            std::vector<strict_morphism>& out,
                            const groupoid_ptr& gp, const groupoid_ptr& hp) {
  if (next == g.arrow_count()) {
    strict_morphism f;
    f.dom = gp;
    f.cod = hp;
    f.f0 = f0;
    f.f1 = f1;
    out.push_back(std::move(f));
    return;
  }
  object_id a = g.source(next), b = g.target(next);
  for (arrow_id y = 0; y < h.arrow_count(); ++y) {
    if (f0[a] != no_object && h.source(y) != f0[a]) continue;
    if (f0[b] != no_object && h.target(y) != f0[b]) continue;
    object_id saved_a = f0[a], saved_b = f0[b];
    f0[a] = h.source(y);
    f0[b] = h.target(y);
    f1[next] = y;
    bool ok = true;
    // Units must map to units once their object is pinned.
    for (object_id c : {a, b})
      if (g.unit(c) <= next && f1[g.unit(c)] != h.unit(f0[c])) ok = false;
    // Check all fully-assigned products involving the new arrow.
    for (arrow_id x = 0; x <= next && ok; ++x) {
      if (g.composable(x, next) && g.compose(x, next) <= next &&
          h.compose(f1[x], y) != f1[g.compose(x, next)])
        ok = false;
      if (g.composable(next, x) && g.compose(next, x) <= next &&
          h.compose(y, f1[x]) != f1[g.compose(next, x)])
        ok = false;
    }
    if (ok)
      enumerate_functors_rec(g, h, f0, f1, next + 1, out, gp, hp);
    f0[a] = saved_a;
    f0[b] = saved_b;
    f1[next] = no_arrow;
  }
}

}  // namespace

std::vector<strict_morphism> enumerate_functors(const groupoid_ptr& g,
                                                const groupoid_ptr& h) {
  std::vector<strict_morphism> out;
  if (g->arrow_count() == 0) {
    if (g->object_count() == 0) {
      strict_morphism f;
      f.dom = g;
      f.cod = h;
      out.push_back(std::move(f));
    }
    return out;
  }
  std::vector<object_id> f0(g->object_count(), no_object);
  std::vector<arrow_id> f1(g->arrow_count(), no_arrow);
  enumerate_functors_rec(*g, *h, f0, f1, 0, out, g, h);
  // Objects not touched by any arrow cannot occur (every object carries its
  // unit), so f0 is always fully assigned here.
  std::sort(out.begin(), out.end(),
            [](const strict_morphism& a, const strict_morphism& b) {
              return std::pair(a.f0, a.f1) < std::pair(b.f0, b.f1);
            });
  return out;
}

std::vector<strict_morphism> enumerate_self_equivalences(
    const groupoid_ptr& g) {
  std::vector<strict_morphism> out;
  for (strict_morphism& f : enumerate_functors(g, g))
    if (is_equivalence(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace gpd
