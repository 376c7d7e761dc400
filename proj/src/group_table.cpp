#include "gpd/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gpd {

group_table group_table::validate(std::uint32_t order,
                                  const std::vector<std::uint32_t>& mult) {
  if (order == 0) fail(errc::not_a_group, "empty carrier");
  if (mult.size() != static_cast<std::size_t>(order) * order)
    fail(errc::not_a_group, "table size does not match order");
  for (std::uint32_t v : mult)
    if (v >= order) fail(errc::not_a_group, "table entry out of range");
  group_table t;
  t.order = order;
  t.mult = mult;

  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b)
      for (std::uint32_t c = 0; c < order; ++c)
        if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c)))
          fail(errc::not_a_group, "multiplication is not associative");

  t.unit = UINT32_MAX;
  for (std::uint32_t e = 0; e < order; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < order; ++a)
      if (t.product(e, a) != a || t.product(a, e) != a) { ok = false; break; }
    if (ok) { t.unit = e; break; }
  }
  if (t.unit == UINT32_MAX) fail(errc::not_a_group, "no identity element");

  t.inverse.assign(order, UINT32_MAX);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b)
      if (t.product(a, b) == t.unit && t.product(b, a) == t.unit) {
        t.inverse[a] = b;
        break;
      }
    if (t.inverse[a] == UINT32_MAX)
      fail(errc::not_a_group,
           "element " + std::to_string(a) + " has no inverse");
  }
  return t;
}

std::uint32_t group_table::element_order(std::uint32_t a) const {
  std::uint32_t n = 1, x = a;
  while (x != unit) {
    x = product(x, a);
    ++n;
  }
  return n;
}

bool group_table::is_abelian() const {
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = a + 1; b < order; ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

group_table group_table::trivial() { return cyclic(1); }

group_table group_table::cyclic(std::uint32_t n) {
  std::vector<std::uint32_t> mult(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      mult[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return validate(n, mult);
}

group_table group_table::direct_product(const group_table& a,
                                        const group_table& b) {
  const std::uint32_t n = a.order * b.order;
  std::vector<std::uint32_t> mult(static_cast<std::size_t>(n) * n);
  auto enc = [&](std::uint32_t x, std::uint32_t y) {
    return x * b.order + y;
  };
  for (std::uint32_t x1 = 0; x1 < a.order; ++x1)
    for (std::uint32_t y1 = 0; y1 < b.order; ++y1)
      for (std::uint32_t x2 = 0; x2 < a.order; ++x2)
        for (std::uint32_t y2 = 0; y2 < b.order; ++y2)
          mult[static_cast<std::size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.product(x1, x2), b.product(y1, y2));
  return validate(n, mult);
}

group_table group_table::symmetric(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> base(n);
  std::iota(base.begin(), base.end(), 0u);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const std::uint32_t order = static_cast<std::uint32_t>(perms.size());
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < order; ++i) index[perms[i]] = i;
  std::vector<std::uint32_t> mult(static_cast<std::size_t>(order) * order);
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) {
      // p.q applies p first, then q (left-to-right).
      std::vector<std::uint32_t> pq(n);
      for (std::uint32_t k = 0; k < n; ++k) pq[k] = perms[j][perms[i][k]];
      mult[static_cast<std::size_t>(i) * order + j] = index[pq];
    }
  return validate(order, mult);
}

namespace {

bool extend_isomorphism(const group_table& a, const group_table& b,
                        std::vector<std::uint32_t>& map,
                        std::vector<bool>& used, std::uint32_t next) {
  if (next == a.order) return true;
  if (map[next] != UINT32_MAX)
    return extend_isomorphism(a, b, map, used, next + 1);
  for (std::uint32_t img = 0; img < b.order; ++img) {
    if (used[img] || a.element_order(next) != b.element_order(img)) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    for (std::uint32_t x = 0; x < a.order && ok; ++x) {
      if (map[x] == UINT32_MAX) continue;
      if (map[a.product(next, x)] != UINT32_MAX &&
          map[a.product(next, x)] != b.product(img, map[x]))
        ok = false;
      if (map[a.product(x, next)] != UINT32_MAX &&
          map[a.product(x, next)] != b.product(map[x], img))
        ok = false;
    }
    if (ok && extend_isomorphism(a, b, map, used, next + 1)) return true;
    map[next] = UINT32_MAX;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_group_isomorphism(
    const group_table& a, const group_table& b) {
  if (a.order != b.order) return std::nullopt;
  std::vector<std::uint32_t> orders_a, orders_b;
  for (std::uint32_t x = 0; x < a.order; ++x) {
    orders_a.push_back(a.element_order(x));
    orders_b.push_back(b.element_order(x));
  }
  std::sort(orders_a.begin(), orders_a.end());
  std::sort(orders_b.begin(), orders_b.end());
  if (orders_a != orders_b) return std::nullopt;

  std::vector<std::uint32_t> map(a.order, UINT32_MAX);
  std::vector<bool> used(b.order, false);
  map[a.unit] = b.unit;
  used[b.unit] = true;
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

bool groups_isomorphic(const group_table& a, const group_table& b) {
  return find_group_isomorphism(a, b).has_value();
}

// ---- isotropy ---------------------------------------------------------------

isotropy_group isotropy_group_at(const finite_groupoid& g, object_id a) {
  isotropy_group res;
  for (arrow_id x : g.arrows_from(a))
    if (g.target(x) == a) res.loops.push_back(x);
  std::vector<std::uint32_t> index_of(g.arrow_count(), UINT32_MAX);
  for (std::uint32_t i = 0; i < res.loops.size(); ++i)
    index_of[res.loops[i]] = i;
  const std::uint32_t n = static_cast<std::uint32_t>(res.loops.size());
  std::vector<std::uint32_t> mult(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      mult[static_cast<std::size_t>(i) * n + j] =
          index_of[g.compose(res.loops[i], res.loops[j])];
  res.table = group_table::validate(n, mult);
  return res;
}

groupoid_ptr classifying_groupoid(const group_table& table,
                                  const std::string& name) {
  finite_groupoid::parts p;
  p.name = name.empty() ? "B" + std::to_string(table.order) : name;
  p.n_objects = 1;
  p.src.assign(table.order, 0);
  p.tgt.assign(table.order, 0);
  p.unit = {table.unit};
  p.inverse.assign(table.inverse.begin(), table.inverse.end());
  p.compose = [table](arrow_id x, arrow_id y) { return table.product(x, y); };
  return finite_groupoid::from_parts(std::move(p));
}

// ---- skeleton / Morita ------------------------------------------------------

groupoid_skeleton skeleton_of(const finite_groupoid& g) {
  coarse_space cs = coarse_space_of(g);
  groupoid_skeleton sk;
  sk.representatives.assign(cs.n_classes, no_object);
  for (object_id a = 0; a < g.object_count(); ++a)
    if (sk.representatives[cs.class_of[a]] == no_object)
      sk.representatives[cs.class_of[a]] = a;
  for (object_id rep : sk.representatives)
    sk.isotropy.push_back(isotropy_group_at(g, rep));
  return sk;
}

bool morita_equivalent(const finite_groupoid& g, const finite_groupoid& h) {
  groupoid_skeleton sg = skeleton_of(g), sh = skeleton_of(h);
  if (sg.representatives.size() != sh.representatives.size()) return false;
  std::vector<bool> matched(sh.representatives.size(), false);
  for (const isotropy_group& iso : sg.isotropy) {
    bool found = false;
    for (std::size_t j = 0; j < sh.isotropy.size(); ++j) {
      if (matched[j]) continue;
      if (groups_isomorphic(iso.table, sh.isotropy[j].table)) {
        matched[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace gpd
