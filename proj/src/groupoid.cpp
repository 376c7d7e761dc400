#include "gpd/groupoid.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <numeric>
#include <unordered_map>

namespace gpd {

std::string_view errc_name(errc c) {
  switch (c) {
    case errc::missing_composite: return "MissingComposite";
    case errc::non_associative: return "NonAssociative";
    case errc::no_unit: return "NoUnit";
    case errc::no_inverse: return "NoInverse";
    case errc::ill_typed_composite: return "IllTypedComposite";
    case errc::empty_restriction: return "EmptyRestriction";
    case errc::not_a_group: return "NotAGroup";
    case errc::invalid_action: return "InvalidAction";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::codomain_mismatch: return "CodomainMismatch";
    case errc::mismatched_inputs: return "MismatchedInputs";
    case errc::wiring_mismatch: return "WiringMismatch";
    case errc::not_an_equivalence: return "NotAnEquivalence";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::not_composable: return "NotComposable";
    case errc::internal_no_splitting: return "InternalNoSplitting";
    case errc::internal_no_lift: return "InternalNoLift";
    case errc::not_full_mode: return "NotFullMode";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::nontrivial_center: return "NontrivialCenter";
    case errc::not_automorphism_slice: return "NotAutomorphismSlice";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::desk_scale_exceeded: return "DeskScaleExceeded";
    case errc::format_error: return "FormatError";
  }
  return "UnknownError";
}

namespace {

constexpr std::size_t dense_arrow_limit = 2048;

std::uint64_t pair_key(arrow_id x, arrow_id y) {
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

std::vector<arrow_id> finite_groupoid::hom(object_id a, object_id b) const {
  std::vector<arrow_id> result;
  for (arrow_id x : out_[a])
    if (tgt_[x] == b) result.push_back(x);
  return result;
}

bool finite_groupoid::structurally_equal(const finite_groupoid& other) const {
  if (n_objects_ != other.n_objects_ || src_ != other.src_ ||
      tgt_ != other.tgt_)
    return false;
  for (arrow_id x = 0; x < arrow_count(); ++x)
    for (arrow_id y : out_[tgt_[x]])
      if (compose(x, y) != other.compose(x, y)) return false;
  return true;
}

std::size_t finite_groupoid::composable_pair_count() const {
  std::size_t n = 0;
  for (arrow_id x = 0; x < arrow_count(); ++x) n += out_[tgt_[x]].size();
  return n;
}

void finite_groupoid::finish_indices() {
  out_.assign(n_objects_, {});
  in_.assign(n_objects_, {});
  for (arrow_id x = 0; x < src_.size(); ++x) {
    out_[src_[x]].push_back(x);
    in_[tgt_[x]].push_back(x);
  }
}

void finite_groupoid::spot_check() const {
  for (object_id a = 0; a < n_objects_; ++a) {
    arrow_id e = unit_[a];
    if (e >= arrow_count() || src_[e] != a || tgt_[e] != a)
      fail(errc::no_unit, "unit of object " + std::to_string(a) +
                              " is not a loop at it");
  }
  for (arrow_id x = 0; x < arrow_count(); ++x) {
    if (src_[x] >= n_objects_ || tgt_[x] >= n_objects_)
      fail(errc::format_error, "arrow endpoint out of range");
    if (compose(unit_[src_[x]], x) != x || compose(x, unit_[tgt_[x]]) != x)
      fail(errc::no_unit, "unit law fails at arrow " + std::to_string(x));
    arrow_id y = inv_[x];
    if (y >= arrow_count() || src_[y] != tgt_[x] || tgt_[y] != src_[x] ||
        compose(x, y) != unit_[src_[x]] || compose(y, x) != unit_[tgt_[x]])
      fail(errc::no_inverse, "inverse law fails at arrow " + std::to_string(x));
  }
}

groupoid_ptr finite_groupoid::validate(const raw_groupoid& raw) {
  auto g = std::shared_ptr<finite_groupoid>(new finite_groupoid());
  g->name_ = raw.name;
  g->n_objects_ = raw.objects;
  const std::size_t n_arrows = raw.arrows.size();
  g->src_.resize(n_arrows);
  g->tgt_.resize(n_arrows);
  for (arrow_id x = 0; x < n_arrows; ++x) {
    auto [s, t] = raw.arrows[x];
    if (s >= raw.objects || t >= raw.objects)
      fail(errc::format_error,
           "arrow " + std::to_string(x) + " references objects out of range");
    g->src_[x] = s;
    g->tgt_[x] = t;
  }
  g->finish_indices();

  // Ingest the composition triples with typing checks.
  auto table = std::make_shared<std::unordered_map<std::uint64_t, arrow_id>>();
  table->reserve(raw.compose.size() * 2);
  for (const auto& [x, y, z] : raw.compose) {
    if (x >= n_arrows || y >= n_arrows || z >= n_arrows)
      fail(errc::ill_typed_composite, "composition entry references an arrow "
                                      "id out of range");
    if (g->tgt_[x] != g->src_[y])
      fail(errc::ill_typed_composite,
           "entry " + std::to_string(x) + "." + std::to_string(y) +
               " composes arrows that do not meet");
    if (g->src_[z] != g->src_[x] || g->tgt_[z] != g->tgt_[y])
      fail(errc::ill_typed_composite,
           "entry " + std::to_string(x) + "." + std::to_string(y) + "=" +
               std::to_string(z) + " has mismatched endpoints");
    auto [it, inserted] = table->emplace(pair_key(x, y), z);
    if (!inserted && it->second != z)
      fail(errc::ill_typed_composite,
           "conflicting entries for " + std::to_string(x) + "." +
               std::to_string(y));
  }

  // Totality over composable pairs.
  for (arrow_id x = 0; x < n_arrows; ++x)
    for (arrow_id y : g->out_[g->tgt_[x]])
      if (!table->count(pair_key(x, y)))
        fail(errc::missing_composite, "no entry for composable pair " +
                                          std::to_string(x) + "." +
                                          std::to_string(y));

  auto lookup = [table](arrow_id x, arrow_id y) {
    return table->at(pair_key(x, y));
  };

  // Associativity, exhaustively.
  for (arrow_id x = 0; x < n_arrows; ++x)
    for (arrow_id y : g->out_[g->tgt_[x]])
      for (arrow_id z : g->out_[g->tgt_[y]])
        if (lookup(lookup(x, y), z) != lookup(x, lookup(y, z)))
          fail(errc::non_associative,
               "(" + std::to_string(x) + "." + std::to_string(y) + ")." +
                   std::to_string(z) + " != " + std::to_string(x) + ".(" +
                   std::to_string(y) + "." + std::to_string(z) + ")");

  // Infer units.
  g->unit_.assign(raw.objects, no_arrow);
  for (object_id a = 0; a < raw.objects; ++a) {
    for (arrow_id e : g->out_[a]) {
      if (g->tgt_[e] != a) continue;
      bool ok = true;
      for (arrow_id x : g->out_[a])
        if (lookup(e, x) != x) { ok = false; break; }
      if (ok)
        for (arrow_id y : g->in_[a])
          if (lookup(y, e) != y) { ok = false; break; }
      if (ok) { g->unit_[a] = e; break; }
    }
    if (g->unit_[a] == no_arrow)
      fail(errc::no_unit, "object " + std::to_string(a) + " has no unit");
  }

  // Infer inverses.
  g->inv_.assign(n_arrows, no_arrow);
  for (arrow_id x = 0; x < n_arrows; ++x) {
    for (arrow_id y : g->out_[g->tgt_[x]]) {
      if (g->tgt_[y] != g->src_[x]) continue;
      if (lookup(x, y) == g->unit_[g->src_[x]] &&
          lookup(y, x) == g->unit_[g->tgt_[x]]) {
        g->inv_[x] = y;
        break;
      }
    }
    if (g->inv_[x] == no_arrow)
      fail(errc::no_inverse, "arrow " + std::to_string(x) + " has no inverse");
  }

  if (n_arrows <= dense_arrow_limit) {
    g->dense_.assign(n_arrows * n_arrows, no_arrow);
    for (const auto& [key, z] : *table)
      g->dense_[(key >> 32) * n_arrows + (key & 0xffffffffu)] = z;
  } else {
    g->compose_fn_ = lookup;
  }
  return g;
}

raw_groupoid finite_groupoid::to_raw() const {
  raw_groupoid raw;
  raw.name = name_;
  raw.objects = n_objects_;
  raw.arrows.reserve(arrow_count());
  for (arrow_id x = 0; x < arrow_count(); ++x)
    raw.arrows.emplace_back(src_[x], tgt_[x]);
  for (arrow_id x = 0; x < arrow_count(); ++x)
    for (arrow_id y : out_[tgt_[x]])
      raw.compose.push_back({x, y, compose(x, y)});
  return raw;
}

groupoid_ptr finite_groupoid::from_parts(parts p) {
  auto g = std::shared_ptr<finite_groupoid>(new finite_groupoid());
  g->name_ = std::move(p.name);
  g->n_objects_ = p.n_objects;
  g->src_ = std::move(p.src);
  g->tgt_ = std::move(p.tgt);
  g->unit_ = std::move(p.unit);
  g->inv_ = std::move(p.inverse);
  g->finish_indices();
  const std::size_t n_arrows = g->src_.size();
  if (n_arrows <= dense_arrow_limit) {
    g->dense_.assign(n_arrows * n_arrows, no_arrow);
    for (arrow_id x = 0; x < n_arrows; ++x)
      for (arrow_id y : g->out_[g->tgt_[x]])
        g->dense_[x * n_arrows + y] = p.compose(x, y);
  } else {
    g->compose_fn_ = std::move(p.compose);
  }
  g->spot_check();
  return g;
}

bool same_groupoid(const finite_groupoid& a, const finite_groupoid& b) {
  return &a == &b || a.structurally_equal(b);
}

bool same_groupoid(const groupoid_ptr& a, const groupoid_ptr& b) {
  return same_groupoid(*a, *b);
}

void verify_groupoid_axioms(const finite_groupoid& g) {
  for (arrow_id x = 0; x < g.arrow_count(); ++x) {
    for (arrow_id y : g.arrows_from(g.target(x))) {
      arrow_id xy = g.compose(x, y);
      if (g.source(xy) != g.source(x) || g.target(xy) != g.target(y))
        fail(errc::ill_typed_composite, "composite has wrong endpoints");
      for (arrow_id z : g.arrows_from(g.target(y)))
        if (g.compose(xy, z) != g.compose(x, g.compose(y, z)))
          fail(errc::non_associative, "associativity fails");
    }
  }
  for (object_id a = 0; a < g.object_count(); ++a) {
    arrow_id e = g.unit(a);
    if (g.source(e) != a || g.target(e) != a)
      fail(errc::no_unit, "unit is not a loop");
    for (arrow_id x : g.arrows_from(a))
      if (g.compose(e, x) != x) fail(errc::no_unit, "left unit law fails");
    for (arrow_id y : g.arrows_into(a))
      if (g.compose(y, e) != y) fail(errc::no_unit, "right unit law fails");
  }
  for (arrow_id x = 0; x < g.arrow_count(); ++x) {
    arrow_id y = g.inverse(x);
    if (g.compose(x, y) != g.unit(g.source(x)) ||
        g.compose(y, x) != g.unit(g.target(x)))
      fail(errc::no_inverse, "inverse law fails");
  }
}

// ---- coarse space ----------------------------------------------------------

namespace {

struct union_find {
  std::vector<std::uint32_t> parent;
  explicit union_find(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

coarse_space coarse_space_of(const finite_groupoid& g) {
  union_find uf(g.object_count());
  for (arrow_id x = 0; x < g.arrow_count(); ++x)
    uf.unite(g.source(x), g.target(x));
  coarse_space cs;
  cs.class_of.assign(g.object_count(), UINT32_MAX);
  for (object_id a = 0; a < g.object_count(); ++a) {
    std::uint32_t root = uf.find(a);
    if (cs.class_of[root] == UINT32_MAX) cs.class_of[root] = cs.n_classes++;
    cs.class_of[a] = cs.class_of[root];
  }
  return cs;
}

// ---- restriction -----------------------------------------------------------

restriction restrict_objects(const groupoid_ptr& g,
                             const std::vector<object_id>& objs) {
  if (objs.empty()) fail(errc::empty_restriction, "no objects retained");
  std::vector<object_id> keep = objs;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= g->object_count())
    fail(errc::format_error, "restriction object out of range");

  std::vector<object_id> new_of_old(g->object_count(), no_object);
  for (object_id i = 0; i < keep.size(); ++i) new_of_old[keep[i]] = i;

  restriction r;
  r.object_map = keep;
  std::vector<arrow_id> new_of_arrow(g->arrow_count(), no_arrow);
  finite_groupoid::parts p;
  p.name = g->name() + "|";
  p.n_objects = static_cast<std::uint32_t>(keep.size());
  for (arrow_id x = 0; x < g->arrow_count(); ++x) {
    if (new_of_old[g->source(x)] == no_object ||
        new_of_old[g->target(x)] == no_object)
      continue;
    new_of_arrow[x] = static_cast<arrow_id>(r.arrow_map.size());
    r.arrow_map.push_back(x);
    p.src.push_back(new_of_old[g->source(x)]);
    p.tgt.push_back(new_of_old[g->target(x)]);
  }
  for (object_id a : keep) p.unit.push_back(new_of_arrow[g->unit(a)]);
  for (arrow_id x : r.arrow_map) p.inverse.push_back(new_of_arrow[g->inverse(x)]);
  auto arrow_map = r.arrow_map;
  p.compose = [g, arrow_map, new_of_arrow](arrow_id x, arrow_id y) {
    return new_of_arrow[g->compose(arrow_map[x], arrow_map[y])];
  };
  r.sub = finite_groupoid::from_parts(std::move(p));
  return r;
}

// ---- actions ----------------------------------------------------------------

void verify_action(const finite_groupoid& g, const groupoid_action& act) {
  if (act.anchor.size() != act.n_points)
    fail(errc::invalid_action, "anchor map has wrong size");
  for (std::uint32_t p = 0; p < act.n_points; ++p)
    if (act.anchor[p] >= g.object_count())
      fail(errc::invalid_action, "anchor of point " + std::to_string(p) +
                                     " out of range");
  for (arrow_id x = 0; x < g.arrow_count(); ++x)
    for (std::uint32_t p = 0; p < act.n_points; ++p) {
      std::uint32_t q = act.apply(x, p);
      if (g.source(x) != act.anchor[p]) {
        if (q != no_object)
          fail(errc::invalid_action, "action defined off the anchor fiber");
        continue;
      }
      if (q >= act.n_points)
        fail(errc::invalid_action,
             "act(" + std::to_string(x) + "," + std::to_string(p) +
                 ") undefined on the anchor fiber");
      if (act.anchor[q] != g.target(x))
        fail(errc::invalid_action,
             "anchor(act(x,p)) != target(x) at x=" + std::to_string(x) +
                 ", p=" + std::to_string(p));
    }
  for (std::uint32_t p = 0; p < act.n_points; ++p)
    if (act.apply(g.unit(act.anchor[p]), p) != p)
      fail(errc::invalid_action,
           "act(1,p) != p at p=" + std::to_string(p));
  for (arrow_id y = 0; y < g.arrow_count(); ++y)
    for (std::uint32_t p = 0; p < act.n_points; ++p) {
      if (g.source(y) != act.anchor[p]) continue;
      std::uint32_t yp = act.apply(y, p);
      for (arrow_id x : g.arrows_from(g.target(y))) {
        if (act.apply(x, yp) != act.apply(g.compose(y, x), p))
          fail(errc::invalid_action,
               "act(x,act(y,p)) != act(y.x,p) at x=" + std::to_string(x) +
                   ", y=" + std::to_string(y) + ", p=" + std::to_string(p));
      }
    }
}

action_groupoid_result action_groupoid(const groupoid_ptr& g,
                                       const groupoid_action& act) {
  verify_action(*g, act);
  action_groupoid_result res;
  finite_groupoid::parts p;
  p.name = g->name() + "⋉";
  p.n_objects = act.n_points;

  // Arrows are pairs (x, p) with source(x) == anchor(p), lexicographic.
  std::vector<std::vector<arrow_id>> id_of(g->arrow_count());
  for (arrow_id x = 0; x < g->arrow_count(); ++x) {
    id_of[x].assign(act.n_points, no_arrow);
    for (std::uint32_t pt = 0; pt < act.n_points; ++pt) {
      if (g->source(x) != act.anchor[pt]) continue;
      id_of[x][pt] = static_cast<arrow_id>(res.arrow_decode.size());
      res.arrow_decode.emplace_back(x, pt);
      p.src.push_back(pt);
      p.tgt.push_back(act.apply(x, pt));
    }
  }
  for (std::uint32_t pt = 0; pt < act.n_points; ++pt)
    p.unit.push_back(id_of[g->unit(act.anchor[pt])][pt]);
  for (auto& [x, pt] : res.arrow_decode)
    p.inverse.push_back(id_of[g->inverse(x)][act.apply(x, pt)]);
  auto decode = res.arrow_decode;
  p.compose = [g, decode, id_of](arrow_id u, arrow_id v) {
    auto [x, pt] = decode[u];
    auto [y, qt] = decode[v];
    (void)qt;
    return id_of[g->compose(x, y)][pt];
  };
  res.gpd = finite_groupoid::from_parts(std::move(p));
  return res;
}

// ---- standard constructors --------------------------------------------------

groupoid_ptr trivial_groupoid() {
  finite_groupoid::parts p;
  p.name = "T";
  p.n_objects = 1;
  p.src = {0};
  p.tgt = {0};
  p.unit = {0};
  p.inverse = {0};
  p.compose = [](arrow_id, arrow_id) { return arrow_id{0}; };
  return finite_groupoid::from_parts(std::move(p));
}

groupoid_ptr discrete_groupoid(std::uint32_t n_objects) {
  finite_groupoid::parts p;
  p.name = "D" + std::to_string(n_objects);
  p.n_objects = n_objects;
  for (object_id a = 0; a < n_objects; ++a) {
    p.src.push_back(a);
    p.tgt.push_back(a);
    p.unit.push_back(a);
    p.inverse.push_back(a);
  }
  p.compose = [](arrow_id x, arrow_id) { return x; };
  return finite_groupoid::from_parts(std::move(p));
}

groupoid_ptr pair_groupoid(std::uint32_t n_objects) {
  finite_groupoid::parts p;
  p.name = "P" + std::to_string(n_objects);
  p.n_objects = n_objects;
  // Arrow a -> b has id a * n + b.
  for (object_id a = 0; a < n_objects; ++a)
    for (object_id b = 0; b < n_objects; ++b) {
      p.src.push_back(a);
      p.tgt.push_back(b);
    }
  for (object_id a = 0; a < n_objects; ++a) p.unit.push_back(a * n_objects + a);
  for (object_id a = 0; a < n_objects; ++a)
    for (object_id b = 0; b < n_objects; ++b)
      p.inverse.push_back(b * n_objects + a);
  const std::uint32_t n = n_objects;
  p.compose = [n](arrow_id x, arrow_id y) { return (x / n) * n + (y % n); };
  return finite_groupoid::from_parts(std::move(p));
}

disjoint_union_result disjoint_union(const groupoid_ptr& a,
                                     const groupoid_ptr& b) {
  disjoint_union_result res;
  res.object_offset = static_cast<object_id>(a->object_count());
  res.arrow_offset = static_cast<arrow_id>(a->arrow_count());
  finite_groupoid::parts p;
  p.name = a->name() + "+" + b->name();
  p.n_objects = static_cast<std::uint32_t>(a->object_count() +
                                           b->object_count());
  for (arrow_id x = 0; x < a->arrow_count(); ++x) {
    p.src.push_back(a->source(x));
    p.tgt.push_back(a->target(x));
  }
  for (arrow_id x = 0; x < b->arrow_count(); ++x) {
    p.src.push_back(b->source(x) + res.object_offset);
    p.tgt.push_back(b->target(x) + res.object_offset);
  }
  for (object_id o = 0; o < a->object_count(); ++o) p.unit.push_back(a->unit(o));
  for (object_id o = 0; o < b->object_count(); ++o)
    p.unit.push_back(b->unit(o) + res.arrow_offset);
  for (arrow_id x = 0; x < a->arrow_count(); ++x)
    p.inverse.push_back(a->inverse(x));
  for (arrow_id x = 0; x < b->arrow_count(); ++x)
    p.inverse.push_back(b->inverse(x) + res.arrow_offset);
  arrow_id off = res.arrow_offset;
  p.compose = [a, b, off](arrow_id x, arrow_id y) {
    if (x < off) return a->compose(x, y);
    return static_cast<arrow_id>(b->compose(x - off, y - off) + off);
  };
  res.gpd = finite_groupoid::from_parts(std::move(p));
  return res;
}

}  // namespace gpd
