#ifndef GPD_AUTOMORPHISMS_HPP
#define GPD_AUTOMORPHISMS_HPP

#include <optional>
#include <vector>

#include "gpd/composition.hpp"
#include "gpd/group_table.hpp"
#include "gpd/morphism_cat.hpp"

namespace gpd {

// ---- center ----------------------------------------------------------------

struct center_groupoid_result {
  groupoid_ptr zg;            // G acting on the union of isotropy centers
  strict_morphism projection;  // ZG -> G
  std::vector<arrow_id> points;  // ZG objects as central loops of G
};

center_groupoid_result center_groupoid(const groupoid_ptr& g);

// An equivariant family of central loops, one per object.
struct center_section {
  std::vector<arrow_id> comp;
};

void verify_center_section(const finite_groupoid& g, const center_section& s);

struct center_group_result {
  std::vector<center_section> sections;  // lexicographic by component vector
  group_table table;                     // pointwise composition
  std::uint32_t unit_index = 0;
};

center_group_result center_group(const groupoid_ptr& g);

// ---- automorphisms ----------------------------------------------------------

struct automorphism_witness {
  gen_morphism inverse;       // the swapped span (u, K, psi)
  mor_arrow left_to_unit;     // m∘inverse -> 1_G   (inverse applied first)
  mor_arrow right_to_unit;    // inverse∘m -> 1_G   (m applied first)
};

struct automorphism_check {
  bool ok = false;
  equivalence_report u_report;
  std::optional<automorphism_witness> witness;

  explicit operator bool() const { return ok; }
};

// Decision rule: (psi, K, u) is an automorphism iff u is an equivalence;
// the witness arrows are constructed explicitly and validated.
automorphism_check is_automorphism(const gen_morphism& m);

// All strict self-equivalences packaged as (id, G, u); complete for the
// coarse classes of self-spans.
mor_roster aut_roster(const groupoid_ptr& g);

// The isotropy isomorphism K(G) -> Γ_m and its inverse.
mor_arrow iso_psi(const gen_morphism& m, const center_section& sigma);
center_section iso_phi(const mor_arrow& self_arrow);

// ---- gerbe decomposition ----------------------------------------------------

struct gerbe_report {
  mor_roster roster;
  morphism_groupoid_result aut;                 // the groupoid over the roster
  std::vector<std::vector<arrow_id>> kernel_fibers;  // self-arrows per object
  std::uint32_t center_order = 0;
  bool fibers_match_center = false;  // each fiber is a group iso to K(G)
  groupoid_ptr quotient;             // arrows modulo the kernel
  std::vector<arrow_id> projection;  // aut arrow -> quotient arrow
  bool quotient_equivalent_to_discrete = false;
  std::uint32_t coarse_order = 0;  // |Aut(G)|
};

gerbe_report gerbe_decomposition(const groupoid_ptr& g);

// ---- the group |Aut(G)| -----------------------------------------------------

struct aut_group_table {
  mor_roster roster;
  std::vector<std::uint32_t> class_of;      // roster index -> class
  std::vector<std::uint32_t> class_reps;    // class -> least roster index
  group_table table;
  std::uint32_t unit_class = 0;
};

aut_group_table coarse_aut_group(const groupoid_ptr& g);

// Class of an arbitrary self-span within a computed table, by arrow search
// against the roster representatives.
std::uint32_t locate_class(const aut_group_table& aut, const gen_morphism& m);

// ---- group actions ----------------------------------------------------------

struct action_report {
  bool ok = false;
  std::optional<errc> failure;
  std::string detail;
  std::vector<std::uint32_t> classes;  // slice -> class in |Aut(G)|

  explicit operator bool() const { return ok; }
};

// A K-action presented as one self-span per group element; requires trivial
// K(G), every slice an automorphism, and the induced map a homomorphism.
action_report validate_group_action(const group_table& k,
                                    const std::vector<gen_morphism>& slices);

}  // namespace gpd

#endif
