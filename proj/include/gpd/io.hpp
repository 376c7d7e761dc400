#ifndef GPD_IO_HPP
#define GPD_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "gpd/fiber_product.hpp"
#include "gpd/functors.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/morphism_cat.hpp"

namespace gpd::io {

// Groupoid files: fields `name`, `objects`, `arrows` ([src,tgt] pairs, arrow
// id = position), `compose` ([x,y,z] triples).  Units and inverses are never
// stored.  Morphism files: `dom`, `cod` (paths), `f0`, `f1`.  Span files:
// `psi`, `k`, `u` (paths), `mode`.  Roster files: a list of span paths.
// Paths are resolved relative to the referencing file.

raw_groupoid parse_groupoid(const std::string& text);
groupoid_ptr load_groupoid(const std::filesystem::path& file);
std::string format_groupoid(const finite_groupoid& g);
void save_groupoid(const finite_groupoid& g, const std::filesystem::path& file);

strict_morphism load_morphism(const std::filesystem::path& file);
// Writes the maps together with the paths the dom/cod were written to.
void save_morphism(const strict_morphism& f,
                   const std::filesystem::path& file,
                   const std::string& dom_path, const std::string& cod_path);

gen_morphism load_gen_morphism(const std::filesystem::path& file);
void save_gen_morphism(const gen_morphism& m, const std::filesystem::path& file,
                       const std::string& psi_path,
                       const std::string& k_path, const std::string& u_path);

std::vector<gen_morphism> load_roster(const std::filesystem::path& file);

std::string format_fiber_bundle_decode(const fiber_product_bundle& b);
std::string format_strict_bundle_decode(const strict_fiber_product_bundle& b);

}  // namespace gpd::io

#endif
