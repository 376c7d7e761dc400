#include "gpd/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gpd::io {

using nlohmann::json;

namespace {

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(errc::format_error, "cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::format_error, file.string() + ": " + e.what());
  }
  return j;
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) fail(errc::format_error, "cannot write " + file.string());
  out << text;
}

std::filesystem::path sibling(const std::filesystem::path& base,
                              const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p;
  return base.parent_path() / p;
}

raw_groupoid parse_raw(const json& j, const std::string& where) {
  if (!j.is_object()) fail(errc::format_error, where + ": object expected");
  raw_groupoid raw;
  try {
    raw.name = j.value("name", std::string{});
    raw.objects = j.at("objects").get<std::uint32_t>();
    for (const auto& pair : j.at("arrows")) {
      if (!pair.is_array() || pair.size() != 2)
        fail(errc::format_error, where + ": arrows must be [src,tgt] pairs");
      raw.arrows.emplace_back(pair[0].get<object_id>(),
                              pair[1].get<object_id>());
    }
    for (const auto& triple : j.at("compose")) {
      if (!triple.is_array() || triple.size() != 3)
        fail(errc::format_error,
             where + ": compose must be [x,y,z] triples");
      raw.compose.push_back({triple[0].get<arrow_id>(),
                             triple[1].get<arrow_id>(),
                             triple[2].get<arrow_id>()});
    }
  } catch (const json::exception& e) {
    fail(errc::format_error, where + ": " + e.what());
  }
  return raw;
}

}  // namespace

raw_groupoid parse_groupoid(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::format_error, e.what());
  }
  return parse_raw(j, "groupoid");
}

groupoid_ptr load_groupoid(const std::filesystem::path& file) {
  return finite_groupoid::validate(
      parse_raw(read_json_file(file), file.string()));
}

std::string format_groupoid(const finite_groupoid& g) {
  raw_groupoid raw = g.to_raw();
  json j;
  j["name"] = raw.name;
  j["objects"] = raw.objects;
  j["arrows"] = json::array();
  for (auto [s, t] : raw.arrows) j["arrows"].push_back({s, t});
  j["compose"] = json::array();
  for (auto [x, y, z] : raw.compose) j["compose"].push_back({x, y, z});
  return j.dump(1);
}

void save_groupoid(const finite_groupoid& g,
                   const std::filesystem::path& file) {
  write_text(file, format_groupoid(g));
}

strict_morphism load_morphism(const std::filesystem::path& file) {
  json j = read_json_file(file);
  strict_morphism f;
  try {
    f.dom = load_groupoid(sibling(file, j.at("dom").get<std::string>()));
    f.cod = load_groupoid(sibling(file, j.at("cod").get<std::string>()));
    f.f0 = j.at("f0").get<std::vector<object_id>>();
    f.f1 = j.at("f1").get<std::vector<arrow_id>>();
  } catch (const json::exception& e) {
    fail(errc::format_error, file.string() + ": " + e.what());
  }
  f.verify();
  return f;
}

void save_morphism(const strict_morphism& f, const std::filesystem::path& file,
                   const std::string& dom_path, const std::string& cod_path) {
  json j;
  j["dom"] = dom_path;
  j["cod"] = cod_path;
  j["f0"] = f.f0;
  j["f1"] = f.f1;
  write_text(file, j.dump(1));
}

gen_morphism load_gen_morphism(const std::filesystem::path& file) {
  json j = read_json_file(file);
  try {
    strict_morphism psi =
        load_morphism(sibling(file, j.at("psi").get<std::string>()));
    groupoid_ptr k = load_groupoid(sibling(file, j.at("k").get<std::string>()));
    strict_morphism u =
        load_morphism(sibling(file, j.at("u").get<std::string>()));
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "general" && mode != "full")
      fail(errc::format_error, file.string() + ": bad mode " + mode);
    if (!same_groupoid(*psi.dom, *k) || !same_groupoid(*u.dom, *k))
      fail(errc::format_error,
           file.string() + ": legs do not start from the named apex");
    return gen_morphism(psi, u,
                        mode == "full" ? mor_mode::full : mor_mode::general);
  } catch (const json::exception& e) {
    fail(errc::format_error, file.string() + ": " + e.what());
  }
}

void save_gen_morphism(const gen_morphism& m, const std::filesystem::path& file,
                       const std::string& psi_path, const std::string& k_path,
                       const std::string& u_path) {
  json j;
  j["psi"] = psi_path;
  j["k"] = k_path;
  j["u"] = u_path;
  j["mode"] = m.mode() == mor_mode::full ? "full" : "general";
  write_text(file, j.dump(1));
}

std::vector<gen_morphism> load_roster(const std::filesystem::path& file) {
  json j = read_json_file(file);
  if (!j.is_array())
    fail(errc::format_error, file.string() + ": list of span paths expected");
  std::vector<gen_morphism> out;
  for (const auto& entry : j)
    out.push_back(load_gen_morphism(sibling(file, entry.get<std::string>())));
  return out;
}

std::string format_fiber_bundle_decode(const fiber_product_bundle& b) {
  json j;
  j["objects"] = json::array();
  for (const fp_object& o : *b.objects)
    j["objects"].push_back({o.left, o.mid, o.right});
  j["arrows"] = json::array();
  for (const fp_arrow& a : *b.arrows)
    j["arrows"].push_back({a.left, a.at, a.right});
  return j.dump(1);
}

std::string format_strict_bundle_decode(const strict_fiber_product_bundle& b) {
  json j;
  j["objects"] = json::array();
  for (const sfp_object& o : *b.objects)
    j["objects"].push_back({o.left, o.right});
  j["arrows"] = json::array();
  for (const sfp_arrow& a : *b.arrows)
    j["arrows"].push_back({a.left, a.right});
  return j.dump(1);
}

}  // namespace gpd::io
