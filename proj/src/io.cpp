#include "gscope/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "gscope/errors.hpp"

namespace gscope::io {

namespace {

std::uint64_t require_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw UsageError(where + ": expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const Json& require_key(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw UsageError(where + ": missing key \"" + key + "\"");
  return doc.at(key);
}

}  // namespace

groups::Ambient parse_ambient(const Json& doc) {
  const Json& kind = require_key(doc, "kind", "group");
  if (!kind.is_string()) throw UsageError("group.kind: expected a string");
  if (kind == "perm") {
    const std::uint64_t degree = require_uint(require_key(doc, "degree", "group"), "group.degree");
    return groups::Ambient::permutations(degree);
  }
  if (kind == "mat4") {
    const Json& field = require_key(doc, "field", "group");
    const auto m = require_uint(require_key(field, "m", "group.field"), "group.field.m");
    const auto modulus = require_uint(require_key(field, "modulus", "group.field"), "group.field.modulus");
    return groups::Ambient::matrices(ff2m::FieldParams(static_cast<unsigned>(m), static_cast<std::uint32_t>(modulus)));
  }
  throw UsageError("group.kind: expected \"perm\" or \"mat4\", got " + kind.dump());
}

std::vector<groups::Encoding> parse_elements(const Json& array, const groups::Ambient& ambient,
                                             const std::string& where) {
  if (!array.is_array()) throw UsageError(where + ": expected an array of elements");
  std::vector<groups::Encoding> out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& item = array[i];
    if (!item.is_array()) throw UsageError(at + ": expected an array");
    try {
      if (ambient.kind() == groups::Kind::Perm) {
        groups::Perm perm;
        for (std::size_t k = 0; k < item.size(); ++k) {
          const auto v = require_uint(item[k], at + "[" + std::to_string(k) + "]");
          if (v > 65535) throw UsageError(at + "[" + std::to_string(k) + "]: image too large");
          perm.images.push_back(static_cast<groups::Word>(v));
        }
        out.push_back(ambient.encode(perm));
      } else {
        if (item.size() != 16) throw UsageError(at + ": a 4x4 matrix needs 16 entries, got " + std::to_string(item.size()));
        groups::Mat4 mat;
        for (std::size_t k = 0; k < 16; ++k) {
          const auto v = require_uint(item[k], at + "[" + std::to_string(k) + "]");
          if (v > 0xFFFF) throw UsageError(at + "[" + std::to_string(k) + "]: entry too large");
          mat.entries[k] = {static_cast<std::uint32_t>(v)};
        }
        out.push_back(ambient.encode(mat));
      }
    } catch (const UsageError& e) {
      const std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) throw;
      throw UsageError(at + ": " + msg);
    } catch (const DomainError& e) {
      throw DomainError(at + ": " + e.what());
    }
  }
  return out;
}

groups::Group parse_group(const Json& doc, std::size_t cap) {
  const groups::Ambient ambient = parse_ambient(doc);
  const auto gens = parse_elements(require_key(doc, "generators", "group"), ambient, "group.generators");
  return groups::Group::closure(ambient, gens, cap);
}

Json read_json(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw UsageError("cannot open '" + path_or_inline + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

groups::Group parse_group_input(const std::string& path_or_inline, std::size_t cap) {
  return parse_group(read_json(path_or_inline), cap);
}

Json ambient_to_json(const groups::Ambient& ambient) {
  Json j;
  if (ambient.kind() == groups::Kind::Perm) {
    j["kind"] = "perm";
    j["degree"] = ambient.degree();
  } else {
    j["kind"] = "mat4";
    j["field"] = {{"m", ambient.field().params().m()}, {"modulus", ambient.field().params().modulus()}};
  }
  return j;
}

Json element_to_json(std::span<const groups::Word> words) {
  Json a = Json::array();
  for (groups::Word w : words) a.push_back(w);
  return a;
}

Json group_to_json(const groups::Group& group) {
  Json j = ambient_to_json(group.ambient());
  Json gens = Json::array();
  for (std::size_t g : group.generators()) gens.push_back(element_to_json(group.element(g)));
  j["generators"] = gens;
  return j;
}

Json classes_to_json(const groups::ConjClasses& classes, const groups::Group& group) {
  Json j;
  j["order"] = group.order();
  j["class_count"] = classes.count();
  j["class_sizes"] = classes.sizes;
  j["element_orders"] = classes.element_orders;
  j["inverse_class"] = classes.inverse_class;
  Json reps = Json::array();
  for (std::size_t r : classes.reps) reps.push_back(element_to_json(group.element(r)));
  j["representatives"] = reps;
  return j;
}

Json table_to_json(const chartab::CharacterTable& table) {
  Json j;
  j["p"] = table.context().p;
  j["e"] = table.context().e;
  j["omega"] = table.context().omega;
  j["order"] = table.group_order();
  j["class_sizes"] = table.classes().sizes;
  j["element_orders"] = table.classes().element_orders;
  j["degrees"] = table.degrees();
  j["values"] = table.values();
  return j;
}

std::string table_pretty(const chartab::CharacterTable& table) {
  const std::uint64_t p = table.context().p;
  const std::size_t r = table.classes().count();
  auto sym = [p](std::uint64_t v) {
    return v > p / 2 ? std::to_string(-static_cast<std::int64_t>(p - v)) : std::to_string(v);
  };
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"", "class"};
  std::vector<std::string> orders{"", "order"};
  std::vector<std::string> sizes{"", "size"};
  for (std::size_t k = 0; k < r; ++k) {
    header.push_back(std::to_string(k));
    orders.push_back(std::to_string(table.classes().element_orders[k]));
    sizes.push_back(std::to_string(table.classes().sizes[k]));
  }
  cells.push_back(header);
  cells.push_back(orders);
  cells.push_back(sizes);
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    std::vector<std::string> row{"X" + std::to_string(chi), ""};
    for (std::size_t k = 0; k < r; ++k) row.push_back(sym(table.value(chi, k)));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(r + 2, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "p = " << p << ", |G| = " << table.group_order() << ", " << r << " classes\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      os << (c == 0 ? "" : " ") << std::setw(static_cast<int>(width[c])) << cells[i][c];
    }
    os << '\n';
  }
  return os.str();
}

Json sgp_report_to_json(const gelfand::SgpReport& report) {
  Json j;
  j["verdict"] = report.verdict ? "yes" : "no";
  j["method"] = gelfand::method_name(report.method);
  j["max_multiplicity"] = report.max_multiplicity ? Json(*report.max_multiplicity) : Json(nullptr);
  if (report.witness) {
    j["witness"] = {{"chi", report.witness->first}, {"psi", report.witness->second}};
  } else {
    j["witness"] = nullptr;
  }
  j["filter_detail"] = {{"total_degree_h", report.filter.total_degree_h},
                        {"max_degree_g", report.filter.max_degree_g},
                        {"fired", report.filter.fired}};
  return j;
}

Json gelfand_report_to_json(const gelfand::GelfandReport& report) {
  Json j;
  j["verdict"] = report.verdict ? "yes" : "no";
  j["max_multiplicity"] = report.max_multiplicity;
  j["rank"] = report.rank;
  return j;
}

Json scan_to_json(const gelfand::ScanResult& scan, const groups::Group& group) {
  Json entries = Json::array();
  Json yes_labels = Json::array();
  for (const auto& e : scan.entries) {
    Json j;
    j["label"] = e.label;
    j["order"] = e.order;
    j["conjugates"] = e.conjugates;
    j["class_count"] = e.class_count;
    j["total_degree"] = e.total_degree;
    Json gens = Json::array();
    for (std::size_t g : e.generators) gens.push_back(element_to_json(group.element(g)));
    j["generators"] = gens;
    j["verdict"] = e.verdict ? "yes" : "no";
    j["report"] = sgp_report_to_json(e.report);
    j["full"] = e.full ? sgp_report_to_json(*e.full) : Json(nullptr);
    entries.push_back(j);
    if (e.verdict) yes_labels.push_back(e.label);
  }
  Json violations = Json::array();
  for (const auto& v : scan.monotonicity_violations) violations.push_back({{"small", v.small}, {"big", v.big}});
  Json j;
  j["group"] = {{"order", group.order()}};
  j["subgroup_classes"] = scan.entries.size();
  j["entries"] = entries;
  j["strong_gelfand"] = {{"classes", scan.yes_classes}, {"raw", scan.yes_raw}, {"labels", yes_labels}};
  j["monotonicity"] = {{"containments", scan.containments.size()},
                       {"violations", violations},
                       {"ok", scan.monotonicity_violations.empty()}};
  return j;
}

}  // namespace gscope::io
