#include "qdl/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdl/errors.hpp"

namespace qdl {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(where, e.what());
  }
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, file.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Json& require_field(const Json& j, const char* key, const std::string& where,
                          const std::string& path) {
  if (!j.is_object()) parse_fail(where, path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, path + ": missing required key \"" + key + "\"");
  return *it;
}

Rat rat_from_json(const Json& j, const std::string& where, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, path + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  parse_fail(where, path + ": expected an exact rational (\"p/q\" string or integer)");
}

std::string string_from_json(const Json& j, const std::string& where, const std::string& path) {
  if (!j.is_string()) parse_fail(where, path + ": expected a string");
  return j.get<std::string>();
}

std::size_t size_from_json(const Json& j, const std::string& where, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(where, path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

OrdinalSumTNorm tnorm_from_json(const Json& j, const std::string& where) {
  const Json& comps = require_field(j, "components", where, "$");
  if (!comps.is_array()) parse_fail(where, "$.components: expected an array");
  std::vector<Component> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "$.components[" + std::to_string(i) + "]";
    const Json& c = comps[i];
    Component comp;
    comp.lo = rat_from_json(require_field(c, "lo", where, path), where, path + ".lo");
    comp.hi = rat_from_json(require_field(c, "hi", where, path), where, path + ".hi");
    const std::string kind =
        string_from_json(require_field(c, "kind", where, path), where, path + ".kind");
    if (kind == "lukasiewicz") comp.kind = ComponentKind::lukasiewicz;
    else if (kind == "product") comp.kind = ComponentKind::product;
    else parse_fail(where, path + ".kind: expected \"lukasiewicz\" or \"product\", got \"" + kind + "\"");
    components.push_back(comp);
  }
  return OrdinalSumTNorm(components);
}

QuantaleTables tables_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "$: expected a quantale object");
  if (j.contains("standard")) {
    const std::string name = string_from_json(j["standard"], where, "$.standard");
    if (name == "boolean") return FiniteQuantale::standard_boolean()->tables();
    std::size_t points = 0;
    if (j.contains("points")) points = size_from_json(j["points"], where, "$.points");
    else parse_fail(where, "$.points: required for standard chain quantales");
    if (name == "godel_chain")
      return FiniteQuantale::standard_godel_chain(static_cast<int>(points))->tables();
    if (name == "lukasiewicz_chain")
      return FiniteQuantale::standard_lukasiewicz_chain(static_cast<int>(points))->tables();
    parse_fail(where, "$.standard: unknown quantale \"" + name + "\"");
  }
  if (j.contains("from_tnorm")) {
    const OrdinalSumTNorm t = tnorm_from_json(j["from_tnorm"], where);
    const Json& pts = require_field(j, "points", where, "$");
    if (!pts.is_array()) parse_fail(where, "$.points: expected an array of rationals");
    std::vector<Rat> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
      points.push_back(rat_from_json(pts[i], where, "$.points[" + std::to_string(i) + "]"));
    std::size_t cap = 64;
    if (j.contains("cap")) cap = size_from_json(j["cap"], where, "$.cap");
    return FiniteQuantale::from_tnorm(t, points, cap)->tables();
  }

  QuantaleTables tables;
  const Json& elems = require_field(j, "elements", where, "$");
  if (!elems.is_array() || elems.empty())
    parse_fail(where, "$.elements: expected a nonempty array of labels");
  for (std::size_t i = 0; i < elems.size(); ++i)
    tables.elements.push_back(
        string_from_json(elems[i], where, "$.elements[" + std::to_string(i) + "]"));
  const std::size_t n = tables.elements.size();
  auto label_index = [&](const std::string& label, const std::string& path) -> int {
    for (std::size_t i = 0; i < n; ++i)
      if (tables.elements[i] == label) return static_cast<int>(i);
    parse_fail(where, path + ": unknown element \"" + label + "\"");
  };

  const Json& le = require_field(j, "le", where, "$");
  if (!le.is_array() || le.size() != n) parse_fail(where, "$.le: expected an n-by-n 0/1 matrix");
  tables.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < n; ++r) {
    if (!le[r].is_array() || le[r].size() != n)
      parse_fail(where, "$.le[" + std::to_string(r) + "]: expected a row of length n");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& cell = le[r][c];
      if (cell.is_boolean()) tables.le[r][c] = cell.get<bool>();
      else if (cell.is_number_integer() || cell.is_number_unsigned()) {
        const long long v = cell.get<long long>();
        if (v != 0 && v != 1)
          parse_fail(where, "$.le[" + std::to_string(r) + "][" + std::to_string(c) +
                                "]: expected 0 or 1");
        tables.le[r][c] = v == 1;
      } else {
        parse_fail(where,
                   "$.le[" + std::to_string(r) + "][" + std::to_string(c) + "]: expected 0 or 1");
      }
    }
  }

  const Json& tensor = require_field(j, "tensor", where, "$");
  if (!tensor.is_array() || tensor.size() != n)
    parse_fail(where, "$.tensor: expected an n-by-n matrix of element labels");
  tables.tensor.assign(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    if (!tensor[r].is_array() || tensor[r].size() != n)
      parse_fail(where, "$.tensor[" + std::to_string(r) + "]: expected a row of length n");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string path = "$.tensor[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      tables.tensor[r][c] = label_index(string_from_json(tensor[r][c], where, path), path);
    }
  }

  tables.unit = label_index(string_from_json(require_field(j, "unit", where, "$"), where, "$.unit"),
                            "$.unit");
  return tables;
}

QuantalePtr quantale_from_json(const Json& j, const std::string& where) {
  return FiniteQuantale::make(tables_from_json(j, where));
}

QCategory qcat_from_json(const Json& j, const std::filesystem::path& base_dir,
                         const std::string& where) {
  if (!j.is_object()) parse_fail(where, "$: expected a category object");
  const Json& qj = require_field(j, "quantale", where, "$");
  QuantalePtr q;
  if (qj.is_string()) {
    std::filesystem::path ref(qj.get<std::string>());
    if (ref.is_relative()) ref = base_dir / ref;
    q = load_quantale(ref);
  } else {
    q = quantale_from_json(qj, where + " ($.quantale)");
  }

  QCategory a;
  a.q = q;
  const Json& objs = require_field(j, "objects", where, "$");
  if (!objs.is_array() || objs.empty())
    parse_fail(where, "$.objects: expected a nonempty array of labels");
  for (std::size_t i = 0; i < objs.size(); ++i)
    a.objects.push_back(string_from_json(objs[i], where, "$.objects[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < a.objects.size(); ++i)
    for (std::size_t k = i + 1; k < a.objects.size(); ++k)
      if (a.objects[i] == a.objects[k])
        parse_fail(where, "$.objects: duplicate label \"" + a.objects[i] + "\"");

  const std::size_t n = a.objects.size();
  const Json& hom = require_field(j, "hom", where, "$");
  if (!hom.is_array() || hom.size() != n)
    parse_fail(where, "$.hom: expected an n-by-n matrix of quantale element labels");
  a.hom.assign(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    if (!hom[r].is_array() || hom[r].size() != n)
      parse_fail(where, "$.hom[" + std::to_string(r) + "]: expected a row of length n");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string path = "$.hom[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const std::string label = string_from_json(hom[r][c], where, path);
      try {
        a.hom[r][c] = q->index_of(label);
      } catch (const Error&) {
        parse_fail(where, path + ": unknown quantale element \"" + label + "\"");
      }
    }
  }
  return a;
}

Json tnorm_to_json(const OrdinalSumTNorm& t) {
  Json comps = Json::array();
  for (const Component& c : t.components()) {
    Json jc;
    jc["lo"] = to_string(c.lo);
    jc["hi"] = to_string(c.hi);
    jc["kind"] = c.kind == ComponentKind::lukasiewicz ? "lukasiewicz" : "product";
    comps.push_back(jc);
  }
  Json out;
  out["components"] = comps;
  return out;
}

Json quantale_to_json(const FiniteQuantale& q) {
  Json out;
  out["elements"] = q.labels();
  Json le = Json::array();
  for (int r = 0; r < q.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < q.size(); ++c) row.push_back(q.le(r, c) ? 1 : 0);
    le.push_back(row);
  }
  out["le"] = le;
  Json tensor = Json::array();
  for (int r = 0; r < q.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < q.size(); ++c) row.push_back(q.label(q.tensor(r, c)));
    tensor.push_back(row);
  }
  out["tensor"] = tensor;
  out["unit"] = q.label(q.unit());
  return out;
}

Json qcat_to_json(const QCategory& a) {
  Json out;
  out["quantale"] = quantale_to_json(*a.q);
  out["objects"] = a.objects;
  Json hom = Json::array();
  for (int r = 0; r < a.size(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.size(); ++c) row.push_back(a.q->label(a.hom[r][c]));
    hom.push_back(row);
  }
  out["hom"] = hom;
  return out;
}

}  // namespace

OrdinalSumTNorm tnorm_from_json_text(const std::string& text, const std::string& where) {
  return tnorm_from_json(parse_json(text, where), where);
}

OrdinalSumTNorm load_tnorm(const std::filesystem::path& file) {
  return tnorm_from_json_text(read_file(file), file.string());
}

std::string tnorm_to_json_text(const OrdinalSumTNorm& t) { return tnorm_to_json(t).dump(2); }

QuantalePtr quantale_from_json_text(const std::string& text, const std::string& where) {
  return quantale_from_json(parse_json(text, where), where);
}

QuantalePtr load_quantale(const std::filesystem::path& file) {
  return quantale_from_json_text(read_file(file), file.string());
}

QuantaleTables quantale_tables_from_json_text(const std::string& text, const std::string& where) {
  return tables_from_json(parse_json(text, where), where);
}

QuantaleTables load_quantale_tables(const std::filesystem::path& file) {
  return quantale_tables_from_json_text(read_file(file), file.string());
}

std::string quantale_to_json_text(const FiniteQuantale& q) { return quantale_to_json(q).dump(2); }

QCategory qcat_from_json_text(const std::string& text, const std::filesystem::path& base_dir,
                              const std::string& where) {
  return qcat_from_json(parse_json(text, where), base_dir, where);
}

QCategory load_qcat(const std::filesystem::path& file) {
  return qcat_from_json_text(read_file(file), file.parent_path(), file.string());
}

std::string qcat_to_json_text(const QCategory& a) { return qcat_to_json(a).dump(2); }

}  // namespace qdl
