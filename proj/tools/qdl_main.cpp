// qdl: command-line front end for the exact quantale/enriched-order toolkit.
//
// Exit codes: 0 = success / positive verdict, 1 = negative verdict
// (classification fails, equation gap found, checker says no), 2 = any error
// (malformed input, axiom violations on load, unsupported request).
//
// Default output is a deterministic JSON report; --plain prints bare values.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdl/checkers.hpp"
#include "qdl/errors.hpp"
#include "qdl/interval_check.hpp"
#include "qdl/json_io.hpp"
#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "qdl/rational.hpp"
#include "qdl/tnorm.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Cli {
  bool plain = false;
  bool timing = false;
  std::size_t cap = qdl::kDefaultCap;
  bool force_brute = false;

  std::string command;
  Json input = Json::object();
  Json result;
  std::vector<std::string> plain_lines;
  std::optional<std::string> raw_text;  // corpus: plain text either way
  int exit_code = 0;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// ---- JSON shaping helpers -------------------------------------------------

Json component_json(const qdl::Component& c) {
  Json j;
  j["lo"] = qdl::to_string(c.lo);
  j["hi"] = qdl::to_string(c.hi);
  j["kind"] = qdl::to_string(c.kind);
  return j;
}

Json witness_json(const qdl::DiscontinuityWitness& w) {
  Json j;
  j["point"] = Json::array({qdl::to_string(w.point.first), qdl::to_string(w.point.second)});
  j["left_limit"] = qdl::to_string(w.left_limit);
  j["value"] = qdl::to_string(w.value);
  return j;
}

Json classification_json(const qdl::ClassificationResult& r) {
  Json j;
  j["verdict"] = qdl::to_string(r.verdict);
  j["passes"] = r.passes();
  Json off = Json::array();
  for (const auto& c : r.offending) off.push_back(component_json(c));
  j["offending"] = off;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

Json equation_json(const qdl::ContinuityCheckReport& r) {
  Json j;
  j["c"] = qdl::to_string(r.c);
  j["x"] = qdl::to_string(r.x);
  j["lhs"] = qdl::to_string(r.lhs);
  j["rhs"] = qdl::to_string(r.rhs);
  j["gap"] = qdl::to_string(r.gap);
  j["holds"] = r.holds();
  return j;
}

Json violations_json(const std::vector<qdl::AxiomViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json j;
    j["law"] = v.axiom;
    j["witness"] = v.witness;
    arr.push_back(j);
  }
  return arr;
}

Json violations_json(const std::vector<qdl::CategoryViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json j;
    j["law"] = v.law;
    j["witness"] = v.witness;
    arr.push_back(j);
  }
  return arr;
}

Json search_json(const qdl::ObjectSearch& s, const qdl::QCategory& a) {
  Json j;
  j["found"] = s.found();
  if (s.found()) {
    j["object"] = a.objects[*s.object];
    j["unique"] = s.unique;
  }
  return j;
}

Json checker_json(const qdl::CheckerReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["method"] = qdl::to_string(r.method);
  if (r.witness) {
    Json w;
    w["what"] = r.witness->what;
    Json detail = Json::object();
    for (const auto& [k, v] : r.witness->detail) detail[k] = v;
    w["detail"] = detail;
    j["witness"] = w;
  }
  return j;
}

Json labels_json(const qdl::QCategory& a, const std::vector<int>& vec) {
  Json arr = Json::array();
  for (int v : vec) arr.push_back(a.q->label(v));
  return arr;
}

// ---- shared loading / parsing ----------------------------------------------

qdl::Rat arg_rat(const std::string& text, const std::string& what) {
  try {
    return qdl::parse_rat(text);
  } catch (const qdl::Error&) {
    throw qdl::Error(qdl::ErrorKind::ParseError,
                     what + ": expected a rational \"p/q\", got \"" + text + "\"");
  }
}

qdl::QCategory load_validated_qcat(const std::string& file) {
  qdl::QCategory a = qdl::load_qcat(file);
  const auto violations = qdl::validate_category(a);
  if (!violations.empty())
    throw qdl::Error(qdl::ErrorKind::ShapeError,
                     file + ": category axioms fail (" + violations.front().law + "); run `qdl qcat validate` for details");
  return a;
}

std::vector<int> parse_weight_vector(const qdl::QCategory& a, const std::string& csv,
                                     const std::string& what) {
  const auto labels = split_csv(csv);
  if (static_cast<int>(labels.size()) != a.size())
    throw qdl::Error(qdl::ErrorKind::ShapeError,
                     what + ": expected " + std::to_string(a.size()) + " comma-separated values, got " +
                         std::to_string(labels.size()));
  std::vector<int> vec;
  for (const auto& l : labels) vec.push_back(a.q->index_of(l));
  return vec;
}

qdl::ObjMap parse_obj_map(const qdl::QCategory& domain, const qdl::QCategory& codomain,
                          const std::string& csv, const std::string& what) {
  const auto labels = split_csv(csv);
  if (static_cast<int>(labels.size()) != domain.size())
    throw qdl::Error(qdl::ErrorKind::ShapeError,
                     what + ": expected one image per object (" + std::to_string(domain.size()) +
                         "), got " + std::to_string(labels.size()));
  qdl::ObjMap f;
  for (const auto& l : labels) f.push_back(codomain.object_index(l));
  return f;
}

qdl::CheckerReport dispatch_check(const std::string& name, const qdl::QCategory& a,
                                  const qdl::CheckOptions& opts) {
  if (name == "cocomplete") return qdl::is_cocomplete(a, opts);
  if (name == "complete") return qdl::is_complete(a, opts);
  if (name == "cd") return qdl::is_completely_distributive(a, opts);
  if (name == "cocd") return qdl::is_completely_codistributive(a, opts);
  if (name == "continuous") return qdl::is_continuous_qcat(a, opts);
  if (name == "lambda-gamma" || name == "lambda_gamma") return qdl::check_lambda_gamma(a, opts);
  if (name == "inclusion") return qdl::check_inclusion_left_adjoint(a, opts);
  if (name == "cotensor-scott" || name == "cotensor_scott")
    return qdl::check_cotensor_scott_continuity(a, opts);
  throw qdl::Error(qdl::ErrorKind::UnknownElement, "unknown check \"" + name + "\"");
}

// ---- corpus runner ----------------------------------------------------------

std::string bool_or_error_to_string(const std::variant<bool, std::string>& v) {
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

void run_corpus(Cli& ctx, const std::string& dir_arg) {
  namespace fs = std::filesystem;
  const fs::path dir(dir_arg);
  const fs::path manifest_path = dir / "manifest.json";
  std::string text;
  {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in)
      throw qdl::Error(qdl::ErrorKind::ParseError, manifest_path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json manifest;
  try {
    manifest = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw qdl::Error(qdl::ErrorKind::ParseError, manifest_path.string() + ": " + e.what());
  }
  if (!manifest.is_object() || !manifest.contains("cases") || !manifest["cases"].is_array())
    throw qdl::Error(qdl::ErrorKind::ParseError,
                     manifest_path.string() + ": expected {\"cases\": [...]}");

  std::ostringstream out;
  int failures = 0;
  int total = 0;
  for (const Json& c : manifest["cases"]) {
    ++total;
    const std::string name = c.value("name", std::string("case-") + std::to_string(total));
    std::vector<std::string> problems;
    try {
      const std::string kind = c.at("kind").get<std::string>();
      fs::path spec = fs::path(c.at("spec").get<std::string>());
      if (spec.is_relative()) spec = dir / spec;
      const Json expect = c.value("expect", Json::object());

      if (kind == "tnorm") {
        const qdl::OrdinalSumTNorm t = qdl::load_tnorm(spec);
        for (const auto& [key, val] : expect.items()) {
          if (key == "classification") {
            const bool got = qdl::classify(t).passes();
            if (got != val.get<bool>())
              problems.push_back("classification expected " + val.dump() + ", got " +
                                 (got ? "true" : "false"));
          } else if (key == "offending") {
            const auto got = qdl::classify(t).offending.size();
            if (got != val.get<std::size_t>())
              problems.push_back("offending expected " + val.dump() + ", got " +
                                 std::to_string(got));
          } else if (key == "counterexample_empty") {
            const bool got = qdl::counterexample_report(t, 3).empty();
            if (got != val.get<bool>())
              problems.push_back("counterexample_empty expected " + val.dump() + ", got " +
                                 (got ? "true" : "false"));
          } else if (key == "idempotent_intervals") {
            const auto got = qdl::idempotents(t).size();
            if (got != val.get<std::size_t>())
              problems.push_back("idempotent_intervals expected " + val.dump() + ", got " +
                                 std::to_string(got));
          } else if (key == "scan_empty") {
            const bool got = qdl::scan_offdiagonal(t, qdl::Rat(1) / 64, qdl::Rat(1) / 32).empty();
            if (got != val.get<bool>())
              problems.push_back("scan_empty expected " + val.dump() + ", got " +
                                 (got ? "true" : "false"));
          } else {
            problems.push_back("unknown expectation \"" + key + "\"");
          }
        }
      } else if (kind == "qcat") {
        const qdl::QCategory a = qdl::load_qcat(spec);
        for (const auto& [key, val] : expect.items()) {
          std::variant<bool, std::string> got;
          if (key == "separated") {
            got = qdl::is_separated(a);
          } else {
            try {
              got = dispatch_check(key, a, qdl::CheckOptions{ctx.cap, false}).verdict;
            } catch (const qdl::Error& e) {
              got = std::string("error:") + qdl::to_string(e.kind);
            }
          }
          std::variant<bool, std::string> want;
          if (val.is_boolean()) want = val.get<bool>();
          else want = val.get<std::string>();
          if (got != want)
            problems.push_back(key + " expected " + bool_or_error_to_string(want) + ", got " +
                               bool_or_error_to_string(got));
        }
      } else {
        problems.push_back("unknown kind \"" + kind + "\"");
      }
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      out << "ok   " << name << "\n";
    } else {
      ++failures;
      out << "FAIL " << name << ":";
      for (const auto& p : problems) out << " " << p << ";";
      out << "\n";
    }
  }
  out << total << " cases, " << failures << " failures\n";
  ctx.raw_text = out.str();
  ctx.exit_code = failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  Cli ctx;

  CLI::App app{"exact verification toolkit for t-norm algebras and quantale-enriched categories"};
  app.set_version_flag("--version", "qdl 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", ctx.plain, "print bare values instead of the JSON report");
  app.add_flag("--timing", ctx.timing, "include wall-clock timing in the JSON report");
  if (const char* env = std::getenv("QDL_CAP")) {
    try {
      ctx.cap = static_cast<std::size_t>(std::stoull(env));
    } catch (...) {
      std::cerr << "error: ParseError: QDL_CAP must be a non-negative integer, got \"" << env
                << "\"\n";
      return 2;
    }
  }
  app.add_option("--cap", ctx.cap, "enumeration cap for weight families (env QDL_CAP)");
  app.add_flag("--oracle,--force-brute", ctx.force_brute,
               "insist on the brute-force oracle arm even past the cap");

  auto make_group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto make_leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* leaf = parent->add_subcommand(name, desc);
    leaf->fallthrough();
    return leaf;
  };

  // ---------------------------------------------------------------- tnorm --
  CLI::App* tnorm = make_group("tnorm", "ordinal-sum t-norm operations");
  struct TnormArgs {
    std::string file, x, y, step = "1/64", tol = "1/32";
    std::size_t component = 0;
  } ta;

  {
    CLI::App* c = make_leaf(tnorm, "eval", "evaluate x & y");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->add_option("x", ta.x)->required();
    c->add_option("y", ta.y)->required();
    c->callback([&] {
      ctx.command = "tnorm.eval";
      const auto t = qdl::load_tnorm(ta.file);
      const qdl::Rat v = qdl::eval(t, arg_rat(ta.x, "x"), arg_rat(ta.y, "y"));
      ctx.input = {{"tnorm", ta.file}, {"x", ta.x}, {"y", ta.y}};
      ctx.result = {{"value", qdl::to_string(v)}};
      ctx.plain_lines = {qdl::to_string(v)};
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "residuum", "evaluate x -> y");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->add_option("x", ta.x)->required();
    c->add_option("y", ta.y)->required();
    c->callback([&] {
      ctx.command = "tnorm.residuum";
      const auto t = qdl::load_tnorm(ta.file);
      const qdl::Rat v = qdl::residuum(t, arg_rat(ta.x, "x"), arg_rat(ta.y, "y"));
      ctx.input = {{"tnorm", ta.file}, {"x", ta.x}, {"y", ta.y}};
      ctx.result = {{"value", qdl::to_string(v)}};
      ctx.plain_lines = {qdl::to_string(v)};
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "left-limit", "left limit of the residuum x -> (.) at c");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->add_option("x", ta.x)->required();
    c->add_option("c", ta.y)->required();
    c->callback([&] {
      ctx.command = "tnorm.left-limit";
      const auto t = qdl::load_tnorm(ta.file);
      const qdl::Rat v = qdl::left_limit_residuum(t, arg_rat(ta.x, "x"), arg_rat(ta.y, "c"));
      ctx.input = {{"tnorm", ta.file}, {"x", ta.x}, {"c", ta.y}};
      ctx.result = {{"value", qdl::to_string(v)}};
      ctx.plain_lines = {qdl::to_string(v)};
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "idempotents", "idempotent elements as closed intervals");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->callback([&] {
      ctx.command = "tnorm.idempotents";
      const auto t = qdl::load_tnorm(ta.file);
      ctx.input = {{"tnorm", ta.file}};
      Json arr = Json::array();
      for (const auto& iv : qdl::idempotents(t)) {
        arr.push_back(Json::array({qdl::to_string(iv.lo), qdl::to_string(iv.hi)}));
        ctx.plain_lines.push_back(qdl::to_string(iv.lo) + " " + qdl::to_string(iv.hi));
      }
      ctx.result = {{"intervals", arr}};
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "classify",
                            "decide whether all completely distributive categories enriched in "
                            "this algebra are continuous");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->callback([&] {
      ctx.command = "tnorm.classify";
      const auto t = qdl::load_tnorm(ta.file);
      const auto r = qdl::classify(t);
      ctx.input = {{"tnorm", ta.file}};
      ctx.result = classification_json(r);
      ctx.plain_lines = {qdl::to_string(r.verdict)};
      ctx.exit_code = r.passes() ? 0 : 1;
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "witness", "residuum jump witness for an offending component");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->add_option("--component", ta.component, "component index (sorted by lower bound)")
        ->capture_default_str();
    c->callback([&] {
      ctx.command = "tnorm.witness";
      const auto t = qdl::load_tnorm(ta.file);
      if (ta.component >= t.components().size())
        throw qdl::Error(qdl::ErrorKind::OutOfRange,
                         "component index " + std::to_string(ta.component) + " out of range");
      const auto w = qdl::discontinuity_witness(t, t.components()[ta.component]);
      ctx.input = {{"tnorm", ta.file}, {"component", ta.component}};
      ctx.result = witness_json(w);
      ctx.plain_lines = {qdl::to_string(w.point.first) + " " + qdl::to_string(w.point.second) +
                         " " + qdl::to_string(w.left_limit) + " " + qdl::to_string(w.value)};
    });
  }
  {
    CLI::App* c = make_leaf(tnorm, "scan", "grid scan for confirmed off-diagonal residuum jumps");
    c->add_option("-t,--tnorm", ta.file, "t-norm JSON file")->required();
    c->add_option("--step", ta.step, "grid step")->capture_default_str();
    c->add_option("--tol", ta.tol, "minimal confirmed jump")->capture_default_str();
    c->callback([&] {
      ctx.command = "tnorm.scan";
      const auto t = qdl::load_tnorm(ta.file);
      const auto jumps =
          qdl::scan_offdiagonal(t, arg_rat(ta.step, "--step"), arg_rat(ta.tol, "--tol"));
      ctx.input = {{"tnorm", ta.file}, {"step", ta.step}, {"tol", ta.tol}};
      Json arr = Json::array();
      for (const auto& [x, y] : jumps) {
        arr.push_back(Json::array({qdl::to_string(x), qdl::to_string(y)}));
        ctx.plain_lines.push_back(qdl::to_string(x) + " " + qdl::to_string(y));
      }
      ctx.result = {{"jumps", arr}, {"count", jumps.size()}};
      ctx.exit_code = jumps.empty() ? 0 : 1;
    });
  }

  // -------------------------------------------------------------- interval --
  CLI::App* interval = make_group("interval", "continuity equation on the unit interval");
  struct IntervalArgs {
    std::string file, threshold, x;
    int samples = 3;
  } ia;

  {
    CLI::App* c = make_leaf(interval, "phi", "evaluate the ideal weight below c at x");
    c->add_option("-t,--tnorm", ia.file, "t-norm JSON file")->required();
    c->add_option("--threshold", ia.threshold, "threshold c in (0,1]")->required();
    c->add_option("x", ia.x)->required();
    c->callback([&] {
      ctx.command = "interval.phi";
      const auto t = qdl::load_tnorm(ia.file);
      const qdl::IdealWeightBelow w{arg_rat(ia.threshold, "--threshold")};
      const qdl::Rat v = qdl::eval_ideal_weight(t, w, arg_rat(ia.x, "x"));
      ctx.input = {{"tnorm", ia.file}, {"threshold", ia.threshold}, {"x", ia.x}};
      ctx.result = {{"value", qdl::to_string(v)}};
      ctx.plain_lines = {qdl::to_string(v)};
    });
  }
  {
    CLI::App* c = make_leaf(interval, "sup", "colimit of the ideal weight below c");
    c->add_option("-t,--tnorm", ia.file, "t-norm JSON file")->required();
    c->add_option("--threshold", ia.threshold, "threshold c in (0,1]")->required();
    c->callback([&] {
      ctx.command = "interval.sup";
      const auto t = qdl::load_tnorm(ia.file);
      const qdl::IdealWeightBelow w{arg_rat(ia.threshold, "--threshold")};
      const qdl::Rat v = qdl::sup_of_ideal_weight(t, w);
      ctx.input = {{"tnorm", ia.file}, {"threshold", ia.threshold}};
      ctx.result = {{"value", qdl::to_string(v)}};
      ctx.plain_lines = {qdl::to_string(v)};
    });
  }
  {
    CLI::App* c = make_leaf(interval, "check", "evaluate the continuity equation at (c, x)");
    c->add_option("-t,--tnorm", ia.file, "t-norm JSON file")->required();
    c->add_option("--threshold", ia.threshold, "threshold c in (0,1]")->required();
    c->add_option("x", ia.x)->required();
    c->callback([&] {
      ctx.command = "interval.check";
      const auto t = qdl::load_tnorm(ia.file);
      const auto r =
          qdl::continuity_equation_check(t, arg_rat(ia.threshold, "--threshold"), arg_rat(ia.x, "x"));
      ctx.input = {{"tnorm", ia.file}, {"threshold", ia.threshold}, {"x", ia.x}};
      ctx.result = equation_json(r);
      ctx.plain_lines = {qdl::to_string(r.lhs) + " " + qdl::to_string(r.rhs) + " " +
                         qdl::to_string(r.gap)};
      ctx.exit_code = r.holds() ? 0 : 1;
    });
  }
  {
    CLI::App* c = make_leaf(interval, "counterexample",
                            "sample the equation along component lower edges; exit 1 on any gap");
    c->add_option("-t,--tnorm", ia.file, "t-norm JSON file")->required();
    c->add_option("--samples", ia.samples, "interior samples per component")->capture_default_str();
    c->callback([&] {
      ctx.command = "interval.counterexample";
      const auto t = qdl::load_tnorm(ia.file);
      const auto rep = qdl::counterexample_report(t, ia.samples);
      ctx.input = {{"tnorm", ia.file}, {"samples", ia.samples}};
      Json rows = Json::array();
      for (const auto& row : rep.rows) {
        Json j;
        j["component"] = component_json(row.component);
        j["check"] = equation_json(row.check);
        rows.push_back(j);
        ctx.plain_lines.push_back(qdl::to_string(row.check.c) + " " + qdl::to_string(row.check.x) +
                                  " " + qdl::to_string(row.check.lhs) + " " +
                                  qdl::to_string(row.check.rhs) + " " +
                                  qdl::to_string(row.check.gap));
      }
      ctx.result = {{"rows", rows}, {"empty", rep.empty()}};
      ctx.exit_code = rep.empty() ? 0 : 1;
    });
  }

  // -------------------------------------------------------------- quantale --
  CLI::App* quantale = make_group("quantale", "finite quantale operations");
  struct QuantaleArgs {
    std::string file, tnorm_file, p, r, points, name;
    std::size_t closure_cap = 64;
    int chain_points = 2;
  } qa;

  {
    CLI::App* c = make_leaf(quantale, "validate", "check the quantale axioms on raw tables");
    c->add_option("-q,--quantale", qa.file, "quantale JSON file")->required();
    c->callback([&] {
      ctx.command = "quantale.validate";
      const auto tables = qdl::load_quantale_tables(qa.file);
      const auto violations = qdl::validate_quantale(tables);
      ctx.input = {{"quantale", qa.file}};
      ctx.result = {{"valid", violations.empty()}, {"violations", violations_json(violations)}};
      if (violations.empty()) {
        ctx.plain_lines = {"valid"};
      } else {
        for (const auto& v : violations) {
          std::string line = v.axiom;
          for (const auto& w : v.witness) line += " " + w;
          ctx.plain_lines.push_back(line);
        }
      }
      ctx.exit_code = violations.empty() ? 0 : 1;
    });
  }
  {
    CLI::App* c = make_leaf(quantale, "residuum", "look up p -> r");
    c->add_option("-q,--quantale", qa.file, "quantale JSON file")->required();
    c->add_option("p", qa.p)->required();
    c->add_option("r", qa.r)->required();
    c->callback([&] {
      ctx.command = "quantale.residuum";
      const auto q = qdl::load_quantale(qa.file);
      const int v = q->residuum(q->index_of(qa.p), q->index_of(qa.r));
      ctx.input = {{"quantale", qa.file}, {"p", qa.p}, {"r", qa.r}};
      ctx.result = {{"value", q->label(v)}};
      ctx.plain_lines = {q->label(v)};
    });
  }
  {
    CLI::App* c = make_leaf(quantale, "from-tnorm",
                            "close a point set under a t-norm into a subchain quantale");
    c->add_option("-t,--tnorm", qa.tnorm_file, "t-norm JSON file")->required();
    c->add_option("--points", qa.points, "comma-separated rationals, must include 0 and 1")
        ->required();
    c->add_option("--closure-cap", qa.closure_cap, "element cap for the closure")
        ->capture_default_str();
    c->callback([&] {
      ctx.command = "quantale.from-tnorm";
      const auto t = qdl::load_tnorm(qa.tnorm_file);
      std::vector<qdl::Rat> pts;
      for (const auto& s : split_csv(qa.points)) pts.push_back(arg_rat(s, "--points"));
      const auto q = qdl::FiniteQuantale::from_tnorm(t, pts, qa.closure_cap);
      ctx.input = {{"tnorm", qa.tnorm_file}, {"points", qa.points}, {"closure_cap", qa.closure_cap}};
      ctx.result = Json::parse(qdl::quantale_to_json_text(*q));
      std::string line;
      for (int i = 0; i < q->size(); ++i) line += (i ? " " : "") + q->label(i);
      ctx.plain_lines = {line};
    });
  }
  {
    CLI::App* c = make_leaf(quantale, "standard", "emit a standard quantale as JSON tables");
    c->add_option("--name", qa.name, "boolean | godel_chain | lukasiewicz_chain")->required();
    c->add_option("--points", qa.chain_points, "chain length for the chain families")
        ->capture_default_str();
    c->callback([&] {
      ctx.command = "quantale.standard";
      qdl::QuantalePtr q;
      if (qa.name == "boolean") q = qdl::FiniteQuantale::standard_boolean();
      else if (qa.name == "godel_chain") q = qdl::FiniteQuantale::standard_godel_chain(qa.chain_points);
      else if (qa.name == "lukasiewicz_chain")
        q = qdl::FiniteQuantale::standard_lukasiewicz_chain(qa.chain_points);
      else
        throw qdl::Error(qdl::ErrorKind::UnknownElement, "unknown standard quantale \"" + qa.name + "\"");
      ctx.input = {{"name", qa.name}, {"points", qa.chain_points}};
      ctx.result = Json::parse(qdl::quantale_to_json_text(*q));
      std::string line;
      for (int i = 0; i < q->size(); ++i) line += (i ? " " : "") + q->label(i);
      ctx.plain_lines = {line};
    });
  }

  // ------------------------------------------------------------------ qcat --
  CLI::App* qcat = make_group("qcat", "enriched category operations");
  struct QcatArgs {
    std::string file, left, right, fmap, gmap, object, scalar, weight;
  } ca;

  {
    CLI::App* c = make_leaf(qcat, "validate", "check the enriched category axioms");
    c->add_option("-c,--cat", ca.file, "category JSON file")->required();
    c->callback([&] {
      ctx.command = "qcat.validate";
      const auto a = qdl::load_qcat(ca.file);
      const auto violations = qdl::validate_category(a);
      ctx.input = {{"cat", ca.file}};
      ctx.result = {{"valid", violations.empty()},
                    {"separated", violations.empty() ? Json(qdl::is_separated(a)) : Json(nullptr)},
                    {"violations", violations_json(violations)}};
      if (violations.empty()) {
        ctx.plain_lines = {"valid"};
      } else {
        for (const auto& v : violations) {
          std::string line = v.law;
          for (const auto& w : v.witness) line += " " + w;
          ctx.plain_lines.push_back(line);
        }
      }
      ctx.exit_code = violations.empty() ? 0 : 1;
    });
  }
  auto weight_family_cmd = [&](const char* name, const char* desc, bool co) {
    CLI::App* c = make_leaf(qcat, name, desc);
    c->add_option("-c,--cat", ca.file, "category JSON file")->required();
    c->callback([&ctx, &ca, co, name] {
      ctx.command = std::string("qcat.") + name;
      const auto a = load_validated_qcat(ca.file);
      const auto family = co ? qdl::copresheaf_category(a, ctx.cap) : qdl::presheaf_category(a, ctx.cap);
      ctx.input = {{"cat", ca.file}, {"cap", ctx.cap}};
      Json vecs = Json::array();
      for (const auto& v : family.vectors) vecs.push_back(labels_json(a, v));
      ctx.result = {{"count", family.vectors.size()},
                    {"vectors", vecs},
                    {"category", Json::parse(qdl::qcat_to_json_text(family.category))}};
      ctx.plain_lines.push_back(std::to_string(family.vectors.size()));
      for (const auto& v : family.vectors) {
        std::string line;
        for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "," : "") + a.q->label(v[i]);
        ctx.plain_lines.push_back(line);
      }
    });
  };
  weight_family_cmd("presheaf", "the category of weights (enumerated up to the cap)", false);
  weight_family_cmd("copresheaf", "the category of coweights (enumerated up to the cap)", true);
  {
    CLI::App* c = make_leaf(qcat, "yoneda", "representable weight(s) A(-, x)");
    c->add_option("-c,--cat", ca.file, "category JSON file")->required();
    c->add_option("--object", ca.object, "object label (all objects when omitted)");
    c->callback([&] {
      ctx.command = "qcat.yoneda";
      const auto a = load_validated_qcat(ca.file);
      ctx.input = {{"cat", ca.file}};
      Json out = Json::object();
      auto emit = [&](int x) {
        const auto w = qdl::yoneda(a, x);
        out[a.objects[x]] = labels_json(a, w);
        std::string line = a.objects[x] + ":";
        for (int v : w) line += " " + a.q->label(v);
        ctx.plain_lines.push_back(line);
      };
      if (ca.object.empty()) {
        for (int x = 0; x < a.size(); ++x) emit(x);
      } else {
        ctx.input["object"] = ca.object;
        emit(a.object_index(ca.object));
      }
      ctx.result = {{"weights", out}};
    });
  }
  auto search_cmd = [&](const char* name, const char* desc, auto compute, bool takes_weight,
                        bool takes_scalar) {
    CLI::App* c = make_leaf(qcat, name, desc);
    c->add_option("-c,--cat", ca.file, "category JSON file")->required();
    if (takes_weight)
      c->add_option("--vector", ca.weight, "comma-separated quantale values, one per object")
          ->required();
    if (takes_scalar) {
      c->add_option("--scalar", ca.scalar, "quantale element label")->required();
      c->add_option("--object", ca.object, "object label")->required();
    }
    c->callback([&ctx, &ca, compute, name] {
      ctx.command = std::string("qcat.") + name;
      const auto a = load_validated_qcat(ca.file);
      ctx.input = {{"cat", ca.file}};
      if (!ca.weight.empty()) ctx.input["vector"] = ca.weight;
      if (!ca.scalar.empty()) {
        ctx.input["scalar"] = ca.scalar;
        ctx.input["object"] = ca.object;
      }
      const qdl::ObjectSearch s = compute(a, ca);
      ctx.result = search_json(s, a);
      ctx.plain_lines = {s.found() ? a.objects[*s.object] : std::string("none")};
      ctx.exit_code = s.found() ? 0 : 1;
    });
  };
  search_cmd(
      "sup", "colimit of a weight (exhaustive scan)",
      [](const qdl::QCategory& a, const QcatArgs& args) {
        return qdl::sup_weight(a, parse_weight_vector(a, args.weight, "--vector"));
      },
      true, false);
  search_cmd(
      "inf", "limit of a coweight (exhaustive scan)",
      [](const qdl::QCategory& a, const QcatArgs& args) {
        return qdl::inf_coweight(a, parse_weight_vector(a, args.weight, "--vector"));
      },
      true, false);
  search_cmd(
      "tensor", "tensor p (x) x (exhaustive scan)",
      [](const qdl::QCategory& a, const QcatArgs& args) {
        return qdl::tensor_object(a, a.q->index_of(args.scalar), a.object_index(args.object));
      },
      false, true);
  search_cmd(
      "cotensor", "cotensor p -o x (exhaustive scan)",
      [](const qdl::QCategory& a, const QcatArgs& args) {
        return qdl::cotensor_object(a, a.q->index_of(args.scalar), a.object_index(args.object));
      },
      false, true);
  {
    CLI::App* c = make_leaf(qcat, "adjoint", "check f -| g between two categories");
    c->add_option("--left", ca.left, "category JSON file for the domain of f")->required();
    c->add_option("--right", ca.right, "category JSON file for the codomain of f")->required();
    c->add_option("--fmap", ca.fmap, "images of f, comma-separated, in object order")->required();
    c->add_option("--gmap", ca.gmap, "images of g, comma-separated, in object order")->required();
    c->callback([&] {
      ctx.command = "qcat.adjoint";
      const auto a = load_validated_qcat(ca.left);
      const auto b = load_validated_qcat(ca.right);
      if (a.q->tables().elements != b.q->tables().elements)
        throw qdl::Error(qdl::ErrorKind::Mismatch,
                         "both categories must be enriched in the same quantale");
      // Re-enrich b over a's quantale object so the pointers agree.
      qdl::QCategory b2 = b;
      b2.q = a.q;
      const auto f = parse_obj_map(a, b2, ca.fmap, "--fmap");
      const auto g = parse_obj_map(b2, a, ca.gmap, "--gmap");
      if (const auto vf = qdl::validate_functor(a, b2, f); !vf.empty())
        throw qdl::Error(qdl::ErrorKind::Mismatch, "--fmap is not a functor: " + vf.front().law);
      if (const auto vg = qdl::validate_functor(b2, a, g); !vg.empty())
        throw qdl::Error(qdl::ErrorKind::Mismatch, "--gmap is not a functor: " + vg.front().law);
      const auto rep = qdl::check_adjunction(a, b2, f, g);
      ctx.input = {{"left", ca.left}, {"right", ca.right}, {"fmap", ca.fmap}, {"gmap", ca.gmap}};
      ctx.result = {{"holds", rep.holds}, {"mismatch", rep.mismatch}};
      ctx.plain_lines = {rep.holds ? "true" : "false"};
      ctx.exit_code = rep.holds ? 0 : 1;
    });
  }

  // ----------------------------------------------------------------- check --
  CLI::App* check = make_group("check", "structural checkers with oracle cross-validation");
  struct CheckArgs {
    std::string file, net_file;
  } ka;
  auto checker_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = make_leaf(check, name, desc);
    c->add_option("-c,--cat", ka.file, "category JSON file")->required();
    c->callback([&ctx, &ka, name] {
      ctx.command = std::string("check.") + name;
      const auto a = load_validated_qcat(ka.file);
      const auto rep = dispatch_check(name, a, qdl::CheckOptions{ctx.cap, ctx.force_brute});
      ctx.input = {{"cat", ka.file}, {"cap", ctx.cap}};
      ctx.result = checker_json(rep);
      ctx.plain_lines = {rep.verdict ? "true" : "false"};
      ctx.exit_code = rep.verdict ? 0 : 1;
    });
  };
  checker_cmd("cocomplete", "every weight has a colimit");
  checker_cmd("complete", "every coweight has a limit");
  checker_cmd("cd", "completely distributive: the colimit functor has a left adjoint");
  checker_cmd("cocd", "completely codistributive: dual of cd");
  checker_cmd("continuous", "colimits of forward-Cauchy weights have a left adjoint / way-below equation");
  checker_cmd("lambda-gamma", "adjoint correspondence between ideals and forward-Cauchy weights");
  checker_cmd("inclusion", "forward-Cauchy weights are reflective among all weights");
  checker_cmd("cotensor-scott", "cotensors commute with directed conical joins");
  {
    CLI::App* c = make_leaf(check, "net", "forward-Cauchy condition for an explicit net");
    c->add_option("-c,--cat", ka.file, "category JSON file")->required();
    c->add_option("--net", ka.net_file,
                  "JSON file {\"index_le\": [[0/1,...]], \"net\": [object labels]}")
        ->required();
    c->callback([&] {
      ctx.command = "check.net";
      const auto a = load_validated_qcat(ka.file);
      std::ifstream in(ka.net_file, std::ios::binary);
      if (!in)
        throw qdl::Error(qdl::ErrorKind::ParseError, ka.net_file + ": cannot open file");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw qdl::Error(qdl::ErrorKind::ParseError, ka.net_file + ": " + std::string(e.what()));
      }
      if (!j.is_object() || !j.contains("index_le") || !j.contains("net"))
        throw qdl::Error(qdl::ErrorKind::ParseError,
                         ka.net_file + ": expected {\"index_le\": ..., \"net\": ...}");
      std::vector<std::vector<bool>> le;
      for (const auto& row : j["index_le"]) {
        std::vector<bool> r;
        for (const auto& cell : row) r.push_back(cell.get<int>() != 0);
        le.push_back(r);
      }
      std::vector<int> net;
      for (const auto& lbl : j["net"]) net.push_back(a.object_index(lbl.get<std::string>()));
      const auto rep = qdl::check_net(a, le, net);
      ctx.input = {{"cat", ka.file}, {"net", ka.net_file}};
      ctx.result = {{"forward_cauchy", rep.forward_cauchy},
                    {"condition_value", a.q->label(rep.condition_value)},
                    {"weight", labels_json(a, rep.weight)}};
      ctx.plain_lines = {rep.forward_cauchy ? "true" : "false"};
      ctx.exit_code = rep.forward_cauchy ? 0 : 1;
    });
  }

  // ---------------------------------------------------------------- corpus --
  {
    CLI::App* c = app.add_subcommand("corpus", "run every case of a corpus manifest");
    c->fallthrough();
    static std::string dir;
    c->add_option("dir", dir, "directory containing manifest.json")->required();
    c->callback([&] {
      ctx.command = "corpus";
      run_corpus(ctx, dir);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qdl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (ctx.raw_text) {
    std::cout << *ctx.raw_text;
    return ctx.exit_code;
  }
  if (ctx.plain) {
    for (const auto& line : ctx.plain_lines) std::cout << line << "\n";
    return ctx.exit_code;
  }
  Json report;
  report["command"] = ctx.command;
  report["input"] = ctx.input;
  report["result"] = ctx.result;
  if (ctx.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  }
  std::cout << report.dump(2) << "\n";
  return ctx.exit_code;
}
