#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "qdl/errors.hpp"
#include "qdl/json_io.hpp"
#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "qdl/tnorm.hpp"

using namespace qdl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qdl_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p;
  }
};

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("t-norm round trip") {
  const std::string text = R"({"components": [
      {"lo": 0, "hi": "1/4", "kind": "product"},
      {"lo": "1/2", "hi": 1, "kind": "lukasiewicz"}]})";
  auto t = tnorm_from_json_text(text);
  REQUIRE(t.components().size() == 2);
  CHECK(t.components()[0].kind == ComponentKind::product);
  CHECK(t.components()[1].lo == Rat(1, 2));
  auto again = tnorm_from_json_text(tnorm_to_json_text(t));
  CHECK(again.components() == t.components());
  // Empty component list is the minimum t-norm.
  CHECK(tnorm_from_json_text(R"({"components": []})").components().empty());
}

TEST_CASE("t-norm parse errors carry location and path") {
  CHECK(error_message([] { tnorm_from_json_text("{nope"); }).find("<input>") !=
        std::string::npos);
  const std::string bad_kind = R"({"components": [{"lo": 0, "hi": 1, "kind": "frobnicate"}]})";
  const auto msg = error_message([&] { tnorm_from_json_text(bad_kind, "myfile.json"); });
  CHECK(msg.find("myfile.json") != std::string::npos);
  CHECK(msg.find("kind") != std::string::npos);
  // Floating-point bounds are rejected: exactness is the point.
  CHECK_THROWS_AS(tnorm_from_json_text(R"({"components": [{"lo": 0.5, "hi": 1,
    "kind": "product"}]})"),
                  Error);
  CHECK_THROWS_AS(tnorm_from_json_text(R"({"components": "zzz"})"), Error);
  CHECK_THROWS_AS(tnorm_from_json_text(R"([1,2,3])"), Error);
}

TEST_CASE("quantale forms: explicit tables, standard, from_tnorm") {
  SUBCASE("explicit tables") {
    const std::string text = R"({
      "elements": ["0", "1/2", "1"],
      "le": [[1,1,1],[0,1,1],[0,0,1]],
      "tensor": [["0","0","0"],["0","0","1/2"],["0","1/2","1"]],
      "unit": "1"})";
    auto q = quantale_from_json_text(text);
    CHECK(q->size() == 3);
    CHECK(q->tensor(1, 1) == 0);  // the tables above are the 3-point Lukasiewicz chain
    CHECK(q->unit() == 2);
    auto again = quantale_from_json_text(quantale_to_json_text(*q));
    CHECK(again->tables().elements == q->tables().elements);
    CHECK(again->tables().tensor == q->tables().tensor);
  }
  SUBCASE("raw tables skip validation") {
    const std::string broken = R"({
      "elements": ["0", "1"],
      "le": [[1,1],[0,1]],
      "tensor": [["0","0"],["0","0"]],
      "unit": "1"})";
    auto tables = quantale_tables_from_json_text(broken);
    CHECK(tables.elements.size() == 2);
    CHECK(!validate_quantale(tables).empty());      // unit law fails
    CHECK_THROWS_AS(quantale_from_json_text(broken), Error);  // make() validates
  }
  SUBCASE("standard names") {
    CHECK(quantale_from_json_text(R"({"standard": "boolean"})")->size() == 2);
    auto g = quantale_from_json_text(R"({"standard": "godel_chain", "points": 4})");
    CHECK(g->size() == 4);
    CHECK(g->tensor(1, 2) == 1);  // min
    auto l = quantale_from_json_text(R"({"standard": "lukasiewicz_chain", "points": 3})");
    CHECK(l->tensor(1, 1) == 0);  // truncated addition
    CHECK_THROWS_AS(quantale_from_json_text(R"({"standard": "zzz"})"), Error);
  }
  SUBCASE("from_tnorm closure") {
    const std::string text = R"({
      "from_tnorm": {"components": [{"lo": "1/2", "hi": 1, "kind": "lukasiewicz"}]},
      "points": ["0", "3/4", "1"]})";
    auto q = quantale_from_json_text(text);
    // 3/4 & 3/4 = 1/2 joins the closure.
    CHECK(q->size() == 4);
    CHECK(q->labels() == std::vector<std::string>{"0", "1/2", "3/4", "1"});
    const std::string overflow = R"({
      "from_tnorm": {"components": [{"lo": 0, "hi": 1, "kind": "product"}]},
      "points": ["0", "1/2", "1"], "cap": 8})";
    CHECK_THROWS_AS(quantale_from_json_text(overflow), Error);
  }
  SUBCASE("parse errors") {
    const auto msg =
        error_message([] { quantale_from_json_text(R"({"elements": ["a"]})", "q.json"); });
    CHECK(msg.find("q.json") != std::string::npos);
  }
}

TEST_CASE("category round trip with inline and referenced quantales") {
  TempDir dir;
  const std::string qtext = R"({"standard": "godel_chain", "points": 3})";
  dir.write("quantale.json", qtext);
  const std::string inline_cat = R"({
    "quantale": {"standard": "boolean"},
    "objects": ["a", "b"],
    "hom": [["1", "1"], ["0", "1"]]})";
  auto a = qcat_from_json_text(inline_cat, dir.path);
  CHECK(a.size() == 2);
  CHECK(a(0, 1) == a.q->top());
  CHECK(a(1, 0) == a.q->bottom());
  CHECK(validate_category(a).empty());

  const std::string ref_cat = R"({
    "quantale": "quantale.json",
    "objects": ["x", "y"],
    "hom": [["1", "1/2"], ["0", "1"]]})";
  const auto p = dir.write("cat.json", ref_cat);
  auto b = load_qcat(p);
  CHECK(b.q->size() == 3);
  CHECK(b(0, 1) == b.q->index_of("1/2"));

  // Round trip re-inlines the quantale.
  auto c = qcat_from_json_text(qcat_to_json_text(b), dir.path);
  CHECK(c.objects == b.objects);
  CHECK(c.hom == b.hom);
  CHECK(c.q->labels() == b.q->labels());
}

TEST_CASE("category parse errors") {
  TempDir dir;
  const auto msg = error_message([&] {
    qcat_from_json_text(R"({
      "quantale": {"standard": "boolean"},
      "objects": ["a", "a"],
      "hom": [["1","1"],["0","1"]]})",
                        dir.path, "c.json");
  });
  CHECK(msg.find("c.json") != std::string::npos);

  // Unknown hom label, with the JSON path in the message.
  const auto msg2 = error_message([&] {
    qcat_from_json_text(R"({
      "quantale": {"standard": "boolean"},
      "objects": ["a", "b"],
      "hom": [["1","2/3"],["0","1"]]})",
                        dir.path, "c.json");
  });
  CHECK(msg2.find("hom") != std::string::npos);

  // Missing referenced quantale file.
  CHECK_THROWS_AS(qcat_from_json_text(R"({
      "quantale": "missing.json",
      "objects": ["a"],
      "hom": [["1"]]})",
                                      dir.path),
                  Error);
  // Ragged hom.
  CHECK_THROWS_AS(qcat_from_json_text(R"({
      "quantale": {"standard": "boolean"},
      "objects": ["a", "b"],
      "hom": [["1","1"]]})",
                                      dir.path),
                  Error);
}

TEST_CASE("serialized text is deterministic") {
  auto q = FiniteQuantale::standard_lukasiewicz_chain(3);
  CHECK(quantale_to_json_text(*q) == quantale_to_json_text(*q));
  auto a = self_enriched_category(q);
  CHECK(qcat_to_json_text(a) == qcat_to_json_text(a));
  const OrdinalSumTNorm t({Component{Rat(0), Rat(1, 2), ComponentKind::product}});
  CHECK(tnorm_to_json_text(t) == tnorm_to_json_text(t));
}
