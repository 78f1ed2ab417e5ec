#pragma once

#include <filesystem>
#include <string>

#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "qdl/tnorm.hpp"

namespace qdl {

// JSON formats.
//
// t-norm:   {"components": [{"lo": "1/2", "hi": "1", "kind": "lukasiewicz"}, ...]}
//           Bounds are exact rationals written as "p/q" strings or integers.
//           Kinds: "lukasiewicz" | "product".  An empty component list is the
//           minimum t-norm.
//
// quantale: {"elements": ["0","1/2","1"],
//            "le":     [[1,1,1],[0,1,1],[0,0,1]],
//            "tensor": [["0","0","0"],["0","0","1/2"],["0","1/2","1"]],
//            "unit":   "1"}
//           or {"standard": "boolean"}
//           or {"standard": "godel_chain" | "lukasiewicz_chain", "points": 3}
//           or {"from_tnorm": {...t-norm...}, "points": ["0","1/2","1"], "cap": 64}
//           ("cap" bounds the closure size; optional, default 64.)
//
// category: {"quantale": <inline quantale object, or a path string resolved
//                          relative to the category file>,
//            "objects": ["a","b"],
//            "hom": [["1","1"],["0","1"]]}   (hom[x][y] = A(x,y) by label)
//
// Parse errors carry the offending file (or "<input>") and JSON path.

OrdinalSumTNorm tnorm_from_json_text(const std::string& text,
                                     const std::string& where = "<input>");
OrdinalSumTNorm load_tnorm(const std::filesystem::path& file);
std::string tnorm_to_json_text(const OrdinalSumTNorm& t);

QuantalePtr quantale_from_json_text(const std::string& text,
                                    const std::string& where = "<input>");
QuantalePtr load_quantale(const std::filesystem::path& file);
/// Raw tables, parsed but not validated (for reporting axiom violations).
QuantaleTables quantale_tables_from_json_text(const std::string& text,
                                              const std::string& where = "<input>");
QuantaleTables load_quantale_tables(const std::filesystem::path& file);
std::string quantale_to_json_text(const FiniteQuantale& q);

QCategory qcat_from_json_text(const std::string& text, const std::filesystem::path& base_dir,
                              const std::string& where = "<input>");
QCategory load_qcat(const std::filesystem::path& file);
std::string qcat_to_json_text(const QCategory& a);

}  // namespace qdl
