#!/usr/bin/env python3
"""Regenerates data/corpus: t-norm and enriched-category instances with
expected verdicts for every structural checker. Run from the repo root."""

import json
import os
from fractions import Fraction as F

ROOT = os.path.join(os.path.dirname(__file__), "..", "data", "corpus")


def write(path, obj):
    full = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


CASES = []


def tnorm_case(name, comps, expect):
    spec = {
        "components": [
            {"lo": str(F(lo)), "hi": str(F(hi)), "kind": kind} for lo, hi, kind in comps
        ]
    }
    path = f"tnorms/{name}.json"
    write(path, spec)
    CASES.append({"name": f"tnorm-{name}", "kind": "tnorm", "spec": path, "expect": expect})


def qcat_case(name, quantale, objects, hom, expect):
    spec = {"quantale": quantale, "objects": objects, "hom": hom}
    path = f"qcats/{name}.json"
    write(path, spec)
    CASES.append({"name": f"qcat-{name}", "kind": "qcat", "spec": path, "expect": expect})


# ---------------------------------------------------------------- t-norms --

PASS = {
    "classification": True,
    "offending": 0,
    "counterexample_empty": True,
    "scan_empty": True,
}


def fails(offending):
    return {
        "classification": False,
        "offending": offending,
        "counterexample_empty": False,
        "scan_empty": False,
    }


tnorm_case("godel", [], PASS | {"idempotent_intervals": 1})
tnorm_case("product", [("0", "1", "product")], PASS | {"idempotent_intervals": 2})
tnorm_case("lukasiewicz", [("0", "1", "lukasiewicz")], PASS | {"idempotent_intervals": 2})
tnorm_case("luk_at_zero", [("0", "1/2", "lukasiewicz")], PASS | {"idempotent_intervals": 2})
tnorm_case("prod_at_zero", [("0", "1/2", "product")], PASS | {"idempotent_intervals": 2})
tnorm_case("prod_interior", [("1/4", "1/2", "product")], PASS | {"idempotent_intervals": 2})
tnorm_case(
    "mix_luk_prod",
    [("0", "1/4", "lukasiewicz"), ("1/2", "3/4", "product")],
    PASS | {"idempotent_intervals": 3},
)
tnorm_case("luk_half", [("1/2", "1", "lukasiewicz")], fails(1) | {"idempotent_intervals": 2})
tnorm_case("luk_interior", [("1/4", "1/2", "lukasiewicz")], fails(1) | {"idempotent_intervals": 2})
tnorm_case("luk_upper", [("3/4", "1", "lukasiewicz")], fails(1) | {"idempotent_intervals": 2})
tnorm_case(
    "mix_offending",
    [("0", "1/4", "product"), ("1/2", "1", "lukasiewicz")],
    fails(1) | {"idempotent_intervals": 3},
)
tnorm_case(
    "shared_endpoint",
    [("0", "1/2", "lukasiewicz"), ("1/2", "1", "lukasiewicz")],
    fails(1) | {"idempotent_intervals": 3},
)
tnorm_case(
    "two_luk_offending",
    [("1/4", "1/2", "lukasiewicz"), ("3/4", "1", "lukasiewicz")],
    fails(2) | {"idempotent_intervals": 3},
)
tnorm_case(
    "prod_then_luk_tail",
    [("1/3", "2/3", "product"), ("2/3", "1", "lukasiewicz")],
    fails(1) | {"idempotent_intervals": 3},
)

# --------------------------------------------------------------- categories --

BOOL = {"standard": "boolean"}
ALL_TRUE = {
    "separated": True,
    "cocomplete": True,
    "complete": True,
    "cd": True,
    "cocd": True,
    "continuous": True,
    "lambda_gamma": True,
    "inclusion": True,
    "cotensor_scott": True,
}
NOT_COMPLETE = {
    "separated": True,
    "cocomplete": False,
    "complete": False,
    "cd": False,
    "cocd": False,
    "continuous": True,
    "lambda_gamma": "error:NotComplete",
    "inclusion": "error:NotComplete",
    "cotensor_scott": "error:NotComplete",
}


def poset_category(name, objects, le_pairs, expect, quantale=BOOL):
    """A Boolean-enriched category from a finite order: hom = order indicator."""
    order = {(a, a) for a in objects} | set(le_pairs)
    changed = True
    while changed:  # transitive closure
        changed = False
        for a, b in list(order):
            for c, d in list(order):
                if b == c and (a, d) not in order:
                    order.add((a, d))
                    changed = True
    hom = [["1" if (x, y) in order else "0" for y in objects] for x in objects]
    qcat_case(name, quantale, objects, hom, expect)


poset_category("bool_chain2", ["a", "b"], [("a", "b")], ALL_TRUE)
poset_category("bool_chain3", ["a", "b", "c"], [("a", "b"), ("b", "c")], ALL_TRUE)
poset_category(
    "bool_chain5",
    ["a", "b", "c", "d", "e"],
    [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
    ALL_TRUE,
)

cube_objs = [f"{i:03b}" for i in range(8)]
cube_le = [
    (x, y) for x in cube_objs for y in cube_objs if int(x, 2) & int(y, 2) == int(x, 2)
]
poset_category("bool_cube8", cube_objs, cube_le, ALL_TRUE)

poset_category("bool_antichain2", ["a", "b"], [], NOT_COMPLETE)
poset_category("bool_vee3", ["bot", "a", "b"], [("bot", "a"), ("bot", "b")], NOT_COMPLETE)

M3_FLAVOR = ALL_TRUE | {"cd": False, "cocd": False}
poset_category(
    "bool_m3",
    ["bot", "a", "b", "c", "top"],
    [("bot", "a"), ("bot", "b"), ("bot", "c"), ("a", "top"), ("b", "top"), ("c", "top")],
    M3_FLAVOR,
)
poset_category(
    "bool_n5",
    ["bot", "x", "a", "b", "top"],
    [("bot", "x"), ("x", "top"), ("bot", "a"), ("a", "b"), ("b", "top")],
    M3_FLAVOR,
)

qcat_case(
    "nonsep2",
    BOOL,
    ["x", "y"],
    [["1", "1"], ["1", "1"]],
    {
        "separated": False,
        "cocomplete": True,
        "complete": True,
        "cd": "error:NotSeparated",
        "cocd": "error:NotSeparated",
        "continuous": "error:NotSeparated",
        "lambda_gamma": "error:NotSeparated",
        "inclusion": "error:NotSeparated",
        "cotensor_scott": True,
    },
)


def chain(n):
    return [F(i, n - 1) for i in range(n)]


def godel_res(x, y):
    return F(1) if x <= y else y


def luk_res(x, y):
    return min(F(1), 1 - x + y)


def self_enriched(name, standard, n, res, expect):
    vals = chain(n)
    labels = [str(v) for v in vals]
    hom = [[str(res(x, y)) for y in vals] for x in vals]
    qcat_case(name, {"standard": standard, "points": n}, labels, hom, expect)


# The Goedel chains are completely distributive but NOT codistributive: in the
# opposite category the empty weight has colimit "1", so a left adjoint at x
# would need hom(t x, empty) = meet_u (t x)(u) -> 0 to equal 1 -> x, but the
# Goedel negation only takes the values 0 and 1. The Lukasiewicz negation is
# involutive, so its chains pass both directions.
self_enriched("godel3_self", "godel_chain", 3, godel_res, ALL_TRUE | {"cocd": False})
self_enriched("godel4_self", "godel_chain", 4, godel_res, ALL_TRUE | {"cocd": False})
self_enriched("luk3_self", "lukasiewicz_chain", 3, luk_res, ALL_TRUE)
self_enriched("luk4_self", "lukasiewicz_chain", 4, luk_res, ALL_TRUE)

qcat_case(
    "luk3_discrete2",
    {"standard": "lukasiewicz_chain", "points": 3},
    ["u", "v"],
    [["1", "1/2"], ["1/2", "1"]],
    NOT_COMPLETE,
)

NONINTEGRAL_Q = {
    "elements": ["0", "m", "1"],
    "le": [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
    "tensor": [["0", "0", "0"], ["0", "m", "1"], ["0", "1", "1"]],
    "unit": "m",
}
qcat_case(
    "nonintegral_self",
    NONINTEGRAL_Q,
    ["0", "m", "1"],
    [["1", "1", "1"], ["0", "m", "1"], ["0", "0", "1"]],
    {
        "separated": True,
        "cocomplete": True,
        "complete": True,
        "cd": True,
        "cocd": True,
        "continuous": "error:NotIntegral",
        "lambda_gamma": "error:NotIntegral",
        "inclusion": "error:NotIntegral",
        "cotensor_scott": True,
    },
)
qcat_case(
    "nonintegral_discrete2",
    NONINTEGRAL_Q,
    ["p", "q"],
    [["m", "1"], ["0", "m"]],
    {
        "separated": True,
        "cocomplete": False,
        "complete": False,
        "cd": False,
        "cocd": False,
        "continuous": "error:NotIntegral",
        "lambda_gamma": "error:NotComplete",
        "inclusion": "error:NotComplete",
        "cotensor_scott": "error:NotComplete",
    },
)

write("manifest.json", {"cases": CASES})
print(f"wrote {len(CASES)} cases")
