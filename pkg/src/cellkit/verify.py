"""Recompute the worked examples stored in ``data/golden.json`` and compare value by value."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Callable

from cellkit.coset_matrices import (
    CosetMatrix,
    enumerate_compositions,
    enumerate_Pi,
    greene_numbers,
    length_formula,
    parabolic_generators,
    pseudo_matrix,
    sigma,
    sigma_greene_oracle,
    two_sided_classify,
    y_of_matrix,
)
from cellkit.signed_perm import domain, from_word, length, parse_word
from cellkit.symbols import normalize, par_B, par_C, parse_symbol, sym, symbol_from_partition
from cellkit.tableaux import enumerate_special, pt_shape

EXAMPLE_IDS = ("ex-3.11", "ex-3.14", "ex-3.18", "ex-5.9", "ex-6.14")


@dataclass(frozen=True)
class Verdict:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def to_json(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=1)
def load_golden() -> dict:
    text = resources.files("cellkit").joinpath("data/golden.json").read_text()
    return json.loads(text)


def _check(out: list[Verdict], name: str, expected: Any, actual: Any) -> None:
    out.append(Verdict(name, expected, actual, expected == actual))


def _matrix(rows: list[list[int]], kind: str) -> CosetMatrix:
    return CosetMatrix(kind, tuple(map(tuple, rows)))


def _word_of(d: int, word: str):
    return from_word(d, parse_word(word))


def verify_ex_3_11(g: dict) -> list[Verdict]:
    out: list[Verdict] = []
    d, kind = g["d"], g["kind"]
    pi = enumerate_Pi(g["n"], d, kind)
    _check(out, "count", g["count"], len(pi))
    listed = {name: _matrix(rows, kind) for name, rows in g["matrices"].items()}
    _check(out, "listed matrices are exactly the enumeration", True, set(listed.values()) == set(pi))
    for name, a in listed.items():
        expected = _word_of(d, g["y"][name])
        y = y_of_matrix(a)
        _check(out, f"y {name}", str(expected), str(y))
        _check(out, f"length formula {name}", length(expected), length_formula(a))
    comps = {tuple(c.parts): sorted(parabolic_generators(c)) for c in enumerate_compositions(g["n"], d, kind)}
    for label, comp in g["compositions"].items():
        _check(out, f"generators {label}", comp["generators"], comps.get(tuple(comp["parts"])))
    case = g["worked_case"]
    a = listed[case["matrix"]]
    _check(out, "worked case ro", case["ro"], list(a.ro().parts))
    _check(out, "worked case co", case["co"], list(a.co().parts))
    _check(out, "worked case length", case["length"], length_formula(a))
    return out


def verify_ex_3_14(g: dict) -> list[Verdict]:
    out: list[Verdict] = []
    a = _matrix(g["matrix"], g["kind"])
    cells = pseudo_matrix(a)
    idx = a.indices()
    a_plus = [[list(cells[(i, j)]) for j in idx] for i in idx]
    _check(out, "pseudo-matrix", g["a_plus"], a_plus)
    _check(out, "points", g["points"], domain(a.d, "B"))
    y = y_of_matrix(a)
    _check(out, "y values", g["y_values"], [y(p) for p in g["points"]])
    _check(out, "greene numbers", g["greene"], list(greene_numbers(a)))
    _check(out, "sigma from chains", g["sigma"], list(sigma_greene_oracle(a)))
    _check(out, "sigma from insertion", g["sigma"], list(sigma(a)))
    return out


def verify_ex_3_18(g: dict, matrices: dict) -> list[Verdict]:
    out: list[Verdict] = []
    kind = g["kind"]
    listed = {name: _matrix(rows, kind) for name, rows in matrices.items()}
    for name, expected in g["sigma"].items():
        _check(out, f"sigma {name}", expected, list(sigma(listed[name])))
    for entry in g["symbols"]:
        s = parse_symbol(entry["symbol"])
        _check(out, f"par {entry['symbol']}", entry["partition"], list(par_B(s)))
        _check(out, f"symbol of {entry['partition']}", str(normalize(s)),
               str(symbol_from_partition(entry["partition"], "B")))
    name_of = {a: name for name, a in listed.items()}
    classes = two_sided_classify(g["n"], g["d"], kind)
    actual = {",".join(map(str, key)): sorted((name_of[a] for a in members), key=lambda t: int(t[1:]))
              for key, members in classes.items()}
    _check(out, "two-sided cells", g["cells"], actual)
    _check(out, "special partitions of 5", g["special_partitions_of_5"],
           [list(p) for p in enumerate_special(5, None, "B")])
    _check(out, "special partitions of 5 with at most 3 parts", g["special_partitions_of_5_at_most_3_parts"],
           [list(p) for p in enumerate_special(5, 3, "B")])
    return out


def verify_ex_5_9(g: dict) -> list[Verdict]:
    out: list[Verdict] = []
    kind, n = g["kind"], g["n"]
    for d_text, case in g["cases"].items():
        d = int(d_text)
        pi = enumerate_Pi(n, d, kind)
        _check(out, f"d={d} count", case["count"], len(pi))
        listed = {name: _matrix(rows, kind) for name, rows in case["matrices"].items()}
        _check(out, f"d={d} listed matrices are exactly the enumeration", True, set(listed.values()) == set(pi))
        for name, a in listed.items():
            expected = _word_of(d, case["y"][name])
            _check(out, f"d={d} y {name}", str(expected), str(y_of_matrix(a)))
            _check(out, f"d={d} length formula {name}", length(expected), length_formula(a))
            _check(out, f"d={d} sigma {name}", case["sigma"][name], list(sigma(a)))
            _check(out, f"d={d} insertion shape {name}", case["sigma"][name], list(pt_shape(expected, "C")))
        for entry in case["symbols"]:
            s = parse_symbol(entry["symbol"])
            _check(out, f"d={d} par {entry['symbol']}", entry["partition"], list(par_C(s)))
        name_of = {a: name for name, a in listed.items()}
        cells = sorted(
            sorted((name_of[a] for a in members), key=lambda t: int(t[1:]))
            for members in two_sided_classify(n, d, kind).values()
        )
        _check(out, f"d={d} two-sided cells", sorted(case["cells"]), cells)
        _check(out, f"d={d} special partitions", case["special_at_most_2_parts"],
               [list(p) for p in enumerate_special(2 * d, 2, "C")])
    for d in range(1, g["closed_form_max_d"] + 1):
        for k in range(d + 1):
            a = _matrix([[k, d - k], [d - k, k]], kind)
            _check(out, f"closed form d={d} k={k}", [2 * d - k, k] if k else [2 * d], list(sigma(a)))
    return out


def verify_ex_6_14(g: dict) -> list[Verdict]:
    out: list[Verdict] = []
    for entry in g["identities"]:
        d = entry["d"]
        w, partner = _word_of(d, entry["w"]), _word_of(d, entry["partner"])
        tag = f"{entry['w']} | {entry['partner']}"
        _check(out, f"shape {entry['w']}", entry["pt_w"], list(pt_shape(w, "C")))
        _check(out, f"shape {entry['partner']}", entry["pt_partner"], list(pt_shape(partner, "C")))
        _check(out, f"symbol {entry['w']}", str(normalize(parse_symbol(entry["symbol_w"]))),
               str(symbol_from_partition(pt_shape(w, "C"), "C")))
        _check(out, f"symbol {entry['partner']}", str(normalize(parse_symbol(entry["symbol_partner"]))),
               str(symbol_from_partition(pt_shape(partner, "C"), "C")))
        for form in entry["sym"]:
            _check(out, f"sym {entry['w']} = {form}", str(normalize(parse_symbol(form))), str(sym(w)))
        _check(out, f"sym equality {tag}", str(sym(w)), str(sym(partner)))
    return out


def verify_example(example_id: str) -> list[Verdict]:
    golden = load_golden()
    runners: dict[str, Callable[[], list[Verdict]]] = {
        "ex-3.11": lambda: verify_ex_3_11(golden["ex-3.11"]),
        "ex-3.14": lambda: verify_ex_3_14(golden["ex-3.14"]),
        "ex-3.18": lambda: verify_ex_3_18(golden["ex-3.18"], golden["ex-3.11"]["matrices"]),
        "ex-5.9": lambda: verify_ex_5_9(golden["ex-5.9"]),
        "ex-6.14": lambda: verify_ex_6_14(golden["ex-6.14"]),
    }
    if example_id not in runners:
        raise KeyError(f"unknown example {example_id!r}; choose from {', '.join(EXAMPLE_IDS)}")
    return runners[example_id]()
