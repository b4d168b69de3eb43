"""Cross-verification suites with machine-readable reports.

Every suite pits at least two independent routes to the same numbers against
each other: recurrence vs exhaustive enumeration, recurrence vs closed form,
triangle vs binomial transform of the companion triangle, recurrence vs
marked-forest counting, table rows vs generating function coefficients.  All
comparisons are exact; there are no tolerances anywhere.

Checks scan their parameter grids in ascending order and record the first
(smallest) failing instance as the witness.  Reports carry no timestamps and
all set-like data is sorted, so a report is byte-for-byte reproducible.

Grids come in two sizes: "default" matches the documented acceptance ranges,
"small" trims the expensive ones for quick interactive runs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .eulerian import (
    Params,
    classic_eulerian,
    classic_second_order,
    closed_form_order1,
    closed_form_order2,
    eulerian_table,
    row_sum_product,
    s_minus_s_closed_forms,
)
from .numerics import assoc_stirling_subset
from .series import (
    TruncSeries,
    binomial_unit_sums_check,
    egf_eulerian_coeffs,
    egf_order1_direct,
    egf_transform_check,
    egf_ward_coeffs,
    eulerian_ratio_expansion_check,
    second_order_ratio_expansion_check,
    t_nu_derivative_check,
    t_nu_series,
    tree_power_check,
)
from .stirlingperm import (
    GenStirlingSeq,
    GenStirlingWord,
    ascent_histograms_up_to,
    ascent_positions,
    count_sequences,
    seq_ascent_count,
    validate_word,
    word_from_text,
)
from .trees import (
    distinguished_set,
    forest_distinguished_set,
    leftmost_internal_set,
    perm_to_tree,
    seq_to_forest,
    tree_to_perm,
    validate_tree,
    ward_marked_row,
)
from .ward import (
    euler_to_ward,
    general_inverse_transform,
    riordan_orthogonality_check,
    smiley_identities_check,
    ward_table,
    ward_to_euler,
)

__all__ = [
    "CheckResult",
    "Report",
    "SUITE_NAMES",
    "run_suite",
    "run_all",
    "check_golden_examples",
    "check_recurrence_vs_enumeration",
    "check_row_sums",
    "check_closed_forms",
    "check_special_cases",
    "check_inverse_pairs",
    "check_classic_ward",
    "check_ward_interpretation",
    "check_series_tree_function",
    "check_egf",
    "check_series_identities",
]

ENUMERATION_CAP = 100_000


@dataclass
class CheckResult:
    check_id: str
    params: dict
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "params": self.params,
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class Report:
    suite: str
    size_level: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "size_level": self.size_level,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _done(check_id: str, params: dict, witness: dict | None) -> CheckResult:
    return CheckResult(check_id, params, witness is None, witness)


def _shown(value):
    """Witness values as decimal strings; keeps JSON safe for huge ints."""
    if isinstance(value, (list, tuple)):
        return [_shown(v) for v in value]
    return str(value)


# ------------------------------------------------------- golden examples


def _golden_cases():
    """Hand-checked worked examples: word, nu, t, n, ascents, E set, D set."""
    return [
        ("333222111", 3, 0, 3, frozenset(), frozenset({2, 3}), frozenset({1, 2, 3})),
        ("00112221", 3, 2, 2, frozenset({2, 4}), frozenset(), frozenset()),
        ("11222100", 3, 2, 2, frozenset({2}), frozenset({1}), frozenset({1})),
        ("133322211", 3, 0, 3, frozenset({1}), frozenset({3}), frozenset({1, 3})),
    ]


def check_golden_examples(level: str = "default") -> CheckResult:
    params = {"cases": len(_golden_cases()) + 1}
    for text, nu, t, n, asc, eset, dset in _golden_cases():
        w = GenStirlingWord.over_range(word_from_text(text), nu, t, n)
        if not validate_word(w):
            return _done("golden-examples", params, {"word": text, "failed": "validate"})
        if ascent_positions(w) != asc:
            return _done(
                "golden-examples",
                params,
                {"word": text, "failed": "ascents", "got": _shown(sorted(ascent_positions(w)))},
            )
        tree = perm_to_tree(w)
        if not validate_tree(tree):
            return _done("golden-examples", params, {"word": text, "failed": "tree-structure"})
        if tree_to_perm(tree).letters != w.letters:
            return _done("golden-examples", params, {"word": text, "failed": "roundtrip"})
        if leftmost_internal_set(tree) != eset:
            return _done(
                "golden-examples",
                params,
                {"word": text, "failed": "leftmost-set", "got": _shown(sorted(leftmost_internal_set(tree)))},
            )
        if distinguished_set(tree) != dset:
            return _done(
                "golden-examples",
                params,
                {"word": text, "failed": "distinguished-set", "got": _shown(sorted(distinguished_set(tree)))},
            )
    # the four-entry sequence example
    specs = [("23332200", 2), ("555111", 0), ("0444", 1), ("", 0)]
    seq = GenStirlingSeq(tuple(GenStirlingWord(word_from_text(w), 3, ti) for w, ti in specs))
    forest = seq_to_forest(seq)
    ok = (
        seq.n == 5
        and seq_ascent_count(seq) == 2
        and forest_distinguished_set(forest) == frozenset({1, 2, 5})
        and [sorted(distinguished_set(tr)) for tr in forest.trees] == [[2], [1, 5], [], []]
        and all(validate_tree(tr) for tr in forest.trees)
    )
    if not ok:
        return _done(
            "golden-examples",
            params,
            {
                "word": "forest",
                "failed": "forest-statistics",
                "ascents": _shown(seq_ascent_count(seq)),
                "distinguished": _shown(sorted(forest_distinguished_set(forest))),
            },
        )
    return _done("golden-examples", params, None)


# ------------------------------------------------- recurrence vs counting


def _enumeration_grid(level: str):
    nmax = 5 if level == "default" else 3
    for nu in range(1, 4):
        for s in range(1, 4):
            for t in range(0, 3):
                p = Params(nu, s, t)
                n_top = nmax
                while n_top > 0 and count_sequences(p, n_top) > ENUMERATION_CAP:
                    n_top -= 1
                yield p, n_top


def check_recurrence_vs_enumeration(level: str = "default") -> CheckResult:
    params = {
        "nu_max": 3,
        "s_max": 3,
        "t_max": 2,
        "n_max": 5 if level == "default" else 3,
        "object_cap": ENUMERATION_CAP,
    }
    for p, n_top in _enumeration_grid(level):
        hists = ascent_histograms_up_to(p, n_top)
        table = eulerian_table(p, n_top)
        for n in range(n_top + 1):
            if hists[n] != list(table.row(n)):
                return _done(
                    "recurrence-vs-enumeration",
                    params,
                    {
                        "nu": p.nu,
                        "s": p.s,
                        "t": p.t,
                        "n": n,
                        "recurrence": _shown(list(table.row(n))),
                        "enumeration": _shown(hists[n]),
                    },
                )
    # histogram independence from the composition of t
    for nu in (1, 2):
        for comps in [((2, 0), (1, 1)), ((0, 2), (1, 1))]:
            base = None
            for comp in comps:
                h = ascent_histograms_up_to(Params(nu, 2, 2, comp), 4 if level == "default" else 3)
                if base is None:
                    base = h
                elif h != base:
                    return _done(
                        "recurrence-vs-enumeration",
                        params,
                        {"nu": nu, "s": 2, "t": 2, "failed": "composition-independence"},
                    )
    return _done("recurrence-vs-enumeration", params, None)


def check_row_sums(level: str = "default") -> CheckResult:
    nmax = 10 if level == "default" else 6
    params = {"nu_max": 3, "s_max": 3, "t_max": 2, "n_max": nmax}
    for nu in range(1, 4):
        for s in range(1, 4):
            for t in range(0, 3):
                p = Params(nu, s, t)
                table = eulerian_table(p, nmax)
                for n in range(nmax + 1):
                    if sum(table.row(n)) != row_sum_product(p, n):
                        return _done(
                            "row-sums",
                            params,
                            {
                                "nu": nu,
                                "s": s,
                                "t": t,
                                "n": n,
                                "sum": _shown(sum(table.row(n))),
                                "product": _shown(row_sum_product(p, n)),
                            },
                        )
    return _done("row-sums", params, None)


# ------------------------------------------------------------ closed forms


def check_closed_forms(level: str = "default") -> CheckResult:
    nmax = 15 if level == "default" else 8
    pairs = [(1, 0), (0, 1), (2, 3), (3, 1)]
    params = {"n_max": nmax, "st_pairs": [list(x) for x in pairs]}
    for s, t in pairs:
        t1 = eulerian_table(Params(1, s, t), nmax)
        t2 = eulerian_table(Params(2, s, t), nmax)
        for n in range(nmax + 1):
            for k in range(n + 1):
                got1 = closed_form_order1(n, k, s, t)
                if got1 != t1.entry(n, k):
                    return _done(
                        "closed-form-order1",
                        params,
                        {"s": s, "t": t, "n": n, "k": k, "closed": _shown(got1), "recurrence": _shown(t1.entry(n, k))},
                    )
                got2 = closed_form_order2(n, k, s, t)
                if got2 != t2.entry(n, k):
                    return _done(
                        "closed-form-order2",
                        params,
                        {"s": s, "t": t, "n": n, "k": k, "closed": _shown(got2), "recurrence": _shown(t2.entry(n, k))},
                    )
    return _done("closed-forms", params, None)


def check_special_cases(level: str = "default") -> CheckResult:
    nmax = 10 if level == "default" else 6
    smax = 8 if level == "default" else 5
    params = {"shift_n_max": nmax, "s_minus_s_n_max": smax}
    # the classic triangles are the (1,0) and (0,1) instances
    e10 = eulerian_table(Params(1, 1, 0), nmax)
    e01 = eulerian_table(Params(1, 0, 1), nmax)
    b10 = eulerian_table(Params(2, 1, 0), nmax)
    b01 = eulerian_table(Params(2, 0, 1), nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            if classic_eulerian(n, k, "standard") != e10.entry(n, k):
                return _done("special-cases", params, {"failed": "classic-standard", "n": n, "k": k})
            if classic_eulerian(n, k, "traditional") != e01.entry(n, k):
                return _done("special-cases", params, {"failed": "classic-traditional", "n": n, "k": k})
            if classic_second_order(n, k, "standard") != b10.entry(n, k):
                return _done("special-cases", params, {"failed": "second-order-standard", "n": n, "k": k})
            if classic_second_order(n, k, "traditional") != b01.entry(n, k):
                return _done("special-cases", params, {"failed": "second-order-traditional", "n": n, "k": k})
    # the shift between the two indexings, on its domain n >= 1, 1 <= k <= n
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            if classic_eulerian(n, k, "traditional") != classic_eulerian(n, k - 1, "standard"):
                return _done("special-cases", params, {"failed": "order1-shift", "n": n, "k": k})
            if classic_second_order(n, k, "traditional") != classic_second_order(n, k - 1, "standard"):
                return _done("special-cases", params, {"failed": "order2-shift", "n": n, "k": k})
    # degenerate t = -s closed forms against the recurrence
    for nu in (1, 2):
        for s in (1, 2, 3):
            table = eulerian_table(Params(nu, s, -s), smax)
            for n in range(smax + 1):
                for k in range(n + 1):
                    if s_minus_s_closed_forms(nu, n, k, s) != table.entry(n, k):
                        return _done(
                            "special-cases",
                            params,
                            {
                                "failed": "s-minus-s",
                                "nu": nu,
                                "s": s,
                                "n": n,
                                "k": k,
                                "closed": _shown(s_minus_s_closed_forms(nu, n, k, s)),
                                "recurrence": _shown(table.entry(n, k)),
                            },
                        )
    return _done("special-cases", params, None)


# ----------------------------------------------------------- inverse pairs


def check_inverse_pairs(level: str = "default") -> CheckResult:
    nmax = 10 if level == "default" else 6
    params = {"nu_max": 3, "n_max": nmax, "ratios": ["1", "-1", "2/3"]}
    st_pairs = [(s, t) for s in range(0, 4) for t in range(-2, 3)]
    for nu in (1, 2, 3):
        for s, t in st_pairs:
            e = eulerian_table(Params(nu + 1, s, t), nmax)
            w = ward_table(Params(nu, s, t), nmax)
            for n in range(nmax + 1):
                if euler_to_ward(list(e.row(n)), n) != list(w.row(n)):
                    return _done(
                        "inverse-pairs",
                        params,
                        {"failed": "euler-to-ward", "nu": nu, "s": s, "t": t, "n": n},
                    )
                if ward_to_euler(list(w.row(n)), n) != list(e.row(n)):
                    return _done(
                        "inverse-pairs",
                        params,
                        {"failed": "ward-to-euler", "nu": nu, "s": s, "t": t, "n": n},
                    )
    for n in range(nmax + 1):
        if not riordan_orthogonality_check(n, n):
            return _done("inverse-pairs", params, {"failed": "orthogonality", "n": n})
    # ratio roundtrips over deterministic pseudorandom integer rows
    rng = random.Random(421731)
    for r in (Fraction(1), Fraction(-1), Fraction(2, 3)):
        for n in range(0, 9):
            row = [rng.randrange(-50, 50) for _ in range(n + 1)]
            fwd = general_inverse_transform(row, n, r, "forward")
            back = general_inverse_transform(fwd, n, r, "backward")
            if back != row:
                return _done(
                    "inverse-pairs",
                    params,
                    {"failed": "ratio-roundtrip", "r": str(r), "n": n, "row": _shown(row)},
                )
    return _done("inverse-pairs", params, None)


def check_classic_ward(level: str = "default") -> CheckResult:
    top = 14 if level == "default" else 8
    smiley_n = 8 if level == "default" else 5
    params = {"n_plus_k_max": top, "smiley_n_max": smiley_n}
    w = ward_table(Params(1, 0, 1), top)
    for n in range(top + 1):
        for k in range(min(n, top - n) + 1):
            if w.entry(n, k) != assoc_stirling_subset(n + k, k):
                return _done(
                    "classic-ward",
                    params,
                    {
                        "n": n,
                        "k": k,
                        "ward": _shown(w.entry(n, k)),
                        "assoc_stirling": _shown(assoc_stirling_subset(n + k, k)),
                    },
                )
    if not smiley_identities_check(smiley_n):
        return _done("classic-ward", params, {"failed": "smiley-identities", "n_max": smiley_n})
    return _done("classic-ward", params, None)


# ----------------------------------------------------- ward interpretation


def _compositions_for(s: int, t: int) -> list[tuple[int, ...]]:
    """A few distinct compositions of t into s parts, deterministic order."""
    cands = [(t,) + (0,) * (s - 1), (0,) * (s - 1) + (t,)]
    if s >= 2 and t >= 2:
        cands.append((1, t - 1) + (0,) * (s - 2))
    out: list[tuple[int, ...]] = []
    for c in cands:
        if c not in out:
            out.append(c)
    return out


def check_ward_interpretation(level: str = "default") -> CheckResult:
    nmax = 4 if level == "default" else 3
    params = {"nu_values": [1, 2], "s_values": [1, 2], "t_max": 2, "n_max": nmax}
    for nu in (1, 2):
        for s in (1, 2):
            for t in range(0, 3):
                table = ward_table(Params(nu, s, t), nmax)
                for comp in _compositions_for(s, t):
                    p = Params(nu, s, t, comp)
                    for n in range(nmax + 1):
                        got = ward_marked_row(p, n)
                        if got != list(table.row(n)):
                            return _done(
                                "ward-interpretation",
                                params,
                                {
                                    "nu": nu,
                                    "s": s,
                                    "t": t,
                                    "tvec": list(comp),
                                    "n": n,
                                    "marked": _shown(got),
                                    "recurrence": _shown(list(table.row(n))),
                                },
                            )
    return _done("ward-interpretation", params, None)


# ----------------------------------------------------------------- series


def check_series_tree_function(level: str = "default") -> CheckResult:
    K = 14 if level == "default" else 10
    params = {"nu_max": 4, "order": K}
    x = TruncSeries.x(K)
    for nu in range(1, 5):
        T = t_nu_series(nu, K)
        q = [Fraction(0)] * (K + 1)
        for k in range(1, nu):
            q[k] = Fraction(math.comb(nu - 1, k) * (-1) ** k, k)
        f = x * TruncSeries(q).exp()
        if f.compose(T) != x or T.compose(f) != x:
            return _done("tree-function", params, {"failed": "reversion-contract", "nu": nu})
        if not t_nu_derivative_check(nu, K):
            return _done("tree-function", params, {"failed": "derivative-identity", "nu": nu})
    T2 = t_nu_series(2, K)
    for n in range(1, K + 1):
        if T2.coefficient(n) != Fraction(n ** (n - 1), math.factorial(n)):
            return _done("tree-function", params, {"failed": "tree-coefficients", "n": n})
    for s in (1, 2, 5):
        if not tree_power_check(s, K):
            return _done("tree-function", params, {"failed": "tree-powers", "s": s})
    return _done("tree-function", params, None)


def _poly_value(row, x0: Fraction) -> Fraction:
    return sum(Fraction(c) * x0**k for k, c in enumerate(row))


def check_egf(level: str = "default") -> CheckResult:
    nmax = 8 if level == "default" else 5
    params = {"n_max": nmax, "x0_eulerian": ["1/3", "1/2", "2/3"], "x0_ward": ["1/2", "1"]}
    st_pairs = [(1, 0), (2, 1), (1, 2)]
    for nu in (1, 2, 3):
        for s, t in st_pairs:
            table = eulerian_table(Params(nu, s, t), nmax)
            for x0 in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
                got = egf_eulerian_coeffs(nu, s, t, x0, nmax)
                want = [_poly_value(table.row(n), x0) for n in range(nmax + 1)]
                if got != want:
                    return _done(
                        "egf",
                        params,
                        {"failed": "eulerian", "nu": nu, "s": s, "t": t, "x0": str(x0)},
                    )
                if nu == 1 and egf_order1_direct(s, t, x0, nmax) != want:
                    return _done(
                        "egf",
                        params,
                        {"failed": "order1-direct", "s": s, "t": t, "x0": str(x0)},
                    )
    for nu in (1, 2):
        for s, t in st_pairs:
            table = ward_table(Params(nu, s, t), nmax)
            for x0 in (Fraction(1, 2), Fraction(1)):
                got = egf_ward_coeffs(nu, s, t, x0, nmax)
                want = [_poly_value(table.row(n), x0) for n in range(nmax + 1)]
                if got != want:
                    return _done(
                        "egf",
                        params,
                        {"failed": "ward", "nu": nu, "s": s, "t": t, "x0": str(x0)},
                    )
                if not egf_transform_check(nu, s, t, x0, nmax):
                    return _done(
                        "egf",
                        params,
                        {"failed": "transform", "nu": nu, "s": s, "t": t, "x0": str(x0)},
                    )
    return _done("egf", params, None)


def check_series_identities(level: str = "default") -> CheckResult:
    nmax = 5 if level == "default" else 3
    K = 12 if level == "default" else 10
    unit_n = 30 if level == "default" else 12
    params = {"n_max": nmax, "order": K, "unit_sums_n_max": unit_n}
    for s, t in [(1, 0), (0, 1), (2, 3), (3, 1)]:
        for n in range(nmax + 1):
            if not eulerian_ratio_expansion_check(n, s, t, K):
                return _done(
                    "series-identities",
                    params,
                    {"failed": "order1-ratio", "n": n, "s": s, "t": t},
                )
    for s, t in [(1, 0), (2, 1), (2, 3), (3, 1)]:
        for n in range(nmax + 1):
            if not second_order_ratio_expansion_check(n, s, t, K):
                return _done(
                    "series-identities",
                    params,
                    {"failed": "order2-ratio", "n": n, "s": s, "t": t},
                )
    if not binomial_unit_sums_check(unit_n):
        return _done("series-identities", params, {"failed": "unit-sums", "n_max": unit_n})
    return _done("series-identities", params, None)


# ----------------------------------------------------------------- suites


_SUITES = {
    "recurrence-vs-enumeration": (
        check_golden_examples,
        check_recurrence_vs_enumeration,
        check_row_sums,
    ),
    "closed-forms": (check_closed_forms, check_special_cases),
    "inverse-pairs": (check_inverse_pairs, check_classic_ward),
    "egf": (check_egf,),
    "series-identities": (check_series_tree_function, check_series_identities),
    "ward-interpretation": (check_ward_interpretation,),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, level: str = "default") -> Report:
    if name not in _SUITES:
        raise ValueError("unknown suite %r; pick one of %s" % (name, ", ".join(SUITE_NAMES)))
    if level not in ("small", "default"):
        raise ValueError("size level must be 'small' or 'default', got %r" % (level,))
    return Report(name, level, [fn(level) for fn in _SUITES[name]])


def run_all(level: str = "default") -> dict:
    reports = [run_suite(name, level) for name in SUITE_NAMES]
    return {
        "suites": [r.to_json() for r in reports],
        "size_level": level,
        "passed": all(r.passed for r in reports),
    }
