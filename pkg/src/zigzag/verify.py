"""Exhaustive cross-checks tying triangles, families, and bijections together.

Every check compares two independently computed quantities over a full
range of objects and reports PASS or FAIL with counts and, on failure,
the smallest witness encountered.  Theorem checks and the open-conjecture
sweep are kept separate: a conjecture counterexample is a finding to
report, not a defect in this package.

Default desk-scale caps: unsigned checks run to n = 8, signed checks to
n = 6, the conjecture sweep to n = 6.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import bijections, cdindex, families, triangles
from .core import Tree, order_relabel, perm_to_text, pleaf, tree_to_literal
from .families import FamilyTag

DEFAULT_N_MAX_A = 8
DEFAULT_N_MAX_B = 6
DEFAULT_N_MAX_CONJECTURE = 6
EXTENDED_N_MAX_A = 9
EXTENDED_N_MAX_B = 7

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class CheckReport:
    check_id: str
    params: dict
    status: str
    counts: dict = field(default_factory=dict)
    counterexample: str | None = None
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status,
            "counts": self.counts,
            "counterexample": self.counterexample,
            "elapsed": self.elapsed,
        }


class _Failure(Exception):
    def __init__(self, witness: str):
        self.witness = witness


def _obj_text(obj) -> str:
    if isinstance(obj, Tree):
        return tree_to_literal(obj)
    return perm_to_text(obj)


@lru_cache(maxsize=None)
def _family(tag: FamilyTag, n: int) -> tuple:
    return tuple(families.iter_family(tag, n))


def _counts_by_stat(tag: FamilyTag, n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for obj in _family(tag, n):
        k = families.refinement_statistic(tag, obj)
        out[k] = out.get(k, 0) + 1
    return out


def _expect(condition: bool, witness: str) -> None:
    if not condition:
        raise _Failure(witness)


def _compare_counts(
    label: str, n: int, expected: dict[int, int], actual: dict[int, int]
) -> None:
    for k in sorted(set(expected) | set(actual)):
        e, a = expected.get(k, 0), actual.get(k, 0)
        _expect(e == a, f"{label}: n={n} k={k} expected={e} actual={a}")


# ---------------------------------------------------------------------------
# individual checks; each returns a counts dict or raises _Failure


def _check_entringer_families(n_max_a: int, n_max_b: int) -> dict:
    table = triangles.entringer_table(n_max_a)
    objects = 0
    for n in range(1, n_max_a + 1):
        expected = {k: table.value(n, k) for k in range(1, n + 1) if table.value(n, k)}
        for tag in (FamilyTag.ALT, FamilyTag.TREE, FamilyTag.ANDRE):
            actual = _counts_by_stat(tag, n)
            objects += sum(actual.values())
            _compare_counts(tag.value, n, expected, actual)
        if n >= 2:
            shifted = {k - 1: v for k, v in expected.items()}
            actual = _counts_by_stat(FamilyTag.SIMSUN, n - 1)
            objects += sum(actual.values())
            _compare_counts("simsun", n - 1, shifted, actual)
    return {"objects": objects, "rows": n_max_a}


def _check_arnold_families(n_max_a: int, n_max_b: int) -> dict:
    table = triangles.arnold_table(n_max_b)
    objects = 0
    for n in range(1, n_max_b + 1):
        ks = list(range(-n, 0)) + list(range(1, n + 1))
        expected = {k: table.value(n, k) for k in ks if table.value(n, k)}
        positive = {k: v for k, v in expected.items() if k > 0}
        for tag, want in (
            (FamilyTag.ALT_B, expected),
            (FamilyTag.SNAKE, positive),
            (FamilyTag.TREE_B, expected),
            (FamilyTag.ANDRE_B, expected),
        ):
            actual = _counts_by_stat(tag, n)
            objects += sum(actual.values())
            _compare_counts(tag.value, n, want, actual)
        # last-entry counts of the signed Simsun family match the
        # forced-sign Andre family one size up, shifted by one
        hetyei = _counts_by_stat(FamilyTag.ANDRE_H, n)
        objects += sum(hetyei.values())
        if n >= 2:
            signed_simsun = _counts_by_stat(FamilyTag.SIMSUN_B, n - 1)
            objects += sum(signed_simsun.values())
            shifted = {k - 1: v for k, v in hetyei.items()}
            _compare_counts("simsun-b vs andre-h", n - 1, shifted, signed_simsun)
        else:
            _expect(hetyei == {1: 1}, f"andre-h: n=1 counts {hetyei}")
    return {"objects": objects, "rows": n_max_b}


def _check_omega(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        images = []
        for t in _family(FamilyTag.TREE, n):
            w = bijections.omega(t)
            objects += 1
            _expect(
                families.is_andre(w), f"omega({tree_to_literal(t)}) not Andre"
            )
            _expect(
                w[-1] == pleaf(t),
                f"omega last entry mismatch on {tree_to_literal(t)}",
            )
            _expect(
                bijections.omega_inv(w) == t,
                f"omega_inv round trip failed on {tree_to_literal(t)}",
            )
            images.append(w)
        _expect(
            sorted(images) == sorted(_family(FamilyTag.ANDRE, n)),
            f"omega images at n={n} are not exactly the Andre permutations",
        )
    return {"objects": objects}


def _check_phi(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        images = []
        for p in _family(FamilyTag.ANDRE, n):
            s = bijections.phi(p)
            objects += 1
            if n == 1:
                _expect(s == (), "phi of the singleton must be empty")
            else:
                _expect(families.is_simsun(s), f"phi({perm_to_text(p)}) not Simsun")
                _expect(
                    s[-1] == p[-1] - 1,
                    f"phi last entry mismatch on {perm_to_text(p)}",
                )
            _expect(
                bijections.phi_inv(s) == p,
                f"phi_inv round trip failed on {perm_to_text(p)}",
            )
            images.append(s)
        if n >= 2:
            _expect(
                sorted(images) == sorted(_family(FamilyTag.SIMSUN, n - 1)),
                f"phi images at n={n} are not exactly the Simsun permutations",
            )
    return {"objects": objects}


def _check_psi(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        images = []
        for p in _family(FamilyTag.ALT, n):
            t, _ = bijections.psi_c(p)
            objects += 1
            _expect(
                pleaf(t) == p[0], f"psi pleaf mismatch on {perm_to_text(p)}"
            )
            for i, _a, _b, _case, state in bijections._graft_states(p):
                _expect(
                    pleaf(state) == p[2 * i - 2],
                    f"psi step invariant broken at i={i} on {perm_to_text(p)}",
                )
            _expect(
                bijections.psi_inv(t) == p,
                f"psi_inv round trip failed on {perm_to_text(p)}",
            )
            images.append(t)
        _expect(
            sorted(images, key=tree_to_literal)
            == sorted(_family(FamilyTag.TREE, n), key=tree_to_literal),
            f"psi images at n={n} are not exactly the trees",
        )
    return {"objects": objects}


def _check_psi_equality(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        for p in _family(FamilyTag.ALT, n):
            objects += 1
            _expect(
                bijections.psi_b(p) == bijections.psi_c(p)[0],
                f"psi_b and psi_c disagree on {perm_to_text(p)}",
            )
    return {"objects": objects}


def _check_psi_signed(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_b + 1):
        images = []
        for p in _family(FamilyTag.ALT_B, n):
            t = bijections.psi_signed(p)
            objects += 1
            _expect(
                pleaf(t) == p[0], f"psi_signed pleaf mismatch on {perm_to_text(p)}"
            )
            images.append(t)
        _expect(
            sorted(images, key=tree_to_literal)
            == sorted(_family(FamilyTag.TREE_B, n), key=tree_to_literal),
            f"psi_signed images at n={n} are not exactly the signed trees",
        )
    return {"objects": objects}


def _check_omega_signed(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_b + 1):
        images = []
        for t in _family(FamilyTag.TREE_B, n):
            w = bijections.omega_signed(t)
            objects += 1
            _expect(
                families.is_signed_andre_b(w),
                f"omega_signed({tree_to_literal(t)}) not signed Andre",
            )
            _expect(
                w[-1] == pleaf(t),
                f"omega_signed last entry mismatch on {tree_to_literal(t)}",
            )
            images.append(w)
        _expect(
            sorted(images) == sorted(_family(FamilyTag.ANDRE_B, n)),
            f"omega_signed images at n={n} are not the signed Andre family",
        )
    return {"objects": objects}


def _check_phi_signed(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_b + 1):
        images = []
        for p in _family(FamilyTag.ANDRE_H, n):
            s = bijections.phi_signed(p)
            objects += 1
            if n == 1:
                _expect(s == (), "phi_signed of the singleton must be empty")
            else:
                _expect(
                    families.is_signed_simsun(s),
                    f"phi_signed({perm_to_text(p)}) not signed Simsun",
                )
                _expect(
                    s[-1] == p[-1] - 1,
                    f"phi_signed last entry mismatch on {perm_to_text(p)}",
                )
            images.append(s)
        if n >= 2:
            _expect(
                sorted(images) == sorted(_family(FamilyTag.SIMSUN_B, n - 1)),
                f"phi_signed images at n={n} are not the signed Simsun family",
            )
    return {"objects": objects}


def _check_chuang_factorization(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        for t in _family(FamilyTag.TREE, n):
            objects += 1
            _expect(
                bijections.chuang_phi(t) == bijections.phi(bijections.omega(t)),
                f"direct tree-to-Simsun map disagrees on {tree_to_literal(t)}",
            )
    return {"objects": objects}


def _check_cd_preservation(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        for p in _family(FamilyTag.ANDRE, n):
            objects += 1
            _expect(
                cdindex.reduced_variation_andre(p)
                == cdindex.reduced_variation_simsun(bijections.phi(p)),
                f"reduced variation not preserved on {perm_to_text(p)}",
            )
    return {"objects": objects}


def _check_andre_implies_simsun(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_a + 1):
        for p in families.iter_permutations(n):
            objects += 1
            if families.is_andre(p):
                _expect(
                    families.is_simsun(p),
                    f"Andre permutation {perm_to_text(p)} is not Simsun",
                )
    return {"objects": objects}


def _check_valley_equivalence(n_max_a: int, n_max_b: int) -> dict:
    # the valley characterization is only asserted up to n = 7
    objects = 0
    for n in range(1, min(n_max_a, 7) + 1):
        for p in families.iter_permutations(n):
            objects += 1
            _expect(
                families.is_andre(p) == families.is_andre_valley(p),
                f"valley characterization disagrees on {perm_to_text(p)}",
            )
    return {"objects": objects}


def _check_conjugation_diagram(n_max_a: int, n_max_b: int) -> dict:
    objects = 0
    for n in range(1, n_max_b + 1):
        ident = range(1, n + 1)
        for p in _family(FamilyTag.ALT_B, n):
            objects += 1
            lhs = order_relabel(bijections.psi_signed(p), ident)
            rhs = bijections.psi_c(order_relabel(p, ident))[0]
            _expect(lhs == rhs, f"psi conjugation square fails on {perm_to_text(p)}")
        for t in _family(FamilyTag.TREE_B, n):
            objects += 1
            lhs = order_relabel(bijections.omega_signed(t), ident)
            rhs = bijections.omega(order_relabel(t, ident))
            _expect(
                lhs == rhs, f"omega conjugation square fails on {tree_to_literal(t)}"
            )
    return {"objects": objects}


_CHECKS: dict[str, Callable[[int, int], dict]] = {
    "entringer-families": _check_entringer_families,
    "arnold-families": _check_arnold_families,
    "omega-bijection": _check_omega,
    "phi-bijection": _check_phi,
    "psi-bijection": _check_psi,
    "psi-equality": _check_psi_equality,
    "psi-signed-bijection": _check_psi_signed,
    "omega-signed-bijection": _check_omega_signed,
    "phi-signed-bijection": _check_phi_signed,
    "chuang-factorization": _check_chuang_factorization,
    "cd-preservation": _check_cd_preservation,
    "andre-implies-simsun": _check_andre_implies_simsun,
    "valley-equivalence": _check_valley_equivalence,
    "conjugation-diagram": _check_conjugation_diagram,
}


def check_ids() -> tuple[str, ...]:
    """All theorem check identifiers, sorted."""
    return tuple(sorted(_CHECKS))


def run_checks(
    selection: Iterable[str] | None = None,
    n_max_a: int = DEFAULT_N_MAX_A,
    n_max_b: int = DEFAULT_N_MAX_B,
    force: bool = False,
) -> list[CheckReport]:
    """Run theorem checks and return one report per check, sorted by id."""
    if selection is None:
        chosen = check_ids()
    else:
        chosen = tuple(sorted(set(selection)))
        unknown = [c for c in chosen if c not in _CHECKS]
        if unknown:
            raise ValueError(f"unknown check ids: {', '.join(unknown)}")
    if not force and (n_max_a > EXTENDED_N_MAX_A or n_max_b > EXTENDED_N_MAX_B):
        raise families.GuardExceededError(
            f"check caps are n_max_a <= {EXTENDED_N_MAX_A}, "
            f"n_max_b <= {EXTENDED_N_MAX_B}; pass force=True to override"
        )
    reports = []
    for check_id in chosen:
        params = {"n_max_a": n_max_a, "n_max_b": n_max_b}
        start = time.perf_counter()
        try:
            counts = _CHECKS[check_id](n_max_a, n_max_b)
            status, witness = PASS, None
        except _Failure as failure:
            counts, status, witness = {}, FAIL, failure.witness
        reports.append(
            CheckReport(
                check_id=check_id,
                params=params,
                status=status,
                counts=counts,
                counterexample=witness,
                elapsed=time.perf_counter() - start,
            )
        )
    return reports


def check_conjecture(
    n_max: int = DEFAULT_N_MAX_CONJECTURE, force: bool = False
) -> list[CheckReport]:
    """Compare Arnold numbers against fast forced-sign Andre counts.

    For every 1 <= k <= n <= n_max the Arnold number S(n, k) is compared
    with the number of forced-sign Andre words of [n+1] ending in
    n+2-k.  One report per n; a FAIL means a counterexample to an open
    conjecture and carries the witness.
    """
    if n_max > DEFAULT_N_MAX_CONJECTURE and not force:
        raise families.GuardExceededError(
            f"conjecture sweep capped at n <= {DEFAULT_N_MAX_CONJECTURE}; "
            "pass force=True to override"
        )
    table = triangles.arnold_table(n_max)
    reports = []
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        status, witness = PASS, None
        compared = 0
        for k in range(1, n + 1):
            lhs = table.value(n, k)
            rhs = families.count_hetyei_fast(n + 1, n + 2 - k, force=force)
            compared += 1
            if lhs != rhs:
                status = FAIL
                witness = (
                    f"n={n} k={k}: arnold={lhs} forced-sign-andre"
                    f"(n+1={n + 1}, last={n + 2 - k})={rhs}"
                )
                break
        reports.append(
            CheckReport(
                check_id="conjecture",
                params={"n": n},
                status=status,
                counts={"compared": compared},
                counterexample=witness,
                elapsed=time.perf_counter() - start,
            )
        )
    return reports
