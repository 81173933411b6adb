"""Catalog of small groups with expected Sylow numbers, checked by brute force.

Each entry names a groupengine constructor, the expected order and the
expected n_p values. Verification builds the group, runs both oracles,
checks n_p * |N_G(P)| = |G|, and compares against any listed closed-form
formula and the family order formula.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .families import FamilyId, evaluate, group_order
from .groupengine import (
    CapExceeded,
    alternating_group,
    count_sylow_by_conjugacy,
    count_sylow_by_elements,
    find_sylow_subgroup,
    frobenius_affine,
    normalizer_order,
    psl,
    sp4_2,
)
from .groupengine.sylow import p_part

CONSTRUCTORS = {
    "alternating_group": alternating_group,
    "psl": psl,
    "sp4_2": sp4_2,
    "frobenius_affine": frobenius_affine,
}


class CatalogError(ValueError):
    """The catalog file is readable but malformed."""


@dataclass(frozen=True)
class Formula:
    name: str
    args: tuple


@dataclass(frozen=True)
class ExpectedSylow:
    p: int
    n_p: int
    provenance: str
    formulas: tuple[Formula, ...] = ()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    constructor: str
    parameters: dict
    expected_order: int
    expected_sylow: tuple[ExpectedSylow, ...]
    family: str | None = None
    deep: bool = False

    def build(self):
        return CONSTRUCTORS[self.constructor](**self.parameters)


@dataclass(frozen=True)
class Check:
    label: str
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class EntryResult:
    name: str
    status: str  # PASS, FAIL or SKIPPED
    checks: list[Check] = field(default_factory=list)
    note: str = ""

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _entry_from_dict(d: dict) -> CatalogEntry:
    try:
        sylow = tuple(
            ExpectedSylow(
                int(s["p"]), int(s["n_p"]), str(s.get("provenance", "")),
                tuple(Formula(f["name"], tuple(f["args"])) for f in s.get("formulas", [])),
            )
            for s in d["expected_sylow"]
        )
        entry = CatalogEntry(
            name=str(d["name"]),
            constructor=str(d["constructor"]),
            parameters=dict(d.get("parameters", {})),
            expected_order=int(d["expected_order"]),
            expected_sylow=sylow,
            family=d.get("family"),
            deep=bool(d.get("deep", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed catalog entry {d!r}: {exc}") from None
    if entry.constructor not in CONSTRUCTORS:
        raise CatalogError(f"unknown constructor {entry.constructor!r} in entry {entry.name}")
    return entry


def parse_catalog(text: str) -> list[CatalogEntry]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("entries"), list):
        raise CatalogError('catalog must be an object with an "entries" list')
    return [_entry_from_dict(d) for d in data["entries"]]


def default_catalog_text() -> str:
    return resources.files("sylownum").joinpath("data/default_catalog.json").read_text()


def load_catalog(path: str | None = None) -> list[CatalogEntry]:
    """The shipped catalog, or the one at ``path`` (OSError propagates)."""
    if path is None:
        return parse_catalog(default_catalog_text())
    with open(path, encoding="utf-8") as f:
        return parse_catalog(f.read())


def verify_entry(entry: CatalogEntry, deep: bool = False) -> EntryResult:
    if entry.deep and not deep:
        return EntryResult(entry.name, "SKIPPED", note="deep entry (use --deep)")
    try:
        G = entry.build()
    except CapExceeded as exc:
        return EntryResult(entry.name, "FAIL" if deep else "SKIPPED", note=str(exc))
    checks = [Check("|G|", entry.expected_order, G.order)]
    if entry.family:
        checks.append(Check(f"|{entry.family}| by order formula", G.order, group_order(FamilyId.parse(entry.family))))
    for s in entry.expected_sylow:
        conj = count_sylow_by_conjugacy(G, s.p).n_p
        checks.append(Check(f"n_{s.p}", s.n_p, conj))
        if p_part(G.order, s.p) == s.p:
            checks.append(Check(f"n_{s.p} element count vs conjugacy", conj, count_sylow_by_elements(G, s.p).n_p))
        _, members = find_sylow_subgroup(G, s.p)
        checks.append(Check(f"n_{s.p} * |N_G(P)|", G.order, conj * normalizer_order(G, members)))
        for f in s.formulas:
            args = ", ".join(str(a) for a in f.args)
            checks.append(Check(f"n_{s.p} vs {f.name}({args})", conj, evaluate(f.name, f.args).value))
    status = "PASS" if all(c.ok for c in checks) else "FAIL"
    return EntryResult(entry.name, status, checks)


def verify_catalog(entries: list[CatalogEntry], deep: bool = False) -> list[EntryResult]:
    return [verify_entry(e, deep) for e in entries]
