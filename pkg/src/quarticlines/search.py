"""Height-bounded search for rational lines, bitangents and points.

Height is the sup-norm of the canonical (primitive, sign-normalized)
Plucker vector.  Two complete search strategies produce identical
catalogs:

* exhaustive: sweep the six first-nonzero-coordinate strata of the
  Grassmannian, classify every line.  The number of rational lines of
  height <= H grows like H^4 (about 37 * H^4 empirically), so this is
  only viable for small H.

* sieve: bitangency is the exact vanishing of the (f, Hess f) minors,
  integer polynomials in the Plucker data.  Enumerate the solutions of
  those conditions mod two primes with p1*p2 >= 2H+1, lift each residue
  pair to its unique representative in the box, and keep the survivors.
  Every true bitangent of height <= H reduces into both solution sets, so
  no line is missed; false positives die in the exact re-classification.

Every candidate either way is re-classified with exact rational
arithmetic before it can enter a catalog, and catalogs are sorted, so
results are byte-identical across strategies, backends and thread counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from ._backend import BACKEND, kernels, set_worker_threads
from .errors import QuarticLinesError
from .forms import QuarticForm, quartic_exponents
from .projective import Line, ProjPoint, lines_meet
from .tangency import (
    CONTAINED,
    ContactPoint,
    TangencyType,
    classify_tangency,
    contact_points,
)

__all__ = [
    "HeightBound",
    "BitangentCatalog",
    "CatalogEntry",
    "IncidenceGraph",
    "enumerate_lines",
    "search_bitangents",
    "search_rational_points",
    "incidence_graph",
    "smoothness_warnings",
    "passes_smoothness_screen",
]

_EXP_ARRAY = np.array(quartic_exponents(), dtype=np.int64)

# exhaustive sweep cost grows like H^5; beyond this the sieve wins
EXHAUSTIVE_CUTOFF = 24

_SIEVE_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)

# pair-join budget: |Z_p1| * |Z_p2| iterations the sieve is allowed
_JOIN_BUDGET = 8_000_000_000

_zp_cache: dict = {}


@dataclass(frozen=True)
class HeightBound:
    """Search truncation: canonical Plucker sup-norm <= H."""

    H: int

    def __post_init__(self):
        if not isinstance(self.H, int) or self.H < 1:
            raise ValueError("height bound must be an integer >= 1")


def _coerce_height(H) -> int:
    if isinstance(H, HeightBound):
        return H.H
    return HeightBound(int(H)).H


def _primitive_part(F: QuarticForm) -> QuarticForm:
    c = F.content
    if c == 1:
        return F
    return QuarticForm({e: v // c for e, v in F.terms()})


def _int64_guard(F: QuarticForm, H: int):
    # restriction coefficients are bounded by sum|c| * (2H)^4
    bound = 35 * F.max_abs_coeff * 16 * H ** 4
    if bound >= 2 ** 62:
        raise QuarticLinesError(
            f"height {H} with coefficients up to {F.max_abs_coeff} exceeds the "
            "exact int64 envelope of the search kernels"
        )


def _fvec(F: QuarticForm) -> np.ndarray:
    return np.array(F.coefficient_vector(), dtype=np.int64)


def enumerate_lines(H) -> Iterator[Line]:
    """Every rational line of Plucker height <= H, exactly once, in a
    fixed deterministic order (strata by first nonzero coordinate, then
    sweep order).  Intended for small H: the count grows like 37 * H^4."""
    H = _coerce_height(H)
    for m in range(1, H + 1):
        for p02 in range(-H, H + 1):
            for row in kernels.stratum_block(H, 0, m, p02):
                yield Line.from_plucker(tuple(int(v) for v in row))
    for kappa in range(1, 6):
        for m in range(1, H + 1):
            for row in kernels.stratum_block(H, kappa, m):
                yield Line.from_plucker(tuple(int(v) for v in row))


@dataclass(frozen=True)
class CatalogEntry:
    line: Line
    tangency: TangencyType
    contacts: tuple[ContactPoint, ...]


@dataclass(frozen=True)
class BitangentCatalog:
    """Everything the bitangent search found at one height bound."""

    quartic: QuarticForm
    height: int
    bitangents: tuple[CatalogEntry, ...]
    contained_lines: tuple[Line, ...]
    counts: dict
    mode: str
    sieve_primes: Optional[tuple[int, int]]
    warnings: tuple[str, ...] = field(default=())

    @property
    def bitangent_count(self) -> int:
        return len(self.bitangents)

    def plucker_set(self):
        return {e.line.plucker for e in self.bitangents}


def _zp_solutions(F: QuarticForm, p: int) -> np.ndarray:
    key = (F.terms(), p)
    if key not in _zp_cache:
        _zp_cache[key] = kernels.sieve_zp(_fvec(F), _EXP_ARRAY, p)
    return _zp_cache[key]


def _choose_sieve_primes(F: QuarticForm, H: int):
    """A prime pair with p1 * p2 >= 2H + 1, preferring small primes (the
    mod-p enumeration costs p^4) and a join within budget."""
    need = 2 * H + 1
    pairs = [
        (p1, p2)
        for i, p1 in enumerate(_SIEVE_PRIMES)
        for p2 in _SIEVE_PRIMES[i + 1 :]
        if p1 * p2 >= need
    ]
    if not pairs:
        raise QuarticLinesError(f"height {H} exceeds the configured sieve primes")
    pairs.sort(key=lambda pr: (max(pr), pr[0] * pr[1]))
    fallback = None
    for p1, p2 in pairs:
        z1 = _zp_solutions(F, p1)
        z2 = _zp_solutions(F, p2)
        work = z1.shape[0] * z2.shape[0]
        if fallback is None or work < fallback[0]:
            fallback = (work, p1, p2)
        if work <= _JOIN_BUDGET:
            return p1, p2
    return fallback[1], fallback[2]


def _candidate_rows(F: QuarticForm, H: int, mode: str):
    fvec = _fvec(F)
    if mode == "exhaustive":
        return kernels.exhaustive_candidates(fvec, _EXP_ARRAY, H), None
    p1, p2 = _choose_sieve_primes(F, H)
    z1 = _zp_solutions(F, p1)
    z2 = _zp_solutions(F, p2)
    rows = kernels.crt_join(z1, z2, p1, p2, H, fvec, _EXP_ARRAY)
    return rows, (p1, p2)


def search_bitangents(
    F: QuarticForm,
    H,
    mode: str = "auto",
    workers: Optional[int] = None,
    smooth_check_primes=(2, 3, 5, 7, 11),
) -> BitangentCatalog:
    """Catalog all bitangent (and contained) lines of height <= H.

    ``mode`` is "auto", "exhaustive" or "sieve"; auto switches to the
    sieve above H = 24.  Candidate lines from the kernels are exactly
    re-classified, deduplicated by canonical Plucker vector and sorted,
    so the catalog is deterministic for fixed inputs."""
    H = _coerce_height(H)
    Fp = _primitive_part(F)
    _int64_guard(Fp, H)
    if workers is not None:
        set_worker_threads(workers)
    if mode == "auto":
        mode = "exhaustive" if H <= EXHAUSTIVE_CUTOFF else "sieve"
    if mode not in ("exhaustive", "sieve"):
        raise ValueError(f"unknown search mode {mode!r}")

    warnings = tuple(smoothness_warnings(Fp, smooth_check_primes))
    rows, primes = _candidate_rows(Fp, H, mode)

    entries = []
    contained = []
    seen = set()
    for row in rows:
        key = tuple(int(v) for v in row)
        if key in seen:
            continue
        seen.add(key)
        line = Line.from_plucker(key)
        tt = classify_tangency(Fp, line)
        if tt.kind == CONTAINED:
            contained.append(line)
        elif tt.is_bitangent:
            contacts = tuple(contact_points(Fp, line, tangency=tt))
            entries.append(CatalogEntry(line, tt, contacts))
        # anything else was a modular false positive
    entries.sort(key=lambda e: e.line.plucker)
    contained.sort(key=lambda l: l.plucker)
    counts = {
        "Bitangent": sum(1 for e in entries if e.tangency.kind == "Bitangent"),
        "Quadritangent": sum(1 for e in entries if e.tangency.kind == "Quadritangent"),
        "bitangents_total": len(entries),
        "Contained": len(contained),
    }
    return BitangentCatalog(
        quartic=F,
        height=H,
        bitangents=tuple(entries),
        contained_lines=tuple(contained),
        counts=counts,
        mode=mode,
        sieve_primes=primes,
        warnings=warnings,
    )


def search_rational_points(F: QuarticForm, H) -> tuple[ProjPoint, ...]:
    """All canonical points of F = 0 with coordinate sup-norm <= H, in
    lexicographic order."""
    H = _coerce_height(H)
    Fp = _primitive_part(F)
    if 35 * Fp.max_abs_coeff * H ** 4 >= 2 ** 62:
        raise QuarticLinesError("height exceeds the exact int64 envelope")
    rows = kernels.rational_points(_fvec(Fp), _EXP_ARRAY, H)
    pts = []
    for row in rows:
        pt = ProjPoint(tuple(int(v) for v in row))
        assert Fp.evaluate(pt.coords) == 0
        pts.append(pt)
    pts.sort(key=lambda p: p.coords)
    return tuple(pts)


@dataclass(frozen=True)
class IncidenceGraph:
    """Meeting pairs among the catalog's bitangents: the rational sample
    of the incidence divisors."""

    lines: tuple[Line, ...]
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "lines": [list(l.plucker) for l in self.lines],
            "edges": [list(e) for e in self.edges],
            "degrees": list(self.degrees),
        }


def incidence_graph(catalog: BitangentCatalog) -> IncidenceGraph:
    lines = tuple(e.line for e in catalog.bitangents)
    edges = []
    deg = [0] * len(lines)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines_meet(lines[i], lines[j]):
                edges.append((i, j))
                deg[i] += 1
                deg[j] += 1
    return IncidenceGraph(lines, tuple(edges), tuple(deg))


def _projective_reps_mod_p(p: int):
    for a in range(p):
        for b in range(p):
            for c in range(p):
                yield (1, a, b, c)
    for b in range(p):
        for c in range(p):
            yield (0, 1, b, c)
    for c in range(p):
        yield (0, 0, 1, c)
    yield (0, 0, 0, 1)


def smoothness_warnings(F: QuarticForm, primes) -> list[str]:
    """Mod-p singular point scan.  A hit means the reduction is singular,
    which is evidence (not proof) that F itself may be singular; reported
    as a warning, never an error."""
    out = []
    terms = F.terms()
    for p in primes:
        p = int(p)
        if p < 2:
            continue
        found = None
        for pt in _projective_reps_mod_p(p):
            fval = 0
            grads = [0, 0, 0, 0]
            for exp, c in terms:
                t = c
                for i in range(4):
                    for _ in range(exp[i]):
                        t = t * pt[i] % p
                fval = (fval + t) % p
                for i in range(4):
                    if exp[i] == 0:
                        continue
                    g = c * exp[i]
                    for j in range(4):
                        e = exp[j] - (1 if j == i else 0)
                        for _ in range(e):
                            g = g * pt[j] % p
                    grads[i] = (grads[i] + g) % p
            if fval % p == 0 and all(g % p == 0 for g in grads):
                found = pt
                break
        if found is not None:
            out.append(
                f"mod-{p} smoothness screen failed: singular point {found} on the "
                "reduction; the surface itself may be singular"
            )
    return out


def passes_smoothness_screen(F: QuarticForm, primes=(2, 3, 5, 7, 11)) -> bool:
    return not smoothness_warnings(_primitive_part(F), primes)
