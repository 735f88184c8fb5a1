"""Formal rewriting along paths through the triangle of rank conditions.

A path runs from ``r[0,0]`` to ``r[n,n]`` through neighbouring entries.
Three kinds of segments exist, named by how they move in the triangle
picture (row = ``j - i``):

* ``D``: ``(i, j) -> (i, j+1)``, one row down
* ``U``: ``(i, j) -> (i+1, j)``, one row up
* ``H``: ``(i, j) -> (i+1, j+1)``, same row

Each segment carries one slot of the symbol.  The lowest path ``D^n U^n``
has ``Phi = S(0, ..., 0)`` with ``2n`` empty slots.  Any other path is
lowered one corner at a time:

* a peak ``U D`` through ``(i+1, j)`` flattens to ``H``; going back up
  splits that slot by the coproduct (Case 1);
* an ``H`` from ``(i, j)`` drops to the valley ``D U`` through
  ``(i, j+1)``; going back up merges the two slots ``mu, nu`` into
  ``attach(R[i, j+1], nu, mu)``, dropping the term when ``nu`` has more rows
  than the rectangle (Case 2).

Which rectangle and which slot order Case 2 uses is inferred from the Gysin
and factorization lemmas: the valley entry ``r[i, j+1]`` is the rank of the
flag bundle being pushed forward, ``mu`` lives on the lower step into it and
``nu`` on the step out of it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal, Sequence

from .partitions import EMPTY, Partition, Rectangle, attach
from .quiver import RankConditions
from .symbols import QuiverPolynomial, normalize_symbol

Position = tuple[int, int]
Path = tuple[Position, ...]

_STEPS = {(0, 1): "D", (1, 0): "U", (1, 1): "H"}


class PathError(ValueError):
    pass


def validate_path(path: Sequence[Position], n: int) -> Path:
    path = tuple(tuple(p) for p in path)
    if not path or path[0] != (0, 0) or path[-1] != (n, n):
        raise PathError(f"a path must run from (0,0) to ({n},{n})")
    for (i, j) in path:
        if not 0 <= i <= j <= n:
            raise PathError(f"position {(i, j)} is outside the triangle")
    for a, b in zip(path, path[1:]):
        if (b[0] - a[0], b[1] - a[1]) not in _STEPS:
            raise PathError(f"{a} -> {b} is not a step between neighbours")
    return path


def steps(path: Path) -> str:
    return "".join(_STEPS[(b[0] - a[0], b[1] - a[1])] for a, b in zip(path, path[1:]))


def path_from_steps(word: str) -> Path:
    pos = (0, 0)
    out = [pos]
    delta = {v: k for k, v in _STEPS.items()}
    for ch in word:
        di, dj = delta[ch]
        pos = (pos[0] + di, pos[1] + dj)
        out.append(pos)
    return tuple(out)


def lowest_path(n: int) -> Path:
    return path_from_steps("D" * n + "U" * n)


def top_path(n: int) -> Path:
    return path_from_steps("H" * n)


def lowerings(path: Path) -> list[tuple[int, str]]:
    """``(segment index, "peak" | "flat")`` for every corner that can be lowered."""
    word = steps(path)
    out = []
    for k, ch in enumerate(word):
        if ch == "U" and k + 1 < len(word) and word[k + 1] == "D":
            out.append((k, "peak"))
        elif ch == "H":
            out.append((k, "flat"))
    return out


def lower(path: Path, k: int, kind: str) -> Path:
    if kind == "peak":
        return path[:k + 1] + path[k + 2:]
    i, j = path[k]
    return path[:k + 1] + ((i, j + 1),) + path[k + 1:]


def case1(phi: QuiverPolynomial, k: int) -> QuiverPolynomial:
    """Split slot ``k`` by the coproduct."""
    return phi.split_slot(k)


def case2(phi: QuiverPolynomial, k: int, rect: Rectangle) -> QuiverPolynomial:
    """Merge slots ``k, k+1`` = ``(mu, nu)`` into ``attach(rect, nu, mu)``."""
    out = {}
    for key, c in phi.items():
        mu, nu = key[k], key[k + 1]
        if len(nu) > rect.height:
            continue
        norm = normalize_symbol([attach(rect, nu, mu)])
        if norm is None:
            continue
        sign, (lam,) = norm
        new_key = key[:k] + (lam,) + key[k + 2:]
        out[new_key] = out.get(new_key, 0) + sign * c
    return QuiverPolynomial(out, arity=phi.arity - 1)


Order = Literal["left", "right"]


def path_phi(r: RankConditions, path: Sequence[Position], order: Order = "left") -> QuiverPolynomial:
    """The formal sum ``Phi(path)``, one slot per segment.

    ``order`` picks which lowerable corner is used at each step of the
    descent; the result should not depend on it.
    """
    r.require_valid()
    path = validate_path(path, r.n)
    return _phi(r, path, order)


@lru_cache(maxsize=None)
def _phi(r: RankConditions, path: Path, order: Order) -> QuiverPolynomial:
    n = r.n
    if path == lowest_path(n):
        return QuiverPolynomial.symbol(*([EMPTY] * (2 * n)))
    options = lowerings(path)
    k, kind = options[0] if order == "left" else options[-1]
    below = _phi(r, lower(path, k, kind), order)
    if kind == "peak":
        return case1(below, k)
    i, j = path[k]
    return case2(below, k, r.rectangle(i, j + 1))


def all_paths(n: int) -> list[Path]:
    """Every path from ``(0,0)`` to ``(n,n)``."""
    out = []

    def rec(pos, acc):
        if pos == (n, n):
            out.append(tuple(acc))
            return
        for di, dj in _STEPS:
            i, j = pos[0] + di, pos[1] + dj
            if i <= j <= n:
                acc.append((i, j))
                rec((i, j), acc)
                acc.pop()

    rec((0, 0), [(0, 0)])
    return out


def edge_slots(path: Path, n: int) -> list[int]:
    """Indices of segments on the left (``i = 0``) or right (``j = n``) edge."""
    out = []
    for k, (a, b) in enumerate(zip(path, path[1:])):
        if (a[0] == b[0] == 0) or (a[1] == b[1] == n):
            out.append(k)
    return out
