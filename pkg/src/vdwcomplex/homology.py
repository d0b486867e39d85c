"""Exact reduced simplicial homology and the Reisner Cohen-Macaulay test.

Homology is computed from integer boundary matrices of the augmented
chain complex (the empty face is a (-1)-chain, so Betti numbers are
reduced).  Ranks are exact: fraction-free integer elimination for the
rationals, modular elimination for prime fields.  Cohen-Macaulayness is
decided by Reisner's criterion: every face link must have vanishing
reduced homology below its dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from vdwcomplex import _kernels
from vdwcomplex.complexes import SimplicialComplex, unpack

RATIONALS = 0


def parse_field(field) -> int:
    """Normalize a field descriptor to 0 (rationals) or a prime p.

    Accepts 0/None, a prime integer, or the strings "Q", "F2", "Fp:<p>".
    """
    if field is None or field == RATIONALS:
        return RATIONALS
    if isinstance(field, int):
        if not _is_prime(field):
            raise ValueError(f"{field} is not prime")
        return field
    if isinstance(field, str):
        text = field.strip()
        if text in ("Q", "QQ", "0"):
            return RATIONALS
        if text.upper().startswith("F"):
            digits = text[1:].lstrip("pP").lstrip(":")
            if digits.isdigit():
                return parse_field(int(digits))
    raise ValueError(f"unrecognized field descriptor {field!r}; use Q, F2 or Fp:<p>")


def field_label(char: int) -> str:
    return "Q" if char == RATIONALS else f"Fp:{char}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers dim H~_i for i = -1 .. dim."""

    field: str
    betti: dict[int, int]

    def to_dict(self) -> dict:
        return {"field": self.field, "betti": {str(i): b for i, b in sorted(self.betti.items())}}


@dataclass(frozen=True)
class CohenMacaulayResult:
    value: bool
    field: str
    witness_face: tuple[int, ...] | None = None
    witness_degree: int | None = None

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> dict:
        return {
            "cohen_macaulay": self.value,
            "field": self.field,
            "witness_face": list(self.witness_face) if self.witness_face is not None else None,
            "witness_degree": self.witness_degree,
        }


def _all_faces(facet_masks) -> set[int]:
    """Downward closure of a facet list, as masks (including the empty face)."""
    seen = {0}
    stack = [m for m in facet_masks if m]
    seen.update(stack)
    while stack:
        m = stack.pop()
        rest = m
        while rest:
            bit = rest & -rest
            sub = m ^ bit
            if sub and sub not in seen:
                seen.add(sub)
                stack.append(sub)
            rest ^= bit
    return seen


def _faces_by_dim(facet_masks) -> list[list[int]]:
    """Faces grouped by dimension, each level sorted by vertex tuple."""
    if not facet_masks:
        return []
    top = max(m.bit_count() for m in facet_masks)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for m in _all_faces(facet_masks):
        levels[m.bit_count()].append(m)
    for level in levels:
        level.sort(key=unpack)
    return levels  # levels[c] = faces with c vertices (dimension c-1)


def _boundary_matrix(lower: list[int], upper: list[int]) -> list[list[int]]:
    """Signed incidence matrix from (i)-faces (columns) to (i-1)-faces (rows)."""
    index = {m: r for r, m in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for col, m in enumerate(upper):
        sign = 1
        rest = m
        while rest:
            bit = rest & -rest
            rows[index[m ^ bit]][col] = sign
            sign = -sign
            rest ^= bit
    return rows


def _assert_chain_complex(matrices: list[list[list[int]]]) -> None:
    # boundary-of-boundary must vanish identically
    for lower, upper in zip(matrices, matrices[1:]):
        if not lower or not upper or not upper[0]:
            continue
        ncols = len(upper[0])
        nmid = len(upper)
        for c in range(ncols):
            acc = [0] * len(lower)
            for m in range(nmid):
                coeff = upper[m][c]
                if coeff:
                    for r in range(len(acc)):
                        acc[r] += coeff * lower[r][m]
            if any(acc):
                raise AssertionError("boundary composed with boundary is nonzero")


def _reduced_betti(facet_masks, char: int) -> dict[int, int]:
    """Reduced Betti numbers of a nonvoid facet list over the given field."""
    levels = _faces_by_dim(facet_masks)
    top = len(levels) - 1  # number of vertices in a top face
    counts = [1] + [len(level) for level in levels[1:]]  # counts[c] = #(c-1)-dim faces
    matrices = []
    for c in range(1, top + 1):
        lower = levels[c - 1] if c > 1 else [0]
        matrices.append(_boundary_matrix(lower, levels[c]))
    _assert_chain_complex(matrices)
    ranks = []
    for c, mat in enumerate(matrices, start=1):
        ncols = counts[c]
        if char == RATIONALS:
            ranks.append(_kernels.rank_bareiss(mat, ncols))
        else:
            ranks.append(_kernels.rank_mod_p(mat, ncols, char))
    ranks.append(0)  # above the top dimension
    betti = {}
    for c in range(0, top + 1):
        below = ranks[c - 1] if c >= 1 else 0
        betti[c - 1] = counts[c] - below - ranks[c]
    return betti


def reduced_homology(cx: SimplicialComplex, field="Q") -> HomologyProfile:
    """Reduced Betti numbers of a nonvoid complex over Q or F_p."""
    if cx.is_void:
        raise ValueError("reduced homology of the void complex is undefined")
    char = parse_field(field)
    return HomologyProfile(field_label(char), _reduced_betti(cx.facet_masks, char))


def is_cohen_macaulay(cx: SimplicialComplex, field="Q", check_all_faces: bool = False) -> CohenMacaulayResult:
    """Reisner test: every face link is homology-trivial below its dimension.

    Nonpure complexes are rejected immediately (Cohen-Macaulay complexes
    are pure).  Faces are visited by increasing dimension and the first
    failing link is reported as a witness.  By default faces whose link
    is at most 0-dimensional are skipped (their condition is vacuous);
    ``check_all_faces`` forces the naive full traversal.
    """
    if cx.is_void:
        raise ValueError("Cohen-Macaulayness of the void complex is undefined")
    char = parse_field(field)
    label = field_label(char)
    if not cx.is_pure:
        return CohenMacaulayResult(False, label)
    facet_masks = cx.facet_masks
    faces = sorted(_all_faces(facet_masks), key=lambda m: (m.bit_count(), unpack(m)))
    for fmask in faces:
        link = [g ^ fmask for g in facet_masks if g & fmask == fmask]
        link_dim = max(m.bit_count() for m in link) - 1
        if not check_all_faces and fmask != 0 and link_dim < 1:
            continue
        if link_dim < 0 and fmask != 0:
            continue  # link of a facet: nothing below dimension -1
        betti = _reduced_betti(link, char)
        for i in range(-1, link_dim):
            if betti.get(i, 0) != 0:
                return CohenMacaulayResult(False, label, unpack(fmask), i)
    return CohenMacaulayResult(True, label)
