"""Built-in designs: Fano plane, PG(2, q), the (9,3,1)-design, Bose STS, cyclic
designs from difference families, and the (8,4,3) fixture with 14 blocks.

Every constructor returns a design that went through ``validate_design``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .design import Design, validate_design
from .errors import BadOrder, DifferenceCoverageViolation, NotPrime

FANO_BLOCKS = [
    (1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6),
]

FIXTURE_843_BLOCKS = [
    (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 6, 7), (1, 3, 6, 8), (1, 4, 5, 6),
    (1, 4, 7, 8), (1, 5, 7, 8), (2, 3, 7, 8), (2, 4, 5, 7), (2, 4, 6, 8),
    (2, 5, 6, 8), (3, 4, 5, 8), (3, 4, 6, 7), (3, 5, 6, 7),
]


@dataclass(frozen=True)
class DifferenceFamily:
    """Base blocks over Z_n; developing them cyclically gives a design."""

    modulus: int
    base_blocks: tuple[tuple[int, ...], ...]

    def difference_counts(self) -> Counter[int]:
        n = self.modulus
        counts: Counter[int] = Counter()
        for blk in self.base_blocks:
            for x, y in combinations(blk, 2):
                counts[(x - y) % n] += 1
                counts[(y - x) % n] += 1
        return counts

    def lam(self) -> int:
        """Coverage count of each nonzero residue; raises if it is not constant."""
        n = self.modulus
        counts = self.difference_counts()
        values = {counts.get(d, 0) for d in range(1, n)}
        if len(values) != 1 or 0 in values:
            bad = min(range(1, n), key=lambda d: (counts.get(d, 0), d))
            raise DifferenceCoverageViolation(
                f"differences mod {n} are not uniform: residue {bad} appears {counts.get(bad, 0)} times"
            )
        return values.pop()


PRESETS: dict[str, DifferenceFamily] = {
    "sts13": DifferenceFamily(13, ((0, 1, 4), (0, 2, 7))),
    "sts19": DifferenceFamily(19, ((0, 1, 4), (0, 2, 9), (0, 5, 11))),
    "biplane11": DifferenceFamily(11, ((1, 3, 4, 5, 9),)),
}


def fano() -> Design:
    return validate_design(7, FANO_BLOCKS, 3, 1, one_based=True, name="fano")


def fixture_8_4_3() -> Design:
    return validate_design(8, FIXTURE_843_BLOCKS, 4, 3, one_based=True, name="fixture-843")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def _normalized_vectors(q: int) -> list[tuple[int, int, int]]:
    # projective points of PG(2, q): first nonzero coordinate equal to 1
    out = []
    for a in range(q):
        for b in range(q):
            out.append((1, a, b))
    for b in range(q):
        out.append((0, 1, b))
    out.append((0, 0, 1))
    return out


def projective_plane(q: int) -> Design:
    """PG(2, q) for prime ``q``; points and lines are normalized vectors of F_q^3."""
    if not _is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    pts = _normalized_vectors(q)
    blocks = [
        [i for i, p in enumerate(pts) if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0]
        for l in pts
    ]
    return validate_design(q * q + q + 1, blocks, q + 1, 1, name=f"pg2-{q}")


def affine_plane_9() -> Design:
    """The (9,3,1)-design: lines of the 3x3 grid, point (x, y) numbered ``3y + x``."""
    blocks = []
    for c in range(3):
        blocks.append([3 * y + c for y in range(3)])  # vertical x = c
    for m in range(3):
        for c in range(3):
            blocks.append([3 * ((m * x + c) % 3) + x for x in range(3)])
    return validate_design(9, blocks, 3, 1, name="ag9")


def sts_bose(v: int) -> Design:
    """Bose construction of an STS(v) for v = 3 (mod 6).

    Points are pairs (x, i) with x in Z_n, n = v/3, i in {0, 1, 2}, numbered
    ``i*n + x``.  The idempotent commutative quasigroup is x.y = (x+y)/2 mod n.
    """
    if v % 6 != 3 or v < 9:
        raise BadOrder(f"Bose construction needs v = 3 (mod 6) and v >= 9, got {v}")
    n = v // 3
    half = pow(2, -1, n)

    def pt(x: int, i: int) -> int:
        return (i % 3) * n + x

    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(n)]
    for i in range(3):
        for x, y in combinations(range(n), 2):
            blocks.append([pt(x, i), pt(y, i), pt((x + y) * half % n, i + 1)])
    return validate_design(v, blocks, 3, 1, name=f"sts{v}-bose")


def cyclic_design(family: DifferenceFamily, name: str = "") -> Design:
    """Develop every base block through Z_n (block ``j*n + t`` is base ``j`` shifted by ``t``)."""
    lam = family.lam()
    n = family.modulus
    ks = {len(blk) for blk in family.base_blocks}
    if len(ks) != 1:
        raise DifferenceCoverageViolation("base blocks have different sizes")
    blocks = [[(x + t) % n for x in base] for base in family.base_blocks for t in range(n)]
    return validate_design(n, blocks, ks.pop(), lam, name=name or f"cyclic-{n}")


def cyclic_preset(name: str) -> Design:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    return cyclic_design(PRESETS[name], name=name)


def sts13_second() -> Design:
    """The STS(13) without a cyclic automorphism, shipped as a data file.

    It was produced from ``cyclic_preset("sts13")`` by one Pasch trade; the two
    systems have different Pasch counts (13 against 8), so they are not
    isomorphic.
    """
    from .fileformat import parse_design_file

    text = resources.files("designdom.data").joinpath("sts13b.txt").read_text()
    return parse_design_file(text, name="sts13b")


BUILTINS = {
    "fano": fano,
    "ag9": affine_plane_9,
    "fixture-843": fixture_8_4_3,
    "sts13": lambda: cyclic_preset("sts13"),
    "sts13b": sts13_second,
    "sts15": lambda: sts_bose(15),
    "sts19": lambda: cyclic_preset("sts19"),
    "biplane11": lambda: cyclic_preset("biplane11"),
    "pg2": lambda: projective_plane(2),
    "pg3": lambda: projective_plane(3),
    "pg5": lambda: projective_plane(5),
}


def builtin(name: str) -> Design:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown design {name!r}; built-ins are {sorted(BUILTINS)}") from None
