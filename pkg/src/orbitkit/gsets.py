"""Finite G-sets: orbits, stabilizers, fixed points, equivariant maps.

A G-set stores one permutation per group element; validation enforces the
action axioms, so downstream code can trust ``act[g][x]`` blindly.  The
central fact exercised here is that equivariant maps out of a coset G-set
G/H correspond to H-fixed points of the target, via evaluation at the
base coset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group, Subgroup, left_cosets


@dataclass(frozen=True)
class GSet:
    group: Group
    size: int
    act: tuple[tuple[int, ...], ...]  # act[g][point]

    def apply(self, g: int, x: int) -> int:
        return self.act[g][x]

    def __repr__(self):
        return f"GSet(|X|={self.size} over {self.group!r})"


@dataclass(frozen=True)
class GMap:
    source: GSet
    target: GSet
    values: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.values[x]


def make_gset(group: Group, perms, validate: bool = True) -> GSet:
    """Build a validated GSet from per-element permutations.

    ``perms`` maps each group element to a permutation of ``0..size-1``
    (list indexed by element, or dict keyed by element).
    """
    if isinstance(perms, dict):
        act = [tuple(perms[g]) for g in group.elements()]
    else:
        act = [tuple(p) for p in perms]
    if len(act) != group.order:
        raise ValueError("need one permutation per group element")
    size = len(act[0]) if act else 0
    x = GSet(group, size, tuple(act))
    if validate:
        validate_gset(x)
    return x


def validate_gset(x: GSet) -> None:
    g = x.group
    for a in g.elements():
        p = x.act[a]
        if len(p) != x.size or sorted(p) != list(range(x.size)):
            raise ValueError(f"action of {a} is not a permutation")
    if x.act[0] != tuple(range(x.size)):
        raise ValueError("identity must act trivially")
    for a in g.elements():
        for b in g.elements():
            ab = g.mult[a][b]
            for pt in range(x.size):
                if x.act[ab][pt] != x.act[a][x.act[b][pt]]:
                    raise ValueError(f"action not a homomorphism at ({a},{b})")


def make_gmap(source: GSet, target: GSet, values) -> GMap:
    if source.group != target.group:
        raise ValueError("G-map needs a common acting group")
    vals = tuple(values)
    if len(vals) != source.size:
        raise ValueError("value list length mismatch")
    for v in vals:
        if not 0 <= v < target.size:
            raise ValueError(f"value {v} outside the target")
    for g in source.group.elements():
        for x in range(source.size):
            if vals[source.act[g][x]] != target.act[g][vals[x]]:
                raise ValueError(f"not equivariant at (g={g}, x={x})")
    return GMap(source, target, vals)


def trivial_gset(group: Group, size: int) -> GSet:
    ident = tuple(range(size))
    return GSet(group, size, tuple(ident for _ in group.elements()))


def coset_gset(g: Group, h: Subgroup) -> GSet:
    """G/H with left translation; point i is the i-th coset by least rep."""
    if h.parent != g:
        raise ValueError("subgroup of a different group")
    cosets = left_cosets(g, h)
    index = {c: i for i, c in enumerate(cosets)}
    act = []
    for a in g.elements():
        row = []
        for c in cosets:
            moved = tuple(sorted(g.mult[a][x] for x in c))
            row.append(index[moved])
        act.append(tuple(row))
    return GSet(g, len(cosets), tuple(act))


def regular_gset(g: Group) -> GSet:
    from .groups import trivial_subgroup
    return coset_gset(g, trivial_subgroup(g))


@dataclass(frozen=True)
class Orbit:
    representative: int
    stabilizer: Subgroup
    members: tuple[int, ...]


@dataclass(frozen=True)
class OrbitReport:
    orbits: tuple[Orbit, ...]
    fixed: tuple[int, ...]


def stabilizer(x: GSet, point: int) -> Subgroup:
    g = x.group
    mem = tuple(sorted(a for a in g.elements() if x.act[a][point] == point))
    return Subgroup(g, mem)


def orbit_analysis(x: GSet, h: Subgroup) -> OrbitReport:
    """Orbits of the full group action plus the H-fixed points.

    Stabilizers always refer to the whole group; the subgroup argument
    only selects which fixed-point set is reported.
    """
    if h.parent != x.group:
        raise ValueError("subgroup of a different group")
    g = x.group
    seen = set()
    orbits = []
    for pt in range(x.size):
        if pt in seen:
            continue
        members = tuple(sorted({x.act[a][pt] for a in g.elements()}))
        seen.update(members)
        orbits.append(Orbit(members[0], stabilizer(x, members[0]), members))
    fixed = tuple(pt for pt in range(x.size)
                  if all(x.act[a][pt] == pt for a in h.members))
    return OrbitReport(tuple(orbits), fixed)


def is_transitive(x: GSet) -> bool:
    if x.size == 0:
        return False
    rep = orbit_analysis(x, Subgroup(x.group, (0,)))
    return len(rep.orbits) == 1


def equivariant_maps(source: GSet, target: GSet) -> list[GMap]:
    """All G-maps out of a transitive (coset) G-set.

    A map is determined by the image of the base point 0, which can be any
    point of the target fixed by the stabilizer H of 0; the resulting
    evaluation-at-0 correspondence with target^H is checked to be a
    bijection before returning.
    """
    if not is_transitive(source):
        raise ValueError("source must be a transitive (coset) G-set")
    g = source.group
    h = stabilizer(source, 0)
    fixed = orbit_analysis(target, h).fixed
    # least group element moving the base point to each source point
    mover = {}
    for a in g.elements():
        pt = source.act[a][0]
        if pt not in mover:
            mover[pt] = a
    maps = []
    for y in fixed:
        values = [target.act[mover[pt]][y] for pt in range(source.size)]
        maps.append(make_gmap(source, target, values))
    evals = [m.values[0] for m in maps]
    assert sorted(evals) == sorted(fixed) and len(set(evals)) == len(evals), \
        "evaluation at the base point must biject onto the fixed points"
    return maps


def product_gset(x: GSet, y: GSet) -> GSet:
    """Product with diagonal action; point (a, b) has index a*|Y| + b."""
    if x.group != y.group:
        raise ValueError("product needs a common group")
    size = x.size * y.size
    act = []
    for g in x.group.elements():
        row = [0] * size
        for a in range(x.size):
            for b in range(y.size):
                row[a * y.size + b] = x.act[g][a] * y.size + y.act[g][b]
        act.append(tuple(row))
    return GSet(x.group, size, tuple(act))


def pushout_gset(f: GMap, k: GMap) -> tuple[GSet, GMap, GMap]:
    """Pushout of B <-f- A -k-> C; returns (P, B->P, C->P).

    Points of P are equivalence classes of B + C under f(a) ~ k(a),
    numbered by their least member in the disjoint union (B first).
    """
    if f.source != k.source:
        raise ValueError("pushout legs must share their source")
    b, c = f.target, k.target
    n = b.size + c.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for a in range(f.source.size):
        union(f.values[a], b.size + k.values[a])
    reps = sorted({find(i) for i in range(n)})
    index = {r: i for i, r in enumerate(reps)}
    to_p = [index[find(i)] for i in range(n)]
    g = b.group
    act = []
    for gg in g.elements():
        row = [0] * len(reps)
        for i in range(n):
            moved = b.act[gg][i] if i < b.size else b.size + c.act[gg][i - b.size]
            row[to_p[i]] = to_p[moved]
        act.append(tuple(row))
    p = GSet(g, len(reps), tuple(act))
    validate_gset(p)
    bp = make_gmap(b, p, [to_p[i] for i in range(b.size)])
    cp = make_gmap(c, p, [to_p[b.size + i] for i in range(c.size)])
    return p, bp, cp
