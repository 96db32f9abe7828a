"""Chain complexes over Z, Q, F_p with optional group representations.

Complexes are non-negatively graded, finitely generated free in each
degree, with exact entries throughout.  The normalized chains of a
G-simplicial set have basis the nondegenerate simplices (identifier
order); faces that normalize to degenerate simplices contribute zero to
the differential.

Sign conventions are pinned by the verified identities rather than chosen
in the abstract: d is the alternating face sum, the cone differential is
d(y, x) = (dy + fx, -dx), and the interval shuffle homotopy built by
``prism_homotopy`` satisfies  d phi + phi d = (hc o end1) - (hc o end0)
exactly (checked on every call; a failure raises instead of returning).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import Mat, block_matrix, kernel_basis_field, kernel_z, \
    mat_from_columns, smith_diagonal, solve_exact
from .groups import Group, Subgroup
from .simplicial import GSSet, SMap, fixed_sset, prism as build_prism
from .rings import ZZ


class ChainComplex:
    """Bounded complex of free modules; optionally with a group action."""

    def __init__(self, ring, ranks, diffs, group: Group | None = None,
                 rep=None, basis=None, validate: bool = True):
        self.ring = ring
        self.ranks = tuple(int(r) for r in ranks)
        if not self.ranks:
            self.ranks = (0,)
        self._d = {int(n): m for n, m in dict(diffs).items()}
        self.group = group
        self.rep = rep  # {g: {n: Mat}} or None
        self.basis = basis  # per-degree simplex ids, when built from a GSSet
        if validate:
            self.validate()

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def rank(self, n: int) -> int:
        return self.ranks[n] if 0 <= n <= self.top else 0

    def d(self, n: int) -> Mat:
        m = self._d.get(n)
        if m is None:
            return Mat.zeros(self.ring, self.rank(n - 1), self.rank(n))
        return m

    def rep_mat(self, g: int, n: int) -> Mat:
        if self.rep is None:
            return Mat.identity(self.ring, self.rank(n))
        mats = self.rep[g]
        m = mats.get(n) if isinstance(mats, dict) else None
        if m is None:
            return Mat.identity(self.ring, self.rank(n))
        return m

    @property
    def equivariant(self) -> bool:
        return self.group is not None

    def validate(self):
        for n in range(1, self.top + 1):
            m = self.d(n)
            if (m.nrows, m.ncols) != (self.rank(n - 1), self.rank(n)):
                raise ValueError(f"differential d_{n} has shape "
                                 f"{m.nrows}x{m.ncols}, want "
                                 f"{self.rank(n - 1)}x{self.rank(n)}")
        for n in sorted(self._d):
            if not 1 <= n <= self.top:
                raise ValueError(f"differential in illegal degree {n}")
        for n in range(2, self.top + 1):
            if not (self.d(n - 1) @ self.d(n)).is_zero():
                raise ValueError(f"d_{n - 1} d_{n} != 0")
        if self.group is not None and self.rep is not None:
            g = self.group
            for a in g.elements():
                if a not in self.rep:
                    raise ValueError(f"missing representation of element {a}")
                for n in range(self.top + 1):
                    m = self.rep_mat(a, n)
                    if (m.nrows, m.ncols) != (self.rank(n), self.rank(n)):
                        raise ValueError(f"representation of {a} in degree {n} "
                                         "has the wrong shape")
            for n in range(self.top + 1):
                if self.rep_mat(0, n) != Mat.identity(self.ring, self.rank(n)):
                    raise ValueError("identity element must act as the identity")
            for a in g.elements():
                for b in g.elements():
                    ab = g.mult[a][b]
                    for n in range(self.top + 1):
                        if self.rep_mat(a, n) @ self.rep_mat(b, n) != self.rep_mat(ab, n):
                            raise ValueError(f"representation not a homomorphism at ({a},{b})")
            for a in g.elements():
                for n in range(1, self.top + 1):
                    if self.rep_mat(a, n - 1) @ self.d(n) != self.d(n) @ self.rep_mat(a, n):
                        raise ValueError(f"representation of {a} does not commute with d_{n}")

    def forget_action(self) -> "ChainComplex":
        return ChainComplex(self.ring, self.ranks, self._d, basis=self.basis,
                            validate=False)

    def to_json(self) -> dict:
        out = {"ring": self.ring.name, "ranks": list(self.ranks),
               "d": {str(n): self.d(n).to_json() for n in range(1, self.top + 1)}}
        if self.group is not None and self.rep is not None:
            out["rep"] = {str(g): {str(n): self.rep_mat(g, n).to_json()
                                   for n in range(self.top + 1)}
                          for g in self.group.elements()}
        return out

    def __repr__(self):
        tag = "EqChainComplex" if self.equivariant else "ChainComplex"
        return f"{tag}({self.ring}, ranks={self.ranks})"


def concentrated(ring, n: int, rank_: int = 1) -> ChainComplex:
    """The complex with one free module in degree n and zero elsewhere."""
    ranks = [0] * (n + 1)
    ranks[n] = rank_
    return ChainComplex(ring, ranks, {})


def disk(ring, n: int) -> ChainComplex:
    """R in degrees n and n-1 with identity differential (acyclic)."""
    if n < 1:
        raise ValueError("disk needs degree >= 1")
    ranks = [0] * (n + 1)
    ranks[n] = ranks[n - 1] = 1
    return ChainComplex(ring, ranks, {n: Mat.identity(ring, 1)})


def zero_complex(ring) -> ChainComplex:
    return ChainComplex(ring, (0,), {})


class ChainMap:
    def __init__(self, source: ChainComplex, target: ChainComplex, mats,
                 validate: bool = True):
        self.source = source
        self.target = target
        self._mats = {int(n): m for n, m in dict(mats).items()}
        self.equivariant = False
        if validate:
            self.validate()

    def mat(self, n: int) -> Mat:
        m = self._mats.get(n)
        if m is None:
            return Mat.zeros(self.source.ring, self.target.rank(n), self.source.rank(n))
        return m

    @property
    def top(self) -> int:
        return max(self.source.top, self.target.top)

    def validate(self):
        if self.source.ring != self.target.ring:
            raise ValueError("chain map needs a common ring")
        for n in range(self.top + 1):
            m = self.mat(n)
            if (m.nrows, m.ncols) != (self.target.rank(n), self.source.rank(n)):
                raise ValueError(f"chain map matrix in degree {n} has the wrong shape")
        for n in range(1, self.top + 1):
            if self.target.d(n) @ self.mat(n) != self.mat(n - 1) @ self.source.d(n):
                raise ValueError(f"does not commute with d in degree {n}")
        if (self.source.group is not None and self.target.group is not None
                and self.source.group == self.target.group):
            g = self.source.group
            self.equivariant = all(
                self.target.rep_mat(a, n) @ self.mat(n)
                == self.mat(n) @ self.source.rep_mat(a, n)
                for a in g.elements() for n in range(self.top + 1))

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"


class ChainHomotopy:
    """Degree +1 maps; no structural constraint beyond shape."""

    def __init__(self, source: ChainComplex, target: ChainComplex, mats,
                 equivariant: bool = False):
        self.source = source
        self.target = target
        self._mats = {int(n): m for n, m in dict(mats).items()}
        self.equivariant = equivariant
        for n, m in self._mats.items():
            if (m.nrows, m.ncols) != (target.rank(n + 1), source.rank(n)):
                raise ValueError(f"homotopy matrix in degree {n} has the wrong shape")

    def mat(self, n: int) -> Mat:
        m = self._mats.get(n)
        if m is None:
            return Mat.zeros(self.source.ring, self.target.rank(n + 1),
                             self.source.rank(n))
        return m


def identity_chain_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, {n: Mat.identity(c.ring, c.rank(n))
                           for n in range(c.top + 1)}, validate=False)


def compose_chain_maps(second: ChainMap, first: ChainMap) -> ChainMap:
    mats = {n: second.mat(n) @ first.mat(n)
            for n in range(max(second.top, first.top) + 1)}
    return ChainMap(first.source, second.target, mats, validate=False)


def chain_maps_equal(a: ChainMap, b: ChainMap) -> bool:
    top = max(a.top, b.top)
    return all(a.mat(n) == b.mat(n) for n in range(top + 1))


def homotopy_defect(phi: ChainHomotopy, f: ChainMap, g: ChainMap):
    """Degrees where d phi + phi d != g - f (empty means exact identity)."""
    src, tgt = phi.source, phi.target
    bad = []
    for n in range(max(src.top, tgt.top, f.top, g.top) + 1):
        lhs = tgt.d(n + 1) @ phi.mat(n) + phi.mat(n - 1) @ src.d(n)
        if lhs != g.mat(n) - f.mat(n):
            bad.append(n)
    return bad


# ---------------------------------------------------------------------------
# normalized chains of a G-simplicial set


def normalized_chains(x: GSSet, ring) -> ChainComplex:
    """Basis in degree n: the nondegenerate n-simplices in identifier order."""
    top = max(x.top_dim, 0)
    basis = tuple(x.ids_of_dim(n) for n in range(top + 1))
    index = [{s: i for i, s in enumerate(b)} for b in basis]
    ranks = [len(b) for b in basis]
    diffs = {}
    for n in range(1, top + 1):
        m = Mat.zeros(ring, ranks[n - 1], ranks[n])
        for j, s in enumerate(basis[n]):
            for i in range(n + 1):
                ref = x.face(s, i)
                if ref.degenerate:
                    continue
                r = index[n - 1][ref.base]
                m.rows[r][j] = m.rows[r][j] + (ring.one if i % 2 == 0 else -ring.one)
        diffs[n] = m
    rep = {}
    for g in x.group.elements():
        mats = {}
        for n in range(top + 1):
            m = Mat.zeros(ring, ranks[n], ranks[n])
            for j, s in enumerate(basis[n]):
                m.rows[index[n][x.act(g, s)]][j] = ring.one
            mats[n] = m
        rep[g] = mats
    return ChainComplex(ring, ranks, diffs, group=x.group, rep=rep, basis=basis)


def normalized_chain_map(f: SMap, ring, cx: ChainComplex | None = None,
                         cy: ChainComplex | None = None) -> ChainMap:
    """The induced map on normalized chains (degenerate images give zero)."""
    cx = cx or normalized_chains(f.source, ring)
    cy = cy or normalized_chains(f.target, ring)
    index_y = [{s: i for i, s in enumerate(b)} for b in cy.basis]
    mats = {}
    for n in range(max(cx.top, cy.top) + 1):
        m = Mat.zeros(ring, cy.rank(n), cx.rank(n))
        if n <= cx.top:
            for j, s in enumerate(cx.basis[n]):
                ref = f.values[s]
                if not ref.degenerate:
                    m.rows[index_y[n][ref.base]][j] = ring.one
        mats[n] = m
    return ChainMap(cx, cy, mats)


# ---------------------------------------------------------------------------
# invariants


def _is_permutation_matrix(m: Mat) -> bool:
    ring = m.ring
    if m.nrows != m.ncols:
        return False
    for row in m.rows:
        ones = [v for v in row if v != ring.zero]
        if len(ones) != 1 or ones[0] != ring.one:
            return False
    for j in range(m.ncols):
        col = [m.rows[i][j] for i in range(m.nrows)]
        if sum(1 for v in col if v != ring.zero) != 1:
            return False
    return True


def invariants(c: ChainComplex, h: Subgroup) -> tuple[ChainComplex, ChainMap]:
    """Degreewise kernel of (rho(g) - id | g in H), with comparison map.

    For permutation representations the basis is orbit sums (sorted by
    least moved index); in general an exact kernel basis is computed over
    the ring (saturated HNF basis over Z, RREF basis over fields).
    """
    if c.group is None:
        raise ValueError("invariants need an equivariant complex")
    if h.parent != c.group:
        raise ValueError("subgroup of a different group")
    ring = c.ring
    if h.is_trivial():
        plain = c.forget_action()
        incl = ChainMap(plain, c, {n: Mat.identity(ring, c.rank(n))
                                   for n in range(c.top + 1)}, validate=False)
        return plain, incl
    bases = []
    nontrivial = [g for g in h.members if g != 0]
    for n in range(c.top + 1):
        r = c.rank(n)
        if r == 0:
            bases.append([])
            continue
        reps = [c.rep_mat(g, n) for g in nontrivial]
        if all(_is_permutation_matrix(m) for m in reps):
            # orbit sums
            seen = set()
            cols = []
            for j in range(r):
                if j in seen:
                    continue
                orbit = {j}
                frontier = [j]
                while frontier:
                    nxt = []
                    for m in reps:
                        for i in frontier:
                            k = next(idx for idx in range(r)
                                     if m.rows[idx][i] != ring.zero)
                            if k not in orbit:
                                orbit.add(k)
                                nxt.append(k)
                    frontier = nxt
                seen |= orbit
                col = [ring.one if i in orbit else ring.zero for i in range(r)]
                cols.append(col)
            bases.append(cols)
            continue
        stacked_blocks = [[m - Mat.identity(ring, r)] for m in reps]
        stacked = block_matrix(ring, stacked_blocks)
        if ring.is_field:
            cols = kernel_basis_field(stacked)
        elif ring == ZZ:
            cols = kernel_z(stacked)
        else:
            raise ValueError(f"no exact kernel for ring {ring}")
        bases.append(cols)
    kmats = [mat_from_columns(ring, bases[n], c.rank(n)) for n in range(c.top + 1)]
    ranks = [len(bases[n]) for n in range(c.top + 1)]
    diffs = {}
    for n in range(1, c.top + 1):
        rhs = c.d(n) @ kmats[n]
        sol = solve_exact(kmats[n - 1], rhs)
        assert sol is not None, \
            "the differential must restrict to the invariant subcomplex"
        diffs[n] = sol
    inv = ChainComplex(ring, ranks, diffs, basis=None)
    incl = ChainMap(inv, c, {n: kmats[n] for n in range(c.top + 1)}, validate=False)
    return inv, incl


def fixed_chains_comparison(x: GSSet, h: Subgroup, ring) -> ChainMap:
    """Canonical map C(X^H) -> C(X)^H (fixed simplices are singleton orbit sums).

    The two sides realize different hypotheses and are computed by
    disjoint routes; this comparison makes them commensurable.  It is
    always injective and fails to be surjective exactly when the
    complement of the fixed subcomplex contributes orbit sums.
    """
    c = normalized_chains(x, ring)
    inv, incl = invariants(c, h)
    fx, fincl = fixed_sset(x, h)
    cfx = normalized_chains(fx, ring)
    into_c = normalized_chain_map(fincl, ring, cfx, c)
    mats = {}
    for n in range(max(cfx.top, inv.top) + 1):
        sol = solve_exact(incl.mat(n), into_c.mat(n))
        assert sol is not None, "fixed chains must land in the invariants"
        mats[n] = sol
    return ChainMap(cfx, inv, mats)


def restrict_to_invariants(cf: ChainMap, h: Subgroup) -> ChainMap:
    """The induced map between H-invariant subcomplexes of an equivariant map."""
    inv_src, incl_src = invariants(cf.source, h)
    inv_tgt, incl_tgt = invariants(cf.target, h)
    mats = {}
    for n in range(max(inv_src.top, inv_tgt.top) + 1):
        rhs = cf.mat(n) @ incl_src.mat(n)
        sol = solve_exact(incl_tgt.mat(n), rhs)
        assert sol is not None, \
            "an equivariant map must send invariants into invariants"
        mats[n] = sol
    return ChainMap(inv_src, inv_tgt, mats)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def text(self, ring_name: str = "Z") -> str:
        parts = []
        if self.free_rank == 1:
            parts.append(ring_name)
        elif self.free_rank > 1:
            parts.append(f"{ring_name}^{self.free_rank}")
        parts.extend(f"{ring_name}/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology(c: ChainComplex) -> list[HomologyGroup]:
    """Per-degree homology from Smith diagonals of consecutive differentials."""
    out = []
    diags = {n: smith_diagonal(c.d(n)) for n in range(1, c.top + 2)}
    for n in range(c.top + 1):
        # smith_diagonal lists only nonzero invariant factors, so its
        # length is the rank of the differential
        r_in = len(diags.get(n, ()))
        nxt = diags.get(n + 1, ())
        free = c.rank(n) - r_in - len(nxt)
        torsion = () if c.ring.is_field else tuple(int(v) for v in nxt if v != 1)
        out.append(HomologyGroup(n, free, torsion))
    return out


def is_acyclic(c: ChainComplex) -> bool:
    return all(h.is_zero() for h in homology(c))


def mapping_cone(f: ChainMap) -> ChainComplex:
    """cone(f)_n = target_n + source_{n-1}, d(y, x) = (dy + fx, -dx)."""
    ring = f.source.ring
    src, tgt = f.source, f.target
    top = max(tgt.top, src.top + 1)
    ranks = [tgt.rank(n) + src.rank(n - 1) for n in range(top + 1)]
    diffs = {}
    for n in range(1, top + 1):
        blocks = [[tgt.d(n), f.mat(n - 1)],
                  [Mat.zeros(ring, src.rank(n - 2), tgt.rank(n)), -src.d(n - 1)]]
        diffs[n] = block_matrix(ring, blocks)
    return ChainComplex(ring, ranks, diffs)


def is_quasi_iso(f: ChainMap) -> bool:
    """True iff the mapping cone is acyclic (iso on all homology groups)."""
    return is_acyclic(mapping_cone(f))


# ---------------------------------------------------------------------------
# the interval shuffle homotopy


class SignConventionError(AssertionError):
    """The prism identity failed; signals an internal sign bug, never user error."""


def prism_homotopy(hc: ChainMap, x: GSSet) -> ChainHomotopy:
    """Extract the chain homotopy carried by a map off the prism.

    Composes hc with the interval part of the shuffle map: the degree-1
    generator of the interval pairs a nondegenerate n-simplex with the
    middle cells (s_j x, eta_j), summed with sign (-1)^j.  The returned
    phi satisfies  d phi + phi d = (hc o end1) - (hc o end0)  exactly;
    this identity is re-verified on every call.
    """
    ring = hc.source.ring
    pr = build_prism(x)
    cprod = normalized_chains(pr.product, ring)
    if hc.source.ranks != cprod.ranks or hc.source.basis != cprod.basis:
        raise ValueError("homotopy source is not the chains of the prism of x")
    cx = normalized_chains(x, ring)
    z = hc.target
    index = [{s: i for i, s in enumerate(b)} for b in cprod.basis]
    mats = {}
    for n in range(cx.top + 1):
        m = Mat.zeros(ring, z.rank(n + 1), cx.rank(n))
        if n + 1 <= cprod.top:
            for jcol, s in enumerate(cx.basis[n]):
                col = [ring.zero] * z.rank(n + 1)
                for j in range(n + 1):
                    pid = pr.mid_id[(s, j)]
                    hcol = index[n + 1][pid]
                    sign = ring.one if j % 2 == 0 else -ring.one
                    for i in range(z.rank(n + 1)):
                        col[i] = col[i] + sign * hc.mat(n + 1).rows[i][hcol]
                for i in range(z.rank(n + 1)):
                    m.rows[i][jcol] = col[i]
        mats[n] = m
    f0 = compose_chain_maps(hc, normalized_chain_map(pr.end0, ring, cx, cprod))
    f1 = compose_chain_maps(hc, normalized_chain_map(pr.end1, ring, cx, cprod))
    phi = ChainHomotopy(cx, z, mats)
    bad = homotopy_defect(phi, f0, f1)
    if bad:
        raise SignConventionError(
            f"prism identity d*phi + phi*d = end1 - end0 fails in degrees {bad}")
    if hc.equivariant and z.group is not None and cx.group == z.group:
        phi.equivariant = all(
            z.rep_mat(a, n + 1) @ phi.mat(n) == phi.mat(n) @ cx.rep_mat(a, n)
            for a in cx.group.elements() for n in range(cx.top + 1))
    return phi
