"""PG(n,q) and AG(n,q) with dense indexing: points, lines, subspaces, spreads.

Construction is deterministic: points are coordinate vectors normalized so
the first nonzero coordinate is 1, ordered lexicographically; lines are
ordered lexicographically by their sorted point-index sets.  Incidence is
kept both as numpy index arrays (for vectorized counting) and as Python
integer bitsets (for popcount-style set algebra).  Spaces are immutable
after construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, UnsupportedError
from .exactmath import as_prime_power, gaussian_binomial, theta
from .galois import build_field, quadratic_extension_structure
from .linalg import mat_vec, random_invertible, rref

# At most this many point-line incidence bits are materialized per space.
# PG(7,2) needs 255 * 10795, far below the cap.
DEFAULT_BUDGET = 1 << 26


def mask_indices(mask: int) -> list[int]:
    """Indices of the set bits of a Python-int bitset, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_to_bool(mask: int, nbits: int) -> np.ndarray:
    data = mask.to_bytes((nbits + 7) // 8 or 1, "little")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    return bits[:nbits].astype(bool)


def bool_to_mask(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def popcount(mask: int) -> int:
    return mask.bit_count()


def _normalized_vectors(length: int, q: int) -> list[tuple[int, ...]]:
    """All vectors in GF(q)^length with first nonzero coordinate 1, lex sorted."""
    out = []
    for pivot in range(length):
        for tail in itertools.product(range(q), repeat=length - pivot - 1):
            out.append((0,) * pivot + (1,) + tail)
    out.sort()
    return out


def _rref_bases(ncols: int, nrows: int, q: int):
    """Yield every full-rank RREF matrix (nrows x ncols) over GF(q).

    Canonical order: pivot-column sets ascending lexicographically, then the
    free entries as an odometer.  The count is the Gaussian binomial
    [ncols nrows]_q.
    """
    for pivots in itertools.combinations(range(ncols), nrows):
        pivot_set = set(pivots)
        free = [
            (i, c)
            for i in range(nrows)
            for c in range(pivots[i] + 1, ncols)
            if c not in pivot_set
        ]
        base = [[0] * ncols for _ in range(nrows)]
        for i, pc in enumerate(pivots):
            base[i][pc] = 1
        if not free:
            yield tuple(tuple(r) for r in base)
            continue
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [row[:] for row in base]
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Subspace:
    """A projective subspace, identified by its unique RREF basis."""

    dim: int
    basis: tuple  # (dim+1) RREF rows over GF(q)
    points: tuple  # sorted point indices
    mask: int  # point bitset

    def has_point(self, p: int) -> bool:
        return bool(self.mask >> p & 1)


@dataclass(frozen=True)
class LineSpread:
    """A set of lines partitioning the point set of its host space."""

    space: object
    lines: tuple  # sorted line indices (host indexing)
    mask: int  # line bitset


class ProjectiveSpace:
    """PG(n, q), fully indexed."""

    kind = "pg"

    def __init__(self, n: int, q, budget: int = DEFAULT_BUDGET):
        if n < 2:
            raise ValueError(f"n = {n} must be >= 2")
        pp = as_prime_power(q)
        self.n = n
        self.q = pp.q
        self.budget = budget
        num_points = theta(n + 1, self.q)
        num_lines = gaussian_binomial(n + 1, 2, self.q)
        if num_points * num_lines > budget:
            raise BudgetError(
                f"PG({n},{self.q}) needs {num_points} points x {num_lines} lines"
                f" = {num_points * num_lines} incidences, over the budget of {budget}",
                required=num_points * num_lines,
                budget=budget,
            )
        self.field = build_field(self.q)
        self.num_points = num_points
        self.num_lines = num_lines

        vecs = _normalized_vectors(n + 1, self.q)
        assert len(vecs) == num_points
        self._vec_list = vecs
        self.point_vectors = np.array(vecs, dtype=np.uint8)
        self._powers_list = [self.q ** (n - i) for i in range(n + 1)]
        self._powers = np.array(self._powers_list, dtype=np.int64)
        key_to_point = np.full(self.q ** (n + 1), -1, dtype=np.int32)
        for idx, v in enumerate(vecs):
            key_to_point[sum(a * p for a, p in zip(v, self._powers_list))] = idx
        self._key_to_point = key_to_point

        self._build_lines()
        self._build_masks()

        self._combo_cache: dict[int, np.ndarray] = {}
        self._through_pts_cache: dict = {}
        self._through_lines_cache: dict = {}
        self._lines_in_cache: dict = {}
        self._pair_idx_cache: dict = {}

    # ------------------------------------------------------------------
    def _build_lines(self):
        P, q = self.num_points, self.q
        f = self.field
        add, mul, inv = f._add, f._mul, f._inv
        vecs = self._vec_list
        powers = self._powers_list
        key_to_point = self._key_to_point
        line_of = np.full((P, P), -1, dtype=np.int32)
        lines_pts = []
        for i in range(P):
            vi = vecs[i]
            for j in range(i + 1, P):
                if line_of[i, j] >= 0:
                    continue
                vj = vecs[j]
                pts = [i, j]
                for lam in range(1, q):
                    mull = mul[lam]
                    w = [add[a][mull[b]] for a, b in zip(vi, vj)]
                    for c in w:
                        if c:
                            break
                    if c != 1:
                        muls = mul[inv[c]]
                        w = [muls[a] for a in w]
                    pts.append(int(key_to_point[sum(a * p for a, p in zip(w, powers))]))
                pts.sort()
                idx = len(lines_pts)
                lines_pts.append(tuple(pts))
                for a, b in itertools.combinations(pts, 2):
                    line_of[a, b] = idx
                    line_of[b, a] = idx
        assert len(lines_pts) == self.num_lines

        order = sorted(range(len(lines_pts)), key=lines_pts.__getitem__)
        remap = np.empty(len(lines_pts) + 1, dtype=np.int32)
        remap[-1] = -1
        for new, old in enumerate(order):
            remap[old] = new
        self.lines = np.array([lines_pts[old] for old in order], dtype=np.int32)
        self.line_of = remap[line_of]

    def _build_masks(self):
        point_line_mask = [0] * self.num_points
        line_point_mask = []
        for idx, pts in enumerate(self.lines):
            lm = 0
            bit = 1 << idx
            for p in pts:
                p = int(p)
                point_line_mask[p] |= bit
                lm |= 1 << p
            line_point_mask.append(lm)
        self.point_line_mask = point_line_mask
        self.line_point_mask = line_point_mask
        self.full_line_mask = (1 << self.num_lines) - 1
        self.full_point_mask = (1 << self.num_points) - 1

    # ------------------------------------------------------------------
    def describe(self) -> str:
        return f"PG({self.n},{self.q})"

    def point_index(self, vec) -> int:
        """Index of the projective point spanned by a nonzero vector."""
        f = self.field
        c = 0
        for c in vec:
            if c:
                break
        if c == 0:
            raise ValueError("zero vector is not a projective point")
        if c != 1:
            muls = f._mul[f._inv[c]]
            vec = [muls[a] for a in vec]
        idx = int(self._key_to_point[sum(a * p for a, p in zip(vec, self._powers_list))])
        assert idx >= 0
        return idx

    def line_points_tuple(self, line_id: int) -> tuple[int, ...]:
        return tuple(int(p) for p in self.lines[line_id])

    def line_through(self, p1: int, p2: int) -> int:
        lid = int(self.line_of[p1, p2])
        if lid < 0:
            raise ValueError(f"points {p1}, {p2} do not span a line")
        return lid

    def line_subspace(self, line_id: int) -> Subspace:
        pts = self.line_points_tuple(line_id)
        rows = [self._vec_list[pts[0]], self._vec_list[pts[1]]]
        rr, _ = rref(rows, self.field)
        return Subspace(1, rr, pts, self.line_point_mask[line_id])

    def lines_in_subspace_mask(self, sub: Subspace) -> int:
        """Bitset of the lines entirely contained in `sub`."""
        if sub.dim < 1:
            return 0
        cached = self._lines_in_cache.get(sub.basis)
        if cached is not None:
            return cached
        lof = self.line_of
        seen = set()
        for a, b in itertools.combinations(sub.points, 2):
            seen.add(int(lof[a, b]))
        mask = 0
        for lid in seen:
            mask |= 1 << lid
        self._lines_in_cache[sub.basis] = mask
        return mask

    def lines_meeting_subspace_mask(self, sub: Subspace) -> int:
        mask = 0
        for p in sub.points:
            mask |= self.point_line_mask[p]
        return mask

    def lines_meeting_line_mask(self, line_id: int) -> int:
        mask = 0
        for p in self.lines[line_id]:
            mask |= self.point_line_mask[int(p)]
        return mask

    # ------------------------------------------------------------------
    def _proj_combos(self, r: int) -> np.ndarray:
        combos = self._combo_cache.get(r)
        if combos is None:
            combos = np.array(_normalized_vectors(r, self.q), dtype=np.uint8)
            self._combo_cache[r] = combos
        return combos

    def _normalize_batch(self, vecs: np.ndarray) -> np.ndarray:
        f = self.field
        first = (vecs != 0).argmax(axis=-1)
        lead = np.take_along_axis(vecs, first[..., None], axis=-1)[..., 0]
        scale = f.inv_table[lead]
        return f.mul_table[vecs, scale[..., None]]

    def _points_of_bases(self, combos: np.ndarray, bases: np.ndarray) -> np.ndarray:
        """Point indices of every projective combination of every basis stack.

        combos: [C, r] normalized coefficient vectors; bases: [S, r, n+1].
        Returns [S, C] int32.  Combos must be nonzero and each basis stack
        independent, so no product normalizes to the zero vector.
        """
        f = self.field
        addt, mult = f.add_table, f.mul_table
        r = combos.shape[1]
        out = np.zeros((bases.shape[0], combos.shape[0], bases.shape[2]), dtype=np.uint8)
        for k in range(r):
            term = mult[combos[None, :, k, None], bases[:, None, k, :]]
            out = addt[out, term]
        out = self._normalize_batch(out)
        keys = out.astype(np.int64) @ self._powers
        pts = self._key_to_point[keys]
        assert (pts >= 0).all(), "a combination normalized to a non-point"
        return pts

    def _subspace_from_rref(self, rr) -> Subspace:
        r = len(rr)
        if r == 0:
            raise ValueError("empty basis")
        bases = np.array([rr], dtype=np.uint8)
        pts = np.sort(self._points_of_bases(self._proj_combos(r), bases)[0])
        mask = 0
        for p in pts:
            mask |= 1 << int(p)
        return Subspace(r - 1, rr, tuple(int(x) for x in pts), mask)

    def subspace_from_basis(self, rows) -> Subspace:
        rr, _ = rref(rows, self.field)
        return self._subspace_from_rref(rr)

    def _through_point_bases(self, p: int, d: int) -> list:
        """Basis stacks [v_p; lifted quotient rows] for the d-subspaces through p.

        Subspaces through p correspond to (d)-dim subspaces of the quotient
        by p, realized concretely on the coordinates away from p's pivot.
        """
        vp = self._vec_list[p]
        j0 = next(i for i, c in enumerate(vp) if c)
        out = []
        for qb in _rref_bases(self.n, d, self.q):
            out.append((vp,) + tuple(row[:j0] + (0,) + row[j0:] for row in qb))
        return out

    def through_point_point_matrix(self, p: int, d: int) -> np.ndarray:
        """[num_subspaces x theta(d+1,q)] point indices of d-subspaces through p."""
        key = (p, d)
        cached = self._through_pts_cache.get(key)
        if cached is None:
            bases = np.array(self._through_point_bases(p, d), dtype=np.uint8)
            cached = self._points_of_bases(self._proj_combos(d + 1), bases)
            self._through_pts_cache[key] = cached
        return cached

    def through_point_line_matrix(self, p: int, d: int = 3) -> np.ndarray:
        """[num_subspaces x lines-per-subspace] line indices of d-subspaces through p."""
        key = (p, d)
        cached = self._through_lines_cache.get(key)
        if cached is not None:
            return cached
        pts = self.through_point_point_matrix(p, d)
        npts = pts.shape[1]
        pair_idx = self._pair_idx_cache.get(npts)
        if pair_idx is None:
            pair_idx = np.triu_indices(npts, 1)
            self._pair_idx_cache[npts] = pair_idx
        iu, ju = pair_idx
        pair_lines = self.line_of[pts[:, iu], pts[:, ju]]
        pair_lines.sort(axis=1)
        step = (self.q + 1) * self.q // 2
        lines = pair_lines[:, ::step]
        # every line inside a subspace is produced by exactly `step` point pairs
        assert lines.shape[1] == gaussian_binomial(d + 1, 2, self.q)
        assert (pair_lines[:, step - 1 :: step] == lines).all()
        self._through_lines_cache[key] = lines
        return lines

    def __repr__(self):
        return f"<{self.describe()}: {self.num_points} points, {self.num_lines} lines>"


class AffineSpace:
    """AG(n, q) as the view of a parent PG(n, q) away from one hyperplane.

    The hyperplane at infinity is {first coordinate = 0}.  Affine points and
    lines carry their own dense indices; maps to and from the parent indices
    are kept for everything that needs the projective closure.
    """

    kind = "ag"

    def __init__(self, parent: ProjectiveSpace):
        self.parent = parent
        self.n = parent.n
        self.q = parent.q
        self.field = parent.field

        first_coord = parent.point_vectors[:, 0]
        infinity = np.nonzero(first_coord == 0)[0].astype(np.int32)
        affine = np.nonzero(first_coord != 0)[0].astype(np.int32)
        # lexicographic point order puts the infinity hyperplane first
        assert len(infinity) == theta(self.n, self.q)
        assert infinity.max() == len(infinity) - 1
        self.infinity_points = infinity
        self.affine_points_parent = affine
        self.num_points = len(affine)
        p2a = np.full(parent.num_points, -1, dtype=np.int32)
        p2a[affine] = np.arange(self.num_points, dtype=np.int32)
        self.parent_to_affine_point = p2a

        rows = [tuple(r) for r in np.eye(self.n + 1, dtype=np.uint8)[1:].tolist()]
        self.infinity_hyperplane = parent.subspace_from_basis(rows)
        assert self.infinity_hyperplane.points == tuple(int(i) for i in infinity)

        line_first = parent.point_vectors[parent.lines, 0]
        n_inf = (line_first == 0).sum(axis=1)
        assert set(np.unique(n_inf).tolist()) <= {1, self.q + 1}
        aff_sel = n_inf == 1
        self.affine_lines_parent = np.nonzero(aff_sel)[0].astype(np.int32)
        self.num_lines = len(self.affine_lines_parent)
        assert self.num_lines == self.q ** (self.n - 1) * theta(self.n, self.q)
        l2a = np.full(parent.num_lines, -1, dtype=np.int32)
        l2a[self.affine_lines_parent] = np.arange(self.num_lines, dtype=np.int32)
        self.parent_to_affine_line = l2a

        pts = parent.lines[self.affine_lines_parent]
        at_inf = parent.point_vectors[pts, 0] == 0
        dir_pos = at_inf.argmax(axis=1)
        self.direction_parent = pts[np.arange(self.num_lines), dir_pos].astype(np.int32)

        point_line_mask = [0] * self.num_points
        line_point_mask = []
        for aid, plid in enumerate(self.affine_lines_parent):
            bit = 1 << aid
            m = 0
            for ppt in parent.lines[plid]:
                apt = int(p2a[int(ppt)])
                if apt >= 0:
                    m |= 1 << apt
                    point_line_mask[apt] |= bit
            line_point_mask.append(m)
        self.point_line_mask = point_line_mask
        self.line_point_mask = line_point_mask
        self.full_line_mask = (1 << self.num_lines) - 1
        self.full_point_mask = (1 << self.num_points) - 1

        groups: dict[int, list[int]] = {}
        for aid, dpt in enumerate(self.direction_parent):
            groups.setdefault(int(dpt), []).append(aid)
        self._parallel_lines = {d: tuple(ids) for d, ids in groups.items()}
        self._parallel_masks = {}
        for d, ids in self._parallel_lines.items():
            m = 0
            for aid in ids:
                m |= 1 << aid
            self._parallel_masks[d] = m

    def describe(self) -> str:
        return f"AG({self.n},{self.q})"

    def affine_point_parent(self, apt: int) -> int:
        return int(self.affine_points_parent[apt])

    def affine_line_parent(self, aid: int) -> int:
        return int(self.affine_lines_parent[aid])

    def parent_line_mask(self, mask: int) -> int:
        """Translate an affine line bitset to the parent's line indexing."""
        out = 0
        for aid in mask_indices(mask):
            out |= 1 << int(self.affine_lines_parent[aid])
        return out

    def affine_line_mask_from_parent(self, parent_mask: int) -> int:
        out = 0
        for plid in mask_indices(parent_mask):
            aid = int(self.parent_to_affine_line[plid])
            if aid >= 0:
                out |= 1 << aid
        return out

    def directions(self) -> list[int]:
        """Parent indices of the points at infinity, ascending."""
        return [int(p) for p in self.infinity_points]

    def __repr__(self):
        return f"<{self.describe()}: {self.num_points} points, {self.num_lines} lines>"


# ----------------------------------------------------------------------
# construction helpers

_SPACE_CACHE: dict = {}


def build_pg(n: int, q, budget: int = DEFAULT_BUDGET) -> ProjectiveSpace:
    """Build (and memoize) PG(n, q)."""
    qq = as_prime_power(q).q
    counts = space_counts("pg", n, qq)
    if counts["points"] * counts["lines"] > budget:
        raise BudgetError(
            f"PG({n},{qq}) needs {counts['points']} points x {counts['lines']} lines,"
            f" over the budget of {budget}",
            required=counts["points"] * counts["lines"],
            budget=budget,
        )
    key = ("pg", n, qq)
    if key not in _SPACE_CACHE:
        _SPACE_CACHE[key] = ProjectiveSpace(n, qq, budget=budget)
    return _SPACE_CACHE[key]


def build_ag(n: int, q, budget: int = DEFAULT_BUDGET) -> AffineSpace:
    """Build (and memoize) AG(n, q) on top of its projective closure."""
    qq = as_prime_power(q).q
    counts = space_counts("ag", n, qq)
    parent_counts = space_counts("pg", n, qq)
    if parent_counts["points"] * parent_counts["lines"] > budget:
        raise BudgetError(
            f"AG({n},{qq}) has {counts['points']} points and {counts['lines']} lines;"
            f" its closure PG({n},{qq}) needs {parent_counts['points']} x "
            f"{parent_counts['lines']} incidences, over the budget of {budget}",
            required=parent_counts["points"] * parent_counts["lines"],
            budget=budget,
        )
    key = ("ag", n, qq)
    if key not in _SPACE_CACHE:
        _SPACE_CACHE[key] = AffineSpace(build_pg(n, qq, budget=budget))
    return _SPACE_CACHE[key]


def space_counts(kind: str, n: int, q) -> dict:
    """Point/line counts computed arithmetically, without materializing."""
    qq = as_prime_power(q).q
    if kind == "pg":
        return {
            "points": theta(n + 1, qq),
            "lines": gaussian_binomial(n + 1, 2, qq),
            "lines_per_point": theta(n, qq),
            "points_per_line": qq + 1,
        }
    if kind == "ag":
        return {
            "points": qq**n,
            "lines": qq ** (n - 1) * theta(n, qq),
            "lines_per_point": theta(n, qq),
            "points_per_line": qq,
        }
    raise ValueError(f"unknown space kind {kind!r}")


# ----------------------------------------------------------------------
# subspace enumeration and lattice operations


def enumerate_subspaces(space: ProjectiveSpace, d: int) -> list[Subspace]:
    """All d-dimensional subspaces of PG(n,q) in canonical RREF order."""
    n, q = space.n, space.q
    if not 0 <= d <= n:
        raise ValueError(f"dimension d = {d} out of range for PG({n},{q})")
    count = gaussian_binomial(n + 1, d + 1, q)
    if count * theta(d + 1, q) > space.budget:
        raise BudgetError(
            f"enumerating {count} subspaces with {theta(d + 1, q)} points each "
            f"exceeds the budget of {space.budget}",
            required=count * theta(d + 1, q),
            budget=space.budget,
        )
    bases = list(_rref_bases(n + 1, d + 1, q))
    arr = np.array(bases, dtype=np.uint8)
    pts = space._points_of_bases(space._proj_combos(d + 1), arr)
    pts.sort(axis=1)
    out = []
    for basis, prow in zip(bases, pts):
        mask = 0
        for p in prow:
            mask |= 1 << int(p)
        out.append(Subspace(d, basis, tuple(int(x) for x in prow), mask))
    assert len(out) == count
    return out


def subspaces_through_point(space: ProjectiveSpace, p: int, d: int) -> list[Subspace]:
    """All d-subspaces through point p, via the quotient space PG(n-1,q)."""
    n, q = space.n, space.q
    if not 1 <= d <= n:
        raise ValueError(f"dimension d = {d} out of range")
    if not 0 <= p < space.num_points:
        raise ValueError(f"point index {p} out of range")
    out = []
    for rows in space._through_point_bases(p, d):
        rr, _ = rref(rows, space.field)
        out.append(space._subspace_from_rref(rr))
    assert len(out) == gaussian_binomial(n, d, q)
    return out


def span(space: ProjectiveSpace, *objects) -> Subspace:
    """Smallest subspace containing all given points and subspaces."""
    rows = []
    for obj in objects:
        if isinstance(obj, Subspace):
            rows.extend(obj.basis)
        elif isinstance(obj, (int, np.integer)):
            rows.append(space._vec_list[int(obj)])
        else:
            raise TypeError(f"cannot span {type(obj).__name__}")
    rr, _ = rref(rows, space.field)
    if not rr:
        raise ValueError("span of no points")
    return space._subspace_from_rref(rr)


def meet(space: ProjectiveSpace, a: Subspace, b: Subspace):
    """Intersection of two subspaces; None when they are disjoint."""
    common = a.mask & b.mask
    if common == 0:
        return None
    rows = [space._vec_list[p] for p in mask_indices(common)]
    rr, _ = rref(rows, space.field)
    return space._subspace_from_rref(rr)


# ----------------------------------------------------------------------
# spreads


def make_spread(space, line_ids, validate: bool = True) -> LineSpread:
    ids = tuple(sorted(int(i) for i in line_ids))
    mask = 0
    for lid in ids:
        mask |= 1 << lid
    spread = LineSpread(space, ids, mask)
    if validate and not spread_is_partition(spread):
        raise ValueError("line set is not a spread: not a partition of the points")
    return spread


def spread_is_partition(spread: LineSpread) -> bool:
    space = spread.space
    cover = 0
    total = 0
    for lid in spread.lines:
        m = space.line_point_mask[lid]
        cover |= m
        total += popcount(m)
    return cover == space.full_point_mask and total == popcount(space.full_point_mask)


def regular_spread_pg3(space: ProjectiveSpace) -> LineSpread:
    """The regular spread of PG(3,q) induced by the GF(q^2)-structure on GF(q)^4."""
    if space.kind != "pg" or space.n != 3:
        raise UnsupportedError("the regular spread construction requires PG(3,q)")
    ext = quadratic_extension_structure(space.q)
    e = ext.ext
    reps = [(0, 1)] + [(1, z) for z in e.elements()]
    ids = []
    for u, v in reps:
        pts = set()
        for lam in range(1, e.q):
            a1, a2 = ext.pair_of(e.mul(lam, u))
            b1, b2 = ext.pair_of(e.mul(lam, v))
            pts.add(space.point_index((a1, a2, b1, b2)))
        pts = sorted(pts)
        assert len(pts) == space.q + 1
        lid = space.line_through(pts[0], pts[1])
        assert space.line_points_tuple(lid) == tuple(pts)
        ids.append(lid)
    assert len(set(ids)) == space.q**2 + 1
    return make_spread(space, ids)


def spread_images(space: ProjectiveSpace, spread: LineSpread, count: int, seed: int):
    """Images of a spread under `count` seeded random collineations."""
    if spread.space is not space:
        raise ValueError("spread does not belong to this space")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = random_invertible(space.field, space.n + 1, rng)
        ids = []
        for lid in spread.lines:
            pts = space.lines[lid]
            a = space.point_index(mat_vec(m, space._vec_list[int(pts[0])], space.field))
            b = space.point_index(mat_vec(m, space._vec_list[int(pts[1])], space.field))
            ids.append(space.line_through(a, b))
        out.append(make_spread(space, ids))
    return out


def all_spreads_pg32(space: ProjectiveSpace) -> list[LineSpread]:
    """Every line spread of PG(3,2), by exhaustive backtracking over partitions."""
    if space.kind != "pg" or (space.n, space.q) != (3, 2):
        raise UnsupportedError("exhaustive spread enumeration is implemented for PG(3,2) only")
    full = space.full_point_mask
    lines_by_point = [mask_indices(space.point_line_mask[p]) for p in range(space.num_points)]
    lpm = space.line_point_mask
    found = []
    chosen = []

    def rec(covered):
        if covered == full:
            found.append(tuple(sorted(chosen)))
            return
        rest = ~covered & full
        p = (rest & -rest).bit_length() - 1
        for lid in lines_by_point[p]:
            m = lpm[lid]
            if m & covered:
                continue
            chosen.append(lid)
            rec(covered | m)
            chosen.pop()

    rec(0)
    found.sort()
    return [make_spread(space, ids, validate=False) for ids in found]


def parallel_class(affine: AffineSpace, direction_point: int) -> LineSpread:
    """The spread of AG(n,q) formed by all lines with the given infinity point."""
    ids = affine._parallel_lines.get(int(direction_point))
    if ids is None:
        raise ValueError(
            f"point {direction_point} is not on the hyperplane at infinity"
        )
    spread = LineSpread(affine, ids, affine._parallel_masks[int(direction_point)])
    assert len(ids) == affine.q ** (affine.n - 1)
    return spread
