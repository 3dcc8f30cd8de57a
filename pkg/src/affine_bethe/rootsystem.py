"""Rational realizations of finite root systems and the affine root set.

A root system lives in an ambient rational coordinate space with a rational
Gram matrix (the identity for the standard realizations).  The affine roots
a = alpha + m c are stored as (root index, level) pairs; points of the
extended space V-hat = V + R c + R d are :class:`HatVec` triples
(coordinates, c-coefficient eta, d-coefficient xi) with the pairing

    (v + eta c + xi d, v' + eta' c + xi' d) = (v, v') + eta xi' + xi eta'.

Supported types: A1..A4 (A_{n-1} inside R^n, so the line spanned by
(1,...,1) realizes a reductive center), B2, C2, G2, plus a ``root_basis``
realization with coordinates in the simple-root basis (ambient dimension =
rank; used for the 3-dimensional V-hat of the rank-one weak-equation runs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidLattice, UnsupportedType
from .linalg import mat_inverse_exact, vec_add, vec_neg, vec_scale, vec_sub
from .scalars import CQ, is_exact, parse_rational, rational_str, to_complex

Vec = tuple  # ambient coordinate vector

_SIMPLE_ROOTS = {
    "A1": ((1, -1),),
    "A2": ((1, -1, 0), (0, 1, -1)),
    "A3": ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1)),
    "A4": ((1, -1, 0, 0, 0), (0, 1, -1, 0, 0), (0, 0, 1, -1, 0), (0, 0, 0, 1, -1)),
    "B2": ((1, -1), (0, 1)),
    "C2": ((1, -1), (0, 2)),
    "G2": ((1, -1, 0), (-2, 1, 1)),
}

SUPPORTED_TYPES = tuple(sorted(_SIMPLE_ROOTS))


@dataclass(frozen=True)
class HatVec:
    """Point or weight of V-hat: coordinates + c-coefficient + d-coefficient."""

    v: tuple
    eta: object = 0
    xi: object = 0

    def __add__(self, other: "HatVec") -> "HatVec":
        return HatVec(vec_add(self.v, other.v), self.eta + other.eta, self.xi + other.xi)

    def __sub__(self, other: "HatVec") -> "HatVec":
        return HatVec(vec_sub(self.v, other.v), self.eta - other.eta, self.xi - other.xi)

    def __neg__(self) -> "HatVec":
        return HatVec(vec_neg(self.v), -self.eta, -self.xi)

    def scale(self, s) -> "HatVec":
        return HatVec(vec_scale(self.v, s), s * self.eta, s * self.xi)

    @property
    def dim(self) -> int:
        return len(self.v)

    def coords(self) -> tuple:
        """Flat coordinate tuple (v_1..v_m, eta, xi)."""
        return self.v + (self.eta, self.xi)

    def to_complex(self) -> "HatVec":
        return HatVec(tuple(to_complex(x) for x in self.v),
                      to_complex(self.eta), to_complex(self.xi))

    def is_exact(self) -> bool:
        return all(is_exact(x) for x in self.coords())

    @staticmethod
    def from_coords(coords: Sequence) -> "HatVec":
        coords = tuple(coords)
        return HatVec(coords[:-2], coords[-2], coords[-1])


@dataclass(frozen=True)
class AffineRoot:
    """Affine root alpha + m c as (index into rs.roots, integer level m)."""

    root: int
    level: int


class RootSystem:
    """Immutable rational realization of an irreducible root system.

    Shared freely across threads after construction.
    """

    def __init__(self, label: str, realization: str, simple_roots: Sequence[Vec],
                 gram: Sequence[Sequence[Q]], y_basis_spec, y_basis=None):
        self.label = label
        self.realization = realization
        self.gram = tuple(tuple(Q(x) for x in row) for row in gram)
        self.dim = len(self.gram)
        self.simple_roots = tuple(tuple(Q(x) for x in r) for r in simple_roots)
        self.rank = len(self.simple_roots)

        pos = self._generate_positive_roots()
        self.positive_roots = pos
        self.n_pos = len(pos)
        self.roots = pos + tuple(vec_neg(r) for r in pos)
        self._root_index = {r: i for i, r in enumerate(self.roots)}
        self._simple_index = tuple(self._root_index[r] for r in self.simple_roots)

        gram_s = tuple(tuple(self.pair_vec(a, b) for b in self.simple_roots)
                       for a in self.simple_roots)
        self._simple_gram_inv = mat_inverse_exact(gram_s)
        self._expansions = tuple(self._expand_in_simples(r) for r in self.roots)

        heights = [sum(e) for e in self._expansions[:self.n_pos]]
        self._theta_index = max(range(self.n_pos), key=lambda i: heights[i])
        self.rho = tuple(sum(col) / 2 for col in zip(*self.positive_roots))

        self.simple_coroots = tuple(self.coroot_vec(i) for i in self._simple_index)
        self._set_lattices(y_basis_spec, y_basis)
        self._validate()

    # -- construction helpers -------------------------------------------------

    def _generate_positive_roots(self) -> tuple:
        simples = self.simple_roots
        refl = []
        for a in simples:
            na = self.pair_vec(a, a)
            refl.append(lambda x, a=a, na=na: vec_sub(x, vec_scale(a, 2 * self.pair_vec(x, a) / na)))
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for r in frontier:
                for s in refl:
                    img = s(r)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        pos = []
        for r in seen:
            coeffs = self._expand_in_simples_raw(r)
            if all(c >= 0 for c in coeffs):
                pos.append((sum(coeffs), r, tuple(coeffs)))
        pos.sort()
        return tuple(r for _, r, _ in pos)

    def _expand_in_simples_raw(self, r: Vec) -> tuple:
        rhs = tuple(self.pair_vec(r, a) for a in self.simple_roots)
        return tuple(sum(self._simple_gram_inv[i][j] * rhs[j] for j in range(self.rank))
                     for i in range(self.rank))

    def _expand_in_simples(self, r: Vec) -> tuple:
        c = self._expand_in_simples_raw(r)
        assert vec_sub(r, tuple(sum(c[i] * self.simple_roots[i][j] for i in range(self.rank))
                                for j in range(self.dim))) == tuple(Q(0) for _ in range(self.dim))
        return c

    def _set_lattices(self, spec, basis):
        if spec == "coroot":
            yb = self.simple_coroots
        elif spec == "coweight":
            yb = self.fundamental_coweights()
        elif spec == "basis":
            if basis is None:
                raise InvalidLattice("Y='basis' requires an explicit basis")
            yb = tuple(tuple(Q(x) for x in row) for row in basis)
        else:
            raise InvalidLattice(f"unknown Y choice {spec!r}")
        self.y_choice = spec
        self.Y_basis = yb
        gy = tuple(tuple(self.pair_vec(a, b) for b in yb) for a in yb)
        try:
            gy_inv = mat_inverse_exact(gy)
        except ZeroDivisionError:
            raise InvalidLattice("Y basis is not linearly independent")
        self._y_gram = gy
        self._y_gram_inv = gy_inv
        # dual basis of Y inside span(Y)
        self.X_basis = tuple(
            tuple(sum(gy_inv[i][j] * yb[j][t] for j in range(len(yb))) for t in range(self.dim))
            for i in range(len(yb)))

    def _validate(self):
        for i, cr in enumerate(self.simple_coroots):
            if self.lattice_coords(cr) is None:
                raise InvalidLattice(f"coroot lattice not contained in Y (coroot {i})")
        for y in self.Y_basis:
            for a in self.simple_roots:
                if self.pair_vec(y, a).denominator != 1:
                    raise InvalidLattice(f"(Y,Q) not integral: ({y},{a})")
        for x in self.X_basis:
            for y in self.Y_basis:
                p = self.pair_vec(x, y)
                if p.denominator != 1:
                    raise InvalidLattice("X/Y pairing not integral")

    # -- pairings --------------------------------------------------------------

    def pair_vec(self, x: Vec, y: Vec):
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))

    def pair(self, x: HatVec, y: HatVec):
        return self.pair_vec(x.v, y.v) + x.eta * y.xi + x.xi * y.eta

    def norm2_vec(self, x: Vec):
        return self.pair_vec(x, x)

    # -- roots -----------------------------------------------------------------

    def root_vec(self, i: int) -> Vec:
        return self.roots[i]

    def root_index(self, r: Vec) -> int:
        return self._root_index[tuple(r)]

    def neg_root(self, i: int) -> int:
        return i + self.n_pos if i < self.n_pos else i - self.n_pos

    def is_positive_root(self, i: int) -> bool:
        return i < self.n_pos

    def root_norm2(self, i: int):
        return self.norm2_vec(self.roots[i])

    def coroot_vec(self, i: int) -> Vec:
        r = self.roots[i]
        return vec_scale(r, Q(2) / self.norm2_vec(r))

    @property
    def theta_index(self) -> int:
        return self._theta_index

    @property
    def theta(self) -> Vec:
        return self.roots[self._theta_index]

    @property
    def simple_indices(self) -> tuple:
        return self._simple_index

    def affine_simple_roots(self) -> tuple:
        """a_0 = -theta + c followed by a_i = alpha_i (level 0)."""
        a0 = AffineRoot(self.neg_root(self._theta_index), 1)
        return (a0,) + tuple(AffineRoot(i, 0) for i in self._simple_index)

    def affine_is_positive(self, a: AffineRoot) -> bool:
        return a.level > 0 or (a.level == 0 and self.is_positive_root(a.root))

    def affine_neg(self, a: AffineRoot) -> AffineRoot:
        return AffineRoot(self.neg_root(a.root), -a.level)

    def affine_hat(self, a: AffineRoot) -> HatVec:
        return HatVec(self.roots[a.root], Q(a.level), Q(0))

    def affine_coroot_hat(self, a: AffineRoot) -> HatVec:
        n2 = self.root_norm2(a.root)
        return HatVec(self.coroot_vec(a.root), Q(2 * a.level) / n2, Q(0))

    def pair_affine(self, a: AffineRoot, x: HatVec):
        """(a, x) = (alpha, v) + m xi."""
        return self.pair_vec(self.roots[a.root], x.v) + a.level * x.xi

    def pair_affine_coroot(self, a: AffineRoot, x: HatVec):
        """(a_vee, x) = (alpha_vee, v) + (2m/(alpha,alpha)) xi."""
        return (self.pair_vec(self.coroot_vec(a.root), x.v)
                + (Q(2 * a.level) / self.root_norm2(a.root)) * x.xi)

    def reflection_matrix(self, i: int) -> tuple:
        """Matrix of s_alpha on ambient coordinates, alpha = roots[i]."""
        a = self.roots[i]
        av = self.coroot_vec(i)
        g = self.gram
        ga = tuple(sum(g[r][c] * av[c] for c in range(self.dim)) for r in range(self.dim))
        return tuple(
            tuple((Q(1) if r == c else Q(0)) - a[r] * ga[c] for c in range(self.dim))
            for r in range(self.dim))

    # -- lattices ----------------------------------------------------------------

    def lattice_coords(self, y: Vec):
        """Integer coordinates of y in the Y basis, or None if y not in Y."""
        rhs = tuple(self.pair_vec(b, y) for b in self.Y_basis)
        n = tuple(sum(self._y_gram_inv[i][j] * rhs[j] for j in range(len(rhs)))
                  for i in range(len(rhs)))
        if any(c.denominator != 1 for c in n):
            return None
        recon = tuple(sum(n[i] * self.Y_basis[i][t] for i in range(len(n)))
                      for t in range(self.dim))
        if recon != tuple(y):
            return None
        return tuple(int(c) for c in n)

    def y_vector(self, n: Sequence[int]) -> Vec:
        return tuple(sum(Q(n[i]) * self.Y_basis[i][t] for i in range(len(n)))
                     for t in range(self.dim))

    def fundamental_coweights(self) -> tuple:
        """Vectors w_i in span(R) with (w_i, alpha_j) = delta_ij."""
        inv = self._simple_gram_inv
        return tuple(
            tuple(sum(inv[i][k] * self.simple_roots[k][t] for k in range(self.rank))
                  for t in range(self.dim))
            for i in range(self.rank))

    def fundamental_weights(self) -> tuple:
        """Vectors w_i in span(R) with (w_i, alpha_j_vee) = delta_ij."""
        b = tuple(tuple(self.pair_vec(self.simple_roots[k], self.simple_coroots[j])
                        for j in range(self.rank)) for k in range(self.rank))
        binv = mat_inverse_exact(b)
        return tuple(
            tuple(sum(binv[k][i] * self.simple_roots[k][t] for k in range(self.rank))
                  for t in range(self.dim))
            for i in range(self.rank))

    # -- serialization -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        def vec(v):
            return [rational_str(x) for x in v]

        return {
            "type_rank": self.label,
            "realization": self.realization,
            "ambient_dim": self.dim,
            "gram": [vec(row) for row in self.gram],
            "simple_roots": [vec(r) for r in self.simple_roots],
            "positive_roots": [vec(r) for r in self.positive_roots],
            "highest_root": vec(self.theta),
            "rho": vec(self.rho),
            "coroot_lattice_basis": [vec(r) for r in self.simple_coroots],
            "Y_basis": [vec(r) for r in self.Y_basis],
            "X_basis": [vec(r) for r in self.X_basis],
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)

    def __repr__(self):
        return f"RootSystem({self.label}, {self.realization}, Y={self.y_choice})"


def build_root_system(type_rank: str, y_choice: str = "coroot",
                      realization: str = "ambient", y_basis=None) -> RootSystem:
    """Construct a supported root system with a chosen translation lattice Y.

    ``y_choice`` is one of ``coroot`` (Q-vee), ``coweight`` (P-vee) or
    ``basis`` with ``y_basis`` rows of rationals.  Raises
    :class:`UnsupportedType` / :class:`InvalidLattice` on bad input.
    """
    label = type_rank.strip().upper().replace("_", "")
    if label not in _SIMPLE_ROOTS:
        raise UnsupportedType(f"{type_rank!r}; supported: {', '.join(SUPPORTED_TYPES)}")
    simples = _SIMPLE_ROOTS[label]
    dim = len(simples[0])
    if realization == "ambient":
        gram = tuple(tuple(Q(1) if i == j else Q(0) for j in range(dim)) for i in range(dim))
        return RootSystem(label, realization, simples, gram, y_choice, y_basis)
    if realization == "root_basis":
        # coordinates in the simple-root basis; Gram = matrix of (alpha_i, alpha_j)
        ambient = RootSystem(label, "ambient",
                             simples,
                             tuple(tuple(Q(1) if i == j else Q(0) for j in range(dim))
                                   for i in range(dim)),
                             "coroot")
        rank = ambient.rank
        gram = tuple(tuple(ambient.pair_vec(ambient.simple_roots[i], ambient.simple_roots[j])
                           for j in range(rank)) for i in range(rank))
        unit = tuple(tuple(Q(1) if i == j else Q(0) for j in range(rank)) for i in range(rank))
        return RootSystem(label, realization, unit, gram, y_choice, y_basis)
    raise UnsupportedType(f"unknown realization {realization!r}")


# -- multiplicity functions ---------------------------------------------------


def _level_shift_gcds(rs: RootSystem) -> dict:
    """gcd of level shifts (alpha, y) over the Y basis, per root index."""
    out = {}
    for i in range(len(rs.roots)):
        g = 0
        for y in rs.Y_basis:
            p = rs.pair_vec(rs.roots[i], y)
            assert p.denominator == 1
            g = gcd(g, abs(int(p)))
        out[i] = g if g else 1
    return out


def multiplicity_orbits(rs: RootSystem):
    """Partition of level classes of the affine roots into group orbits.

    Returns ``(period, orbits)`` where ``orbits`` is a tuple of orbits, each
    a sorted tuple of (root index, level mod period) classes.  The class of
    a = alpha + m c is (index(alpha), m mod period); translations shift the
    level periodically, which certifies completeness of the finite search.
    """
    gcds = _level_shift_gcds(rs)
    period = 1
    for g in gcds.values():
        period = period * g // gcd(period, g)

    theta_v = rs.coroot_vec(rs.theta_index)
    s_theta = rs.reflection_matrix(rs.theta_index)

    def act_simple(i_gen: int, cls):
        r, m = cls
        alpha = rs.roots[r]
        if i_gen == 0:
            # s_0 = s_theta t_{-theta_vee}: alpha + m c -> s_theta(alpha) + (m + (alpha, theta_vee)) c
            img = tuple(sum(s_theta[a][b] * alpha[b] for b in range(rs.dim)) for a in range(rs.dim))
            shift = int(rs.pair_vec(alpha, theta_v))
            return (rs.root_index(img), (m + shift) % period)
        mat = rs.reflection_matrix(rs.simple_indices[i_gen - 1])
        img = tuple(sum(mat[a][b] * alpha[b] for b in range(rs.dim)) for a in range(rs.dim))
        return (rs.root_index(img), m)

    def act_translation(j: int, cls):
        r, m = cls
        shift = int(rs.pair_vec(rs.roots[r], rs.Y_basis[j]))
        return (r, (m - shift) % period)

    classes = [(r, m) for r in range(len(rs.roots)) for m in range(period)]
    orbit_of = {}
    orbits = []
    for start in classes:
        if start in orbit_of:
            continue
        oid = len(orbits)
        frontier = [start]
        orbit_of[start] = oid
        members = [start]
        while frontier:
            nxt = []
            for cls in frontier:
                images = [act_simple(i, cls) for i in range(rs.rank + 1)]
                images += [act_translation(j, cls) for j in range(len(rs.Y_basis))]
                for img in images:
                    if img not in orbit_of:
                        orbit_of[img] = oid
                        members.append(img)
                        nxt.append(img)
            frontier = nxt
        orbits.append(tuple(sorted(members)))
    return period, tuple(orbits)


class MultiplicityFunction:
    """Group-invariant coupling constants on the affine roots."""

    def __init__(self, rs: RootSystem, values: Sequence):
        self.rs = rs
        self.period, self.orbits = multiplicity_orbits(rs)
        if len(values) != len(self.orbits):
            raise ValueError(f"need {len(self.orbits)} orbit values, got {len(values)}")
        self.values = tuple(values)
        self._orbit_of = {}
        for oid, orb in enumerate(self.orbits):
            for cls in orb:
                self._orbit_of[cls] = oid

    @classmethod
    def constant(cls, rs: RootSystem, value) -> "MultiplicityFunction":
        period, orbits = multiplicity_orbits(rs)
        return cls(rs, tuple(value for _ in orbits))

    def orbit_id(self, a: AffineRoot) -> int:
        return self._orbit_of[(a.root, a.level % self.period)]

    def __call__(self, a: AffineRoot):
        return self.values[self.orbit_id(a)]

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def max_abs(self) -> float:
        return max((abs(to_complex(v)) for v in self.values), default=0.0)

    def is_level_independent(self) -> bool:
        """True when every root's level classes fall into a single orbit."""
        for r in range(len(self.rs.roots)):
            ids = {self._orbit_of[(r, m)] for m in range(self.period)}
            if len(ids) > 1:
                return False
        return True

    def to_complex(self) -> "MultiplicityFunction":
        out = MultiplicityFunction.__new__(MultiplicityFunction)
        out.rs = self.rs
        out.period = self.period
        out.orbits = self.orbits
        out.values = tuple(to_complex(v) for v in self.values)
        out._orbit_of = self._orbit_of
        return out
