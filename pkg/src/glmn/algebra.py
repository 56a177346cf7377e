"""The restricted Lie superalgebra gl(m|n) over F_{p^k}.

Basis elements are the matrix units E(i,j) with 1-based indices; the
parity of E(i,j) is odd exactly when i and j lie on opposite sides of m.
The super bracket, supertrace, p-mapping, root system with heights and
coroots, rho, reflections, character classification and the weight
variety X all live here.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import ffield
from .errors import (BadDims, InvalidSupport, OddInput,
                     OddReflectionOnWeight)
from .ffield import FieldElement
from .linalg import Matrix, matmul


class SuperAlgebra:
    """gl(m|n) with structure tables over a fixed finite field."""

    def __init__(self, m, n, field):
        if m < 1 or n < 1:
            raise BadDims("block sizes must be at least 1")
        if field.p < 5:
            raise BadDims("field characteristic must be at least 5")
        self.m = m
        self.n = n
        self.d = m + n
        self.field = field
        self.units = [(i, j) for i in range(1, self.d + 1)
                      for j in range(1, self.d + 1)]
        self.even_units = [u for u in self.units if self.parity(*u) == 0]
        self.odd_units = [u for u in self.units if self.parity(*u) == 1]
        self.diag_units = [(i, i) for i in range(1, self.d + 1)]
        self.bracket_table = {
            (u, v): tuple(self.bracket_units(*u, *v))
            for u in self.units for v in self.units
        }
        # p-th matrix power of each even unit: E(i,i) is idempotent,
        # off-diagonal even units square to zero
        self.pmap_table = {
            (i, j): ((i, j) if i == j else None) for (i, j) in self.even_units
        }
        self._root_system = None

    @property
    def dim(self):
        return self.d * self.d

    def parity(self, i, j):
        return 0 if (i <= self.m) == (j <= self.m) else 1

    def unit_matrix(self, i, j):
        mat = Matrix.zeros(self.field, self.d, self.d)
        mat.data[i - 1, j - 1] = 1
        return mat

    def element_parity(self, x):
        """Parity of a Matrix algebra element; None when mixed, 0 for zero."""
        has = {0: False, 1: False}
        for (i, j) in self.units:
            if x.data[i - 1, j - 1]:
                has[self.parity(i, j)] = True
        if has[0] and has[1]:
            return None
        return 1 if has[1] else 0

    def bracket_units(self, i, j, k, l):
        """[E(i,j), E(k,l)] as a list of (coefficient sign, unit) pairs."""
        sign = (-1) ** (self.parity(i, j) * self.parity(k, l))
        comps = {}
        if j == k:
            comps[(i, l)] = comps.get((i, l), 0) + 1
        if l == i:
            comps[(k, j)] = comps.get((k, j), 0) - sign
        return [(c % self.field.p, u) for u, c in sorted(comps.items()) if c % self.field.p]

    def bracket(self, x, y):
        """Super bracket of homogeneous Matrix elements."""
        px = self.element_parity(x)
        py = self.element_parity(y)
        if px is None or py is None:
            raise OddInput("bracket requires homogeneous arguments")
        f = self.field
        xy = matmul(f, x.data, y.data)
        yx = matmul(f, y.data, x.data)
        if px and py:
            return Matrix(f, f.add(xy, yx))
        return Matrix(f, f.sub(xy, yx))

    def ad_matrix(self, x):
        """Matrix of ad(x) = [x, .] on the unit basis (d^2 x d^2)."""
        cols = []
        for (k, l) in self.units:
            b = self.bracket(x, self.unit_matrix(k, l))
            cols.append(b.data.reshape(-1))
        return Matrix(self.field, np.array(cols, dtype=np.int64).T)

    def root_system(self):
        if self._root_system is None:
            self._root_system = RootSystem(self)
        return self._root_system

    def __repr__(self):
        return f"gl({self.m}|{self.n}) over {self.field}"


def build_algebra(m, n, field):
    return SuperAlgebra(m, n, field)


def supertrace(algebra, x):
    """str(A) = tr(upper-left m block) - tr(lower-right n block)."""
    f = algebra.field
    acc = 0
    for i in range(algebra.m):
        acc = f.add(acc, int(x.data[i, i]))
    for i in range(algebra.m, algebra.d):
        acc = f.sub(acc, int(x.data[i, i]))
    return FieldElement(f, acc)


def p_power(algebra, x):
    """The p-mapping: p-th matrix power of an even element."""
    if algebra.element_parity(x) != 0:
        raise OddInput("p-mapping applies to even elements only")
    return x.power(algebra.field.p)


class Root:
    """The root eps_i - eps_j of gl(m|n) (with eps_{m+t} = delta_t)."""

    __slots__ = ("i", "j", "parity", "height", "positive")

    def __init__(self, algebra, i, j):
        assert i != j
        self.i = i
        self.j = j
        self.parity = algebra.parity(i, j)
        self.height = j - i
        self.positive = i < j

    @property
    def key(self):
        return (self.i, self.j)

    def vector(self, d):
        v = np.zeros(d, dtype=np.int64)
        v[self.i - 1] += 1
        v[self.j - 1] -= 1
        return v

    def __eq__(self, other):
        return isinstance(other, Root) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Root(e{self.i}-e{self.j})"


class RootSystem:
    """Roots, heights, coroots and rho for gl(m|n)."""

    def __init__(self, algebra):
        self.algebra = algebra
        d = algebra.d
        self.d = d
        self.roots = [Root(algebra, i, j)
                      for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
        self._by_key = {r.key: r for r in self.roots}
        # positive roots by ascending height, (i, j)-lex tie-break
        self.positive = sorted((r for r in self.roots if r.positive),
                               key=lambda r: (r.height, r.i, r.j))
        self.simple = [self._by_key[(i, i + 1)] for i in range(1, d)]
        self.positive_even = [r for r in self.positive if r.parity == 0]
        self.positive_odd = [r for r in self.positive if r.parity == 1]
        self.pos_index = {r.key: t for t, r in enumerate(self.positive)}
        self.rho = self._compute_rho()

    def root(self, i, j):
        return self._by_key[(i, j)]

    def e_unit(self, root):
        return (root.i, root.j) if root.positive else (root.j, root.i)

    def f_unit(self, root):
        return (root.j, root.i) if root.positive else (root.i, root.j)

    def coroot_diag(self, root):
        """h_alpha = [e_alpha, f_alpha] as an integer diagonal vector."""
        v = np.zeros(self.d, dtype=np.int64)
        i, j = (root.i, root.j) if root.positive else (root.j, root.i)
        v[i - 1] = 1
        v[j - 1] = -1 if root.parity == 0 else 1
        return v

    def coroot_matrix(self, root):
        mat = Matrix.zeros(self.algebra.field, self.d, self.d)
        for t, c in enumerate(self.coroot_diag(root)):
            mat.data[t, t] = c % self.algebra.field.p
        return mat

    def _compute_rho(self):
        """rho as an integer vector of values on the diagonal units.

        Determined by rho(h_alpha) = 1 on simple coroots and rho = 0 on the
        basis-completing element E(d,d).
        """
        d = self.d
        rho = np.zeros(d, dtype=np.int64)
        for i in range(d - 1, 0, -1):
            if self.simple[i - 1].parity == 0:
                rho[i - 1] = rho[i] + 1
            else:
                rho[i - 1] = 1 - rho[i]
        return rho % self.algebra.field.p

    def rho_value(self, root):
        """rho(h_alpha) as an integer mod p."""
        return int(np.dot(self.rho, self.coroot_diag(root))) % self.algebra.field.p

    def weight_on_coroot(self, lam, root):
        """lambda(h_alpha) for a Weight lambda."""
        f = self.algebra.field
        acc = 0
        for t, c in enumerate(self.coroot_diag(root)):
            if c == 1:
                acc = f.add(acc, int(lam.coords[t]))
            elif c == -1:
                acc = f.sub(acc, int(lam.coords[t]))
        return acc


class Character:
    """A linear functional on the even part, stored on even matrix units."""

    def __init__(self, algebra, values=None):
        self.algebra = algebra
        self.field = algebra.field
        vals = {}
        for unit, v in (values or {}).items():
            unit = tuple(unit)
            idx = v.idx if isinstance(v, FieldElement) else int(v)
            if idx == 0:
                continue
            if algebra.parity(*unit) != 0:
                raise InvalidSupport(f"chi must vanish on odd unit E{unit}")
            vals[unit] = idx
        self.values = vals

    def value(self, unit):
        return self.values.get(tuple(unit), 0)

    def element(self, unit):
        return FieldElement(self.field, self.value(unit))

    def restrict_h(self):
        """chi with all off-diagonal values dropped (semisimple part)."""
        return Character(self.algebra,
                         {u: v for u, v in self.values.items() if u[0] == u[1]})

    def is_zero(self):
        return not self.values

    def embed(self, new_algebra, emb):
        return Character(new_algebra,
                         {u: int(emb[v]) for u, v in self.values.items()})

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __repr__(self):
        if not self.values:
            return "Character(0)"
        parts = ", ".join(f"E{u}={self.field.format_index(v)}"
                          for u, v in sorted(self.values.items()))
        return f"Character({parts})"


class Weight:
    """Values on the diagonal units E(i,i), i = 1..m+n."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        arr = []
        for c in coords:
            arr.append(c.idx if isinstance(c, FieldElement) else int(c))
        self.coords = np.array(arr, dtype=np.int64)

    def value(self, i):
        return int(self.coords[i - 1])

    def element(self, i):
        return FieldElement(self.field, self.value(i))

    def key(self):
        return tuple(int(c) for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Weight(" + ",".join(self.field.format_index(c) for c in self.coords) + ")"


def root_system(algebra):
    return algebra.root_system()


def reflect(rs, alpha, target):
    """Reflection s_alpha applied to a root, or to a Weight for even alpha."""
    i, j = alpha.i, alpha.j
    if isinstance(target, Root):
        def sw(t):
            return j if t == i else (i if t == j else t)
        return rs.root(sw(target.i), sw(target.j))
    if isinstance(target, Weight):
        if alpha.parity != 0:
            raise OddReflectionOnWeight("odd reflections are not defined on weights")
        f = rs.algebra.field
        lam_h = rs.weight_on_coroot(target, alpha)
        coords = target.coords.copy()
        coords[i - 1] = f.sub(int(coords[i - 1]), lam_h)
        coords[j - 1] = f.add(int(coords[j - 1]), lam_h)
        return Weight(f, coords)
    raise TypeError("target must be a Root or a Weight")


def weyl_move_to_simple(rs, beta):
    """A shortest word of even simple reflections carrying the odd root
    beta into the odd simple roots; returns (word, image).

    The word [s1, s2, ...] is applied in order: image = s_k(...s_1(beta)).
    """
    assert beta.parity == 1
    simple_odd = {r.key for r in rs.simple if r.parity == 1}
    even_simple = [r for r in rs.simple if r.parity == 0]
    from collections import deque
    seen = {beta.key: (None, None)}
    queue = deque([beta])
    while queue:
        cur = queue.popleft()
        if cur.key in simple_odd:
            word = []
            key = cur.key
            while seen[key][0] is not None:
                prev, s = seen[key]
                word.append(s)
                key = prev
            word.reverse()
            return word, cur
        for s in even_simple:
            nxt = reflect(rs, s, cur)
            if nxt.key not in seen:
                seen[nxt.key] = (cur.key, s)
                queue.append(nxt)
    raise AssertionError("W0-orbit of an odd root must meet the odd simple roots")


class CharacterClass:
    """Vanishing-pattern classification of a character."""

    def __init__(self, semisimple, borel_vanishing, nplus_vanishing,
                 standard_levi, levi_set):
        self.semisimple = semisimple
        self.borel_vanishing = borel_vanishing
        self.nplus_vanishing = nplus_vanishing
        self.standard_levi = standard_levi
        self.levi_set = levi_set

    def __repr__(self):
        return (f"CharacterClass(semisimple={self.semisimple}, "
                f"borel_vanishing={self.borel_vanishing}, "
                f"nplus_vanishing={self.nplus_vanishing}, "
                f"standard_levi={self.standard_levi}, I={sorted(r.key for r in self.levi_set)})")


def classify_character(rs, chi):
    """Vanishing-pattern flags for chi (Character on the even part)."""
    alg = rs.algebra
    semisimple = all(u[0] == u[1] for u in chi.values)
    nplus_vanishing = all(not (u[0] < u[1]) for u in chi.values)
    borel_vanishing = all(u[0] > u[1] for u in chi.values)
    standard_levi = False
    levi_set = []
    if borel_vanishing:
        simple_f_units = {rs.f_unit(r): r for r in rs.simple if r.parity == 0}
        standard_levi = True
        for u in chi.values:
            if u in simple_f_units:
                levi_set.append(simple_f_units[u])
            else:
                standard_levi = False
        if not standard_levi:
            levi_set = []
    return CharacterClass(semisimple, borel_vanishing, nplus_vanishing,
                          standard_levi, levi_set)


def weight_variety(algebra, chi):
    """All weights lambda with lambda(h)^p - lambda(h) = chi(h)^p on the
    diagonal units.

    Extends the scalar field (degree multiplied by p) as long as some
    coordinate equation has no root; returns (algebra, chi, weights) over
    the possibly extended field.
    """
    while True:
        field = algebra.field
        per_coord = []
        missing = False
        for i in range(1, algebra.d + 1):
            c = field.power(chi.value((i, i)), field.p)
            roots = ffield.artin_schreier_roots(field, c)
            if not roots:
                missing = True
                break
            per_coord.append([r.idx for r in roots])
        if not missing:
            weights = [Weight(field, combo)
                       for combo in itertools.product(*per_coord)]
            return algebra, chi, weights
        new_field, emb = field.extend()
        new_algebra = SuperAlgebra(algebra.m, algebra.n, new_field)
        chi = chi.embed(new_algebra, emb)
        algebra = new_algebra


def weight_in_variety(algebra, chi, lam):
    """Check lambda_i^p - lambda_i = chi(E(i,i))^p for every i."""
    f = algebra.field
    for i in range(1, algebra.d + 1):
        lhs = f.sub(f.power(lam.value(i), f.p), lam.value(i))
        if lhs != f.power(chi.value((i, i)), f.p):
            return False
    return True
