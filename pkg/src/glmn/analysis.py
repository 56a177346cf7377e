"""Brute-force module oracles.

Everything here works on explicit action matrices: spinning vectors into
graded submodules, testing graded simplicity through maximal vectors,
peeling simple heads, composition series, regular modules of nilpotent
subalgebras, joint-kernel trivial submodules and the Frobenius form.

Generating candidates come from two sources.  Modules with a full Cartan
action use weight-space maximal vectors.  Modules over a nilpotent
subalgebra of strictly upper or lower triangular units have a single
one-dimensional simple module, on which a unit x acts by the scalar
chi(x); its isotypic socle (the joint kernel of the shifted actions)
plays the role of the maximal-vector space.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from .enveloping import PBWElement, ReductionContext, multiply
from .errors import (DimensionBudgetExceeded, NoMaximalVector, NotClosed,
                     ShiftInconsistent, ZeroVector)
from .linalg import Matrix, Subspace, kernel_arr, matvec, row_reduce
from .verma import ModuleRep, maximal_vectors

LINE_BUDGET = 10 ** 4


class GradedSubmodule:
    """A submodule split into its even and odd parts."""

    __slots__ = ("module", "even_part", "odd_part")

    def __init__(self, module, even_part=None, odd_part=None):
        f = module.field
        n = module.dim
        self.module = module
        self.even_part = even_part if even_part is not None else Subspace(f, n)
        self.odd_part = odd_part if odd_part is not None else Subspace(f, n)

    @property
    def dim(self):
        return self.even_part.dim + self.odd_part.dim

    def total(self):
        return self.even_part.add(self.odd_part)

    def contains(self, vec):
        return self.total().contains(vec)

    def basis_rows(self):
        return np.vstack([self.even_part.basis, self.odd_part.basis])

    def union(self, other):
        return GradedSubmodule(self.module,
                               self.even_part.add(other.even_part),
                               self.odd_part.add(other.odd_part))

    def add_rows(self, rows):
        """Smallest graded space containing self and homogeneous rows."""
        M = self.module
        ev, od = self.even_part, self.odd_part
        for row in np.asarray(rows, dtype=np.int64).reshape(-1, M.dim):
            pars = set(M.parity[row != 0])
            assert len(pars) <= 1, "rows must be parity homogeneous"
            if not pars:
                continue
            if pars.pop() == 0:
                ev = ev.add_vectors(row)
            else:
                od = od.add_vectors(row)
        return GradedSubmodule(M, ev, od)

    def is_action_closed(self):
        M = self.module
        tot = self.total()
        for u in M.units:
            for row in tot.basis:
                if not tot.contains(M.act(u, row)):
                    return False
        return True

    def __repr__(self):
        return (f"GradedSubmodule(even={self.even_part.dim}, "
                f"odd={self.odd_part.dim} of dim {self.module.dim})")


def _homogeneous_components(M, w):
    comps = []
    for par in (0, 1):
        c = np.where(M.parity == par, w, 0)
        if c.any():
            comps.append(c)
    return comps


def spin(M, w):
    """Smallest graded submodule containing w.

    w is split into its homogeneous components and their span is closed
    under every action matrix.
    """
    w = np.asarray(w, dtype=np.int64)
    if not w.any():
        raise ZeroVector("cannot spin the zero vector")
    sub = GradedSubmodule(M)
    frontier = _homogeneous_components(M, w)
    while frontier:
        v = frontier.pop()
        part = sub.even_part if not M.parity[np.nonzero(v)[0][0]] else sub.odd_part
        red = part.reduce(v)
        if not red.any():
            continue
        sub = sub.add_rows(red)
        for u in M.units:
            img = M.act(u, red)
            if img.any():
                frontier.append(img)
    return sub


def _shifted_scalars(M):
    """The scalar a_x = chi(x) by which each unit acts on the simple
    module of a nilpotent (strictly triangular) subalgebra.

    Raises ShiftInconsistent when chi does not vanish on brackets of the
    subalgebra, in which case no one-dimensional module exists.
    """
    alg = M.algebra
    f = M.field
    chi = M.chi
    for x in M.units:
        assert x[0] != x[1], "nilpotent subalgebra expected"
        for y in M.units:
            acc = 0
            for c, unit in alg.bracket_table[(x, y)]:
                acc = f.add(acc, f.mul(c, chi.value(unit)))
            if acc:
                raise ShiftInconsistent(
                    "chi does not vanish on the derived subalgebra; no "
                    "one-dimensional module to shift by")
    return {x: chi.value(x) for x in M.units}


def shifted_joint_kernel(M):
    """Joint kernel of x - a_x over the acting units (the socle of a
    module over a nilpotent subalgebra)."""
    f = M.field
    scalars = _shifted_scalars(M)
    blocks = []
    eye = np.eye(M.dim, dtype=np.int64)
    for u in M.units:
        blocks.append(f.sub(M.matrix(u).data, f.mul(scalars[u], eye)))
    stacked = np.vstack(blocks) if blocks else np.zeros((0, M.dim), dtype=np.int64)
    return Subspace(f, M.dim, kernel_arr(f, stacked))


def trivial_submodules(M):
    """Joint kernel of all action matrices."""
    f = M.field
    stacked = np.vstack([M.matrix(u).data for u in M.units]) \
        if M.units else np.zeros((0, M.dim), dtype=np.int64)
    return Subspace(f, M.dim, kernel_arr(f, stacked))


def _has_cartan(M):
    alg = M.algebra
    return all((i, i) in M.action for i in range(1, alg.d + 1))


def _candidate_spaces(M):
    """Spaces whose lines are the generating candidates of Lemma 2.4.

    Returns a list of (fingerprint, Subspace, parity).
    """
    if _has_cartan(M):
        return [(("weight",) + lam.key(), sub, par)
                for lam, sub, par in maximal_vectors(M)]
    ker = shifted_joint_kernel(M)
    scalars = tuple(int(v) for v in _shifted_scalars(M).values())
    out = []
    f = M.field
    for par in (0, 1):
        sel = np.eye(M.dim, dtype=np.int64)[M.parity == par]
        part = ker.intersect(Subspace(f, M.dim, sel))
        if part.dim:
            out.append((("shifted",) + scalars, part, par))
    return out


def _line_representatives(field, sub, line_budget, rng):
    """One vector per line of a Subspace, exhaustive when the projective
    count fits the budget, otherwise a seeded sample.

    Returns (list of vectors, probabilistic flag).
    """
    d = sub.dim
    q = field.q
    if d == 1:
        return [sub.basis[0]], False
    count = (q ** d - 1) // (q - 1)
    if count <= line_budget:
        reps = []
        for lead in range(d):
            for tail in itertools.product(range(q), repeat=d - 1 - lead):
                coeffs = np.zeros(d, dtype=np.int64)
                coeffs[lead] = 1
                coeffs[lead + 1:] = tail
                reps.append(matvec(field, sub.basis.T, coeffs))
        return reps, False
    reps = []
    for _ in range(64):
        coeffs = np.array([rng.randrange(q) for _ in range(d)], dtype=np.int64)
        if not coeffs.any():
            coeffs[0] = 1
        reps.append(matvec(field, sub.basis.T, coeffs))
    return reps, True


class SimplicityVerdict:
    """Outcome of the graded simplicity oracle."""

    __slots__ = ("simple", "witness", "witness_fingerprint", "witness_parity",
                 "probabilistic")

    def __init__(self, simple, witness=None, witness_fingerprint=None,
                 witness_parity=None, probabilistic=False):
        self.simple = simple
        self.witness = witness
        self.witness_fingerprint = witness_fingerprint
        self.witness_parity = witness_parity
        self.probabilistic = probabilistic

    def __bool__(self):
        return self.simple

    def __repr__(self):
        return (f"SimplicityVerdict(simple={self.simple}, "
                f"probabilistic={self.probabilistic})")


def is_simple(M, line_budget=LINE_BUDGET, seed=0):
    """Graded simplicity by spinning every maximal-vector line."""
    rng = random.Random(seed)
    spaces = _candidate_spaces(M)
    if not spaces:
        raise NoMaximalVector("module has no generating candidates")
    probabilistic = False
    for fingerprint, sub, par in spaces:
        reps, sampled = _line_representatives(M.field, sub, line_budget, rng)
        probabilistic = probabilistic or sampled
        for v in reps:
            if spin(M, v).dim < M.dim:
                return SimplicityVerdict(False, witness=v,
                                         witness_fingerprint=fingerprint,
                                         witness_parity=par,
                                         probabilistic=probabilistic)
    return SimplicityVerdict(True, probabilistic=probabilistic)


def quotient_module(M, sub):
    """The quotient of M by a graded submodule.

    Returns (Q, proj, lift): proj maps ambient vectors to quotient
    coordinates and lift is a linear section.
    """
    f = M.field
    total = sub.total()
    free = [c for c in range(M.dim) if c not in total.pivots]
    free_arr = np.array(free, dtype=np.int64)

    def proj(vec):
        return total.reduce(vec)[free_arr] if free else np.zeros(0, dtype=np.int64)

    def lift(vec):
        out = np.zeros(M.dim, dtype=np.int64)
        out[free_arr] = vec
        return out

    action = {}
    for u in M.units:
        cols = [proj(M.act(u, lift(np.eye(len(free), dtype=np.int64)[t])))
                for t in range(len(free))]
        action[u] = Matrix(f, np.array(cols, dtype=np.int64).T.reshape(len(free), len(free)))
    Q = ModuleRep(M.algebra, M.chi, M.units, action, M.parity[free_arr],
                  highest_vector=None)
    if M.highest_vector is not None:
        hv = proj(M.highest_vector)
        if hv.any():
            Q.highest_vector = hv
    if getattr(M, "lam", None) is not None:
        Q.lam = M.lam
    return Q, proj, lift


def restrict_module(M, sub):
    """M restricted to a graded submodule, with the embedding rows."""
    f = M.field
    rows = sub.basis_rows()
    space = Subspace(f, M.dim, rows)
    basis = np.vstack([space.basis]) if space.dim else np.zeros((0, M.dim), dtype=np.int64)
    action = {}
    for u in M.units:
        cols = [space.coords(M.act(u, b)) for b in basis]
        action[u] = Matrix(f, np.array(cols, dtype=np.int64).T.reshape(space.dim, space.dim))
    parity = np.array([int(M.parity[np.nonzero(b)[0][0]]) for b in basis],
                      dtype=np.int64)
    R = ModuleRep(M.algebra, M.chi, M.units, action, parity)
    return R, basis


def simple_head(M, line_budget=LINE_BUDGET, seed=0):
    """The unique simple quotient, with the submodule it quotients by.

    Iteratively collects spins of non-generating maximal vectors into a
    radical part R and quotients, until the quotient is simple.  Returns
    (R: GradedSubmodule of M, head: ModuleRep).
    """
    rng = random.Random(seed)
    R = GradedSubmodule(M)
    while True:
        Q, proj, lift = quotient_module(M, R)
        if Q.dim == 0:
            raise NoMaximalVector("module shrank to zero while peeling")
        grew = False
        for fingerprint, subspace, par in _candidate_spaces(Q):
            reps, _ = _line_representatives(Q.field, subspace, line_budget, rng)
            for v in reps:
                s = spin(Q, v)
                if s.dim < Q.dim:
                    lifted = [lift(row) for row in s.basis_rows()]
                    bigger = R.add_rows(lifted) if lifted else R
                    if bigger.dim > R.dim:
                        # grow one proper spin at a time: the quotient and
                        # the lift become stale as soon as R changes
                        R = bigger
                        grew = True
                        break
            if grew:
                break
        if not grew:
            return R, Q


class CompositionSeries:
    """Descending chain of graded submodules with simple quotients."""

    __slots__ = ("chain", "factors")

    def __init__(self, chain, factors):
        self.chain = chain
        self.factors = factors

    @property
    def length(self):
        return len(self.factors)

    def __repr__(self):
        return f"CompositionSeries(factors={self.factors})"


def composition_series(M, line_budget=LINE_BUDGET, seed=0):
    """Peel simple heads until nothing is left.

    factors records (dim, fingerprint) per simple factor, top first;
    chain records the corresponding graded submodules of M, descending.
    """
    chain = []
    factors = []
    current = M
    # rows of the current module's basis expressed in M's coordinates
    embed = np.eye(M.dim, dtype=np.int64)
    while current.dim:
        R, head = simple_head(current, line_budget, seed)
        fps = sorted({fp for fp, _, _ in _candidate_spaces(head)})
        factors.append((head.dim, tuple(fps)))
        rows_local = R.basis_rows()
        if R.dim == 0:
            chain.append(GradedSubmodule(M))
            break
        rows_global = np.array([matvec(M.field, embed.T, r) for r in rows_local],
                               dtype=np.int64)
        sub_global = GradedSubmodule(M).add_rows(rows_global)
        chain.append(sub_global)
        current, basis_local = restrict_module(current, R)
        embed = np.array([matvec(M.field, embed.T, r) for r in basis_local],
                         dtype=np.int64).reshape(current.dim, M.dim)
    return CompositionSeries(chain, factors)


def _sub_positions(ctx, sub_units):
    pos = []
    for u in sub_units:
        if tuple(u) not in ctx.unit_to_pos:
            raise NotClosed(f"{u} is not a basis matrix unit")
        pos.append(ctx.unit_to_pos[tuple(u)])
    return pos


def _check_closed(algebra, sub_units):
    have = {tuple(u) for u in sub_units}
    for x in have:
        for y in have:
            for c, unit in algebra.bracket_table[(x, y)]:
                if c and unit not in have:
                    raise NotClosed(f"[{x}, {y}] leaves the span (unit {unit})")


def sub_enveloping_basis(algebra, chi, sub_units):
    """PBW monomial basis of u(sub, chi) inside the big context."""
    ctx = ReductionContext(algebra, chi)
    positions = _sub_positions(ctx, sub_units)
    ranges = []
    for pos in range(ctx.ngens):
        ranges.append(range(ctx.caps[pos]) if pos in positions else range(1))
    monos = [tuple(t) for t in itertools.product(*ranges)]
    return ctx, positions, monos


def regular_module(algebra, sub_units, chi, side="left"):
    """Left or right regular module of u(sub, chi) on its PBW basis."""
    _check_closed(algebra, sub_units)
    ctx, positions, monos = sub_enveloping_basis(algebra, chi, sub_units)
    f = ctx.field
    index = {m: t for t, m in enumerate(monos)}
    dim = len(monos)
    gens = {tuple(u): PBWElement.generator(ctx, u) for u in sub_units}
    action = {}
    for u in sub_units:
        u = tuple(u)
        mat = np.zeros((dim, dim), dtype=np.int64)
        for m, t in index.items():
            b = PBWElement(ctx, {m: 1})
            prod = multiply(ctx, gens[u], b) if side == "left" \
                else multiply(ctx, b, gens[u])
            for exps, c in prod.terms.items():
                assert exps in index, "product left the subalgebra"
                mat[index[exps], t] = f.add(int(mat[index[exps], t]), c)
        action[u] = Matrix(f, mat)
    parity = np.array([ctx.mono_parity(m) for m in monos], dtype=np.int64)
    M = ModuleRep(algebra, chi, [tuple(u) for u in sub_units], action, parity,
                  labels=monos)
    M.ctx = ctx
    return M


def frobenius_gram(algebra, sub_units, chi, dim_budget=4096):
    """Gram matrix of the top-coefficient form on u(sub, chi).

    The form sends (a, b) to the coefficient of the monomial with all
    exponents maximal in a*b.  Returns (Matrix, nondegenerate flag).
    """
    _check_closed(algebra, sub_units)
    ctx, positions, monos = sub_enveloping_basis(algebra, chi, sub_units)
    f = ctx.field
    dim = len(monos)
    if dim > dim_budget:
        raise DimensionBudgetExceeded(f"dim u(sub) = {dim} > {dim_budget}")
    top = tuple(ctx.caps[pos] - 1 if pos in positions else 0
                for pos in range(ctx.ngens))
    gram = np.zeros((dim, dim), dtype=np.int64)
    elts = [PBWElement(ctx, {m: 1}) for m in monos]
    for a in range(dim):
        for b in range(dim):
            prod = multiply(ctx, elts[a], elts[b])
            gram[a, b] = prod.terms.get(top, 0)
    G = Matrix(f, gram)
    _, rank = row_reduce(G)
    return G, rank == dim
