"""Exact lattice-point counting of weight slices of cones, plus the Kostant
partition brute force.

A slice is {g : g . h >= 0 for every cone column h, g . sigma = target}.
Counting reduces the affine integer slice to integer coordinates on the left
kernel lattice of sigma and enumerates by a pruned depth-first search.  All
arithmetic is exact (ints and Fractions); no floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from . import rootdata
from .exact import (dot, integer_row_solution, left_kernel_lattice, lp_min,
                    mat_inv, vec_mat)


def lp_bound(objective, ineq_rows=None, ineq_rhs=None, sigma=None,
             target=None, sense="min", fixed=None):
    """Exact optimum of objective . g over the rational polyhedron

        {g : g . row >= rhs for each inequality, g . sigma = target,
             g[k] = value for each fixed coordinate}.

    Returns (status, g, value) with status "optimal", "infeasible" or
    "unbounded"; the reported optimum is re-verified by substitution.
    """
    d = len(objective)
    ineq_rows = [list(r) for r in (ineq_rows or [])]
    if ineq_rhs is None:
        ineq_rhs = [0] * len(ineq_rows)
    a_ub = [[-r[k] for k in range(d)] for r in ineq_rows]
    b_ub = [-b for b in ineq_rhs]
    a_eq, b_eq = [], []
    if sigma is not None:
        for j in range(len(target)):
            a_eq.append([sigma[k][j] for k in range(d)])
            b_eq.append(target[j])
    for k, val in sorted((fixed or {}).items()):
        a_eq.append([1 if i == k else 0 for i in range(d)])
        b_eq.append(val)
    c = list(objective) if sense == "min" else [-x for x in objective]
    status, x, value = lp_min(c, a_ub, b_ub, a_eq, b_eq)
    if status != "optimal":
        return status, None, None
    for r, b in zip(ineq_rows, ineq_rhs):
        if dot(x, r) < b:
            raise AssertionError("lp_bound certificate violates inequality")
    for r, b in zip(a_eq, b_eq):
        if dot(r, x) != b:
            raise AssertionError("lp_bound certificate violates equality")
    got = dot(objective, x)
    if got != (value if sense == "min" else -value):
        raise AssertionError("lp_bound objective value mismatch")
    return "optimal", x, got


class UnboundedSliceError(ValueError):
    """Raised when a weight slice is an unbounded polyhedron.

    The offending recession ray (in ambient g-coordinates) is stored in the
    .ray attribute.
    """

    def __init__(self, message, ray):
        super().__init__(message)
        self.ray = ray


def _ceil_div(n, d):
    """ceil(n / d) for ints with d > 0."""
    return -((-n) // d)


class SliceFamily:
    """Shared counting machinery for all weight slices of one cone.

    Precomputes, independently of the target: a saturated integer basis of
    the left kernel of sigma (so slice lattice points become integer vectors
    c with g = g0 + c . kernel), the inequality vectors in c-coordinates,
    and per-coordinate bounding functionals expressing each +-c_i as a
    nonnegative combination of the inequality vectors.  The functionals turn
    into finite enumeration boxes for every individual target.
    """

    def __init__(self, cone, sigma):
        if hasattr(sigma, "sigma"):
            sigma = sigma.sigma
        if sigma is None:
            raise ValueError("this cone variant carries no weight grading")
        self.cone = cone
        self.sigma = [list(r) for r in sigma]
        self.d = cone.dim
        if len(self.sigma) != self.d:
            raise ValueError("sigma has %d rows for a %d-dimensional cone"
                             % (len(self.sigma), self.d))
        self.width = len(self.sigma[0])
        self.hcols = [list(c) for _v, c in cone.columns]
        self.kernel = left_kernel_lattice(self.sigma)
        self.m = len(self.kernel)
        avecs = [tuple(dot(k, h) for k in self.kernel) for h in self.hcols]
        # inequalities whose c-part vanishes reduce to a sign test on the
        # particular solution; keep them apart
        self.constant = [i for i, a in enumerate(avecs) if not any(a)]
        self.active = [(a, i) for i, a in enumerate(avecs) if any(a)]
        # most-constrained-first enumeration order
        touch = [sum(1 for a, _i in self.active if a[k])
                 for k in range(self.m)]
        self.order = sorted(range(self.m), key=lambda k: -touch[k])
        self.lower_mult = []        # lambda >= 0 with sum lambda_h a_h = e_i
        self.upper_mult = []        # lambda >= 0 with sum lambda_h a_h = -e_i
        self.unbounded_ray = None   # recession ray in g-coordinates, if any
        for i in range(self.m):
            self.lower_mult.append(self._bounding_functional(i, 1))
            self.upper_mult.append(self._bounding_functional(i, -1))
            if self.unbounded_ray is not None:
                break

    def _bounding_functional(self, i, sign):
        """Nonnegative lambda with sum_h lambda_h a_h = sign * e_i, or None
        (in which case a recession ray with c_i != 0 is recorded)."""
        rows = [a for a, _i in self.active]
        if not rows:
            self._record_ray(i, sign)
            return None
        a_eq = [[a[k] for a in rows] for k in range(self.m)]
        b_eq = [sign if k == i else 0 for k in range(self.m)]
        status, lam, _v = lp_min([0] * len(rows), a_eq=a_eq, b_eq=b_eq,
                                 nonneg=True)
        if status == "optimal":
            return lam
        self._record_ray(i, sign)
        return None

    def _record_ray(self, i, sign):
        """Find the Farkas-dual recession ray certifying that coordinate i
        is unbounded in the direction -sign."""
        rows = [list(a) for a, _i in self.active]
        a_eq = [[1 if k == i else 0 for k in range(self.m)]]
        status, c, _v = lp_min([0] * self.m, ineq_to_ub(rows),
                               [0] * len(rows), a_eq, [-sign])
        if status != "optimal":
            raise AssertionError("no bounding functional and no ray for "
                                 "coordinate %d" % i)
        ray = [sum(c[k] * self.kernel[k][j] for k in range(self.m))
               for j in range(self.d)]
        self.unbounded_ray = ray

    def count(self, target, strategy="propagate"):
        """Number of integer points of the slice at the given target."""
        target = list(target)
        if len(target) != self.width:
            raise ValueError("target has width %d, expected %d"
                             % (len(target), self.width))
        if self.unbounded_ray is not None:
            status, _g, _v = lp_bound([0] * self.d, self.hcols, None,
                                      self.sigma, target)
            if status == "infeasible":
                return 0
            raise UnboundedSliceError(
                "slice is unbounded along the ray %s" % (self.unbounded_ray,),
                self.unbounded_ray)
        g0 = integer_row_solution(self.sigma, target)
        if g0 is None:
            return 0
        rhs = [-dot(g0, h) for h in self.hcols]
        for i in self.constant:
            if rhs[i] > 0:
                return 0
        if self.m == 0:
            return 1
        cons = [(a, rhs[i]) for a, i in self.active]
        box = []
        for i in range(self.m):
            lo = ceil(Fraction(
                sum(l * b for l, (_a, b) in zip(self.lower_mult[i], cons))))
            hi = floor(-Fraction(
                sum(l * b for l, (_a, b) in zip(self.upper_mult[i], cons))))
            if lo > hi:
                return 0
            box.append((lo, hi))
        if strategy == "propagate":
            return self._count_propagate(cons, box)
        if strategy == "lp":
            return self._count_lp(cons, [b for _a, b in cons])
        raise ValueError("unknown strategy %r" % (strategy,))

    def _count_propagate(self, cons, box):
        m = self.m
        order = self.order

        def propagate(lo, hi):
            changed = True
            while changed:
                changed = False
                for a, b in cons:
                    best = sum(a[k] * (hi[k] if a[k] > 0 else lo[k])
                               for k in range(m) if a[k])
                    if best < b:
                        return False
                    for k in range(m):
                        if not a[k]:
                            continue
                        rest = best - a[k] * (hi[k] if a[k] > 0 else lo[k])
                        if a[k] > 0:
                            nb = _ceil_div(b - rest, a[k])
                            if nb > lo[k]:
                                lo[k] = nb
                                changed = True
                        else:
                            nb = (b - rest) // a[k]
                            if nb < hi[k]:
                                hi[k] = nb
                                changed = True
                        if lo[k] > hi[k]:
                            return False
            return True

        def rec(lo, hi, depth):
            if not propagate(lo, hi):
                return 0
            while depth < m and lo[order[depth]] == hi[order[depth]]:
                depth += 1
            if depth == m:
                c = lo
                for a, b in cons:
                    if dot(a, c) < b:
                        raise AssertionError("propagation leaf violates "
                                             "a checked constraint")
                return 1
            k = order[depth]
            total = 0
            for v in range(lo[k], hi[k] + 1):
                l2, h2 = list(lo), list(hi)
                l2[k] = h2[k] = v
                total += rec(l2, h2, depth + 1)
            return total

        return rec([l for l, _ in box], [h for _, h in box], 0)

    def _count_lp(self, cons, rhs):
        m = self.m
        order = self.order
        rows = [list(a) for a, _b in cons]

        def rec(fixed, depth):
            if depth == m:
                c = [fixed[k] for k in range(m)]
                return 1 if all(dot(a, c) >= b for a, b in cons) else 0
            k = order[depth]
            obj = [1 if j == k else 0 for j in range(m)]
            st, _c, vmin = lp_bound(obj, rows, rhs, sense="min", fixed=fixed)
            if st != "optimal":
                return 0
            st, _c, vmax = lp_bound(obj, rows, rhs, sense="max", fixed=fixed)
            if st != "optimal":
                return 0
            total = 0
            for v in range(ceil(Fraction(vmin)), floor(Fraction(vmax)) + 1):
                fixed[k] = v
                total += rec(fixed, depth + 1)
                del fixed[k]
            return total

        return rec({}, 0)


def ineq_to_ub(rows):
    """Rows of g . row >= 0 inequalities as a_ub rows for lp_min."""
    return [[-x for x in r] for r in rows]


@dataclass
class SlicePolytope:
    """A weight slice of a cone: fixes the grading g . sigma to a target."""

    cone: object
    sigma: list
    target: tuple

    def count(self, strategy="propagate"):
        return count_lattice(self.cone, self.sigma, self.target, strategy)


def slice_family(cone, sigma):
    """The (cached) SliceFamily of the cone for the given grading."""
    if hasattr(sigma, "sigma"):
        sigma = sigma.sigma
    if sigma is None:
        raise ValueError("this cone variant carries no weight grading")
    key = tuple(tuple(r) for r in sigma)
    fams = getattr(cone, "_families", None)
    if fams is None:
        fams = cone._families = {}
    if key not in fams:
        fams[key] = SliceFamily(cone, sigma)
    return fams[key]


def count_lattice(cone, sigma, target, strategy="propagate"):
    """Number of integer g with g . h >= 0 for every cone column h and
    g . sigma = target."""
    return slice_family(cone, sigma).count(target, strategy)


def kostant_partition(Q, gamma):
    """Kostant's partition function: the number of ways to write gamma
    (a weight in fundamental-weight coordinates) as a nonnegative integer
    combination of positive roots.  Returns 0 outside the root cone."""
    cd = Q if isinstance(Q, rootdata.CartanData) else rootdata.cartan_data(Q)
    n = len(cd.cartan)
    k = vec_mat([Fraction(x) for x in gamma], mat_inv(cd.cartan))
    rem = []
    for x in k:
        if x.denominator != 1 or x < 0:
            return 0
        rem.append(int(x))
    roots = [a for a, _fw in rootdata.positive_roots(cd)]

    def rec(idx, rem):
        if not any(rem):
            return 1
        if idx == len(roots):
            return 0
        a = roots[idx]
        total = 0
        cur = list(rem)
        while all(x >= 0 for x in cur):
            total += rec(idx + 1, cur)
            cur = [cur[j] - a[j] for j in range(n)]
        return total

    return rec(0, rem)
