"""Polyhedral cones cut out by subrepresentations of the modules T_v.

The cone attached to an ice-quiver variant is described by one linear
inequality g . dim(S) >= 0 per recorded subrepresentation dimension vector S.
Columns are grouped by the kind of the frozen vertex the T_v belongs to:
group "u" for negative, "l" for neutral, "r" for positive vertices.
"""

import itertools
from dataclasses import dataclass, field

from . import arpresent, mutation, pathalg
from .exact import lp_min

_GROUP_OF_KIND = {"negative": "u", "neutral": "l", "positive": "r"}
_GROUP_ORDER = {"u": 0, "l": 1, "r": 2}

# maximal frozen vertex of T_v, as (kind, index function)
DEFAULT_CAP = 24


def subreps_bruteforce(rep, q, cap=DEFAULT_CAP):
    """All dimension vectors of nonzero subrepresentations of rep over the
    field with q elements (the full module included).

    The matrices are first canonicalized by pathalg.reduce_for_counting so
    that reduction mod q cannot silently drop a constraint.
    """
    if sum(rep.dims) > cap:
        raise ValueError("total dimension %d exceeds cap %d; use the "
                         "F-polynomial route" % (sum(rep.dims), cap))
    rep = pathalg.reduce_for_counting(rep)
    iq = rep.iq
    n = len(iq.vertices)
    support = [k for k in range(n) if rep.dims[k]]
    per = {k: _subspaces(rep.dims[k], q) for k in support}
    arrows = []
    for (s, d, _v, _t), m in zip(iq.arrows, rep.mats):
        if m is not None and any(any(r) for r in m):
            arrows.append((iq.index[s], iq.index[d], m))
    found = set()
    sel = {}

    def closed_so_far(k):
        for si, di, m in arrows:
            if si in sel and di in sel and (si == k or di == k):
                _dim, members, basis = sel[di]
                for vec in sel[si][2]:
                    img = tuple(sum(m[r][c] * vec[c]
                                    for c in range(len(vec))) % q
                                for r in range(len(m)))
                    if img not in members:
                        return False
        return True

    def dfs(pos):
        if pos == len(support):
            dv = tuple(sel[k][0] if k in sel else 0 for k in range(n))
            if any(dv):
                found.add(dv)
            return
        k = support[pos]
        for sub in per[k]:
            sel[k] = sub
            if closed_so_far(k):
                dfs(pos + 1)
        del sel[k]

    dfs(0)
    return found


def strict_subreps(rep, q, cap=DEFAULT_CAP):
    """Nonzero strict subrepresentation dimension vectors over GF(q)."""
    full = tuple(rep.dims)
    return {dv for dv in subreps_bruteforce(rep, q, cap) if dv != full}


def _subspaces(d, q):
    """All subspaces of GF(q)^d as (dim, member set, basis list)."""
    vecs = [v for v in itertools.product(range(q), repeat=d) if any(v)]
    seen = {}
    for r in range(d + 1):
        for combo in itertools.combinations(vecs, r):
            members = {tuple([0] * d)}
            for b in combo:
                new = set()
                for c in range(q):
                    for x in members:
                        new.add(tuple((xi + c * bi) % q
                                      for xi, bi in zip(x, b)))
                members = new
            key = frozenset(members)
            if key not in seen:
                dim = 0
                size = len(members)
                while q ** dim < size:
                    dim += 1
                seen[key] = (dim, key, list(combo))
    return sorted(seen.values(), key=lambda t: (t[0], sorted(t[1])))


@dataclass
class ConeSpec:
    variant: str
    vertices: list                  # ambient vertex list (variant order)
    columns: list                   # (frozen vertex, dim vector over ambient)
    groups: dict = field(default_factory=dict)   # group -> column indices

    @property
    def dim(self):
        return len(self.vertices)

    def rows(self):
        """The inequalities as rows: g . row >= 0 for each column."""
        return [list(col) for _v, col in self.columns]

    def to_json_dict(self):
        return {
            "variant": self.variant,
            "ambient": [v.label for v in self.vertices],
            "columns": [{"frozen": v.label, "vector": list(c)}
                        for v, c in self.columns],
            "groups": {g: list(ix) for g, ix in self.groups.items()},
        }

    def to_csv(self):
        lines = [",".join(["vertex"] + [v.label for v, _ in self.columns])]
        for i, v in enumerate(self.vertices):
            lines.append(",".join([v.label] +
                                  [str(c[i]) for _, c in self.columns]))
        return "\n".join(lines)


def _maximal_vertex(iq, v):
    """The maximal frozen vertex of T_v (the spot only the full module
    occupies)."""
    cat = iq.cat
    if v.kind == "negative":
        return cat.by_label["O%d+" % cat._star[v.index]]
    if v.kind == "positive":
        return cat.by_label["Id%d" % v.index]
    return cat.by_label["O%d-" % v.index]


def tv_strict_sets(iq, source="bruteforce", cap=DEFAULT_CAP):
    """Strict nonzero subrep dim vectors of every T_v of the full2 quiver,
    as a dict frozen vertex -> set of vectors (full2 coordinates).

    source "bruteforce" enumerates over GF(2) and GF(3) and requires the two
    to agree; "fpoly" runs the mutation algorithm; "both" additionally
    requires the two routes to agree exactly.
    """
    out = {}
    if source in ("fpoly", "both"):
        for i in range(1, iq.n + 1):
            for v, s in mutation.tv_subreps_via_fpoly(iq, i).items():
                out[v] = set(s)
    if source in ("bruteforce", "both"):
        for v in iq.vertices:
            if not iq.frozen[v]:
                continue
            rep = pathalg.build_tv(v, iq)
            s2 = strict_subreps(rep, 2, cap)
            s3 = strict_subreps(rep, 3, cap)
            if s2 != s3:
                raise RuntimeError(
                    "subrep sets of T_%s differ between GF(2) and GF(3): "
                    "%s vs %s" % (v.label, sorted(s2 - s3), sorted(s3 - s2)))
            if source == "both" and out[v] != s2:
                raise RuntimeError(
                    "subrep sets of T_%s disagree: fpoly-only %s, "
                    "bruteforce-only %s"
                    % (v.label, sorted(out[v] - s2), sorted(s2 - out[v])))
            out[v] = s2
    return out


def assemble_cone(iq, variant="full2", source="bruteforce", cap=DEFAULT_CAP,
                  strict_sets=None):
    """Build the ConeSpec of the given variant from the full2 ice quiver.

    Restricted variants keep the groups listed for them, restrict every
    vector to the surviving coordinates, and additionally include the full
    dimension vector of any T_v whose maximal frozen vertex was deleted.
    """
    if iq.variant != "full2":
        raise ValueError("assemble_cone starts from the full2 ice quiver")
    groups_of = {"full2": ("u", "l", "r"), "u": ("u",), "sharp": ("u", "r"),
                 "l": ("l",), "r": ("r",)}[variant]
    amb = iq if variant == "full2" else \
        arpresent.build_ice_quiver(iq.cat, variant)
    keep = [iq.index[v] for v in amb.vertices]
    if strict_sets is None:
        strict_sets = tv_strict_sets(iq, source, cap)
    entries = []
    for v in iq.vertices:
        if not iq.frozen[v]:
            continue
        g = _GROUP_OF_KIND[v.kind]
        if g not in groups_of:
            continue
        vecs = set(strict_sets[v])
        if variant != "full2" and \
                _maximal_vertex(iq, v) not in amb.vertices:
            full = _full_dim(iq, v)
            vecs.add(full)
        for vec in vecs:
            r = tuple(vec[k] for k in keep)
            if any(r):
                entries.append((g, v, r))
    entries.sort(key=lambda e: (_GROUP_ORDER[e[0]], e[1].index, e[2]))
    columns, groups, seen = [], {}, set()
    for g, v, r in entries:
        if (g, r) in seen:
            continue
        seen.add((g, r))
        groups.setdefault(g, []).append(len(columns))
        columns.append((v, r))
    return ConeSpec(variant, list(amb.vertices), columns, groups)


def _full_dim(iq, v):
    cat = iq.cat
    if v.kind == "negative":
        i_star = cat._star[v.index]
        return tuple(cat.e_vec[p][i_star - 1] for p in iq.vertices)
    if v.kind == "positive":
        return tuple(cat.f_plus[p][v.index - 1] for p in iq.vertices)
    return tuple(cat.f_minus[p][v.index - 1] for p in iq.vertices)


def prune_redundant(spec):
    """Drop every column whose inequality is implied by the others.

    Column h is redundant iff minimizing g . h over the cone cut out by the
    remaining columns (with a box normalization) gives 0; by exact LP
    duality this holds iff h is a nonnegative combination of the remaining
    columns, which is the smaller Farkas feasibility problem solved here.
    """
    cols = [list(c) for _v, c in spec.columns]
    keep = [True] * len(cols)
    d = spec.dim
    for i in range(len(cols)):
        others = [cols[j] for j in range(len(cols)) if keep[j] and j != i]
        if not others:
            continue
        a_eq = [[c[k] for c in others] for k in range(d)]
        status, _x, _value = lp_min([0] * len(others), a_eq=a_eq,
                                    b_eq=cols[i], nonneg=True)
        if status == "optimal":
            keep[i] = False
    kept = [j for j in range(len(cols)) if keep[j]]
    renum = {old: new for new, old in enumerate(kept)}
    columns = [spec.columns[j] for j in kept]
    groups = {}
    for g, ix in spec.groups.items():
        new = [renum[i] for i in ix if keep[i]]
        if new:
            groups[g] = new
    return ConeSpec(spec.variant, list(spec.vertices), columns, groups)
