import pytest

from arcones import arpresent, cone, pathalg, rootdata


def ice(letter, n, orient=None):
    ar = arpresent.knit_rep_ar(rootdata.build_dynkin(letter, n, orient))
    cat = arpresent.enumerate_presentations(ar)
    return arpresent.build_ice_quiver(cat)


def support_counts(iq, dv):
    return {v.label: d for v, d in zip(iq.vertices, dv) if d}


def test_bruteforce_chain_tails():
    iq = ice("A", 2)
    rep = pathalg.build_tv(iq.cat.by_label["O2-"], iq)
    subs = cone.subreps_bruteforce(rep, 2)
    named = {tuple(sorted(support_counts(iq, dv))) for dv in subs}
    assert named == {("O2-",), ("O2-", "f[1,0]"), ("O1+", "O2-", "f[1,0]")}


def test_bruteforce_two_vertex():
    iq = ice("A", 2)
    rep = pathalg.build_tv(iq.cat.by_label["O1+"], iq)
    subs = cone.subreps_bruteforce(rep, 2)
    named = {tuple(sorted(support_counts(iq, dv))) for dv in subs}
    assert named == {("O1+",), ("Id1", "O1+")}


def test_bruteforce_cap():
    iq = ice("A", 2)
    rep = pathalg.build_tv(iq.cat.by_label["O2-"], iq)
    with pytest.raises(ValueError):
        cone.subreps_bruteforce(rep, 2, cap=2)


def test_d4_strict_counts():
    # this orientation reproduces the known D4 strict-subrep counts per index
    iq = ice("D", 4, [(2, 1), (3, 2), (4, 2)])
    sets = cone.tv_strict_sets(iq, source="both")
    cat = iq.cat
    assert [len(sets[cat.by_label["O%d-" % i]]) for i in range(1, 5)] == \
        [3, 3, 3, 3]
    assert [len(sets[cat.by_label["O%d+" % i]]) for i in range(1, 5)] == \
        [7, 6, 1, 1]
    assert [len(sets[cat.by_label["Id%d" % i]]) for i in range(1, 5)] == \
        [1, 2, 7, 7]


def test_d4_cone_44_and_prune():
    iq = ice("D", 4, [(2, 1), (3, 2), (4, 2)])
    spec = cone.assemble_cone(iq)
    assert len(spec.columns) == 44
    assert all(all(x >= 0 for x in c) and any(c) for _v, c in spec.columns)
    pruned = cone.prune_redundant(spec)
    assert len(pruned.columns) == 44


def test_a2_u_variant_columns():
    iq = ice("A", 2)
    spec = cone.assemble_cone(iq, "u")
    per = {}
    for v, c in spec.columns:
        per.setdefault(v.index, []).append(c)
    assert len(per[1]) == 1
    assert len(per[2]) == 2


@pytest.mark.parametrize("variant", ["u", "sharp", "l", "r"])
@pytest.mark.parametrize("letter,n", [("A", 2), ("A", 3), ("D", 4)])
def test_restricted_columns_are_restrictions(letter, n, variant):
    iq = ice(letter, n)
    sets = cone.tv_strict_sets(iq)
    full2 = cone.assemble_cone(iq, strict_sets=sets)
    sub = cone.assemble_cone(iq, variant, strict_sets=sets)
    keep = [iq.index[v] for v in sub.vertices]
    groups = {"u": ("negative",), "sharp": ("negative", "positive"),
              "l": ("neutral",), "r": ("positive",)}[variant]
    expected = set()
    for v, c in full2.columns:
        if v.kind in groups:
            r = tuple(c[iq.index[w]] for w in sub.vertices)
            if any(r):
                expected.add(r)
    assert {c for _v, c in sub.columns} == expected


def test_prune_drops_redundant():
    iq = ice("A", 3)
    spec = cone.assemble_cone(iq)
    # duplicating a column must not change the pruned cone
    v0, c0 = spec.columns[0]
    doubled = cone.ConeSpec(spec.variant, spec.vertices,
                            spec.columns + [(v0, c0)],
                            {g: list(ix) for g, ix in spec.groups.items()})
    pruned = cone.prune_redundant(doubled)
    assert sorted(c for _v, c in pruned.columns) == \
        sorted(c for _v, c in cone.prune_redundant(spec).columns)


def test_exports():
    iq = ice("A", 2)
    spec = cone.assemble_cone(iq)
    d = spec.to_json_dict()
    assert set(d) == {"variant", "ambient", "columns", "groups"}
    csv = spec.to_csv()
    assert csv.splitlines()[0].startswith("vertex,")
    assert len(csv.splitlines()) == len(spec.vertices) + 1
