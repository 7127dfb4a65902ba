import itertools

from k3siegel.intpoly import IntPoly, cyclotomic
from k3siegel import linalg
from k3siegel.hodgeclass import dissect_and_classify
from k3siegel.hyplattice import build, signature_and_renormalize, unimodularity_gate
from k3siegel.picardweyl import (
    PicardData,
    RootSystemReport,
    analyze_root_system,
    enumerate_roots,
    picard_lattice,
)
from k3siegel.salemlib import load_store

STORE = load_store()
Z2 = IntPoly([-1, 0, 1])
PSI_523 = IntPoly([1, -1, -2, 0, 2, 1, 0, -1, -2, 0, 1, 1, 1, 0, -2, -1, 0, 1, 2, 0, -2, -1, 1])


def run_pipeline(phi, psi):
    model = build(phi, psi)
    assert unimodularity_gate(model)
    model = signature_and_renormalize(model)
    verdict = dissect_and_classify(phi, psi)
    assert verdict.accepted
    pic, report = analyze_root_system(model, verdict)
    return model, verdict, pic, report


def test_row1_weyl():
    phi = Z2 * STORE[(20, 1)].salem_poly
    psi = STORE[(10, 1)].salem_poly * cyclotomic(21)
    model, verdict, pic, report = run_pipeline(phi, psi)
    assert pic.rho == 2
    assert report.dynkin_name() == "A1"
    assert report.phi1_tilde_factors == {1: 1, 2: 1}
    assert report.trace_a_tilde == 1
    assert len(report.component_actions) == 1


def test_entry9_weyl():
    phi = Z2 * STORE[(4, 1)].salem_poly * cyclotomic(8) * cyclotomic(12) * cyclotomic(30)
    model, verdict, pic, report = run_pipeline(phi, PSI_523)
    assert pic.rho == 18
    assert report.dynkin_name() == "A2^2+E6+E8"
    assert report.phi1_tilde_factors == {1: 13, 2: 3, 4: 1}
    assert report.trace_a_tilde == 11
    kinds = {}
    for act in report.component_actions:
        kinds.setdefault(act.component.name, []).append(act.kind)
    assert sorted(kinds["A2"]) == ["moved", "moved"]
    assert kinds["E6"] == ["nontrivial"]
    assert kinds["E8"] == ["trivial"]


def test_entry2_weyl():
    phi = Z2 * STORE[(18, 22)].salem_poly * cyclotomic(4)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(48)
    model, verdict, pic, report = run_pipeline(phi, psi)
    assert pic.rho == 4
    assert report.dynkin_name() == "A1^2"
    assert report.phi1_tilde_factors == {1: 1, 2: 1, 4: 1}
    assert report.trace_a_tilde == -1
    assert all(a.kind == "moved" for a in report.component_actions)


def test_entry6_weyl():
    phi = Z2 * STORE[(10, 1)].salem_poly * cyclotomic(4) * cyclotomic(16)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(40)
    model, verdict, pic, report = run_pipeline(phi, psi)
    assert pic.rho == 12
    assert report.dynkin_name() == "E6^2"
    assert report.phi1_tilde_factors == {1: 4, 2: 4, 4: 2}
    assert report.trace_a_tilde == -1
    assert all(a.kind == "moved" for a in report.component_actions)


def test_invariants_entry9():
    phi = Z2 * STORE[(4, 1)].salem_poly * cyclotomic(8) * cyclotomic(12) * cyclotomic(30)
    model, verdict, pic, report = run_pipeline(phi, PSI_523)
    # Atilde is an isometry of the intersection form
    at = report.a_tilde_l
    g = model.gram
    assert linalg.mat_eq(linalg.mat_mul(linalg.mat_mul(linalg.transpose(at), g), at), g)
    # char(Atilde) = S * phi1_tilde with the same Salem factor as phi
    cp = linalg.charpoly(at)
    assert cp == verdict.salem_factor * report.phi1_tilde
    assert report.phi1_tilde.degree == pic.rho
    # every positive root is a nonnegative integer combination of simple roots
    import fractions
    sim = report.simple_roots
    mat = [[fractions.Fraction(sim[j][i]) for j in range(len(sim))] for i in range(pic.rho)]
    # solve in the span: simple roots are linearly independent
    for u in report.delta_plus[:25]:
        rhs = [[fractions.Fraction(c)] for c in u]
        aug = [row[:] + r for row, r in zip(mat, rhs)]
        # gaussian solve least-structure; use linalg.solve on the square system
        # since len(sim) == rho for these full-rank systems
        sol = linalg.solve([[mat[i][j] for j in range(len(sim))] for i in range(pic.rho)], rhs)
        coords = [s[0] for s in sol]
        assert all(c.denominator == 1 for c in coords)
        assert all(c >= 0 for c in coords)


def test_root_counts_match_dynkin():
    phi = Z2 * STORE[(4, 1)].salem_poly * cyclotomic(8) * cyclotomic(12) * cyclotomic(30)
    model, verdict, pic, report = run_pipeline(phi, PSI_523)
    # A2^2 + E6 + E8: 6 + 6 + 72 + 240 = 324 roots = 162 positive
    assert len(report.delta_plus) == 162
    assert len(report.simple_roots) == 18


def test_rho_zero_degenerate():
    pic = PicardData(rho=0, basis_l=[], gram_pic=[], a_pic=[], phi1=IntPoly([1]))
    report = enumerate_roots(pic)
    assert report.delta_plus == [] and report.simple_roots == []
    assert report.dynkin_name() == "0"


def test_brute_force_equivalence_small_rank():
    # rank <= 4 lattices: exhaustive box search agrees with Fincke-Pohst
    phi = Z2 * STORE[(18, 22)].salem_poly * cyclotomic(4)
    psi = STORE[(6, 1)].salem_poly * cyclotomic(48)
    model, verdict, pic, report = run_pipeline(phi, psi)
    assert pic.rho == 4
    neg = [[-x for x in row] for row in pic.gram_pic]
    found = set(linalg.short_vectors(neg, 2))
    box = set()
    bound = 8
    for v in itertools.product(range(-bound, bound + 1), repeat=4):
        if any(v) and sum(v[i] * neg[i][j] * v[j] for i in range(4) for j in range(4)) == 2:
            w = list(v)
            for c in reversed(w):
                if c != 0:
                    if c < 0:
                        w = [-t for t in w]
                    break
            box.add(tuple(w))
    assert found == box
