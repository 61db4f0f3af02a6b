"""The acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

from __future__ import annotations

import time

import numpy as np

from wreathhopf.abelian import AbelianSpec
from wreathhopf.datasets import bundled_names, load_action
from wreathhopf.finite.actions import lundstrom_check
from wreathhopf.finite.automorphisms import (aut_brute, aut_out_orders, inner_automorphism,
                                             inner_of_G, nu_map, principal_derivation,
                                             theta_decompose)
from wreathhopf.finite.cohomology import derivations_h1, shapiro_oracle
from wreathhopf.finite.endo import burnside_pair_count, direct_finiteness_probe, intertwiner_basis
from wreathhopf.finite.groups import (coset_action, cyclic_group, dihedral_group, natural_action,
                                      regular_action, symmetric_group)
from wreathhopf.finite.module import FiniteWreath
from wreathhopf.finite.theorem_b import theoremB_report
from wreathhopf.induced import certify_theta, verify_counterexample
from wreathhopf.scalars import IntegersMod, Rationals


def test_c1_counterexample_certificate(acceptance):
    bad = []
    worst = 0.0
    for m in (2, 3, 4, 5, 8):
        for ring in (Rationals(), IntegersMod(m)):
            t0 = time.perf_counter()
            rep = verify_counterexample(m, ring)
            dt = time.perf_counter() - t0
            worst = max(worst, dt)
            if not (rep.left_inverse and not rep.right_inverse
                    and rep.ba_support_size == m + 1 and dt < 1.0):
                bad.append((m, repr(ring), dt))
    assert acceptance("c1 counterexample certificate", not bad,
                      f"10 cases, slowest {worst:.3f}s, failures {bad}")


def test_c2_non_hopfian_certificate(acceptance):
    bad = []
    worst = 0.0
    for m in (2, 3, 5):
        t0 = time.perf_counter()
        cert = certify_theta(m, hom_trials=500, preimage_trials=200, seed=m)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not (cert.ok() and cert.hom_checks == 500 and cert.preimage_checks == 200 and dt < 5.0):
            bad.append((m, cert.hom_failures, cert.preimage_failures, dt))
    assert acceptance("c2 non-Hopfian certificate", not bad,
                      f"m in (2, 3, 5), slowest {worst:.2f}s, failures {bad}")


def test_c3_intertwiner_dimension(acceptance):
    names = bundled_names()
    bad = []
    for name in names:
        act = load_action(name)
        if len(intertwiner_basis(act)) != burnside_pair_count(act):
            bad.append(name)
    ok = len(names) >= 8 and not bad
    assert acceptance("c3 intertwiner dimension = Burnside count", ok,
                      f"{len(names)} actions, mismatches {bad}")


def test_c4_h1_shapiro(acceptance):
    groups = [cyclic_group(2), cyclic_group(3), symmetric_group(3), dihedral_group(4)]
    checked, bad = 0, []
    for B in groups:
        for H in B.subgroups():
            act = coset_action(B, H)
            for p in (2, 3):
                checked += 1
                got = derivations_h1(act, AbelianSpec((p,))).h1_order
                want = shapiro_oracle(B, H, p)
                if got != want:
                    bad.append((B.name, len(H), p, got, want))
    assert acceptance("c4 H^1 vs Shapiro oracle", not bad, f"{checked} cases, mismatches {bad}")


CASES = [("Z/2 wr C3", regular_action(cyclic_group(3)), (2,), 24),
         ("Z/3 wr S3", natural_action(symmetric_group(3)), (3,), 162)]


def test_c5_aut_formula(acceptance):
    lines, ok = [], True
    for label, act, A, order in CASES:
        t0 = time.perf_counter()
        W = FiniteWreath(act, AbelianSpec(A))
        brute = len(aut_brute(W.group))
        formula = aut_out_orders(act, AbelianSpec(A)).aut_formula
        dt = time.perf_counter() - t0
        ok &= W.order == order and brute == formula and dt < 60
        lines.append(f"{label}: formula {formula}, brute {brute}, {dt:.2f}s")
    assert acceptance("c5 |Aut(G)| formula vs brute force", ok, "; ".join(lines))


def test_c6_out_consistency(acceptance):
    lines, ok = [], True
    for label, act, A, _ in CASES:
        W = FiniteWreath(act, AbelianSpec(A))
        n_aut = len(aut_brute(W.group))
        inn = W.order // W.center_order()
        out = aut_out_orders(act, AbelianSpec(A)).out_formula
        ok &= n_aut % inn == 0 and out == n_aut // inn
        lines.append(f"{label}: formula {out}, |Aut|/|Inn| = {n_aut}/{inn}")
    assert acceptance("c6 |Out(G)| consistency", ok, "; ".join(lines))


def test_c7_inner_triples(acceptance):
    act = natural_action(symmetric_group(3))
    W = FiniteWreath(act, AbelianSpec((3,)))
    mod = W.module
    rng = np.random.default_rng(2024)
    bad = 0
    for _ in range(50):
        m0 = rng.integers(0, 3, size=mod.dim)
        b0 = int(rng.integers(0, act.group.order))
        dec = theta_decompose(W, inner_of_G(W, W.mul(W.embed_m(m0), b0)))
        good = (np.array_equal(dec.sigma, inner_automorphism(act.group, b0))
                and dec.theta2_module == nu_map(mod, b0)
                and np.array_equal(dec.gamma % mod.moduli, principal_derivation(mod, m0)))
        bad += not good
    assert acceptance("c7 inner-triple extraction", bad == 0, f"50 inner automorphisms, {bad} wrong")


def test_c8_lundstrom(acceptance):
    positive = [natural_action(symmetric_group(3))] + [
        regular_action(g) for g in (cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                    symmetric_group(3), dihedral_group(4))]
    ok = all(lundstrom_check(a).holds for a in positive)
    mixed = load_action("c2_fixed_plus_regular")
    res = lundstrom_check(mixed)
    witness_ok = False
    if not res.holds:
        x, y = res.witness
        # recompute the two indices straight from the action table
        sx = {b for b in range(mixed.group.order) if mixed.images[b, x] == x}
        sy = {b for b in range(mixed.group.order) if mixed.images[b, y] == y}
        ix, iy = len(sx) // len(sx & sy), len(sy) // len(sx & sy)
        witness_ok = ix != iy and (ix, iy) == tuple(res.indices)
    ok = ok and witness_ok
    assert acceptance("c8 Lundstrom checker", ok,
                      f"{len(positive)} positive actions; mixed witness {res.witness} "
                      f"indices {res.indices}")


def test_c9_probe_violations(acceptance):
    runs = violations = 0
    for name in bundled_names():
        act = load_action(name)
        for coeff in ((2,), (3,), (4, 9), (0,), (0, 2)):
            rep = theoremB_report(act, AbelianSpec(coeff), budget=128, seed=runs)
            runs += len(rep.probes)
            violations += sum(p.violations for p in rep.probes)
        basis = intertwiner_basis(act)
        for p, s in ((2, 2), (3, 2), (5, 1)):
            runs += 1
            violations += direct_finiteness_probe(basis, p, s, budget=128, seed=runs).violations
    assert acceptance("c9 direct-finiteness probes", violations == 0,
                      f"{runs} probe runs, {violations} violations")
