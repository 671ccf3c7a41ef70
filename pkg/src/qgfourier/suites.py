"""Property suites: every identity the package promises, as CheckReports.

These drive both the CLI ``check`` command and the acceptance tests.  All
randomness is seeded; exact-backend checks use exact equality, the float
backend compares within its tolerance.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import core, fixtures, laurent, padic
from .report import CheckReport, make_report, passed
from .scalars import EXACT, FLOAT, Backend, zeta


def _random_element(A, rng):
    return A.element([A.backend.random_scalar(rng) for _ in range(A.dim)])


def _sweep_elements(A, rng, n_random=100):
    for i in range(A.dim):
        yield A.basis_element(i)
    for _ in range(n_random):
        yield _random_element(A, rng)


# ---------------------------------------------------------------------------


def suite_axioms(backend: Backend = EXACT, seed: int = 0) -> list:
    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        reps = core.verify_axioms(A)
        reports.append(
            make_report(
                "axioms",
                name,
                passed(reps),
                "; ".join("%s: %s" % (r.case, r.witness) for r in reps if not r.ok),
            )
        )
    return reports


def suite_inversion(backend: Backend = EXACT, seed: int = 0, n_random: int = 100) -> list:
    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        rng = random.Random((seed, name).__repr__())
        ok, wit = True, None
        for a in _sweep_elements(A, rng, n_random):
            back = core.inverse_fourier(A, core.fourier(A, a))
            if not back == a:
                ok, wit = False, "element %r" % (a.coords,)
                break
        reports.append(make_report("inversion", name, ok, wit))
    return reports


def suite_lemma_inverse(backend: Backend = EXACT, seed: int = 0) -> list:
    """psi_hat(w' F(a)) = w'(S^{-1}(a)) on all basis pairs."""
    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        ok, wit = True, None
        for i in range(A.dim):
            wprime = core.fourier(A, A.basis_element(i))
            for j in range(A.dim):
                a = A.basis_element(j)
                lhs = core.psi_hat(A, wprime * core.fourier(A, a))
                rhs = wprime.of_coords(A.antipode_inv_coords(a.coords))
                if not A.backend.is_zero(lhs - rhs):
                    ok, wit = False, "basis pair (%d,%d)" % (i, j)
                    break
            if not ok:
                break
        reports.append(make_report("inversion-lemma", name, ok, wit))
    return reports


def suite_convolution(backend: Backend = EXACT, seed: int = 0, n_padic_pairs: int = 50) -> list:
    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        ok, wit = True, None
        for i in range(A.dim):
            for j in range(A.dim):
                a, b = A.basis_element(i), A.basis_element(j)
                c1 = core.convolve(A, a, b)
                c2 = core.convolve_alt(A, a, b)
                if not c1 == c2:
                    ok, wit = False, "formulas disagree at (%d,%d)" % (i, j)
                    break
                lhs = core.fourier(A, c1)
                rhs = core.fourier(A, a) * core.fourier(A, b)
                if not lhs == rhs:
                    ok, wit = False, "convolution theorem fails at (%d,%d)" % (i, j)
                    break
            if not ok:
                break
        reports.append(make_report("convolution", name, ok, wit))

    # classical oracle on function algebras: (a*b)(t) = sum_s a(s) b(s^-1 t)
    for gname in ("Z2", "Z3", "S3"):
        G = fixtures.FiniteGroupTable.builtin(gname)
        A = fixtures.function_algebra(G, backend)
        rng = random.Random((seed, "conv", gname).__repr__())
        ok, wit = True, None
        for _ in range(20):
            a, b = _random_element(A, rng), _random_element(A, rng)
            got = core.convolve(A, a, b)
            want = [
                sum(a.coords[s] * b.coords[G.cayley[G.inverse[s]][t]] for s in range(G.order))
                for t in range(G.order)
            ]
            if not got == A.element(want):
                ok, wit = False, "random pair on %s" % gname
                break
        reports.append(make_report("convolution", "classical-oracle:" + gname, ok, wit))

    # p-adic convolution theorem
    for p in (2, 3):
        rng = random.Random((seed, "padic-conv", p).__repr__())
        ok, wit = True, None
        for _ in range(n_padic_pairs // 2):
            f = padic.random_schwartz(p, rng, backend)
            g = padic.random_schwartz(p, rng, backend)
            lhs = padic.padic_fourier(padic.schwartz_convolve(f, g))
            rhs = padic.schwartz_mul(padic.padic_fourier(f), padic.padic_fourier(g))
            if not lhs == rhs:
                ok, wit = False, "random pair, p=%d" % p
                break
        reports.append(make_report("convolution", "padic:p=%d" % p, ok, wit))
    return reports


def suite_plancherel(backend: Backend = EXACT, seed: int = 0, n_random: int = 100, tolerance: float = 1e-9) -> list:
    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        if not A.is_star:
            continue
        positive = name != "H4"  # the non-unimodular fixture has no positive integral
        rng = random.Random((seed, "plancherel", name).__repr__())
        ok, wit = True, None
        for a in _sweep_elements(A, rng, n_random):
            reps = core.plancherel_check(A, a, check_positivity=positive, tolerance=tolerance)
            if not passed(reps):
                ok, wit = False, "; ".join(r.witness for r in reps if not r.ok)
                break
        reports.append(make_report("plancherel", name, ok, wit))

    # p-adic Plancherel with the self-dual Haar normalization
    for p in (2, 3):
        rng = random.Random((seed, "padic-plancherel", p).__repr__())
        ok, wit = True, None
        for _ in range(25):
            f = padic.random_schwartz(p, rng, backend)
            fh = padic.padic_fourier(f)
            lhs = padic.haar_integral(padic.schwartz_mul(fh, fh.conjugate()))
            rhs = padic.haar_integral(padic.schwartz_mul(f, f.conjugate()))
            if not f.backend.is_zero(lhs - rhs):
                ok, wit = False, "random f, p=%d" % p
                break
        reports.append(make_report("plancherel", "padic:p=%d" % p, ok, wit))
    return reports


def suite_biduality(backend: Backend = EXACT, seed: int = 0) -> list:
    from . import linalg

    reports = []
    for name, A in fixtures.standard_fixtures(backend):
        d1 = core.build_dual(A)
        d2 = core.build_dual(d1.dual)
        # canonical identification: a_k -> evaluation functional on the dual;
        # its coordinates in the bidual basis are M = P (P_hat^T)^{-1}
        M = linalg.mat_mul(d1.pairing, linalg.inverse(linalg.transpose(d2.pairing), A.backend))
        B = core.transport(d2.dual, M)
        reports.append(make_report("biduality", name, core.tensors_equal(B, A)))
    return reports


def suite_types(backend: Backend = EXACT, seed: int = 0) -> list:
    reports = []
    for gname in ("Z2", "Z3", "Z4", "Z2xZ2", "S3"):
        G = fixtures.FiniteGroupTable.builtin(gname)

        A = fixtures.function_algebra(G, backend)
        coints = core.find_cointegral(A)
        want = A.element([1 if g == G.identity else 0 for g in range(G.order)])
        ok = len(coints) == 1 and _same_line(coints[0], want)
        reports.append(make_report("types", "cointegral Fun(%s) = span(delta_e)" % gname, ok))

        B = fixtures.group_algebra(G, backend)
        coints = core.find_cointegral(B)
        want = B.element([1] * G.order)
        ok = len(coints) == 1 and _same_line(coints[0], want)
        reports.append(make_report("types", "cointegral C[%s] = span(sum lambda_g)" % gname, ok))

        for name, Q in (("Fun(%s)" % gname, A), ("C[%s]" % gname, B)):
            t = core.classify_type(Q)
            reports.append(
                make_report("types", "%s is compact and discrete" % name, t["compact"] and t["discrete"])
            )
            reports.append(
                make_report("types", "dual-type:%s" % name, passed(core.dual_type_check(Q)))
            )
    reports.extend(laurent.laurent_type_certificates(backend))
    return reports


def _same_line(a, b):
    """True if a and b span the same 1-dimensional space."""
    be = a.owner.backend
    i = next((i for i, c in enumerate(b.coords) if not be.is_zero(c)), None)
    if i is None or be.is_zero(a.coords[i]):
        return False
    r = a.coords[i] / b.coords[i]
    return all(be.is_zero(x - r * y) for x, y in zip(a.coords, b.coords))


def suite_grouplike(backend: Backend = EXACT, seed: int = 0, primes=(2, 3, 5, 7)) -> list:
    reports = []
    G = fixtures.FiniteGroupTable.builtin("S3")
    A = fixtures.function_algebra(G, backend)
    subs = fixtures.subgroups_of(G)
    orders = sorted({len(s) for s in subs})
    reports.append(make_report("grouplike", "S3 has subgroups of orders 1,2,3,6", orders == [1, 2, 3, 6]))
    for s in subs:
        h = fixtures.subgroup_indicator(A, G, s)
        ok = core.is_group_like_projection(A, h)
        if ok:
            try:
                core.fourier_group_like(A, h)
            except core.StructureError:
                ok = False
        reports.append(
            make_report("grouplike", "subgroup of order %d (indices %s)" % (len(s), list(s)), ok)
        )
    # a non-subgroup coset: {g} for g != e is idempotent but not group-like
    g = next(i for i in range(G.order) if i != G.identity)
    coset = fixtures.subgroup_indicator(A, G, [g])
    reports.append(
        make_report("grouplike", "non-subgroup singleton fails", not core.is_group_like_projection(A, coset))
    )
    # the unit is group-like
    reports.append(make_report("grouplike", "h = 1 passes", core.is_group_like_projection(A, A.one())))

    for p in primes:
        reps = padic.padic_group_like_suite(p, range(-3, 4), backend)
        reports.append(
            make_report(
                "grouplike",
                "padic suite p=%d, n in [-3,3]" % p,
                passed(reps),
                "; ".join(r.case for r in reps if not r.ok),
            )
        )
    return reports


def suite_padic(backend: Backend = EXACT, seed: int = 0, primes=(2, 3, 5, 7)) -> list:
    reports = []
    # golden identity: F(h_n) = p^-n h_-n exactly
    for p in primes:
        ok, wit = True, None
        for n in range(-3, 4):
            hn = padic.subgroup_indicator(p, n, backend)
            got = padic.padic_fourier(hn)
            want = padic.schwartz_scale(
                Fraction(p) ** (-n) if backend.exact else float(Fraction(p) ** (-n)),
                padic.subgroup_indicator(p, -n, backend),
            )
            if not got == want:
                ok, wit = False, "n=%d" % n
                break
        reports.append(make_report("padic", "F(h_n) = p^-n h_-n, p=%d" % p, ok, wit))

    # Haar: measure of p^n Zp is p^-n; translation invariance; linearity
    for p in (2, 5):
        ok = all(
            padic.haar_integral(padic.subgroup_indicator(p, n, backend))
            == (Fraction(p) ** (-n) if backend.exact else complex(Fraction(p) ** (-n)))
            for n in range(-3, 4)
        )
        rng = random.Random((seed, "haar", p).__repr__())
        for _ in range(10):
            f = padic.random_schwartz(p, rng, backend)
            shift = Fraction(rng.randint(0, p**2 - 1), p ** rng.randint(0, 2))
            if not f.backend.is_zero(
                padic.haar_integral(f.translated(shift)) - padic.haar_integral(f)
            ):
                ok = False
                break
        reports.append(make_report("padic", "Haar normalization and invariance, p=%d" % p, ok))

    # double transform is reflection: F(F(f)) = f(-x)
    for p in (2, 3):
        rng = random.Random((seed, "reflect", p).__repr__())
        ok, wit = True, None
        for _ in range(10):
            m = rng.randint(-2, 2)
            c = Fraction(rng.randint(0, p**3 - 1), p ** rng.randint(0, 2))
            cell = padic.indicator(padic.Ball.make(p, m, c), backend)
            got = padic.padic_fourier(padic.padic_fourier(cell))
            neg = padic._mod_power(-padic._mod_power(c, p, m), p, m)
            want = padic.indicator(padic.Ball.make(p, m, neg), backend)
            if not got == want:
                ok, wit = False, "cell %s + %d^%d Zp" % (c, p, m)
                break
        reports.append(make_report("padic", "double transform reflects, p=%d" % p, ok, wit))

    reports.extend(suite_laurent(backend))
    return reports


def suite_laurent(backend: Backend = EXACT) -> list:
    reports = []
    ok = all(
        laurent.pair_fourier(laurent.basis(laurent.CZ, n, backend))
        == laurent.basis(laurent.KZ, n, backend)
        for n in range(-10, 11)
    )
    reports.append(make_report("laurent", "F(e_n) = delta_n for |n| <= 10", ok))

    ok = all(
        laurent.pair_pairing(laurent.basis(laurent.CZ, n, backend), laurent.basis(laurent.KZ, m, backend))
        == backend.normalize(1 if m == -n else 0)
        for n in range(-5, 6)
        for m in range(-5, 6)
    )
    reports.append(make_report("laurent", "<e_n, f> = f(-n)", ok))

    ok = True
    for m in range(-5, 6):
        for n in range(-5, 6):
            v = laurent.pair_integral(
                laurent.pair_mult(laurent.basis(laurent.CZ, m, backend), laurent.basis(laurent.CZ, n, backend))
            )
            if not backend.is_zero(v - backend.normalize(1 if m + n == 0 else 0)):
                ok = False
    reports.append(make_report("laurent", "phi(e_m e_n) = [m+n=0]", ok))

    # duality of product and coproduct through the pairing, via slices
    ok = True
    for n in range(-5, 6):
        for m in range(-5, 6):
            f = laurent.basis(laurent.KZ, n, backend)
            g = laurent.basis(laurent.KZ, m, backend)
            for a in range(-5, 6):
                en = laurent.basis(laurent.CZ, a, backend)
                lhs = laurent.pair_pairing(en, laurent.pair_mult(f, g))
                # <coproduct(e_a), f (x) g> = f(-a) g(-a)
                rhs = f(-a) * g(-a)
                if not backend.is_zero(lhs - rhs):
                    ok = False
            ename = laurent.pair_mult(laurent.basis(laurent.CZ, n, backend), laurent.basis(laurent.CZ, m, backend))
            lhs = laurent.pair_pairing(ename, laurent.basis(laurent.KZ, 1, backend))
            # <e_n (x) e_m, coproduct(f)> = f(-n - m)
            rhs = laurent.basis(laurent.KZ, 1, backend)(-n - m)
            if not backend.is_zero(lhs - rhs):
                ok = False
    reports.append(make_report("laurent", "pairing intertwines products and coproducts", ok))
    return reports


def suite_oracle(seed: int = 0, tolerance: float = 1e-6) -> list:
    """Independent oracles: Riemann sums for the p-adic transform (float),
    character sums for the abelian DFT (exact)."""
    reports = []
    for p in (2, 3):
        rng = random.Random((seed, "oracle", p).__repr__())
        ok, wit = True, None
        for _ in range(25):
            f = padic.random_schwartz(p, rng, FLOAT)
            fh = padic.padic_fourier(f)
            samples = list(fh.cells.keys())[:6] + [Fraction(1, p**3), Fraction(p**3)]
            for y in samples:
                got = fh.evaluate(y)
                want = padic.padic_fourier_oracle_value(f, y)
                if abs(got - want) > tolerance:
                    ok, wit = False, "y=%s got=%r want=%r" % (y, got, want)
                    break
            if not ok:
                break
        reports.append(make_report("oracle", "padic Riemann sum, p=%d" % p, ok, wit))

    # abelian character-sum oracle, exact backend
    for gname, chars in _abelian_characters().items():
        G = fixtures.FiniteGroupTable.builtin(gname)
        A = fixtures.function_algebra(G)
        rng = random.Random((seed, "dft", gname).__repr__())
        ok, wit = True, None
        for _ in range(10):
            a = _random_element(A, rng)
            for chi in chars:
                c_chi = A.element(list(chi))
                got = core.fourier(A, a)(c_chi)
                want = sum(chi[g] * a.coords[g] for g in range(G.order))
                if not A.backend.is_zero(got - want):
                    ok, wit = False, "character mismatch on %s" % gname
                    break
            if not ok:
                break
        reports.append(make_report("oracle", "character-sum DFT on %s" % gname, ok, wit))
    return reports


def _abelian_characters():
    """Explicit character tables for the abelian builtins."""
    tables = {}
    for n, gname in ((2, "Z2"), (3, "Z3"), (4, "Z4")):
        tables[gname] = [[zeta(n, j * k) for j in range(n)] for k in range(n)]
    z2 = [[zeta(2, j * k) for j in range(2)] for k in range(2)]
    tables["Z2xZ2"] = [
        [c1[a] * c2[b] for a in range(2) for b in range(2)] for c1 in z2 for c2 in z2
    ]
    return tables


def suite_duality_structure(backend: Backend = EXACT, seed: int = 0) -> list:
    """build_dual(group_algebra(G)) matches function_algebra(G) on the basis
    matching lambda-dual(g) <-> delta_{g^-1}."""
    reports = []
    for gname in ("Z2", "Z3", "Z4", "Z2xZ2", "S3"):
        G = fixtures.FiniteGroupTable.builtin(gname)
        B = fixtures.group_algebra(G, backend)
        dual = core.build_dual(B).dual
        # delta_g corresponds to the dual basis vector at index g^-1
        M = [[1 if i == G.inverse[g] else 0 for i in range(G.order)] for g in range(G.order)]
        M = [[backend.normalize(x) for x in row] for row in M]
        transported = core.transport(dual, M)
        A = fixtures.function_algebra(G, backend)
        reports.append(
            make_report("duality", "dual(C[%s]) = Fun(%s)" % (gname, gname), core.tensors_equal(transported, A))
        )
    # the Sweedler fixture has a nontrivial grouplike modular element
    H = fixtures.sweedler_fixture(backend)
    delta = core.modular_element(H)
    nontrivial = not delta == H.one()
    D = H.comult_dense(delta.coords)
    grouplike = core._tensors_eq(
        H.backend, D, [[a * b for b in delta.coords] for a in delta.coords]
    )
    reports.append(make_report("duality", "H4 modular element is grouplike and != 1", nontrivial and grouplike))
    for gname in ("Z3", "S3"):
        G = fixtures.FiniteGroupTable.builtin(gname)
        for A in (fixtures.function_algebra(G, backend), fixtures.group_algebra(G, backend)):
            ok = core.modular_element(A) == A.one()
            reports.append(make_report("duality", "%s is unimodular" % A.name, ok))
    return reports


SUITES = {
    "axioms": suite_axioms,
    "inversion": suite_inversion,
    "inversion-lemma": suite_lemma_inverse,
    "convolution": suite_convolution,
    "plancherel": suite_plancherel,
    "biduality": suite_biduality,
    "types": suite_types,
    "grouplike": suite_grouplike,
    "padic": suite_padic,
    "oracle": suite_oracle,
    "duality": suite_duality_structure,
}


def run_suites(names, backend: Backend = EXACT, seed: int = 0, primes=None) -> list:
    reports = []
    for name in names:
        fn = SUITES[name]
        kwargs = {"seed": seed}
        if name != "oracle":
            kwargs["backend"] = backend
        if primes and name in ("padic", "grouplike"):
            kwargs["primes"] = tuple(primes)
        reports.extend(fn(**kwargs))
    return reports
