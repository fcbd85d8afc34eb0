import pytest

from pin2k.bounds import (
    BoundaryData,
    IntersectionForm,
    MalformedChainError,
    Manifold,
    Status,
    UnknownManifoldError,
    bauer_chain_check,
    bohr_lee_bound,
    canonical_bauer_chain,
    conjecture_11_8,
    definite_bound,
    furuta_closed,
    orbifold_bound,
    parse_manifold,
    relative_10_8,
    rokhlin_consistency,
    split_bound,
    xi_bounds,
    xi_table_rows,
)


class TestForms:
    def test_invariants(self):
        form = IntersectionForm(2, 3)
        assert form.b2 == 22 and form.signature == -16
        assert IntersectionForm(-1, 1).b2 == 10
        assert IntersectionForm(-1, 1).signature == 8
        with pytest.raises(ValueError):
            IntersectionForm(0, -1)


class TestCobordismBounds:
    def test_definite(self):
        assert definite_bound(0, 1, 8).status is Status.SATISFIED
        assert definite_bound(0, 0, 8).status is Status.VIOLATED
        assert definite_bound(0, 0, 0).status is Status.SATISFIED
        assert definite_bound(0, 0, 4).status is Status.INAPPLICABLE

    def test_relative(self):
        assert relative_10_8(0, 0, 2, 1).status is Status.SATISFIED
        assert relative_10_8(0, 0, 3, 1).status is Status.VIOLATED
        assert relative_10_8(2, 0, 0, 0).status is Status.VIOLATED

    def test_split(self):
        assert split_bound(0, 0, 2, 3).status is Status.SATISFIED
        assert split_bound(0, 0, 2, 2).status is Status.VIOLATED
        assert split_bound(0, -1, 2, 2, parity_refined=True).status is Status.VIOLATED
        assert split_bound(0, 0, 2, 2, y0_kg_split=False).status is Status.INAPPLICABLE
        assert split_bound(0, 0, 2, 0).status is Status.INAPPLICABLE

    def test_split_parity_refinement_only_bites_for_even_q(self):
        assert split_bound(0, 1, 2, 2, parity_refined=True).status is Status.VIOLATED
        assert split_bound(0, 2, 2, 2, parity_refined=True).status is Status.SATISFIED
        assert split_bound(0, 1, 2, 3, parity_refined=True).status is Status.SATISFIED

    def test_closed(self):
        assert furuta_closed(2, 3).status is Status.SATISFIED
        assert furuta_closed(2, 2).status is Status.VIOLATED
        assert furuta_closed(0, 1).status is Status.SATISFIED
        assert conjecture_11_8(2, 3).status is Status.SATISFIED
        assert conjecture_11_8(2, 2).status is Status.VIOLATED
        assert conjecture_11_8(0, 1).status is Status.SATISFIED
        # exact rational comparison: q = 3, p = 2 sits exactly on 3p/2
        assert conjecture_11_8(4, 6).status is Status.SATISFIED
        assert conjecture_11_8(4, 5).status is Status.VIOLATED

    def test_grid_matches_closed_bound(self):
        for p in range(0, 21):
            for q in range(1, 41):
                grid = split_bound(0, 0, p, q).status
                closed = furuta_closed(p, q).status
                assert grid == closed, (p, q)

    def test_monotone_in_kappa1_and_q(self):
        for p in range(0, 8):
            for q in range(1, 12):
                for k1 in range(-3, 4):
                    if relative_10_8(0, k1, p, q).status is Status.SATISFIED:
                        assert relative_10_8(0, k1 + 1, p, q).status is Status.SATISFIED
                        assert relative_10_8(0, k1, p, q + 1).status is Status.SATISFIED
                    if split_bound(0, k1, p, q).status is Status.SATISFIED:
                        assert split_bound(0, k1 + 1, p, q).status is Status.SATISFIED
                        assert split_bound(0, k1, p, q + 1).status is Status.SATISFIED

    def test_orbifold(self):
        # the stored Seifert data for the first family: b2+ = 1, mu-bar = 0
        assert orbifold_bound(1, 1, 1, 0).status is Status.SATISFIED
        assert orbifold_bound(2, 1, 1, 0).status is Status.VIOLATED  # p - q >= 1 excluded
        assert orbifold_bound(1, 1, 0, 0).status is Status.VIOLATED  # reversed orientation
        assert orbifold_bound(1, 0, 1, 0).status is Status.INAPPLICABLE

    def test_rokhlin(self):
        assert rokhlin_consistency(0, 1, 1).status is Status.SATISFIED
        assert rokhlin_consistency(0, 0, 1).status is Status.VIOLATED
        assert rokhlin_consistency(0, 0, 2).status is Status.SATISFIED

    def test_bohr_lee(self):
        assert bohr_lee_bound(0) == 0
        assert bohr_lee_bound(2) == 4
        assert bohr_lee_bound(-1) == -2


class TestBauerChains:
    def test_canonical_chain_is_excluded(self):
        for r in range(1, 6):
            verdict = bauer_chain_check(canonical_bauer_chain(r))
            assert verdict.status is Status.VIOLATED, r

    def test_k3_piece_is_fine(self):
        verdict = bauer_chain_check([(IntersectionForm(2, 3), None)])
        assert verdict.status is Status.SATISFIED

    def test_non_split_boundary_disables_the_check(self):
        for r in range(2, 6):
            for spot in range(1, r):
                verdict = bauer_chain_check(canonical_bauer_chain(r, non_split_at=spot))
                assert verdict.status is Status.INAPPLICABLE, (r, spot)

    def test_chain_with_generous_kappa_is_still_excluded(self):
        chain = [
            (IntersectionForm(2, 3), BoundaryData(5, True, "Y1")),
            (IntersectionForm(2, 3), BoundaryData(9, True, "Y2")),
            (IntersectionForm(2, 2), None),
        ]
        assert bauer_chain_check(chain).status is Status.VIOLATED

    def test_malformed(self):
        with pytest.raises(MalformedChainError):
            bauer_chain_check([])
        with pytest.raises(MalformedChainError):
            bauer_chain_check([(IntersectionForm(2, 3), None), (IntersectionForm(2, 2), None)])
        with pytest.raises(MalformedChainError):
            canonical_bauer_chain(0)


EXACT_XI = {
    "S3": -1,
    "Sigma(2,3,11)": 0,
    "Sigma(2,3,7)": -1,
    "Sigma(2,3,13)": -1,
    "-Sigma(2,3,13)": -1,
    "Sigma(2,3,25)": -1,
    "-Sigma(2,3,25)": -1,
    "Sigma(2,3,12n+1)": -1,
    "-Sigma(2,3,12n+1)": -1,
    "Sigma(2,3,12n+5)": 0,
    "-Sigma(2,3,12n+5)": -2,
    "-Sigma(2,3,12n-1)": -1,
    "-Sigma(2,3,12n-5)": 0,
}


class TestXi:
    def test_exact_determinations(self):
        for name, value in EXACT_XI.items():
            row = xi_bounds(name)
            assert row.exact == value, name

    def test_open_intervals(self):
        row = xi_bounds("Sigma(2,3,12n-1)")
        assert (row.lower, row.upper, row.exact) == (-1, 0, None)
        row = xi_bounds("Sigma(2,3,23)")
        assert (row.lower, row.upper, row.exact) == (-1, 0, None)
        row = xi_bounds("Sigma(2,3,12n-5)")
        assert (row.lower, row.upper, row.exact) == (-2, -1, None)

    def test_upper_bound_routes(self):
        # orbifold-method and kappa-method uppers per family and orientation
        expected = {
            "Sigma(2,3,12n-1)": (0, 1),
            "-Sigma(2,3,12n-1)": (-1, -1),
            "Sigma(2,3,12n-5)": (-1, 0),
            "-Sigma(2,3,12n-5)": (0, 0),
            "Sigma(2,3,12n+1)": (0, -1),
            "-Sigma(2,3,12n+1)": (-1, -1),
            "Sigma(2,3,12n+5)": (1, 0),
            "-Sigma(2,3,12n+5)": (-2, -2),
        }
        for name, (orbifold, kappa) in expected.items():
            row = xi_bounds(name)
            assert row.upper_orbifold == orbifold, name
            assert row.upper_kappa == kappa, name

    def test_consistency_of_bounds(self):
        for row in xi_table_rows():
            if row.lower is not None:
                assert row.lower <= row.upper
            assert (row.exact is not None) == (row.lower == row.upper)

    def test_parse_manifold(self):
        assert parse_manifold("S3") == Manifold()
        assert parse_manifold("Sigma(2,3,11)") == Manifold(1, "12n-1", 11)
        assert parse_manifold("-Sigma(2,3,12n-5)") == Manifold(-1, "12n-5", None)
        with pytest.raises(UnknownManifoldError):
            parse_manifold("Sigma(2,3,9)")
        with pytest.raises(UnknownManifoldError):
            parse_manifold("lens(7,1)")
