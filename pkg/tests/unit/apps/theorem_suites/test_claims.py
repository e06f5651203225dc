import pytest

from decycle.apps.theorem_suites.claims import (
    CLAIMS, VERDICT_FAIL, VERDICT_PASS, VERDICT_REPORT_ONLY, ceil_div,
    equality_predicate, get_claim, grid_lower_bound, star_product_forest_number, torus_formula
)
from decycle.core.exceptions import UnknownSuiteError


class TestClosedForms(object):
    def test_ceil_div_rounds_up(self):
        # Run & check
        assert ceil_div(7, 3) == 3
        assert ceil_div(6, 3) == 2
        assert ceil_div(0, 5) == 0

    @pytest.mark.parametrize('n,n2,expected', [
        (3, 3, 4), (3, 4, 5), (3, 5, 6), (4, 4, 6), (4, 5, 8), (5, 5, 9),
    ])
    def test_torus_formula(self, n, n2, expected):
        # Run & check
        assert torus_formula(n, n2) == expected

    @pytest.mark.parametrize('n,n2,expected', [(2, 2, 1), (3, 3, 2), (4, 5, 5)])
    def test_grid_lower_bound(self, n, n2, expected):
        # Run & check
        assert grid_lower_bound(n, n2) == expected

    def test_star_product_forest_number(self):
        # Run & check
        assert star_product_forest_number(4, 5) == 17

    def test_equality_predicate(self):
        # Run & check
        assert equality_predicate(4, 4, True, False)
        assert equality_predicate(4, 4, False, True)
        assert not equality_predicate(4, 4, False, False)
        assert equality_predicate(3, 5, False, True)
        assert not equality_predicate(3, 5, True, False)


class TestClaims(object):
    def test_main_theorem_accepts_the_star_value(self):
        # Setup
        claim = get_claim('thm-main')
        # Run & check
        assert claim.verdict({'n': 4, 'n2': 5, 'nabla': 3, 'star_case': True}) == VERDICT_PASS
        assert claim.verdict({'n': 4, 'n2': 5, 'nabla': 4, 'star_case': True}) == VERDICT_FAIL
        assert claim.verdict({'n': 4, 'n2': 5, 'nabla': 4, 'star_case': False}) == VERDICT_PASS
        assert claim.verdict({'n': 4, 'n2': 5, 'nabla': 2, 'star_case': False}) == VERDICT_FAIL

    def test_equality_checks_both_directions(self):
        # Setup
        claim = get_claim('equality')
        base = {'n': 4, 'n2': 4, 'first_is_star': False, 'second_is_star': False}
        # Run & check
        assert claim.verdict(dict(base, nabla=4)) == VERDICT_PASS
        assert claim.verdict(dict(base, nabla=3)) == VERDICT_FAIL
        assert claim.verdict(dict(base, nabla=3, second_is_star=True)) == VERDICT_PASS

    def test_star_formula_needs_the_construction(self):
        # Setup
        claim = get_claim('star-formula')
        computed = {'n': 3, 'n_star': 4, 'nabla': 2, 'construction_value': 2}
        # Run & check
        assert claim.verdict(computed) == VERDICT_PASS
        assert claim.verdict(dict(computed, construction_value=3)) == VERDICT_FAIL

    def test_small_star_range(self):
        # Setup
        claim = get_claim('small-star')
        # Run & check
        assert claim.verdict({'n': 6, 'n_star': 3, 'nabla': 4}) == VERDICT_PASS
        assert claim.verdict({'n': 6, 'n_star': 3, 'nabla': 2}) == VERDICT_FAIL
        assert claim.verdict({'n': 6, 'n_star': 3, 'nabla': 6}) == VERDICT_FAIL

    def test_star_corollary(self):
        # Setup
        claim = get_claim('star-corollary')
        # Run & check
        assert claim.verdict({'n': 5, 'n_star': 4, 'nabla': 4}) == VERDICT_PASS
        assert claim.verdict({'n': 5, 'n_star': 4, 'nabla': 3}) == VERDICT_FAIL

    def test_prism_and_matching_bound(self):
        # Run & check
        assert get_claim('prism').verdict(
            {'nabla': 2, 'matching_number': 2, 'construction_value': 2}) == VERDICT_PASS
        assert get_claim('prism').verdict(
            {'nabla': 3, 'matching_number': 2, 'construction_value': 2}) == VERDICT_FAIL
        assert get_claim('matching-bound').verdict(
            {'nabla': 4, 'matching_number_1': 2, 'matching_number_2': 2}) == VERDICT_PASS
        assert get_claim('matching-bound').verdict(
            {'nabla': 3, 'matching_number_1': 2, 'matching_number_2': 2}) == VERDICT_FAIL

    def test_torus_grid_and_oracle(self):
        # Run & check
        assert get_claim('torus-formula').verdict({'n': 4, 'n2': 4, 'nabla': 6}) == VERDICT_PASS
        assert get_claim('torus-formula').verdict({'n': 4, 'n2': 4, 'nabla': 5}) == VERDICT_FAIL
        assert get_claim('grid-bounds').verdict({'n': 3, 'n2': 3, 'nabla': 3}) == VERDICT_PASS
        assert get_claim('grid-bounds').verdict({'n': 3, 'n2': 3, 'nabla': 4}) == VERDICT_FAIL
        assert get_claim('oracle-agreement').verdict({'solver': 2, 'oracle': 2}) == VERDICT_PASS
        assert get_claim('oracle-agreement').verdict({'solver': 2, 'oracle': 3}) == VERDICT_FAIL

    def test_open_conjecture_never_fails(self):
        # Setup
        claim = get_claim('open-conjecture')
        # Run & check
        assert claim.report_only
        assert claim.verdict({'violation': True}) == VERDICT_REPORT_ONLY
        assert claim.verdict({'violation': False}) == VERDICT_REPORT_ONLY

    def test_unknown_claims_are_reported(self):
        # Run & check
        with pytest.raises(UnknownSuiteError):
            get_claim('no-such-claim')

    def test_lists_every_claim(self):
        # Run & check
        assert len(CLAIMS) == 11
        assert all(claim.claim_id == key for key, claim in CLAIMS.items())
