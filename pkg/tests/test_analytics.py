import math

import mpmath as mp
import numpy as np
import pytest

from pncsim import analytics
from pncsim.schemes import SchemeKind

from oracles import pnc_error_quadrature, q_ref

DB_GRID = np.linspace(0.0, 14.0, 29)
GAMMA_GRID = 10 ** (DB_GRID / 10)


class TestQFunction:
    def test_at_zero(self):
        assert analytics.q_function(0.0) == 0.5

    def test_symmetry_and_decay(self):
        xs = np.linspace(-6, 6, 25)
        q = analytics.q_function(xs)
        assert np.allclose(q + analytics.q_function(-xs), 1.0, rtol=0, atol=1e-15)
        assert np.all(np.diff(q) < 0)
        assert analytics.q_function(40.0) >= 0.0

    def test_frozen_reference_value(self):
        # independent numeric oracle, >= 10 digits
        assert analytics.q_function(1.0) == pytest.approx(0.1586552539314571, rel=1e-12)

    def test_accuracy_against_mpmath(self):
        # linear-domain values down to where double precision can represent them
        for x in np.linspace(0.0, 37.0, 38):
            expected = float(q_ref(float(x)))
            assert analytics.q_function(float(x)) == pytest.approx(expected, rel=1e-11)

    def test_log_domain_accuracy(self):
        for x in (1.0, 5.0, 20.0, 40.0, 100.0, 200.0):
            with mp.workdps(60):
                expected = float(mp.log(q_ref(x, dps=60)))
            assert analytics.log_q(x) == pytest.approx(expected, rel=1e-12)


class TestPncErrorProbability:
    @pytest.mark.parametrize("gamma", [0.5, 2.0, 10.0])
    def test_matches_quadrature(self, gamma):
        expected = float(pnc_error_quadrature(gamma))
        assert analytics.p_pnc_exact(gamma) == pytest.approx(expected, rel=1e-8)

    def test_log_and_linear_agree(self):
        p_lin = analytics.p_pnc_exact(GAMMA_GRID)
        p_log = np.exp(analytics.log_p_pnc_exact(GAMMA_GRID))
        assert np.allclose(p_lin, p_log, rtol=1e-12)

    def test_stability_over_wide_range(self):
        gammas = 10 ** np.linspace(-3, 4, 71)
        p = analytics.p_pnc_exact(gammas)
        assert np.all(np.isfinite(p))
        assert np.all((p >= 0) & (p <= 1))
        assert np.all(np.diff(p) <= 0)
        # strictly decreasing wherever the value has not underflowed ...
        live = p > 1e-300
        assert np.all(np.diff(p[live]) < 0)
        # ... and the log form stays strictly monotone over the whole range
        logp = analytics.log_p_pnc_exact(gammas)
        assert np.all(np.isfinite(logp))
        assert np.all(np.diff(logp) < 0)

    def test_high_snr_ratio_to_asymptote(self):
        # the quoted 3/2 coefficient overstates the true limit: the threshold
        # offset contributes a constant ln(2)/2 shift in the Q arguments, so
        # p_pnc / ((3/2) Q) tends to sqrt(2)/1.5 ~ 0.9428, not 1
        limit = math.sqrt(2) / 1.5
        for gamma, tol in ((1e4, 3e-6), (1e6, 1e-7)):
            log_ratio = analytics.log_p_pnc_exact(gamma) - math.log(
                1.5
            ) - analytics.log_q(math.sqrt(2 * gamma))
            assert math.exp(log_ratio) == pytest.approx(limit, abs=tol)
        # still comfortably inside the documented [0.9, 1.1] asymptotic band
        assert 0.9 <= limit <= 1.1


class TestBlerExact:
    def test_product_form_direct(self):
        # cross-check the guts against a direct evaluation at moderate SNR
        for gamma in (0.5, 2.0, 6.31):
            p = analytics.p_pnc_exact(gamma)
            q = analytics.q_function(math.sqrt(2 * gamma))
            direct = 1 - (1 - p) ** 10 * (1 - q) ** 10
            assert analytics.bler_scpnc_exact(gamma, 15, 5) == pytest.approx(direct, rel=1e-12)
            direct_rc = 1 - (1 - p) ** 15 * (1 - q) ** 10
            assert analytics.bler_rcpnc_exact(gamma, 15, 5) == pytest.approx(direct_rc, rel=1e-12)
            direct_cv = 1 - (1 - p) ** 15 * (1 - q) ** 15
            assert analytics.bler_conv_exact(gamma, 15) == pytest.approx(direct_cv, rel=1e-12)

    def test_vanishes_at_high_snr(self):
        assert analytics.bler_scpnc_exact(1e6, 15, 5) < 1e-300 or analytics.bler_scpnc_exact(1e6, 15, 5) == 0.0
        assert analytics.log_bler_scpnc_exact(1e6, 15, 5) < -1000

    def test_range_and_monotonicity(self):
        for n, k in ((15, 5), (15, 7), (15, 11)):
            for fn in (
                lambda g: analytics.bler_scpnc_exact(g, n, k),
                lambda g: analytics.bler_rcpnc_exact(g, n, k),
                lambda g: analytics.bler_conv_exact(g, n),
            ):
                curve = fn(GAMMA_GRID)
                assert np.all((curve >= 0) & (curve <= 1))
                assert np.all(np.diff(curve) < 0)

    def test_scheme_ordering(self):
        for n, k in ((15, 5), (15, 7), (15, 11)):
            s = analytics.bler_scpnc_exact(GAMMA_GRID, n, k)
            r = analytics.bler_rcpnc_exact(GAMMA_GRID, n, k)
            c = analytics.bler_conv_exact(GAMMA_GRID, n)
            assert np.all(s <= r)
            assert np.all(r <= c)

    def test_log_agrees_with_linear(self):
        lin = analytics.bler_rcpnc_exact(GAMMA_GRID, 15, 7)
        log = np.exp(analytics.log_bler_rcpnc_exact(GAMMA_GRID, 15, 7))
        assert np.allclose(lin, log, rtol=1e-10)

    def test_validation(self):
        with pytest.raises(ValueError):
            analytics.bler_scpnc_exact(1.0, 15, 15)
        with pytest.raises(ValueError):
            analytics.bler_rcpnc_exact(1.0, 15, 0)
        with pytest.raises(ValueError):
            analytics.bler_conv_exact(1.0, 0)


class TestBlerAsymptotic:
    def test_formula_instantiation(self):
        gamma = 10.0
        q = analytics.q_function(math.sqrt(20.0))
        assert analytics.bler_scpnc_asym(gamma, 15, 5) == 25 * q
        assert analytics.bler_rcpnc_asym(gamma, 15, 5) == 0.5 * 65 * q
        assert analytics.bler_conv_asym(gamma, 15) == 0.5 * 75 * q

    def test_scales_linearly_in_syndrome_length(self):
        gamma = 12.0
        per_m = {k: analytics.bler_scpnc_asym(gamma, 15, k) / (15 - k) for k in (5, 7, 11)}
        values = list(per_m.values())
        assert values[0] == pytest.approx(values[1], rel=1e-14)
        assert values[0] == pytest.approx(values[2], rel=1e-14)

    def test_accuracy_band_at_medium_high_snr(self):
        # asymptotic / exact within [0.9, 1.1] from 12 dB upward, all schemes/codes
        for db in (12.0, 13.0, 14.0, 20.0, 30.0):
            gamma = 10 ** (db / 10)
            for n, k in ((15, 5), (15, 7), (15, 11)):
                for kind in SchemeKind:
                    log_exact = analytics.log_bler_exact(kind, gamma, n, k)
                    log_asym = analytics.log_bler_asym(kind, gamma, n, k)
                    ratio = math.exp(log_asym - log_exact)
                    assert 0.9 <= ratio <= 1.1

    def test_log_asym_matches_linear(self):
        for kind in SchemeKind:
            lin = analytics.bler_asym(kind, GAMMA_GRID, 15, 7)
            log = np.exp(analytics.log_bler_asym(kind, GAMMA_GRID, 15, 7))
            assert np.allclose(lin, log, rtol=1e-12)

    def test_ratio_at_12db_within_ten_percent(self):
        gamma = 10 ** 1.2
        exact = analytics.bler_scpnc_exact(gamma, 15, 5)
        asym = analytics.bler_scpnc_asym(gamma, 15, 5)
        assert abs(asym / exact - 1) < 0.10


class TestGains:
    def test_published_values(self):
        assert analytics.gain_scpnc(15, 5) == 1.5
        assert analytics.gain_rcpnc(15, 5) == pytest.approx(75 / 65, rel=1e-15)
        assert analytics.gain_scpnc(15, 11) == 3.75
        assert analytics.gain_rcpnc(15, 11) == pytest.approx(75 / 53, rel=1e-15)

    def test_exact_ratio_reaches_gain_at_deep_snr(self):
        # gamma = 1e3 (30 dB): ratios of the exact expressions, via logs
        gamma = 1e3
        conv = analytics.log_bler_conv_exact(gamma, 15)
        scpnc = analytics.log_bler_scpnc_exact(gamma, 15, 5)
        rcpnc = analytics.log_bler_rcpnc_exact(gamma, 15, 5)
        assert math.exp(conv - scpnc) == pytest.approx(analytics.gain_scpnc(15, 5), rel=0.01)
        assert math.exp(conv - rcpnc) == pytest.approx(analytics.gain_rcpnc(15, 5), rel=0.01)

    def test_conv_to_scpnc_ratio_at_12db(self):
        # already essentially n/(n-k) at 12 dB
        gamma = 10 ** 1.2
        ratio = analytics.bler_conv_exact(gamma, 15) / analytics.bler_scpnc_exact(gamma, 15, 5)
        assert ratio == pytest.approx(1.5, rel=1e-3)

    def test_validation(self):
        with pytest.raises(ValueError):
            analytics.gain_scpnc(15, 0)


class TestDispatch:
    def test_dispatch_matches_direct(self):
        gamma = 5.0
        assert analytics.bler_exact(SchemeKind.SCPNC, gamma, 15, 5) == analytics.bler_scpnc_exact(gamma, 15, 5)
        assert analytics.bler_exact(SchemeKind.RCPNC, gamma, 15, 5) == analytics.bler_rcpnc_exact(gamma, 15, 5)
        assert analytics.bler_exact(SchemeKind.CONVENTIONAL, gamma, 15, 5) == analytics.bler_conv_exact(gamma, 15)
        assert analytics.bler_asym(SchemeKind.RCPNC, gamma, 15, 5) == analytics.bler_rcpnc_asym(gamma, 15, 5)
