import numpy as np
import pytest

from src.constants.app_constants import AnalysisConst
from src.services.analysis_services.models.de_params import DEParams
from src.services.analysis_services.services.density_evolution import (
    de_curve,
    de_limit,
    de_step,
    de_threshold,
    de_trajectory,
)

QUADRATIC = (0.0, 0.0, 1.0)
QUINTIC = (0.0, 0.0, 0.0, 0.0, 0.0, 1.0)


def regular(p_e: float, p_c: float = 1.0) -> DEParams:
    return DEParams(edge_lambda=QUADRATIC, edge_rho=QUINTIC, p_c=p_c, p_e=p_e)


class TestDeStep:
    def test_value(self):
        assert de_step(0.3, regular(0.3)) == pytest.approx(0.3 * (1 - 0.7**5) ** 2, rel=1e-12)
        assert de_step(0.3, regular(0.3)) == pytest.approx(0.20763, abs=1e-5)

    def test_no_correction(self):
        assert de_step(0.1, regular(0.4, p_c=0.0)) == pytest.approx(0.4)

    def test_zero_erasures(self):
        assert de_step(0.0, regular(0.4)) == 0.0

    def test_monotone_in_z(self):
        params = regular(0.45, p_c=0.8)
        values = [de_step(z, params) for z in np.linspace(0, 1, 101)]
        assert all(b >= a for a, b in zip(values, values[1:], strict=False))


class TestDeThreshold:
    def test_regular_ensemble(self):
        assert de_threshold(QUADRATIC, QUINTIC, 1.0) == pytest.approx(0.4294, abs=5e-4)

    def test_no_correction(self):
        assert de_threshold(QUADRATIC, QUINTIC, 0.0) <= AnalysisConst.THRESHOLD_TOL

    def test_linear_recursion_reaches_one(self):
        assert de_threshold((0.0, 1.0), (0.0, 1.0), 1.0) == 1.0

    def test_weaker_correction_lowers_threshold(self):
        assert de_threshold(QUADRATIC, QUINTIC, 0.8) < de_threshold(QUADRATIC, QUINTIC, 1.0)


class TestDeTrajectory:
    def test_below_threshold_goes_to_zero(self):
        trajectory = de_trajectory(regular(0.3))
        assert trajectory[0] == 0.3  # noqa: PLR2004
        assert np.all(np.diff(trajectory) <= 0)
        assert trajectory[-1] < AnalysisConst.LIMIT_ZERO

    def test_zero_noise(self):
        assert not de_trajectory(regular(0.0)).any()

    def test_above_threshold_stalls(self):
        assert de_limit(regular(0.5)) > 0.1  # noqa: PLR2004

    def test_step_cap(self):
        assert len(de_trajectory(regular(0.5), max_steps=3)) == 4  # noqa: PLR2004
        with pytest.raises(ValueError, match="max_steps"):
            de_trajectory(regular(0.3), max_steps=0)


class TestDeCurve:
    def test_rows(self):
        rows = de_curve(QUADRATIC, QUINTIC, 1.0, [0.3, 0.5])
        assert [row["success"] for row in rows] == [1, 0]
        assert rows[0]["p_e"] == 0.3  # noqa: PLR2004
