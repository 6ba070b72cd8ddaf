import numpy as np
import pytest

from gmqd.channels import ChannelKind, Locality, NoiseScenario
from gmqd.dynamics import (
    Coupling,
    SuddenDeathCheck,
    SweepAxis,
    SweepRow,
    SweepSpec,
    check_no_sudden_death,
    gamma_grid,
    run_sweep,
    time_grid,
)
from gmqd.errors import InvalidParametersError
from gmqd.measures import gmqd_closed_form

ALL_SCENARIOS = [
    NoiseScenario(kind, locality) for kind in ChannelKind for locality in Locality
]


def spec_for(kind, locality, grid, **kwargs):
    return SweepSpec(
        scenario=NoiseScenario(kind, locality), b=0.2, c=0.1, grid=grid, **kwargs
    )


class TestSweepSpecValidation:
    def test_empty_grid(self):
        with pytest.raises(InvalidParametersError):
            spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, ())

    def test_non_increasing_grid(self):
        with pytest.raises(InvalidParametersError):
            spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, (0.0, 0.5, 0.5))

    def test_gamma_domain(self):
        with pytest.raises(InvalidParametersError):
            spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, (0.0, 1.2))

    def test_negative_time(self):
        with pytest.raises(InvalidParametersError):
            spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, (-1.0, 0.0),
                     axis=SweepAxis.TIME)

    def test_independent_coupling_needs_multilocal(self):
        with pytest.raises(InvalidParametersError):
            spec_for(ChannelKind.DEPHASING, Locality.QUBIT_ONLY, (0.0, 0.5, 1.0),
                     coupling=Coupling.INDEPENDENT)


class TestRunSweep:
    def test_multilocal_dephasing_closed_column(self):
        rows = run_sweep(spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, (0.0, 0.5, 1.0)))
        assert [row.d_closed for row in rows] == pytest.approx([0.005, 0.00125, 0.0], abs=1e-15)
        assert all(row.t is None for row in rows)
        assert [row.gamma_a for row in rows] == [0.0, 0.5, 1.0]
        assert [row.gamma_b for row in rows] == [0.0, 0.5, 1.0]

    def test_qutrit_trit_flip_endpoint_stays_positive(self):
        rows = run_sweep(spec_for(ChannelKind.BIT_FLIP, Locality.QUTRIT_ONLY, (0.0, 1.0)))
        diff2 = 0.1 ** 2
        assert rows[0].d_closed == pytest.approx(diff2 / 2.0, abs=1e-15)
        assert rows[-1].d_closed == pytest.approx(diff2 / 12.0, abs=1e-15)
        assert rows[-1].d_numeric > 0.0
        assert all(row.gamma_a == 0.0 for row in rows)

    def test_degenerate_parameters_give_zero_columns(self):
        spec = SweepSpec(
            scenario=NoiseScenario(ChannelKind.DEPOLARIZING, Locality.MULTI_LOCAL),
            b=0.25, c=0.25, grid=(0.0, 0.5, 1.0),
        )
        for row in run_sweep(spec):
            assert row.d_closed == 0.0
            assert row.d_numeric == pytest.approx(0.0, abs=1e-12)

    def test_abs_err_column(self):
        rows = run_sweep(spec_for(ChannelKind.BIT_PHASE_FLIP, Locality.MULTI_LOCAL, gamma_grid(21)))
        for row in rows:
            assert row.abs_err == abs(row.d_numeric - row.d_closed)
            assert row.abs_err <= 1e-8

    def test_time_axis_rows(self):
        grid = time_grid(points=6, t_max=5.0)
        rows = run_sweep(spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, grid,
                                  axis=SweepAxis.TIME, rate_a=1.0, rate_b=2.0))
        assert [row.t for row in rows] == list(grid)
        # equal coupling uses rate_a on both sides
        for row in rows:
            assert row.gamma_a == pytest.approx(1.0 - np.exp(-row.t), abs=1e-15)
            assert row.gamma_b == row.gamma_a

    def test_time_axis_independent_rates(self):
        grid = time_grid(points=4, t_max=2.0)
        rows = run_sweep(spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, grid,
                                  axis=SweepAxis.TIME, coupling=Coupling.INDEPENDENT,
                                  rate_a=1.0, rate_b=3.0))
        for row in rows:
            assert row.gamma_b == pytest.approx(1.0 - np.exp(-3.0 * row.t), abs=1e-15)

    def test_independent_gamma_surface_order(self):
        grid = (0.0, 0.5, 1.0)
        rows = run_sweep(spec_for(ChannelKind.DEPHASING, Locality.MULTI_LOCAL, grid,
                                  coupling=Coupling.INDEPENDENT))
        assert len(rows) == 9
        assert [(row.gamma_a, row.gamma_b) for row in rows] == [
            (ga, gb) for ga in grid for gb in grid
        ]


class TestClosedFormMonotonicity:
    @pytest.mark.parametrize("scenario", ALL_SCENARIOS,
                             ids=lambda s: f"{s.kind.value}/{s.locality.value}")
    def test_non_increasing_along_equal_coupling(self, scenario):
        b, c = 0.2, 0.1
        values = []
        for g in gamma_grid(101):
            ga = g if scenario.locality is not Locality.QUTRIT_ONLY else 0.0
            gb = g if scenario.locality is not Locality.QUBIT_ONLY else 0.0
            values.append(gmqd_closed_form(NoiseScenario(scenario.kind, scenario.locality, ga, gb), b, c))
        assert all(later <= earlier + 1e-15 for earlier, later in zip(values, values[1:]))


class TestChannelEquivalenceClasses:
    def test_qubit_only_quadratic_kinds_coincide(self):
        kinds = (ChannelKind.PHASE_FLIP, ChannelKind.BIT_FLIP,
                 ChannelKind.BIT_PHASE_FLIP, ChannelKind.DEPOLARIZING)
        columns = []
        for kind in kinds:
            rows = run_sweep(spec_for(kind, Locality.QUBIT_ONLY, gamma_grid(11)))
            columns.append([row.d_numeric for row in rows])
        stacked = np.array(columns)
        spread = stacked.max(axis=0) - stacked.min(axis=0)
        assert spread.max() <= 1e-10

    def test_qutrit_only_pair_coincides(self):
        columns = []
        for kind in (ChannelKind.PHASE_FLIP, ChannelKind.DEPOLARIZING):
            rows = run_sweep(spec_for(kind, Locality.QUTRIT_ONLY, gamma_grid(11)))
            columns.append([row.d_numeric for row in rows])
        assert np.max(np.abs(np.array(columns[0]) - np.array(columns[1]))) <= 1e-10

    def test_qutrit_only_trit_flip_differs(self):
        flip = run_sweep(spec_for(ChannelKind.BIT_FLIP, Locality.QUTRIT_ONLY, (0.5,)))
        phase = run_sweep(spec_for(ChannelKind.PHASE_FLIP, Locality.QUTRIT_ONLY, (0.5,)))
        assert abs(flip[0].d_numeric - phase[0].d_numeric) > 1e-4


class TestSuddenDeathCheck:
    def test_multilocal_phase_flip_sweep_passes(self):
        rows = run_sweep(spec_for(ChannelKind.PHASE_FLIP, Locality.MULTI_LOCAL, gamma_grid(21)))
        outcome = check_no_sudden_death(rows)
        assert outcome == SuddenDeathCheck(applicable=True, passed=True, first_violation=None)

    def test_qutrit_trit_phase_flip_positive_even_at_endpoint(self):
        rows = run_sweep(spec_for(ChannelKind.BIT_PHASE_FLIP, Locality.QUTRIT_ONLY, gamma_grid(21)))
        outcome = check_no_sudden_death(rows)
        assert outcome.passed
        assert rows[-1].d_numeric > 1e-10

    def test_degenerate_sweep_not_applicable(self):
        spec = SweepSpec(
            scenario=NoiseScenario(ChannelKind.DEPHASING, Locality.MULTI_LOCAL),
            b=0.2, c=0.2, grid=(0.0, 0.5, 1.0),
        )
        outcome = check_no_sudden_death(run_sweep(spec))
        assert not outcome.applicable
        assert outcome.passed

    def test_detects_interior_zero(self):
        rows = [
            SweepRow(t=None, gamma_a=0.0, gamma_b=0.0, d_numeric=0.005, d_closed=0.005, abs_err=0.0),
            SweepRow(t=None, gamma_a=0.5, gamma_b=0.5, d_numeric=0.0, d_closed=0.001, abs_err=0.001),
            SweepRow(t=None, gamma_a=1.0, gamma_b=1.0, d_numeric=0.0, d_closed=0.0, abs_err=0.0),
        ]
        outcome = check_no_sudden_death(rows)
        assert not outcome.passed
        assert outcome.first_violation == 1
