from crgate.functions.validation import dicke_eigen_residual, engineered_ladder_residual, run_validation
from crgate.models.FeasibilityReport import CheckStatus
from crgate.models.RunConfig import RunConfig
from tests.params import six_qubit_params


def test_residuals() -> None:
    params = six_qubit_params()
    assert dicke_eigen_residual(5, params) < 1e-10
    assert engineered_ladder_residual(6, params) < 1e-10


def test_run_validation() -> None:
    results = {result.name: result for result in run_validation(RunConfig(n=3, theta=1.0))}
    for name in ("dicke_eigenstructure", "engineered_ladder", "unitarity", "t0_exactness", "linearity"):
        assert results[name].status == CheckStatus.passed, results[name].detail
    assert results["feasibility.dispersive"].status == CheckStatus.warn
    assert results["feasibility.drive_detuning"].status == CheckStatus.passed
    assert not any(result.failed for result in results.values())
