import platform
import time
from pathlib import Path
import numpy as np
import pandas as pd
import scipy
from tabulate import tabulate
from crgate import __version__
from crgate.functions.dicke import dicke_state
from crgate.functions.estimates import PROTOCOL_STEPS, cavity_lifetime, coherence_margins, decomposition_step_count, total_time
from crgate.functions.utils import format_complex
from crgate.models.CheckResult import CheckResult
from crgate.models.DeviceParams import DeviceParams
from crgate.models.FeasibilityReport import FeasibilityReport
from crgate.models.GateReport import GateReport
from crgate.models.KetState import KetState
from crgate.models.LeakageEstimates import LeakageEstimates
from crgate.models.ProtocolStep import STEP_LABELS

AMPLITUDE_CUTOFF = 1e-6
COMPARISON_SIZES = (3, 4, 5, 6, 7, 8)


def describe_state(state: KetState, max_terms: int = 8) -> str:
    """
    Writes a state as Dicke rungs of the controls times target level times photon number,
    e.g. `(-1+0i)|J,-J+0>|0>|1c>`. Population outside the symmetric sector is listed by basis label.
    """
    space = state.space
    terms: list[str] = []
    remainder = state.amplitudes.copy()
    for k in range(space.n_systems):
        for target_level in range(3):
            for photons in range(space.photon_cutoff):
                rung = dicke_state(space, k, target_level=target_level, photons=photons).amplitudes
                amplitude = complex(np.vdot(rung, state.amplitudes))
                if abs(amplitude) > AMPLITUDE_CUTOFF:
                    terms.append(f"({format_complex(amplitude)})|J,-J+{k}>|{target_level}>|{photons}c>")
                    remainder = remainder - amplitude * rung

    outside = np.flatnonzero(np.abs(remainder) > AMPLITUDE_CUTOFF)
    for index in outside[:max_terms]:
        terms.append(f"({format_complex(complex(remainder[index]))})|{space.label(int(index))}>")
    if len(outside) > max_terms:
        terms.append(f"... {len(outside) - max_terms} more")
    return " + ".join(terms) if terms else "0"


def trace_table(label: str, trace: list[KetState]) -> str:
    rows = [(f"step ({step})", describe_state(state)) for step, state in zip(STEP_LABELS, trace)]
    return f"Input |{label}>\n" + tabulate(rows, headers=["after", "state"])


def gate_report_frame(report: GateReport) -> pd.DataFrame:
    """One row per (input, output) entry of the realized gate, full precision."""
    rows = []
    for j, input_label in enumerate(report.input_labels):
        for i, output_label in enumerate(report.input_labels):
            rows.append(
                {
                    "input": input_label,
                    "output": output_label,
                    "realized_re": report.realized_gate[i, j].real,
                    "realized_im": report.realized_gate[i, j].imag,
                    "ideal_re": report.ideal_gate[i, j].real,
                    "ideal_im": report.ideal_gate[i, j].imag,
                    "fidelity": report.per_input_fidelity[input_label],
                    "leakage": report.leakage[input_label],
                    "cavity_population": report.cavity_population[input_label],
                    "phase": report.phase_table[input_label],
                }
            )
    return pd.DataFrame(rows)


def gate_summary(report: GateReport, estimates: LeakageEstimates, feasibility: FeasibilityReport) -> str:
    rows = [
        ("tier", report.tier.value),
        ("n", report.n),
        ("theta", f"{report.theta:.6g}"),
        ("total duration [s]", f"{report.total_duration:.6g}"),
        ("min per-input fidelity", f"{report.min_fidelity:.6g}"),
        ("max leakage", f"{report.max_leakage:.6g} ({report.worst_input})"),
        ("max |realized - ideal|", f"{report.max_deviation:.6g}"),
        ("process fidelity", f"{report.process_fidelity:.6g}"),
        ("average gate fidelity", f"{report.average_gate_fidelity:.6g}"),
        ("p1 estimate", "n/a" if estimates.p1 is None else f"{estimates.p1:.6g}"),
        ("p2 bound", "n/a" if estimates.p2_bound is None else f"{estimates.p2_bound:.6g}"),
    ]
    per_input = [
        (
            label,
            f"{report.per_input_fidelity[label]:.6g}",
            f"{report.leakage[label]:.6g}",
            f"{report.cavity_population[label]:.6g}",
            f"{report.phase_table[label]:.6g}",
        )
        for label in report.input_labels
    ]
    conditions = [(c.name, f"{c.value:.6g}", c.status.value, c.detail) for c in feasibility.conditions]
    return "\n\n".join(
        [
            tabulate(rows, headers=["quantity", "value"]),
            tabulate(per_input, headers=["input", "fidelity", "leakage", "cavity", "phase"]),
            tabulate(conditions, headers=["condition", "value", "status", "detail"]),
        ]
    )


def timing_summary(n: int, params: DeviceParams) -> str:
    timing = total_time(n, params)
    breakdown = [(name, f"{value:.6g}", f"{value * 1e6:.6g}") for name, value in timing.as_rows()]
    margins = [("kappa^-1", f"{cavity_lifetime(params):.6g}", f"{cavity_lifetime(params) * 1e6:.6g}")]
    ratios = [(name, f"{value:.6g}") for name, value in coherence_margins(n, params).items()]
    comparison = [(size, decomposition_step_count(size), PROTOCOL_STEPS) for size in sorted({*COMPARISON_SIZES, max(n, 3)})]
    return "\n\n".join(
        [
            f"Operation time for n={n}\n" + tabulate(breakdown + margins, headers=["term", "seconds", "microseconds"]),
            tabulate(ratios, headers=["tau / lifetime", "ratio"]),
            tabulate(comparison, headers=["n", "two-qubit gates (2^n - 3)", "protocol steps"]),
        ]
    )


def validation_summary(results: list[CheckResult]) -> str:
    rows = [
        (r.name, r.status.value, "" if r.value is None else f"{r.value:.6g}", "" if r.limit is None else f"{r.limit:.6g}", r.detail)
        for r in results
    ]
    return tabulate(rows, headers=["check", "status", "value", "limit", "detail"])


def write_text(text: str, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file:
        file.write(text if text.endswith("\n") else text + "\n")


def write_csv(frame: pd.DataFrame, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)


def write_meta(out_dir: Path, command: str, config_path: str | None, wall_time: float) -> None:
    """Run metadata; the only output carrying a timestamp."""
    lines = [
        f"crgate {__version__}",
        f"python {platform.python_version()}",
        f"numpy {np.__version__}",
        f"scipy {scipy.__version__}",
        f"pandas {pd.__version__}",
        f"command {command}",
        f"config {config_path or '<defaults>'}",
        f"finished {time.strftime('%Y-%m-%dT%H:%M:%S')}",
        f"wall_time_s {wall_time:.6g}",
    ]
    write_text("\n".join(lines), out_dir / "meta.txt")
