import time
import typer
from crgate.functions.config import device_params, load_config
from crgate.functions.gate import extract_gate
from crgate.functions.leakage import simulated_leakage
from crgate.functions.schedule import build_schedule


def main(sleep: int = 30, config: str = "./configs/six_qubit_pi4.toml") -> None:
    """
    1. Decorate functions that you want to track with `@profile`
    2. (a) Run `mprof run scripts/measure_memory.py` and then plot it with `mprof plot`.
    2. (b) Or, run `python -m memory_profiler scripts/measure_memory.py` for line-by-line analysis.
    """
    print("Sleeping so we can see initial memory usage in the plot.")
    time.sleep(sleep)

    run(config, sleep)


def run(config: str, sleep: int) -> None:
    run_config = load_config(config)
    params = device_params(run_config)

    report = extract_gate(build_schedule(run_config.n, params, run_config.tier, run_config.photon_cutoff))
    print(f"n={run_config.n} {run_config.tier.value}: max leakage {report.max_leakage:.6g}")

    print("Sleeping so we can differ it in the plot.")
    time.sleep(sleep)

    peak = simulated_leakage(run_config.n, params, run_config.leakage_samples, run_config.photon_cutoff)
    print(f"Peak |J,-J+2> population {peak:.6g}")


if __name__ == "__main__":
    typer.run(main)
