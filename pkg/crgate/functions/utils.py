import cmath
from typing import NoReturn, Type, TypeVar, Optional

T = TypeVar("T")


def check_not_none(
    value: Optional[T],
    msg: str = "Value shouldn't be None.",
    exp: Type[ValueError] = ValueError,
) -> T:
    """
    Utility to remove optionality from a variable.

    Useful for cases like this:

    ```
    estimates = leakage_estimates(n, params)
    bound = check_not_none(estimates.p2_bound)  # <-- No more Optional[float], so type checker will be happy.
    ```
    """
    if value is None:
        should_not_happen(msg=msg, exp=exp)
    return value


def should_not_happen(
    msg: str = "Should not happen.", exp: Type[ValueError] = ValueError
) -> NoReturn:
    """
    Utility function to raise an exception with a message.

    Handy for exhaustive dispatch over an enumeration:

    ```
    return (
        h_two_level(...) if tier == Tier.T0
        else h_engineered(...) if tier == Tier.T1
        else should_not_happen(f"Unknown tier {tier}")
    )
    ```
    """
    raise exp(msg)


def format_complex(value: complex, digits: int = 6) -> str:
    """`a+bi` with `digits` significant digits per part."""
    return f"{value.real:.{digits}g}{value.imag:+.{digits}g}i"


def wrapped_phase(value: complex) -> float:
    """Argument in (-pi, pi], zero for a vanishing amplitude."""
    return cmath.phase(value) if abs(value) > 0 else 0.0
